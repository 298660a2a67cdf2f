from .diff_form import Basis, DiffForm, basis_key, basis_name, d, differential, ext_d, section, sort_basis
from .eds import (
    GeneratorCheck,
    build_eds,
    constraint_scalars,
    further_constraint,
    integrability_condition,
    pde_bindings,
    sectioned_equations,
    verify_eds_closed,
)
from .ideal import EdsGenerator, EdsIdeal, RewriteRule, rule_from_generator
from .rewrite import contract_constraint, omega_rules, reduce_mod_ideal, volume_form

__all__ = [
    "Basis",
    "DiffForm",
    "basis_key",
    "basis_name",
    "d",
    "differential",
    "ext_d",
    "section",
    "sort_basis",
    "GeneratorCheck",
    "build_eds",
    "constraint_scalars",
    "further_constraint",
    "integrability_condition",
    "pde_bindings",
    "sectioned_equations",
    "verify_eds_closed",
    "EdsGenerator",
    "EdsIdeal",
    "RewriteRule",
    "rule_from_generator",
    "contract_constraint",
    "omega_rules",
    "reduce_mod_ideal",
    "volume_form",
]
