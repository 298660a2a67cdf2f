from .closure import (
    ClosurePass,
    ClosureReport,
    apply_closing_map,
    jacobi_closure,
    jacobi_combination,
    jacobi_defects,
    substitute_generators,
)
from .homomorphism import HomomorphismReport, MatrixRep, ResidualEntry, verify_homomorphism
from .isomorphism import find_relabeling_isomorphism, relabel
from .lie_element import LieElement, Term, X, bracket, term_key, term_str
from .open_algebra import CLOSURE_DERIVED, DECLARED, NAMED_BY_BRACKET, Generator, OpenAlgebra, normalize
from .sl2 import (
    TWO_I_LAMBDA,
    closing_map,
    epsilon_table,
    frame_pair_names,
    reduction_algebra,
    sl2_quotient,
    structure_e,
)

__all__ = [
    "ClosurePass",
    "ClosureReport",
    "apply_closing_map",
    "jacobi_closure",
    "jacobi_combination",
    "jacobi_defects",
    "substitute_generators",
    "HomomorphismReport",
    "MatrixRep",
    "ResidualEntry",
    "verify_homomorphism",
    "find_relabeling_isomorphism",
    "relabel",
    "LieElement",
    "Term",
    "X",
    "bracket",
    "term_key",
    "term_str",
    "CLOSURE_DERIVED",
    "DECLARED",
    "NAMED_BY_BRACKET",
    "Generator",
    "OpenAlgebra",
    "normalize",
    "TWO_I_LAMBDA",
    "closing_map",
    "epsilon_table",
    "frame_pair_names",
    "reduction_algebra",
    "sl2_quotient",
    "structure_e",
]
