from __future__ import annotations

import logging
import sys
from dataclasses import dataclass
from functools import wraps
from pathlib import Path
from typing import Optional, Sequence

import click

from prolongation_kit.cli.dsl import load_algebra, parse_scalar
from prolongation_kit.cli.report import Report, Section, emit_report
from prolongation_kit.errors.error_handlers import handle_command_errors
from prolongation_kit.errors.exceptions import InconsistentRelationError, VerificationFailure
from prolongation_kit.exterior.diff_form import DiffForm
from prolongation_kit.exterior.eds import build_eds, further_constraint, sectioned_equations, verify_eds_closed
from prolongation_kit.liealg.closure import jacobi_closure, jacobi_defects
from prolongation_kit.liealg.homomorphism import verify_homomorphism
from prolongation_kit.liealg.isomorphism import find_relabeling_isomorphism
from prolongation_kit.liealg.sl2 import closing_map, reduction_algebra, sl2_quotient, structure_e
from prolongation_kit.prolong.constr import check_constr_relation
from prolongation_kit.prolong.determining import derive_determining_equations
from prolongation_kit.prolong.extraction import extract, reported_in_algebra
from prolongation_kit.prolong.solutions import build_reduction, general_solution
from prolongation_kit.prolong.tower import build_ansatz
from prolongation_kit.scalar.params import ModelParams
from prolongation_kit.settings.constants import EXIT_OK, EXIT_USAGE, InitKind, Reduction, ReportFormat, Status
from prolongation_kit.settings.workbench_settings import WorkbenchSettings
from prolongation_kit.sim.convergence import convergence_study
from prolongation_kit.sim.integrator import integrate
from prolongation_kit.sim.residuals import constraint_monitor, measure_residuals, pde_monitors
from prolongation_kit.sim.snapshots import write_snapshot
from prolongation_kit.sim.spin_field import init_field
from prolongation_kit.spectral.connection import solve_connection
from prolongation_kit.spectral.constraint import verify_fundamental_constraint
from prolongation_kit.spectral.export import export_spectral_problem
from prolongation_kit.spectral.matrix2 import Matrix2
from prolongation_kit.spectral.pauli import instantiate_tower, pauli_rep

logger = logging.getLogger(__name__)

CONSTRAINT_DRIFT = 1e-12


@dataclass
class CommandState:
    settings: Optional[WorkbenchSettings] = None
    log_level: Optional[str] = None
    out: Optional[Path] = None
    fmt: ReportFormat = ReportFormat.TEXT
    report: Optional[Report] = None


def _status(passed: bool) -> Status:
    return Status.PASS if passed else Status.FAIL


def _number(value: float) -> str:
    return f"{value:.6e}"


def _form_text(form: DiffForm) -> str:
    return "0" if form.is_zero() else str(form)


def shared_options(func):
    @click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None)
    @click.option("--gamma2", type=str, default=None)
    @click.option("--seed", type=int, default=None)
    @click.option("--out", type=click.Path(dir_okay=False), default=None)
    @click.option("--format", "fmt", type=click.Choice([f.value for f in ReportFormat]), default=None)
    @click.pass_obj
    @wraps(func)
    def wrapper(state: CommandState, config_path, gamma2, seed, out, fmt, **kwargs):
        overrides = {"gamma2": gamma2, "seed": seed, "log_level": state.log_level}
        overrides.update({k: v for k, v in kwargs.items() if k in WorkbenchSettings.model_fields})
        if config_path is not None or state.settings is None:
            settings = WorkbenchSettings.from_file(config_path, **overrides)
        else:
            base = state.settings.model_dump()
            base.update({k: v for k, v in overrides.items() if v is not None})
            settings = WorkbenchSettings(**base)
        configure_logging(settings.log_level)
        state.out = Path(out) if out else None
        state.fmt = ReportFormat(fmt) if fmt else ReportFormat.TEXT
        report = Report(config=settings.echo())
        return func(settings, report, **kwargs)

    return wrapper


def configure_logging(level: str) -> None:
    logging.basicConfig(format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger().setLevel(level.upper())


@click.group(name="prolong")
@click.option("--log-level", default=None, help="Overrides log_level from settings.")
@click.pass_obj
def cli(state: CommandState, log_level: Optional[str]) -> None:
    """Prolongation workbench for the (2+1)-dimensional spin model."""
    state.log_level = log_level


@cli.command("eds-verify")
@shared_options
def eds_verify(settings: WorkbenchSettings, report: Report) -> Report:
    report.command = "eds-verify"
    ideal = build_eds(ModelParams(settings.gamma2))
    generators = report.section("generators", Status.PASS)
    for check in verify_eds_closed(ideal):
        value = f"section={check.section_residual} closure={_form_text(check.closure_residual)}"
        if check.note:
            value += f" ({check.note})"
        generators.add(check.name, value, _status(check.passed))
    sectioned = report.section("sectioned equations")
    for name, expr in sectioned_equations(ideal).items():
        sectioned.add(name, f"{expr} = 0")
    return report


@cli.command("derive")
@click.option("--k-choice", "k_choice", type=click.Choice(["bracket", "generic"]), default=None)
@click.option("--bracket-convention", "bracket_convention", type=click.Choice(["GF", "FG"]), default=None)
@shared_options
def derive(settings: WorkbenchSettings, report: Report, **_) -> Report:
    report.command = "derive"
    params = ModelParams(settings.gamma2, settings.pseudopotential_dim)
    ansatz, _forms = build_ansatz(params)
    ideal = build_eds(params)
    equations = report.section("determining equations")
    for eq in derive_determining_equations(ansatz, ideal):
        equations.add(f"{eq.label} {eq.origin}", eq)
    further = report.section("further constraint")
    for k, form in enumerate(further_constraint(ansatz, ideal), start=1):
        further.lines(f"Omega{k}", _form_text(form))

    tower = general_solution(ModelParams(settings.gamma2), settings.k_choice)
    solution = report.section("solution form", Status.PASS)
    try:
        extraction = extract(tower, settings.bracket_convention)
    except InconsistentRelationError as exc:
        solution.add("witness", exc.witness, Status.FAIL)
        solution.add("relation", exc.relation, Status.FAIL)
        return report
    solution.add("emitted relations", len(extraction.check.relations), Status.PASS)
    solution.add("deferred equations", len(extraction.check.deferred))
    for text in extraction.imposed:
        solution.add("imposed", text)
    report.section("open algebra").lines("table", extraction.algebra.dump())
    reported = report.section("reported relations")
    for relation in extraction.reported:
        reported.add(relation.monomial_text, f"{relation.element} = 0")
    for value in reported_in_algebra(extraction):
        reported.add("in table", f"{value} = 0")
    return report


@cli.command("algebra-close")
@click.option("--input", "input_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--base", type=click.Choice(["structure", "reduction"]), default="structure", show_default=True)
@click.option("--reduction", type=click.Choice([r.value for r in Reduction]), default=None)
@click.option("--depth", type=int, default=3, show_default=True)
@shared_options
def algebra_close(settings: WorkbenchSettings, report: Report, input_path, base, depth, **_) -> Report:
    report.command = "algebra-close"
    if input_path is not None:
        algebra, _closing = load_algebra(input_path)
    elif base == "reduction":
        algebra = reduction_algebra(settings.reduction)
    else:
        algebra = structure_e()
    closed, closure = jacobi_closure(algebra, depth)
    summary = report.section("closure")
    summary.add("generator counts", closure.generator_counts)
    summary.add("fixpoint", closure.reached_fixpoint)
    for closure_pass in closure.passes:
        section = report.section(f"pass {closure_pass.index} (degree {closure_pass.target_degree})")
        for text in closure_pass.new_relations:
            section.add("relation", text)
        for generator in closure_pass.new_generators:
            section.add(generator.name, f"[X{generator.pair[0]},X{generator.pair[1]}]")
    report.section("algebra").lines("table", closed.dump())
    return report


@cli.command("close-sl2")
@click.option("--reduction", type=click.Choice([r.value for r in Reduction]), default=None)
@shared_options
def close_sl2(settings: WorkbenchSettings, report: Report, **_) -> Report:
    report.command = "close-sl2"
    which = settings.reduction
    closing = report.section("closing map")
    for target, image in closing_map(which).items():
        closing.add(f"X{target}", image)
    quotient = sl2_quotient(which)
    report.section("quotient").lines("table", quotient.dump())
    defects = jacobi_defects(quotient)
    jacobi = report.section("jacobi", _status(not defects))
    for triple, value in defects:
        jacobi.add(str(triple), value, Status.FAIL)
    homomorphism = report.section("homomorphism", Status.PASS)
    for entry in verify_homomorphism(quotient, pauli_rep(which)).entries:
        homomorphism.add(entry.label, entry.residual, _status(entry.passed))
    _equivalence(report.section("tower equivalence", Status.PASS))
    return report


def _equivalence(section: Section) -> None:
    reference = reduction_algebra(Reduction.I)
    for other in (Reduction.II, Reduction.III):
        mapping = find_relabeling_isomorphism(reference, reduction_algebra(other))
        section.add(f"(i) ~ ({other.value})", mapping, _status(mapping is not None))
    mapping = find_relabeling_isomorphism(sl2_quotient(Reduction.I), sl2_quotient("alternative"))
    section.add("alternative ~ (i)", mapping, _status(mapping is not None))


@cli.command("spectral")
@click.option("--reduction", type=click.Choice([r.value for r in Reduction]), default=None)
@click.option("--a", "a_text", default="0", show_default=True)
@click.option("--b", "b_text", default="1", show_default=True)
@click.option("--section-sign", "section_sign", type=click.Choice(["minus", "plus"]), default=None)
@click.option("--bracket-convention", "bracket_convention", type=click.Choice(["GF", "FG"]), default=None)
@click.option("--bbar-interpretation", "bbar_interpretation", type=click.Choice(["inverse", "identity"]), default=None)
@shared_options
def spectral(settings: WorkbenchSettings, report: Report, a_text, b_text, **_) -> Report:
    report.command = "spectral"
    params = ModelParams(settings.gamma2)
    tower = build_reduction(settings.reduction, params)
    matrices = instantiate_tower(tower, pauli_rep(settings.reduction))
    images = report.section("matrix tower")
    images.add("H", matrices.H)
    images.add("F", matrices.F)
    images.add("G", matrices.G)
    residual = verify_fundamental_constraint(matrices.F, matrices.G, settings.bracket_convention)
    report.section("fundamental constraint").add("residual", residual)

    constr = check_constr_relation(
        tower, sl2_quotient(settings.reduction), settings.bbar_interpretation, closing_map(settings.reduction)
    )
    section = report.section("constr", _status(constr.ab_passed))
    section.add("[A,B]", constr.witness, _status(constr.ab_passed))
    section.add("difference", constr.difference)

    a, b = parse_scalar(a_text), parse_scalar(b_text)
    result = solve_connection(matrices.H, matrices.F, matrices.G, Matrix2.scalar(a), Matrix2.scalar(b))
    connection = report.section("connection")
    connection.add("feasible", result.feasible)
    if not result.feasible:
        connection.add("obstruction", result.obstruction)
        return report
    document = export_spectral_problem(result.components, settings.section_sign, params)
    system = report.section("linear system")
    for key, value in document.linear_system.items():
        system.add(key, value)
    compatibility = report.section("compatibility")
    for key, value in document.compatibility.items():
        compatibility.add(key, value)
    return report


@cli.command("simulate")
@click.option("--init", "init_kind", type=click.Choice([k.value for k in InitKind]), default="plane_wave")
@click.option("--grid", type=int, default=None)
@click.option("--final-time", "final_time", type=float, default=None)
@click.option("--snapshot", type=click.Path(dir_okay=False), default=None)
@shared_options
def simulate(settings: WorkbenchSettings, report: Report, init_kind, snapshot, **_) -> Report:
    report.command = "simulate"
    params = ModelParams(settings.gamma2)
    field = init_field(init_kind, params, nx=settings.grid, seed=settings.seed)
    advanced = integrate(field, settings.final_time, settings.dt_safety)
    grid = report.section("grid")
    grid.add("nx", advanced.nx)
    grid.add("ny", advanced.ny)
    grid.add("h", _number(advanced.h))
    grid.add("t", _number(advanced.t))
    grid.add("steps", advanced.steps)

    time_derivative = None
    if advanced.wave is not None:
        x, y = advanced.coordinates()
        time_derivative = advanced.wave.time_derivative(x, y, advanced.t)
        error = abs(advanced.data - advanced.wave.evaluate(x, y, advanced.t)).max()
        grid.add("solution error", _number(float(error)))
    residuals = measure_residuals(
        advanced, {**pde_monitors(params), **constraint_monitor(params)}, time_derivative, settings.spectral_lambda
    )
    section = report.section("residuals", _status(residuals.paths_agree))
    for name, monitor in residuals.monitors.items():
        value = f"max={_number(monitor.max_abs)} mean={_number(monitor.mean_abs)}"
        section.add(name, value, _status(monitor.paths_agree))
    drift = advanced.constraint_defect()
    report.section("constraint", _status(drift <= CONSTRAINT_DRIFT)).add(
        "drift", _number(drift), _status(drift <= CONSTRAINT_DRIFT)
    )
    if snapshot is not None:
        write_snapshot(advanced, snapshot)
    return report


@cli.command("convergence")
@click.option("--init", "init_kind", type=click.Choice([k.value for k in InitKind]), default="plane_wave")
@click.option("--grids", type=str, default=None)
@click.option("--final-time", "final_time", type=float, default=None)
@shared_options
def convergence(settings: WorkbenchSettings, report: Report, init_kind, **_) -> Report:
    report.command = "convergence"
    study = convergence_study(
        init_kind, settings.grids, ModelParams(settings.gamma2), settings.final_time, settings.dt_safety, settings.seed
    )
    report.section("grids").add("sizes", study.grids)
    for name, order in study.monitors.items():
        section = report.section(name, _status(order.passed))
        section.add("errors", ", ".join(_number(e) for e in order.errors), _status(order.monotone))
        section.add("order", order.label, _status(order.in_window))
    return report


@handle_command_errors
def _dispatch(argv: Sequence[str], state: CommandState) -> int:
    try:
        result = cli.main(args=list(argv), prog_name="prolong", standalone_mode=False, obj=state)
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except click.exceptions.Abort:
        return EXIT_USAGE
    if not isinstance(result, Report):
        return result or EXIT_OK
    state.report = result
    payload = emit_report(result, state.fmt)
    if state.out is not None:
        state.out.write_bytes(payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()
    if result.failed:
        failed = ", ".join(s.name for s in result.sections if s.status == Status.FAIL)
        raise VerificationFailure(f"{result.command}: {failed}")
    return EXIT_OK


def run_command(argv: Sequence[str], settings: Optional[WorkbenchSettings] = None) -> tuple[int, Optional[Report]]:
    """Run one workbench command; 0 on pass, 2 on a failed verification, 1 on usage errors."""
    state = CommandState(settings=settings)
    code = _dispatch(argv, state)
    return code, state.report


def main() -> None:
    code, _ = run_command(sys.argv[1:])
    sys.exit(code)
