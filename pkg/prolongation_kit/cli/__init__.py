from .commands import cli, main, run_command
from .dsl import RelationAst, build_algebra, format_statements, load_algebra, parse_algebra_dsl, parse_scalar
from .report import Entry, Report, Section, emit_report

__all__ = [
    "cli",
    "main",
    "run_command",
    "RelationAst",
    "build_algebra",
    "format_statements",
    "load_algebra",
    "parse_algebra_dsl",
    "parse_scalar",
    "Entry",
    "Report",
    "Section",
    "emit_report",
]
