from .constants import (
    BbarInterpretation,
    BracketConvention,
    InitKind,
    KChoice,
    Reduction,
    ReportFormat,
    SectionSign,
    Status,
)
from .parsers import flatten_tables, parse_gamma2, split_csv_list, split_int_list
from .workbench_settings import WorkbenchSettings

__all__ = [
    "BbarInterpretation",
    "BracketConvention",
    "InitKind",
    "KChoice",
    "Reduction",
    "ReportFormat",
    "SectionSign",
    "Status",
    "flatten_tables",
    "parse_gamma2",
    "split_csv_list",
    "split_int_list",
    "WorkbenchSettings",
]
