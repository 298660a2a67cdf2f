from enum import Enum


class Reduction(str, Enum):
    I = "i"
    II = "ii"
    III = "iii"


class BracketConvention(str, Enum):
    GF = "GF"
    FG = "FG"


class BbarInterpretation(str, Enum):
    INVERSE = "inverse"
    IDENTITY = "identity"


class KChoice(str, Enum):
    BRACKET = "bracket"
    GENERIC = "generic"


class SectionSign(str, Enum):
    MINUS = "minus"
    PLUS = "plus"


class ReportFormat(str, Enum):
    TEXT = "text"
    JSON = "json"


class InitKind(str, Enum):
    CONSTANT = "constant"
    PLANE_WAVE = "plane_wave"
    RANDOM_SMOOTH = "random_smooth"


class Status(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INFO = "INFO"


MAX_FORM_DEGREE = 5
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2
