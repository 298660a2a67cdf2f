import logging
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path
from typing import Any

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from prolongation_kit.settings.constants import (
    BbarInterpretation,
    BracketConvention,
    KChoice,
    Reduction,
    SectionSign,
)
from prolongation_kit.settings.parsers import flatten_tables, parse_gamma2, split_int_list


class WorkbenchSettings(BaseSettings):
    gamma2: int = 1
    pseudopotential_dim: int = 1
    reduction: Reduction = Reduction.I
    bracket_convention: BracketConvention = BracketConvention.GF
    bbar_interpretation: BbarInterpretation = BbarInterpretation.INVERSE
    k_choice: KChoice = KChoice.BRACKET
    section_sign: SectionSign = SectionSign.MINUS

    seed: int = 0
    grid: int = 64
    grids: list[int] = [32, 64, 128]
    dt_safety: float = 0.5
    final_time: float = 0.1
    spectral_lambda: float = 0.5
    log_level: str = "WARNING"

    @field_validator("gamma2", mode="before")
    def check_gamma2(cls, value):
        return parse_gamma2(value)

    @field_validator("grids", mode="before")
    def split_grids(cls, value):
        return split_int_list(value)

    @field_validator("pseudopotential_dim")
    def check_dim(cls, value: int) -> int:
        if value < 1:
            raise ValueError("pseudopotential_dim must be positive")
        return value

    @field_validator("grid")
    def check_grid(cls, value: int) -> int:
        if value < 8:
            raise ValueError("grid must be at least 8")
        return value

    @field_validator("log_level", mode="before")
    def check_log_level(cls, value):
        level = str(value).upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"unknown log level {value!r}")
        return level

    @field_validator("dt_safety")
    def check_dt_safety(cls, value: float) -> float:
        if not 0 < value <= 1:
            raise ValueError("dt_safety must lie in (0, 1]")
        return value

    model_config = SettingsConfigDict(env_prefix="PROLONG_", extra="ignore")

    @classmethod
    def from_file(cls, path: str | Path | None, **overrides: Any) -> "WorkbenchSettings":
        values: dict[str, Any] = {}
        if path is not None:
            with open(path, "rb") as handle:
                values = flatten_tables(tomllib.load(handle))
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def echo(self) -> dict[str, str]:
        return {key: str(getattr(value, "value", value)) for key, value in sorted(self.model_dump().items())}
