from typing import Any, Mapping, Sequence


def split_csv_list(value: str | Sequence[str] | None) -> list[str] | Sequence[str] | None:
    if value is None:
        return None
    if isinstance(value, str):
        return [item.strip() for item in value.split(",") if item.strip()]
    return value


def split_int_list(value: str | Sequence[int] | None) -> list[int] | None:
    items = split_csv_list(value)  # type: ignore[arg-type]
    if items is None:
        return None
    return [int(item) for item in items]


def parse_gamma2(value: Any) -> int:
    if isinstance(value, str):
        value = value.strip()
    number = int(value)
    if number not in (1, -1):
        raise ValueError(f"gamma2 must be +1 or -1, got {value!r}")
    return number


def flatten_tables(data: Mapping[str, Any]) -> dict[str, Any]:
    """Collapse nested TOML tables into a flat key map; inner keys win over outer ones."""
    flat: dict[str, Any] = {}
    nested: list[Mapping[str, Any]] = []
    for key, value in data.items():
        if isinstance(value, Mapping):
            nested.append(value)
        else:
            flat[key] = value
    for table in nested:
        flat.update(flatten_tables(table))
    return flat
