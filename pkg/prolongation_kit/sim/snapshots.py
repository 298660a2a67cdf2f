from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

from prolongation_kit.scalar.params import ModelParams
from prolongation_kit.sim.spin_field import SpinField

HEADER = ("i", "j", "S1", "S2", "S3")


def write_snapshot(f: SpinField, path: str | Path) -> Path:
    """Row-major CSV, one node per line."""
    path = Path(path)
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(HEADER)
        for i in range(f.nx):
            for j in range(f.ny):
                writer.writerow((i, j, *(repr(float(f.data[k, i, j])) for k in range(3))))
    return path


def read_snapshot(path: str | Path, params: ModelParams, h: float) -> SpinField:
    with Path(path).open(newline="") as handle:
        reader = csv.reader(handle)
        header = tuple(next(reader))
        if header != HEADER:
            raise ValueError(f"Unexpected snapshot header {header}")
        rows = [(int(i), int(j), float(a), float(b), float(c)) for i, j, a, b, c in reader]
    nx = max(r[0] for r in rows) + 1
    ny = max(r[1] for r in rows) + 1
    data = np.zeros((3, nx, ny))
    for i, j, a, b, c in rows:
        data[:, i, j] = (a, b, c)
    return SpinField(data, params, h)
