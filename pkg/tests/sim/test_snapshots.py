import numpy as np
import pytest

from prolongation_kit.scalar.params import ModelParams
from prolongation_kit.sim.snapshots import read_snapshot, write_snapshot
from prolongation_kit.sim.spin_field import init_field


def test_snapshot_is_row_major_csv(tmp_path):
    params = ModelParams()
    f = init_field("plane_wave", params, nx=8)

    path = write_snapshot(f, tmp_path / "snap.csv")
    lines = path.read_text().splitlines()

    assert lines[0] == "i,j,S1,S2,S3"
    assert len(lines) == 1 + 64
    assert lines[1].startswith("0,0,")
    assert lines[2].startswith("0,1,")


def test_snapshot_reads_back_exactly(tmp_path):
    params = ModelParams(gamma2=-1)
    f = init_field("random_smooth", params, nx=8, seed=5)

    restored = read_snapshot(write_snapshot(f, tmp_path / "snap.csv"), params, f.h)

    assert np.array_equal(restored.data, f.data)
    assert restored.nx == 8


def test_snapshot_with_foreign_header_is_rejected(tmp_path):
    path = tmp_path / "other.csv"
    path.write_text("a,b,c\n1,2,3\n")

    with pytest.raises(ValueError):
        read_snapshot(path, ModelParams(), 0.1)
