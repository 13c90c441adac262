import json

import numpy as np
import pytest

from curvewigner import io
from curvewigner.cli import main
from curvewigner.curves import Curve
from curvewigner.gf import Field
from curvewigner.wigner import kernel_bundle, wigner_function


def test_field_round_trip(tmp_path, gf8):
    io.dump_json(io.field_to_json(gf8), tmp_path / "f.json")
    assert io.field_from_json(tmp_path / "f.json") == gf8


def test_state_round_trip(tmp_path, rng):
    psi = rng.normal(size=8) + 1j * rng.normal(size=8)
    psi /= np.linalg.norm(psi)
    io.dump_json(io.state_to_json(psi, 3), tmp_path / "s.json")
    assert np.allclose(io.state_from_json(tmp_path / "s.json"), psi)


def test_curve_round_trip(gf8):
    c = Curve.ray(gf8, 3, 5)
    assert io.curve_from_json(io.curve_to_json(c), gf8) == c


def test_grid_csv_round_trip(tmp_path, bundles, rng):
    psi = np.eye(8)[2]
    grid = wigner_function(psi, kernel_bundle(bundles["set162"]))
    io.write_grid_csv(grid, tmp_path / "g.csv")
    back = io.read_grid_csv(tmp_path / "g.csv", grid.field)
    assert np.allclose(back.values, grid.values, atol=1e-11)
    assert (tmp_path / "g.csv").read_text().splitlines()[0] == "alpha,beta,value"


def test_state_dimension_mismatch(gf8):
    from curvewigner.exceptions import DimensionMismatch
    with pytest.raises(DimensionMismatch):
        io.state_from_json({"n": 2, "amplitudes": [[1, 0]] * 4}, gf8)


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_cli_field(capsys):
    code, out = _run(capsys, "field", "--n", "3")
    assert code == 0
    assert json.loads(out.out)["self_dual_basis"] == [3, 5, 7]


def test_cli_bad_poly(capsys):
    code, out = _run(capsys, "field", "--n", "3", "--poly", "0b1111")
    assert code == 2 and "Reducible" in out.err


def test_cli_mubs(capsys, tmp_path):
    code, out = _run(capsys, "mubs", "--preset", "set234", "--out", str(tmp_path))
    assert code == 0 and json.loads(out.out)["signature"] == [2, 3, 4]
    code, out = _run(capsys, "curve", "--bundle", str(tmp_path / "bundle_set234.json"))
    assert code == 0 and json.loads(out.out)["signature"] == [2, 3, 4]


def test_cli_invalid_curve(capsys, tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"alpha_coeffs": [1, 0, 0], "beta_coeffs": [0, 1, 0]}))
    code, out = _run(capsys, "curve", "--curve", str(path))
    assert code == 1 and "commuting" in json.loads(out.out)["failed_checks"]


def test_cli_wigner_ghz(capsys, tmp_path):
    code, out = _run(capsys, "wigner", "--state", "ghz", "--preset", "set090",
                     "--check-marginals", "--check-covariance", "--out", str(tmp_path))
    rep = json.loads(out.out)
    assert code == 0 and rep["support_size"] == 8
    assert (tmp_path / "wigner_set090.csv").exists()


@pytest.mark.parametrize("figure", ["fig1", "fig2", "fig3"])
def test_cli_reproduce_is_deterministic(capsys, tmp_path, figure):
    a, b = tmp_path / "a", tmp_path / "b"
    assert _run(capsys, "reproduce", figure, "--out", str(a))[0] == 0
    assert _run(capsys, "reproduce", figure, "--out", str(b))[0] == 0
    names = sorted(p.name for p in a.iterdir())
    assert "summary.json" in names and "plot.gp" in names
    for name in names:
        assert (a / name).read_bytes() == (b / name).read_bytes()


def test_cli_unknown_figure(capsys, tmp_path):
    assert _run(capsys, "reproduce", "fig9", "--out", str(tmp_path))[0] == 2


def test_data_dir_env(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("WIGNER_DATA_DIR", str(tmp_path))
    assert _run(capsys, "wigner", "--state", "maximally-mixed")[0] == 0
    assert (tmp_path / "wigner" / "wigner_standard.csv").exists()
