"""JSON / CSV readers and writers for fields, states, curves, bundles and grids."""
from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Any

import numpy as np

from .curves import Curve
from .exceptions import DimensionMismatch
from .gf import Field
from .mubs import MubBundle
from .rotations import CurveFunction
from .wigner import WignerGrid, WignerKernel


def _load(src) -> dict:
    if isinstance(src, dict):
        return src
    with open(src, encoding="utf-8") as fh:
        return json.load(fh)


def dump_json(obj: Any, path) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True, ensure_ascii=False)
        fh.write("\n")


def _num(x: float) -> float:
    return float(f"{x:.12g}")


def _complex_pairs(arr: np.ndarray) -> list:
    return np.stack([arr.real, arr.imag], axis=-1).round(15).tolist()


def _from_pairs(data) -> np.ndarray:
    arr = np.asarray(data, dtype=float)
    return arr[..., 0] + 1j * arr[..., 1]


# -- field -------------------------------------------------------------------

def field_from_json(src) -> Field:
    spec = _load(src)
    return Field(int(spec["n"]), spec.get("irreducible_poly"), spec.get("self_dual_basis"))


def field_to_json(field: Field, display: str = "int") -> dict:
    return {"n": field.n, "irreducible_poly": field.poly,
            "self_dual_basis": list(field.self_dual_basis), "display": display}


# -- states ------------------------------------------------------------------

def state_from_json(src, field: Field | None = None) -> np.ndarray:
    """Return a state vector (``kind='pure'``) or a density matrix."""
    spec = _load(src)
    if "amplitudes" in spec:
        state = _from_pairs(spec["amplitudes"])
    elif "matrix" in spec:
        state = _from_pairs(spec["matrix"])
    else:
        raise ValueError("state file needs 'amplitudes' or 'matrix'")
    dim = 1 << int(spec["n"])
    if state.shape[0] != dim or (state.ndim == 2 and state.shape != (dim, dim)):
        raise DimensionMismatch(f"state shape {state.shape} does not match n={spec['n']}")
    if field is not None and field.order != dim:
        raise DimensionMismatch(f"state has n={spec['n']}, field has n={field.n}")
    return state


def state_to_json(state: np.ndarray, n: int) -> dict:
    state = np.asarray(state, dtype=complex)
    if state.ndim == 1:
        return {"n": n, "kind": "pure", "amplitudes": _complex_pairs(state)}
    return {"n": n, "kind": "mixed", "matrix": _complex_pairs(state)}


# -- curves ------------------------------------------------------------------

def curve_from_json(src, field: Field) -> Curve:
    spec = _load(src)
    offset = tuple(spec.get("offset", (0, 0)))
    return Curve(field, spec["alpha_coeffs"], spec["beta_coeffs"], offset)


def curve_to_json(curve: Curve) -> dict:
    return {"alpha_coeffs": list(curve.alpha_coeffs), "beta_coeffs": list(curve.beta_coeffs),
            "offset": list(curve.offset)}


def bundle_curves_from_json(src, field: Field) -> list[Curve]:
    return [curve_from_json(c, field) for c in _load(src)["curves"]]


def curve_function_from_json(src, field: Field) -> CurveFunction:
    spec = _load(src)
    if "coeffs" in spec:
        return CurveFunction.linearized(field, spec["coeffs"])
    if "table" in spec:
        return CurveFunction.from_table(field, spec["table"])
    raise ValueError("curve function file needs 'coeffs' or 'table'")


def curve_function_to_json(fn: CurveFunction) -> dict:
    if fn.coeffs is not None:
        return {"coeffs": list(fn.coeffs)}
    return {"table": list(fn.table)}


def bundle_to_json(bundle: MubBundle) -> dict:
    return {
        "name": bundle.name,
        "field": field_to_json(bundle.field),
        "generators": {k: curve_function_to_json(fn)
                       for k, fn in zip("fgh", bundle.generators)},
        "signature": list(bundle.signature.counts),
        "curves": [curve_to_json(c) for c in bundle.curves],
        "bases": [
            {"label": b.label,
             "curve": curve_to_json(b.curve),
             "offsets": [list(p) for p in b.offsets],
             "factorization": list(b.factorization.blocks),
             "states": _complex_pairs(b.states)}
            for b in bundle.bases
        ],
    }


# -- grids -------------------------------------------------------------------

def write_grid_csv(grid: WignerGrid, path) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    q = grid.field.order
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["alpha", "beta", "value"])
        for a in range(q):
            for b in range(q):
                writer.writerow([a, b, f"{_num(grid.values[a, b]):.12g}"])


def read_grid_csv(path, field: Field) -> WignerGrid:
    q = field.order
    vals = np.zeros((q, q))
    with open(path, encoding="utf-8") as fh:
        for row in csv.DictReader(fh):
            vals[int(row["alpha"]), int(row["beta"])] = float(row["value"])
    return WignerGrid(field, vals)


def grid_to_json(grid: WignerGrid) -> dict:
    q = grid.field.order
    return {"n": grid.field.n,
            "points": [{"alpha": a, "beta": b, "value": _num(grid.values[a, b])}
                       for a in range(q) for b in range(q)]}


def write_grid_gnuplot(grid: WignerGrid, path) -> None:
    """``splot``-ready blocks: one block per alpha, blank line between blocks."""
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    q = grid.field.order
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("# alpha beta W\n")
        for a in range(q):
            for b in range(q):
                fh.write(f"{a} {b} {_num(grid.values[a, b]):.12g}\n")
            fh.write("\n")


def kernel_to_json(kernel: WignerKernel) -> dict:
    q = kernel.field.order
    return {"n": kernel.field.n, "provenance": kernel.provenance,
            "points": [{"alpha": a, "beta": b, "operator": _complex_pairs(kernel.operators[a, b])}
                       for a in range(q) for b in range(q)]}
