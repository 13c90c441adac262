"""Command-line interface: ``curvewigner {field,curve,mubs,wigner,reproduce}``.

Every command exits 0 iff the verifications it ran passed within tolerance.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import io
from ._validation import check_density_matrix, check_state_vector, random_density_matrix
from .curves import (
    Curve,
    bundle_signature,
    classify_regularity,
    curve_points,
    factorization,
    is_stabilizer_curve,
)
from .exceptions import CurveWignerError, UnknownFigure
from .gf import Field
from .mubs import PRESETS, associate_curve, eigenstate_deviation, preset_bundle, verify_unbiased
from .rotations import CurveFunction, p_op
from .wigner import (
    covariance_check,
    kernel_bundle,
    negativity,
    point_coverage,
    support,
    tomographic_deviation,
    wigner_function,
)

DEFAULT_SEED = 20170101
FIGURES = ("fig1", "fig2", "fig3")


def _parse_int(text: str) -> int:
    return int(text, 0)


def _field(args) -> Field:
    return Field(args.n, args.poly)


def _out_dir(args, default: str) -> Path:
    if args.out:
        return Path(args.out)
    root = os.environ.get("WIGNER_DATA_DIR")
    return Path(root) / default if root else Path("wigner-data") / default


def _emit(report: dict) -> None:
    json.dump(report, sys.stdout, indent=2, sort_keys=True, default=str, ensure_ascii=False)
    sys.stdout.write("\n")


def _load_state(spec: str, field: Field) -> np.ndarray:
    d = field.order
    if spec == "ghz":
        psi = np.zeros(d, dtype=complex)
        # |0...0> and |1...1>; the all-ones qubit string is the field unit
        psi[0] = psi[field.reconstruct([1] * field.n)] = 1 / np.sqrt(2)
        return psi
    if spec == "maximally-mixed":
        return np.eye(d, dtype=complex) / d
    state = io.state_from_json(spec, field)
    if state.ndim == 1:
        return check_state_vector(state, d)
    return check_density_matrix(state, d)


# -- commands ------------------------------------------------------------------

def cmd_field(args) -> int:
    field = _field(args)
    rows = [{"element": a, "power": field.format(a, "power"), "trace": field.trace(a),
             "expansion": list(field.expand(a))} for a in field.elements()]
    report = {"n": field.n, "irreducible_poly": field.poly,
              "primitive_element": field.primitive_element,
              "self_dual_basis": list(field.self_dual_basis),
              "self_dual_basis_power": [field.format(t, "power") for t in field.self_dual_basis],
              "elements": rows}
    if args.out:
        io.dump_json(report, Path(args.out) / "field.json")
    _emit(report)
    return 0


def _curve_report(curve: Curve) -> dict:
    check = is_stabilizer_curve(curve)
    report = {"curve": curve.describe(), "points": curve_points(curve),
              "commuting": check.commuting, "origin": check.origin,
              "injective": check.injective,
              "coefficient_condition": check.coefficient_condition,
              "valid": check.valid, "failed_checks": check.failures()}
    if check.valid:
        fact = factorization(curve)
        report["regularity"] = classify_regularity(curve)
        report["factorization"] = list(fact.blocks)
        report["factorization_blocks"] = [list(b) for b in fact.block_members]
    return report


def cmd_curve(args) -> int:
    field = _field(args)
    if args.bundle:
        curves = io.bundle_curves_from_json(args.bundle, field)
        reports = [_curve_report(c) for c in curves]
        ok = all(r["valid"] for r in reports)
        out = {"curves": reports}
        if ok:
            out["signature"] = list(bundle_signature(curves).counts)
        _emit(out)
        return 0 if ok else 1
    if not args.curve:
        raise SystemExit("curve: pass --curve FILE or --bundle FILE")
    report = _curve_report(io.curve_from_json(args.curve, field))
    _emit(report)
    return 0 if report["valid"] else 1


def cmd_mubs(args) -> int:
    field = _field(args)
    bundle = preset_bundle(field, args.preset)
    unb = verify_unbiased(bundle)
    eig = eigenstate_deviation(bundle)
    report = {"preset": args.preset, "n": field.n,
              "signature": list(bundle.signature.counts),
              "overlap_deviation": unb.overlap_deviation,
              "orthonormality_deviation": unb.orthonormality_deviation,
              "eigenstate_deviation": eig,
              "curves": [{"label": b.label, "curve": b.curve.describe(),
                          "factorization": list(b.factorization.blocks)} for b in bundle.bases]}
    ok = unb.ok(args.tol) and eig < 1e-9
    if args.out:
        io.dump_json(io.bundle_to_json(bundle), Path(args.out) / f"bundle_{args.preset}.json")
    report["ok"] = ok
    _emit(report)
    return 0 if ok else 1


def cmd_wigner(args) -> int:
    field = _field(args)
    if not args.state:
        raise SystemExit("wigner: pass --state FILE|ghz|maximally-mixed")
    state = _load_state(args.state, field)
    bundle = preset_bundle(field, args.preset)
    kernel = kernel_bundle(bundle)
    grid = wigner_function(state, kernel)
    out = _out_dir(args, "wigner")
    io.write_grid_csv(grid, out / f"wigner_{args.preset}.csv")
    io.dump_json(io.grid_to_json(grid), out / f"wigner_{args.preset}.json")
    neg = negativity(grid)
    total = float(grid.values.sum())
    rho = state if state.ndim == 2 else np.outer(state, state.conj())
    report = {"preset": args.preset, "support_size": len(support(grid)),
              "min_value": neg.min_value, "negativity": neg.sum_negative,
              "sum": total, "output_dir": str(out)}
    ok = abs(total - field.order * np.trace(rho).real) < args.tol
    if args.check_marginals:
        dev = tomographic_deviation(bundle, grid, rho)
        report["marginal_deviation"] = dev
        ok &= dev < args.tol
    if args.check_covariance:
        dev, exhaustive = covariance_check(kernel, None if field.n <= 2 else 200, args.seed)
        report["covariance_deviation"] = dev
        report["covariance_exhaustive"] = exhaustive
        ok &= dev < args.tol
    report["ok"] = bool(ok)
    _emit(report)
    return 0 if ok else 1


def _panel(grid, out: Path, name: str) -> dict:
    io.write_grid_csv(grid, out / f"{name}.csv")
    io.dump_json(io.grid_to_json(grid), out / f"{name}.json")
    io.write_grid_gnuplot(grid, out / f"{name}.dat")
    neg = negativity(grid)
    return {"panel": name, "support": sorted(support(grid)), "support_size": len(support(grid)),
            "min_value": neg.min_value, "negativity": neg.sum_negative,
            "sum": float(grid.values.sum())}


def cmd_reproduce(args) -> int:
    if args.figure not in FIGURES:
        raise UnknownFigure(f"unknown figure {args.figure!r}; choose from {FIGURES}")
    field = Field(3)
    s = field.sigma
    out = _out_dir(args, args.figure)
    rng = np.random.default_rng(args.seed)
    rho = random_density_matrix(field.order, rng)
    summary: dict = {"figure": args.figure, "seed": args.seed}
    ok = True

    if args.figure == "fig2":
        psi = _load_state("ghz", field)
        panels = []
        for preset in ("standard", "set234", "set162", "set090"):
            bundle = preset_bundle(field, preset)
            kernel = kernel_bundle(bundle)
            grid = wigner_function(psi, kernel)
            panel = _panel(grid, out, f"ghz_{preset}")
            panel["signature"] = list(bundle.signature.counts)
            panel["marginal_deviation"] = tomographic_deviation(bundle, wigner_function(rho, kernel), rho)
            ok &= panel["marginal_deviation"] < args.tol
            panels.append(panel)
        summary["panels"] = panels
        ok &= panels[-1]["support_size"] == 8
    else:
        bundle = preset_bundle(field, "set090")
        kernel = kernel_bundle(bundle)
        if args.figure == "fig1":
            curve = associate_curve(bundle, s(2), s(2))
            psi = bundle.basis(s(2)).state(s(2))
            expected = set(curve_points(curve))
            summary["curve"] = curve.describe()
            summary["regularity"] = classify_regularity(curve)
            summary["factorization"] = list(factorization(curve).blocks)
        else:
            psi = p_op(CurveFunction.linearized(field, [s(1)]))[:, 0]
            expected = set(curve_points(Curve.ray(field, s(1), s(5))))
            summary["line"] = Curve.ray(field, s(1), s(5)).describe()
        grid = wigner_function(psi, kernel)
        panel = _panel(grid, out, args.figure)
        panel["matches_expected_support"] = support(grid) == expected
        panel["marginal_deviation"] = tomographic_deviation(bundle, wigner_function(rho, kernel), rho)
        ok &= panel["matches_expected_support"] and panel["marginal_deviation"] < args.tol
        summary["panels"] = [panel]
        summary["point_coverage_ok"] = bool((point_coverage(bundle) == field.order + 1).all())
        ok &= summary["point_coverage_ok"]

    with open(out / "plot.gp", "w", encoding="utf-8") as fh:
        for panel in summary["panels"]:
            fh.write(f"splot '{panel['panel']}.dat' using 1:2:3 with impulses title '{panel['panel']}'\n")
    summary["ok"] = bool(ok)
    io.dump_json(summary, out / "summary.json")
    _emit(summary)
    return 0 if ok else 1


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=3, help="number of qubits")
    common.add_argument("--poly", type=_parse_int, default=None,
                        help="irreducible polynomial bitmask, e.g. 0b1011")
    common.add_argument("--out", default=None, help="output directory")
    common.add_argument("--tol", type=float, default=1e-10)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)

    parser = argparse.ArgumentParser(prog="curvewigner", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("field", parents=[common], help="field tables and self-dual basis")

    p = sub.add_parser("curve", parents=[common], help="validate and classify a curve")
    p.add_argument("--curve")
    p.add_argument("--bundle")

    p = sub.add_parser("mubs", parents=[common], help="build and verify a MUB bundle")
    p.add_argument("--preset", choices=PRESETS, default="standard")

    p = sub.add_parser("wigner", parents=[common], help="Wigner function of a state")
    p.add_argument("--preset", choices=PRESETS, default="standard")
    p.add_argument("--state", help="state JSON file, 'ghz' or 'maximally-mixed'")
    p.add_argument("--check-marginals", action="store_true")
    p.add_argument("--check-covariance", action="store_true")

    p = sub.add_parser("reproduce", parents=[common], help="regenerate figure data")
    p.add_argument("figure")
    return parser


COMMANDS = {"field": cmd_field, "curve": cmd_curve, "mubs": cmd_mubs,
            "wigner": cmd_wigner, "reproduce": cmd_reproduce}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except CurveWignerError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
