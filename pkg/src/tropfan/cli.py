"""Batch command-line front end.

Every subcommand reads JSON files and/or inline text arguments, writes a
single JSON document to standard output (``fan plot`` writes SVG instead)
and exits 0.  Domain failures print ``{"error": code, "message": ...}``
and exit 1; argparse usage problems exit 2.  Output is deterministic:
rays are always in the fan's sorted order and key order is fixed.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from . import evalmap as _evalmap
from . import fan as _fan
from . import intlat as _intlat
from . import laurent as _laurent
from . import morphism as _morphism
from .errors import DimensionMismatch, ParseError, TropfanError
from .semiring import NEG_INF

DEFAULT_MEMBER_BOUND = 64


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc


def _load_fan(path: str) -> _fan.WeightedFan:
    return _fan.WeightedFan.from_json(_load_json(path))


def _fan_ref(ref, base_dir: str) -> _fan.WeightedFan:
    """A fan given either inline or as a path relative to the referring file."""
    if isinstance(ref, dict):
        return _fan.WeightedFan.from_json(ref)
    if isinstance(ref, str):
        path = ref if os.path.isabs(ref) else os.path.join(base_dir, ref)
        return _load_fan(path)
    raise ParseError("fan reference must be a path or an inline fan object")


def _fmt_val(v) -> str:
    return "-inf" if v is NEG_INF else str(v)


def _emit(obj, pretty: bool):
    print(json.dumps(obj, indent=2 if pretty else None))


# ---------------------------------------------------------------- fan


def _cmd_fan_check(args) -> dict:
    X = _load_fan(args.fan)
    balanced = _fan.check_balancing(X)
    M = _evalmap.generator_matrix(X)
    out = {
        "ambient_dim": X.ambient_dim,
        "rays": X.ray_labels(),
        "weights": [r.weight for r in X.rays],
        "balanced": balanced,
        "realizable": _evalmap.is_realizable(M),
    }
    if not balanced:
        out["defect"] = [sum(row) for row in M.data]
    return out


def _cmd_fan_smooth(args) -> dict:
    report = _evalmap.is_smooth(_load_fan(args.fan))
    if report.smooth:
        return {"smooth": True}
    return {"smooth": False, "reason": report.reason}


def _cmd_fan_evalmap(args) -> dict:
    X = _load_fan(args.fan)
    f = _laurent.parse_poly_text(args.poly, X.ambient_dim)
    return _evalmap.eval_map(X, f).to_json()


def _cmd_fan_generators(args) -> dict:
    return _evalmap.generator_matrix(_load_fan(args.fan)).to_json()


def _cmd_fan_reconstruct(args) -> dict:
    M = _intlat.IntMatrix.from_json(_load_json(args.matrix))
    return _evalmap.reconstruct_fan(M).to_json()


def _render_svg(X: _fan.WeightedFan) -> str:
    if X.ambient_dim != 2:
        raise DimensionMismatch("plotting is only available for 2-dimensional fans")
    size, cx, cy, scale = 400, 200.0, 200.0, 150.0
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
        f'<circle cx="{cx}" cy="{cy}" r="2.5" fill="black"/>',
    ]
    for ray in X.rays:
        dx, dy = ray.direction
        norm = math.hypot(dx, dy)
        # unit-length segment; SVG's y axis points down
        ex, ey = cx + scale * dx / norm, cy - scale * dy / norm
        lines.append(
            f'<line x1="{cx:.2f}" y1="{cy:.2f}" x2="{ex:.2f}" y2="{ey:.2f}" '
            f'stroke="black" stroke-width="1.5"/>'
        )
        lx, ly = cx + 1.12 * scale * dx / norm, cy - 1.12 * scale * dy / norm
        lines.append(
            f'<text x="{lx:.2f}" y="{ly:.2f}" font-size="12" text-anchor="middle" '
            f'dominant-baseline="middle">{ray.weight}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines)


# ---------------------------------------------------------------- poly


def _cmd_poly_eval(args) -> dict:
    P = _laurent.parse_poly_text(args.poly, args.vars)
    p = _laurent.parse_point(args.point, P.num_vars)
    return {"value": _fmt_val(P.eval(p))}


def _cmd_poly_initial(args) -> str:
    P = _laurent.parse_poly_text(args.poly, args.vars)
    p = _laurent.parse_point(args.point, P.num_vars)
    return _laurent.poly_to_text(P.initial_form(p))


def _cmd_poly_eq(args) -> dict:
    P = _laurent.parse_poly_text(args.left, args.vars)
    Q = _laurent.parse_poly_text(args.right, args.vars)
    if P.num_vars != Q.num_vars:
        # reparse the smaller one in the larger variable count
        n = max(P.num_vars, Q.num_vars)
        P = _laurent.parse_poly_text(args.left, n)
        Q = _laurent.parse_poly_text(args.right, n)
    if _laurent.fn_eq(P, Q):
        return {"equal": True}
    w = _laurent.fn_witness(P, Q)
    return {"equal": False, "witness": [str(c) for c in w]}


def _cmd_poly_germ(args) -> dict:
    P = _laurent.parse_poly_text(args.poly, args.vars)
    p = _laurent.parse_point(args.point, P.num_vars)
    g = _laurent.germ_localize(P, p)
    part = "-inf" if g.is_bottom else _laurent.poly_to_text(g.part.poly)
    return {"part": part, "grade": _fmt_val(g.grade)}


# ------------------------------------------------------------ morphism


def _load_morphism(path: str) -> _morphism.FanMorphism:
    obj = _load_json(path)
    base = os.path.dirname(os.path.abspath(path))
    try:
        matrix = obj["matrix"]
        src, tgt = obj["source"], obj["target"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"morphism file needs matrix/source/target: {exc}") from exc
    X = _fan_ref(src, base)
    Y = _fan_ref(tgt, base)
    return _morphism.FanMorphism(X, Y, _intlat.IntMatrix.from_json({"data": matrix}))


def _cmd_morphism_check(args) -> dict:
    obj = _load_json(args.morphism)
    base = os.path.dirname(os.path.abspath(args.morphism))
    try:
        T = _intlat.IntMatrix.from_json({"data": obj["matrix"]})
        X = _fan_ref(obj["source"], base)
        Y = _fan_ref(obj["target"], base)
    except (KeyError, TypeError) as exc:
        raise ParseError(f"morphism file needs matrix/source/target: {exc}") from exc
    return {"valid": _morphism.validate_morphism(T, X, Y)}


def _cmd_morphism_pullback(args) -> dict:
    mu = _load_morphism(args.morphism)
    Q = _laurent.parse_poly_text(args.poly, mu.target.ambient_dim)
    return _laurent.poly_to_json(_morphism.pullback_poly(mu, Q))


def _cmd_morphism_realize(args) -> dict:
    obj = _load_json(args.homspec)
    base = os.path.dirname(os.path.abspath(args.homspec))
    try:
        src = _fan_ref(obj["source"], base)
        tgt = _fan_ref(obj["target"], base)
        raw_images = obj["images"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"homspec file needs source/target/images: {exc}") from exc
    images = tuple(
        _evalmap.RayFunction.from_json(tgt, {"values": vals}) for vals in raw_images
    )
    h = _morphism.HomSpec(src, tgt, images)
    mu = _morphism.realize_morphism(h)
    return {
        "matrix": [list(r) for r in mu.matrix.data],
        "ray_map": _morphism.extract_ray_map(mu),
    }


# ------------------------------------------------------------- lattice


def _cmd_snf(args) -> dict:
    A = _intlat.IntMatrix.from_json(_load_json(args.matrix))
    P, D, Q = _intlat.snf(A)
    return {
        "P": P.to_json(),
        "D": D.to_json(),
        "Q": Q.to_json(),
        "invariant_factors": list(_intlat.invariant_factors(D)),
    }


def _cmd_hnf(args) -> dict:
    A = _intlat.IntMatrix.from_json(_load_json(args.matrix))
    H, U = _intlat.hnf(A)
    return {"H": H.to_json(), "U": U.to_json()}


def _cmd_transport(args) -> dict:
    A = _intlat.IntMatrix.from_json(_load_json(args.a))
    B = _intlat.IntMatrix.from_json(_load_json(args.b))
    T = _intlat.unimodular_transport(A, B)
    return {"T": T.to_json(), "det": _intlat.det(T)}


# -------------------------------------------------------------- member


def _cmd_member(args) -> dict:
    X = _load_fan(args.fan)
    raw = [p.strip() for p in args.values.split(",")]
    G = _evalmap.RayFunction.from_json(X, {"values": raw})
    if args.bound is not None:
        bound = args.bound
    else:
        bound = int(os.environ.get("TROPFAN_MEMBER_BOUND", DEFAULT_MEMBER_BOUND))
    witness = _evalmap.image_membership(X, G, bound=bound)
    if witness is None:
        return {"member": False}
    return {"member": True, "witness": _laurent.poly_to_text(witness)}


# ------------------------------------------------------------- wiring


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="tropfan", description=__doc__)
    top.add_argument("--pretty", action="store_true", help="indent JSON output")
    sub = top.add_subparsers(dest="command", required=True)

    fan = sub.add_parser("fan", help="weighted-fan operations").add_subparsers(
        dest="fan_command", required=True
    )
    p = fan.add_parser("check", help="balancing and realizability diagnostics")
    p.add_argument("fan")
    p.set_defaults(fn=_cmd_fan_check)
    p = fan.add_parser("smooth", help="decide smoothness at the origin")
    p.add_argument("fan")
    p.set_defaults(fn=_cmd_fan_smooth)
    p = fan.add_parser("evalmap", help="weighted evaluation of a polynomial")
    p.add_argument("fan")
    p.add_argument("--poly", required=True, help="polynomial in text form")
    p.set_defaults(fn=_cmd_fan_evalmap)
    p = fan.add_parser("generators", help="generator matrix, one column per ray")
    p.add_argument("fan")
    p.set_defaults(fn=_cmd_fan_generators)
    p = fan.add_parser("reconstruct", help="fan from a realizable matrix")
    p.add_argument("matrix")
    p.set_defaults(fn=_cmd_fan_reconstruct)
    p = fan.add_parser("plot", help="SVG drawing of a 2-dimensional fan")
    p.add_argument("fan")
    p.set_defaults(fn=lambda a: _render_svg(_load_fan(a.fan)), raw=True)

    poly = sub.add_parser("poly", help="Laurent polynomial operations").add_subparsers(
        dest="poly_command", required=True
    )
    p = poly.add_parser("eval", help="value at a rational point")
    p.add_argument("poly")
    p.add_argument("--point", required=True)
    p.add_argument("--vars", type=int)
    p.set_defaults(fn=_cmd_poly_eval)
    p = poly.add_parser("initial", help="initial form at a rational point")
    p.add_argument("poly")
    p.add_argument("--point", required=True)
    p.add_argument("--vars", type=int)
    p.set_defaults(fn=_cmd_poly_initial)
    p = poly.add_parser("eq", help="equality as functions, with witness")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--vars", type=int)
    p.set_defaults(fn=_cmd_poly_eq)
    p = poly.add_parser("germ", help="local germ at a rational point")
    p.add_argument("poly")
    p.add_argument("--point", required=True)
    p.add_argument("--vars", type=int)
    p.set_defaults(fn=_cmd_poly_germ)

    mor = sub.add_parser("morphism", help="fan morphism operations").add_subparsers(
        dest="morphism_command", required=True
    )
    p = mor.add_parser("check", help="support preservation of a matrix")
    p.add_argument("morphism")
    p.set_defaults(fn=_cmd_morphism_check)
    p = mor.add_parser("pullback", help="pull a polynomial back along a morphism")
    p.add_argument("morphism")
    p.add_argument("--poly", required=True)
    p.set_defaults(fn=_cmd_morphism_pullback)
    p = mor.add_parser("realize", help="fan morphism from generator images")
    p.add_argument("homspec")
    p.set_defaults(fn=_cmd_morphism_realize)

    p = sub.add_parser("snf", help="Smith normal form with transforms")
    p.add_argument("matrix")
    p.set_defaults(fn=_cmd_snf)
    p = sub.add_parser("hnf", help="column Hermite normal form")
    p.add_argument("matrix")
    p.set_defaults(fn=_cmd_hnf)
    p = sub.add_parser("transport", help="unimodular T with T.A = B")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(fn=_cmd_transport)

    p = sub.add_parser("member", help="is a ray function a weighted evaluation?")
    p.add_argument("fan")
    p.add_argument("--values", required=True, help="comma-separated values, one per sorted ray")
    p.add_argument("--bound", type=int, default=None, help="search box half-width")
    p.set_defaults(fn=_cmd_member)

    return top


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        result = args.fn(args)
    except TropfanError as exc:
        _emit({"error": exc.code, "message": str(exc)}, getattr(args, "pretty", False))
        return 1
    if getattr(args, "raw", False):
        print(result)
    else:
        _emit(result, args.pretty)
    return 0


def main():  # pragma: no cover - thin wrapper
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    sys.exit(run())
