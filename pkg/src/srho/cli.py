"""Command-line entry point: ``srho <verb> [options]``.

JSON is the default output; ``boundary`` and ``figure`` write CSV (or SVG
when ``--out`` ends in ``.svg``). Exit codes: 0 success, 1 a verification
failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import acceptance, criteria, radii, region, series, verify
from .errors import SrhoError
from .numerics import NumericConfig
from .region import C0, C1

SCHEMA = 1
RADIUS_CLASSES = (
    "starlike-order", "m-beta", "convexity", "janowski", "mn-beta", "F1_0", "F1_HALF", "F2", "F3",
)

# decimals as printed alongside the constants, kept for side-by-side comparison
PRINTED = {
    "m": 0.506053, "t2": 1.91672, "beta": 0.322163, "beta_alt": 0.3222163,
    "gamma0": 0.0654238, "tau_tilde": 0.832934, "growth_lower": 0.619,
}


class UsageError(Exception):
    pass


# --- output --------------------------------------------------------------

def _num(x: float) -> str:
    if not math.isfinite(x):
        return "null"
    return format(x, ".17g")


def dumps(obj, indent: int = 2, level: int = 0) -> str:
    """JSON with every float printed to 17 significant digits and sorted keys."""
    pad, inner = " " * (indent * level), " " * (indent * (level + 1))
    if obj is None:
        return "null"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _num(float(obj))
    if isinstance(obj, (complex, np.complexfloating)):
        return dumps([obj.real, obj.imag], indent, level)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f'{inner}{dumps(str(k))}: {dumps(v, indent, level + 1)}' for k, v in sorted(obj.items())]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        if len(obj) == 0:
            return "[]"
        items = [dumps(v, indent, level + 1) for v in obj]
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return "[" + ", ".join(items) + "]"
        return "[\n" + ",\n".join(inner + s for s in items) + "\n" + pad + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(payload: dict, out: str | None):
    _emit(dumps({"schema": SCHEMA, **payload}) + "\n", out)


# --- verbs ---------------------------------------------------------------

def cmd_constants(args, cfg) -> int:
    sig = region.Sigma(args.sigma)
    m, t2 = region.max_argument(sig, cfg)
    l, t0 = region.imag_extent(sig, cfg)
    ymax, t_ymax = region.max_imag(sig, cfg)
    gamma0, tau = region.st_p_gamma(cfg)
    low, up, dlow, dup = series.growth_distortion(1.0, cfg)
    _emit_json({
        "sigma": sig.value,
        "c0": C0, "c1": C1,
        "m": m, "t2": t2, "beta": m / (math.pi / 2),
        "l": l, "t0": t0, "max_imag": ymax, "t_max_imag": t_ymax,
        "gamma0": gamma0, "tau_tilde": tau,
        "growth": {"lower": low, "upper": up, "distortion_lower": dlow, "distortion_upper": dup},
        "printed": PRINTED,
    }, args.out)
    return 0


def cmd_boundary(args, cfg) -> int:
    _emit(region.boundary_csv(region.Sigma(args.sigma), args.samples or 256), args.out)
    return 0


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + n for n in missing))


def build_radius_report(args, cfg) -> radii.RadiusReport:
    k, n = args.klass, args.n or 1
    if k is None:
        raise UsageError(f"radius needs --class, one of {', '.join(RADIUS_CLASSES)}")
    if k == "starlike-order":
        _need(args, "zeta")
        return radii.starlike_order_radius(args.zeta)
    if k == "m-beta":
        _need(args, "beta")
        return radii.mbeta_radius(args.beta)
    if k == "convexity":
        _need(args, "alpha")
        return radii.convexity_radius(args.alpha, cfg=cfg)
    if k == "janowski":
        _need(args, "A", "B")
        return radii.janowski_radius(radii.JanowskiParams(args.A, args.B, n))
    if k == "mn-beta":
        _need(args, "beta")
        return radii.mn_beta_radius(args.beta, n)
    if k in radii.RATIO_CLASSES:
        return radii.ratio_class_radius(k, n)
    if k == "F3":
        _need(args, "A")
        return radii.f3_radius(args.A, n)
    raise UsageError(f"unknown class {k!r}; expected one of {', '.join(RADIUS_CLASSES)}")


def cmd_radius(args, cfg) -> int:
    _emit_json(build_radius_report(args, cfg).to_dict(), args.out)
    return 0


def cmd_thresholds(args, cfg) -> int:
    rec = region.inclusion_thresholds(region.Sigma(args.sigma))
    families = {f: radii.family_threshold(f, args.n or 2) for f in radii.THRESHOLD_FAMILIES}
    _emit_json({**rec.__dict__, "families": families}, args.out)
    return 0


def _parse_coeffs(params: list[str]) -> criteria.CoeffList:
    vals = []
    for p in params:
        for tok in p.replace(" ", "").split(","):
            if tok:
                vals.append(complex(tok.replace("i", "j")))
    return criteria.CoeffList(vals)


def cmd_check(args, cfg) -> int:
    """Inscribed disc (``--c``) or coefficient criteria (``--param a2,a3,...``)."""
    if args.c is not None:
        disc = region.inscribed_radius(region.Sigma(args.sigma), args.c, cfg)
        _emit_json({"sigma": abs(args.sigma), "c": args.c, "radius": disc.radius}, args.out)
        return 0
    if not args.param:
        raise UsageError("check needs --c or --param a2,a3,...")
    cl = _parse_coeffs(args.param)
    t = args.samples or 720
    conv = criteria.convolution_nonvanishing(cl, t_samples=t)
    suff, worst = criteria.coeff_sufficient(cl, t)
    l2, lhs, rhs = criteria.coeff_l2_check(cl)
    _emit_json({
        "coefficients": list(cl.a),
        "convolution": {**conv.to_dict(), **conv.details},
        "sufficient": {"pass": suff, "worst_sum": worst},
        "l2": {"pass": l2, "lhs": lhs, "rhs": rhs},
    }, args.out)
    return 0 if conv.passed and l2 else 1


def _family_spec(args) -> series.FamilySpec:
    kw = {}
    for p in args.param or []:
        for tok in p.split(","):
            if not tok:
                continue
            if "=" not in tok:
                raise UsageError(f"--param for a family takes key=value, got {tok!r}")
            key, val = tok.split("=", 1)
            if key not in ("n", "a", "A", "B", "beta"):
                raise UsageError(f"unknown family parameter {key!r}")
            kw[key] = int(val) if key == "n" else (complex(val.replace("i", "j")) if key == "a" else float(val))
    for key in ("n", "A", "B", "beta"):
        if getattr(args, key) is not None:
            kw[key] = getattr(args, key)
    return series.FamilySpec(args.family, **kw)


def cmd_verify(args, cfg) -> int:
    angles = args.samples or 1024
    plan = verify.SamplingPlan(angles=angles, margin_in=args.tol if args.tol is not None else 1e-9)
    if args.family:
        rep = verify.verify_subordination(_family_spec(args), args.sigma, plan)
        what = {"family": _family_spec(args).label}
    elif args.kappa is not None:
        rep = verify.verify_region_inclusion(verify.SqrtKappa(args.kappa), args.sigma, plan)
        what = {"shape": f"SqrtKappa({args.kappa!r})"}
    elif args.klass:
        report = build_radius_report(args, cfg)
        rep = verify.sharpness_probe(report, plan)
        what = {"radius": report.to_dict(), "probe": rep.details}
    else:
        raise UsageError("verify needs --family, --kappa or --class")
    _emit_json({**what, **rep.to_dict()}, args.out)
    return 0 if rep.passed else 1


# --- figures -------------------------------------------------------------

def _gc_rows(samples: int) -> tuple[list[str], np.ndarray]:
    cs = (0.6, 1.04, 1.042, 1.5)
    tau = np.linspace(0, np.pi / 2, samples)
    cols = [tau] + [region.distance_sq(1.0, c, tau) for c in cs]
    return ["tau"] + [f"G_{c:g}" for c in cs], np.column_stack(cols)


def inclusion_curves(samples: int) -> dict:
    """Curves of the inclusion figure for sigma = 1, keyed by legend label."""
    t = -np.pi + 2 * np.pi * np.arange(samples) / samples
    y = np.linspace(-0.7, 0.7, samples)
    gamma0, _ = region.st_p_gamma()
    beta = region.max_argument(1.0)[0]
    s = np.linspace(0, 2, samples)
    k = C1 / (C1 - 1)
    mid, half = 0.5 * (C0 + C1), 0.5 * (C1 - C0)
    s0 = math.log(1 / C0) / math.log(2)
    th = t[np.abs(t) > 0.25]
    hpl = (1 - np.exp(1j * th)) ** (-s0)
    x, yy = region.boundary_xy(1.0, t)
    return {
        "g1_region": x + 1j * yy,
        "g2_re_c0": C0 + 1j * y,
        "g3_arg_upper": s * np.exp(1j * beta),
        "g3_arg_lower": s * np.exp(-1j * beta),
        "g4_re_c1": C1 + 1j * y,
        "g5_sqrt_kappa": verify.SqrtKappa(1 - C0**2).boundary(t),
        "g6_ellipse_k": verify.EllipseK(k).boundary(t),
        "g7_outer_ellipse": mid + half * np.cos(t) + 0.65j * np.sin(t),
        "g8_parabola": y**2 / (4 * gamma0) + 1j * y,
        "g9_hpl": hpl[np.abs(hpl) < 3],
    }


def _svg(curves: dict, width: int = 640, height: int = 480) -> str:
    pts = np.concatenate(list(curves.values()))
    x0, x1 = float(pts.real.min()), float(pts.real.max())
    y0, y1 = float(pts.imag.min()), float(pts.imag.max())
    sx = (width - 20) / max(x1 - x0, 1e-12)
    sy = (height - 20) / max(y1 - y0, 1e-12)
    sc = min(sx, sy)
    lines = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">']
    for name, c in curves.items():
        xs = 10 + (c.real - x0) * sc
        ys = height - 10 - (c.imag - y0) * sc
        pl = " ".join(f"{a:.3f},{b:.3f}" for a, b in zip(xs, ys))
        lines.append(f'<polyline id="{name}" fill="none" stroke="black" stroke-width="1" points="{pl}"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def cmd_figure(args, cfg) -> int:
    name, samples = args.name, args.samples or 512
    svg = bool(args.out and args.out.endswith(".svg"))
    if name == "region":
        t, x, y = region.boundary_samples(region.Sigma(args.sigma), samples)
        curves = {"region": x + 1j * y}
        csv = region.boundary_csv(region.Sigma(args.sigma), samples)
    elif name == "gc":
        header, data = _gc_rows(samples)
        curves = {h: data[:, 0] + 1j * data[:, i] for i, h in enumerate(header) if i}
        csv = ",".join(header) + "\n" + "".join(",".join(_num(v) for v in row) + "\n" for row in data)
    elif name == "inclusions":
        curves = inclusion_curves(samples)
        rows = ["curve,k,x,y"]
        for label, c in curves.items():
            rows += [f"{label},{i},{_num(v.real)},{_num(v.imag)}" for i, v in enumerate(c)]
        csv = "\n".join(rows) + "\n"
    else:
        raise UsageError("figure needs --name region|gc|inclusions")
    _emit(_svg(curves) if svg else csv, args.out)
    return 0


def cmd_suite(args, cfg) -> int:
    results = acceptance.run_all()
    for r in results:
        print(r.line(), file=sys.stderr)
    ok = all(r.passed for r in results)
    _emit_json({"pass": ok, "criteria": [r.to_dict() for r in results]}, args.out)
    return 0 if ok else 1


VERBS = {
    "constants": cmd_constants, "boundary": cmd_boundary, "radius": cmd_radius,
    "thresholds": cmd_thresholds, "check": cmd_check, "verify": cmd_verify,
    "figure": cmd_figure, "suite": cmd_suite,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="srho", description=__doc__.splitlines()[0])
    p.add_argument("verb", choices=sorted(VERBS))
    p.add_argument("--sigma", type=float, default=1.0)
    p.add_argument("--c", type=float)
    p.add_argument("--zeta", type=float)
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--A", type=float)
    p.add_argument("--B", type=float)
    p.add_argument("--n", type=int)
    p.add_argument("--kappa", type=float)
    p.add_argument("--class", dest="klass")
    p.add_argument("--family", choices=series.FAMILIES)
    p.add_argument("--param", action="append", help="coefficients a2,a3,... or key=value pairs")
    p.add_argument("--name", choices=("region", "gc", "inclusions"))
    p.add_argument("--out")
    p.add_argument("--samples", type=int)
    p.add_argument("--tol", type=float)
    return p


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.samples is not None and args.samples < 1:
            raise UsageError("--samples must be positive")
        try:
            cfg = NumericConfig.from_env()
        except ValueError as exc:
            raise UsageError(f"SRHO_GRID_N: {exc}") from None
        return VERBS[args.verb](args, cfg)
    except UsageError as exc:
        print(f"srho: usage error: {exc}", file=sys.stderr)
        return 2
    except SrhoError as exc:
        print(f"srho: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
