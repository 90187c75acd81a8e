"""Command-line interface: solve, fit, tabulate and render to SVG/PNG.

Subcommands:

* ``scurve``  JSON tangent pair in, SolverResult JSON out.
* ``spline``  JSON interpolation problem in, SplineFit JSON out.
* ``table``   CSV sweep of (gamma, G, sigma, lambda) over the gamma domain,
              optionally plotted to a PNG figure.
* ``render``  curve JSON in, standalone SVG out (optional PNG twin).

Exit codes: 0 success, 1 malformed input, 2 infeasible configuration or
failed fit.  Output is deterministic for identical inputs (the spline
restarts are seeded).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from . import scurve
from .geometry import PiecewiseCurve, UnitTangent, feasible
from .spline import FitError, FitOptions, SplineProblem, fit
from .scurve import FeasibilityError, GammaDomain


@dataclass(frozen=True)
class RenderStyle:
    stroke_width: float = 0.02
    samples: int = 64
    show_tangents: bool = False
    show_inflection: bool = False
    padding: float = 0.1

    def __post_init__(self):
        if self.samples < 2:
            raise ValueError("samples must be at least 2")
        if not self.stroke_width > 0:
            raise ValueError("stroke width must be positive")


def _read_input(path: str) -> dict:
    text = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    return json.loads(text)


def _write_output(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_unit_tangent(data: dict) -> UnitTangent:
    return UnitTangent.from_dict(data)


def _fmt(value: float) -> str:
    return format(value, ".17g")


# --- scurve ------------------------------------------------------------------


def _cmd_scurve(args) -> int:
    data = _read_input(args.input)
    u = _parse_unit_tangent(data["u"])
    v = _parse_unit_tangent(data["v"])
    result = scurve.solve(u, v)
    _write_output(json.dumps(result.to_dict(), indent=2), args.output)
    return 0


# --- spline ------------------------------------------------------------------


def _problem_from_dict(data: dict) -> SplineProblem:
    points = tuple(complex(p[0], p[1]) for p in data["points"])
    fixed = data.get("fixed_dirs")
    if fixed is not None:
        fixed = tuple(None if d is None else complex(d[0], d[1]) for d in fixed)
    return SplineProblem(points, fixed, bool(data.get("closed", False)))


def _cmd_spline(args) -> int:
    data = _read_input(args.input)
    problem = _problem_from_dict(data)
    opts = FitOptions(tol=args.tol, max_iters=args.max_iters,
                      restarts=args.restarts, seed=args.seed)
    result = fit(problem, opts)
    payload = result.to_dict()
    if args.verbose:
        for i, e in enumerate(result.trace):
            print(f"# trace[{i}] = {_fmt(e)}", file=sys.stderr)
    _write_output(json.dumps(payload, indent=2), args.output)
    return 0


# --- table -------------------------------------------------------------------


def _cmd_table(args) -> int:
    alpha, beta, n = args.alpha, args.beta, args.rows
    if not feasible(alpha, beta):
        raise FeasibilityError(alpha, beta)
    if alpha <= 0.0:
        raise ValueError("alpha must be positive for a gamma sweep")
    dom = GammaDomain.for_config(alpha, beta)
    if dom.is_singleton or n == 1:
        gammas = [dom.lo]
    else:
        hi = dom.clipped_hi()
        gammas = [dom.lo + (hi - dom.lo) * i / (n - 1) for i in range(n)]
    lines = ["gamma,G,sigma,lambda"]
    rows = []
    for g in gammas:
        row = (g, scurve.G(g, alpha, beta), scurve.sigma(g, alpha, beta),
               scurve.lambda_(g, alpha, beta))
        rows.append(row)
        lines.append(",".join(_fmt(x) for x in row))
    _write_output("\n".join(lines) + "\n", args.output)
    if args.plot:
        _plot_table(rows, alpha, beta, args.plot)
    return 0


def _plot_table(rows, alpha: float, beta: float, path: str) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    gs = [r[0] for r in rows]
    fig, axes = plt.subplots(3, 1, sharex=True, figsize=(6, 7))
    for ax, idx, label in zip(axes, (1, 2, 3), ("G", "sigma", "lambda")):
        ax.plot(gs, [r[idx] for r in rows])
        ax.set_ylabel(label)
        ax.grid(True, alpha=0.3)
    axes[1].axhline(0.0, color="k", lw=0.5)
    axes[-1].set_xlabel("gamma")
    axes[0].set_title(f"alpha={alpha:.6g}, beta={beta:.6g}")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


# --- render ------------------------------------------------------------------


def _curve_from_payload(data: dict) -> PiecewiseCurve:
    if "curve" in data:
        data = data["curve"]
    return PiecewiseCurve.from_dict(data)


def _svg_coord(z: complex) -> tuple[float, float]:
    return z.real, -z.imag  # SVG's y axis points down


def _svg_num(x: float) -> str:
    return format(x, ".10g")


def curve_to_svg(curve: PiecewiseCurve, style: RenderStyle) -> str:
    """Standalone SVG 1.1 document; byte-identical for identical inputs."""
    polylines = []
    pts_all = []
    for seg in curve.segments:
        pts = PiecewiseCurve((seg,)).sample(style.samples)
        polylines.append([_svg_coord(p) for p in pts])
        pts_all.extend(polylines[-1])

    markers = []
    if style.show_inflection:
        for seg in curve.segments:
            if hasattr(seg, "map"):
                k_lo = math.ceil(seg.t0 / math.pi)
                k_hi = math.floor(seg.t1 / math.pi)
                for k in range(k_lo, k_hi + 1):
                    t = k * math.pi
                    if seg.t0 < t < seg.t1:
                        markers.append(_svg_coord(seg.point_at(t)))

    arrows = []
    if style.show_tangents:
        for ut in (curve.start_tangent(), curve.end_tangent()):
            arrows.append((_svg_coord(ut.pos), _svg_coord(ut.pos + 0.15 * ut.dir)))
            pts_all.extend(arrows[-1])

    xs = [p[0] for p in pts_all]
    ys = [p[1] for p in pts_all]
    pad = style.padding
    x0, y0 = min(xs) - pad, min(ys) - pad
    w = max(xs) - min(xs) + 2 * pad
    h = max(ys) - min(ys) + 2 * pad

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_svg_num(x0)} {_svg_num(y0)} {_svg_num(w)} {_svg_num(h)}">',
    ]
    for pts in polylines:
        d = "M " + " L ".join(f"{_svg_num(x)},{_svg_num(y)}" for x, y in pts)
        parts.append(
            f'<path fill="none" stroke="#1f3a5f" '
            f'stroke-width="{_svg_num(style.stroke_width)}" d="{d}"/>'
        )
    for (x1, y1), (x2, y2) in arrows:
        parts.append(
            f'<line stroke="#b23b3b" stroke-width="{_svg_num(style.stroke_width)}" '
            f'x1="{_svg_num(x1)}" y1="{_svg_num(y1)}" '
            f'x2="{_svg_num(x2)}" y2="{_svg_num(y2)}"/>'
        )
    for x, y in markers:
        parts.append(
            f'<circle fill="#b23b3b" cx="{_svg_num(x)}" cy="{_svg_num(y)}" '
            f'r="{_svg_num(2.0 * style.stroke_width)}"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _cmd_render(args) -> int:
    data = _read_input(args.input)
    curve = _curve_from_payload(data)
    style = RenderStyle(
        stroke_width=args.stroke_width,
        samples=args.samples,
        show_tangents=args.show_tangents,
        show_inflection=args.show_inflections,
        padding=args.padding,
    )
    _write_output(curve_to_svg(curve, style), args.output)
    if args.png:
        _render_png(curve, style, args.png)
    return 0


def _render_png(curve: PiecewiseCurve, style: RenderStyle, path: str) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 6))
    for seg in curve.segments:
        pts = PiecewiseCurve((seg,)).sample(style.samples)
        ax.plot([p.real for p in pts], [p.imag for p in pts], color="#1f3a5f")
    ax.set_aspect("equal")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


# --- parser ------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minbend",
        description="Minimal bending-energy s-curves and elastic splines.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("scurve", help="solve one tangent pair")
    p.add_argument("--input", default="-", help="JSON file with {u, v} ('-' = stdin)")
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_scurve)

    p = sub.add_parser("spline", help="fit an elastic spline through points")
    p.add_argument("--input", default="-", help="JSON problem file ('-' = stdin)")
    p.add_argument("--output", default=None)
    p.add_argument("--tol", type=float, default=FitOptions.tol)
    p.add_argument("--max-iters", type=int, default=FitOptions.max_iters)
    p.add_argument("--restarts", type=int, default=FitOptions.restarts)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--verbose", action="store_true", help="print the energy trace")
    p.set_defaults(func=_cmd_spline)

    p = sub.add_parser("table", help="tabulate G, sigma, lambda over gamma")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("-n", "--rows", type=int, default=100)
    p.add_argument("--output", default=None)
    p.add_argument("--plot", default=None, help="write a PNG figure of the sweep")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("render", help="render curve JSON to SVG")
    p.add_argument("--input", default="-", help="curve or SolverResult JSON")
    p.add_argument("--output", default=None)
    p.add_argument("--stroke-width", type=float, default=RenderStyle.stroke_width)
    p.add_argument("--samples", type=int, default=RenderStyle.samples)
    p.add_argument("--show-tangents", action="store_true")
    p.add_argument("--show-inflections", action="store_true")
    p.add_argument("--padding", type=float, default=RenderStyle.padding)
    p.add_argument("--png", default=None, help="also rasterize with matplotlib")
    p.set_defaults(func=_cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FeasibilityError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 2
    except FitError as exc:
        print(f"fit failed: {exc}", file=sys.stderr)
        print(json.dumps(exc.report, indent=2), file=sys.stderr)
        return 2
    except (json.JSONDecodeError, KeyError, TypeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
