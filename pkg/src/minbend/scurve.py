"""Minimal bending-energy s-curve between two unit tangent vectors.

Working in the canonical frame (u at the origin with direction angle
alpha, v at 1 with direction angle beta, alpha in (0, pi), |beta| <=
alpha, beta >= alpha - pi), the solver dispatches on the configuration:

* beta = alpha - pi: the curve is a scaled u-turn of the model elastica
  followed by a straight connector ("second form").
* beta >= 0, or beta < 0 with sigma(beta) >= 0: minimize the energy
  lower bound G over the inflection-direction domain; the minimizer
  yields either a single elastica arc ("first form") or, at the
  u-turn endpoint of the domain, a second-form curve.
* beta < 0 with sigma(beta) <= 0: the optimum is a single right-turning
  arc found by a ray construction on the model curve extended by the
  positive real axis.

G, sigma and lambda are tied together by dG/dgamma = sigma / lambda^2,
which is what the minimizer exploits: interior minima are roots of
sigma, polished by bracketed root finding.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from . import elastica
from .geometry import (
    CanonicalConfig,
    ElasticaArc,
    LineSegment,
    PiecewiseCurve,
    Similarity,
    UnitTangent,
    canonicalize,
    feasible,
)
from .tolerances import TOL

__all__ = [
    "CASE_TRIVIAL_LINE",
    "CASE_SECOND_FORM",
    "CASE_FIRST_FORM_INTERIOR",
    "CASE_FIRST_FORM_RIGHT_C",
    "CASE_C_CURVE",
    "FeasibilityError",
    "GammaDomain",
    "Diagnostics",
    "SolverResult",
    "y1",
    "y2",
    "G",
    "sigma",
    "lambda_",
    "minimize_G",
    "build_first_form",
    "build_second_form",
    "solve_case_c",
    "min_energy",
    "solve",
]

PI = math.pi

CASE_TRIVIAL_LINE = "trivial_line"
CASE_SECOND_FORM = "second_form"
CASE_FIRST_FORM_INTERIOR = "first_form_interior"
CASE_FIRST_FORM_RIGHT_C = "first_form_right_c"
CASE_C_CURVE = "c_curve_case_c"


class FeasibilityError(ValueError):
    """No s-curve connects the given tangents (alpha >= pi or beta < alpha - pi)."""

    def __init__(self, alpha: float, beta: float):
        self.alpha = alpha
        self.beta = beta
        super().__init__(
            f"no s-curve exists for alpha={alpha!r}, beta={beta!r} "
            f"(needs alpha < pi and beta >= alpha - pi)"
        )


@dataclass(frozen=True)
class GammaDomain:
    """Domain of candidate inflection directions for a right-left s-curve."""

    lo: float
    hi: float
    hi_open: bool

    @classmethod
    def for_config(cls, alpha: float, beta: float) -> "GammaDomain":
        lo = alpha - PI
        if beta < 0.0:
            return cls(lo, beta, False)
        return cls(lo, 0.0, True)

    @property
    def is_singleton(self) -> bool:
        return not self.hi_open and self.hi <= self.lo + TOL.boundary_band

    def clipped_hi(self) -> float:
        if not self.hi_open:
            return self.hi
        clipped = self.hi - TOL.gamma_open_gap
        if clipped <= self.lo:
            # Domain narrower than the clip gap (alpha within ~1e-9 of pi):
            # stay inside it proportionally instead of crossing the far end.
            clipped = self.lo + 0.5 * (self.hi - self.lo)
        return clipped

    def grid(self, n: int) -> np.ndarray:
        return np.linspace(self.lo, self.clipped_hi(), n)


def _check_gamma(gamma: float, alpha: float, beta: float) -> None:
    if alpha - gamma < -1e-12 or alpha - gamma > PI + 1e-12:
        raise ValueError(f"gamma={gamma!r} puts alpha - gamma outside [0, pi]")
    if beta - gamma < -1e-12 or beta - gamma > PI + 1e-12:
        raise ValueError(f"gamma={gamma!r} puts beta - gamma outside [0, pi]")


def y1(gamma: float, alpha: float) -> float:
    """Bending energy of the entry arc: half integral of sqrt(sin) up to alpha - gamma."""
    lim = alpha - gamma
    if lim < -1e-12 or lim > PI + 1e-12:
        raise ValueError(f"alpha - gamma = {lim!r} outside [0, pi]")
    return elastica.half_sqrt_sin_integral(min(max(lim, 0.0), PI))

def y2(gamma: float, beta: float) -> float:
    """Bending energy of the exit arc: half integral of sqrt(sin) up to beta - gamma."""
    lim = beta - gamma
    if lim < -1e-12 or lim > PI + 1e-12:
        raise ValueError(f"beta - gamma = {lim!r} outside [0, pi]")
    return elastica.half_sqrt_sin_integral(min(max(lim, 0.0), PI))


def _ys(gamma: float, alpha: float, beta: float) -> float:
    total = y1(gamma, alpha) + y2(gamma, beta)
    if total <= 0.0:
        raise ValueError("y1 + y2 must be positive")
    return total


def G(gamma: float, alpha: float, beta: float) -> float:
    """Lower bound on the bending energy of s-curves with inflection direction gamma."""
    _check_gamma(gamma, alpha, beta)
    if gamma >= 0.0:
        raise ValueError(f"gamma must be negative, got {gamma!r}")
    return _ys(gamma, alpha, beta) ** 2 / (-math.sin(gamma))


def sigma(gamma: float, alpha: float, beta: float) -> float:
    """Signed closing distance between the two optimal arcs along the inflection line."""
    _check_gamma(gamma, alpha, beta)
    if gamma >= 0.0:
        raise ValueError(f"gamma must be negative, got {gamma!r}")
    ys = _ys(gamma, alpha, beta)
    root_a = math.sqrt(max(math.sin(alpha - gamma), 0.0))
    root_b = math.sqrt(max(math.sin(beta - gamma), 0.0))
    return math.cos(gamma) + math.sin(gamma) / ys * (root_a + root_b)


def lambda_(gamma: float, alpha: float, beta: float) -> float:
    """Dilation factor of the optimal arcs for inflection direction gamma."""
    _check_gamma(gamma, alpha, beta)
    if gamma >= 0.0:
        raise ValueError(f"gamma must be negative, got {gamma!r}")
    return -math.sin(gamma) / _ys(gamma, alpha, beta)


def _sigma_many(gammas: np.ndarray, alpha: float, beta: float) -> np.ndarray:
    ys = (elastica.half_sqrt_sin_many(alpha - gammas)
          + elastica.half_sqrt_sin_many(beta - gammas))
    roots = (np.sqrt(np.maximum(np.sin(alpha - gammas), 0.0))
             + np.sqrt(np.maximum(np.sin(beta - gammas), 0.0)))
    return np.cos(gammas) + np.sin(gammas) / ys * roots


def _G_many(gammas: np.ndarray, alpha: float, beta: float) -> np.ndarray:
    ys = (elastica.half_sqrt_sin_many(alpha - gammas)
          + elastica.half_sqrt_sin_many(beta - gammas))
    return ys ** 2 / (-np.sin(gammas))


def _sigma_fast(gamma: float, alpha: float, beta: float) -> float:
    ys = elastica._h_fast(alpha - gamma) + elastica._h_fast(beta - gamma)
    roots = (math.sqrt(max(math.sin(alpha - gamma), 0.0))
             + math.sqrt(max(math.sin(beta - gamma), 0.0)))
    return math.cos(gamma) + math.sin(gamma) / ys * roots


def _G_fast(gamma: float, alpha: float, beta: float) -> float:
    ys = elastica._h_fast(alpha - gamma) + elastica._h_fast(beta - gamma)
    return ys * ys / (-math.sin(gamma))


@dataclass(frozen=True)
class Diagnostics:
    """Solver internals reported beside the curve."""

    alpha: float
    beta: float
    g_min: float | None = None
    sigma_star: float | None = None
    lambda_star: float | None = None
    sigma_beta: float | None = None
    minimizers: tuple[float, ...] | None = None

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "G_min": self.g_min,
            "sigma": self.sigma_star,
            "lambda": self.lambda_star,
            "sigma_beta": self.sigma_beta,
            "minimizers": list(self.minimizers) if self.minimizers is not None else None,
        }


@dataclass(frozen=True)
class SolverResult:
    """Optimal curve in world coordinates plus case diagnostics.

    ``gamma_star`` and ``t_params`` refer to the canonical frame; energy is
    the world-frame bending energy and always equals ``curve.energy()``.
    """

    curve: PiecewiseCurve
    energy: float
    case_tag: str
    gamma_star: float | None
    t_params: tuple[float, float] | None
    diagnostics: Diagnostics

    def to_dict(self) -> dict:
        return {
            "curve": self.curve.to_dict(),
            "energy": self.energy,
            "case_tag": self.case_tag,
            "gamma_star": self.gamma_star,
            "t_params": list(self.t_params) if self.t_params is not None else None,
            "diagnostics": self.diagnostics.to_dict(),
        }


def _minimize(alpha: float, beta: float) -> tuple[float, float, tuple[float, ...]]:
    """Global minimum of G over the gamma domain.

    Scans sigma on a coarse grid, polishes every sign change with brentq
    (dG/dgamma = sigma/lambda^2 shares its roots with sigma), adds both
    domain endpoints and a polished grid argmin, and compares G directly.
    Ties are resolved toward the smallest gamma.
    """
    dom = GammaDomain.for_config(alpha, beta)
    if dom.is_singleton:
        g0 = dom.lo
        return g0, G(g0, alpha, beta), (g0,)
    grid = dom.grid(TOL.scan_points)
    ys = (elastica.half_sqrt_sin_many(alpha - grid)
          + elastica.half_sqrt_sin_many(beta - grid))
    roots = (np.sqrt(np.maximum(np.sin(alpha - grid), 0.0))
             + np.sqrt(np.maximum(np.sin(beta - grid), 0.0)))
    sig = np.cos(grid) + np.sin(grid) / ys * roots
    gvals = ys * ys / (-np.sin(grid))
    candidates = [dom.lo]
    if not dom.hi_open:
        candidates.append(dom.hi)
    f = lambda g: _sigma_fast(g, alpha, beta)
    for i in np.nonzero(np.sign(sig[:-1]) != np.sign(sig[1:]))[0]:
        a, b = float(grid[i]), float(grid[i + 1])
        try:
            candidates.append(brentq(f, a, b, xtol=1e-14, rtol=8.9e-16))
        except ValueError:
            continue
    values = [_G_fast(c, alpha, beta) for c in candidates]
    g_min = min(values)
    band = abs(g_min) * TOL.min_tie_rel
    # Safety net for minima the sign-change scan cannot see (tangential roots
    # of sigma): when the grid dips below every endpoint and polished root,
    # refine its argmin by value and keep the refinement only if it wins.
    i0 = int(np.argmin(gvals))
    if float(gvals[i0]) < g_min - band:
        lo_b = float(grid[max(i0 - 1, 0)])
        hi_b = float(grid[min(i0 + 1, len(grid) - 1)])
        res = minimize_scalar(lambda g: _G_fast(g, alpha, beta), bounds=(lo_b, hi_b),
                              method="bounded", options={"xatol": 1e-12})
        extra, extra_val = float(res.x), float(res.fun)
        if extra_val < g_min - band:
            candidates.append(extra)
            values.append(extra_val)
            g_min = extra_val
            band = abs(g_min) * TOL.min_tie_rel
    mins = sorted({round(c, 14) for c, v in zip(candidates, values) if v <= g_min + band})
    return mins[0], g_min, tuple(mins)


def minimize_G(alpha: float, beta: float) -> tuple[float, float]:
    """Minimizing inflection direction gamma* and the minimum value G_min."""
    if alpha <= 0.0:
        raise ValueError("alpha must be positive")
    if not feasible(alpha, beta):
        raise FeasibilityError(alpha, beta)
    g_star, g_min, _ = _minimize(alpha, beta)
    return g_star, g_min


def build_first_form(alpha: float, beta: float, gamma_star: float) -> PiecewiseCurve:
    """Single elastica arc through the canonical pair, for sigma(gamma*) ~ 0.

    The arc is the similarity image of the model curve on [-t1, t2] where
    the entry/exit arcs turn by alpha - gamma* and beta - gamma*; the
    similarity maps the model chord exactly onto [0, 1].
    """
    sig = sigma(gamma_star, alpha, beta)
    if abs(sig) > TOL.sigma_interior:
        raise RuntimeError(
            f"first form needs sigma(gamma*) ~ 0; got {sig!r} at gamma*={gamma_star!r}"
        )
    t1 = elastica.param_from_turning(alpha - gamma_star)
    t2 = elastica.param_from_turning(max(beta - gamma_star, 0.0))
    a0 = elastica.point(-t1)
    a1 = elastica.point(t2)
    arc = ElasticaArc(Similarity.chord_map(a0, a1), -t1, t2)
    return PiecewiseCurve((arc,))


def _sigma_at_uturn(alpha: float, beta: float) -> float:
    # sigma at gamma = alpha - pi with the u-turn term, whose sqrt(sin pi)
    # factor is analytically zero, dropped; floats would otherwise leave a
    # ~1e-8 residue in the endpoint closure.
    gamma = alpha - PI
    ys = elastica.D + elastica.half_sqrt_sin_integral(max(beta - gamma, 0.0))
    return math.cos(gamma) + math.sin(gamma) / ys * math.sqrt(max(math.sin(beta - gamma), 0.0))


def build_second_form(alpha: float, beta: float) -> PiecewiseCurve:
    """U-turn arc, straight connector and exit arc, for gamma* = alpha - pi."""
    gamma = alpha - PI
    sig = _sigma_at_uturn(alpha, beta)
    if sig < -TOL.sigma_interior:
        raise RuntimeError(
            f"second form needs sigma(alpha - pi) >= 0; got {sig!r}"
        )
    sig = max(sig, 0.0)
    span2 = min(max(beta - gamma, 0.0), PI)
    t2 = elastica.param_from_turning(span2)
    lam = elastica.D + elastica.half_sqrt_sin_integral(span2)
    lam = -math.sin(gamma) / lam
    rot = cmath.exp(1j * gamma)
    uturn_map = Similarity(lam, gamma, lam * rot * complex(0.0, elastica.D))
    segments: list = [ElasticaArc(uturn_map, -PI, 0.0)]
    p1 = uturn_map.translation  # image of the model origin: end of the u-turn
    p2 = p1 + sig * rot
    if sig > TOL.line_drop:
        segments.append(LineSegment(p1, p2))
    if t2 > TOL.line_drop:
        segments.append(ElasticaArc(Similarity(lam, gamma, p2), 0.0, t2))
    return PiecewiseCurve(tuple(segments))


# --- case (c): ray construction on the model curve --------------------------

_RAY_CACHE_N = 2048
_RAY_CACHE_S = np.linspace(-PI, 0.0, _RAY_CACHE_N)
_RAY_CACHE_P = None


def _ray_cache() -> tuple[np.ndarray, np.ndarray]:
    # Built on first use; read-only afterwards, so safe to share across threads
    # (a racing double initialization computes identical data).
    global _RAY_CACHE_P
    if _RAY_CACHE_P is None:
        _RAY_CACHE_P = elastica.point_many(_RAY_CACHE_S)
    return _RAY_CACHE_S, _RAY_CACHE_P


def _ray_second_hit(t: float, alpha: float) -> tuple[float, float]:
    """Far intersection of the chord ray from E(t) with the extended model curve.

    The ray leaves E(t) rotated clockwise by alpha from the tangent.  The
    extended curve is E on [-pi, 0] continued by the positive real axis.
    Returns (eta, mu): the ray's direction angle and the intersection
    parameter (mu > 0 addresses the axis point (mu, 0)).
    """
    origin = elastica._point_fast(t)
    eta = elastica.tangent_angle(t) - alpha
    dhat = cmath.exp(1j * eta)
    dconj = dhat.conjugate()

    def off(s: float) -> float:
        return ((elastica._point_fast(s) - origin) * dconj).imag

    def off_rate(s: float) -> float:
        s2 = math.sin(s) ** 2
        velocity = complex(math.cos(s), s2 / math.sqrt(1.0 + s2))
        return (velocity * dconj).imag

    s_all, p_all = _ray_cache()
    i0 = int(np.searchsorted(s_all, t, side="right"))
    s = s_all[i0:]
    if len(s):
        values = ((p_all[i0:] - origin) * dconj).imag
        hit = np.nonzero(values <= 0.0)[0]
        if len(hit):
            j = int(hit[0])
            if values[j] == 0.0:
                return eta, float(s[j])
            # The curve leaves the ray on the positive side, so just past t the
            # offset is positive and [lo, s[j]] brackets the first crossing.
            lo = float(s[j - 1]) if j > 0 else t + 1e-10 * (1.0 + abs(t))
            hi = float(s[j])
            # Safeguarded Newton from the secant estimate; the bracket is one
            # cache cell wide, so a few steps reach full precision.
            olo = off(lo)
            if olo <= 0.0:
                return eta, lo  # crossing indistinguishable from t itself
            mu = lo + olo / (olo - float(values[j])) * (hi - lo)
            for _ in range(60):
                val = off(mu)
                if val > 0.0:
                    lo = mu
                elif val < 0.0:
                    hi = mu
                else:
                    break
                rate = off_rate(mu)
                step_to = mu - val / rate if rate != 0.0 else lo
                if not (lo < step_to < hi):
                    step_to = 0.5 * (lo + hi)
                if abs(step_to - mu) < TOL.param_bisect:
                    mu = step_to
                    break
                mu = step_to
            return eta, float(mu)
    # No crossing on the arc: the ray exits through the positive real axis.
    if dhat.imag <= 0.0:  # pragma: no cover - excluded by eta in (0, pi)
        raise RuntimeError("ray unexpectedly parallel to the axis")
    x = origin.real - dhat.real / dhat.imag * origin.imag
    return eta, float(max(x, 0.0))


def _case_c_angle(t: float, alpha: float) -> float:
    """Interior angle at the far intersection (0 on the axis tail means eta)."""
    eta, mu = _ray_second_hit(t, alpha)
    tau_mu = elastica.tangent_angle(mu) if mu <= 0.0 else 0.0
    return eta - tau_mu


def _case_c_params(alpha: float, beta: float) -> tuple[float, float]:
    """Model parameters (t1, t2) of the single-arc optimum for case (c)."""
    delta = -beta
    b = brentq(lambda t: elastica.tangent_angle(t) - alpha, -PI, 0.0,
               xtol=TOL.param_bisect, rtol=8.9e-16)
    lo = -PI + TOL.gamma_open_gap
    hi = b - TOL.gamma_open_gap
    f = lambda t: _case_c_angle(t, alpha) - delta
    flo, fhi = f(lo), f(hi)
    if flo <= 0.0 or fhi >= 0.0:
        # The analytic bracket failed at floating point; rescan densely.
        ts = np.linspace(lo, hi, 256)
        vals = np.array([f(t) for t in ts])
        idx = np.nonzero(vals <= 0.0)[0]
        if not len(idx) or idx[0] == 0:
            raise RuntimeError(
                f"no bracket for the chord-angle bisection (alpha={alpha!r}, beta={beta!r})"
            )
        lo, hi = float(ts[idx[0] - 1]), float(ts[idx[0]])
    t1 = brentq(f, lo, hi, xtol=TOL.param_bisect, rtol=8.9e-16)
    _, t2 = _ray_second_hit(t1, alpha)
    if t2 > 1e-6:
        raise RuntimeError(
            f"case (c) produced t2={t2!r} > 0, violating the single-arc construction"
        )
    return t1, min(t2, 0.0)


def solve_case_c(alpha: float, beta: float) -> PiecewiseCurve:
    """Single right-turning arc for beta < 0 with sigma(beta) <= 0."""
    if not beta < 0.0:
        raise ValueError("case (c) requires beta < 0")
    t1, t2 = _case_c_params(alpha, beta)
    a0 = elastica.point(t1)
    a1 = elastica.point(t2)
    arc = ElasticaArc(Similarity.chord_map(a0, a1), t1, t2)
    return PiecewiseCurve((arc,))


# --- dispatch ----------------------------------------------------------------


def _canonical_energy_case_c(alpha: float, beta: float) -> float:
    t1, t2 = _case_c_params(alpha, beta)
    pts = elastica.point_many(np.array([t1, t2]))
    return abs(pts[1] - pts[0]) * float(elastica.xi_many(t2) - elastica.xi_many(t1))


def _classify(alpha: float, beta: float) -> str:
    """Case tag of the canonical configuration (feasible, alpha > trivial)."""
    if beta <= alpha - PI + TOL.boundary_band:
        return CASE_SECOND_FORM
    if beta < 0.0 and _sigma_fast(beta, alpha, beta) < -TOL.sigma_boundary:
        return CASE_C_CURVE
    return "minimize"


def _solve_canonical(alpha: float, beta: float):
    """Curve + diagnostics in the canonical frame."""
    sigma_beta = sigma(beta, alpha, beta) if (beta < 0.0 and
                                              beta > alpha - PI + TOL.boundary_band) else None
    case = _classify(alpha, beta)
    if case == CASE_SECOND_FORM:
        gamma_star = alpha - PI
        g_min = G(gamma_star, alpha, alpha - PI)
        curve = build_second_form(alpha, alpha - PI)
        diag = Diagnostics(alpha, beta, g_min, _sigma_at_uturn(alpha, alpha - PI),
                           lambda_(gamma_star, alpha, alpha - PI), sigma_beta,
                           (gamma_star,))
        return curve, CASE_SECOND_FORM, gamma_star, None, diag
    if case == CASE_C_CURVE:
        t1, t2 = _case_c_params(alpha, beta)
        a0, a1 = elastica.point(t1), elastica.point(t2)
        curve = PiecewiseCurve((ElasticaArc(Similarity.chord_map(a0, a1), t1, t2),))
        diag = Diagnostics(alpha, beta, sigma_beta=sigma_beta)
        return curve, CASE_C_CURVE, None, (t1, t2), diag
    gamma_star, g_min, minimizers = _minimize(alpha, beta)
    dom = GammaDomain.for_config(alpha, beta)
    if gamma_star <= dom.lo + TOL.boundary_band:
        curve = build_second_form(alpha, beta)
        diag = Diagnostics(alpha, beta, g_min, _sigma_at_uturn(alpha, beta),
                           lambda_(gamma_star, alpha, beta), sigma_beta, minimizers)
        return curve, CASE_SECOND_FORM, gamma_star, None, diag
    if not dom.hi_open and gamma_star >= dom.hi - TOL.boundary_band:
        gamma_star = beta
        tag = CASE_FIRST_FORM_RIGHT_C
    else:
        tag = CASE_FIRST_FORM_INTERIOR
    curve = build_first_form(alpha, beta, gamma_star)
    arc = curve.segments[0]
    diag = Diagnostics(alpha, beta, g_min, sigma(gamma_star, alpha, beta),
                       lambda_(gamma_star, alpha, beta), sigma_beta, minimizers)
    return curve, tag, gamma_star, (arc.t0, arc.t1), diag


def _prepare(u: UnitTangent, v: UnitTangent) -> CanonicalConfig:
    cfg = canonicalize(u, v)
    alpha, beta = cfg.alpha, cfg.beta
    if alpha > TOL.alpha_trivial:
        if alpha >= PI or beta < alpha - PI - TOL.feasibility_slack:
            raise FeasibilityError(alpha, beta)
    return cfg


def solve(u: UnitTangent, v: UnitTangent) -> SolverResult:
    """Minimal bending-energy s-curve connecting u to v, with diagnostics."""
    cfg = _prepare(u, v)
    alpha, beta = cfg.alpha, cfg.beta
    if alpha <= TOL.alpha_trivial:
        curve = PiecewiseCurve((LineSegment(u.pos, v.pos),))
        return SolverResult(curve, 0.0, CASE_TRIVIAL_LINE, None, None,
                            Diagnostics(alpha, beta))
    beta = max(beta, alpha - PI)
    canon, tag, gamma_star, t_params, diag = _solve_canonical(alpha, beta)
    curve = cfg.restore_curve(canon)
    return SolverResult(curve, curve.energy(), tag, gamma_star, t_params, diag)


def min_energy(u: UnitTangent, v: UnitTangent) -> float:
    """World-frame minimal bending energy, skipping curve construction."""
    cfg = _prepare(u, v)
    alpha, beta = cfg.alpha, cfg.beta
    if alpha <= TOL.alpha_trivial:
        return 0.0
    beta = max(beta, alpha - PI)
    case = _classify(alpha, beta)
    if case == CASE_SECOND_FORM:
        energy = G(alpha - PI, alpha, alpha - PI)
    elif case == CASE_C_CURVE:
        energy = _canonical_energy_case_c(alpha, beta)
    else:
        energy = _minimize(alpha, beta)[1]
    return cfg.restore_energy(energy)
