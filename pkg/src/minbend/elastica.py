"""Primitives of the rectangular elastica model curve.

The model curve is E(t) = (sin t, xi(t)) where xi solves

    dxi/dt = sin^2 t / sqrt(1 + sin^2 t),   xi(0) = 0.

E is the planar curve whose signed curvature, as a function of the model
parameter, is 2 sin t; its speed |E'(t)| = 1/sqrt(1 + sin^2 t) never
vanishes.  xi is odd and quasi-periodic: xi(t + pi) = d + xi(t) with
d = xi(pi) ~ 1.19814, which is simultaneously the rise of E per half
period and the bending energy of one half wave.

Scalar functions in this module evaluate integrals with adaptive
Gauss-Kronrod quadrature (scipy.integrate.quad) and are the source of
truth.  The ``*_many`` variants serve the hot paths (solver scans, curve
sampling, bisections): they evaluate Chebyshev interpolants built at
import time from the quadrature route itself (both reduced integrands
are analytic, so the interpolants are machine-accurate); tests pin their
agreement with direct quadrature well below 1e-9.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.integrate import quad
from scipy.special import ellipkinc

from .tolerances import TOL

__all__ = [
    "D",
    "xi",
    "xi_many",
    "point",
    "speed",
    "curvature",
    "unit_tangent",
    "tangent_angle",
    "turning",
    "param_from_turning",
    "segment_energy",
    "half_sqrt_sin_integral",
    "half_sqrt_sin_many",
    "chord_angles",
    "tangent_line_distance",
    "arclength",
]

_SQRT2 = math.sqrt(2.0)


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return value


def _xi_rate(t):
    s2 = np.sin(t) ** 2
    return s2 / np.sqrt(1.0 + s2)


def _xi_quad_upto(r: float) -> float:
    if r == 0.0:
        return 0.0
    val, _ = quad(_xi_rate, 0.0, r, epsabs=1e-12, epsrel=1e-12)
    return val


#: xi(pi): rise per half period of E and bending energy of one half wave.
D: float = _xi_quad_upto(math.pi)


def xi(t: float) -> float:
    """Vertical coordinate of the model curve at parameter ``t``.

    Reduced by oddness/quasi-periodicity to a quadrature over [0, pi);
    absolute accuracy better than 1e-10.
    """
    t = _require_finite("t", t)
    k = math.floor(t / math.pi)
    r = t - k * math.pi
    return k * D + _xi_quad_upto(r)


# Cached accelerator: xi is analytic, so a Chebyshev interpolant of the
# quadrature route on [0, pi] is exact to rounding.
_XI_FIT = np.polynomial.chebyshev.Chebyshev.interpolate(
    lambda ts: np.array([_xi_quad_upto(float(r)) for r in np.atleast_1d(ts)]),
    64,
    domain=[0.0, math.pi],
)


def xi_many(t) -> np.ndarray:
    """Vectorized xi via the cached interpolant (validated against xi())."""
    t = np.asarray(t, dtype=float)
    k = np.floor(t / np.pi)
    r = t - k * np.pi
    return k * D + _XI_FIT(r)


def _clenshaw(coef: tuple[float, ...], lo: float, hi: float, x: float) -> float:
    # Scalar Chebyshev evaluation; the ndarray route costs ~100x in dispatch.
    u = (2.0 * x - lo - hi) / (hi - lo)
    u2 = 2.0 * u
    b1 = b2 = 0.0
    for c in coef[:0:-1]:
        b1, b2 = c + u2 * b1 - b2, b1
    return coef[0] + u * b1 - b2


def _xi_fast(t: float) -> float:
    """Scalar xi via the cached interpolant (internal hot-path variant)."""
    k = math.floor(t / math.pi)
    r = t - k * math.pi
    return k * D + _clenshaw(_XI_COEF, 0.0, math.pi, r)


def _point_fast(t: float) -> complex:
    return complex(math.sin(t), _xi_fast(t))


def point(t: float) -> complex:
    """Position E(t) = sin t + i*xi(t) of the model curve."""
    t = _require_finite("t", t)
    return complex(math.sin(t), xi(t))


def point_many(t) -> np.ndarray:
    """Vectorized E(t) as a complex array (fast evaluator)."""
    t = np.asarray(t, dtype=float)
    return np.sin(t) + 1j * xi_many(t)


def speed(t: float) -> float:
    """|E'(t)| = 1/sqrt(1 + sin^2 t); pi-periodic, in [1/sqrt(2), 1]."""
    t = _require_finite("t", t)
    return 1.0 / math.sqrt(1.0 + math.sin(t) ** 2)


def curvature(t: float) -> float:
    """Signed curvature of the model curve: 2 sin t."""
    t = _require_finite("t", t)
    return 2.0 * math.sin(t)


def unit_tangent(t: float) -> complex:
    """Unit tangent E'(t)/|E'(t)| = cos t*sqrt(1+sin^2 t) + i*sin^2 t."""
    t = _require_finite("t", t)
    s2 = math.sin(t) ** 2
    return complex(math.cos(t) * math.sqrt(1.0 + s2), s2)


def tangent_angle(t: float) -> float:
    """Direction angle of the unit tangent, in [0, pi] for t in [-pi, pi]."""
    w = unit_tangent(t)
    return math.atan2(w.imag, w.real)


def _turn_antideriv(t) -> np.ndarray:
    # Global antiderivative of the turning rate 2 sin t / sqrt(1 + sin^2 t).
    return 2.0 * np.arccos(np.clip(np.cos(t) / _SQRT2, -1.0, 1.0))


def turning(a: float, b: float) -> float:
    """Signed turning angle of the model curve between parameters a and b."""
    a = _require_finite("a", a)
    b = _require_finite("b", b)
    return float(_turn_antideriv(b) - _turn_antideriv(a))


def param_from_turning(delta: float) -> float:
    """Parameter b in [0, pi] with turning(0, b) = delta, for delta in [0, pi].

    Closed-form inverse: b = arccos(sqrt(2) * cos((delta + pi/2)/2)).
    """
    delta = _require_finite("delta", delta)
    if delta < -1e-12 or delta > math.pi + 1e-12:
        raise ValueError(f"turning angle must lie in [0, pi], got {delta!r}")
    delta = min(max(delta, 0.0), math.pi)
    return math.acos(min(max(_SQRT2 * math.cos((delta + math.pi / 2) / 2), -1.0), 1.0))


def segment_energy(a: float, b: float) -> float:
    """Bending energy of the model arc on [a, b]: xi(b) - xi(a), a <= b."""
    a = _require_finite("a", a)
    b = _require_finite("b", b)
    if a > b:
        raise ValueError(f"segment requires a <= b, got a={a!r}, b={b!r}")
    return max(xi(b) - xi(a), 0.0)


def _sqrt_sin_sub(s):
    # sqrt(sin tau) d tau after the substitution tau = s^2 (or tau = pi - s^2).
    return 2.0 * s * np.sqrt(np.maximum(np.sin(s * s), 0.0))


def half_sqrt_sin_integral(delta: float) -> float:
    """(1/2) * integral of sqrt(sin tau) over [0, delta], for delta in [0, pi].

    The integrand has sqrt-type endpoint singularities; substituting
    tau = s^2 near 0 and tau = pi - s^2 near pi makes both pieces smooth
    before applying adaptive quadrature.
    """
    delta = _require_finite("delta", delta)
    if delta < -1e-12 or delta > math.pi + 1e-12:
        raise ValueError(f"delta must lie in [0, pi], got {delta!r}")
    delta = min(max(delta, 0.0), math.pi)
    if delta == 0.0:
        return 0.0
    a = min(delta, math.pi / 2)
    total, _ = quad(_sqrt_sin_sub, 0.0, math.sqrt(a), epsabs=1e-12, epsrel=1e-12)
    if delta > math.pi / 2:
        part, _ = quad(
            _sqrt_sin_sub,
            math.sqrt(math.pi - delta),
            math.sqrt(math.pi / 2),
            epsabs=1e-12,
            epsrel=1e-12,
        )
        total += part
    return 0.5 * total


# Cached accelerator: on [0, pi/2] the integral equals delta^{3/2} * f(delta^2)
# with f analytic, and the two halves mirror (H(pi - d) = D - H(d)), so a
# Chebyshev interpolant of f built from the quadrature route is exact to
# rounding.
def _h_shape(y: np.ndarray) -> np.ndarray:
    out = np.empty_like(np.atleast_1d(y), dtype=float)
    for i, yi in enumerate(np.atleast_1d(y)):
        x = math.sqrt(max(float(yi), 0.0))
        out[i] = 1.0 / 3.0 if x == 0.0 else half_sqrt_sin_integral(x) / x ** 1.5
    return out


_H_FIT = np.polynomial.chebyshev.Chebyshev.interpolate(
    _h_shape, 40, domain=[0.0, (math.pi / 2) ** 2]
)

_XI_COEF = tuple(float(c) for c in _XI_FIT.coef)
_H_COEF = tuple(float(c) for c in _H_FIT.coef)
_H_DOMAIN_HI = (math.pi / 2) ** 2


def half_sqrt_sin_many(delta) -> np.ndarray:
    """Vectorized half_sqrt_sin_integral via the cached interpolant."""
    delta = np.asarray(delta, dtype=float)
    if np.any(delta < -1e-12) or np.any(delta > math.pi + 1e-12):
        raise ValueError("delta values must lie in [0, pi]")
    delta = np.clip(delta, 0.0, math.pi)
    low = np.minimum(delta, math.pi - delta)
    base = _H_FIT(low * low) * low ** 1.5
    return np.where(delta > math.pi / 2, D - base, base)


def _h_fast(delta: float) -> float:
    """Scalar half_sqrt_sin_integral via the cached interpolant (hot paths)."""
    if delta < 0.0:
        delta = 0.0
    elif delta > math.pi:
        delta = math.pi
    low = min(delta, math.pi - delta)
    base = _clenshaw(_H_COEF, 0.0, _H_DOMAIN_HI, low * low) * low ** 1.5
    return D - base if delta > math.pi / 2 else base


def chord_angles(t: float) -> tuple[float, float]:
    """Angles (psi, theta) between the chord [0, E(t)] and the arc tangents.

    psi is measured at the origin against the initial tangent direction of
    the arc on [0, t]; theta at E(t) against the terminal tangent.  Both
    are positive for t in (0, pi], and theta > psi strictly on (0, pi).
    """
    t = _require_finite("t", t)
    if t <= TOL.chord_min_param or t > math.pi + 1e-12:
        raise ValueError(f"chord angles need t in (0, pi], got {t!r}")
    t = min(t, math.pi)
    psi = math.atan2(xi(t), math.sin(t))
    theta = turning(0.0, t) - psi
    return psi, theta


def tangent_line_distance(t: float) -> float:
    """Distance from the origin to the tangent line of E at E(t), t in [0, pi].

    Equals sin^3 t - xi(t) * cos t * sqrt(1 + sin^2 t).
    """
    t = _require_finite("t", t)
    if t < -1e-12 or t > math.pi + 1e-12:
        raise ValueError(f"t must lie in [0, pi], got {t!r}")
    t = min(max(t, 0.0), math.pi)
    s = math.sin(t)
    return s ** 3 - xi(t) * math.cos(t) * math.sqrt(1.0 + s * s)


def _arclength_antideriv(t) -> np.ndarray:
    # Closed form of integral of |E'|: (1/sqrt 2) * F(t - pi/2 | m=1/2).
    return ellipkinc(np.asarray(t, dtype=float) - math.pi / 2, 0.5) / _SQRT2


def arclength(a: float, b: float) -> float:
    """Arc length of the model curve between parameters a and b (a <= b)."""
    a = _require_finite("a", a)
    b = _require_finite("b", b)
    if a > b:
        raise ValueError(f"arclength requires a <= b, got a={a!r}, b={b!r}")
    return float(_arclength_antideriv(b) - _arclength_antideriv(a))


def arclength_antideriv_many(t) -> np.ndarray:
    """Vectorized antiderivative of the model speed (for sampling)."""
    return _arclength_antideriv(t)
