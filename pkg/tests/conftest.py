"""Shared test oracles, independent of the package's own evaluation routes."""

import math

import numpy as np
from scipy.integrate import quad


def oracle_xi(t: float) -> float:
    """Adaptive quadrature of the defining rate sin^2/sqrt(1+sin^2)."""
    val, _ = quad(lambda s: math.sin(s) ** 2 / math.sqrt(1.0 + math.sin(s) ** 2),
                  0.0, t, epsabs=1e-13, epsrel=1e-13, limit=200)
    return val


def oracle_half_sqrt_sin(delta: float) -> float:
    """Half integral of sqrt(sin) with s^2 endpoint substitutions."""
    g = lambda s: 2.0 * s * math.sqrt(max(math.sin(s * s), 0.0))
    total, _ = quad(g, 0.0, math.sqrt(min(delta, math.pi / 2)), epsabs=1e-13)
    if delta > math.pi / 2:
        part, _ = quad(g, math.sqrt(math.pi - delta), math.sqrt(math.pi / 2),
                       epsabs=1e-13)
        total += part
    return 0.5 * total


def reach_bound_margin_exact(t: float) -> float:
    """(2d - xi)^2 - p*xi at parameter t, evaluated in 40-digit arithmetic.

    Near t = pi the margin shrinks like d*(pi-t)^3/3, far below double
    resolution, so the strict inequality check needs extended precision.
    """
    import mpmath as mp

    with mp.workdps(40):
        tm = mp.mpf(t)
        xi = mp.quad(lambda s: mp.sin(s) ** 2 / mp.sqrt(1 + mp.sin(s) ** 2), [0, tm])
        d = mp.quad(lambda s: mp.sin(s) ** 2 / mp.sqrt(1 + mp.sin(s) ** 2), [0, mp.pi])
        p = mp.sin(tm) ** 3 - xi * mp.cos(tm) * mp.sqrt(1 + mp.sin(tm) ** 2)
        return float((2 * d - xi) ** 2 - p * xi)


def random_feasible_configs(rng: np.random.Generator, count: int,
                            alpha_range=(0.05, math.pi - 0.05)):
    """Random canonical (alpha, beta) with |beta| <= alpha, beta >= alpha - pi."""
    out = []
    while len(out) < count:
        alpha = rng.uniform(*alpha_range)
        beta = rng.uniform(max(-alpha, alpha - math.pi), alpha)
        out.append((float(alpha), float(beta)))
    return out
