"""Elastic-spline interpolation through point sequences.

Node tangent angles are the free variables: given all tangents, the best
interpolant decomposes into independent per-segment optimal s-curves, so
the total bending energy is a sum of one-segment solves.  The fitter runs
coordinate descent over the tangent angles (golden-section per
coordinate on a pre-scanned window, infeasible trials scored +inf) from a
chord-average initialization, with seeded multi-start restarts.  It is a
robust desk-scale heuristic, not a certified global minimizer.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import scurve
from .geometry import PiecewiseCurve, UnitTangent, canonicalize, feasible
from .scurve import FeasibilityError, SolverResult
from .tolerances import TOL

__all__ = ["SplineProblem", "FitOptions", "SplineFit", "FitError", "total_energy", "fit"]

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


class FitError(RuntimeError):
    """No feasible tangent assignment was found; carries a per-segment report."""

    def __init__(self, message: str, report: list[dict]):
        super().__init__(message)
        self.report = report


def _as_point(value) -> complex:
    if isinstance(value, complex):
        return value
    x, y = value
    return complex(float(x), float(y))


@dataclass(frozen=True)
class SplineProblem:
    """Interpolation points, optional fixed tangent directions, open or closed."""

    points: tuple[complex, ...]
    fixed_dirs: tuple[complex | None, ...] | None = None
    closed: bool = False

    def __post_init__(self):
        pts = tuple(_as_point(p) for p in self.points)
        if len(pts) < 2:
            raise ValueError("need at least two interpolation points")
        object.__setattr__(self, "points", pts)
        for a, b in zip(pts, pts[1:]):
            if a == b:
                raise ValueError("consecutive interpolation points must be distinct")
        if self.closed and pts[-1] == pts[0]:
            raise ValueError("closed sequences are cyclic; do not repeat the first point")
        if self.fixed_dirs is not None:
            dirs = tuple(None if d is None else _as_point(d) for d in self.fixed_dirs)
            if len(dirs) != len(pts):
                raise ValueError("fixed_dirs must have one entry per point")
            for d in dirs:
                if d is not None and abs(d) == 0.0:
                    raise ValueError("fixed direction must be non-zero")
            object.__setattr__(self, "fixed_dirs", dirs)

    @property
    def n(self) -> int:
        return len(self.points)

    def segment_indices(self) -> list[tuple[int, int]]:
        pairs = [(i, i + 1) for i in range(self.n - 1)]
        if self.closed:
            pairs.append((self.n - 1, 0))
        return pairs


@dataclass(frozen=True)
class FitOptions:
    tol: float = TOL.fit_tol
    max_iters: int = TOL.fit_max_iters
    restarts: int = TOL.fit_restarts
    seed: int = 0


@dataclass(frozen=True)
class SplineFit:
    """Fitted interpolant: the curve, node angles and the optimizer record."""

    curve: PiecewiseCurve
    angles: tuple[float, ...]
    segment_energies: tuple[float, ...]
    total_energy: float
    iterations: int
    converged: bool
    trace: tuple[float, ...]
    segment_results: tuple[SolverResult, ...]

    def to_dict(self) -> dict:
        return {
            "curve": self.curve.to_dict(),
            "angles": list(self.angles),
            "segment_energies": list(self.segment_energies),
            "total_energy": self.total_energy,
            "iterations": self.iterations,
            "converged": self.converged,
            "trace": list(self.trace),
        }


def _segment_energy(problem: SplineProblem, angles, i: int, j: int) -> float:
    u = UnitTangent.from_angle(problem.points[i], angles[i])
    v = UnitTangent.from_angle(problem.points[j], angles[j])
    try:
        return scurve.min_energy(u, v)
    except FeasibilityError:
        return math.inf


def total_energy(problem: SplineProblem, angles) -> float:
    """Sum of per-segment optimal energies; +inf marks an infeasible segment."""
    angles = list(angles)
    if len(angles) != problem.n:
        raise ValueError(f"expected {problem.n} angles, got {len(angles)}")
    return sum(_segment_energy(problem, angles, i, j)
               for i, j in problem.segment_indices())


def _chord_angles_of(problem: SplineProblem) -> list[float]:
    return [cmath.phase(problem.points[j] - problem.points[i])
            for i, j in problem.segment_indices()]


def _initial_angles(problem: SplineProblem) -> np.ndarray:
    chords = _chord_angles_of(problem)
    n = problem.n
    angles = np.zeros(n)
    for i in range(n):
        if problem.closed:
            prev_c = chords[(i - 1) % n]
            next_c = chords[i % n]
        else:
            prev_c = chords[i - 1] if i > 0 else None
            next_c = chords[i] if i < n - 1 else None
        if prev_c is None:
            angles[i] = next_c
        elif next_c is None:
            angles[i] = prev_c
        else:
            s = cmath.exp(1j * prev_c) + cmath.exp(1j * next_c)
            if abs(s) < 1e-12:
                # Hairpin: split the turn instead of averaging to zero.
                angles[i] = prev_c + math.pi / 2
            else:
                angles[i] = cmath.phase(s)
    if problem.fixed_dirs is not None:
        for i, d in enumerate(problem.fixed_dirs):
            if d is not None:
                angles[i] = cmath.phase(d)
    return angles


def _free_indices(problem: SplineProblem) -> list[int]:
    if problem.fixed_dirs is None:
        return list(range(problem.n))
    return [i for i, d in enumerate(problem.fixed_dirs) if d is None]


def _adjacent_segments(problem: SplineProblem, i: int) -> list[tuple[int, int]]:
    return [(a, b) for (a, b) in problem.segment_indices() if i in (a, b)]


def _golden_min(f, lo: float, hi: float, xatol: float = 1e-6,
                max_iter: int = 80) -> float:
    a, b = lo, hi
    x1 = b - _GOLDEN * (b - a)
    x2 = a + _GOLDEN * (b - a)
    f1, f2 = f(x1), f(x2)
    for _ in range(max_iter):
        if b - a < xatol:
            break
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _GOLDEN * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _GOLDEN * (b - a)
            f2 = f(x2)
    return x1 if f1 <= f2 else x2


def _improve_coordinate(problem: SplineProblem, angles: np.ndarray, i: int) -> float:
    """Minimize the energy of the segments touching node i over its angle.

    Returns the achieved decrease (0 when no improvement was found).
    """
    segs = _adjacent_segments(problem, i)

    def local(theta: float) -> float:
        trial = angles.copy()
        trial[i] = theta
        return sum(_segment_energy(problem, trial, a, b) for a, b in segs)

    current = local(angles[i])
    # Coarse periodic scan, then golden-section refinement around the best cell.
    offsets = np.linspace(-math.pi, math.pi, 17)[1:]
    best_theta, best_val = angles[i], current
    for off in offsets:
        theta = angles[i] + off
        val = local(theta)
        if val < best_val:
            best_theta, best_val = theta, val
    step = offsets[1] - offsets[0]
    refined = _golden_min(local, best_theta - step, best_theta + step)
    val = local(refined)
    if val < best_val:
        best_theta, best_val = refined, val
    if best_val < current:
        angles[i] = math.remainder(best_theta, 2.0 * math.pi)
        return current - best_val
    return 0.0


def _descend(problem: SplineProblem, angles: np.ndarray, opts: FitOptions):
    free = _free_indices(problem)
    energy = total_energy(problem, angles)
    trace = [energy]
    converged = not free
    sweeps = 0
    if math.isfinite(energy):
        for sweeps in range(1, opts.max_iters + 1):
            before = energy
            for i in free:
                decrease = _improve_coordinate(problem, angles, i)
                energy -= decrease
                trace.append(energy)
            if before - energy < opts.tol:
                converged = True
                break
    return angles, energy, trace, sweeps, converged


def fit(problem: SplineProblem, opts: FitOptions | None = None) -> SplineFit:
    """Fit the minimal-energy admissible interpolant by coordinate descent."""
    opts = opts or FitOptions()
    base = _initial_angles(problem)
    free = _free_indices(problem)
    rng = np.random.default_rng(opts.seed)
    starts = [base.copy()]
    for _ in range(opts.restarts):
        perturbed = base.copy()
        if free:
            perturbed[free] += rng.uniform(-0.5, 0.5, size=len(free))
        starts.append(perturbed)

    best = None
    for start in starts:
        angles, energy, trace, sweeps, converged = _descend(problem, start, opts)
        if not math.isfinite(energy):
            continue
        if best is None or energy < best[1]:
            best = (angles, energy, trace, sweeps, converged)

    if best is None:
        report = []
        for i, j in problem.segment_indices():
            u = UnitTangent.from_angle(problem.points[i], base[i])
            v = UnitTangent.from_angle(problem.points[j], base[j])
            try:
                cfg = canonicalize(u, v)
                ok = feasible(cfg.alpha, cfg.beta)
                report.append({"segment": [i, j], "alpha": cfg.alpha,
                               "beta": cfg.beta, "feasible": ok})
            except ValueError as exc:
                report.append({"segment": [i, j], "error": str(exc)})
        raise FitError("no feasible tangent assignment found", report)

    angles, energy, trace, sweeps, converged = best
    results = []
    for i, j in problem.segment_indices():
        u = UnitTangent.from_angle(problem.points[i], angles[i])
        v = UnitTangent.from_angle(problem.points[j], angles[j])
        results.append(scurve.solve(u, v))
    segments = tuple(seg for r in results for seg in r.curve.segments)
    energies = tuple(r.energy for r in results)
    return SplineFit(
        curve=PiecewiseCurve(segments),
        angles=tuple(float(a) for a in angles),
        segment_energies=energies,
        total_energy=float(sum(energies)),
        iterations=sweeps,
        converged=converged,
        trace=tuple(trace),
        segment_results=tuple(results),
    )
