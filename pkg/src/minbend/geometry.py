"""Planar curve algebra.

Points and directions are complex numbers (x + iy).  Curves are ordered
lists of segments, each either a straight line or a similarity image of
an arc of the model elastica; bending energy, length and turning angle
come from the model-curve formulas plus the similarity scaling laws
(scale by lambda: length x lambda, energy / lambda, |turning| unchanged).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from typing import Union

import numpy as np

from . import elastica
from .tolerances import TOL

__all__ = [
    "UnitTangent",
    "Similarity",
    "LineSegment",
    "ElasticaArc",
    "CurveSegment",
    "PiecewiseCurve",
    "CanonicalConfig",
    "canonicalize",
    "feasible",
    "check_g1",
    "curvature_sign_changes",
]


def _wrap_angle(a: float) -> float:
    """Wrap to (-pi, pi]."""
    a = math.remainder(a, 2.0 * math.pi)
    if a <= -math.pi:
        a += 2.0 * math.pi
    return a


def _as_point(value) -> complex:
    if isinstance(value, complex):
        return value
    x, y = value
    return complex(float(x), float(y))


def _point_json(z: complex) -> list[float]:
    return [z.real, z.imag]


@dataclass(frozen=True)
class UnitTangent:
    """A position in the plane together with a unit direction."""

    pos: complex
    dir: complex

    def __post_init__(self):
        pos = _as_point(self.pos)
        d = _as_point(self.dir)
        n = abs(d)
        if not (math.isfinite(pos.real) and math.isfinite(pos.imag) and math.isfinite(n)):
            raise ValueError("unit tangent components must be finite")
        if n == 0.0:
            raise ValueError("direction vector must be non-zero")
        object.__setattr__(self, "pos", pos)
        object.__setattr__(self, "dir", d / n)

    @classmethod
    def from_angle(cls, pos, angle: float) -> "UnitTangent":
        return cls(_as_point(pos), cmath.exp(1j * angle))

    @property
    def angle(self) -> float:
        return math.atan2(self.dir.imag, self.dir.real)

    def reversed(self) -> "UnitTangent":
        return UnitTangent(self.pos, -self.dir)

    def to_dict(self) -> dict:
        return {"pos": _point_json(self.pos), "dir": _point_json(self.dir)}

    @classmethod
    def from_dict(cls, data: dict) -> "UnitTangent":
        return cls(_as_point(data["pos"]), _as_point(data["dir"]))


@dataclass(frozen=True)
class Similarity:
    """z -> scale * e^{i rotation} * (conj(z) if reflect else z) + translation."""

    scale: float = 1.0
    rotation: float = 0.0
    translation: complex = 0j
    reflect: bool = False

    def __post_init__(self):
        if not (math.isfinite(self.scale) and self.scale > 0.0):
            raise ValueError(f"similarity scale must be positive, got {self.scale!r}")
        object.__setattr__(self, "translation", _as_point(self.translation))

    @property
    def factor(self) -> complex:
        return self.scale * cmath.exp(1j * self.rotation)

    def apply(self, z: complex) -> complex:
        if self.reflect:
            z = z.conjugate()
        return self.factor * z + self.translation

    def apply_many(self, z: np.ndarray) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        if self.reflect:
            z = np.conj(z)
        return self.factor * z + self.translation

    def apply_dir(self, w: complex) -> complex:
        """Transform a direction vector (no translation, no scaling)."""
        if self.reflect:
            w = w.conjugate()
        w = cmath.exp(1j * self.rotation) * w
        return w

    def apply_tangent(self, ut: UnitTangent) -> UnitTangent:
        return UnitTangent(self.apply(ut.pos), self.apply_dir(ut.dir))

    def compose(self, inner: "Similarity") -> "Similarity":
        """self o inner."""
        scale = self.scale * inner.scale
        if self.reflect:
            rotation = self.rotation - inner.rotation
            translation = self.factor * inner.translation.conjugate() + self.translation
        else:
            rotation = self.rotation + inner.rotation
            translation = self.factor * inner.translation + self.translation
        return Similarity(scale, _wrap_angle(rotation), translation,
                          self.reflect != inner.reflect)

    def inverse(self) -> "Similarity":
        if self.reflect:
            # w = conj(z - c) * e^{i rho} / s
            rot = self.rotation
            trans = -cmath.exp(1j * rot) * self.translation.conjugate() / self.scale
        else:
            rot = -self.rotation
            trans = -self.translation * cmath.exp(1j * rot) / self.scale
        return Similarity(1.0 / self.scale, _wrap_angle(rot), trans, self.reflect)

    @classmethod
    def chord_map(cls, a0: complex, a1: complex, b0: complex = 0j,
                  b1: complex = 1 + 0j) -> "Similarity":
        """Direct similarity taking a0 -> b0 and a1 -> b1."""
        if a0 == a1 or b0 == b1:
            raise ValueError("chord endpoints must be distinct")
        c1 = (b1 - b0) / (a1 - a0)
        return cls(abs(c1), cmath.phase(c1), b0 - c1 * a0, False)

    def to_dict(self) -> dict:
        return {
            "scale": self.scale,
            "rotation": self.rotation,
            "translation": _point_json(self.translation),
            "reflect": self.reflect,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Similarity":
        return cls(float(data["scale"]), float(data["rotation"]),
                   _as_point(data["translation"]), bool(data["reflect"]))


@dataclass(frozen=True)
class LineSegment:
    """Straight segment from a to b with positive length."""

    a: complex
    b: complex

    def __post_init__(self):
        a = _as_point(self.a)
        b = _as_point(self.b)
        if a == b:
            raise ValueError("line segment endpoints must be distinct")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def length(self) -> float:
        return abs(self.b - self.a)

    def energy(self) -> float:
        return 0.0

    def turning(self) -> float:
        return 0.0

    def start_tangent(self) -> UnitTangent:
        return UnitTangent(self.a, self.b - self.a)

    def end_tangent(self) -> UnitTangent:
        return UnitTangent(self.b, self.b - self.a)

    def reverse(self) -> "LineSegment":
        return LineSegment(self.b, self.a)

    def transformed(self, T: Similarity) -> "LineSegment":
        return LineSegment(T.apply(self.a), T.apply(self.b))

    def points_at_arclengths(self, s) -> np.ndarray:
        s = np.asarray(s, dtype=float)
        u = np.clip(s / self.length(), 0.0, 1.0)
        return self.a + u * (self.b - self.a)

    def curvature_samples(self, n: int) -> np.ndarray:
        return np.zeros(n)

    def to_dict(self) -> dict:
        return {"kind": "line", "A": _point_json(self.a), "B": _point_json(self.b)}


@dataclass(frozen=True)
class ElasticaArc:
    """Similarity image of the model elastica arc on [t0, t1].

    The parameter interval is always stored increasing; ``reversed`` marks
    reversed traversal, so energy and length formulas stay sign-free.
    """

    map: Similarity
    t0: float
    t1: float
    reversed: bool = False

    def __post_init__(self):
        t0 = float(self.t0)
        t1 = float(self.t1)
        if not (math.isfinite(t0) and math.isfinite(t1)) or t0 >= t1:
            raise ValueError(f"arc requires t0 < t1, got [{t0!r}, {t1!r}]")
        if t1 - t0 > 2.0 * math.pi + TOL.arc_span_max_slack:
            raise ValueError("arc spans more than one full period")
        object.__setattr__(self, "t0", t0)
        object.__setattr__(self, "t1", t1)

    def _orientation(self) -> float:
        sign = -1.0 if self.map.reflect else 1.0
        if self.reversed:
            sign = -sign
        return sign

    def length(self) -> float:
        return self.map.scale * elastica.arclength(self.t0, self.t1)

    def energy(self) -> float:
        return elastica.segment_energy(self.t0, self.t1) / self.map.scale

    def turning(self) -> float:
        return self._orientation() * elastica.turning(self.t0, self.t1)

    def point_at(self, t: float) -> complex:
        return self.map.apply(elastica.point(t))

    def _tangent_at(self, t: float, backwards: bool) -> UnitTangent:
        w = elastica.unit_tangent(t)
        if backwards:
            w = -w
        return UnitTangent(self.map.apply(elastica.point(t)), self.map.apply_dir(w))

    def start_tangent(self) -> UnitTangent:
        if self.reversed:
            return self._tangent_at(self.t1, backwards=True)
        return self._tangent_at(self.t0, backwards=False)

    def end_tangent(self) -> UnitTangent:
        if self.reversed:
            return self._tangent_at(self.t0, backwards=True)
        return self._tangent_at(self.t1, backwards=False)

    def reverse(self) -> "ElasticaArc":
        return replace(self, reversed=not self.reversed)

    def transformed(self, T: Similarity) -> "ElasticaArc":
        return replace(self, map=T.compose(self.map))

    def params_at_arclengths(self, s) -> np.ndarray:
        """Model parameters at traversal arc lengths ``s`` from the start."""
        s = np.asarray(s, dtype=float)
        total = self.length()
        s = np.clip(s, 0.0, total)
        base = elastica.arclength_antideriv_many(self.t0)
        if self.reversed:
            target = (total - s) / self.map.scale + base
        else:
            target = s / self.map.scale + base
        # Newton on the monotone arclength antiderivative; speed >= 1/sqrt(2).
        t = self.t0 + (self.t1 - self.t0) * np.clip(
            (target - base) / ((self.t1 - self.t0) * 0.79), 0.0, 1.0
        )
        for _ in range(30):
            f = elastica.arclength_antideriv_many(t) - target
            dt = f * np.sqrt(1.0 + np.sin(t) ** 2)
            t = np.clip(t - dt, self.t0, self.t1)
            if np.max(np.abs(dt)) < 1e-14:
                break
        return t

    def points_at_arclengths(self, s) -> np.ndarray:
        t = self.params_at_arclengths(s)
        return self.map.apply_many(elastica.point_many(t))

    def curvature_samples(self, n: int) -> np.ndarray:
        """Signed world curvature at n parameter-equispaced traversal points."""
        t = np.linspace(self.t0, self.t1, n)
        if self.reversed:
            t = t[::-1]
        return self._orientation() * 2.0 * np.sin(t) / self.map.scale

    def to_dict(self) -> dict:
        return {
            "kind": "elastica",
            "map": self.map.to_dict(),
            "t0": self.t0,
            "t1": self.t1,
            "reversed": self.reversed,
        }


CurveSegment = Union[LineSegment, ElasticaArc]


def segment_from_dict(data: dict) -> CurveSegment:
    kind = data.get("kind")
    if kind == "line":
        return LineSegment(_as_point(data["A"]), _as_point(data["B"]))
    if kind == "elastica":
        return ElasticaArc(
            Similarity.from_dict(data["map"]),
            float(data["t0"]),
            float(data["t1"]),
            bool(data["reversed"]),
        )
    raise ValueError(f"unknown segment kind: {kind!r}")


@dataclass(frozen=True)
class PiecewiseCurve:
    """Ordered, G1-continuous chain of curve segments."""

    segments: tuple[CurveSegment, ...]

    def __post_init__(self):
        segs = tuple(self.segments)
        if not segs:
            raise ValueError("a piecewise curve needs at least one segment")
        object.__setattr__(self, "segments", segs)

    def energy(self) -> float:
        return sum(s.energy() for s in self.segments)

    def length(self) -> float:
        return sum(s.length() for s in self.segments)

    def turning(self) -> float:
        return sum(s.turning() for s in self.segments)

    def start_tangent(self) -> UnitTangent:
        return self.segments[0].start_tangent()

    def end_tangent(self) -> UnitTangent:
        return self.segments[-1].end_tangent()

    def transformed(self, T: Similarity) -> "PiecewiseCurve":
        return PiecewiseCurve(tuple(s.transformed(T) for s in self.segments))

    def reverse(self) -> "PiecewiseCurve":
        return PiecewiseCurve(tuple(s.reverse() for s in reversed(self.segments)))

    def sample(self, n: int) -> list[complex]:
        """n points at (approximately) equal arc length, endpoints exact."""
        if n < 2:
            raise ValueError(f"need at least 2 sample points, got {n}")
        lengths = [s.length() for s in self.segments]
        cum = np.concatenate([[0.0], np.cumsum(lengths)])
        total = cum[-1]
        targets = np.linspace(0.0, total, n)
        pts = np.empty(n, dtype=complex)
        idx = np.clip(np.searchsorted(cum, targets, side="right") - 1,
                      0, len(self.segments) - 1)
        for k, seg in enumerate(self.segments):
            mask = idx == k
            if np.any(mask):
                pts[mask] = seg.points_at_arclengths(targets[mask] - cum[k])
        pts[0] = self.start_tangent().pos
        pts[-1] = self.end_tangent().pos
        return list(pts)

    def to_dict(self) -> dict:
        return {"segments": [s.to_dict() for s in self.segments]}

    @classmethod
    def from_dict(cls, data: dict) -> "PiecewiseCurve":
        return cls(tuple(segment_from_dict(s) for s in data["segments"]))


def check_g1(curve: PiecewiseCurve, pos_tol_rel: float | None = None,
             dir_tol: float | None = None) -> bool:
    """True when adjacent segments agree in position and direction.

    Position mismatches are measured relative to the curve length.
    """
    pos_tol_rel = TOL.g1_pos_rel if pos_tol_rel is None else pos_tol_rel
    dir_tol = TOL.g1_dir if dir_tol is None else dir_tol
    scale = max(curve.length(), 1e-300)
    for prev, nxt in zip(curve.segments, curve.segments[1:]):
        pe = prev.end_tangent()
        ns = nxt.start_tangent()
        if abs(pe.pos - ns.pos) > pos_tol_rel * scale:
            return False
        if abs(cmath.phase(ns.dir / pe.dir)) > dir_tol:
            return False
    return True


def curvature_sign_changes(curve: PiecewiseCurve, samples_per_segment: int = 128) -> int:
    """Number of sign changes in the sampled signed curvature along the curve."""
    values = np.concatenate(
        [s.curvature_samples(samples_per_segment) for s in curve.segments]
    )
    peak = np.max(np.abs(values)) if len(values) else 0.0
    if peak == 0.0:
        return 0
    signs = np.sign(values[np.abs(values) > 1e-9 * peak])
    return int(np.count_nonzero(np.diff(signs) != 0))


@dataclass(frozen=True)
class CanonicalConfig:
    """Normal form of a tangent pair: u at 0, v at 1, with alpha in [0, pi]
    and |beta| <= alpha; ``to_world`` (plus optional pair reversal) maps the
    canonical pair back onto the original one."""

    alpha: float
    beta: float
    to_world: Similarity
    reversed_pair: bool

    def canonical_tangents(self) -> tuple[UnitTangent, UnitTangent]:
        return (UnitTangent.from_angle(0j, self.alpha),
                UnitTangent.from_angle(1 + 0j, self.beta))

    def restore_curve(self, curve: PiecewiseCurve) -> PiecewiseCurve:
        world = curve.transformed(self.to_world)
        return world.reverse() if self.reversed_pair else world

    def restore_energy(self, energy: float) -> float:
        return energy / self.to_world.scale


def canonicalize(u: UnitTangent, v: UnitTangent) -> CanonicalConfig:
    """Normalize a tangent pair by similarity, reflection and pair reversal.

    Ties prefer no reversal, then no reflection, so symmetric inputs give a
    deterministic normal form.
    """
    w = v.pos - u.pos
    if w == 0:
        raise ValueError("tangent positions must be distinct")
    chord = cmath.phase(w)
    a = _wrap_angle(u.angle - chord)
    b = _wrap_angle(v.angle - chord)
    candidates = (
        (False, False, a, b),
        (False, True, _wrap_angle(-a), _wrap_angle(-b)),
        (True, False, b, a),
        (True, True, _wrap_angle(-b), _wrap_angle(-a)),
    )
    for rev, refl, alpha, beta in candidates:
        if 0.0 <= alpha <= math.pi and abs(beta) <= alpha + 1e-12:
            beta = min(max(beta, -alpha), alpha)
            if rev:
                T = Similarity(abs(w), cmath.phase(-w), v.pos, refl)
            else:
                T = Similarity(abs(w), chord, u.pos, refl)
            return CanonicalConfig(alpha, beta, T, rev)
    raise RuntimeError("canonicalization failed")  # pragma: no cover


def feasible(alpha: float, beta: float) -> bool:
    """Whether any s-curve connects the canonical pair (alpha, beta)."""
    if not (0.0 <= alpha <= math.pi) or abs(beta) > alpha + 1e-12:
        raise ValueError(
            f"canonical angles require alpha in [0, pi], |beta| <= alpha; "
            f"got alpha={alpha!r}, beta={beta!r}"
        )
    return alpha < math.pi and beta >= alpha - math.pi
