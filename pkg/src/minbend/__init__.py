"""minbend: minimal bending-energy s-curves and elastic splines in the plane."""

from .elastica import D
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
from .scurve import FeasibilityError, SolverResult, min_energy, solve
from .spline import FitError, FitOptions, SplineFit, SplineProblem, fit, total_energy
from .tolerances import TOL, Tolerances

__version__ = "0.1.0"

__all__ = [
    "D",
    "UnitTangent",
    "Similarity",
    "LineSegment",
    "ElasticaArc",
    "PiecewiseCurve",
    "CanonicalConfig",
    "canonicalize",
    "feasible",
    "solve",
    "min_energy",
    "SolverResult",
    "FeasibilityError",
    "SplineProblem",
    "FitOptions",
    "SplineFit",
    "FitError",
    "fit",
    "total_energy",
    "TOL",
    "Tolerances",
    "__version__",
]
