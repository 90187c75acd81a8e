"""Central record of the numerical tolerances used across the package.

All angles everywhere are radians.  Position tolerances that guard curve
endpoints are relative to the chord length of the configuration, so the
solver behaves identically at any scale.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    # elastica evaluation
    xi_abs: float = 1e-10          # absolute accuracy target for xi()
    sqrt_sin_abs: float = 1e-8     # accuracy target for half_sqrt_sin_integral()
    lookup_agreement: float = 1e-9  # fast evaluators must match quadrature this well
    turning_roundtrip: float = 1e-12
    chord_min_param: float = 1e-9  # chord_angles() rejects parameters below this

    # geometry
    unit_norm: float = 1e-12       # |dir| normalization check
    g1_pos_rel: float = 1e-6       # G1 validator, positions relative to curve length
    g1_dir: float = 1e-6           # G1 validator, direction angles (radians)
    arc_span_max_slack: float = 1e-9

    # s-curve solver
    alpha_trivial: float = 1e-9    # below this alpha the straight line is returned
    boundary_band: float = 1e-12   # |beta - (alpha - pi)| below this is the u-turn case
    feasibility_slack: float = 1e-12
    sigma_boundary: float = 1e-10  # |sigma(beta)| below this routes to the G machinery
    sigma_interior: float = 1e-8   # consistency bound on sigma at an interior minimizer
    gamma_open_gap: float = 1e-9   # clip distance from the open end of the gamma domain
    line_drop: float = 1e-12       # omit a second-form connector shorter than this
    param_bisect: float = 1e-12    # root tolerance in the model parameter
    scan_points: int = 512         # coarse scan resolution over the gamma domain
    min_tie_rel: float = 1e-12     # relative band for collecting tied minimizers

    # solver output contracts
    connect_pos_rel: float = 1e-7  # endpoint position residual, relative to chord
    connect_dir: float = 1e-7      # endpoint direction residual, radians
    energy_rel: float = 1e-9

    # spline fitter defaults
    fit_tol: float = 1e-8
    fit_max_iters: int = 200
    fit_restarts: int = 4


TOL = Tolerances()
