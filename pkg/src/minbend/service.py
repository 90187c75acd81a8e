"""Stateless local HTTP JSON API for the browser editor.

Endpoints:

* ``POST /api/scurve``  body {"u": {...}, "v": {...}} -> SolverResult JSON
  with a sampled polyline (``?samples=`` query, default 128).
* ``POST /api/spline``  body {points, fixed_dirs?, closed?, opts?} ->
  SplineFit JSON with per-segment polylines and diagnostics.
* ``GET /api/health``   liveness plus the model constant d.

Errors use one shape: {"code": infeasible|bad_request|internal,
"message": ..., "details": ...}; malformed bodies are 400, infeasible
configurations 422.  Handlers are pure wrappers over thread-safe core
calls, so any number of requests may run concurrently.
"""

from __future__ import annotations

import argparse
import os

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import elastica
from .geometry import UnitTangent
from .scurve import FeasibilityError, solve
from .spline import FitError, FitOptions, SplineProblem, fit

MAX_BODY_BYTES = 1_000_000
DEFAULT_PORT = 8787


class UnitTangentIn(BaseModel):
    pos: tuple[float, float]
    dir: tuple[float, float]

    def build(self) -> UnitTangent:
        return UnitTangent(complex(*self.pos), complex(*self.dir))


class ScurveIn(BaseModel):
    u: UnitTangentIn
    v: UnitTangentIn


class FitOptionsIn(BaseModel):
    tol: float = FitOptions.tol
    max_iters: int = Field(FitOptions.max_iters, ge=1)
    restarts: int = Field(FitOptions.restarts, ge=0)
    seed: int = 0

    def build(self) -> FitOptions:
        return FitOptions(self.tol, self.max_iters, self.restarts, self.seed)


class SplineIn(BaseModel):
    points: list[tuple[float, float]] = Field(min_length=2)
    fixed_dirs: list[tuple[float, float] | None] | None = None
    closed: bool = False
    opts: FitOptionsIn = FitOptionsIn()

    def build(self) -> SplineProblem:
        fixed = None
        if self.fixed_dirs is not None:
            fixed = tuple(None if d is None else complex(*d) for d in self.fixed_dirs)
        return SplineProblem(tuple(complex(*p) for p in self.points), fixed, self.closed)


def _error(status: int, code: str, message: str, details=None) -> JSONResponse:
    return JSONResponse(status_code=status,
                        content={"code": code, "message": message, "details": details})


def _polyline(curve, samples: int) -> list[list[float]]:
    return [[p.real, p.imag] for p in curve.sample(samples)]


def create_app() -> FastAPI:
    app = FastAPI(title="minbend", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origin_regex=r"http://(localhost|127\.0\.0\.1)(:\d+)?",
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.middleware("http")
    async def _limit_body(request: Request, call_next):
        length = request.headers.get("content-length")
        if length is not None and int(length) > MAX_BODY_BYTES:
            return _error(413, "bad_request", "request body exceeds 1 MB")
        return await call_next(request)

    @app.exception_handler(RequestValidationError)
    async def _on_validation(request: Request, exc: RequestValidationError):
        return _error(400, "bad_request", "malformed request body",
                      details=exc.errors())

    @app.exception_handler(FeasibilityError)
    async def _on_infeasible(request: Request, exc: FeasibilityError):
        return _error(422, "infeasible", str(exc),
                      details={"alpha": exc.alpha, "beta": exc.beta})

    @app.exception_handler(FitError)
    async def _on_fit_error(request: Request, exc: FitError):
        return _error(422, "infeasible", str(exc), details={"report": exc.report})

    @app.exception_handler(ValueError)
    async def _on_value_error(request: Request, exc: ValueError):
        return _error(400, "bad_request", str(exc))

    @app.exception_handler(Exception)
    async def _on_internal(request: Request, exc: Exception):
        return _error(500, "internal", "internal error")

    @app.get("/api/health")
    def health():
        return {"status": "ok", "d": elastica.D}

    @app.post("/api/scurve")
    def api_scurve(body: ScurveIn, samples: int = Query(128, ge=2, le=4096)):
        result = solve(body.u.build(), body.v.build())
        payload = result.to_dict()
        payload["polyline"] = _polyline(result.curve, samples)
        return payload

    @app.post("/api/spline")
    def api_spline(body: SplineIn, samples: int = Query(128, ge=2, le=4096)):
        result = fit(body.build(), body.opts.build())
        payload = result.to_dict()
        payload["segments"] = [
            {
                "polyline": _polyline(r.curve, samples),
                "energy": r.energy,
                "case_tag": r.case_tag,
                "gamma_star": r.gamma_star,
                "diagnostics": r.diagnostics.to_dict(),
            }
            for r in result.segment_results
        ]
        return payload

    return app


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="minbend-serve",
                                     description="Run the local solver API.")
    parser.add_argument("--port", type=int,
                        default=int(os.environ.get("MINBEND_PORT", DEFAULT_PORT)))
    args = parser.parse_args(argv)
    import uvicorn

    uvicorn.run(create_app(), host="127.0.0.1", port=args.port, log_level="info")
    return 0


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
