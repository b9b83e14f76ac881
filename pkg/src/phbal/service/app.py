"""FastAPI service exposing the reduction pipelines."""

from __future__ import annotations

from typing import Optional

import numpy as np
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..analysis import default_dt, error_system, hinf_norm, parse_signal_spec, simulate
from ..errors import ParseError, PhbalError
from ..pipelines import run_pipeline
from ..refdata import gamma_preset
from ..sysmodel import build_msd_example, build_rlc_example, ph_to_lti, stability
from .schemas import (
    ExampleResponse,
    ReduceRequest,
    ReduceResponse,
    SystemPayload,
    TrajectoryPayload,
)

EXAMPLES = {"msd": build_msd_example, "rlc": build_rlc_example}

# pipeline failures (no certified reduction exists for the request)
INFEASIBLE_KINDS = {
    "Infeasible", "StructureLost", "NotBlockDiagonal", "NoFeasibleScale",
    "ConditionFailed", "NotPSD", "NotPD", "ShiftNotPD", "Unstable",
    "NearSingularSpectrum", "CertificateMismatch", "IllConditioned",
    "Singular", "HamiltonianNotPD", "DissipationIndefinite", "NotSkew",
    "PhValidationError", "StepTooLarge", "ZeroInput",
}


def _resolve_gamma(spec, example: Optional[str], which: str):
    if spec is None or spec == "zero":
        if spec is None and example is not None:
            # built-in examples default to their published shaping presets
            return gamma_preset(example, which)
        return None
    if spec == "appendix":
        if example is None:
            raise ValueError("the 'appendix' shaping preset requires a built-in example")
        return gamma_preset(example, which)
    return np.asarray(spec, dtype=float)


def create_app() -> FastAPI:
    app = FastAPI(title="phbal", description="Balanced truncation of LTI and "
                  "port-Hamiltonian systems with certified error bounds.")

    @app.exception_handler(PhbalError)
    async def phbal_error_handler(request: Request, exc: PhbalError):
        kind = type(exc).__name__
        if isinstance(exc, ParseError):
            status = 400
        elif kind in INFEASIBLE_KINDS:
            status = 422
        else:
            status = 400
        return JSONResponse(status_code=status,
                            content={"error": kind, "message": str(exc)})

    @app.exception_handler(ValueError)
    async def value_error_handler(request: Request, exc: ValueError):
        return JSONResponse(status_code=400,
                            content={"error": "ValueError", "message": str(exc)})

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.get("/examples/{name}", response_model=ExampleResponse)
    def get_example(name: str):
        if name not in EXAMPLES:
            return JSONResponse(status_code=404, content={
                "error": "NotFound", "message": f"unknown example {name!r}"})
        ph = EXAMPLES[name]()
        lti = ph_to_lti(ph)
        return ExampleResponse(
            name=name, system=SystemPayload.from_system(ph),
            n=ph.n, m=ph.m,
            spectral_abscissa=stability(lti).spectral_abscissa,
        )

    @app.post("/reduce", response_model=ReduceResponse, responses={
        400: {"description": "bad request"},
        422: {"description": "no certified reduction for these parameters"},
    })
    def reduce(req: ReduceRequest):
        if req.example is not None:
            if req.example not in EXAMPLES:
                return JSONResponse(status_code=404, content={
                    "error": "NotFound", "message": f"unknown example {req.example!r}"})
            system = EXAMPLES[req.example]()
        else:
            system = req.system.to_system()
        gamma_o = _resolve_gamma(req.gamma_o, req.example, "gamma_o") \
            if req.pipeline.startswith("ext") else None
        gamma_c = _resolve_gamma(req.gamma_c, req.example, "gamma_c") \
            if req.pipeline.startswith("ext") else None
        report = run_pipeline(
            system, req.pipeline, k=req.k, pairs=req.pairs,
            delta=req.delta, delta_c=req.delta_c,
            slack_o=req.slack_o, slack_c=req.slack_c,
            alpha=req.alpha, beta=req.beta,
            gamma_o=gamma_o, gamma_c=gamma_c, weights=req.weights,
        )
        from ..sysmodel import LtiSystem

        full_lti = ph_to_lti(system) if not isinstance(system, LtiSystem) else system
        hinf_value = None
        if req.hinf:
            hinf_value = hinf_norm(error_system(full_lti, report.reduced_lti), tol=req.tol)
        trajectory = None
        if req.simulate is not None:
            u = parse_signal_spec(req.simulate.signal, full_lti.m)
            dt = req.simulate.dt if req.simulate.dt is not None else default_dt(full_lti)
            traj = simulate(full_lti, u, horizon=req.simulate.horizon, dt=dt)
            traj_red = simulate(report.reduced_lti, u, horizon=req.simulate.horizon, dt=dt)
            trajectory = TrajectoryPayload(
                times=traj.times.tolist(), inputs=traj.inputs.tolist(),
                outputs=traj.outputs.tolist(),
                reduced_outputs=traj_red.outputs.tolist(), dt=dt,
            )
        circuit = None
        if "circuit" in report.extras:
            c = report.extras["circuit"]
            circuit = {key: np.atleast_1d(np.asarray(c[key], dtype=float)).tolist()
                       for key in ("capacitances", "inductances", "cap_resistances",
                                   "ind_resistances", "couplings", "input_gain")}
        reduced_payload = SystemPayload.from_system(
            report.reduced_ph if report.reduced_ph is not None else report.reduced_lti)
        return ReduceResponse(
            pipeline=report.pipeline, k=report.k,
            lam=report.lam.tolist(),
            truncated_sigmas=report.truncated_sigmas.tolist(),
            bound=report.bound, margins=report.margins, flags=report.flags,
            alpha=report.extras.get("alpha"), beta=report.extras.get("beta"),
            circuit=circuit, reduced=reduced_payload,
            reduced_lti=SystemPayload.from_system(report.reduced_lti),
            hinf=hinf_value, trajectory=trajectory, timing_s=report.timing_s,
        )

    return app


app = create_app()

__all__ = ["app", "create_app", "EXAMPLES"]
