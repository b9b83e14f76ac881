"""Pydantic request/response models for the reduction service."""

from __future__ import annotations

from typing import Dict, List, Literal, Optional, Union

import numpy as np
from pydantic import BaseModel, Field, model_validator

Matrix = List[List[float]]


class SystemPayload(BaseModel):
    kind: Literal["lti", "ph"]
    matrices: Dict[str, Matrix]

    @classmethod
    def from_system(cls, sys) -> "SystemPayload":
        from ..sysmodel import PhSystem

        if isinstance(sys, PhSystem):
            return cls(kind="ph", matrices={
                "J": sys.j.tolist(), "R": sys.r.tolist(),
                "H": sys.h.tolist(), "B": sys.b.tolist(),
            })
        return cls(kind="lti", matrices={
            "A": sys.a.tolist(), "B": sys.b.tolist(), "C": sys.c.tolist(),
        })

    def to_system(self):
        from ..sysmodel import LtiSystem, validate_ph

        m = {k: np.asarray(v, dtype=float) for k, v in self.matrices.items()}
        if self.kind == "lti":
            return LtiSystem(a=m["A"], b=m["B"], c=m["C"])
        return validate_ph(m["J"], m["R"], m["H"], m["B"])


GammaSpec = Union[Literal["zero", "appendix"], Matrix, None]


class SimulateSpec(BaseModel):
    signal: str = "step"
    horizon: float = Field(1.0, gt=0)
    dt: Optional[float] = Field(None, gt=0)


class ReduceRequest(BaseModel):
    system: Optional[SystemPayload] = None
    example: Optional[Literal["msd", "rlc"]] = None
    pipeline: Literal["gen", "ext", "gen-ph", "ext-ph"]
    k: Optional[int] = Field(None, ge=1)
    pairs: Optional[int] = Field(None, ge=0)
    delta: Optional[float] = Field(None, gt=0)
    delta_c: Optional[float] = Field(None, gt=0)
    slack_o: Optional[float] = Field(None, ge=0)
    slack_c: Optional[float] = Field(None, ge=0)
    alpha: Optional[float] = Field(None, gt=0)
    beta: Optional[float] = Field(None, gt=0)
    gamma_o: GammaSpec = None
    gamma_c: GammaSpec = None
    weights: Optional[List[float]] = None
    simulate: Optional[SimulateSpec] = None
    hinf: bool = False
    tol: float = Field(1e-6, gt=0)

    @model_validator(mode="after")
    def _one_system_source(self):
        if (self.system is None) == (self.example is None):
            raise ValueError("provide exactly one of 'system' or 'example'")
        return self


class TrajectoryPayload(BaseModel):
    times: List[float]
    inputs: List[List[float]]
    outputs: List[List[float]]
    reduced_outputs: List[List[float]]
    dt: float


class ReduceResponse(BaseModel):
    pipeline: str
    k: int
    lam: List[float]
    truncated_sigmas: List[float]
    bound: float
    margins: Dict[str, float]
    flags: Dict[str, bool]
    alpha: Optional[float] = None
    beta: Optional[float] = None
    circuit: Optional[Dict[str, List[float]]] = None
    reduced: SystemPayload
    reduced_lti: SystemPayload
    hinf: Optional[float] = None
    trajectory: Optional[TrajectoryPayload] = None
    timing_s: float


class ExampleResponse(BaseModel):
    name: str
    system: SystemPayload
    n: int
    m: int
    spectral_abscissa: float


class ErrorResponse(BaseModel):
    error: str
    message: str


__all__ = [
    "SystemPayload",
    "SimulateSpec",
    "ReduceRequest",
    "ReduceResponse",
    "TrajectoryPayload",
    "ExampleResponse",
    "ErrorResponse",
]
