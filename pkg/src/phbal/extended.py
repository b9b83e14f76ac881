"""Extended Gramian certificates.

An extended observability certificate is a triple (Q, S, alpha) making the
block inequality

    [[ -QA - A^T Q - C^T C,  Q - (alpha I + A)^T S ],
     [ (Q - (alpha I + A)^T S)^T,  S + S^T ]]  >=  0

hold; the controllability side is the (2n+m)-block inequality below with
(P, T, beta). The symmetric constructions S = Q (alpha Q + Gamma_o)^{-1} Q
and T = (beta Pbreve + Gamma_c)^{-1} provide certified instances, and
``find_scale`` searches for the smallest workable scale parameter.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from .errors import NoFeasibleScale, ShiftNotPD
from .sysmodel import LtiSystem, spectral_norm


@dataclass(frozen=True)
class ObsCertificate:
    q: np.ndarray
    s: np.ndarray
    alpha: float
    gamma_o: np.ndarray
    margin: float
    scale: float


@dataclass(frozen=True)
class CtrlCertificate:
    p: np.ndarray
    t: np.ndarray
    beta: float
    gamma_c: np.ndarray
    margin: float
    scale: float


def lmi13_block(q: np.ndarray, s: np.ndarray, alpha: float, sys: LtiSystem) -> np.ndarray:
    """Assemble the 2n x 2n extended observability inequality matrix."""
    a = sys.a
    x_o = -(q @ a + a.T @ q + sys.c.T @ sys.c)
    a_o = alpha * np.eye(sys.n) + a
    off = q - a_o.T @ s
    blk = np.block([[x_o, off], [off.T, s + s.T]])
    return (blk + blk.T) / 2.0


def lmi13_margin(q: np.ndarray, s: np.ndarray, alpha: float, sys: LtiSystem) -> float:
    return float(np.linalg.eigvalsh(lmi13_block(q, s, alpha, sys))[0])


def lmi14_block(p: np.ndarray, t: np.ndarray, beta: float, sys: LtiSystem) -> np.ndarray:
    """Assemble the (2n+m) x (2n+m) extended controllability inequality matrix."""
    a, b = sys.a, sys.b
    n, m = sys.n, sys.m
    a_c = beta * np.eye(n) + a
    blk = np.block([
        [-(p @ a + a.T @ p), -p + a_c.T @ t, -2.0 * p @ b],
        [(-p + a_c.T @ t).T, t + t.T, 2.0 * t.T @ b],
        [-2.0 * b.T @ p, 2.0 * b.T @ t, 4.0 * np.eye(m)],
    ])
    return (blk + blk.T) / 2.0


def lmi14_margin(p: np.ndarray, t: np.ndarray, beta: float, sys: LtiSystem) -> float:
    return float(np.linalg.eigvalsh(lmi14_block(p, t, beta, sys))[0])


def block_scale(blk: np.ndarray) -> float:
    return max(spectral_norm(blk), 1e-300)


def make_S(q: np.ndarray, gamma_o: Optional[np.ndarray], alpha: float) -> np.ndarray:
    """Symmetric certificate matrix S = Q (alpha Q + Gamma_o)^{-1} Q.

    With Gamma_o = 0 this reduces exactly to Q / alpha (computed directly
    so the degenerate case carries no extra rounding).
    """
    q = np.asarray(q, dtype=float)
    if gamma_o is None or not np.any(gamma_o):
        if alpha <= 0:
            raise ShiftNotPD("alpha must be positive when Gamma_o = 0")
        return q / alpha
    gamma_o = np.asarray(gamma_o, dtype=float)
    shift = alpha * q + gamma_o
    shift = (shift + shift.T) / 2.0
    eigs = np.linalg.eigvalsh(shift)
    if eigs[0] <= 0.0:
        raise ShiftNotPD(
            f"alpha*Q + Gamma_o has a nonpositive eigenvalue ({eigs[0]:.3e})"
        )
    s = q @ np.linalg.solve(shift, q)
    return (s + s.T) / 2.0


def make_T(pbreve: np.ndarray, gamma_c: Optional[np.ndarray], beta: float) -> np.ndarray:
    """Symmetric certificate matrix T = (beta Pbreve + Gamma_c)^{-1}."""
    tinv = make_T_inverse(pbreve, gamma_c, beta)
    eigs = np.linalg.eigvalsh(tinv)
    if eigs[0] <= 0.0:
        raise ShiftNotPD(
            f"beta*Pbreve + Gamma_c has a nonpositive eigenvalue ({eigs[0]:.3e})"
        )
    t = np.linalg.inv(tinv)
    return (t + t.T) / 2.0


def make_T_inverse(pbreve: np.ndarray, gamma_c: Optional[np.ndarray], beta: float) -> np.ndarray:
    """T^{-1} = beta Pbreve + Gamma_c, without the final inversion (the
    balancing path consumes T^{-1} directly)."""
    pbreve = np.asarray(pbreve, dtype=float)
    if gamma_c is None or not np.any(gamma_c):
        tinv = beta * pbreve
    else:
        tinv = beta * pbreve + np.asarray(gamma_c, dtype=float)
    return (tinv + tinv.T) / 2.0


def find_scale(build: Callable[[float], object],
               certify: Callable[[object], bool],
               start: float,
               max_doublings: int = 60,
               bisection_steps: int = 20) -> Tuple[float, object]:
    """Smallest scale on the doubling grid {start * 2^i} whose certificate
    passes ``certify``, refined by bisection between the last failing and
    first passing grid points. Returns (scale, certificate)."""
    if start <= 0:
        raise ValueError("start must be positive")
    lo = None
    hi = None
    cert_hi = None
    scale = start
    for _ in range(max_doublings + 1):
        cert = build(scale)
        if certify(cert):
            hi, cert_hi = scale, cert
            break
        lo = scale
        scale *= 2.0
    if hi is None:
        raise NoFeasibleScale(
            f"no certified scale in {max_doublings} doublings from {start:g}"
        )
    if lo is None:
        return hi, cert_hi  # already feasible at start
    for _ in range(bisection_steps):
        mid = 0.5 * (lo + hi)
        cert = build(mid)
        if certify(cert):
            hi, cert_hi = mid, cert
        else:
            lo = mid
    return hi, cert_hi


__all__ = [
    "ObsCertificate",
    "CtrlCertificate",
    "lmi13_block",
    "lmi13_margin",
    "lmi14_block",
    "lmi14_margin",
    "block_scale",
    "make_S",
    "make_T",
    "make_T_inverse",
    "find_scale",
]
