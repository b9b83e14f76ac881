"""Balancing transformations, truncation, and the a-priori error bound.

``balance_pair`` works for any SPD (observability-like, controllability-like)
pair: the standard pair (Q, Pbreve), or the extended pair (S, T^{-1}) whose
balanced diagonal is the extended singular-value spectrum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
import scipy.linalg as sla

from .errors import BadOrder, NearSingularSpectrum, NotPD, Singular
from .sysmodel import LtiSystem, TOL_BAL, spectral_norm

NO_GAP_RATIO = 1.01  # spectrum ratios below this flag a tied cluster


@dataclass(frozen=True)
class BalancedRealization:
    """Balancing transformation W with W^T Go W = W^{-1} Gc W^{-T} = diag(Lambda)."""

    w: np.ndarray
    winv: np.ndarray
    lam: np.ndarray
    abar: Optional[np.ndarray] = None
    bbar: Optional[np.ndarray] = None
    cbar: Optional[np.ndarray] = None
    k: Optional[int] = None


@dataclass(frozen=True)
class ErrorCertificate:
    k: int
    truncated_sigmas: np.ndarray
    bound: float


def fix_column_signs(u: np.ndarray) -> np.ndarray:
    """Flip each column so its largest-magnitude entry is positive (first
    such entry wins on ties), making eigenvector bases deterministic."""
    u = u.copy()
    for j in range(u.shape[1]):
        i = int(np.argmax(np.abs(u[:, j])))
        if u[i, j] < 0:
            u[:, j] = -u[:, j]
    return u


def balance_pair(go: np.ndarray, gc: np.ndarray,
                 tol_bal: float = TOL_BAL) -> BalancedRealization:
    """Square-root balancing of an SPD pair.

    Factor Gc = L L^T, eigendecompose L^T Go L = U Sigma^2 U^T with Sigma
    non-increasing, and set W = L U Sigma^{-1/2}. Both balancing identities
    are verified before returning.
    """
    go = np.asarray(go, dtype=float)
    gc = np.asarray(gc, dtype=float)
    try:
        low = sla.cholesky((gc + gc.T) / 2.0, lower=True)
    except np.linalg.LinAlgError as exc:
        raise NotPD(f"controllability-side matrix is not PD: {exc}") from exc
    core = low.T @ go @ low
    evals, u = np.linalg.eigh((core + core.T) / 2.0)
    if evals[0] <= 0.0:
        raise NotPD(
            f"observability-side matrix is not PD (min eigenvalue {evals[0]:.3e})"
        )
    # descending order, deterministic signs
    order = np.arange(len(evals))[::-1]
    evals = evals[order]
    u = fix_column_signs(u[:, order])
    sigma = np.sqrt(evals)
    if sigma[-1] < 1e-12 * sigma[0]:
        raise NearSingularSpectrum(
            f"spectrum spans {sigma[0]:.3e} .. {sigma[-1]:.3e}"
        )
    w = low @ u @ np.diag(sigma ** -0.5)
    winv = np.diag(sigma ** 0.5) @ u.T @ sla.solve_triangular(low, np.eye(low.shape[0]), lower=True)
    lam = sigma
    resid_o = spectral_norm(w.T @ go @ w - np.diag(lam)) / max(spectral_norm(go), 1e-300)
    resid_c = spectral_norm(winv @ gc @ winv.T - np.diag(lam)) / max(spectral_norm(gc), 1e-300)
    if resid_o > tol_bal or resid_c > tol_bal:
        raise NearSingularSpectrum(
            f"balancing identities violated (residuals {resid_o:.3e}, {resid_c:.3e})"
        )
    return BalancedRealization(w=w, winv=winv, lam=lam)


def transform(sys: LtiSystem, w: np.ndarray,
              winv: Optional[np.ndarray] = None) -> LtiSystem:
    """Similarity transform: Abar = W^{-1} A W, Bbar = W^{-1} B, Cbar = C W."""
    w = np.asarray(w, dtype=float)
    if winv is None:
        if np.linalg.cond(w) > 1e14:
            raise Singular("transformation matrix is numerically singular")
        winv = np.linalg.inv(w)
    return LtiSystem(a=winv @ sys.a @ w, b=winv @ sys.b, c=sys.c @ w)


def truncate(sys: LtiSystem, k: int) -> LtiSystem:
    """Keep the leading k x k block of a balanced realization."""
    if not 1 <= k < sys.n:
        raise BadOrder(f"k must satisfy 1 <= k < {sys.n}, got {k}")
    return LtiSystem(a=sys.a[:k, :k], b=sys.b[:k, :], c=sys.c[:, :k])


def error_bound(lam: np.ndarray, k: int) -> ErrorCertificate:
    """Twice the sum of the truncated singular values."""
    lam = np.asarray(lam, dtype=float)
    n = len(lam)
    if not 0 <= k <= n:
        raise BadOrder(f"k must satisfy 0 <= k <= {n}, got {k}")
    if np.any(np.diff(lam) > 0):
        raise ValueError("spectrum must be sorted non-increasing")
    tail = lam[k:]
    return ErrorCertificate(k=k, truncated_sigmas=tail, bound=2.0 * float(np.sum(tail)))


def truncation_gaps(lam: np.ndarray) -> List[Tuple[int, float, bool]]:
    """Ratios sigma_i / sigma_{i+1} with a no-gap flag for tied clusters.

    Returns (index i [1-based position of the left element], ratio,
    informative) triples; callers choose k at large informative gaps.
    """
    lam = np.asarray(lam, dtype=float)
    out = []
    for i in range(len(lam) - 1):
        ratio = float(lam[i] / lam[i + 1])
        out.append((i + 1, ratio, ratio >= NO_GAP_RATIO))
    return out


__all__ = [
    "BalancedRealization",
    "ErrorCertificate",
    "balance_pair",
    "fix_column_signs",
    "transform",
    "truncate",
    "error_bound",
    "truncation_gaps",
    "NO_GAP_RATIO",
]
