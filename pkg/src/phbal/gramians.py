"""Lyapunov-equation solvers and generalized Gramian construction.

A generalized observability Gramian is any symmetric PSD Q with
Q A + A^T Q + C^T C <= 0; a generalized controllability Gramian is any
symmetric PSD Pbreve with A Pbreve + Pbreve A^T + B B^T <= 0. Equality
(zero slack) recovers the standard Gramians.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.linalg as sla

from .errors import IllConditioned, NotPD, Unstable
from .sysmodel import LtiSystem, TOL_PSD, spectral_norm, stability

LYAP_RESIDUAL_TOL = 1e-10


@dataclass(frozen=True)
class GramianPair:
    """Certified generalized Gramians with the slacks that produced them."""

    q: np.ndarray
    pbreve: np.ndarray
    slack_o: np.ndarray
    slack_c: np.ndarray
    margin_o: float
    margin_c: float
    scale_o: float
    scale_c: float

    def p(self) -> np.ndarray:
        """Inverse controllability Gramian P = Pbreve^{-1}."""
        return inverse_gramian(self.pbreve)


def solve_lyapunov(a: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Solve A^T X + X A + W = 0 for symmetric X (A stable, W symmetric).

    The controllability-side equation A X + X A^T + W = 0 is obtained by
    calling with A^T.
    """
    a = np.asarray(a, dtype=float)
    w = np.asarray(w, dtype=float)
    if np.max(np.linalg.eigvals(a).real) >= 0.0:
        raise Unstable("state matrix has an eigenvalue with nonnegative real part")
    # scipy solves M X + X M^T = rhs; with M = A^T this is A^T X + X A = -W.
    x = sla.solve_continuous_lyapunov(a.T, -w)
    x = (x + x.T) / 2.0
    resid = spectral_norm(a.T @ x + x @ a + w)
    scale = max(spectral_norm(w), 1e-300)
    if resid > LYAP_RESIDUAL_TOL * scale:
        raise IllConditioned(
            f"Lyapunov residual {resid:.3e} exceeds {LYAP_RESIDUAL_TOL:.1e} * {scale:.3e}"
        )
    return x


def certify_obs(q: np.ndarray, sys: LtiSystem) -> float:
    """Minimum eigenvalue of -(Q A + A^T Q + C^T C); >= 0 means Q is a
    valid generalized observability Gramian."""
    lhs = -(q @ sys.a + sys.a.T @ q + sys.c.T @ sys.c)
    return float(np.linalg.eigvalsh((lhs + lhs.T) / 2.0)[0])


def certify_ctrl(pbreve: np.ndarray, sys: LtiSystem) -> float:
    """Minimum eigenvalue of -(A Pbreve + Pbreve A^T + B B^T)."""
    lhs = -(sys.a @ pbreve + pbreve @ sys.a.T + sys.b @ sys.b.T)
    return float(np.linalg.eigvalsh((lhs + lhs.T) / 2.0)[0])


def obs_scale(q: np.ndarray, sys: LtiSystem) -> float:
    """Spectral norm of the observability inequality left-hand side, for
    relative-tolerance decisions on the absolute margin."""
    lhs = q @ sys.a + sys.a.T @ q + sys.c.T @ sys.c
    return max(spectral_norm((lhs + lhs.T) / 2.0),
               spectral_norm(sys.c.T @ sys.c), 1e-300)


def ctrl_scale(pbreve: np.ndarray, sys: LtiSystem) -> float:
    lhs = sys.a @ pbreve + pbreve @ sys.a.T + sys.b @ sys.b.T
    return max(spectral_norm((lhs + lhs.T) / 2.0),
               spectral_norm(sys.b @ sys.b.T), 1e-300)


def generalized_gramians(sys: LtiSystem,
                         slack_o: Optional[np.ndarray] = None,
                         slack_c: Optional[np.ndarray] = None) -> GramianPair:
    """Solve for Q and Pbreve with the given PSD slacks (zero slack gives
    the standard Gramians) and record the certified inequality margins."""
    n = sys.n
    slack_o = np.zeros((n, n)) if slack_o is None else np.asarray(slack_o, dtype=float)
    slack_c = np.zeros((n, n)) if slack_c is None else np.asarray(slack_c, dtype=float)
    q = solve_lyapunov(sys.a, sys.c.T @ sys.c + slack_o)
    pbreve = solve_lyapunov(sys.a.T, sys.b @ sys.b.T + slack_c)
    return GramianPair(
        q=q,
        pbreve=pbreve,
        slack_o=slack_o,
        slack_c=slack_c,
        margin_o=certify_obs(q, sys),
        margin_c=certify_ctrl(pbreve, sys),
        scale_o=obs_scale(q, sys),
        scale_c=ctrl_scale(pbreve, sys),
    )


def inverse_gramian(pbreve: np.ndarray) -> np.ndarray:
    """Symmetric inverse of an SPD Gramian, with accuracy check."""
    pbreve = np.asarray(pbreve, dtype=float)
    sym = (pbreve + pbreve.T) / 2.0
    eigs = np.linalg.eigvalsh(sym)
    if eigs[0] <= 0.0:
        raise NotPD(f"matrix is not positive definite (min eigenvalue {eigs[0]:.3e})")
    try:
        cho = sla.cho_factor(sym)
        p = sla.cho_solve(cho, np.eye(sym.shape[0]))
    except np.linalg.LinAlgError as exc:  # pragma: no cover - guarded above
        raise NotPD(str(exc)) from exc
    p = (p + p.T) / 2.0
    cond = eigs[-1] / eigs[0]
    resid = spectral_norm(sym @ p - np.eye(sym.shape[0]))
    if resid > 1e-10 * cond:
        raise IllConditioned(
            f"inverse residual {resid:.3e} exceeds 1e-10 * condition {cond:.3e}"
        )
    return p


def is_certified(margin: float, scale: float, tol: float = TOL_PSD) -> bool:
    """Accept an inequality margin allowing floating-point slack relative
    to the magnitude of the matrices involved."""
    return margin >= -tol * scale


__all__ = [
    "GramianPair",
    "solve_lyapunov",
    "generalized_gramians",
    "certify_obs",
    "certify_ctrl",
    "obs_scale",
    "ctrl_scale",
    "inverse_gramian",
    "is_certified",
]
