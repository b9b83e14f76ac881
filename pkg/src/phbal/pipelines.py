"""Reduction pipelines: generalized / extended balancing, each in a plain
(state-space) and a structure-preserving (port-Hamiltonian) variant."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Union

import numpy as np

from .balancing import balance_pair, error_bound, transform, truncate
from .errors import NotPSD, ShiftNotPD
from .extended import (
    find_scale,
    lmi13_block,
    lmi14_block,
    make_S,
    make_T,
    make_T_inverse,
)
from .gramians import (
    GramianPair,
    generalized_gramians,
    inverse_gramian,
    is_certified,
)
from .ph_preserve import (
    StructuredBalanceResult,
    extract_reduced_ph,
    extract_rlc_circuit,
    hamiltonian_gramians,
    rlc_pairing,
    struct_balance_extended,
    struct_balance_generalized,
)
from .sysmodel import LtiSystem, PhSystem, ph_to_lti, spectral_norm

PIPELINES = ("gen", "ext", "gen-ph", "ext-ph")
DEFAULT_SLACK_C = 1e-5  # keeps the controllability Gramian comfortably PD


@dataclass(frozen=True)
class ReductionReport:
    pipeline: str
    k: int
    lam: np.ndarray
    truncated_sigmas: np.ndarray
    bound: float
    margins: Dict[str, float]
    flags: Dict[str, bool]
    extras: Dict[str, object]
    w: np.ndarray
    winv: np.ndarray
    reduced_lti: LtiSystem
    reduced_ph: Optional[PhSystem]
    timing_s: float


def _as_gamma(gamma, n: int) -> Optional[np.ndarray]:
    if gamma is None:
        return None
    g = np.asarray(gamma, dtype=float)
    if g.shape != (n, n):
        raise ValueError(f"shaping matrix must be {n}x{n}, got {g.shape}")
    return (g + g.T) / 2.0


def _gramians(system, ph: Optional[PhSystem], lti: LtiSystem,
              delta, delta_c, slack_o, slack_c) -> GramianPair:
    if delta is not None or delta_c is not None:
        if ph is None:
            raise ValueError("energy-scaled Gramians require a port-Hamiltonian system")
        return hamiltonian_gramians(ph, delta if delta is not None else delta_c)
    n = lti.n
    so = (slack_o if slack_o is not None else 0.0) * np.eye(n)
    sc = (slack_c if slack_c is not None else DEFAULT_SLACK_C) * np.eye(n)
    return generalized_gramians(lti, slack_o=so, slack_c=sc)


def _find_beta(pbreve: np.ndarray, gamma_c, lti: LtiSystem, start: float = 1.0) -> float:
    p = inverse_gramian(pbreve)

    def build(b):
        try:
            t = make_T(pbreve, gamma_c, b)
        except ShiftNotPD:
            return None
        blk = lmi14_block(p, t, b, lti)
        return b, float(np.linalg.eigvalsh(blk)[0]), spectral_norm(blk)

    def certify(cert):
        return cert is not None and is_certified(cert[1], cert[2])

    beta, _ = find_scale(build, certify, start=start)
    return beta


def _find_alpha(q: np.ndarray, gamma_o, lti: LtiSystem, start: float) -> float:
    def build(a):
        try:
            s = make_S(q, gamma_o, a)
        except ShiftNotPD:
            return None
        blk = lmi13_block(q, s, a, lti)
        return a, float(np.linalg.eigvalsh(blk)[0]), spectral_norm(blk)

    def certify(cert):
        return cert is not None and is_certified(cert[1], cert[2])

    alpha, _ = find_scale(build, certify, start=start)
    return alpha


def _bound_for(lam: np.ndarray, k: int, keep: Optional[Sequence[int]]):
    if keep is None:
        cert = error_bound(lam, k)
        return cert.truncated_sigmas, cert.bound
    cut = list(keep)[k:]
    tail = np.sort(lam[cut])[::-1]
    return tail, 2.0 * float(np.sum(tail))


def run_pipeline(system: Union[LtiSystem, PhSystem], pipeline: str, *,
                 k: Optional[int] = None, pairs: Optional[int] = None,
                 delta: Optional[float] = None, delta_c: Optional[float] = None,
                 slack_o: Optional[float] = None, slack_c: Optional[float] = None,
                 alpha: Optional[float] = None, beta: Optional[float] = None,
                 gamma_o=None, gamma_c=None,
                 weights: Optional[Sequence[float]] = None) -> ReductionReport:
    """Run one of the four reduction pipelines and return a full report.

    gen      balance the generalized Gramian pair, truncate to order k.
    ext      balance the extended certificate pair (S, T^{-1}); alpha/beta
             are searched when not given.
    gen-ph   structure-preserving generalized balancing from Pbreve.
    ext-ph   structure-preserving extended balancing from Pbreve (with
             optional Gamma_o reshaping of the observability side);
             supports pair-wise truncation for two-block systems.
    """
    if pipeline not in PIPELINES:
        raise ValueError(f"pipeline must be one of {PIPELINES}")
    started = time.perf_counter()
    ph = system if isinstance(system, PhSystem) else None
    lti = ph_to_lti(ph) if ph is not None else system
    if pipeline.endswith("-ph") and ph is None:
        raise ValueError(f"pipeline {pipeline} requires a port-Hamiltonian system")
    if pairs is not None and not pipeline.endswith("-ph"):
        raise ValueError("pair-wise truncation requires a structure-preserving pipeline")
    if (k is None) == (pairs is None):
        raise ValueError("specify exactly one of k or pairs")
    n = lti.n
    gamma_o = _as_gamma(gamma_o, n)
    gamma_c = _as_gamma(gamma_c, n)
    if slack_o is None and pipeline == "ext":
        # the extended observability inequality needs X_o strictly PD,
        # which the zero-slack (equality) Gramian cannot provide
        slack_o = DEFAULT_SLACK_C
    gp = _gramians(system, ph, lti, delta, delta_c, slack_o, slack_c)
    margins: Dict[str, float] = {
        "gramian_obs": gp.margin_o, "gramian_ctrl": gp.margin_c,
    }
    flags: Dict[str, bool] = {}
    extras: Dict[str, object] = {}
    reduced_ph = None
    keep = None

    if pipeline == "gen":
        bal = balance_pair(gp.q, gp.pbreve)
        lam = bal.lam
        red = truncate(transform(lti, bal.w, bal.winv), k)
        w, winv = bal.w, bal.winv
        flags["ph_preserved"] = False
    elif pipeline == "ext":
        if beta is None:
            beta = _find_beta(gp.pbreve, gamma_c, lti)
        t = make_T(gp.pbreve, gamma_c, beta)
        blk14 = lmi14_block(gp.p(), t, beta, lti)
        m14 = float(np.linalg.eigvalsh(blk14)[0])
        if not is_certified(m14, spectral_norm(blk14)):
            raise NotPSD(f"extended controllability certificate fails (margin {m14:.3e})")
        if alpha is None:
            alpha = _find_alpha(gp.q, gamma_o, lti, start=beta)
        s = make_S(gp.q, gamma_o, alpha)
        blk13 = lmi13_block(gp.q, s, alpha, lti)
        m13 = float(np.linalg.eigvalsh(blk13)[0])
        if not is_certified(m13, spectral_norm(blk13)):
            raise NotPSD(f"extended observability certificate fails (margin {m13:.3e})")
        margins["lmi_obs"] = m13
        margins["lmi_ctrl"] = m14
        extras["alpha"] = alpha
        extras["beta"] = beta
        scale = np.sqrt(alpha * beta)
        tinv = make_T_inverse(gp.pbreve, gamma_c, beta)
        bal = balance_pair(scale * s, tinv / scale)
        lam = bal.lam
        red = truncate(transform(lti, bal.w, bal.winv), k)
        w, winv = bal.w, bal.winv
        flags["ph_preserved"] = False
    elif pipeline == "gen-ph":
        res = struct_balance_generalized(ph, gp.pbreve, "from_P", weights=weights)
        lam = res.lam_balanced
        if pairs is not None:
            k, keep = rlc_pairing(res, pairs)
            flags["block_preserved"] = True
        reduced_ph = extract_reduced_ph(ph, res, k, keep=keep)
        red = ph_to_lti(reduced_ph)
        w, winv = res.w, res.winv
        flags["ph_preserved"] = True
        flags["hbar_diagonal"] = True
        extras["hbar_diag"] = res.hbar_diag
    else:  # ext-ph
        if beta is None:
            beta = _find_beta(gp.pbreve, gamma_c, lti)
        reshaping = gamma_o is not None and np.any(gamma_o)
        res = struct_balance_extended(
            ph, gp.pbreve, "from_T", gamma_c, beta, weights=weights,
            partner_scale=None if reshaping else alpha)
        if not reshaping:
            alpha = res.alpha
        beta = res.beta
        if reshaping:
            # reshape the observability side with Gamma_o and re-balance;
            # the pair stays simultaneously diagonalizable with H only for
            # compatible shaping matrices (checked via the diagonal test)
            q_part = res.partner_gramian
            if alpha is None:
                alpha = _find_alpha(q_part, gamma_o, lti, start=beta)
            s = make_S(q_part, gamma_o, alpha)
            blk13 = lmi13_block(q_part, s, alpha, lti)
            m13 = float(np.linalg.eigvalsh(blk13)[0])
            if not is_certified(m13, spectral_norm(blk13)):
                raise NotPSD(
                    f"extended observability certificate fails (margin {m13:.3e})"
                )
            margins["lmi_obs"] = m13
            scale = np.sqrt(alpha * beta)
            tinv = make_T_inverse(gp.pbreve, gamma_c, beta)
            bal = balance_pair(scale * s, tinv / scale)
            hbar = bal.w.T @ ph.h @ bal.w
            from .ph_preserve import _diag_check
            hbar_diag = _diag_check(hbar)
            res = StructuredBalanceResult(
                w=bal.w, winv=bal.winv, lam=bal.lam, lam_balanced=bal.lam,
                partner_gramian=s, hbar_diag=hbar_diag, side="from_T",
                alpha=alpha, beta=beta,
                gauge_factor=float((alpha * beta) ** 0.25),
            )
        lam = res.lam_balanced
        if pairs is not None:
            k, keep = rlc_pairing(res, pairs)
            flags["block_preserved"] = True
        reduced_ph = extract_reduced_ph(ph, res, k, keep=keep)
        red = ph_to_lti(reduced_ph)
        w, winv = res.w, res.winv
        flags["ph_preserved"] = True
        flags["hbar_diagonal"] = True
        extras["alpha"] = alpha
        extras["beta"] = beta
        extras["hbar_diag"] = res.hbar_diag

    truncated, bound = _bound_for(lam, k, keep)
    if pairs is not None and reduced_ph is not None:
        try:
            extras["circuit"] = extract_rlc_circuit(reduced_ph)
        except Exception:
            flags["circuit_extracted"] = False
        else:
            flags["circuit_extracted"] = True
    elapsed = time.perf_counter() - started
    return ReductionReport(
        pipeline=pipeline, k=k, lam=lam, truncated_sigmas=truncated,
        bound=bound, margins=margins, flags=flags, extras=extras,
        w=w, winv=winv, reduced_lti=red, reduced_ph=reduced_ph,
        timing_s=elapsed,
    )


__all__ = ["ReductionReport", "run_pipeline", "PIPELINES", "DEFAULT_SLACK_C"]
