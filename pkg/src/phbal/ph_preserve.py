"""Structure-preserving balancing for port-Hamiltonian systems.

The route to a PH-preserving balancing transformation: factor one Gramian
(or extended certificate matrix) as phi^T phi, diagonalize the congruence
of H it induces, then search for a *diagonal* partner spectrum satisfying
the matching matrix inequality. The resulting transformation W balances
the pair and diagonalizes H simultaneously, so truncation keeps the PH
form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np
import scipy.linalg as sla

from .balancing import fix_column_signs
from .errors import (
    ConditionFailed,
    Infeasible,
    NotBlockDiagonal,
    NotPD,
    NotPSD,
    StructureLost,
)
from .extended import find_scale, lmi13_block, lmi13_margin, lmi14_block, lmi14_margin, make_T, make_T_inverse
from .gramians import GramianPair, certify_ctrl, certify_obs, ctrl_scale, inverse_gramian, is_certified, obs_scale
from .sysmodel import (
    LtiSystem,
    PhSystem,
    TOL_DIAG,
    TOL_PSD,
    ph_to_lti,
    spectral_norm,
    validate_ph,
)

EPS_STRICT_REL = 1e-8     # strict-inequality margin, relative to ||B B^T||
TOL_BLOCK = 1e-8          # allowed off-block mass in a block-diagonal W
DIAG_DETECT_REL = 1e-12   # off-diagonal mass below which a congruence is
                          # treated as already diagonal (keeps state order)

SIDES_DIRECT = ("from_P", "from_T")   # factor the controllability-side matrix
SIDES_INVERSE = ("from_Q", "from_S")  # factor the observability-side matrix


@dataclass(frozen=True)
class StructuredFactorization:
    """Cholesky factor phi of the side matrix, the eigenbasis U and
    eigenvalues Lambda_H of the induced congruence of H, and the
    transformed dynamics (Fside, Bside) entering the diagonal inequality."""

    phi: np.ndarray
    phi_inv: np.ndarray
    u: np.ndarray
    lam_h: np.ndarray
    fside: np.ndarray
    bside: np.ndarray
    side: str
    matrix: np.ndarray


@dataclass(frozen=True)
class StructuredBalanceResult:
    """Balancing transformation that also diagonalizes H.

    ``lam`` is the solved diagonal spectrum in balanced (descending) order;
    ``lam_balanced`` is the scale-normalized spectrum whose tail sums give
    the error bound (equal to ``lam`` for the generalized sides).
    ``w``/``winv`` use the scale-normalized gauge in which the extended
    construction with zero shaping matrices and equal scales collapses
    exactly to the generalized one; ``gauge_factor`` converts to the
    conventional extended gauge (w * gauge_factor).
    """

    w: np.ndarray
    winv: np.ndarray
    lam: np.ndarray
    lam_balanced: np.ndarray
    partner_gramian: np.ndarray
    hbar_diag: np.ndarray
    side: str
    alpha: Optional[float] = None
    beta: Optional[float] = None
    gauge_factor: float = 1.0
    solve_margin: float = 0.0


def commute_test(h: np.ndarray, pbreve: np.ndarray, q: np.ndarray,
                 tol: float = 1e-10) -> Tuple[bool, float]:
    """Test the simultaneous-diagonalizability condition
    H Pbreve^{-1} Q = Q Pbreve^{-1} H, returning (commutes, residual)."""
    p = inverse_gramian(pbreve)
    lhs = h @ p @ q
    rhs = q @ p @ h
    denom = max(spectral_norm(h) * spectral_norm(p) * spectral_norm(q), 1e-300)
    residual = spectral_norm(lhs - rhs) / denom
    return residual <= tol, float(residual)


def hamiltonian_gramians(ph: PhSystem, delta: float) -> GramianPair:
    """Energy-scaled Gramians Q = delta*H, Pbreve = delta*H^{-1}.

    Valid exactly when 2*delta*R - B B^T >= 0; rejected otherwise with the
    offending minimum eigenvalue."""
    if delta <= 0:
        raise ValueError("delta must be positive")
    cond = 2.0 * delta * ph.r - ph.b @ ph.b.T
    cond = (cond + cond.T) / 2.0
    min_eig = float(np.linalg.eigvalsh(cond)[0])
    if min_eig < -TOL_PSD * max(spectral_norm(cond), 1e-300):
        raise ConditionFailed(min_eig)
    q = delta * ph.h
    pbreve = delta * inverse_gramian(ph.h)
    sys = ph_to_lti(ph)
    return GramianPair(
        q=q, pbreve=pbreve,
        slack_o=np.zeros_like(q), slack_c=np.zeros_like(q),
        margin_o=certify_obs(q, sys), margin_c=certify_ctrl(pbreve, sys),
        scale_o=obs_scale(q, sys), scale_c=ctrl_scale(pbreve, sys),
    )


def factorize(ph: PhSystem, m: np.ndarray, side: str) -> StructuredFactorization:
    """Factor the side matrix m = phi^T phi (upper Cholesky) and
    diagonalize the induced congruence of H.

    Sides from_P/from_T factor a controllability-side matrix (Pbreve or
    T^{-1}) and use phi H phi^T; sides from_Q/from_S factor an
    observability-side matrix (Q or S) and use phi^{-T} H phi^{-1}. When
    the congruence is already diagonal the eigenbasis is fixed to the
    identity so diagonal systems keep their state order."""
    if side not in SIDES_DIRECT + SIDES_INVERSE:
        raise ValueError(f"unknown side {side!r}")
    m = np.asarray(m, dtype=float)
    m = (m + m.T) / 2.0
    try:
        phi = sla.cholesky(m)  # upper triangular, m = phi^T phi
    except np.linalg.LinAlgError as exc:
        raise NotPD(f"side matrix is not positive definite: {exc}") from exc
    n = m.shape[0]
    resid = spectral_norm(phi.T @ phi - m)
    if resid > 1e-10 * max(spectral_norm(m), 1e-300):
        raise NotPD(f"factorization residual {resid:.3e} too large")
    phi_inv = sla.solve_triangular(phi, np.eye(n))
    if side in SIDES_DIRECT:
        g = phi @ ph.h @ phi.T
    else:
        g = phi_inv.T @ ph.h @ phi_inv
    g = (g + g.T) / 2.0
    offdiag = spectral_norm(g - np.diag(np.diag(g)))
    if offdiag <= DIAG_DETECT_REL * max(spectral_norm(g), 1e-300):
        lam_h = np.diag(g).copy()
        u = np.eye(n)
    else:
        lam_h, u = np.linalg.eigh(g)
        u = fix_column_signs(u)
    if np.min(lam_h) <= 0:
        raise NotPD(
            f"induced energy congruence has a nonpositive eigenvalue ({np.min(lam_h):.3e})"
        )
    f = ph.f
    if side in SIDES_DIRECT:
        fside = u.T @ phi_inv.T @ f @ phi_inv @ u
        bside = u.T @ phi_inv.T @ ph.b
    else:
        fside = u.T @ phi @ f @ phi.T @ u
        bside = u.T @ phi @ ph.b
    return StructuredFactorization(
        phi=phi, phi_inv=phi_inv, u=u, lam_h=lam_h,
        fside=fside, bside=bside, side=side, matrix=m,
    )


def _ruiz_equilibrate(msym: np.ndarray, iterations: int = 20) -> np.ndarray:
    """Diagonal scaling that balances the row maxima of a nonnegative
    symmetric magnitude matrix."""
    work = msym + 1e-300
    delta = np.ones(work.shape[0])
    for _ in range(iterations):
        r = np.sqrt(np.sqrt(work.max(axis=1)))
        work = work / r[:, None] / r[None, :]
        delta = delta / r
    return delta


def _solve_diag_primitive(k_mat: np.ndarray, bb: np.ndarray,
                          cost: np.ndarray, target_rel: float) -> np.ndarray:
    """Find y > 0 minimizing cost @ y subject to

        -(diag(y) K + K^T diag(y)) - BB  >=  target_rel * ||BB|| * I.

    The constraint is affine in the n scalar variables y, so this is a
    linear-objective semidefinite feasibility problem. The data are
    equilibrated by a diagonal congruence (which commutes with diag(y) and
    therefore preserves the problem exactly) before the interior-point
    solve; the caller re-certifies the true margin by eigendecomposition.
    """
    import cvxpy as cp

    n = k_mat.shape[0]
    nbb = max(spectral_norm(bb), 1e-300)
    delta = _ruiz_equilibrate(np.abs(k_mat) + np.abs(k_mat.T) + np.abs(bb))
    ke = delta[:, None] * k_mat * delta[None, :]
    bbe = delta[:, None] * bb * delta[None, :]
    sc = max(spectral_norm(bbe), spectral_norm(ke) * 1e-16, 1e-300)
    ke = ke / sc
    bbe = bbe / sc
    # exact image of the identity right-hand side under the congruence
    rhs = np.diag(delta ** 2) * (target_rel * nbb / sc)
    cost_scale = max(np.max(np.abs(cost)), 1e-300)
    y = cp.Variable(n, pos=True)
    constraint = -(cp.diag(y) @ ke + ke.T @ cp.diag(y)) - bbe >> rhs
    problem = cp.Problem(cp.Minimize((cost / cost_scale) @ y), [constraint])
    for solver in ("CLARABEL", "SCS"):
        try:
            problem.solve(solver=solver)
        except cp.error.SolverError:
            continue
        if y.value is not None and problem.status in ("optimal", "optimal_inaccurate"):
            return np.asarray(y.value, dtype=float)
    raise Infeasible(
        f"diagonal inequality solve failed (status {problem.status})",
        best_margin=float("-inf"),
    )


def solve_diag_scaling(fact: StructuredFactorization, strict: bool,
                       weights: Optional[Sequence[float]] = None,
                       max_retries: int = 6) -> np.ndarray:
    """Diagonal spectrum Lambda (positive, in the factorization's mode
    order) such that the side-appropriate inequality holds with margin
    >= 0 (non-strict sides) or >= EPS_STRICT_REL * ||B B^T|| (strict
    sides), approximately minimizing sum(weights * Lambda^2).

    The margin is re-certified by an independent eigendecomposition of
    the assembled inequality; the solve is retried with a larger interior
    pad if the recertification falls short."""
    n = len(fact.lam_h)
    w = np.ones(n) if weights is None else np.asarray(weights, dtype=float)
    if np.any(w <= 0):
        raise ValueError("weights must be positive")
    if fact.side in SIDES_DIRECT:
        # -(d/lam_h) F - F^T (d/lam_h) - BB >= margin, with y = d / lam_h
        k_mat = fact.fside
        cost = w * fact.lam_h
        to_d = fact.lam_h
    else:
        # -F (lam_h d) - (lam_h d) F^T - BB >= margin, with y = lam_h * d
        k_mat = fact.fside.T
        cost = w / fact.lam_h
        to_d = 1.0 / fact.lam_h
    bb = fact.bside @ fact.bside.T
    nbb = max(spectral_norm(bb), 1e-300)
    margin_min = EPS_STRICT_REL * nbb if strict else 0.0
    # Both strict and non-strict solves target the same relative interior
    # pad so that exactly scale-degenerate problems produce proportional
    # solutions (needed for the zero-shaping/equal-scale collapse).
    target_rel = EPS_STRICT_REL
    best_margin = float("-inf")
    best_y = None
    for _ in range(max_retries):
        y = _solve_diag_primitive(k_mat, bb, cost, target_rel)
        m = -(np.diag(y) @ k_mat + k_mat.T @ np.diag(y)) - bb
        margin = float(np.linalg.eigvalsh((m + m.T) / 2.0)[0])
        if margin > best_margin:
            best_margin, best_y = margin, y
        if margin >= margin_min and np.all(y > 0):
            d = y * to_d
            return np.sqrt(d)
        target_rel *= 10.0
    raise Infeasible("diagonal inequality margin not reached", best_margin=best_margin)


def _diag_check(hbar: np.ndarray) -> np.ndarray:
    off = spectral_norm(hbar - np.diag(np.diag(hbar)))
    if off > TOL_DIAG * max(spectral_norm(hbar), 1e-300):
        raise StructureLost(
            f"transformed energy matrix is not diagonal (off-diagonal {off:.3e})"
        )
    return np.diag(hbar).copy()


def _verify_balanced(w, winv, go, gc, lam, context: str):
    resid_o = spectral_norm(w.T @ go @ w - np.diag(lam)) / max(spectral_norm(go), 1e-300)
    resid_c = spectral_norm(winv @ gc @ winv.T - np.diag(lam)) / max(spectral_norm(gc), 1e-300)
    if resid_o > 1e-8 or resid_c > 1e-8:
        raise StructureLost(
            f"{context}: balancing identities violated "
            f"(residuals {resid_o:.3e}, {resid_c:.3e})"
        )


def struct_balance_generalized(ph: PhSystem, m: np.ndarray, side: str,
                               weights: Optional[Sequence[float]] = None
                               ) -> StructuredBalanceResult:
    """Structure-preserving generalized balancing from one Gramian.

    from_P: m is a generalized controllability Gramian; the diagonal
    search produces the partner observability Gramian. from_Q is the dual.
    """
    if side not in ("from_P", "from_Q"):
        raise ValueError("side must be from_P or from_Q")
    sys = ph_to_lti(ph)
    if side == "from_P":
        margin, scale = certify_ctrl(m, sys), ctrl_scale(m, sys)
    else:
        margin, scale = certify_obs(m, sys), obs_scale(m, sys)
    if not is_certified(margin, scale):
        raise NotPSD(
            f"input matrix is not a certified generalized Gramian "
            f"(margin {margin:.3e}, scale {scale:.3e})"
        )
    fact = factorize(ph, m, side)
    lam = solve_diag_scaling(fact, strict=False, weights=weights)
    order = np.argsort(-lam, kind="stable")
    lam_s = lam[order]
    lam_h_s = fact.lam_h[order]
    u_s = fact.u[:, order]
    d = lam ** 2
    partner = fact.phi_inv @ fact.u @ np.diag(d) @ fact.u.T @ fact.phi_inv.T
    partner = (partner + partner.T) / 2.0
    if side == "from_P":
        w = fact.phi.T @ u_s @ np.diag(lam_s ** -0.5)
        winv = np.diag(lam_s ** 0.5) @ u_s.T @ fact.phi_inv.T
        go, gc = partner, m
    else:
        w = fact.phi_inv @ u_s @ np.diag(lam_s ** 0.5)
        winv = np.diag(lam_s ** -0.5) @ u_s.T @ fact.phi
        go, gc = m, partner
    _verify_balanced(w, winv, go, gc, lam_s, "generalized structure-preserving balance")
    hbar_diag = _diag_check(w.T @ ph.h @ w)
    return StructuredBalanceResult(
        w=w, winv=winv, lam=lam_s, lam_balanced=lam_s,
        partner_gramian=partner, hbar_diag=hbar_diag, side=side,
    )


def struct_balance_extended(ph: PhSystem, m: np.ndarray, side: str,
                            gamma: Optional[np.ndarray], scale: float,
                            weights: Optional[Sequence[float]] = None,
                            partner_scale: Optional[float] = None
                            ) -> StructuredBalanceResult:
    """Structure-preserving extended balancing.

    from_T: m = Pbreve, gamma = Gamma_c, scale = beta; T is built and its
    block inequality certified, the strict diagonal search yields the
    spectrum, the partner observability matrix Q is assembled, and the
    second scale alpha is taken as ``partner_scale`` when provided (it
    must certify) or found by the doubling/bisection search starting at
    beta. from_S is the exact dual (m = Q, gamma = Gamma_o, scale =
    alpha).

    The returned W uses the scale-normalized gauge (see
    StructuredBalanceResult); multiply by ``gauge_factor`` to recover the
    conventional extended transformation.
    """
    if side not in ("from_T", "from_S"):
        raise ValueError("side must be from_T or from_S")
    if scale <= 0:
        raise ValueError("scale must be positive")
    sys = ph_to_lti(ph)
    n = ph.n
    if side == "from_T":
        beta = scale
        p = inverse_gramian(m)
        t = make_T(m, gamma, beta)
        blk = lmi14_block(p, t, beta, sys)
        margin = float(np.linalg.eigvalsh(blk)[0])
        if not is_certified(margin, spectral_norm(blk)):
            raise NotPSD(
                f"extended controllability certificate fails "
                f"(margin {margin:.3e}, scale {spectral_norm(blk):.3e})"
            )
        side_matrix = make_T_inverse(m, gamma, beta)
    else:
        alpha = scale
        from .extended import make_S
        s = make_S(m, gamma, alpha)
        blk = lmi13_block(m, s, alpha, sys)
        margin = float(np.linalg.eigvalsh(blk)[0])
        if not is_certified(margin, spectral_norm(blk)):
            raise NotPSD(
                f"extended observability certificate fails "
                f"(margin {margin:.3e}, scale {spectral_norm(blk):.3e})"
            )
        side_matrix = s
    fact = factorize(ph, side_matrix, side)
    lam_solver = solve_diag_scaling(fact, strict=True, weights=weights)
    d = lam_solver ** 2
    partner = fact.phi_inv @ fact.u @ np.diag(d) @ fact.u.T @ fact.phi_inv.T
    partner = (partner + partner.T) / 2.0

    if side == "from_T":
        q = partner

        def build(a):
            s_cand = q / a
            blk13 = lmi13_block(q, s_cand, a, sys)
            return a, float(np.linalg.eigvalsh(blk13)[0]), spectral_norm(blk13)

        def certify(cert):
            _, mg, sc = cert
            return is_certified(mg, sc)

        if partner_scale is not None:
            cert = build(partner_scale)
            if not certify(cert):
                raise NotPSD(
                    f"requested partner scale {partner_scale:g} does not certify "
                    f"(margin {cert[1]:.3e})"
                )
            alpha = partner_scale
        else:
            alpha, _ = find_scale(build, certify, start=beta)
        lam_st = lam_solver / np.sqrt(alpha)
        gauge = (alpha * beta) ** 0.25
        order = np.argsort(-lam_st, kind="stable")
        lam_s = lam_solver[order]
        lam_st_s = lam_st[order]
        lam_h_s = fact.lam_h[order]
        u_s = fact.u[:, order]
        w = beta ** -0.25 * (fact.phi.T @ u_s @ np.diag(lam_s ** -0.5))
        winv = beta ** 0.25 * (np.diag(lam_s ** 0.5) @ u_s.T @ fact.phi_inv.T)
        # balanced pair in the normalized gauge
        go = np.sqrt(alpha * beta) * (q / alpha)
        gc = side_matrix / np.sqrt(alpha * beta)
    else:
        pbreve = partner

        def build(b):
            t_cand = inverse_gramian(b * pbreve)
            p_cand = inverse_gramian(pbreve)
            blk14 = lmi14_block(p_cand, t_cand, b, sys)
            return b, float(np.linalg.eigvalsh(blk14)[0]), spectral_norm(blk14)

        def certify(cert):
            _, mg, sc = cert
            return is_certified(mg, sc)

        if partner_scale is not None:
            cert = build(partner_scale)
            if not certify(cert):
                raise NotPSD(
                    f"requested partner scale {partner_scale:g} does not certify "
                    f"(margin {cert[1]:.3e})"
                )
            beta = partner_scale
        else:
            beta, _ = find_scale(build, certify, start=alpha)
        lam_st = np.sqrt(beta) * lam_solver
        gauge = (alpha * beta) ** 0.25
        order = np.argsort(-lam_st, kind="stable")
        lam_s = lam_solver[order]
        lam_st_s = lam_st[order]
        lam_h_s = fact.lam_h[order]
        u_s = fact.u[:, order]
        w = alpha ** -0.25 * (fact.phi_inv @ u_s @ np.diag(lam_s ** 0.5))
        winv = alpha ** 0.25 * (np.diag(lam_s ** -0.5) @ u_s.T @ fact.phi)
        go = np.sqrt(alpha * beta) * side_matrix
        gc = (beta * pbreve) / np.sqrt(alpha * beta)
    _verify_balanced(w, winv, go, gc, lam_st_s, "extended structure-preserving balance")
    hbar_diag = _diag_check(w.T @ ph.h @ w)
    return StructuredBalanceResult(
        w=w, winv=winv, lam=lam_s, lam_balanced=lam_st_s,
        partner_gramian=partner, hbar_diag=hbar_diag, side=side,
        alpha=alpha, beta=beta, gauge_factor=gauge,
    )


def extract_reduced_ph(ph: PhSystem, result: StructuredBalanceResult, k: int,
                       keep: Optional[Sequence[int]] = None) -> PhSystem:
    """Truncate in the structure-preserving balanced coordinates and read
    off the reduced PH matrices.

    ``keep`` optionally reorders the balanced states (a permutation of
    0..n-1, e.g. from :func:`rlc_pairing`) before keeping the leading k.
    """
    n = ph.n
    if not 1 <= k < n:
        raise ValueError(f"k must satisfy 1 <= k < {n}, got {k}")
    w = result.w
    winv = result.winv
    if keep is not None:
        perm = list(keep)
        if sorted(perm) != list(range(n)):
            raise ValueError("keep must be a permutation of all balanced states")
        w = w[:, perm]
        winv = winv[perm, :]
    hbar = w.T @ ph.h @ w
    hbar_diag = _diag_check(hbar)
    fbar = winv @ ph.f @ winv.T
    f11 = fbar[:k, :k]
    j_r = (f11 - f11.T) / 2.0
    r_r = -(f11 + f11.T) / 2.0
    h_r = np.diag(hbar_diag[:k])
    b_r = (winv @ ph.b)[:k, :]
    try:
        return validate_ph(j_r, r_r, h_r, b_r)
    except Exception as exc:
        raise StructureLost(f"reduced system fails PH validation: {exc}") from exc


def rlc_pairing(result: StructuredBalanceResult, pairs_to_cut: int,
                block_sizes: Optional[Tuple[int, int]] = None
                ) -> Tuple[int, list]:
    """Pair-wise truncation order for two-block physical systems.

    Classifies each balanced state by which original state block its W
    column lives in (rejecting mixed columns), then marks the
    ``pairs_to_cut`` smallest-spectrum states of *each* block for
    truncation. Returns (k, keep_order) where keep_order is a permutation
    of the balanced states: retained block-1 states, retained block-2
    states, then the truncated ones.
    """
    n = result.w.shape[0]
    if block_sizes is None:
        block_sizes = (n // 2, n - n // 2)
    n1, n2 = block_sizes
    if n1 + n2 != n:
        raise ValueError("block sizes must sum to the state dimension")
    if pairs_to_cut < 0 or pairs_to_cut > min(n1, n2):
        raise ValueError("pairs_to_cut out of range")
    members: dict = {1: [], 2: []}
    for col in range(n):
        mass1 = float(np.linalg.norm(result.w[:n1, col]))
        mass2 = float(np.linalg.norm(result.w[n1:, col]))
        total = max(mass1, mass2, 1e-300)
        off = min(mass1, mass2) / total
        if off > TOL_BLOCK:
            raise NotBlockDiagonal(
                f"balanced state {col} mixes the two blocks "
                f"(off-block fraction {off:.3e})"
            )
        members[1 if mass1 >= mass2 else 2].append(col)
    if len(members[1]) != n1 or len(members[2]) != n2:
        raise NotBlockDiagonal(
            f"block membership counts {len(members[1])}/{len(members[2])} "
            f"do not match the partition {n1}/{n2}"
        )
    # columns are already in descending spectrum order
    keep1 = members[1][: n1 - pairs_to_cut]
    cut1 = members[1][n1 - pairs_to_cut:]
    keep2 = members[2][: n2 - pairs_to_cut]
    cut2 = members[2][n2 - pairs_to_cut:]
    k = n - 2 * pairs_to_cut
    return k, keep1 + keep2 + cut1 + cut2


def extract_rlc_circuit(ph_r: PhSystem) -> dict:
    """Read circuit parameters off a reduced two-block ladder PH system.

    Applies the diagonal rescaling (split evenly between the charge and
    flux coordinates) that gives the capacitor-inductor coupling block a
    unit diagonal, then reads capacitances, inductances, resistances and
    the coupling ratios directly from the normalized matrices."""
    n = ph_r.n
    if n % 2:
        raise ValueError("expected an even state dimension (charge/flux pairs)")
    nc = n // 2
    j1 = ph_r.j[:nc, nc:]
    diag = np.diag(j1)
    if np.any(diag <= 0):
        raise StructureLost("coupling block has a nonpositive diagonal entry")
    d_half = 1.0 / np.sqrt(diag)
    d = np.concatenate([d_half, d_half])
    j_n = d[:, None] * ph_r.j * d[None, :]
    r_n = d[:, None] * ph_r.r * d[None, :]
    h_n = ph_r.h / d[:, None] / d[None, :]
    b_n = d[:, None] * ph_r.b
    caps = 1.0 / np.diag(h_n)[:nc]
    inds = 1.0 / np.diag(h_n)[nc:]
    r_cap = 1.0 / np.diag(r_n)[:nc]
    r_ind = np.diag(r_n)[nc:]
    couplings = [-float(j_n[i, nc + i + 1]) for i in range(nc - 1)]
    return {
        "capacitances": caps,
        "inductances": inds,
        "cap_resistances": r_cap,
        "ind_resistances": r_ind,
        "input_gain": float(np.max(np.abs(b_n))),
        "couplings": couplings,
        "j_normalized": j_n,
        "r_normalized": r_n,
        "h_normalized": h_n,
        "b_normalized": b_n,
    }


__all__ = [
    "StructuredFactorization",
    "StructuredBalanceResult",
    "commute_test",
    "hamiltonian_gramians",
    "factorize",
    "solve_diag_scaling",
    "struct_balance_generalized",
    "struct_balance_extended",
    "extract_reduced_ph",
    "rlc_pairing",
    "extract_rlc_circuit",
    "EPS_STRICT_REL",
]
