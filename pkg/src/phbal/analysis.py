"""Time- and frequency-domain analysis: fixed-step simulation, H-infinity
norms, L2 gain estimates, and the dissipation-inequality probe that
numerically witnesses the truncation error bound."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Tuple

import numpy as np

from .balancing import truncate
from .errors import CertificateMismatch, StepTooLarge, Unstable, ZeroInput
from .sysmodel import LtiSystem, spectral_norm, stability

DEFAULT_DT_CAP = 1e-3
ABSCISSA_DT_FACTOR = 1e-4
STEP_STABILITY_LIMIT = 0.1


@dataclass(frozen=True)
class Trajectory:
    """Uniformly sampled simulation record."""

    times: np.ndarray
    states: np.ndarray   # (steps, n)
    outputs: np.ndarray  # (steps, q)
    inputs: np.ndarray   # (steps, m)
    dt: float

    def __post_init__(self):
        lengths = {len(self.times), len(self.states), len(self.outputs), len(self.inputs)}
        if len(lengths) != 1:
            raise ValueError("trajectory arrays must share length")
        if self.dt <= 0:
            raise ValueError("dt must be positive")


@dataclass(frozen=True)
class DissipationProbe:
    """Per-step record of the storage-vs-supply inequality."""

    sigma_n: float
    alpha_beta: float
    qbar: np.ndarray
    pbar: np.ndarray
    times: np.ndarray
    s_values: np.ndarray
    supply_integral: np.ndarray
    violations: int
    max_witness: float       # largest |x_{r,n}| seen (should be ~0)
    max_yr_mismatch: float   # largest |y_r - yhat| against the truncation


# ---------------------------------------------------------------------------
# Input signals
# ---------------------------------------------------------------------------

def make_signal(kind: str, m: int = 1, **params) -> Callable[[float], np.ndarray]:
    """Input-signal factory. Kinds: zero; step(t0, level); sine(amp, omega);
    chirp(amp, f0, f1, span); piecewise(times, values) with zero-order hold."""
    if kind == "zero":
        return lambda t: np.zeros(m)
    if kind == "step":
        t0 = float(params.get("t0", 0.0))
        level = float(params.get("level", 1.0))
        return lambda t: np.full(m, level if t >= t0 else 0.0)
    if kind == "sine":
        amp = float(params.get("amp", 1.0))
        omega = float(params.get("omega", 1.0))
        return lambda t: np.full(m, amp * np.sin(omega * t))
    if kind == "chirp":
        amp = float(params.get("amp", 1.0))
        f0 = float(params.get("f0", 0.1))
        f1 = float(params.get("f1", 10.0))
        span = float(params.get("span", 1.0))
        rate = (f1 - f0) / span

        def chirp(t):
            phase = 2.0 * np.pi * (f0 * t + 0.5 * rate * t * t)
            return np.full(m, amp * np.sin(phase))

        return chirp
    if kind == "piecewise":
        times = np.asarray(params["times"], dtype=float)
        values = np.atleast_2d(np.asarray(params["values"], dtype=float))
        if values.shape[0] != len(times):
            values = values.T
        if values.shape[0] != len(times):
            raise ValueError("piecewise times/values length mismatch")

        def piecewise(t):
            idx = int(np.searchsorted(times, t, side="right")) - 1
            if idx < 0:
                return np.zeros(values.shape[1])
            return values[min(idx, len(times) - 1)].copy()

        return piecewise
    raise ValueError(f"unknown signal kind {kind!r}")


def parse_signal_spec(text: str, m: int = 1) -> Callable[[float], np.ndarray]:
    """Parse a compact signal spec: ``zero``, ``step:t0,level``,
    ``sine:amp,omega``, ``chirp:amp,f0,f1,span``, ``file:path`` (CSV rows
    ``t,u1..um``, zero-order hold)."""
    head, _, rest = text.partition(":")
    head = head.strip()
    if head == "zero":
        return make_signal("zero", m)
    if head == "step":
        vals = [float(v) for v in rest.split(",")] if rest else []
        return make_signal("step", m, t0=vals[0] if vals else 0.0,
                           level=vals[1] if len(vals) > 1 else 1.0)
    if head == "sine":
        vals = [float(v) for v in rest.split(",")] if rest else []
        return make_signal("sine", m, amp=vals[0] if vals else 1.0,
                           omega=vals[1] if len(vals) > 1 else 1.0)
    if head == "chirp":
        vals = [float(v) for v in rest.split(",")] if rest else []
        names = ("amp", "f0", "f1", "span")
        return make_signal("chirp", m, **dict(zip(names, vals)))
    if head == "file":
        data = np.loadtxt(rest, delimiter=",", skiprows=1, ndmin=2)
        return make_signal("piecewise", m, times=data[:, 0], values=data[:, 1:1 + m])
    raise ValueError(f"unknown signal spec {text!r}")


# ---------------------------------------------------------------------------
# Simulation
# ---------------------------------------------------------------------------

def default_dt(sys: LtiSystem, cap: float = DEFAULT_DT_CAP) -> float:
    """Step heuristic: 1e-4 of the dominant time constant, capped."""
    report = stability(sys)
    if report.spectral_abscissa >= 0:
        raise Unstable("cannot pick a default step for an unstable system")
    return min(ABSCISSA_DT_FACTOR / abs(report.spectral_abscissa), cap)


def _rk4(f, x0: np.ndarray, t0: float, steps: int, dt: float) -> Tuple[np.ndarray, np.ndarray]:
    times = t0 + dt * np.arange(steps + 1)
    xs = np.empty((steps + 1, len(x0)))
    xs[0] = x0
    x = np.array(x0, dtype=float)
    for i in range(steps):
        t = times[i]
        k1 = f(t, x)
        k2 = f(t + dt / 2.0, x + dt / 2.0 * k1)
        k3 = f(t + dt / 2.0, x + dt / 2.0 * k2)
        k4 = f(t + dt, x + dt * k3)
        x = x + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        xs[i + 1] = x
    return times, xs


def simulate(sys: LtiSystem, u: Callable[[float], np.ndarray],
             x0: Optional[np.ndarray] = None, horizon: float = 1.0,
             dt: Optional[float] = None) -> Trajectory:
    """Classical fixed-step 4th-order integration of xdot = Ax + Bu, y = Cx."""
    if dt is None:
        dt = default_dt(sys)
    if dt <= 0 or horizon < dt:
        raise ValueError("require dt > 0 and horizon >= dt")
    report = stability(sys)
    if dt * abs(report.spectral_abscissa) > STEP_STABILITY_LIMIT:
        raise StepTooLarge(
            f"dt * |spectral abscissa| = {dt * abs(report.spectral_abscissa):.3e} > "
            f"{STEP_STABILITY_LIMIT}"
        )
    x0 = np.zeros(sys.n) if x0 is None else np.asarray(x0, dtype=float).ravel()
    steps = int(round(horizon / dt))

    def f(t, x):
        return sys.a @ x + sys.b @ u(t)

    times, xs = _rk4(f, x0, 0.0, steps, dt)
    inputs = np.array([u(t) for t in times])
    outputs = xs @ sys.c.T
    return Trajectory(times=times, states=xs, outputs=outputs, inputs=inputs, dt=dt)


# ---------------------------------------------------------------------------
# Gains and norms
# ---------------------------------------------------------------------------

def l2_gain_estimate(y: np.ndarray, yhat: np.ndarray, u: np.ndarray,
                     dt: float = 1.0) -> float:
    """(integral |y - yhat|^2)^1/2 / (integral |u|^2)^1/2, rectangle rule."""
    y = np.atleast_2d(np.asarray(y, dtype=float))
    yhat = np.atleast_2d(np.asarray(yhat, dtype=float))
    u = np.atleast_2d(np.asarray(u, dtype=float))
    num = np.sqrt(np.sum((y - yhat) ** 2) * dt)
    den = np.sqrt(np.sum(u ** 2) * dt)
    if den == 0.0:
        raise ZeroInput("input signal has zero energy")
    return float(num / den)


def error_system(sys: LtiSystem, sysr: LtiSystem) -> LtiSystem:
    """Difference realization of the two transfer functions: block-diagonal
    state matrix, stacked inputs, subtracted outputs."""
    n, k = sys.n, sysr.n
    a = np.block([
        [sys.a, np.zeros((n, k))],
        [np.zeros((k, n)), sysr.a],
    ])
    b = np.vstack([sys.b, sysr.b])
    c = np.hstack([sys.c, -sysr.c])
    return LtiSystem(a=a, b=b, c=c)


def _has_imaginary_eig(sys: LtiSystem, gamma: float) -> bool:
    ham = np.block([
        [sys.a, sys.b @ sys.b.T / gamma],
        [-sys.c.T @ sys.c / gamma, -sys.a.T],
    ])
    eigs = np.linalg.eigvals(ham)
    scale = max(np.max(np.abs(eigs)), 1.0)
    return bool(np.any(np.abs(eigs.real) <= 1e-9 * scale))


def _frequency_sweep(sys: LtiSystem, points: int = 400) -> float:
    eigs = np.linalg.eigvals(sys.a)
    mags = np.abs(eigs)
    mags = mags[mags > 0]
    lo = (np.min(mags) if mags.size else 1.0) * 1e-3
    hi = (np.max(mags) if mags.size else 1.0) * 1e3
    omegas = np.concatenate([[0.0], np.logspace(np.log10(lo), np.log10(hi), points)])
    n = sys.n
    best = 0.0
    ident = np.eye(n)
    for w in omegas:
        g = sys.c @ np.linalg.solve(1j * w * ident - sys.a, sys.b)
        best = max(best, float(np.linalg.norm(g, 2)))
    return best


def hinf_norm(sys: LtiSystem, tol: float = 1e-6) -> float:
    """H-infinity norm by bisection on the imaginary-eigenvalue test of the
    associated Hamiltonian matrix, seeded by a log-frequency sweep."""
    report = stability(sys)
    if not report.is_stable:
        raise Unstable("H-infinity norm requires a stable system")
    if spectral_norm(sys.b) == 0.0 or spectral_norm(sys.c) == 0.0:
        return 0.0
    # a transfer function that is numerically zero (exact pole/zero
    # cancellation) would make the Hamiltonian test degenerate
    scale_hint = spectral_norm(sys.b) * spectral_norm(sys.c) / abs(report.spectral_abscissa)
    peak = _frequency_sweep(sys)
    if peak <= 1e-12 * scale_hint:
        return peak
    lo = peak
    hi = lo * 1.001
    for _ in range(200):
        if not _has_imaginary_eig(sys, hi):
            break
        lo = hi
        hi *= 2.0
    else:
        raise Unstable("H-infinity bisection failed to bracket the norm")
    while (hi - lo) > tol * hi:
        mid = 0.5 * (lo + hi)
        if _has_imaginary_eig(sys, mid):
            lo = mid
        else:
            hi = mid
    return hi


# ---------------------------------------------------------------------------
# Dissipation probe
# ---------------------------------------------------------------------------

def dissipation_probe(sys_bal: LtiSystem, w_e: np.ndarray, q: np.ndarray,
                      p: np.ndarray, lam_st: np.ndarray, alpha: float,
                      beta: float, u: Callable[[float], np.ndarray],
                      horizon: float, dt: float,
                      tol_diss_rel: float = 1e-6) -> DissipationProbe:
    """Co-simulate the balanced system and the one-state-truncation
    auxiliary system and check, step by step, the integrated dissipation
    inequality

        S(t+dt) - S(t) <= integral of (4 sigma_n^2 |u|^2 - |y - y_r|^2)

    for the storage S = z_o^T Qbar z_o + sigma_n^2 z_c^T Pbar z_c with
    z_o = xbar - x_r, z_c = xbar + x_r. The auxiliary input v (zero except
    its last entry, which cancels the last state's dynamics) keeps
    x_{r,n} = 0 for all time; both facts are verified numerically."""
    if not np.isclose(alpha, beta, rtol=1e-12, atol=0.0):
        raise CertificateMismatch(f"requires alpha = beta, got {alpha:g} != {beta:g}")
    n = sys_bal.n
    sigma_n = float(lam_st[-1])
    qbar = w_e.T @ q @ w_e
    pbar = w_e.T @ p @ w_e
    qbar = (qbar + qbar.T) / 2.0
    pbar = (pbar + pbar.T) / 2.0
    a, b, c = sys_bal.a, sys_bal.b, sys_bal.c

    def f(t, state):
        xbar = state[:n]
        xr = state[n:2 * n]
        ut = u(t)
        dxbar = a @ xbar + b @ ut
        dxr = a @ xr + b @ ut
        v_last = -(a[n - 1, : n - 1] @ xr[: n - 1] + b[n - 1, :] @ ut)
        dxr = dxr.copy()
        dxr[n - 1] += v_last
        y = c @ xbar
        yr = c @ xr
        dsupply = 4.0 * sigma_n ** 2 * float(ut @ ut) - float((y - yr) @ (y - yr))
        return np.concatenate([dxbar, dxr, [dsupply]])

    steps = int(round(horizon / dt))
    state0 = np.zeros(2 * n + 1)
    times, traj = _rk4(f, state0, 0.0, steps, dt)
    xbar_t = traj[:, :n]
    xr_t = traj[:, n:2 * n]
    supply = traj[:, -1]
    z_o = xbar_t - xr_t
    z_c = xbar_t + xr_t
    s_vals = np.einsum("ti,ij,tj->t", z_o, qbar, z_o) \
        + sigma_n ** 2 * np.einsum("ti,ij,tj->t", z_c, pbar, z_c)
    scale = max(float(np.max(np.abs(s_vals))), float(np.max(np.abs(supply))), 1.0)
    tol_diss = tol_diss_rel * scale
    ds = np.diff(s_vals)
    dsupply = np.diff(supply)
    violations = int(np.sum(ds > dsupply + tol_diss))
    max_witness = float(np.max(np.abs(xr_t[:, n - 1])))
    # y_r must coincide with the output of the (n-1)-order truncation
    sys_trunc = truncate(sys_bal, n - 1)
    traj_trunc = simulate(sys_trunc, u, horizon=horizon, dt=dt)
    yr_full = xr_t @ c.T
    yr_trunc = traj_trunc.outputs
    max_mismatch = float(np.max(np.abs(yr_full - yr_trunc)))
    return DissipationProbe(
        sigma_n=sigma_n, alpha_beta=float(alpha), qbar=qbar, pbar=pbar,
        times=times, s_values=s_vals, supply_integral=supply,
        violations=violations, max_witness=max_witness,
        max_yr_mismatch=max_mismatch,
    )


__all__ = [
    "Trajectory",
    "DissipationProbe",
    "make_signal",
    "parse_signal_spec",
    "default_dt",
    "simulate",
    "l2_gain_estimate",
    "error_system",
    "hinf_norm",
    "dissipation_probe",
    "DEFAULT_DT_CAP",
]
