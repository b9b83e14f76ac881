"""System types: LTI state-space triples, port-Hamiltonian quadruples,
validity checks, conversions, and the two built-in example networks."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionMismatch,
    DissipationIndefinite,
    HamiltonianNotPD,
    NotSkew,
    PhValidationError,
)

# Tolerances used throughout the package (relative to spectral norm).
TOL_PSD = 1e-9   # semidefiniteness
TOL_PD = 1e-12   # strict definiteness
TOL_SKEW = 1e-8  # accepted skew-symmetry deviation on input
TOL_BAL = 1e-8   # balancing identity residual
TOL_DIAG = 1e-8  # off-diagonal mass of a diagonalized energy matrix


def _as_matrix(x, name: str) -> np.ndarray:
    a = np.asarray(x, dtype=float)
    if a.ndim == 1:
        a = a.reshape(-1, 1)
    if a.ndim != 2:
        raise DimensionMismatch(f"{name} must be a 2-D matrix, got ndim={a.ndim}")
    return a


def spectral_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a, 2)) if a.size else 0.0


def min_eig_sym(a: np.ndarray) -> float:
    """Minimum eigenvalue of the symmetric part of ``a``."""
    s = (a + a.T) / 2.0
    return float(np.linalg.eigvalsh(s)[0])


@dataclass(frozen=True)
class LtiSystem:
    """State-space triple: xdot = A x + B u, y = C x."""

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray

    def __post_init__(self):
        a = _as_matrix(self.a, "A")
        b = _as_matrix(self.b, "B")
        c = _as_matrix(self.c, "C")
        if a.shape[0] != a.shape[1]:
            raise DimensionMismatch(f"A must be square, got {a.shape}")
        if b.shape[0] != a.shape[0]:
            raise DimensionMismatch(f"B has {b.shape[0]} rows, expected {a.shape[0]}")
        if c.shape[1] != a.shape[0]:
            raise DimensionMismatch(f"C has {c.shape[1]} columns, expected {a.shape[0]}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @property
    def n(self) -> int:
        return self.a.shape[0]

    @property
    def m(self) -> int:
        return self.b.shape[1]

    @property
    def q(self) -> int:
        return self.c.shape[0]


@dataclass(frozen=True)
class PhSystem:
    """Port-Hamiltonian system: xdot = (J - R) H x + B u, y = B^T H x.

    J is stored skew-symmetrized, R and H symmetrized. Construct through
    :func:`validate_ph` to get the structural checks.
    """

    j: np.ndarray
    r: np.ndarray
    h: np.ndarray
    b: np.ndarray
    skew_deviation: float = field(default=0.0)

    @property
    def n(self) -> int:
        return self.j.shape[0]

    @property
    def m(self) -> int:
        return self.b.shape[1]

    @property
    def f(self) -> np.ndarray:
        """Combined interconnection-dissipation matrix F = J - R."""
        return self.j - self.r


@dataclass(frozen=True)
class StabilityReport:
    eigenvalues: np.ndarray
    spectral_abscissa: float
    is_stable: bool


def ph_violations(j, r, h, b, tol_skew: float = TOL_SKEW,
                  tol_psd: float = TOL_PSD, tol_pd: float = TOL_PD):
    """Return a list of (invariant-name, margin) pairs for violated
    port-Hamiltonian structural invariants. Empty list means valid."""
    j = _as_matrix(j, "J")
    r = _as_matrix(r, "R")
    h = _as_matrix(h, "H")
    b = _as_matrix(b, "B")
    n = j.shape[0]
    violations = []
    for name, mat in (("J", j), ("R", r), ("H", h)):
        if mat.shape != (n, n):
            raise DimensionMismatch(f"{name} must be {n}x{n}, got {mat.shape}")
    if b.shape[0] != n:
        raise DimensionMismatch(f"B has {b.shape[0]} rows, expected {n}")

    skew_dev = spectral_norm((j + j.T) / 2.0)
    if skew_dev > tol_skew * max(spectral_norm(j), 1e-300):
        violations.append(("NotSkew", skew_dev))

    r_sym = (r + r.T) / 2.0
    r_min = float(np.linalg.eigvalsh(r_sym)[0]) if n else 0.0
    if r_min < -tol_psd * max(spectral_norm(r_sym), 1e-300):
        violations.append(("DissipationIndefinite", r_min))

    h_sym = (h + h.T) / 2.0
    h_min = float(np.linalg.eigvalsh(h_sym)[0]) if n else 0.0
    if h_min <= tol_pd * spectral_norm(h_sym):
        violations.append(("HamiltonianNotPD", h_min))
    return violations


def validate_ph(j, r, h, b, tol_skew: float = TOL_SKEW,
                tol_psd: float = TOL_PSD, tol_pd: float = TOL_PD) -> PhSystem:
    """Validate the three structural invariants and return a canonicalized
    :class:`PhSystem` (J skew-symmetrized, R/H symmetrized).

    Raises the invariant-specific error when a single invariant fails, or
    :class:`PhValidationError` listing all failures when several do.
    """
    violations = ph_violations(j, r, h, b, tol_skew, tol_psd, tol_pd)
    if violations:
        if len(violations) == 1:
            name, margin = violations[0]
            cls = {"NotSkew": NotSkew,
                   "DissipationIndefinite": DissipationIndefinite,
                   "HamiltonianNotPD": HamiltonianNotPD}[name]
            raise cls(f"{name}: margin {margin:.6e}")
        raise PhValidationError(violations)
    j = _as_matrix(j, "J")
    r = _as_matrix(r, "R")
    h = _as_matrix(h, "H")
    b = _as_matrix(b, "B")
    skew_dev = spectral_norm((j + j.T) / 2.0)
    return PhSystem(
        j=(j - j.T) / 2.0,
        r=(r + r.T) / 2.0,
        h=(h + h.T) / 2.0,
        b=b,
        skew_deviation=skew_dev,
    )


def ph_to_lti(ph: PhSystem) -> LtiSystem:
    """Convert to state-space form: A = (J-R) H, C = B^T H."""
    a = ph.f @ ph.h
    c = ph.b.T @ ph.h
    return LtiSystem(a=a, b=ph.b.copy(), c=c)


def stability(sys: LtiSystem) -> StabilityReport:
    eigs = np.linalg.eigvals(sys.a)
    abscissa = float(np.max(eigs.real)) if eigs.size else float("-inf")
    return StabilityReport(eigenvalues=eigs, spectral_abscissa=abscissa,
                           is_stable=abscissa < 0.0)


def build_msd_example() -> PhSystem:
    """Ten-state mass-spring-damper chain: five masses in series, springs
    between neighbours plus a wall spring at the far end, dampers on the
    last three inter-mass links, force input on the first mass."""
    k = np.array([4.0, 7.0, 2.0, 5.0, 3.0])
    m = np.array([1.5, 0.5, 4.0, 2.0, 1.25])
    b2, b3, b4 = 50.0, 20.0, 5.0
    stiffness = np.array([
        [k[0], -k[0], 0.0, 0.0, 0.0],
        [-k[0], k[0] + k[1], -k[1], 0.0, 0.0],
        [0.0, -k[1], k[1] + k[2], -k[2], 0.0],
        [0.0, 0.0, -k[2], k[2] + k[3], -k[3]],
        [0.0, 0.0, 0.0, -k[3], k[3] + k[4]],
    ])
    damping = np.array([
        [0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, b2, -b2, 0.0, 0.0],
        [0.0, -b2, b2 + b3, -b3, 0.0],
        [0.0, 0.0, -b3, b3 + b4, -b4],
        [0.0, 0.0, 0.0, -b4, b4],
    ])
    z = np.zeros((5, 5))
    i5 = np.eye(5)
    j = np.block([[z, i5], [-i5, z]])
    r = np.block([[z, z], [z, damping]])
    h = np.block([[stiffness, z], [z, np.diag(1.0 / m)]])
    b = np.zeros((10, 1))
    b[5, 0] = 1.0
    return validate_ph(j, r, h, b)


def build_rlc_example() -> PhSystem:
    """Ten-state RLC ladder: five capacitor charges then five inductor
    fluxes, resistors in parallel with each capacitor and in series with
    each inductor, voltage input in the first inductor loop."""
    r_c = np.array([270.0, 1000.0, 330.0, 1500.0, 220.0])
    r_l = np.array([4.7, 3.9, 2.2, 2.74, 3.92])
    cap = np.array([2.2e-3, 1e-3, 3.3e-3, 15e-6, 4.7e-6])
    ind = np.array([10e-3, 4.3e-3, 2.7e-3, 6.2e-6, 3e-6])
    j1 = np.eye(5) - np.diag(np.ones(4), 1)
    z = np.zeros((5, 5))
    j = np.block([[z, j1], [-j1.T, z]])
    r = np.diag(np.concatenate([1.0 / r_c, r_l]))
    h = np.diag(np.concatenate([1.0 / cap, 1.0 / ind]))
    b = np.zeros((10, 1))
    b[5, 0] = 1.0
    return validate_ph(j, r, h, b)
