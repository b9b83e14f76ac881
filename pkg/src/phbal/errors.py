"""Exception hierarchy for the balancing toolkit.

Every error carries enough numeric context (margins, residuals) for callers
to report actionable diagnostics.
"""

from __future__ import annotations


class PhbalError(Exception):
    """Base class for all toolkit errors."""


class DimensionMismatch(PhbalError):
    """Matrix dimensions are inconsistent with the declared system shape."""


class NotPD(PhbalError):
    """A matrix required to be symmetric positive definite is not."""


class NotPSD(PhbalError):
    """A matrix required to be positive semidefinite is not."""


class NotSkew(PhbalError):
    """The interconnection matrix deviates too far from skew symmetry."""


class DissipationIndefinite(PhbalError):
    """The dissipation matrix has a negative eigenvalue beyond tolerance."""


class HamiltonianNotPD(PhbalError):
    """The energy matrix is not positive definite."""


class PhValidationError(PhbalError):
    """One or more port-Hamiltonian structural invariants are violated.

    ``violations`` is a list of ``(name, margin)`` pairs naming each failed
    invariant with the numeric margin by which it failed.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        detail = "; ".join(f"{name} (margin {margin:.3e})" for name, margin in self.violations)
        super().__init__(f"port-Hamiltonian validation failed: {detail}")


class Unstable(PhbalError):
    """The state matrix has an eigenvalue with nonnegative real part."""


class IllConditioned(PhbalError):
    """A linear-algebra routine could not meet its residual target."""


class ConditionFailed(PhbalError):
    """The energy-scaled Gramian condition 2*delta*R - B B^T >= 0 fails.

    ``min_eig`` records the offending minimum eigenvalue.
    """

    def __init__(self, min_eig: float):
        self.min_eig = float(min_eig)
        super().__init__(
            f"condition 2*delta*R - B*B^T >= 0 fails (min eigenvalue {self.min_eig:.6e})"
        )


class ShiftNotPD(PhbalError):
    """The shifted matrix used to build a symmetric certificate is not PD."""


class NoFeasibleScale(PhbalError):
    """The doubling search exhausted its budget without certifying."""


class Infeasible(PhbalError):
    """The diagonal matrix-inequality search failed to reach its margin.

    ``best_margin`` is the best (largest) certified margin encountered.
    """

    def __init__(self, message: str, best_margin: float):
        self.best_margin = float(best_margin)
        super().__init__(f"{message} (best margin {self.best_margin:.6e})")


class StructureLost(PhbalError):
    """A structure-preserving step produced output violating its invariants."""


class NotBlockDiagonal(PhbalError):
    """The balancing transformation mixes the two physical state partitions."""


class NearSingularSpectrum(PhbalError):
    """The balanced spectrum spans more than the supported dynamic range."""


class Singular(PhbalError):
    """A transformation matrix is numerically singular."""


class BadOrder(PhbalError):
    """Requested truncation order is outside 1 <= k < n."""


class StepTooLarge(PhbalError):
    """The integration step is too coarse for the system time constants."""


class CertificateMismatch(PhbalError):
    """The dissipation probe requires matching scale parameters."""


class ZeroInput(PhbalError):
    """A gain estimate was requested against an identically zero input."""


class ParseError(PhbalError):
    """A system file failed to parse. Carries the 1-based line number."""

    def __init__(self, line: int, reason: str):
        self.line = int(line)
        self.reason = reason
        super().__init__(f"line {self.line}: {reason}")
