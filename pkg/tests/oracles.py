"""Independent reference implementations used to cross-check the package."""

import numpy as np


def kron_lyapunov(a: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Solve A^T X + X A + W = 0 by Kronecker vectorization (dense, O(n^6);
    reference only)."""
    n = a.shape[0]
    ident = np.eye(n)
    coeff = np.kron(ident, a.T) + np.kron(a.T, ident)
    x = np.linalg.solve(coeff, -w.reshape(-1))
    x = x.reshape(n, n)
    return (x + x.T) / 2.0


def random_stable(rng: np.random.Generator, n: int, m: int = 1, q: int = 1):
    """Random stable (A, B, C) triple with spectral abscissa <= -0.5."""
    a = rng.standard_normal((n, n))
    shift = np.max(np.linalg.eigvals(a).real) + 0.5
    a = a - shift * np.eye(n)
    b = rng.standard_normal((n, m))
    c = rng.standard_normal((q, n))
    return a, b, c


def random_spd(rng: np.random.Generator, n: int) -> np.ndarray:
    m = rng.standard_normal((n, n))
    return m @ m.T + n * np.eye(n)
