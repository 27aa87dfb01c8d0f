"""Row-stochastic matrices as plain ``float64`` arrays.

A matrix built here has every row summing to exactly ``1.0`` under
left-to-right floating-point summation: the last nonzero entry of each
row is set to one minus the running sum of the entries before it.
"""

from __future__ import annotations

import numpy as np


def sequential_row_sums(M: np.ndarray) -> np.ndarray:
    return np.cumsum(M, axis=1)[:, -1]


def exact_rows(M: np.ndarray) -> np.ndarray:
    """Copy of ``M`` with each row's last nonzero entry fixed up so the row sums to 1."""
    M = np.array(M, dtype=np.float64)
    if M.shape[-1] > 1 and np.all(M > 0):
        M[..., -1] = np.maximum(1.0 - np.cumsum(M[..., :-1], axis=-1)[..., -1], 0.0)
        return M
    if M.ndim == 3:
        return np.stack([exact_rows(m) for m in M])
    for row in M:
        nz = np.flatnonzero(row)
        if nz.size == 0:
            raise ValueError("row with no positive entry")
        k = nz[-1]
        partial = np.cumsum(row[:k])[-1] if k else 0.0
        row[k] = max(1.0 - partial, 0.0)
    return M


def is_stochastic(M: np.ndarray, exact: bool = True, atol: float = 1e-12) -> bool:
    M = np.asarray(M, dtype=np.float64)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or np.any(M < 0):
        return False
    sums = sequential_row_sums(M)
    if exact:
        return bool(np.all(sums == 1.0))
    return bool(np.all(np.abs(sums - 1.0) <= atol))


def cycle_permutation(n: int) -> np.ndarray:
    """Permutation matrix of the ``n``-cycle ``i -> i+1 (mod n)``."""
    P = np.zeros((n, n))
    P[np.arange(n), (np.arange(n) + 1) % n] = 1.0
    return P


def random_stochastic(n: int, size: int | None = None, rng=None) -> np.ndarray:
    """Matrices whose rows are drawn uniformly from the probability simplex."""
    rng = np.random.default_rng(rng)
    shape = (n,) if size is None else (size, n)
    rows = rng.dirichlet(np.ones(n), size=shape)
    return exact_rows(rows)
