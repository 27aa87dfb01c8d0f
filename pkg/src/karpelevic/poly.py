"""Dense complex polynomials, simultaneous root finding, characteristic polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import kernels

DK_TOL = 1e-13
DK_MAX_ITER = 2000
DK_OFFSET = 0.4
CLUSTER_RADIUS = 1e-5


class NonConvergence(RuntimeError):
    """Root iteration did not settle within the iteration budget."""


class Poly:
    """Polynomial with complex coefficients stored constant term first.

    Trailing zero high-order coefficients are dropped on construction, so
    ``coeffs[-1]`` is nonzero unless the polynomial is identically zero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[complex] | np.ndarray):
        c = np.array(coeffs, dtype=np.complex128).ravel()
        nz = np.flatnonzero(c)
        c = c[: nz[-1] + 1] if nz.size else c[:1]
        if c.size == 0:
            c = np.zeros(1, dtype=np.complex128)
        self.coeffs = c

    @classmethod
    def monomial(cls, k: int, c: complex = 1.0) -> Poly:
        out = np.zeros(k + 1, dtype=np.complex128)
        out[k] = c
        return cls(out)

    @classmethod
    def from_roots(cls, roots: Sequence[complex]) -> Poly:
        c = np.ones(1, dtype=np.complex128)
        for r in roots:
            c = np.concatenate(([0j], c)) - r * np.concatenate((c, [0j]))
        return cls(c)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def __call__(self, z):
        return evaluate(self, z)

    def __add__(self, other: Poly) -> Poly:
        m = max(self.coeffs.size, other.coeffs.size)
        out = np.zeros(m, dtype=np.complex128)
        out[: self.coeffs.size] += self.coeffs
        out[: other.coeffs.size] += other.coeffs
        return Poly(out)

    def __neg__(self) -> Poly:
        return Poly(-self.coeffs)

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other) -> Poly:
        if isinstance(other, Poly):
            return Poly(np.convolve(self.coeffs, other.coeffs))
        return Poly(self.coeffs * other)

    __rmul__ = __mul__

    def shift(self, k: int) -> Poly:
        """Multiply by ``t**k``."""
        return Poly(np.concatenate((np.zeros(k, dtype=np.complex128), self.coeffs)))

    def allclose(self, other: Poly, rtol: float = 1e-12, atol: float = 0.0) -> bool:
        if self.degree != other.degree:
            return False
        return bool(np.allclose(self.coeffs, other.coeffs, rtol=rtol, atol=atol))

    def __repr__(self) -> str:
        return f"Poly({np.array2string(self.coeffs, precision=6)})"


@dataclass(frozen=True)
class RootSet:
    roots: np.ndarray
    residual: float
    iterations: int = 0

    def __len__(self) -> int:
        return self.roots.size

    def __iter__(self):
        return iter(self.roots)

    def nearest(self, z: complex) -> complex:
        return complex(self.roots[np.argmin(np.abs(self.roots - z))])


def evaluate(poly: Poly, z):
    """Horner evaluation at a scalar or array ``z``."""
    if np.ndim(z) == 0:
        return complex(kernels.horner(poly.coeffs, complex(z)))
    return kernels._numpy.horner(poly.coeffs, np.asarray(z, dtype=np.complex128))


def _split_zero_roots(coeffs: np.ndarray) -> tuple[int, np.ndarray]:
    nz = np.flatnonzero(coeffs)
    k = int(nz[0])
    return k, coeffs[k:]


def all_roots(
    poly: Poly,
    tol: float = DK_TOL,
    max_iter: int = DK_MAX_ITER,
    offset: float = DK_OFFSET,
) -> RootSet:
    """All roots by Durand-Kerner iteration.

    Exactly-zero low-order coefficients are deflated as exact zero roots.
    Each estimate stops moving once ``|p(z)|`` falls to the rounding level
    of the evaluation, which is what lets clusters of multiple roots settle.

    Raises
    ------
    NonConvergence
        If the iteration exceeds ``max_iter``; retry with a different
        ``offset``.
    """
    if poly.degree < 1:
        raise ValueError("polynomial must have degree >= 1")
    zeros, core = _split_zero_roots(poly.coeffs)
    iterations = 0
    if core.size > 1:
        r, iterations, ok = kernels.durand_kerner(core, tol, max_iter, offset)
        if not ok:
            raise NonConvergence(
                f"Durand-Kerner did not converge in {max_iter} iterations "
                f"(degree {core.size - 1})"
            )
        roots = np.concatenate((np.zeros(zeros, dtype=np.complex128), r))
    else:
        roots = np.zeros(zeros, dtype=np.complex128)
    residual = float(np.max(np.abs(evaluate(poly, roots)))) if roots.size else 0.0
    return RootSet(roots, residual, int(iterations))


def all_roots_batch(
    coeffs: np.ndarray,
    tol: float = DK_TOL,
    max_iter: int = DK_MAX_ITER,
    offset: float = DK_OFFSET,
) -> np.ndarray:
    """Roots of many same-degree polynomials, one per row (constant first).

    No zero-root deflation: rows are expected to have a nonzero constant term.
    """
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    roots, _, ok = kernels.durand_kerner_batch(coeffs, tol, max_iter, offset)
    if not np.all(ok):
        bad = np.flatnonzero(~np.asarray(ok))
        raise NonConvergence(f"{bad.size} of {len(ok)} polynomials did not converge")
    return roots


def cluster_roots(roots: np.ndarray, radius: float = CLUSTER_RADIUS) -> list[tuple[complex, int]]:
    """Group roots lying within ``radius`` of each other; returns (centre, count)."""
    roots = np.asarray(roots)
    unused = np.ones(roots.size, dtype=bool)
    out = []
    for i in range(roots.size):
        if not unused[i]:
            continue
        member = unused & (np.abs(roots - roots[i]) <= radius)
        unused &= ~member
        out.append((complex(roots[member].mean()), int(member.sum())))
    return out


def char_poly(M: np.ndarray) -> Poly:
    """Monic characteristic polynomial ``det(tI - M)`` via Faddeev-LeVerrier."""
    M = np.ascontiguousarray(M, dtype=np.float64)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("expected a square matrix")
    if M.shape[0] > 64:
        raise ValueError("order must be <= 64")
    return Poly(kernels.faddeev_leverrier(M))


def eigenvalues(M: np.ndarray, tol: float = DK_TOL, max_iter: int = DK_MAX_ITER) -> RootSet:
    """Eigenvalues as the roots of :func:`char_poly`."""
    return all_roots(char_poly(M), tol=tol, max_iter=max_iter)


def eigenvalues_batch(Ms: np.ndarray, tol: float = DK_TOL, max_iter: int = DK_MAX_ITER) -> np.ndarray:
    """Eigenvalues of a stack of square matrices, shape ``(batch, n)``."""
    Ms = np.ascontiguousarray(Ms, dtype=np.float64)
    cp = kernels.faddeev_leverrier_batch(Ms)
    return all_roots_batch(cp.astype(np.complex128), tol=tol, max_iter=max_iter)
