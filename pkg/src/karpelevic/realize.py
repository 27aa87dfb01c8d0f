"""Stochastic matrices with a prescribed subdominant eigenvalue.

A point ``z`` of the region is written ``c * z0`` with ``z0`` on the
boundary at the same argument.  Over type 0 and type I arcs ``z0`` is an
eigenvalue of an explicit matrix (a lazy cycle or a companion matrix),
which is padded to order ``n`` and then contracted by ``c``.  Over type II
and III arcs no construction is attempted; the result carries the arc's
Ito polynomial and its roots as a certificate instead.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .arcs import ArcParams, ArcType, ito_roots, reduced_ito_poly
from .boundary import boundary_point
from .matrices import cycle_permutation, exact_rows
from .poly import Poly, RootSet, eigenvalues
from .region import TOL_MEMBER, _snapped_arguments, contains

ROOT_TOL = 1e-8
MODULUS_TOL = 1e-8
PAIR_TOL = 1e-6


class NotInRegion(ValueError):
    """The requested point is not an eigenvalue of any stochastic matrix of that order."""


class RealizationKind(enum.Enum):
    MATRIX = "Matrix"
    CERTIFICATE = "PolynomialCertificate"


@dataclass(frozen=True)
class Certificate:
    poly: Poly
    roots: RootSet
    subdominance_ok: bool


@dataclass(frozen=True)
class RealizationResult:
    kind: RealizationKind
    target: complex
    achieved: complex
    matrix: np.ndarray | None = None
    certificate: Certificate | None = None
    params: ArcParams | None = None
    alpha: float | None = None
    scale: float = 1.0


def _check_unit(x: float, name: str) -> float:
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {x}")
    return x


def cyclic_combo(n: int, alpha: float) -> np.ndarray:
    """``(1 - alpha)*I + alpha*P`` with ``P`` the ``n``-cycle; eigenvalues ``alpha*w + 1 - alpha``."""
    alpha = _check_unit(alpha, "alpha")
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if n == 1:
        return np.ones((1, 1))
    return exact_rows((1.0 - alpha) * np.eye(n) + alpha * cycle_permutation(n))


def companion_typeI(params: ArcParams, alpha: float) -> np.ndarray:
    """Stochastic companion matrix of ``t**s - beta*t**(s-q) - alpha``.

    Rows ``0..s-2`` shift to the next coordinate; the last row holds
    ``alpha`` in column ``0`` and ``beta`` in column ``s - q``.
    """
    if params.arc_type is not ArcType.TYPE1:
        raise ValueError(f"companion_typeI needs a type I arc, got type {params.arc_type}")
    alpha = _check_unit(alpha, "alpha")
    s, q = params.s, params.q
    C = np.zeros((s, s))
    C[np.arange(s - 1), np.arange(1, s)] = 1.0
    C[s - 1, 0] = alpha
    C[s - 1, s - q] += 1.0 - alpha
    return exact_rows(C)


def inflate(T: np.ndarray, n: int) -> np.ndarray:
    """Order-``n`` matrix ``X @ T @ Y`` with the spectrum of ``T`` plus ``n - m`` zeros.

    ``X`` copies the first state of ``T`` onto ``n - m + 1`` states and
    ``Y`` averages over them, so ``Y @ X`` is the identity of order ``m``.
    """
    T = np.asarray(T, dtype=np.float64)
    m = T.shape[0]
    if m > n:
        raise ValueError(f"cannot inflate order {m} to smaller order {n}")
    if m == n:
        return T.copy()
    k = n - m + 1
    X = np.zeros((n, m))
    X[:k, 0] = 1.0
    X[k:, 1:] = np.eye(m - 1)
    Y = np.zeros((m, n))
    Y[0, :k] = 1.0 / k
    Y[1:, k:] = np.eye(m - 1)
    return exact_rows(X @ T @ Y)


def brauer_scale(T: np.ndarray, c: float) -> np.ndarray:
    """``c*T + (1 - c)/n * ones``: eigenvalues ``1, c*l2, ..., c*ln``."""
    c = _check_unit(c, "c")
    T = np.asarray(T, dtype=np.float64)
    n = T.shape[0]
    return exact_rows(c * T + (1.0 - c) / n * np.ones((n, n)))


def verify_subdominant(roots: RootSet | np.ndarray, t: complex) -> bool:
    """Strict subdominance of ``t`` among ``roots``.

    Every root away from ``1`` must have modulus at most ``|t|``, and any
    root of the same modulus must coincide with ``t`` or its conjugate.
    """
    z = np.asarray(roots.roots if isinstance(roots, RootSet) else roots)
    others = z[np.abs(z - 1.0) > ROOT_TOL]
    at = abs(t)
    if np.any(np.abs(others) > at + MODULUS_TOL):
        return False
    tied = others[np.abs(np.abs(others) - at) <= MODULUS_TOL]
    ok = (np.abs(tied - t) <= PAIR_TOL) | (np.abs(tied - np.conj(t)) <= PAIR_TOL)
    return bool(np.all(ok))


def is_subdominant_eigenvalue(eigs: np.ndarray, t: complex, tol: float = MODULUS_TOL) -> bool:
    """Weak form: apart from ``1`` no eigenvalue is larger in modulus than ``t``.

    Ties are allowed, which is what the contracted cycle at a Farey point
    produces.
    """
    eigs = np.asarray(eigs)
    others = eigs[np.abs(eigs - 1.0) > ROOT_TOL]
    return bool(np.all(np.abs(others) <= abs(t) + tol))


def _matrix_result(T: np.ndarray, n: int, c: float, target: complex, **extra) -> RealizationResult:
    M = brauer_scale(inflate(T, n), c)
    eig = eigenvalues(M).roots
    achieved = complex(eig[np.argmin(np.abs(eig - target))])
    return RealizationResult(RealizationKind.MATRIX, target, achieved, matrix=M, scale=c, **extra)


def realize_subdominant(n: int, z: complex, tol_member: float = TOL_MEMBER) -> RealizationResult:
    """Realise ``z`` as a subdominant eigenvalue at order ``n``, or certify it.

    Raises
    ------
    NotInRegion
        If ``z`` is outside the order-``n`` region.
    """
    z = complex(z)
    if not contains(n, z, tol_member).inside:
        raise NotInRegion(f"{z} is not in the region of order {n}")
    if abs(z - 1.0) <= tol_member:
        return RealizationResult(RealizationKind.MATRIX, z, 1.0 + 0j, matrix=np.eye(n))
    if abs(z) <= tol_member:
        M = brauer_scale(np.eye(n), 0.0)
        return RealizationResult(RealizationKind.MATRIX, z, 0j, matrix=M, scale=0.0)

    theta = float(_snapped_arguments(n, np.array([z]), tol_member)[0])
    z0 = boundary_point(n, theta)
    c = min(1.0, abs(z) / z0.rho)
    params = z0.params
    if z0.exact is not None:
        # Farey point p/q: the q-cycle carries exp(2*pi*i*p/q)
        q = z0.exact.denominator
        T = np.eye(2) if q == 1 else cycle_permutation(q)
        return _matrix_result(T, n, c, z, params=params, alpha=z0.alpha)
    if params.arc_type is ArcType.TYPE0:
        T = cyclic_combo(n, z0.alpha)
        return _matrix_result(T, n, c, z, params=params, alpha=z0.alpha)
    if params.arc_type is ArcType.TYPE1:
        T = companion_typeI(params, z0.alpha)
        return _matrix_result(T, n, c, z, params=params, alpha=z0.alpha)

    roots = ito_roots(params, z0.alpha)
    t = roots.nearest(z0.value)
    cert = Certificate(reduced_ito_poly(params, z0.alpha), roots, verify_subdominant(roots, t))
    return RealizationResult(
        RealizationKind.CERTIFICATE, z, c * t, certificate=cert, params=params,
        alpha=z0.alpha, scale=c,
    )

