"""Membership and minimal-order queries.

The region is star-shaped about the origin, so ``z`` belongs to it exactly
when ``|z|`` does not exceed the boundary modulus at ``arg z``.  The radial
boundary function jumps at some Farey angles (for ``n = 3`` it drops from
``1`` on the negative real axis to ``1/2`` just off it), which makes a pure
radial test fragile there.  Every segment from ``0`` to a Farey point lies
in the region, so a point within ``tol_member`` of such a segment is
measured against modulus ``1`` instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .boundary import boundary_moduli
from .farey import TWO_PI, _angles

TOL_MEMBER = 1e-9
DISC_SLACK = 1e-6
UNIT_TOL = 1e-9
MIN_ORDER_CAP = 1000


class OutsideUnitDisc(ValueError):
    """The point lies outside the closed unit disc and so in no region."""


class NotFoundBelowCap(LookupError):
    """No order up to the cap contains the point."""


@dataclass(frozen=True)
class MembershipVerdict:
    inside: bool
    boundary_modulus: float
    margin: float


def _check_disc(absz: np.ndarray) -> None:
    if np.any(absz > 1.0 + DISC_SLACK):
        worst = float(np.max(absz))
        raise OutsideUnitDisc(f"|z| = {worst!r} exceeds 1; no stochastic matrix has such an eigenvalue")


def _snapped_arguments(n: int, z: np.ndarray, tol: float) -> np.ndarray:
    """``arg z`` in ``[0, 2*pi)``, moved onto a Farey angle when ``z`` is within ``tol`` of its spoke."""
    th = np.mod(np.angle(z), TWO_PI)
    angles = np.asarray(_angles(n))
    i = np.clip(np.searchsorted(angles, th), 1, angles.size - 1)
    lo, hi = angles[i - 1], angles[i]
    near = np.where(th - lo <= hi - th, lo, hi)
    # perpendicular distance to the spoke, valid while the offset is acute
    dist = np.abs(z) * np.abs(np.sin(th - near))
    snap = (dist <= tol) & (np.abs(th - near) < 0.5 * math.pi)
    return np.where(snap, np.mod(near, TWO_PI), th)


def contains_many(n: int, z, tol_member: float = TOL_MEMBER):
    """Vectorised :func:`contains`; returns ``(inside, boundary_modulus, margin)`` arrays."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    z = np.asarray(z, dtype=np.complex128)
    absz = np.abs(z)
    _check_disc(absz)
    if n == 1:
        margin = -np.abs(z - 1.0)
        return margin >= -tol_member, np.ones(z.shape), margin
    th = _snapped_arguments(n, z.ravel(), tol_member)
    bm = boundary_moduli(n, th).reshape(z.shape)
    margin = bm - absz
    return margin >= -tol_member, bm, margin


def contains(n: int, z: complex, tol_member: float = TOL_MEMBER) -> MembershipVerdict:
    """Decide whether ``z`` is an eigenvalue of some ``n x n`` stochastic matrix.

    Parameters
    ----------
    n : int
        Matrix order, at least 1.
    z : complex
        Candidate eigenvalue.
    tol_member : float
        Points with ``margin >= -tol_member`` count as inside.

    Returns
    -------
    MembershipVerdict
        ``margin`` is ``boundary_modulus - |z|``.  For ``n == 1`` the
        region is the single point ``1`` and ``margin`` is ``-|z - 1|``.

    Raises
    ------
    OutsideUnitDisc
        If ``|z| > 1 + 1e-6``.
    """
    inside, bm, margin = contains_many(n, np.array([z]), tol_member)
    return MembershipVerdict(bool(inside[0]), float(bm[0]), float(margin[0]))


def unit_circle_fraction(z: complex, cap: int = MIN_ORDER_CAP, tol: float = UNIT_TOL) -> Fraction | None:
    """Rational ``arg z / (2*pi)`` with denominator at most ``cap``, if one is within ``tol`` turns."""
    turns = (math.atan2(z.imag, z.real) / TWO_PI) % 1.0
    f = Fraction(turns).limit_denominator(cap)
    if abs(float(f) - turns) <= tol:
        return f % 1
    if turns > 1.0 - tol:
        return Fraction(0)
    return None


def min_order(z: complex, cap: int = MIN_ORDER_CAP, tol_member: float = TOL_MEMBER) -> int:
    """Smallest ``n <= cap`` with ``z`` in the order-``n`` region.

    Points within ``1e-9`` of the unit circle are answered from the
    denominator of their rational angle, since only Farey points of order
    ``n`` reach the circle.

    Raises
    ------
    NotFoundBelowCap
        If no order up to ``cap`` contains ``z``.
    """
    z = complex(z)
    _check_disc(np.array([abs(z)]))
    if abs(abs(z) - 1.0) <= UNIT_TOL:
        f = unit_circle_fraction(z, cap)
        if f is None:
            raise NotFoundBelowCap(f"{z} is on the unit circle at no rational angle with denominator <= {cap}")
        return f.denominator
    for n in range(1, cap + 1):
        if contains(n, z, tol_member).inside:
            return n
    raise NotFoundBelowCap(f"{z} lies outside every region of order <= {cap}")


def scale_into(n: int, z: complex) -> float:
    """Largest ``c`` in ``[0, 1]`` with ``c*z`` in the region."""
    if z == 0:
        raise ValueError("scale_into needs z != 0")
    if n < 2:
        raise ValueError("scale_into needs n >= 2; the order-1 region is the single point 1")
    bm = float(boundary_moduli(n, [math.atan2(z.imag, z.real)])[0])
    return min(1.0, bm / abs(z))
