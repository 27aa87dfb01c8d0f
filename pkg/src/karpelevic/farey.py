"""Farey fractions of a given order and the angular sectors between them.

Fractions are :class:`fractions.Fraction` values in ``[0, 1]``; ``1/1`` is
kept as the closing element of the circular order even though it is the
same angle as ``0/1``.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

TAU_ANGLE = 1e-12
TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class FareyPair:
    """Consecutive fractions ``left < right`` of the Farey sequence of ``order``."""

    left: Fraction
    right: Fraction
    order: int

    @property
    def sector(self) -> tuple[float, float]:
        """Open angular sector in radians."""
        return TWO_PI * float(self.left), TWO_PI * float(self.right)

    def contains_angle(self, theta: float) -> bool:
        lo, hi = self.sector
        return lo < theta < hi


@dataclass(frozen=True)
class ExactFareyPoint:
    """An argument that coincides with a Farey angle ``2*pi*fraction``."""

    fraction: Fraction
    order: int

    @property
    def angle(self) -> float:
        return TWO_PI * float(self.fraction)


@lru_cache(maxsize=256)
def _sequence(n: int) -> tuple[Fraction, ...]:
    # next-term recurrence of the Farey sequence
    a, b, c, d = 0, 1, 1, n
    out = [Fraction(0, 1)]
    while c <= n:
        k = (n + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b
        out.append(Fraction(a, b))
    return tuple(out)


@lru_cache(maxsize=256)
def _angles(n: int) -> tuple[float, ...]:
    return tuple(TWO_PI * float(f) for f in _sequence(n))


def farey_sequence(n: int) -> list[Fraction]:
    """All reduced ``p/q`` with ``0 <= p < q <= n`` in increasing order, then ``1/1``."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    return list(_sequence(n))


def farey_pairs(n: int) -> list[FareyPair]:
    """Consecutive pairs of :func:`farey_sequence`, covering the circle once."""
    seq = farey_sequence(n)
    return [FareyPair(a, b, n) for a, b in zip(seq[:-1], seq[1:])]


def is_farey_pair(a: Fraction, b: Fraction, n: int) -> bool:
    """Neighbour test ``q + s > n`` and ``q*r - p*s == 1`` for ``a = p/q < b = r/s``."""
    a, b = Fraction(a), Fraction(b)
    p, q = a.numerator, a.denominator
    r, s = b.numerator, b.denominator
    if q > n or s > n:
        return False
    return q + s > n and q * r - p * s == 1


def bracketing_pair(
    n: int, theta: float, tau_angle: float = TAU_ANGLE
) -> FareyPair | ExactFareyPoint:
    """Locate the sector of ``theta`` among the Farey angles of order ``n``.

    Returns an :class:`ExactFareyPoint` when ``theta`` is within
    ``tau_angle`` radians of a Farey angle, otherwise the pair whose open
    sector contains it.
    """
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    theta = math.fmod(theta, TWO_PI)
    if theta < 0:
        theta += TWO_PI
    seq = _sequence(n)
    angles = _angles(n)
    i = bisect.bisect_right(angles, theta)
    # angles[i-1] <= theta < angles[i]; i >= 1 because angles[0] == 0
    if theta - angles[i - 1] <= tau_angle:
        return ExactFareyPoint(seq[i - 1], n)
    if i < len(angles) and angles[i] - theta <= tau_angle:
        frac = seq[i]
        return ExactFareyPoint(Fraction(0, 1) if frac == 1 else frac, n)
    return FareyPair(seq[i - 1], seq[i], n)


def conjugate_pair(pair: FareyPair) -> FareyPair:
    """Pair whose sector is the complex-conjugate reflection of ``pair``'s."""
    p, q = pair.left.numerator, pair.left.denominator
    r, s = pair.right.numerator, pair.right.denominator
    return FareyPair(Fraction(s - r, s), Fraction(q - p, q), pair.order)


def unit_root(f: Fraction) -> complex:
    """``exp(2*pi*i*f)`` with exact values at quarter turns."""
    f = Fraction(f) % 1
    if f == 0:
        return 1 + 0j
    if f == Fraction(1, 2):
        return -1 + 0j
    if f == Fraction(1, 4):
        return 1j
    if f == Fraction(3, 4):
        return -1j
    ang = TWO_PI * float(f)
    return complex(math.cos(ang), math.sin(ang))


def conjugate_fraction(f: Fraction) -> Fraction:
    return Fraction(0, 1) if f == 0 else 1 - f


# TODO(stern-brocot): replace full enumeration by a Stern-Brocot descent when
# orders beyond ~1e4 are needed; bracketing_pair is O(|F_n|) memory today.
