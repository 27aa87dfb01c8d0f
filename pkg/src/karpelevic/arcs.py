"""Integer data of a boundary arc and the polynomials attached to it.

For a Farey pair of order ``n`` the fraction with the smaller denominator
is written ``p/q`` and the other ``r/s``.  With ``d = n // q`` and
``delta = gcd(d, s)``::

    s = s1*delta,  d = d1*delta,  r = r1*delta + j0,  r1 = d1*rhat - l0*s1

The arc type follows from ``q`` and ``d``: type 0 when ``q == 1``, type I
when ``d == 1``, otherwise type II (``q*d > s``) or type III (``q*d < s``).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .farey import FareyPair, is_farey_pair, unit_root
from .poly import Poly, RootSet, all_roots, evaluate


class ArcType(enum.Enum):
    TYPE0 = "0"
    TYPE1 = "I"
    TYPE2 = "II"
    TYPE3 = "III"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ArcParams:
    n: int
    p: int
    q: int
    r: int
    s: int
    d: int
    delta: int
    d1: int
    s1: int
    r1: int
    j0: int
    rhat: int
    l0: int
    y: int
    arc_type: ArcType
    left: Fraction
    right: Fraction

    @property
    def reflected(self) -> bool:
        """True when the smaller-denominator fraction is the right endpoint."""
        return self.right.denominator < self.left.denominator

    @property
    def q_angle(self) -> float:
        """Angle of the smaller-denominator endpoint."""
        return 2.0 * math.pi * self.p / self.q

    @property
    def s_angle(self) -> float:
        return 2.0 * math.pi * self.r / self.s

    @property
    def phase(self) -> float:
        """``2*pi*j0 / (delta*d1)``, the rotation selecting the boundary factor."""
        return 2.0 * math.pi * self.j0 / (self.delta * self.d1)


def arc_params(pair: FareyPair, n: int | None = None) -> ArcParams:
    """Parameter block of the arc over ``pair``'s sector."""
    n = pair.order if n is None else n
    a, b = pair.left, pair.right
    if not (a < b and is_farey_pair(a, b, n)):
        raise ValueError(f"({a}, {b}) is not a Farey pair of order {n}")
    small, big = (a, b) if a.denominator <= b.denominator else (b, a)
    if a.denominator == b.denominator:
        # only 0/1, 1/1 at n == 1
        small, big = a, b
    p, q = small.numerator, small.denominator
    r, s = big.numerator, big.denominator
    d = n // q
    delta = math.gcd(d, s)
    d1, s1 = d // delta, s // delta
    r1, j0 = divmod(r, delta)
    for l0 in range(d1):
        num = r1 + l0 * s1
        if num % d1 == 0:
            rhat = num // d1
            break
    else:  # pragma: no cover - gcd(d1, s1) == 1 guarantees a solution
        raise ArithmeticError("no solution for r1 = d1*rhat - l0*s1")
    if q == 1:
        kind = ArcType.TYPE0
    elif d == 1:
        kind = ArcType.TYPE1
    elif q * d > s:
        kind = ArcType.TYPE2
    else:
        kind = ArcType.TYPE3
    return ArcParams(
        n=n, p=p, q=q, r=r, s=s, d=d, delta=delta, d1=d1, s1=s1, r1=r1, j0=j0,
        rhat=rhat, l0=l0, y=n - d * q, arc_type=kind, left=a, right=b,
    )


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


def binomial_power(k: int, m: int, beta: float) -> Poly:
    """Expansion of ``(t**k - beta)**m`` with integer binomial coefficients."""
    c = np.zeros(k * m + 1, dtype=np.complex128)
    for i in range(m + 1):
        c[k * i] = math.comb(m, i) * (-beta) ** (m - i)
    return Poly(c)


def reduced_ito_poly(params: ArcParams, alpha: float) -> Poly:
    """The arc's reduced Ito polynomial ``f_alpha``."""
    alpha = _check_alpha(alpha)
    beta = 1.0 - alpha
    q, s, d = params.q, params.s, params.d
    kind = params.arc_type
    if kind is ArcType.TYPE0:
        return binomial_power(1, params.n, beta) - Poly([alpha ** params.n])
    if kind is ArcType.TYPE1:
        c = np.zeros(s + 1, dtype=np.complex128)
        c[s] += 1.0
        c[s - q] -= beta
        c[0] -= alpha
        return Poly(c)
    base = binomial_power(q, d, beta)
    if kind is ArcType.TYPE2:
        return base - Poly.monomial(q * d - s, alpha ** d)
    return base.shift(s - q * d) - Poly([alpha ** d])


def ito_numerator(params: ArcParams, alpha: float) -> Poly:
    """``phi_alpha`` times ``t**max(0, s - q*d)``, a polynomial with the same nonzero roots."""
    alpha = _check_alpha(alpha)
    q, s, d = params.q, params.s, params.d
    if q == 1:
        return reduced_ito_poly(params, alpha)
    base = binomial_power(q, d, 1.0 - alpha)
    e = q * d - s
    if e >= 0:
        return base - Poly.monomial(e, alpha ** d)
    return base.shift(-e) - Poly([alpha ** d])


def _require_q2(params: ArcParams) -> None:
    if params.q < 2:
        raise ValueError("factor polynomials need q >= 2")


def g_factor(params: ArcParams, alpha: float, j: int) -> Poly:
    """Factor ``(t**q - beta)**d1 - alpha**d1 * t**(q*d1 - s1) * exp(2*pi*i*j/delta)``.

    Multiplied through by ``t**(s1 - q*d1)`` when that exponent is positive.
    """
    _require_q2(params)
    alpha = _check_alpha(alpha)
    if not 0 <= j < params.delta:
        raise ValueError(f"j must lie in [0, {params.delta}), got {j}")
    q, d1, s1 = params.q, params.d1, params.s1
    base = binomial_power(q, d1, 1.0 - alpha)
    w = alpha ** d1 * unit_root(Fraction(j, params.delta))
    e = q * d1 - s1
    if e >= 0:
        return base - Poly.monomial(e, w)
    return base.shift(-e) - Poly([w])


def g_hat(params: ArcParams, alpha: float, j: int) -> Poly:
    """``t**(q*d1) - beta - alpha * t**(q*d1 - s1) * exp(2*pi*i*j/(delta*d1))``, cleared of negative powers."""
    _require_q2(params)
    alpha = _check_alpha(alpha)
    if not 0 <= j < params.delta:
        raise ValueError(f"j must lie in [0, {params.delta}), got {j}")
    qd1, s1 = params.q * params.d1, params.s1
    w = alpha * unit_root(Fraction(j, params.delta * params.d1))
    e = qd1 - s1
    beta = 1.0 - alpha
    if e >= 0:
        c = np.zeros(qd1 + 1, dtype=np.complex128)
        c[qd1] += 1.0
        c[0] -= beta
        c[e] -= w
    else:
        c = np.zeros(s1 + 1, dtype=np.complex128)
        c[s1] += 1.0
        c[-e] -= beta
        c[0] -= w
    return Poly(c)


def ito_roots(params: ArcParams, alpha: float) -> RootSet:
    """All roots of :func:`reduced_ito_poly`, assembled factor by factor.

    Type 0 roots are ``alpha*w + 1 - alpha`` over the ``n``-th roots of unity
    ``w``.  Otherwise the roots of ``g_factor(j)`` are the ``d1``-th powers
    of the roots of ``g_hat(j)``, whose roots stay simple as ``alpha -> 0``
    where those of ``f_alpha`` coalesce in groups of ``d``.
    """
    alpha = _check_alpha(alpha)
    f = reduced_ito_poly(params, alpha)
    if params.q == 1:
        w = np.exp(2j * np.pi * np.arange(params.n) / params.n)
        roots = alpha * w + (1.0 - alpha)
        iterations = 0
    else:
        parts, iterations = [], 0
        for j in range(params.delta):
            rs = all_roots(g_hat(params, alpha, j))
            parts.append(rs.roots ** params.d1)
            iterations = max(iterations, rs.iterations)
        roots = np.concatenate(parts)
    residual = float(np.max(np.abs(evaluate(f, roots))))
    return RootSet(roots, residual, iterations)
