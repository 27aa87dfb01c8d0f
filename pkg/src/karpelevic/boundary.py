"""Points of the boundary of the Karpelevic region at prescribed arguments.

Inside the sector of a Farey pair with ``q >= 2`` the boundary point with
argument ``theta`` is ``rho_hat**d1 * exp(i*theta)``, where ``rho_hat`` is
the root in ``(0, 1]`` of ::

    F(rho) = rho**s1 * sin(q*d1*tau) - rho**(q*d1) * sin(s1*tau - phi)
             - sin((q*d1 - s1)*tau + phi)

at ``tau = (theta + 2*pi*l0) / d1`` and ``phi = 2*pi*j0 / (delta*d1)``.
Sectors next to the real axis (``q == 1``) are straight chords from ``1``
to ``exp(+-2*pi*i/n)`` and Farey angles themselves lie on the unit circle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import kernels
from .arcs import ArcParams, ArcType, arc_params
from .farey import TAU_ANGLE, TWO_PI, _angles, _sequence, farey_pairs, unit_root

TOL_RHO = 1e-13
RHO_LO = 1e-15
RHO_HI = 1.0
BISECT_MAX_ITER = 200


class NoSignChange(ArithmeticError):
    """The boundary equation does not change sign on the search bracket."""


@dataclass(frozen=True)
class BoundaryPoint:
    theta: float
    rho: float
    rho_hat: float
    alpha: float
    value: complex
    params: ArcParams
    theta_hat: float
    exact: Fraction | None = None

    @property
    def arc_type(self) -> ArcType:
        return self.params.arc_type


@lru_cache(maxsize=4096)
def _pair_params(n: int, index: int) -> ArcParams:
    return arc_params(farey_pairs(n)[index], n)


def F_value(params: ArcParams, j: int, rho: float, tau: float) -> float:
    """Left-hand side of the boundary equation for factor ``j`` at angle ``tau``."""
    qd1, s1 = params.q * params.d1, params.s1
    phi = TWO_PI * j / (params.delta * params.d1)
    return (
        rho ** s1 * math.sin(qd1 * tau)
        - rho ** qd1 * math.sin(s1 * tau - phi)
        - math.sin((qd1 - s1) * tau + phi)
    )


def theta_hat(params: ArcParams, theta):
    return (theta + TWO_PI * params.l0) / params.d1


def alpha_from_imag(params: ArcParams, rho_hat, tau):
    """Mixing weight from the imaginary part of the factor equation."""
    qd1, s1 = params.q * params.d1, params.s1
    return rho_hat ** s1 * np.sin(qd1 * tau) / np.sin((qd1 - s1) * tau + params.phase)


def alpha_from_real(params: ArcParams, rho_hat, tau):
    """Mixing weight from the real part of the factor equation."""
    qd1, s1 = params.q * params.d1, params.s1
    num = 1.0 - rho_hat ** qd1 * np.cos(qd1 * tau)
    den = 1.0 - rho_hat ** (qd1 - s1) * np.cos((qd1 - s1) * tau + params.phase)
    return num / den


def _solve_sector(params: ArcParams, thetas: np.ndarray, tol: float):
    """Vectorised solve over one sector; returns ``(rho, rho_hat, tau, alpha)``."""
    if params.arc_type is ArcType.TYPE0:
        th = TWO_PI - thetas if params.reflected else thetas
        phi = TWO_PI / params.n
        # n == 2: the chord is the real segment [-1, 1], met only at 0
        sin_phi = 0.0 if params.n == 2 else math.sin(phi)
        rho = sin_phi / (np.sin(phi - th) + np.sin(th))
        alpha = (1.0 - rho * np.cos(th)) / (1.0 - math.cos(phi))
        return rho, rho, thetas.copy(), alpha
    tau = theta_hat(params, thetas)
    rho_hat, status = kernels.bisect_boundary(
        np.ascontiguousarray(tau), params.q * params.d1, params.s1, params.phase,
        RHO_LO, RHO_HI, tol, BISECT_MAX_ITER,
    )
    if np.any(status):
        bad = thetas[np.asarray(status) != 0]
        raise NoSignChange(
            f"no sign change of the boundary equation on [{RHO_LO}, {RHO_HI}] "
            f"for n={params.n}, pair ({params.left}, {params.right}), theta={bad[0]!r}"
        )
    alpha = alpha_from_imag(params, rho_hat, tau)
    return rho_hat ** params.d1, rho_hat, tau, alpha


def _reduce(thetas) -> np.ndarray:
    th = np.mod(np.asarray(thetas, dtype=np.float64), TWO_PI)
    th[th >= TWO_PI] = 0.0
    return th


def _locate(n: int, th: np.ndarray, tau_angle: float):
    """Sector index per angle and, where snapped, the Farey index (else -1)."""
    angles = np.asarray(_angles(n))
    i = np.searchsorted(angles, th, side="right")
    exact = np.full(th.shape, -1, dtype=np.int64)
    near_left = th - angles[i - 1] <= tau_angle
    exact[near_left] = i[near_left] - 1
    ir = np.minimum(i, angles.size - 1)
    near_right = ~near_left & (i < angles.size) & (angles[ir] - th <= tau_angle)
    exact[near_right] = i[near_right]
    exact[exact == angles.size - 1] = 0
    return i - 1, exact


def boundary_arrays(n: int, thetas, tol: float = TOL_RHO, tau_angle: float = TAU_ANGLE) -> dict:
    """Boundary data at many arguments as arrays.

    Keys: ``theta``, ``rho``, ``rho_hat``, ``theta_hat``, ``alpha``,
    ``value``, ``pair`` (index into :func:`farey_pairs`) and ``exact``
    (index into the Farey sequence, ``-1`` if not at a Farey angle).
    """
    if n < 2:
        raise ValueError(f"boundary needs n >= 2, got {n}")
    th = _reduce(thetas)
    pair_idx, exact = _locate(n, th, tau_angle)
    seq = _sequence(n)
    rho = np.empty(th.shape)
    rho_hat = np.empty(th.shape)
    tau = np.empty(th.shape)
    alpha = np.empty(th.shape)
    value = np.empty(th.shape, dtype=np.complex128)

    on_circle = exact >= 0
    for k in np.unique(exact[on_circle]):
        sel = exact == k
        params = _pair_params(n, int(k))
        frac = seq[k]
        th[sel] = TWO_PI * float(frac)
        pair_idx[sel] = k
        rho[sel] = 1.0
        rho_hat[sel] = 1.0
        tau[sel] = theta_hat(params, th[sel])
        at_q = Fraction(params.p, params.q) % 1 == frac
        alpha[sel] = 0.0 if at_q else 1.0
        value[sel] = unit_root(frac)

    for k in np.unique(pair_idx[~on_circle]):
        sel = (pair_idx == k) & ~on_circle
        params = _pair_params(n, int(k))
        r, rh, t, a = _solve_sector(params, th[sel], tol)
        rho[sel] = r
        rho_hat[sel] = rh
        tau[sel] = t
        alpha[sel] = a
        value[sel] = r * (np.cos(th[sel]) + 1j * np.sin(th[sel]))
    return {
        "theta": th, "rho": rho, "rho_hat": rho_hat, "theta_hat": tau,
        "alpha": alpha, "value": value, "pair": pair_idx, "exact": exact,
    }


def _points(n: int, data: dict) -> list[BoundaryPoint]:
    seq = _sequence(n)
    out = []
    for i in range(data["theta"].size):
        ex = int(data["exact"][i])
        out.append(
            BoundaryPoint(
                theta=float(data["theta"][i]),
                rho=float(data["rho"][i]),
                rho_hat=float(data["rho_hat"][i]),
                alpha=float(data["alpha"][i]),
                value=complex(data["value"][i]),
                params=_pair_params(n, int(data["pair"][i])),
                theta_hat=float(data["theta_hat"][i]),
                exact=seq[ex] if ex >= 0 else None,
            )
        )
    return out


def solve_rho(params: ArcParams, theta: float, tol: float = TOL_RHO) -> BoundaryPoint:
    """Boundary point at ``theta`` strictly inside the sector described by ``params``."""
    if params.arc_type is ArcType.TYPE0:
        raise ValueError("solve_rho needs an arc with q >= 2")
    lo, hi = sorted((TWO_PI * float(params.left), TWO_PI * float(params.right)))
    theta = float(np.mod(theta, TWO_PI))
    if not lo < theta < hi:
        raise ValueError(f"theta={theta} outside the open sector ({lo}, {hi})")
    r, rh, t, a = _solve_sector(params, np.array([theta]), tol)
    return BoundaryPoint(
        theta=theta, rho=float(r[0]), rho_hat=float(rh[0]), alpha=float(a[0]),
        value=complex(r[0] * math.cos(theta), r[0] * math.sin(theta)),
        params=params, theta_hat=float(t[0]),
    )


def boundary_point(n: int, theta: float, tol: float = TOL_RHO) -> BoundaryPoint:
    """The unique point of the region's boundary with argument ``theta``."""
    return _points(n, boundary_arrays(n, [theta], tol=tol))[0]


def boundary_moduli(n: int, thetas, tol: float = TOL_RHO) -> np.ndarray:
    """Moduli of the boundary points at each argument in ``thetas``."""
    return boundary_arrays(n, thetas, tol=tol)["rho"]


def sample_boundary(n: int, m: int, tol: float = TOL_RHO) -> list[BoundaryPoint]:
    """Boundary at ``m`` equally spaced arguments plus every Farey angle, sorted by angle."""
    if m < 3:
        raise ValueError(f"need at least 3 samples, got {m}")
    seq = _sequence(n)[:-1]
    grid = TWO_PI * np.arange(m) / m
    farey = TWO_PI * np.array([float(f) for f in seq])
    _, snapped = _locate(n, _reduce(grid), TAU_ANGLE)
    keep = snapped < 0
    thetas = np.concatenate((grid[keep], farey))
    data = boundary_arrays(n, thetas, tol=tol)
    order = np.argsort(data["theta"], kind="stable")
    data = {k: v[order] for k, v in data.items()}
    return _points(n, data)
