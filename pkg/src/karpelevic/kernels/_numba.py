"""numba-compiled kernels.

Each function mirrors the one of the same name in ``_numpy`` and must stay
numerically equivalent to it (same iteration, same stopping rules).
"""

import math

import numpy as np
from numba import njit

EPS = np.finfo(np.float64).eps


@njit(cache=True)
def horner(coeffs, z):
    acc = 0j
    for i in range(coeffs.shape[0] - 1, -1, -1):
        acc = acc * z + coeffs[i]
    return acc


@njit(cache=True)
def durand_kerner(coeffs, tol, max_iter, offset):
    """Weierstrass iteration for all roots of a polynomial.

    ``coeffs`` is complex128, constant term first, leading entry nonzero.
    Returns ``(roots, iterations, converged)``.
    """
    n = coeffs.shape[0] - 1
    a = coeffs / coeffs[n]
    absa = np.abs(a)
    radius = 1.0
    for i in range(n):
        if absa[i] + 1.0 > radius:
            radius = absa[i] + 1.0
    z = np.empty(n, np.complex128)
    for k in range(n):
        ang = 2.0 * math.pi * k / n + offset
        z[k] = radius * complex(math.cos(ang), math.sin(ang))
    znew = z.copy()
    frozen = np.zeros(n, np.bool_)
    bound_scale = 4.0 * n * EPS
    it = 0
    converged = False
    while it < max_iter:
        it += 1
        max_step = 0.0
        active = 0
        for k in range(n):
            zk = z[k]
            if frozen[k]:
                znew[k] = zk
                continue
            az = abs(zk)
            p = 1.0 + 0j
            b = 1.0
            for i in range(n - 1, -1, -1):
                p = p * zk + a[i]
                b = b * az + absa[i]
            if abs(p) <= bound_scale * b:
                frozen[k] = True
                znew[k] = zk
                continue
            active += 1
            denom = 1.0 + 0j
            for m in range(n):
                if m != k:
                    denom *= zk - z[m]
            if denom == 0:
                step = 0j
            else:
                step = p / denom
            znew[k] = zk - step
            s = abs(step)
            if s > max_step:
                max_step = s
        for k in range(n):
            z[k] = znew[k]
        if active == 0 or max_step < tol:
            converged = True
            break
    return z, it, converged


@njit(cache=True)
def durand_kerner_batch(coeffs, tol, max_iter, offset):
    nb = coeffs.shape[0]
    n = coeffs.shape[1] - 1
    roots = np.empty((nb, n), np.complex128)
    iters = np.empty(nb, np.int64)
    ok = np.empty(nb, np.bool_)
    for b in range(nb):
        r, it, conv = durand_kerner(coeffs[b], tol, max_iter, offset)
        roots[b] = r
        iters[b] = it
        ok[b] = conv
    return roots, iters, ok


@njit(cache=True)
def faddeev_leverrier(A):
    """Characteristic polynomial coefficients of ``A``, constant term first."""
    n = A.shape[0]
    c = np.zeros(n + 1)
    c[n] = 1.0
    M = np.zeros((n, n))
    AM = np.zeros((n, n))
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I, held in M; AM <- A M_k
        for i in range(n):
            for j in range(n):
                M[i, j] = AM[i, j]
            M[i, i] += c[n - k + 1]
        tr = 0.0
        for i in range(n):
            for j in range(n):
                acc = 0.0
                for l in range(n):
                    acc += A[i, l] * M[l, j]
                AM[i, j] = acc
            tr += AM[i, i]
        c[n - k] = -tr / k
    return c


@njit(cache=True)
def faddeev_leverrier_batch(As):
    nb = As.shape[0]
    n = As.shape[1]
    out = np.empty((nb, n + 1))
    for b in range(nb):
        out[b] = faddeev_leverrier(As[b])
    return out


@njit(cache=True)
def _f_eval(rho, sa, sb, sc, qd1, s1):
    return rho ** s1 * sa - rho ** qd1 * sb - sc


@njit(cache=True)
def bisect_boundary(taus, qd1, s1, phase, lo, hi, tol, max_iter):
    """Bracketed bisection of the boundary equation for each ``tau``.

    Status codes: 0 ok, 1 no sign change on ``[lo, hi]``.
    """
    m = taus.shape[0]
    out = np.empty(m)
    status = np.zeros(m, np.int8)
    for k in range(m):
        tau = taus[k]
        sa = math.sin(qd1 * tau)
        sb = math.sin(s1 * tau - phase)
        sc = math.sin((qd1 - s1) * tau + phase)
        flo = _f_eval(lo, sa, sb, sc, qd1, s1)
        fhi = _f_eval(hi, sa, sb, sc, qd1, s1)
        if fhi == 0.0:
            out[k] = hi
            continue
        if flo == 0.0:
            out[k] = lo
            continue
        if (flo > 0.0) == (fhi > 0.0):
            out[k] = np.nan
            status[k] = 1
            continue
        a = lo
        b = hi
        for _ in range(max_iter):
            if b - a < tol:
                break
            mid = 0.5 * (a + b)
            fm = _f_eval(mid, sa, sb, sc, qd1, s1)
            if fm == 0.0:
                a = mid
                b = mid
                break
            if (fm > 0.0) == (flo > 0.0):
                a = mid
            else:
                b = mid
        out[k] = 0.5 * (a + b)
    return out, status
