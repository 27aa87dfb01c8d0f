"""Pure-numpy kernels, vectorised over batches instead of compiled loops."""

import numpy as np

EPS = np.finfo(np.float64).eps


def horner(coeffs, z):
    acc = np.zeros_like(np.asarray(z, dtype=np.complex128))
    for c in coeffs[::-1]:
        acc = acc * z + c
    return acc


def durand_kerner_batch(coeffs, tol, max_iter, offset):
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    nb, n1 = coeffs.shape
    n = n1 - 1
    a = coeffs / coeffs[:, n:]
    absa = np.abs(a)
    radius = 1.0 + absa[:, :n].max(axis=1)
    radius = np.maximum(radius, 1.0)
    ang = 2.0 * np.pi * np.arange(n) / n + offset
    z = radius[:, None] * (np.cos(ang) + 1j * np.sin(ang))[None, :]
    frozen = np.zeros((nb, n), dtype=bool)
    done = np.zeros(nb, dtype=bool)
    iters = np.zeros(nb, dtype=np.int64)
    bound_scale = 4.0 * n * EPS
    eye = np.eye(n, dtype=bool)
    for it in range(1, max_iter + 1):
        live = ~done
        if not live.any():
            break
        iters[live] = it
        zl = z[live]
        az = np.abs(zl)
        p = np.ones_like(zl)
        b = np.ones(zl.shape)
        al = a[live]
        absal = absa[live]
        for i in range(n - 1, -1, -1):
            p = p * zl + al[:, i:i + 1]
            b = b * az + absal[:, i:i + 1]
        fr = frozen[live] | (np.abs(p) <= bound_scale * b)
        diff = zl[:, :, None] - zl[:, None, :]
        diff[:, eye] = 1.0
        denom = diff.prod(axis=2)
        with np.errstate(divide="ignore", invalid="ignore"):
            step = np.where(denom == 0, 0j, p / denom)
        step[fr] = 0j
        z[live] = zl - step
        frozen[live] = fr
        max_step = np.abs(step).max(axis=1)
        active = (~fr).sum(axis=1)
        idx = np.flatnonzero(live)
        done[idx[(active == 0) | (max_step < tol)]] = True
    return z, iters, done


def durand_kerner(coeffs, tol, max_iter, offset):
    roots, iters, ok = durand_kerner_batch(
        np.asarray(coeffs, dtype=np.complex128)[None, :], tol, max_iter, offset
    )
    return roots[0], int(iters[0]), bool(ok[0])


def faddeev_leverrier_batch(As):
    As = np.asarray(As, dtype=np.float64)
    nb, n, _ = As.shape
    c = np.zeros((nb, n + 1))
    c[:, n] = 1.0
    AM = np.zeros_like(As)
    eye = np.eye(n)
    for k in range(1, n + 1):
        M = AM + c[:, n - k + 1, None, None] * eye
        AM = As @ M
        c[:, n - k] = -np.trace(AM, axis1=1, axis2=2) / k
    return c


def faddeev_leverrier(A):
    return faddeev_leverrier_batch(np.asarray(A, dtype=np.float64)[None])[0]


def bisect_boundary(taus, qd1, s1, phase, lo, hi, tol, max_iter):
    taus = np.asarray(taus, dtype=np.float64)
    sa = np.sin(qd1 * taus)
    sb = np.sin(s1 * taus - phase)
    sc = np.sin((qd1 - s1) * taus + phase)

    def f(rho):
        return rho ** s1 * sa - rho ** qd1 * sb - sc

    flo = f(np.full(taus.shape, lo))
    fhi = f(np.full(taus.shape, hi))
    status = np.zeros(taus.shape, dtype=np.int8)
    a = np.full(taus.shape, lo)
    b = np.full(taus.shape, hi)
    bad = (flo != 0) & (fhi != 0) & ((flo > 0) == (fhi > 0))
    status[bad] = 1
    settled = bad | (flo == 0) | (fhi == 0)
    a[fhi == 0] = hi
    b[flo == 0] = lo
    for _ in range(max_iter):
        live = ~settled & (b - a >= tol)
        if not live.any():
            break
        mid = 0.5 * (a + b)
        fm = f(mid)
        exact = live & (fm == 0)
        a[exact] = mid[exact]
        b[exact] = mid[exact]
        settled |= exact
        go = live & ~exact
        left = go & ((fm > 0) == (flo > 0))
        a[left] = mid[left]
        right = go & ~left
        b[right] = mid[right]
    out = 0.5 * (a + b)
    out[bad] = np.nan
    return out, status
