import os
import subprocess
import sys

import numpy as np
import pytest

from karpelevic import kernels
from karpelevic.kernels import _numba, _numpy
from karpelevic.matrices import random_stochastic


def _same_multiset(a, b, tol):
    b = list(b)
    for z in a:
        k = int(np.argmin(np.abs(np.array(b) - z)))
        if abs(b.pop(k) - z) > tol:
            return False
    return True


def test_default_backend_is_numba():
    env = {k: v for k, v in os.environ.items() if k != "KARPELEVIC_NUMBA"}
    out = subprocess.run(
        [sys.executable, "-c", "from karpelevic import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "numba"


@pytest.mark.parametrize("flag, expected", [("0", "numpy"), ("off", "numpy"), ("1", "numba")])
def test_env_flag_selects_backend(flag, expected):
    env = dict(os.environ, KARPELEVIC_NUMBA=flag)
    out = subprocess.run(
        [sys.executable, "-c", "from karpelevic import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == expected


def test_horner_agree():
    c = np.array([1 - 2j, 0.5, -3, 2j, 1.0])
    z = 0.3 + 0.7j
    assert abs(_numba.horner(c, z) - _numpy.horner(c, np.array([z]))[0]) < 1e-15


def test_durand_kerner_agree():
    rng = np.random.default_rng(11)
    for deg in (2, 5, 12, 24):
        c = rng.normal(size=deg + 1) + 1j * rng.normal(size=deg + 1)
        za, ita, oka = _numba.durand_kerner(c, 1e-13, 2000, 0.4)
        zb, itb, okb = _numpy.durand_kerner(c, 1e-13, 2000, 0.4)
        assert oka and okb
        assert _same_multiset(za, zb, 1e-10)


def test_durand_kerner_batch_agree():
    Ms = random_stochastic(6, size=40, rng=4)
    cp = _numpy.faddeev_leverrier_batch(Ms).astype(np.complex128)
    za, _, oka = _numba.durand_kerner_batch(cp, 1e-13, 2000, 0.4)
    zb, _, okb = _numpy.durand_kerner_batch(cp, 1e-13, 2000, 0.4)
    assert np.all(oka) and np.all(okb)
    for a, b in zip(za, zb):
        assert _same_multiset(a, b, 1e-9)


def test_faddeev_leverrier_agree():
    Ms = random_stochastic(7, size=10, rng=8)
    a = _numba.faddeev_leverrier_batch(Ms)
    b = _numpy.faddeev_leverrier_batch(Ms)
    assert np.allclose(a, b, rtol=0, atol=1e-13)
    assert np.allclose(_numba.faddeev_leverrier(Ms[0]), _numpy.faddeev_leverrier(Ms[0]), atol=1e-13)


def test_bisection_agree():
    taus = np.linspace(0.6 * np.pi, 2 * np.pi / 3, 503)[1:-1] / 2 + np.pi
    ra, sa = _numba.bisect_boundary(taus, 6, 5, np.pi / 2, 1e-15, 1.0, 1e-13, 200)
    rb, sb = _numpy.bisect_boundary(taus, 6, 5, np.pi / 2, 1e-15, 1.0, 1e-13, 200)
    assert not np.any(sa) and not np.any(sb)
    assert np.max(np.abs(ra - rb)) <= 1e-13


def test_boundary_identical_under_numpy_backend():
    code = (
        "import numpy as np; from karpelevic import boundary_moduli;"
        "print(repr(boundary_moduli(9, np.linspace(0.05, 6.2, 7)).tolist()))"
    )
    outs = []
    for flag in ("0", "1"):
        env = dict(os.environ, KARPELEVIC_NUMBA=flag)
        outs.append(eval(subprocess.run([sys.executable, "-c", code], env=env,
                                        capture_output=True, text=True, check=True).stdout))
    assert np.max(np.abs(np.subtract(*outs))) <= 1e-13
