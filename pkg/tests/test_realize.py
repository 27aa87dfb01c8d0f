import cmath
import math
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from karpelevic.arcs import ArcType, arc_params, ito_roots, reduced_ito_poly
from karpelevic.boundary import boundary_arrays, boundary_point
from karpelevic.farey import FareyPair, farey_pairs
from karpelevic.matrices import cycle_permutation, is_stochastic
from karpelevic.poly import Poly, RootSet, all_roots, char_poly, eigenvalues
from karpelevic.realize import (
    NotInRegion,
    RealizationKind,
    brauer_scale,
    companion_typeI,
    cyclic_combo,
    inflate,
    is_subdominant_eigenvalue,
    realize_subdominant,
    verify_subdominant,
)


def _contains_all(eigs, wanted, tol):
    eigs = list(eigs)
    for w in wanted:
        k = int(np.argmin(np.abs(np.array(eigs) - w)))
        if abs(eigs.pop(k) - w) > tol:
            return False
    return True


def test_cyclic_combo_examples():
    assert np.array_equal(cyclic_combo(5, 0.0), np.eye(5))
    assert np.array_equal(cyclic_combo(5, 1.0), cycle_permutation(5))
    ev = np.linalg.eigvals(cyclic_combo(4, 0.5))
    assert _contains_all(ev, [1, 0.5 + 0.5j, 0.5 - 0.5j, 0], 1e-14)
    assert is_stochastic(cyclic_combo(7, 0.3))
    with pytest.raises(ValueError):
        cyclic_combo(3, 1.2)


def test_companion_examples():
    p = arc_params(FareyPair(F(1, 4), F(1, 3), 5))
    C1 = companion_typeI(p, 1.0)
    assert np.array_equal(C1, cycle_permutation(4))
    bp = boundary_point(5, 7 * math.pi / 12)
    C = companion_typeI(p, bp.alpha)
    assert is_stochastic(C)
    assert np.min(np.abs(eigenvalues(C).roots - bp.value)) < 1e-10
    with pytest.raises(ValueError):
        companion_typeI(arc_params(FareyPair(F(2, 5), F(1, 2), 5)), 0.3)


@pytest.mark.parametrize("n", range(3, 13))
def test_companion_char_poly(n):
    for pair in farey_pairs(n):
        p = arc_params(pair)
        if p.arc_type is not ArcType.TYPE1:
            continue
        for alpha in (0.0, 0.17, 0.5, 0.93, 1.0):
            cp = char_poly(companion_typeI(p, alpha))
            f = reduced_ito_poly(p, alpha)
            assert np.max(np.abs(cp.coeffs - f.coeffs)) <= 1e-12


def test_inflate():
    T = cyclic_combo(4, 0.3)
    assert np.array_equal(inflate(T, 4), T)
    M = inflate(cycle_permutation(2), 4)
    assert is_stochastic(M)
    assert _contains_all(np.linalg.eigvals(M), [1, -1, 0, 0], 1e-12)
    with pytest.raises(ValueError):
        inflate(T, 3)


def test_inflate_keeps_spectrum_and_irreducibility():
    p = arc_params(FareyPair(F(1, 5), F(1, 4), 5))
    T = companion_typeI(p, 0.4)
    M = inflate(T, 9)
    assert is_stochastic(M)
    want = list(np.linalg.eigvals(T)) + [0] * (9 - T.shape[0])
    assert _contains_all(np.linalg.eigvals(M), want, 1e-6)
    # a single cycle stays irreducible: (I + M)^(n-1) is positive
    C = inflate(cycle_permutation(5), 8)
    reach = np.linalg.matrix_power(np.eye(8) + C, 7)
    assert np.all(reach > 0)


def test_brauer_scale():
    T = cyclic_combo(3, 1.0)
    assert np.array_equal(brauer_scale(T, 1.0), T)
    J = brauer_scale(T, 0.0)
    assert _contains_all(np.linalg.eigvals(J), [1, 0, 0], 1e-12)
    ev = np.linalg.eigvals(brauer_scale(T, 0.5))
    w = cmath.exp(2j * math.pi / 3)
    assert _contains_all(ev, [1, 0.5 * w, 0.5 * w.conjugate()], 1e-14)
    assert is_stochastic(brauer_scale(companion_typeI(arc_params(FareyPair(F(1, 4), F(1, 3), 5)), 0.3), 0.7))


def test_verify_subdominant_examples():
    roots = RootSet(np.array([1, 1j, -1, -1j]), 0.0)
    assert not verify_subdominant(roots, 1j)
    assert verify_subdominant(np.array([1, 0.5j, -0.5j, 0.2]), 0.5j)
    assert not verify_subdominant(np.array([1, 0.5j, -0.5j, -0.6]), 0.5j)


@pytest.mark.parametrize("n, kind", [(12, ArcType.TYPE2), (5, ArcType.TYPE1), (9, ArcType.TYPE3)])
def test_verify_along_arcs(n, kind):
    hits = 0
    for pair in farey_pairs(n):
        p = arc_params(pair)
        if p.arc_type is not kind:
            continue
        lo, hi = pair.sector
        data = boundary_arrays(n, np.linspace(lo, hi, 17)[1:-1])
        for alpha, value in zip(data["alpha"], data["value"]):
            roots = ito_roots(p, alpha)
            t = roots.nearest(value)
            assert abs(t - value) < 1e-8
            assert verify_subdominant(roots, t)
            hits += 1
    assert hits > 0


def test_realize_one_and_zero():
    r = realize_subdominant(4, 1)
    assert r.kind is RealizationKind.MATRIX and r.achieved == 1
    assert np.array_equal(r.matrix, np.eye(4))
    z = realize_subdominant(4, 0)
    assert is_stochastic(z.matrix) and abs(z.achieved) < 1e-12


def test_realize_type2_certificate():
    z = 0.9 * cmath.exp(7j * math.pi / 12)
    r = realize_subdominant(6, z)
    assert r.kind is RealizationKind.CERTIFICATE
    assert r.certificate.subdominance_ok
    assert abs(r.achieved - z) < 1e-10
    assert r.params.arc_type is ArcType.TYPE2
    with pytest.raises(NotInRegion):
        realize_subdominant(5, z)


def test_realize_boundary_point_order_five():
    bp = boundary_point(5, 7 * math.pi / 12)
    r = realize_subdominant(5, bp.value)
    assert r.kind is RealizationKind.MATRIX and r.matrix.shape == (5, 5)
    assert is_stochastic(r.matrix)
    ev = np.linalg.eigvals(r.matrix)
    assert np.min(np.abs(ev - bp.value)) < 1e-8
    assert verify_subdominant(ev, bp.value)


@pytest.mark.parametrize("z", [0.5, -0.3, -0.95, 0.3 + 0.2j, 0.6j * cmath.exp(0.3j), cmath.exp(2j * math.pi / 5)])
def test_realize_matrix_cases_order_five(z):
    r = realize_subdominant(5, z)
    assert r.kind is RealizationKind.MATRIX
    assert is_stochastic(r.matrix)
    ev = np.linalg.eigvals(r.matrix)
    assert np.min(np.abs(ev - z)) < 1e-8
    assert abs(r.achieved - z) < 1e-7
    assert is_subdominant_eigenvalue(ev, z)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 14), st.data(), st.floats(0.01, 0.99))
def test_equal_modulus_rigidity(n, data, alpha):
    # roots near 0 of, e.g., t**13 - beta*t**3 - alpha form near-regular
    # triangles whose moduli agree to ~1e-8 without being equal, so the
    # screen is applied to moduli >= 0.5
    pairs = [p for p in farey_pairs(n) if 2 <= min(p.left.denominator, p.right.denominator)]
    pair = data.draw(st.sampled_from(pairs))
    p = arc_params(pair)
    roots = ito_roots(p, alpha).roots
    roots = roots[np.abs(roots) >= 0.5]
    mods = np.abs(roots)
    for i in range(roots.size):
        for j in range(i + 1, roots.size):
            if abs(mods[i] - mods[j]) <= 1e-7:
                d = min(abs(roots[i] - roots[j]), abs(roots[i] - np.conj(roots[j])))
                assert d <= 1e-5


@pytest.mark.parametrize("n", [5, 8, 11])
def test_sharpest_decay_locus_is_the_boundary_one(n):
    for pair in farey_pairs(n):
        p = arc_params(pair)
        if p.q < 2 or p.s <= p.q:
            continue
        qd1 = p.q * p.d1
        bound = -(1 - math.cos(2 * math.pi / (p.q * p.delta * p.d1))) / qd1
        best = []
        for j in range(p.delta):
            for m in range(qd1):
                kappa = 2 * m * p.s1 / qd1 - 2 * j / (p.delta * p.d1)
                rate = -(1 - math.cos(math.pi * kappa)) / qd1
                if rate < -1e-12 and abs(rate - bound) < 1e-12:
                    best.append((j, m))
        m0 = (p.p + p.q * p.l0) % qd1
        assert (p.j0, m0) in best or ((-p.j0) % p.delta, (-m0) % qd1) in best
