import math
from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from karpelevic.farey import (
    ExactFareyPoint,
    FareyPair,
    bracketing_pair,
    conjugate_fraction,
    conjugate_pair,
    farey_pairs,
    farey_sequence,
    is_farey_pair,
)
from oracles import farey_bruteforce


@pytest.mark.parametrize(
    "n, expected",
    [
        (1, [F(0), F(1)]),
        (3, [F(0), F(1, 3), F(1, 2), F(2, 3), F(1)]),
        (4, [F(0), F(1, 4), F(1, 3), F(1, 2), F(2, 3), F(3, 4), F(1)]),
    ],
)
def test_farey_sequence_small(n, expected):
    assert farey_sequence(n) == expected


@pytest.mark.parametrize("n", [2, 5, 12, 31, 64])
def test_farey_sequence_matches_enumeration(n):
    assert farey_sequence(n) == farey_bruteforce(n)


def test_farey_sequence_rejects_zero():
    with pytest.raises(ValueError):
        farey_sequence(0)


@pytest.mark.parametrize(
    "a, b, n, expected",
    [
        (F(1, 4), F(1, 3), 5, True),
        (F(1, 4), F(1, 3), 7, False),
        (F(3, 10), F(1, 3), 12, True),
        (F(1, 3), F(1, 2), 6, False),
        (F(1, 5), F(1, 3), 6, False),
    ],
)
def test_is_farey_pair(a, b, n, expected):
    assert is_farey_pair(a, b, n) is expected


def test_neighbours_up_to_64_are_pairs():
    for n in range(1, 65):
        seq = farey_sequence(n)
        assert all(is_farey_pair(a, b, n) for a, b in zip(seq, seq[1:]))


def test_bracketing_examples():
    assert bracketing_pair(5, 7 * math.pi / 12) == FareyPair(F(1, 4), F(1, 3), 5)
    assert bracketing_pair(12, 0.63 * math.pi) == FareyPair(F(3, 10), F(1, 3), 12)
    # 2*pi/3 radians is a third of a turn
    assert bracketing_pair(6, 2 * math.pi / 3) == ExactFareyPoint(F(1, 3), 6)
    assert bracketing_pair(6, 4 * math.pi / 3) == ExactFareyPoint(F(2, 3), 6)


def test_bracketing_snaps_within_tolerance():
    base = 2 * math.pi / 3
    assert isinstance(bracketing_pair(6, base + 5e-13), ExactFareyPoint)
    assert isinstance(bracketing_pair(6, base - 5e-13), ExactFareyPoint)
    assert isinstance(bracketing_pair(6, base + 1e-9), FareyPair)
    # the closing 1/1 is reported as 0/1
    assert bracketing_pair(4, 2 * math.pi - 1e-13) == ExactFareyPoint(F(0), 4)
    assert bracketing_pair(4, -1e-13) == ExactFareyPoint(F(0), 4)


def test_pair_sector_contains_angle():
    pair = bracketing_pair(9, 2.0)
    assert pair.contains_angle(2.0)
    assert not pair.contains_angle(pair.sector[0])


@pytest.mark.parametrize(
    "pair, n, expected",
    [
        ((F(1, 4), F(1, 3)), 5, (F(2, 3), F(3, 4))),
        ((F(3, 10), F(1, 3)), 12, (F(2, 3), F(7, 10))),
        ((F(0), F(1, 7)), 7, (F(6, 7), F(1))),
    ],
)
def test_conjugate_pair(pair, n, expected):
    out = conjugate_pair(FareyPair(*pair, n))
    assert (out.left, out.right) == expected
    assert is_farey_pair(out.left, out.right, n)


def test_conjugate_is_involution():
    for n in range(1, 25):
        for pair in farey_pairs(n):
            assert conjugate_pair(conjugate_pair(pair)) == pair


def test_conjugate_fraction():
    assert conjugate_fraction(F(0)) == F(0)
    assert conjugate_fraction(F(2, 7)) == F(5, 7)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 40), st.floats(0.0, 2 * math.pi, exclude_max=True))
def test_bracketing_is_conjugation_equivariant(n, theta):
    gap = min(abs(theta - 2 * math.pi * float(f)) for f in farey_sequence(n))
    assume(abs(gap - 1e-12) > 1e-14)
    a = bracketing_pair(n, theta)
    b = bracketing_pair(n, 2 * math.pi - theta)
    if isinstance(a, ExactFareyPoint):
        assert isinstance(b, ExactFareyPoint)
        assert b.fraction == conjugate_fraction(a.fraction)
    else:
        assert b == conjugate_pair(a)
