"""Exact simplex on small packing programs."""

import random
from fractions import Fraction

import pytest

from dicolor.errors import InputError
from dicolor.simplex import simplex_max

from oracles import packing_lp_value


def test_single_constraint():
    value, x, y = simplex_max(
        [Fraction(1), Fraction(1)],
        [[Fraction(1), Fraction(1)]],
        [Fraction(1)],
    )
    assert value == 1
    assert sum(x) == 1
    assert y == [Fraction(1)]


def test_known_small_lp():
    # max x0 + x1 s.t. 2x0 + x1 <= 4, x0 + 3x1 <= 6
    value, x, y = simplex_max(
        [Fraction(1), Fraction(1)],
        [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]],
        [Fraction(4), Fraction(6)],
    )
    assert value == Fraction(14, 5)
    assert x == [Fraction(6, 5), Fraction(8, 5)]
    # dual feasibility and strong duality
    assert 2 * y[0] + y[1] >= 1 and y[0] + 3 * y[1] >= 1
    assert 4 * y[0] + 6 * y[1] == value


def test_negative_rhs_rejected():
    with pytest.raises(InputError):
        simplex_max([Fraction(1)], [[Fraction(1)]], [Fraction(-1)])


def test_random_packing_vs_vertex_enumeration():
    rng = random.Random(77)
    for _ in range(60):
        n = rng.randint(1, 4)
        m = rng.randint(1, 5)
        rows = [[rng.randint(0, 1) for _ in range(n)] for _ in range(m)]
        # ensure every variable is bounded so the program is not unbounded
        for j in range(n):
            if not any(row[j] for row in rows):
                rows[rng.randrange(m)][j] = 1
        value, x, y = simplex_max(
            [Fraction(1)] * n,
            [[Fraction(v) for v in row] for row in rows],
            [Fraction(1)] * m,
        )
        assert value == packing_lp_value(rows, n)
        # primal feasibility
        for row in rows:
            assert sum(c * xi for c, xi in zip(row, x)) <= 1
        # strong duality with the packing rhs of ones
        assert sum(y, Fraction(0)) == value


def test_deterministic_result():
    rows = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
    a = simplex_max([Fraction(1)] * 3, [[Fraction(v) for v in r] for r in rows], [Fraction(1)] * 3)
    b = simplex_max([Fraction(1)] * 3, [[Fraction(v) for v in r] for r in rows], [Fraction(1)] * 3)
    assert a == b
