from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from chowkit.arith import GF, Matrix, det
from chowkit.exterior import ExtElement, random_element, top_coefficient, wedge
from chowkit.grassmann import (
    BracketPoly,
    brackets_equal,
    constant_ratio,
    eval_bracket,
    format_bracket,
    parse_bracket,
    parse_bracket_linear,
    plucker_relations_check,
    pluecker_coords,
    proportional_on_random_points,
    random_stiefel,
    rows_wedge,
    wedge_to_bracket,
)

from .oracles import sympy_minor

F = GF(2**31 - 1)


def br(k, n, idx, c=1):
    return BracketPoly.bracket(k, n, idx, c)


def test_pluecker_examples():
    assert pluecker_coords(Matrix.from_rows([[1, 0, 0], [0, 1, 0]])) == {(0, 1): 1, (0, 2): 0, (1, 2): 0}
    assert pluecker_coords(Matrix.from_rows([[1, 0, 1], [0, 1, 1]])) == {(0, 1): 1, (0, 2): 1, (1, 2): -1}


def test_pluecker_against_sympy_minors(rng):
    rows = [[int(x) for x in rng.integers(-5, 6, 6)] for _ in range(3)]
    coords = pluecker_coords(Matrix.from_rows(rows))
    for cols in combinations(range(6), 3):
        assert coords[cols] == sympy_minor(rows, cols)


def test_row_scaling_scales_brackets(rng):
    S = random_stiefel(3, 6, F, rng)
    lam = F.random(rng, nonzero=True)
    T = Matrix.from_rows([[lam * x for x in S.row(0)], list(S.row(1)), list(S.row(2))])
    a, b = pluecker_coords(S), pluecker_coords(T)
    assert all(b[c] == lam * a[c] for c in a)


@given(st.integers(0, 2**32 - 1), st.integers(1, 3), st.integers(0, 3))
def test_left_multiplication_scales_by_det(seed, k1, extra):
    rng = np.random.default_rng(seed)
    n1 = k1 + extra
    S = random_stiefel(k1, n1, F, rng)
    M = random_stiefel(k1, k1, F, rng)
    a, b = pluecker_coords(S), pluecker_coords(M @ S)
    d = det(M)
    assert all(b[c] == d * a[c] for c in a)


def test_eval_bracket_examples():
    assert eval_bracket(br(1, 1, (0, 1)), Matrix.from_rows([[1, 0], [0, 1]])) == 1
    P = br(1, 2, (0, 1)) * br(1, 2, (1, 2)) - br(1, 2, (0, 2)) ** 2
    assert eval_bracket(P, Matrix.from_rows([[-1, 0, 1], [-4, 0, 1]])) == -9
    assert eval_bracket(BracketPoly(1, 2), Matrix.from_rows([[1, 2, 3], [4, 5, 6]])) == 0
    with pytest.raises(ValueError, match="Stiefel"):
        eval_bracket(P, Matrix.from_rows([[1, 2], [3, 4]]))


def test_bracket_antisymmetry():
    assert br(2, 4, (1, 0, 3)) == br(2, 4, (0, 1, 3), -1)
    assert br(2, 4, (1, 1, 3)) == BracketPoly(2, 4)
    with pytest.raises(ValueError):
        br(2, 4, (0, 1))
    with pytest.raises(ValueError):
        br(1, 3, (0, 4))


@given(st.lists(st.integers(0, 30), min_size=1, max_size=5, unique=True))
def test_format_parse_roundtrip(idx):
    idx = tuple(sorted(idx))
    assert parse_bracket(format_bracket(idx), len(idx)) == idx


def test_format_styles():
    assert format_bracket((0, 3, 4)) == "[034]"
    assert format_bracket((3, 11)) == "[3 11]"
    assert parse_bracket("[0, 2, 5]") == (0, 2, 5)
    assert parse_bracket("[10]") == (1, 0)
    assert parse_bracket("[10]", 1) == (10,)
    with pytest.raises(ValueError, match="indices"):
        parse_bracket("[012]", 2)


def test_parse_linear_and_str():
    L = parse_bracket_linear(2, 5, "-[125]+[045]")
    assert L == br(2, 5, (0, 4, 5)) - br(2, 5, (1, 2, 5))
    assert str(L) == "[045]-[125]"
    assert parse_bracket_linear(2, 5, "2*[012] - [345]") == br(2, 5, (0, 1, 2), 2) - br(2, 5, (3, 4, 5))
    with pytest.raises(ValueError):
        parse_bracket_linear(2, 5, "[01")


def test_wedge_to_bracket_examples():
    assert wedge_to_bracket(ExtElement.gen(3, 2), 1) == br(1, 2, (0, 1))
    assert wedge_to_bracket(ExtElement.gen(3, 1), 1) == br(1, 2, (0, 2), -1)
    assert wedge_to_bracket(ExtElement.gen(3, 0), 1) == br(1, 2, (1, 2))
    with pytest.raises(ValueError, match="degree"):
        wedge_to_bracket(ExtElement.monomial(3, (0, 1)), 1)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 7) for k in range(0, n)])
def test_wedge_to_bracket_evaluation_identity(n, k):
    rng = np.random.default_rng(100 * n + k)
    for _ in range(100):
        omega = random_element(n + 1, n - k, rng)
        S = random_stiefel(k + 1, n + 1, F, rng)
        lhs = eval_bracket(wedge_to_bracket(omega, k), S)
        rhs = top_coefficient(wedge(omega.map_coeffs(F), rows_wedge(S)))
        assert lhs == rhs


def test_wedge_to_bracket_is_linear(rng):
    for _ in range(20):
        a, b = random_element(6, 3, rng), random_element(6, 3, rng)
        assert wedge_to_bracket(a + b.scale(3), 2) == wedge_to_bracket(a, 2) + wedge_to_bracket(b, 2) * 3


def test_plucker_relation_g24_explicit(rng):
    S = random_stiefel(2, 4, F, rng)
    p = pluecker_coords(S)
    assert p[(0, 1)] * p[(2, 3)] - p[(0, 2)] * p[(1, 3)] + p[(0, 3)] * p[(1, 2)] == 0
    assert plucker_relations_check(S)
    assert plucker_relations_check(Matrix.from_rows([[1, 0, 2, 3], [0, 1, 5, 7]]))


@given(st.integers(0, 2**32 - 1), st.integers(1, 3), st.integers(1, 3))
def test_plucker_relations_random(seed, k1, extra):
    rng = np.random.default_rng(seed)
    assert plucker_relations_check(random_stiefel(k1, k1 + extra, F, rng))


def test_constant_ratio_protocol():
    assert constant_ratio([(1, 2), (3, 6), (0, 0)]) == (2, 3, 0)
    assert constant_ratio([(1, 2), (3, 7)])[2] == 1
    assert constant_ratio([(0, 0), (0, 1)]) == (None, 2, 1)
    assert constant_ratio([(Fraction(1, 2), 1), (2, 4)])[0] == 2


def test_brackets_equal_and_proportional(rng):
    P = br(1, 3, (0, 1)) * br(1, 3, (2, 3)) + br(1, 3, (0, 3)) * br(1, 3, (1, 2))
    Q = br(1, 3, (0, 2)) * br(1, 3, (1, 3))  # equal modulo the Plücker relation
    assert brackets_equal(P, Q, rng)
    assert not brackets_equal(P, Q + br(1, 3, (0, 1)) ** 2, rng)
    r, count, bad = proportional_on_random_points(
        lambda S: eval_bracket(P, S), lambda S: eval_bracket(Q * -3, S), 2, 4, rng
    )
    assert (r, count, bad) == (F(-3), 25, 0)
