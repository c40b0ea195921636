import pytest

from chowkit.arith import GF, Matrix, det, pfaffian
from chowkit.grassmann import eval_bracket, parse_bracket_linear, pluecker_coords
from chowkit.ternary import (
    MONOMIALS,
    coefficient_matrix,
    evaluate_quadric,
    pfaffian_matrix_at,
    pfaffian_matrix_quadrics,
    pfaffian_resultant_quadrics,
    planted_common_zero_quadrics,
    random_quadric,
    resultant_quadrics,
    stiefel_matrix_quadrics,
)

F = GF(2**31 - 1)
X2, Y2, Z2 = (1, 0, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 0, 1)


def L(text):
    return parse_bracket_linear(2, 5, text)


def test_pfaffian_matrix_entries():
    M = pfaffian_matrix_quadrics()
    assert len(M) == 8 and all(len(r) == 8 for r in M)
    assert M[0][1] == L("[245]")
    assert M[1][7] == L("-[125]+[045]")
    for i in range(8):
        assert M[i][i] == L("0")
        for j in range(8):
            assert M[j][i] == -M[i][j]


def test_stiefel_matrix_entries(rng):
    a, b, c = (random_quadric(rng, F) for _ in range(3))
    S = coefficient_matrix(a, b, c)
    M = stiefel_matrix_quadrics(a, b, c)
    assert [M[i, 0] for i in range(6)] == list(a)
    assert [M[i, 2] for i in range(6)] == list(c)
    assert M[0, 3] == eval_bracket(L("[015]"), S)
    assert M[2, 3] == eval_bracket(L("[045]-[125]"), S)
    assert M[5, 5] == 0


def test_pure_powers():
    # measured once and frozen: both formulas give -1 on x^2, y^2, z^2
    assert resultant_quadrics(X2, Y2, Z2) == -1
    assert pfaffian_resultant_quadrics(X2, Y2, Z2) == -1


def test_pfaffian_matrix_at_is_skew(rng):
    a, b, c = (random_quadric(rng, F) for _ in range(3))
    M = pfaffian_matrix_at(a, b, c)
    assert pfaffian(M) ** 2 == det(M)


def test_planted_examples(rng):
    for q in planted_common_zero_quadrics((1, 0, 0), rng, F):
        assert q[0] == 0
    for q in planted_common_zero_quadrics((0, 0, 1), rng, F):
        assert q[5] == 0
    P = (3, -1, 7)
    qs = planted_common_zero_quadrics(P, rng, F)
    assert all(evaluate_quadric(q, [F(x) for x in P]) == 0 for q in qs)
    assert resultant_quadrics(*qs) == 0
    with pytest.raises(ValueError):
        planted_common_zero_quadrics((0, 0, 0), rng, F)


def test_wrong_length():
    with pytest.raises(ValueError, match="6 coefficients"):
        resultant_quadrics((1, 2), Y2, Z2)


def test_formulas_agree_and_detect_common_zeros(rng):
    ratios = set()
    for _ in range(100):
        qs = [random_quadric(rng, F) for _ in range(3)]
        d, pf = resultant_quadrics(*qs), pfaffian_resultant_quadrics(*qs)
        assert d != 0 and pf != 0
        ratios.add(pf / d)
        P = [F.random(rng) for _ in range(3)]
        if any(P):
            planted = planted_common_zero_quadrics(P, rng, F)
            assert resultant_quadrics(*planted) == 0
            assert pfaffian_resultant_quadrics(*planted) == 0
    assert ratios == {F(1)}


def test_degree_four_in_each_quadric(rng):
    for _ in range(10):
        a, b, c = (random_quadric(rng, F) for _ in range(3))
        lam = F.random(rng, nonzero=True)
        la = tuple(lam * x for x in a)
        for fn in (resultant_quadrics, pfaffian_resultant_quadrics):
            assert fn(la, b, c) == lam**4 * fn(a, b, c)
            assert fn(a, b, tuple(lam * x for x in c)) == lam**4 * fn(a, b, c)


def test_invariance_under_row_operations(rng):
    # a Chow form depends only on the span of a, b, c: a row operation of
    # determinant D multiplies every bracket by D and a degree-4 form by D^4
    a, b, c = (random_quadric(rng, F) for _ in range(3))
    lam = F.random(rng)
    a2 = tuple(x + lam * y for x, y in zip(a, b))
    assert resultant_quadrics(a2, b, c) == resultant_quadrics(a, b, c)
    assert pfaffian_resultant_quadrics(a2, b, c) == pfaffian_resultant_quadrics(a, b, c)


def test_monomial_order():
    assert MONOMIALS[1] == (1, 1, 0) and MONOMIALS[3] == (0, 2, 0)
    assert evaluate_quadric((0, 1, 0, 0, 0, 0), [2, 3, 5]) == 6
    assert pluecker_coords(Matrix.from_rows([X2, Y2, Z2]))[(0, 3, 5)] == 1
