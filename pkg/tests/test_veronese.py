from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chowkit.fixtures import load_fixture
from chowkit.veronese import (
    BettiTable,
    betti_from_fixture,
    chi_polynomial,
    hook_lengths,
    homogeneous_ulrich_rank,
    instanton_c2,
    legendre_valuation,
    min_rank_divisor,
    rank2_p2_tate_table,
    schur_rank,
    ulrich_chi,
    ulrich_partition,
    weakly_ulrich_line_range,
)


def weyl_dimension(lam, n):
    """Independent oracle: dim of the GL_n irrep via the Weyl product over i < j."""
    lam = list(lam) + [0] * (n - len(lam))
    num = den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    assert num % den == 0
    return num // den


def test_ulrich_chi_examples():
    assert ulrich_chi(7, 3, 2, 0) == 7
    assert ulrich_chi(7, 3, 2, -2) == 0
    for d in range(2, 6):
        for e in range(-4 * d, d + 1):
            assert ulrich_chi(2 * d * d, 2, d, e) == (e + d) * (e + 2 * d)
    assert isinstance(ulrich_chi(1, 2, 3, 1), Fraction)
    with pytest.raises(ValueError):
        ulrich_chi(1, 1, 0, 0)


@pytest.mark.parametrize("k", range(0, 6))
@pytest.mark.parametrize("d", range(1, 6))
def test_ulrich_chi_zero_set(k, d):
    zeros = {e for e in range(-(k + 1) * d, d + 1) if ulrich_chi(5, k, d, e) == 0}
    assert zeros == {-i * d for i in range(1, k + 1)}


def test_min_rank_divisor_examples():
    assert min_rank_divisor(3, 3) == 3
    assert min_rank_divisor(2, 5) == 1
    for k in range(1, 6):
        assert min_rank_divisor(k, factorial(k)) == factorial(k)
    assert legendre_valuation(10, 2) == 8 and legendre_valuation(10, 5) == 2


def test_no_rank_two_when_three_divides_d():
    for d in range(2, 30):
        rank_two_allowed = 2 % min_rank_divisor(3, d) == 0
        assert rank_two_allowed == (d % 3 != 0)
        if rank_two_allowed:
            assert instanton_c2(d) == (d * d - 1) // 3
        else:
            with pytest.raises(ValueError, match="divisible by 3"):
                instanton_c2(d)


def test_instanton_examples():
    assert instanton_c2(2) == 1
    assert instanton_c2(4) == 5
    with pytest.raises(ValueError):
        instanton_c2(1)


def test_ulrich_partition_examples():
    assert ulrich_partition(2, 3) == (2, 0)
    assert ulrich_partition(3, 2) == (2, 1, 0)
    assert ulrich_partition(1, 7) == (0,)
    assert schur_rank(ulrich_partition(1, 7), 1) == 1


def test_hook_lengths():
    assert hook_lengths((2, 1)) == {(1, 1): 3, (1, 2): 1, (2, 1): 1}
    assert hook_lengths(()) == {}
    with pytest.raises(ValueError):
        hook_lengths((1, 2))


def test_schur_rank_small():
    for n in range(1, 7):
        assert schur_rank((1,), n) == n
    for d in range(1, 8):
        assert schur_rank((d - 1,), 2) == d
    assert schur_rank((1, 1), 4) == 6
    assert schur_rank((2,), 4) == 10


@given(st.lists(st.integers(0, 5), max_size=4), st.integers(1, 6))
def test_schur_rank_matches_weyl(parts, n):
    lam = tuple(sorted(parts, reverse=True))
    if sum(1 for x in lam if x) > n:
        return
    assert schur_rank(lam, n) == weyl_dimension(lam, n)


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("d", range(1, 6))
def test_homogeneous_ulrich_rank(n, d):
    r = homogeneous_ulrich_rank(n, d)
    assert r == d ** comb(n, 2) == schur_rank(ulrich_partition(n, d), n)
    if n >= 2 and d >= 2:
        assert hook_lengths(ulrich_partition(n, d))[(1, 1)] == d * (n - 1) - 1


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("d", range(1, 7))
def test_rank_is_multiple_of_divisor(n, d):
    assert d ** comb(n, 2) % min_rank_divisor(n, d) == 0


def classical(k, d):
    return k <= 3 or (k == 4 and d <= 3) or (k == 5 and d <= 2) or d == 1


def test_weakly_ulrich_examples():
    assert len(weakly_ulrich_line_range(4, 4)) == 0
    assert list(weakly_ulrich_line_range(5, 2)) == [1]
    assert list(weakly_ulrich_line_range(3, 10)) == [7, 8, 9]


def test_weakly_ulrich_classical_list():
    for k in range(1, 11):
        for d in range(1, 11):
            assert bool(weakly_ulrich_line_range(k, d)) == classical(k, d), (k, d)


# -- betti tables -----------------------------------------------------------------


@pytest.mark.parametrize("d", range(2, 8))
def test_rank2_p2_table(d):
    T = rank2_p2_tate_table(d)
    assert T.h(0, 0) == 2 * d * d
    # middle strand: i(d-i) for i = 1..d-1
    middle = [x for x in T.rows[1] if x]
    assert middle == [i * (d - i) for i in range(1, d)]
    assert [T.h(0, -d + i) for i in range(1, d + 1)] == [i * (d + i) for i in range(1, d + 1)]
    assert [T.h(2, -2 * d - i) for i in (1, 2)] == [d + 1, 2 * (d + 2)]
    for e, chi in T.chi_values().items():
        assert chi == ulrich_chi(2 * d * d, 2, d, e)


def test_hm_table():
    T = betti_from_fixture(load_fixture("hm-betti"))
    values = T.chi_values()
    assert len(values) >= 9
    # rank 2 on P^4: leading coefficient 2/4!
    poly = chi_polynomial(values)
    assert len(poly) == 5 and poly[-1] == Fraction(2, 24)
    # Serre duality for F^* = F(-5) and omega = O(-5)
    assert all(values.get(-10 - e, v) == v for e, v in values.items())
    assert T.h(0, 0) == 4 and T.h(1, 0) == 2 and T.h(2, -5) == 2


def test_nullcorr_table_is_ulrich():
    T = betti_from_fixture(load_fixture("nullcorr-betti"))
    for e, v in T.chi_values().items():
        assert v == ulrich_chi(16, 3, 2, e)
    assert chi_polynomial(T.chi_values())[-1] == Fraction(2, 6)


def test_betti_validation():
    with pytest.raises(ValueError, match="non-negative"):
        BettiTable(rows=[[1, -1]], top_index=0, origin_column=0)
    with pytest.raises(ValueError, match="rows"):
        BettiTable(rows=[[1], [2]], top_index=0, origin_column=0)
    T = BettiTable(rows=[[1, None]], top_index=0, origin_column=0)
    assert T.chi(1) is None and T.entry(0, 5) is None
    assert "..." in T.to_text()
