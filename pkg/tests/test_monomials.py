from math import comb

from gor3.monomials import (
    deglex_key,
    mono_divides,
    mono_sub,
    monomial_count,
    monomial_index,
    monomials_of_degree,
)


def test_degree_two_in_three_vars():
    basis = monomials_of_degree(3, 2)
    assert list(basis) == [
        (2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]
    assert len(basis) == 6


def test_single_variable():
    assert list(monomials_of_degree(1, 5)) == [(5,)]


def test_counts_match_binomials():
    for n in range(1, 5):
        for t in range(0, 7):
            basis = monomials_of_degree(n, t)
            assert len(basis) == comb(t + n - 1, n - 1) == monomial_count(n, t)
            assert len(set(basis)) == len(basis)


def test_order_is_descending_lex():
    for n, t in [(2, 3), (3, 4), (4, 3)]:
        basis = monomials_of_degree(n, t)
        assert list(basis) == sorted(basis, reverse=True)


def test_degree_zero():
    assert list(monomials_of_degree(4, 0)) == [(0, 0, 0, 0)]


def test_index_map():
    idx = monomial_index(3, 3)
    for i, e in enumerate(monomials_of_degree(3, 3)):
        assert idx[e] == i


def test_mono_helpers():
    assert mono_sub((1, 0, 2), (2, 0, 3)) == (1, 0, 1)
    assert mono_sub((1, 1, 0), (0, 2, 0)) is None
    assert mono_divides((1, 0, 0), (2, 1, 0))
    assert not mono_divides((0, 2, 0), (1, 1, 3))
    assert deglex_key((2, 0, 0)) > deglex_key((1, 1, 0))
    assert deglex_key((0, 0, 3)) > deglex_key((2, 0, 0))
