"""The module-level operation names are the public API surface; keep them
working even if the method-based internals move around."""

import gor3


def test_operation_aliases():
    I = gor3.GradedIdeal.from_strings(["x^2", "y^2", "z^2"])
    assert gor3.ideal_graded_piece(I, 2).dim == 3
    assert gor3.hilbert_function(I, 2) == 3
    assert gor3.minimal_generator_profile(I) == {2: 3}
    assert gor3.socle_report(I).socle_degree == 3
    assert gor3.virtual_datum(I).as_tuple() == (2, 3, 2)
    assert gor3.ideal_power_piece(I, 2, 4).dim == 6
    f = gor3.parse_poly("x*y", ["x", "y", "z"])
    colon = gor3.colon_form(I, f)
    assert colon.contains(gor3.parse_poly("x", ["x", "y", "z"]))


def test_linalg_aliases():
    M = gor3.ExactMatrix.identity(gor3.QQ, 3)
    rank, kernel = gor3.rank_kernel(M)
    assert rank == 3 and kernel == []


def test_monomial_aliases():
    assert len(gor3.monomials_of_degree(3, 4)) == gor3.monomial_count(3, 4) == 15


def test_backend_flag_exposed():
    assert gor3.BACKEND in ("cython", "python")


def test_gap_with_general_lines():
    lines = [gor3.parse_poly(s, ["x", "y", "z"]) for s in ("x+y", "y", "z")]
    I = gor3.GradedIdeal.from_strings(
        ["x*y", "x*z", "y*z", "x^2-z^2", "y^2-z^2"])
    assert gor3.pure_power_index(I, lines) == 3
    assert gor3.pure_power_gap(I, lines) == 0
