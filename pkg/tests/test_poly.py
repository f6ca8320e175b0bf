import random
from fractions import Fraction

import pytest

from gor3.fields import GF, QQ
from gor3.monomials import monomials_of_degree
from gor3.parsing import PolyParseError, parse_poly
from gor3.poly import MultiPoly, power_substitution, rewrite_in_linear_forms

VARS = ["x", "y", "z"]


def P(text, field=QQ):
    return parse_poly(text, VARS, field)


def random_form(rng, n, degree, field=QQ, density=0.6):
    terms = {}
    for e in monomials_of_degree(n, degree):
        if rng.random() < density:
            c = field.of(rng.randint(-9, 9))
            if not field.is_zero(c):
                terms[e] = c
    if not terms:
        e = list(monomials_of_degree(n, degree))[0]
        terms[e] = field.one
    return MultiPoly(n, terms, field)


def test_parse_simple():
    f = P("x^2 + y^2 + z^2")
    assert len(f.terms) == 3
    assert f.homogeneous_degree() == 2


def test_parse_cancellation():
    assert P("x*y - y*x").is_zero()


def test_parse_binomial_power():
    f = P("(x+y+z)^2")
    assert len(f.terms) == 6
    assert f.coefficient((1, 1, 0)) == 2
    assert f.coefficient((2, 0, 0)) == 1


def test_parse_rational_coefficients():
    f = P("1/2*x - 3/4*y + 2*z")
    assert f.coefficient((1, 0, 0)) == Fraction(1, 2)
    assert f.coefficient((0, 1, 0)) == Fraction(-3, 4)


def test_parse_errors_carry_position():
    with pytest.raises(PolyParseError):
        P("x +* y")
    with pytest.raises(PolyParseError):
        P("x + w")
    with pytest.raises(PolyParseError):
        P("x / y")
    with pytest.raises(PolyParseError) as exc_info:
        P("x + $")
    assert exc_info.value.pos == 4


def test_print_parse_round_trip():
    rng = random.Random(1)
    for _ in range(40):
        f = random_form(rng, 3, rng.randint(0, 4))
        assert P(f.format()) == f


def test_round_trip_mod_p():
    F = GF(13)
    rng = random.Random(2)
    for _ in range(20):
        f = random_form(rng, 3, rng.randint(1, 3), field=F)
        assert parse_poly(f.format(), VARS, F) == f


def test_product_of_homogeneous_is_homogeneous():
    rng = random.Random(3)
    for _ in range(20):
        a, b = rng.randint(1, 3), rng.randint(1, 3)
        f = random_form(rng, 3, a)
        g = random_form(rng, 3, b)
        h = f * g
        assert not h.is_zero()
        assert h.homogeneous_degree() == a + b


def test_substitute_square_map():
    f = P("x + y")
    images = [MultiPoly.variable(i, 3) ** 2 for i in range(3)]
    assert f.substitute(images) == P("x^2 + y^2")
    assert power_substitution(f, 2) == P("x^2 + y^2")


def test_substitute_linear():
    f = P("x*z")
    x, y, z = (MultiPoly.variable(i, 3) for i in range(3))
    assert f.substitute([x, y, x + y]) == P("x^2 + x*y")


def test_substitution_ambient_mismatch():
    f = P("x + y")
    with pytest.raises(ValueError):
        f.substitute([MultiPoly.variable(0, 3)])


def test_exponent_scaling_commutes_with_leading_monomial():
    """The leading monomial of the image under x_i -> x_i^p is the image of
    the leading monomial, in deg-lex order."""
    rng = random.Random(4)
    for trial in range(100):
        n = rng.choice([2, 3, 4])
        f = random_form(rng, n, rng.randint(1, 4), density=0.5)
        p = rng.randint(2, 4)
        lifted = power_substitution(f, p)
        expected = tuple(e * p for e in f.leading_monomial())
        assert lifted.leading_monomial() == expected


def test_general_substitution_matches_power_substitution():
    rng = random.Random(5)
    for _ in range(10):
        f = random_form(rng, 3, rng.randint(1, 3))
        images = [MultiPoly.variable(i, 3) ** 2 for i in range(3)]
        assert f.substitute(images) == power_substitution(f, 2)


def test_rewrite_in_linear_forms_inverts():
    lines = [P("x + y"), P("y"), P("z - x")]
    f = P("x^2*z + y^3")
    g = rewrite_in_linear_forms(f, lines)
    assert g.substitute(lines) == f


def test_rewrite_rejects_dependent_lines():
    with pytest.raises(ValueError):
        rewrite_in_linear_forms(P("x^2"), [P("x"), P("y"), P("x + y")])


def test_scale_and_pow():
    f = P("x - y")
    assert f.scale(0).is_zero()
    assert f ** 0 == P("1")
    assert f ** 3 == f * f * f


def test_vector_round_trip():
    f = P("x^2 - 2*x*y + z^2")
    vec = f.to_vector(2)
    assert MultiPoly.from_vector(3, 2, vec) == f
