from fractions import Fraction

import pytest

from gor3.fields import GF, QQ, FieldError, field_from_spec


def test_rational_basics():
    a = QQ.of(Fraction(3, 6))
    assert a == Fraction(1, 2)
    assert a.denominator > 0
    assert QQ.add(a, QQ.of(1)) == Fraction(3, 2)
    assert QQ.inv(Fraction(-2, 3)) == Fraction(-3, 2)
    assert QQ.is_zero(QQ.sub(a, a))


def test_prime_field_residues():
    F = GF(7)
    assert F.of(-1) == 6
    assert F.of(Fraction(1, 2)) == 4  # 2 * 4 = 8 = 1 mod 7
    assert F.mul(3, 5) == 1
    assert F.inv(3) == 5
    assert all(0 <= F.of(k) < 7 for k in range(-20, 20))


def test_primality_enforced():
    with pytest.raises(FieldError):
        GF(6)
    with pytest.raises(FieldError):
        GF(1)
    GF(2)
    GF(2147483629)  # largest prime below 2^31


def test_denominator_divisible_by_p():
    F = GF(5)
    with pytest.raises(FieldError):
        F.of(Fraction(1, 5))


def test_field_spec_parsing():
    assert field_from_spec("q") == QQ
    assert field_from_spec("fp:97") == GF(97)
    with pytest.raises(FieldError):
        field_from_spec("fp:10")
    with pytest.raises(FieldError):
        field_from_spec("real")


def test_equality_and_hash():
    assert GF(5) == GF(5)
    assert GF(5) != GF(7)
    assert QQ != GF(5)
    assert hash(GF(5)) == hash(GF(5))
