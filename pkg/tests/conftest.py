import pytest

from gor3 import GradedIdeal, parse_poly
from gor3.cases import (
    ex_2_5_ideal,
    ex_3_7_ideal,
    ex_4_5_ideal,
    ex_4_9_ideal,
    five_gen_monomial_ideal,
    monomial_tower_ideal,
)

VARS = ["x", "y", "z"]


def poly(text, field=None):
    if field is None:
        return parse_poly(text, VARS)
    return parse_poly(text, VARS, field)


@pytest.fixture(scope="session")
def ex_2_5():
    return ex_2_5_ideal()


@pytest.fixture(scope="session")
def ex_3_7():
    return ex_3_7_ideal()


@pytest.fixture(scope="session")
def ex_4_5():
    return ex_4_5_ideal()


@pytest.fixture(scope="session")
def ex_4_9():
    return ex_4_9_ideal()


@pytest.fixture(scope="session")
def tower_d3():
    return monomial_tower_ideal(3)


@pytest.fixture(scope="session")
def tower_d4():
    return monomial_tower_ideal(4)


@pytest.fixture(scope="session")
def five_gen_dp2():
    return five_gen_monomial_ideal(2)


@pytest.fixture(scope="session")
def cubes():
    return GradedIdeal.from_strings(["x^3", "y^3", "z^3"])
