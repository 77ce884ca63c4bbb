from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from workbench.scalars import (
    Constraint,
    FieldSpec,
    ScalarSyntaxError,
    format_scalar,
    parse_scalar,
    solve_unity_constraints,
)

F0 = FieldSpec(0, 12)
F2 = FieldSpec(2, 3)

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def scalars0(draw):
    coeffs = draw(st.lists(small, min_size=1, max_size=12))
    s = F0.zero()
    for k, c in enumerate(coeffs):
        s = s + F0.zeta(k) * F0(c)
    return s


@st.composite
def scalars2(draw):
    bits = draw(st.lists(st.integers(0, 1), min_size=1, max_size=3))
    s = F2.zero()
    for k, c in enumerate(bits):
        if c:
            s = s + F2.zeta(k)
    return s


def test_zeta_orders():
    assert F0.zeta(1).multiplicative_order() == 12
    assert F0.zeta(2).multiplicative_order() == 6
    assert F0.zeta(3) * F0.zeta(3) == -F0.one()
    assert F2.zeta(1).multiplicative_order() == 3
    assert F2.one() + F2.one() == F2.zero()


def test_sixth_root_identity():
    z6 = F0.zeta(2)
    assert z6 * z6 - z6 + 1 == 0
    assert F0.degree == 4
    assert F2.degree == 2


def test_roots_of_unity_are_distinct():
    assert len(set(F0.roots_of_unity())) == 12
    assert len(set(F2.roots_of_unity())) == 3


def test_root_exponent():
    assert F0.zeta(5).root_exponent() == 5
    assert (F0.one() + F0.one()).root_exponent() is None


@pytest.mark.parametrize("text", ["zeta6^1", "-1", "zeta4^3", "(1 + zeta3^1)/2", "0", "3/4"])
def test_format_parse_round_trip(text):
    s = parse_scalar(text, F0)
    assert parse_scalar(format_scalar(s), F0) == s


def test_parse_rejects_garbage():
    with pytest.raises(ScalarSyntaxError):
        parse_scalar("zeta6^", F0)


def test_unrepresentable_root():
    with pytest.raises(ValueError):
        parse_scalar("zeta5^1", F0)


def test_char_two_rejects_even_conductor():
    with pytest.raises(ValueError):
        FieldSpec(2, 12)


def test_constraint_solver_finds_sixth_roots():
    sols = solve_unity_constraints(F0, ["q^2 - q + 1 = 0"], unknowns=["q"])
    assert [format_scalar(s["q"]) for s in sols] == ["zeta6^1", "zeta6^5"]


def test_constraint_solver_respects_fixed():
    sols = solve_unity_constraints(F0, ["a*b = 1"], fixed={"a": F0.zeta(1)}, unknowns=["b"])
    assert sols == [{"b": F0.zeta(11)}]


def test_constraint_parse_names():
    c = Constraint.parse("rho_x1*rho_z*sigma_z = 1")
    assert c.names == {"rho_x1", "rho_z", "sigma_z"}


@given(scalars0())
def test_inverse_char0(a):
    if a:
        assert a * a.inverse() == F0.one()


@given(scalars2())
def test_inverse_char2(a):
    if a:
        assert a * a.inverse() == F2.one()


@given(scalars0(), scalars0(), scalars0())
@settings(max_examples=60)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@given(scalars0())
@settings(max_examples=60)
def test_format_round_trip_property(a):
    assert parse_scalar(format_scalar(a), F0) == a


@given(scalars2())
def test_format_round_trip_char2(a):
    assert parse_scalar(format_scalar(a), F2) == a


@given(st.integers(-30, 30), st.integers(-30, 30))
def test_zeta_power_law(j, k):
    assert F0.zeta(j) * F0.zeta(k) == F0.zeta(j + k)


def test_rational_embedding():
    assert F0(Fraction(1, 2)) + F0(Fraction(1, 2)) == F0.one()
