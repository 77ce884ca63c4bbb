import pytest
from hypothesis import given, settings, strategies as st

from workbench.fpgroup import (
    BadWordError,
    EnumerationOverflowError,
    Presentation,
    free_reduce,
    hom_check,
    invert_word,
    t_presentation,
    todd_coxeter,
)


def test_small_known_orders():
    s3 = Presentation.parse("gens: a b\nrels: a^2, b^3, a b a b")
    assert todd_coxeter(s3).order == 6
    q8 = Presentation.parse("gens: i j\nrels: i^4, i^2 J^2, i j I j")
    assert todd_coxeter(q8).order == 8
    c5 = Presentation.parse("gens: a\nrels: a^5")
    assert todd_coxeter(c5).order == 5


def test_overflow_is_reported():
    free = Presentation.parse("gens: a b\nrels: a^2")
    with pytest.raises(EnumerationOverflowError):
        todd_coxeter(free, max_cosets=500)


def test_bad_word():
    p = Presentation(("a", "b"))
    with pytest.raises(BadWordError):
        p.check_word((3,))


def test_free_reduce():
    assert free_reduce((1, 2, -2, -1, 3)) == (3,)
    assert invert_word((1, -2)) == (2, -1)


def test_quotient_orders(t_group, gamma4_group, gamma2_group, gamma3_group):
    assert t_group.order == 288
    assert gamma4_group.order == 64
    assert gamma2_group.order == 8
    assert gamma3_group.order == 108


def test_t_quotient_structure(t_group):
    x1, x2, z = t_group.generators
    x3 = x2 * x1 * x2.inverse()
    x4 = x1 * x2 * x1.inverse()
    assert len({x1, x2, x3, x4}) == 4
    assert t_group.is_central(z)
    assert t_group.is_central(x1 ** 3)
    assert t_group.is_central(x1 * x2 * x3)
    assert x2 * x1 * x4 == x1 * x2 * x3
    assert len(t_group.class_indices(x1.index)) == 4


def test_gamma4_structure(gamma4_group):
    g, h, e = gamma4_group.generators
    assert len(gamma4_group.class_indices(g.index)) == 4
    assert len(gamma4_group.class_indices(h.index)) == 2
    assert gamma4_group.is_central(e.inverse() * h * h)
    assert gamma4_group.is_central(g * g)
    assert e * e != gamma4_group.identity


def test_gamma3_class_sizes(gamma3_group):
    a, b, _ = gamma3_group.generators
    assert len(gamma3_group.class_indices(a.index)) == 3
    assert len(gamma3_group.class_indices(b.index)) == 2


def test_gamma2_is_dihedral(gamma2_group):
    # D4 has five involutions and two elements of order 4
    orders = sorted(x.order() for x in gamma2_group.elements())
    assert orders == [1, 2, 2, 2, 2, 2, 4, 4]


def test_degree_two_quotient_order():
    img = todd_coxeter(t_presentation(), [t_presentation().parse_word(w) for w in ("z^12", "x^12")])
    assert img.order == 1152


def test_hom_check_identity_and_failure(t_group):
    assert hom_check(t_presentation(), t_group, t_group.generators)
    x1, x2, z = t_group.generators
    assert not hom_check(t_presentation(), t_group, [x1, x1 * x1, z])


def test_parse_round_trip():
    p = t_presentation()
    assert p.parse_word(p.word_text(p.parse_word("x y X z^-2"))) == p.parse_word("x y X Z Z")


@pytest.mark.parametrize("fixture", ["t_group", "gamma4_group", "gamma2_group", "gamma3_group"])
def test_class_equation_all_elements(fixture, request):
    img = request.getfixturevalue(fixture)
    seen = set()
    for g in range(img.order):
        assert len(img.class_indices(g)) * len(img.centralizer_indices(g)) == img.order
        seen.update(img.class_indices(g))
    assert seen == set(range(img.order))


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_group_axioms(t_group, data):
    n = t_group.order
    a, b, c = (t_group[data.draw(st.integers(0, n - 1))] for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert (a * a.inverse()).is_identity()
    assert a.conj(b * c) == a.conj(b) * a.conj(c)
    assert a.order() >= 1 and (a ** a.order()).is_identity()


@given(st.lists(st.integers(1, 3).flatmap(lambda g: st.sampled_from([g, -g])), max_size=12))
@settings(max_examples=60, deadline=None)
def test_word_evaluation_is_multiplicative(t_group, word):
    w = tuple(word)
    half = len(w) // 2
    assert t_group.element(w) == t_group.element(w[:half]) * t_group.element(w[half:])
    assert t_group.element(invert_word(w)) == t_group.element(w).inverse()
