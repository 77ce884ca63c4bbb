import pytest
from hypothesis import given, settings, strategies as st

from workbench.scalars import FieldSpec
from workbench.scenarios import Gamma4Case, TCase
from workbench.ydmodule import (
    CharacterSpec,
    InvalidCharacterError,
    RepSpec2,
    braided_isomorphic,
    braided_space,
    commutant_dimension,
    direct_sum,
    dual,
    identify,
    induce,
    induce_deg2,
    is_absolutely_simple,
    tensor,
    yang_baxter,
)
from workbench.braided import yang_baxter_holds

F0 = FieldSpec(0, 12)
F2 = FieldSpec(2, 3)


def unit(n, k, fld=F0):
    return [fld.one() if i == k else fld.zero() for i in range(n)]


def test_t_w_action_table(t_group):
    tc = TCase(t_group)
    for eps in (F0.one(), -F0.one()):
        w = tc.module_w(tc.sigma(-F0.one(), eps, F0.zeta(2)))
        s = -F0.one()
        # x2 w4 = s^-1 eps w1, x3 w2 = s^-1 eps w1, x1 w_j = s w_(x1|>xj)
        assert w.act(tc.x2, unit(4, 3)) == [eps / s, 0 * s, 0 * s, 0 * s]
        assert tc.x3.conj(tc.x2) == tc.x1
        assert w.act(tc.x3, unit(4, 1)) == [eps / s, 0 * s, 0 * s, 0 * s]
        for j, xj in enumerate(tc.xs):
            k = tc.xs.index(tc.x1.conj(xj))
            assert w.act(tc.x1, unit(4, j)) == [s if i == k else F0.zero() for i in range(4)]


def test_t_v_is_one_dimensional(t_pair0):
    _, v, w, p = t_pair0
    assert v.dim == 1 and w.dim == 4
    assert v.scalar_at(v.degrees[0], v.degrees[0]) == p["rho_z"]


def test_bad_character_rejected(t_group):
    tc = TCase(t_group)
    with pytest.raises(InvalidCharacterError):
        tc.sigma(-F0.one(), F0.zeta(3), F0.zeta(2)).validate()


def test_rho_needs_equal_values_on_conjugates(t_group):
    tc = TCase(t_group)
    spec = CharacterSpec(tc.z, {tc.x1: F0.one(), tc.x2: -F0.one(), tc.z: F0.one()})
    with pytest.raises(InvalidCharacterError):
        spec.validate()


def test_gamma4_tables(gamma4_pair0):
    img, v, w, p = gamma4_pair0
    gc = Gamma4Case(img)
    re_ = p["rho_eps"]
    assert v.act(gc.eps, unit(2, 1)) == [F0.zero(), re_.inverse()]
    assert v.act(gc.g, unit(2, 1)) == [p["rho_g2"], F0.zero()]
    assert w.act(gc.h, unit(4, 3)) == [p["sigma_eps2"] * p["sigma_epsinv_h2"], F0.zero(), F0.zero(), F0.zero()]
    assert w.act(gc.g, unit(4, 1)) == [F0.zero(), F0.zero(), F0.zero(), -p["sigma_eps2"]]


def test_gamma4_character_relation(gamma4_group):
    gc = Gamma4Case(gamma4_group)
    # sigma(eps^2) is forced to be sigma(eps^-1 h^2)^-2
    with pytest.raises(InvalidCharacterError):
        gc.sigma(-F0.one(), F0.one(), F0.zeta(3)).validate()
    gc.sigma(-F0.one(), -F0.one(), F0.zeta(3)).validate()


def test_rep2_requires_char_not_two(t_group):
    with pytest.raises(ValueError):
        RepSpec2(TCase(t_group).z, F2.one(), F2.zeta(1))


def test_rep2_requires_cube_root(t_group):
    with pytest.raises(ValueError):
        RepSpec2(TCase(t_group).z, F0.one(), F0.zeta(2))


def test_degree_two_module_identities():
    from workbench.fpgroup import t_presentation, todd_coxeter

    p = t_presentation()
    img = todd_coxeter(p, [p.parse_word("z^12"), p.parse_word("x^12")])
    tc = TCase(img)
    a, b = F0.zeta(1), F0.zeta(4)
    m = induce_deg2(img, RepSpec2(tc.z, a, b), -F0.one())
    m.validate()
    prod = m.matrix(tc.x1 * tc.x2 * tc.x3)
    assert prod == [[-(a ** 3), F0.zero()], [F0.zero(), -(a ** 3)]]
    assert m.dim == 2


def test_duals_and_isomorphisms(t_pair):
    _, v, w, _ = t_pair
    assert braided_isomorphic(v, dual(v)) is not None
    assert braided_isomorphic(w, dual(w)) is not None
    assert braided_isomorphic(dual(dual(w)), w) is not None
    assert braided_isomorphic(v, w) is None


def test_simplicity(t_pair0):
    _, v, w, _ = t_pair0
    assert is_absolutely_simple(w).simple
    assert is_absolutely_simple(v).simple
    assert not is_absolutely_simple(direct_sum(w, w)).simple
    assert commutant_dimension(direct_sum(v, v)) == 4


def test_identify_recovers_character(t_pair0):
    img, v, w, p = t_pair0
    base, spec = identify(w)
    tc = TCase(img)
    assert base == tc.x1
    assert spec.value(tc.x1) == p["sigma_x1"]
    assert spec.value(tc.z) == p["sigma_z"]


def test_tensor_is_yd(t_pair0):
    _, v, w, _ = t_pair0
    t = tensor(v, w)
    assert t.dim == 4 and t.yd_compatible()


def test_yang_baxter_on_cases(t_pair, gamma4_pair):
    for _, v, w, _ in (t_pair, gamma4_pair):
        assert yang_baxter(v) and yang_baxter(w)
        assert yang_baxter_holds(braided_space(v, w))


T_ROOTS = st.integers(0, 11)


@given(st.sampled_from([1, -1]), st.sampled_from([1, -1]), T_ROOTS, T_ROOTS, T_ROOTS)
@settings(max_examples=40, deadline=None)
def test_induced_modules_are_yd(t_group, sx1, eps, sz, rx1, rz):
    tc = TCase(t_group)
    try:
        wspec = tc.sigma(F0(sx1), F0(eps), F0.zeta(sz))
        wspec.validate()
        vspec = tc.rho(F0.zeta(rx1), F0.zeta(rz))
        vspec.validate()
    except InvalidCharacterError:
        return
    w = tc.module_w(wspec)
    v = tc.module_v(vspec)
    w.validate()
    assert w.yd_compatible() and v.yd_compatible()
    assert sorted(w.support()) == sorted(t_group.class_indices(tc.x1.index))
    assert yang_baxter_holds(braided_space(v, w))


@given(st.sampled_from([3, 9]), st.sampled_from([3, 9]), st.integers(0, 3))
@settings(max_examples=20, deadline=None)
def test_gamma4_modules_are_yd(gamma4_group, re_, seh, rg2):
    gc = Gamma4Case(gamma4_group)
    try:
        vspec = gc.rho(-F0.one(), F0.zeta(re_), F0.zeta(3 * rg2))
        vspec.validate()
        wspec = gc.sigma(-F0.one(), F0.zeta(seh).inverse() ** 2, F0.zeta(seh))
        wspec.validate()
    except InvalidCharacterError:
        return
    v, w = gc.module_v(vspec), gc.module_w(wspec)
    assert v.yd_compatible() and w.yd_compatible()
    assert yang_baxter_holds(braided_space(v, w))


def test_induce_default_transversal(t_group):
    tc = TCase(t_group)
    m = induce(t_group, tc.sigma(-F0.one(), F0.one(), F0.zeta(2)))
    assert m.dim == 4 and m.yd_compatible()
