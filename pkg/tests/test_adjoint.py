import pytest

from workbench.adjoint import (
    CartanMatrix2,
    LadderUnboundedError,
    PairData,
    PhiMap,
    ReflectionUndefinedError,
    analyse_pair,
    cartan_matrix,
    compute_ladder,
    reflect,
)
from workbench.scenarios import TCase, build_pair, parse_config
from workbench.ydmodule import braided_isomorphic, direct_sum, identify, is_absolutely_simple


def test_t_ladders(t_pair):
    _, v, w, _ = t_pair
    assert compute_ladder(v, w).dims == (4, 0)
    assert compute_ladder(w, v).dims == (4, 4, 1, 0)


def test_gamma4_ladders(gamma4_pair):
    _, v, w, _ = gamma4_pair
    assert compute_ladder(v, w).dims == (4, 0)
    assert compute_ladder(w, v).dims == (4, 2, 0)


def test_routes_agree(t_pair0, gamma4_pair0):
    for _, v, w, _ in (t_pair0, gamma4_pair0):
        for a, b in ((v, w), (w, v)):
            assert compute_ladder(a, b, route="generators").dims == compute_ladder(a, b).dims


def test_phi1_scalar(t_pair0):
    _, v, w, p = t_pair0
    q = p["rho_x1"] * p["sigma_z"]
    out = PhiMap(v, w).apply(1, {(0, 0): q.spec.one()})
    assert out == {(0, 0): 1 - q}


def test_phi_rejects_wrong_length(t_pair0):
    _, v, w, _ = t_pair0
    with pytest.raises(ValueError):
        PhiMap(v, w).apply(2, {(0, 0): v.field.one()})


def test_x1_vanishes_when_product_is_one():
    _, v, w, _ = build_pair(parse_config("case = t-case\nrho_x1 = 1\nsigma_z = 1"))
    assert compute_ladder(v, w).dims == (0,)


def test_epsilon_minus_one_grows():
    _, v, w, _ = build_pair(parse_config("case = t-case\nepsilon = -1"))
    lad = compute_ladder(w, v, max_m=3)
    assert lad.dims == (4, 12, 32)
    assert not lad.terminated
    with pytest.raises(LadderUnboundedError):
        compute_ladder(w, v, max_m=3, strict=True)
    with pytest.raises(LadderUnboundedError):
        analyse_pair(v, w, max_m=3)


def test_top_entries_t(t_pair0):
    img, v, w, p = t_pair0
    tc = TCase(img)
    lad = compute_ladder(w, v)
    assert lad.top_index == 3 and lad.top().dim == 1
    x3 = lad.module(3)
    base, spec = identify(x3)
    assert base == tc.x1 * tc.x2 * tc.x3 * tc.z
    assert spec.value(tc.x1) == p["rho_x1"] ** 2 * p["sigma_z"]
    assert lad.module(0) is v


def test_cartan_matrices(t_pair, gamma4_pair):
    assert cartan_matrix(*t_pair[1:3]).as_lists() == [[2, -1], [-3, 2]]
    assert cartan_matrix(*gamma4_pair[1:3]).as_lists() == [[2, -1], [-2, 2]]


def test_cartan_type_names():
    assert CartanMatrix2(((2, 0), (0, 2))).type_name() == "A1xA1"
    assert CartanMatrix2(((2, -1), (-1, 2))).type_name() == "A2"
    assert CartanMatrix2(((2, -2), (-1, 2))).type_name() == "B2"
    assert CartanMatrix2(((2, -1), (-3, 2))).type_name() == "G2"
    assert CartanMatrix2(((2, -2), (-2, 2))).type_name() == "infinite"
    assert CartanMatrix2(((2, -1), (-3, 2))).swapped().as_lists() == [[2, -3], [-1, 2]]


def test_reflection_r1_t(t_pair0):
    img, v, w, _ = t_pair0
    a, b = reflect(1, v, w)
    base, spec = identify(b)
    tc = TCase(img)
    assert base == tc.x1 * tc.z
    assert spec.value(base) == -v.field.one()
    assert braided_isomorphic(a, v) is not None


def test_reflection_r2_t(t_pair0):
    _, v, w, _ = t_pair0
    a, b = reflect(2, v, w)
    assert braided_isomorphic(a, v) is not None
    assert braided_isomorphic(b, w) is not None


def test_reflection_needs_simple_top(t_pair0):
    _, v, w, _ = t_pair0
    ww = direct_sum(w, w)
    pair = PairData(v, ww, compute_ladder(v, ww), compute_ladder(ww, v, max_m=1))
    assert pair.ladder_vw.dims == (8, 0)
    with pytest.raises(ReflectionUndefinedError):
        reflect(1, v, ww, pair=pair)


def test_reflection_index_checked(t_pair0):
    _, v, w, _ = t_pair0
    with pytest.raises(ValueError):
        reflect(3, v, w)


def test_gamma4_second_ladder_entry_simple(gamma4_pair):
    _, v, w, _ = gamma4_pair
    assert is_absolutely_simple(compute_ladder(w, v).module(2)).simple


def test_gamma4_non_simple_when_rho_eps_squared_is_one():
    _, v, w, _ = build_pair(parse_config(
        "case = gamma4-case\nrho_eps = 1\nrho_g2 = 1\nsigma_eps2 = 1\nsigma_epsinv_h2 = 1"))
    x2 = compute_ladder(w, v, max_m=2).module(2)
    assert not is_absolutely_simple(x2).simple
