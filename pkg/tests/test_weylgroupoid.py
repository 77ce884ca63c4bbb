import pytest

from workbench.adjoint import CartanMatrix2, analyse_pair, reflect
from workbench.weylgroupoid import (
    GroupoidUnboundedError,
    NotFiniteTypeError,
    build_groupoid,
    longest_word_roots,
    pairs_isomorphic,
    reduced_longest_word,
    root_modules,
)
from workbench.ydmodule import braided_isomorphic

G2 = CartanMatrix2(((2, -1), (-3, 2)))
B2 = CartanMatrix2(((2, -1), (-2, 2)))


# object counts are computed values; in characteristic 2 more reflected pairs coincide
T_OBJECTS = {0: 6, 2: 3}
GAMMA4_OBJECTS = {0: 4, 2: 1}


def test_t_groupoid(t_pair):
    _, v, w, _ = t_pair
    gpd = build_groupoid(v, w, max_m=5)
    assert gpd.is_standard() and gpd.is_finite()
    assert gpd.type_name() == "G2"
    assert len(gpd.objects) == T_OBJECTS[v.field.characteristic]
    assert len(gpd.edges) == 2 * len(gpd.objects)


def test_gamma4_groupoid(gamma4_pair):
    _, v, w, _ = gamma4_pair
    gpd = build_groupoid(v, w, max_m=5)
    assert gpd.is_standard() and gpd.is_finite()
    assert gpd.type_name() == "B2"
    assert len(gpd.objects) == GAMMA4_OBJECTS[v.field.characteristic]


def test_object_bound(t_pair0):
    _, v, w, _ = t_pair0
    with pytest.raises(GroupoidUnboundedError):
        build_groupoid(v, w, object_bound=2, max_m=5)
    gpd = build_groupoid(v, w, object_bound=2, max_m=5, strict=False)
    assert not gpd.is_finite()


def test_edges_are_involutions(t_pair0):
    _, v, w, _ = t_pair0
    gpd = build_groupoid(v, w, max_m=5)
    edge = {(s, i): t for s, i, t in gpd.edges}
    for (s, i), t in edge.items():
        assert edge[(t, i)] == s


@pytest.mark.parametrize("i", [1, 2])
def test_double_reflection(t_pair0, gamma4_pair0, i):
    for _, v, w, _ in (t_pair0, gamma4_pair0):
        a, b = reflect(i, v, w)
        c, d = reflect(i, a, b)
        assert pairs_isomorphic((c, d), (v, w))
        assert analyse_pair(c, d).cartan == analyse_pair(v, w).cartan


def test_g2_roots():
    rs = longest_word_roots(G2)
    assert rs.word == (2, 1, 2, 1, 2, 1)
    assert rs.coords() == [(0, 1), (1, 3), (1, 2), (2, 3), (1, 1), (1, 0)]


def test_b2_roots():
    rs = longest_word_roots(B2)
    assert rs.coords() == [(0, 1), (1, 2), (1, 1), (1, 0)]
    assert [r.text() for r in rs.roots] == ["a2", "a1+2a2", "a1+a2", "a1"]


def test_a2_and_a1xa1_roots():
    assert longest_word_roots(CartanMatrix2(((2, -1), (-1, 2)))).coords() == [(0, 1), (1, 1), (1, 0)]
    assert longest_word_roots(CartanMatrix2(((2, 0), (0, 2)))).coords() == [(0, 1), (1, 0)]


def test_infinite_type_rejected():
    with pytest.raises(NotFiniteTypeError):
        reduced_longest_word(CartanMatrix2(((2, -2), (-2, 2))))


def test_root_modules_alternate(t_pair0):
    _, v, w, _ = t_pair0
    rs = longest_word_roots(G2)
    mods = root_modules(v, w, rs.word, max_m=5)
    for k, m in enumerate(mods):
        target = w if k % 2 == 0 else v
        assert braided_isomorphic(m, target) is not None


def test_summary_is_serialisable(gamma4_pair0):
    import json

    _, v, w, _ = gamma4_pair0
    s = build_groupoid(v, w).summary()
    assert json.loads(json.dumps(s))["type"] == "B2"
