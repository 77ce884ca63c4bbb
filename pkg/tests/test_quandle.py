import pytest
from hypothesis import given, settings, strategies as st

from workbench.quandle import (
    CATALOGUE,
    FiniteQuandle,
    NotAQuandleError,
    amalgamated_sum,
    catalogue_quandle,
    conjugation,
    dihedral,
    disjoint_union,
    enveloping_presentation,
    from_row_permutations,
    is_isomorphic,
    isomorphisms,
    parse_quandle,
    tetrahedral,
    trivial,
)
from workbench.fpgroup import hom_check, todd_coxeter


def axioms_hold(q: FiniteQuandle) -> bool:
    n = q.size
    t = q.table
    for i in range(n):
        if t[i][i] != i or sorted(t[i]) != list(range(n)):
            return False
        for j in range(n):
            for k in range(n):
                if t[i][t[j][k]] != t[t[i][j]][t[i][k]]:
                    return False
    return True


def test_rejects_non_quandle():
    with pytest.raises(NotAQuandleError):
        FiniteQuandle([[1, 1], [0, 1]])


def test_dihedral_three_is_tetrahedral_free():
    assert is_isomorphic(dihedral(3), tetrahedral()) is None
    assert tetrahedral().size == 4


def test_catalogue_orbits():
    sizes = {name: sorted(len(o) for o in catalogue_quandle(name).orbits()) for name in CATALOGUE}
    assert sizes == {
        "Z_T^{4,1}": [1, 4],
        "Z_2^{2,2}": [2, 2],
        "Z_3^{3,1}": [1, 3],
        "Z_3^{3,2}": [2, 3],
        "Z_4^{4,2}": [2, 4],
    }


def test_structural_descriptions():
    assert is_isomorphic(catalogue_quandle("Z_T^{4,1}"), disjoint_union(tetrahedral(), trivial(1)))
    assert is_isomorphic(catalogue_quandle("Z_2^{2,2}"), dihedral(4))
    assert is_isomorphic(catalogue_quandle("Z_3^{3,1}"), disjoint_union(dihedral(3), trivial(1)))


def test_amalgamated_sum_matches_catalogue():
    # D3 with two points swapping nothing inside, acting by 3-cycles on D3
    sigma = [[1, 0], [1, 0], [1, 0]]
    tau = [[1, 2, 0], [2, 0, 1]]
    q = amalgamated_sum(dihedral(3), trivial(2), sigma, tau)
    assert is_isomorphic(q, catalogue_quandle("Z_3^{3,2}")) is not None


def test_amalgamated_sum_validates():
    with pytest.raises(NotAQuandleError):
        amalgamated_sum(dihedral(3), trivial(2), [[1, 0]] * 3, [[1, 0, 2], [0, 1, 2]])


def test_conjugation_quandle_of_t(t_group):
    x, _, z = t_group.generators
    q, els = conjugation(t_group, [x, z])
    assert q.size == 5
    assert is_isomorphic(q, catalogue_quandle("Z_T^{4,1}")) is not None
    for i, a in enumerate(els):
        for j, b in enumerate(els):
            assert els[q.table[i][j]] == a.conj(b)


def test_enveloping_group_maps_onto_t(t_group):
    x, _, z = t_group.generators
    q, els = conjugation(t_group, [x, z])
    pres = enveloping_presentation(q)
    assert hom_check(pres, t_group, els)
    extra = [(i + 1,) * els[i].order() for i in range(q.size)]
    assert todd_coxeter(pres, extra).order == t_group.order


def test_parse_quandle_text():
    q = parse_quandle("(23)  # first\n(13)\n(12)\n")
    assert is_isomorphic(q, dihedral(3)) is not None


def test_isomorphism_count_of_d3():
    # Aut(D3) = S3
    assert len(list(isomorphisms(dihedral(3), dihedral(3)))) == 6


def _all_constructed():
    qs = [catalogue_quandle(n) for n in CATALOGUE]
    qs += [dihedral(n) for n in range(1, 8)] + [trivial(3), tetrahedral()]
    qs.append(disjoint_union(tetrahedral(), dihedral(3)))
    return qs


@pytest.mark.parametrize("q", _all_constructed(), ids=lambda q: f"size{q.size}")
def test_axioms_on_constructed(q):
    assert axioms_hold(q)


@given(st.sampled_from(list(CATALOGUE)), st.randoms(use_true_random=False))
@settings(max_examples=30, deadline=None)
def test_relabelling_is_isomorphic(name, rnd):
    q = catalogue_quandle(name)
    perm = list(range(q.size))
    rnd.shuffle(perm)
    inv = [perm.index(i) for i in range(q.size)]
    relabelled = FiniteQuandle([[perm[q.table[inv[a]][inv[b]]] for b in range(q.size)] for a in range(q.size)])
    f = is_isomorphic(q, relabelled)
    assert f is not None
    for a in range(q.size):
        for b in range(q.size):
            assert f[q.table[a][b]] == relabelled.table[f[a]][f[b]]


@given(st.integers(3, 9))
def test_dihedral_axioms(n):
    assert axioms_hold(dihedral(n))


def test_catalogue_pairwise_distinct():
    names = list(CATALOGUE)
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            assert is_isomorphic(catalogue_quandle(a), catalogue_quandle(b)) is None


def test_from_row_permutations_string():
    assert from_row_permutations("(23) (13) (12)").size == 3
