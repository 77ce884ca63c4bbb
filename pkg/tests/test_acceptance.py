"""Acceptance criteria 1-10; each test prints one PASS/FAIL line."""

import time
from contextlib import contextmanager

from hypothesis import given, settings, strategies as st

from workbench.adjoint import analyse_pair, cartan_matrix, compute_ladder, reflect
from workbench.braided import diagonal_space, rack_space, yang_baxter_holds
from workbench.fpgroup import gamma_presentation, hom_check, t_presentation
from workbench.nichols import (
    FactorLibrary,
    dimension,
    graded_dims,
    hilbert_from_roots,
    one_plus_t_power,
    q_integer,
    verify_bigraded,
)
from workbench.quandle import CATALOGUE, catalogue_quandle, conjugation, tetrahedral
from workbench.scalars import FieldSpec
from workbench.scenarios import (
    CLASSIFICATION_GROUPS,
    ScenarioConfig,
    _group_presentation,
    _quotient,
    build_pair,
    find_class_pair,
    run_classification,
    run_deg2_exclusion,
)
from workbench.weylgroupoid import build_groupoid, longest_word_roots, pairs_isomorphic, root_modules
from workbench.ydmodule import braided_space, dual

F0 = FieldSpec(0, 12)
F2 = FieldSpec(2, 3)


@contextmanager
def criterion(request, number: int, title: str, limit: float | None = None):
    """Print 'PASS'/'FAIL' for the criterion, whatever happens inside."""
    capman = request.config.pluginmanager.getplugin("capturemanager")
    t0 = time.perf_counter()
    ok = False
    try:
        yield
        elapsed = time.perf_counter() - t0
        if limit is not None:
            assert elapsed < limit, f"took {elapsed:.1f} s, limit {limit} s"
        ok = True
    finally:
        elapsed = time.perf_counter() - t0
        line = f"[criterion {number:2d}] {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.2f} s)"
        with capman.global_and_fixture_disabled():
            print("\n" + line)


def pair(case, char=0):
    return build_pair(ScenarioConfig(case, characteristic=char))


def test_criterion_01_t_ladders(request):
    with criterion(request, 1, "T-case ladders (4,0) and (4,4,1,0)", limit=5):
        _, v, w, _ = pair("t-case")
        assert compute_ladder(v, w).dims == (4, 0)
        assert compute_ladder(w, v).dims == (4, 4, 1, 0)


def test_criterion_02_gamma4_ladders(request):
    with criterion(request, 2, "Gamma4 ladders (4,0) and (4,2,0)", limit=5):
        _, v, w, _ = pair("gamma4-case")
        assert compute_ladder(v, w).dims == (4, 0)
        assert compute_ladder(w, v).dims == (4, 2, 0)


def test_criterion_03_cartan(request):
    _, tv, tw, _ = pair("t-case")
    _, gv, gw, _ = pair("gamma4-case")
    with criterion(request, 3, "Cartan matrices G2 and B2", limit=5):
        assert cartan_matrix(tv, tw).as_lists() == [[2, -1], [-3, 2]]
        assert cartan_matrix(gv, gw).as_lists() == [[2, -1], [-2, 2]]


def test_criterion_04_groupoids(request):
    with criterion(request, 4, "Weyl groupoids standard, finite, G2/B2, involutive reflections, 6 and 4 roots", limit=30):
        for case, type_name, n_roots in (("t-case", "G2", 6), ("gamma4-case", "B2", 4)):
            _, v, w, _ = pair(case)
            gpd = build_groupoid(v, w, max_m=5)
            assert gpd.is_standard() and gpd.is_finite()
            assert gpd.type_name() == type_name
            start = analyse_pair(v, w)
            for i in (1, 2):
                a, b = reflect(i, v, w, pair=start)
                c, d = reflect(i, a, b)
                back = analyse_pair(c, d)
                assert ((c.dim, d.dim), back.cartan) == ((v.dim, w.dim), start.cartan)
                assert pairs_isomorphic((c, d), (v, w))
            assert len(longest_word_roots(start.cartan).roots) == n_roots


def _assembled_series(v, w):
    rs = longest_word_roots(analyse_pair(v, w).cartan)
    lib = FactorLibrary()
    factors = [lib.lookup(m)[1] for m in root_modules(v, w, rs.word)]
    return hilbert_from_roots(rs, factors)


def test_criterion_05_dimensions(request):
    expected = {("t-case", 0): 80621568, ("t-case", 2): 1259712, ("gamma4-case", 0): 262144, ("gamma4-case", 2): 65536}
    with criterion(request, 5, "Hilbert dimensions 80621568, 1259712, 262144, 65536", limit=30):
        for (case, char), dim in expected.items():
            _, v, w, _ = pair(case, char)
            assert dimension(_assembled_series(v, w)) == dim


def test_criterion_06_oracle(request):
    with criterion(request, 6, "bigraded oracle up to total degree 4, both cases, both characteristics", limit=600):
        for case in ("t-case", "gamma4-case"):
            for char in (0, 2):
                _, v, w, _ = pair(case, char)
                series = _assembled_series(v, w)
                rows = verify_bigraded(v, w, series, 4)
                assert len(rows) == 15
                bad = [(r.bidegree, r.expected, r.rank) for r in rows if not r.ok]
                assert not bad, (case, char, bad)


def test_criterion_07_rank_one_factors(request):
    with criterion(request, 7, "rank-one factor graded dims up to degree 4", limit=120):
        _, _, w, _ = pair("t-case")
        tetra = q_integer(2) ** 2 * q_integer(3) * q_integer(6)
        assert graded_dims(w, 4) == tetra.univariate_coeffs()[:5]
        assert graded_dims(rack_space(F0, tetrahedral(), [[-F0.one()] * 4] * 4), 4) == tetra.univariate_coeffs()[:5]
        i = F0.zeta(3)
        small = one_plus_t_power(1) ** 2 * one_plus_t_power(2)
        assert graded_dims(diagonal_space(F0, [[-F0.one(), i], [i, -F0.one()]]), 4) == small.univariate_coeffs()
        img, v4, w4, _ = pair("gamma4-case")
        big = one_plus_t_power(1) ** 4 * one_plus_t_power(2) ** 2
        assert big.univariate_coeffs()[:5] == [1, 4, 8, 12, 14]
        assert graded_dims(w4, 4) == [1, 4, 8, 12, 14]
        assert graded_dims(v4, 4) == small.univariate_coeffs()
        x2 = compute_ladder(w4, v4).module(2)
        assert graded_dims(x2, 4) == small.univariate_coeffs()


def test_criterion_08_degree_two(request):
    with criterion(request, 8, "degree-2 exclusion: both equivalences exact, zero survivors", limit=60):
        rep = run_deg2_exclusion(ScenarioConfig("deg2-exclusion"))
        stats = rep.data["enumeration"]
        assert stats["assignments"] == 576
        assert stats["x1_agree"] == stats["assignments"]
        assert stats["x2_cases"] > 0 and stats["x2_agree"] == stats["x2_cases"]
        assert stats["survivors"] == 0
        assert rep.passed, rep.first_failure()


def test_criterion_09_classification(request):
    with criterion(request, 9, "five quandles: structure and enveloping-group surjections", limit=10):
        rep = run_classification(ScenarioConfig("classification"))
        assert rep.passed, rep.first_failure()
        for name in CATALOGUE:
            group_name, relators = CLASSIFICATION_GROUPS[name]
            img = _quotient(_group_presentation(group_name), relators)
            f, els, _ = find_class_pair(img, catalogue_quandle(name))
            from workbench.quandle import enveloping_presentation

            assert hom_check(enveloping_presentation(catalogue_quandle(name)), img, [els[f[i]] for i in range(len(f))])


def _quandle_axioms(q):
    n, t = q.size, q.table
    return all(
        t[i][i] == i and sorted(t[i]) == list(range(n))
        and all(t[i][t[j][k]] == t[t[i][j]][t[i][k]] for j in range(n) for k in range(n))
        for i in range(n)
    )


@st.composite
def nonzero_scalars(draw, fld):
    n = fld.conductor
    if fld.characteristic == 0:
        coeffs = draw(st.lists(st.fractions(-4, 4, max_denominator=3), min_size=1, max_size=n))
    else:
        coeffs = draw(st.lists(st.integers(0, 1), min_size=1, max_size=n))
    s = fld.zero()
    for k, c in enumerate(coeffs):
        s = s + fld.zeta(k) * fld(c)
    return s


@given(st.data())
@settings(max_examples=200, deadline=None)
def _inverse_property(data):
    fld = data.draw(st.sampled_from([F0, F2]))
    a = data.draw(nonzero_scalars(fld))
    if a:
        assert a * a.inverse() == fld.one()


def test_criterion_10_properties(request):
    with criterion(request, 10, "property suites: quandles, Yang-Baxter, YD compatibility, class equation, inverses", limit=60):
        groups = {
            "T": _quotient(t_presentation(), ("z^6", "x^6")),
            "Gamma_4": _quotient(gamma_presentation(4), ("a^4", "b^4")),
            "Gamma_3": _quotient(gamma_presentation(3), ("a^6", "b^6")),
            "Gamma_2": _quotient(gamma_presentation(2), ("a^2", "b^2")),
        }
        quandles = [catalogue_quandle(n) for n in CATALOGUE]
        for img in groups.values():
            quandles.append(conjugation(img, img.generators)[0])
            for g in range(img.order):
                assert len(img.class_indices(g)) * len(img.centralizer_indices(g)) == img.order
        assert all(_quandle_axioms(q) for q in quandles)

        modules = []
        spaces = []
        for case in ("t-case", "gamma4-case"):
            for char in (0, 2):
                _, v, w, _ = pair(case, char)
                rs = longest_word_roots(analyse_pair(v, w).cartan)
                mods = [v, w, dual(v), dual(w)]
                mods += compute_ladder(v, w).entries + compute_ladder(w, v).entries
                mods += root_modules(v, w, rs.word)
                modules += [m for m in mods if m.dim]
                spaces.append(braided_space(v, w))
        spaces += [braided_space(m) for m in modules]
        spaces.append(rack_space(F0, tetrahedral(), [[-F0.one()] * 4] * 4))
        assert all(m.yd_compatible() for m in modules)
        assert all(yang_baxter_holds(s) for s in spaces)
        _inverse_property()
