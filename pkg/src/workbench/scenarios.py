"""End-to-end case studies: the T case, the Gamma_4 case, the exclusion of
degree-2 representations, and the quandle classification.

Every check records the mathematical claim it tests (``claim``), whether it
passed, and a witness string.  A failing check never stops the scenario.
"""

from __future__ import annotations

import json
from itertools import combinations
from dataclasses import dataclass, field
from typing import Callable

from .adjoint import (
    AdjointLadder,
    analyse_pair,
    compute_ladder,
    reflect,
)
from .braided import yang_baxter_holds
from .fpgroup import (
    FiniteGroupImage,
    GroupElement,
    gamma_presentation,
    hom_check,
    t_presentation,
    todd_coxeter,
)
from .nichols import (
    BivariateSeries,
    FactorLibrary,
    _diagonal_data,
    dimension,
    hilbert_from_roots,
    one_plus_t_power,
    q_integer,
    verify_bigraded,
)
from .quandle import (
    FiniteQuandle,
    amalgamated_sum,
    catalogue_quandle,
    conjugation,
    dihedral,
    disjoint_union,
    enveloping_presentation,
    is_isomorphic,
    tetrahedral,
    trivial,
    CATALOGUE,
    _cycle_string,
)
from .scalars import FieldSpec, Scalar, format_scalar, parse_scalar, solve_unity_constraints
from .weylgroupoid import build_groupoid, longest_word_roots, root_modules
from .ydmodule import (
    CharacterSpec,
    InvalidCharacterError,
    RepSpec2,
    YDModule,
    braided_isomorphic,
    braided_space,
    dual,
    identify,
    induce,
    induce_deg2,
    is_absolutely_simple,
)

CASES = ("t-case", "gamma4-case", "deg2-exclusion", "classification")

PARAMETERS = {
    "t-case": ("sigma_x1", "epsilon", "sigma_z", "rho_x1", "rho_z"),
    "gamma4-case": ("rho_h", "sigma_g", "rho_eps", "rho_g2", "sigma_eps2", "sigma_epsinv_h2"),
    "deg2-exclusion": ("alpha", "beta", "sigma_z", "rho_z", "epsilon"),
    "classification": (),
}

DEFAULT_RELATORS = {
    "t-case": ("z^6", "x^6"),
    "gamma4-case": ("a^4", "b^4"),
    "deg2-exclusion": ("z^12", "x^12"),
    "classification": (),
}


class ConfigError(ValueError):
    pass


@dataclass
class ScenarioConfig:
    case: str
    characteristic: int = 0
    conductor: int | None = None
    parameters: dict = field(default_factory=dict)     # name -> scalar text
    relators: tuple | None = None
    ladder_max_m: int = 5
    groupoid_bound: int = 64
    oracle_degree: int = 4

    def __post_init__(self) -> None:
        if self.case not in CASES:
            raise ConfigError(f"unknown case {self.case!r}; expected one of {', '.join(CASES)}")
        if self.characteristic not in (0, 2):
            raise ConfigError("characteristic must be 0 or 2")
        unknown = set(self.parameters) - set(PARAMETERS[self.case])
        if unknown:
            raise ConfigError(f"parameters {sorted(unknown)} are not used by {self.case}")
        if self.case == "deg2-exclusion" and self.characteristic == 2:
            raise ConfigError("degree-2 representations require characteristic different from 2")
        if self.ladder_max_m < 1 or self.groupoid_bound < 1 or self.oracle_degree < 0:
            raise ConfigError("cutoffs must be positive")

    def scalar_field(self) -> FieldSpec:
        if self.conductor is not None:
            return FieldSpec(self.characteristic, self.conductor)
        return FieldSpec(0, 12) if self.characteristic == 0 else FieldSpec(2, 3)

    def quotient_relators(self) -> tuple:
        return tuple(self.relators) if self.relators is not None else DEFAULT_RELATORS[self.case]

    def echo(self) -> dict:
        return {
            "case": self.case,
            "characteristic": self.characteristic,
            "field": str(self.scalar_field()),
            "parameters": dict(self.parameters),
            "relators": list(self.quotient_relators()),
            "ladder_max_m": self.ladder_max_m,
            "groupoid_bound": self.groupoid_bound,
            "oracle_degree": self.oracle_degree,
        }


_INT_KEYS = {"characteristic", "conductor", "ladder_max_m", "groupoid_bound", "oracle_degree"}


def parse_config(text: str, **overrides) -> ScenarioConfig:
    """``key = value`` lines with ``#`` comments.

    ``relators`` takes a comma-separated list of words; every other unknown
    key is read as a named parameter in scalar syntax.
    """
    values: dict = {}
    params: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        key, _, value = (s.strip() for s in line.partition("="))
        if key == "char":
            key = "characteristic"
        if key in _INT_KEYS:
            try:
                values[key] = int(value)
            except ValueError:
                raise ConfigError(f"line {lineno}: {key} must be an integer") from None
        elif key == "case":
            values["case"] = value
        elif key == "relators":
            values["relators"] = tuple(w.strip() for w in value.split(",") if w.strip())
        else:
            params[key] = value
    for k, v in overrides.items():
        if v is not None:
            values[k] = v
    if "case" not in values:
        raise ConfigError("missing 'case'")
    return ScenarioConfig(parameters=params, **values)


# -- reports ---------------------------------------------------------------------------

@dataclass
class Check:
    name: str
    claim: str
    passed: bool
    witness: str

    def to_json(self) -> dict:
        return {"name": self.name, "claim": self.claim, "passed": self.passed, "witness": self.witness}


class Report:
    def __init__(self, cfg: ScenarioConfig):
        self.cfg = cfg
        self.data: dict = {"scenario": cfg.echo()}
        self.checks: list[Check] = []

    def check(self, name: str, claim: str, fn: Callable[[], object]) -> bool:
        """Run fn; it returns bool or (bool, witness).  Exceptions count as failures."""
        try:
            res = fn()
            if isinstance(res, tuple):
                passed, witness = bool(res[0]), str(res[1])
            else:
                passed, witness = bool(res), ""
        except Exception as exc:  # a failing check must not abort the scenario
            passed, witness = False, f"{type(exc).__name__}: {exc}"
        self.checks.append(Check(name, claim, passed, witness))
        return passed

    def expect_equal(self, name: str, claim: str, actual_fn: Callable[[], object], expected) -> bool:
        def run():
            actual = actual_fn()
            return actual == expected, f"got {_show(actual)}, expected {_show(expected)}"

        return self.check(name, claim, run)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def to_json(self) -> dict:
        out = dict(self.data)
        out["checks"] = [c.to_json() for c in self.checks]
        fail = self.first_failure()
        out["first_failure"] = fail.name if fail else None
        out["passed"] = self.passed
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False) + "\n"

    def markdown(self) -> str:
        d = self.data
        lines = [f"# Scenario {self.cfg.case}", ""]
        lines.append(f"- characteristic: {self.cfg.characteristic} ({self.cfg.scalar_field()})")
        if "quotient_order" in d:
            lines.append(f"- quotient order: {d['quotient_order']}")
        if "parameters" in d:
            lines.append("- parameters: " + ", ".join(f"{k} = {v}" for k, v in d["parameters"].items()))
        if "ladder_dims" in d:
            lines.append(f"- ladder dims: {d['ladder_dims']}")
        if "cartan" in d:
            lines.append(f"- Cartan matrix: {d['cartan']}")
        if "groupoid" in d:
            g = d["groupoid"]
            lines.append(f"- groupoid: {len(g['objects'])} objects, standard={g['standard']}, finite={g['finite']}, type {g['type']}")
        if "roots" in d:
            lines.append("- roots: " + ", ".join(r["root"] for r in d["roots"]))
        if "hilbert" in d:
            lines.append(f"- Hilbert series dimension: {d['hilbert']['dimension']}")
        lines += ["", "| check | claim | result | witness |", "|---|---|---|---|"]
        for c in self.checks:
            lines.append(f"| {c.name} | {c.claim} | {'pass' if c.passed else 'FAIL'} | {c.witness} |")
        return "\n".join(lines) + "\n"


def _show(x) -> str:
    if isinstance(x, Scalar):
        return format_scalar(x)
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(_show(v) for v in x) + "]"
    if isinstance(x, BivariateSeries):
        return x.to_text()
    return str(x)


# -- shared helpers ---------------------------------------------------------------------

def _quotient(pres, relators) -> FiniteGroupImage:
    return todd_coxeter(pres, [pres.parse_word(w) for w in relators])


def _resolve(cfg: ScenarioConfig, fixed_defaults: dict, unknowns: list, constraints: list, validator) -> tuple[dict, dict]:
    """Parameters from the config, completed by the first validated solution.

    Configs may deliberately violate the finiteness conditions; constraints
    the given values make unsatisfiable are dropped (largest subsets first)
    and listed under ``dropped``.
    """
    fld = cfg.scalar_field()
    given = {k: parse_scalar(v, fld) for k, v in cfg.parameters.items()}
    env = {k: parse_scalar(v, fld) for k, v in fixed_defaults.items()}
    env.update(given)
    missing = [u for u in unknowns if u not in env]
    source = {k: ("config" if k in given else "default") for k in env}
    if not missing:
        return env, source
    for size in range(len(constraints), -1, -1):
        for subset in combinations(constraints, size):
            for sol in solve_unity_constraints(fld, list(subset), fixed=env, unknowns=missing):
                trial = dict(env, **sol)
                try:
                    validator(trial)
                except InvalidCharacterError:
                    continue
                env.update(sol)
                source.update({k: "solver" for k in sol})
                dropped = [c for c in constraints if c not in subset]
                if dropped:
                    source["dropped"] = dropped
                return env, source
    raise ConfigError(f"no valid assignment of {missing} exists for the given values; supply all parameters explicitly")


def _ladder_fragment(lad: AdjointLadder) -> list[dict]:
    img = lad.v.image
    out = []
    for m, x in enumerate(lad.entries, 1):
        item = {"m": m, "dim": x.dim, "support": [img[d].text() for d in x.support()]}
        if x.dim:
            res = is_absolutely_simple(x)
            item["absolutely_simple"] = res.simple
            if res.simple and len(x.component(x.support()[0])) == 1:
                base, spec = identify(x)
                item["identified"] = {"base_point": base.text(), "character": spec.text_values()}
        out.append(item)
    return out


def _scalar_map(mapping: dict) -> dict:
    return {k: format_scalar(v) for k, v in mapping.items()}


def _groupoid_checks(rep: Report, v: YDModule, w: YDModule, cfg: ScenarioConfig, expected_type: str, expected_cartan):
    state: dict = {}

    def build():
        gpd = build_groupoid(v, w, cfg.groupoid_bound, cfg.ladder_max_m)
        state["gpd"] = gpd
        rep.data["groupoid"] = gpd.summary()
        return gpd.is_standard() and gpd.is_finite(), f"{len(gpd.objects)} objects, type {gpd.type_name()}"

    rep.check("groupoid standard and finite", f"W(V,W) is finite and standard with Cartan matrix {expected_cartan}", build)
    rep.expect_equal("groupoid type", f"Cartan type {expected_type}", lambda: state["gpd"].type_name(), expected_type)

    def involution():
        start = analyse_pair(v, w, cfg.ladder_max_m)
        fp0 = ((v.dim, w.dim), start.cartan.a)
        notes = []
        ok = True
        for i in (1, 2):
            a, b = reflect(i, v, w, cfg.ladder_max_m, pair=start)
            c, d = reflect(i, a, b, cfg.ladder_max_m)
            back = analyse_pair(c, d, cfg.ladder_max_m)
            fp = ((c.dim, d.dim), back.cartan.a)
            iso = braided_isomorphic((c, d), (v, w)) is not None
            ok &= fp == fp0 and iso
            notes.append(f"R{i}R{i}: dims {fp[0]}, cartan {fp[1]}, braided-isomorphic {iso}")
        return ok, "; ".join(notes)

    rep.check("reflections are involutive", "R_i R_i (V,W) has the fingerprint of (V,W)", involution)
    return state


def _hilbert_block(rep: Report, cfg: ScenarioConfig, v: YDModule, w: YDModule, expected_series: BivariateSeries, expected_dim: int,
                   expected_roots: list, root_iso: dict | None = None):
    lib = FactorLibrary()
    state: dict = {}

    def roots():
        cart = analyse_pair(v, w, cfg.ladder_max_m).cartan
        rs = longest_word_roots(cart)
        state["rs"] = rs
        rep.data["roots"] = [{"root": r.text(), "coords": list(r.coords), "from_simple": r.index} for r in rs.roots]
        return [r.coords for r in rs.roots]

    rep.expect_equal("root sequence", "positive roots from the reduced word s2 s1 s2 ...", roots, expected_roots)

    def modules():
        mods = root_modules(v, w, state["rs"].word, cfg.ladder_max_m)
        state["mods"] = mods
        return True, ", ".join(f"{r.text()}: dim {m.dim}" for r, m in zip(state["rs"].roots, mods))

    rep.check("root modules", "module attached to each root via iterated reflections", modules)

    if root_iso is not None:
        def isos():
            notes, ok = [], True
            for r, m in zip(state["rs"].roots, state["mods"]):
                target_name = root_iso[r.coords]
                target = v if target_name == "V" else w
                iso = braided_isomorphic(m, target) is not None
                ok &= iso
                notes.append(f"{r.text()} ~ {target_name}: {iso}")
            return ok, "; ".join(notes)

        rep.check("root modules braided-isomorphic to V or W", "M_beta2,4,6 ~ V and M_beta1,3,5 ~ W as braided vector spaces", isos)

    def factors():
        facs, rows = [], []
        for r, m in zip(state["rs"].roots, state["mods"]):
            name, s = lib.lookup(m)
            facs.append(s)
            rows.append({"root": r.text(), "factor": name, "series": s.to_text()})
        state["factors"] = facs
        state["factor_rows"] = rows
        return True, "; ".join(f"{row['root']}: {row['factor']}" for row in rows)

    rep.check("rank-one factors identified", "each root module matches a library factor", factors)

    def series():
        h = hilbert_from_roots(state["rs"], state["factors"])
        state["series"] = h
        rep.data["hilbert"] = {
            "series": h.to_text(),
            "terms": h.to_json(),
            "factors": state["factor_rows"],
            "dimension": dimension(h),
        }
        return h == expected_series, f"{len(h.terms)} terms"

    rep.check("Hilbert series", "product of factors equals the closed form for this characteristic", series)
    rep.expect_equal("Nichols algebra dimension", f"dim B(V+W) = {expected_dim}", lambda: dimension(state["series"]), expected_dim)

    def self_checks():
        notes, ok = [], True
        seen = set()
        for r, m in zip(state["rs"].roots, state["mods"]):
            name, _ = lib.lookup(m)
            key = (name, m.dim, tuple(sorted(m.degrees)))
            if key in seen:
                continue
            seen.add(key)
            rows = lib.self_check(m, min(cfg.oracle_degree, 4))
            bad = [x for x in rows if x[1] != x[2]]
            ok &= not bad
            notes.append(f"{r.text()} ({name}): " + ",".join(str(x[2]) for x in rows) + (" MISMATCH" if bad else ""))
        return ok, "; ".join(notes)

    rep.check("factor library against oracle", "library factors agree with symmetrizer ranks in low degree", self_checks)

    def oracle():
        table = verify_bigraded(v, w, state["series"], cfg.oracle_degree)
        rep.data["bigraded"] = [
            {"bidegree": list(c.bidegree), "series": c.expected, "rank": c.rank, "ok": c.ok} for c in table
        ]
        bad = [c for c in table if not c.ok]
        return not bad, f"{len(table)} bidegrees up to total degree {cfg.oracle_degree}" + (
            f", mismatches at {[c.bidegree for c in bad]}" if bad else ""
        )

    rep.check("bigraded oracle", "series coefficients equal quantum-symmetrizer ranks", oracle)
    return state


# -- T case ---------------------------------------------------------------------------

def t_hilbert_display(characteristic: int) -> BivariateSeries:
    """Closed form of the Hilbert series in the T case."""
    v_roots = [(1, 0), (1, 3), (2, 3)]
    w_roots = [(0, 1), (1, 1), (1, 2)]
    if characteristic == 2:
        vf = q_integer(3)
        wf = q_integer(2) ** 2 * q_integer(3) ** 2
    else:
        vf = q_integer(6)
        wf = q_integer(2) ** 2 * q_integer(3) * q_integer(6)
    out = BivariateSeries.one()
    for r in v_roots:
        out = out * vf.substitute(r)
    for r in w_roots:
        out = out * wf.substitute(r)
    return out


class TCase:
    """Group data of a T quotient: x1..x4, z and the module constructors."""

    def __init__(self, img: FiniteGroupImage):
        self.img = img
        self.x1 = img.element("x")
        self.x2 = img.element("y")
        self.z = img.element("z")
        self.x3 = self.x2 * self.x1 * self.x2.inverse()
        self.x4 = self.x1 * self.x2 * self.x1.inverse()
        self.xs = [self.x1, self.x2, self.x3, self.x4]

    def sigma(self, sigma_x1: Scalar, epsilon: Scalar, sigma_z: Scalar) -> CharacterSpec:
        return CharacterSpec(self.x1, {self.x1: sigma_x1, self.x2 * self.x3: epsilon, self.z: sigma_z})

    def rho(self, rho_x1: Scalar, rho_z: Scalar) -> CharacterSpec:
        return CharacterSpec(self.z, {self.x1: rho_x1, self.x2: rho_x1, self.z: rho_z})

    def module_w(self, spec: CharacterSpec) -> YDModule:
        """Basis w1, w2 = s^-1 x4 w1, w3 = s^-1 x2 w1, w4 = s^-1 x3 w1 with s = sigma(x1)."""
        img = self.img
        m = induce(img, spec, [img.identity, self.x4, self.x2, self.x3], labels=["w1", "w2", "w3", "w4"])
        s_inv = spec.values[self.x1].inverse()
        one = s_inv * spec.values[self.x1]
        return m.rescaled([one, s_inv, s_inv, s_inv])

    def module_v(self, spec: CharacterSpec) -> YDModule:
        return induce(self.img, spec, labels=["v"])

    def quandle_index(self, a: GroupElement, b: GroupElement) -> int:
        """k with a b a^-1 = x_k, for a, b among x1..x4."""
        return self.xs.index(a.conj(b))


def _t_params(cfg: ScenarioConfig, tc: TCase) -> tuple[dict, dict]:
    def validator(env):
        tc.sigma(env["sigma_x1"], env["epsilon"], env["sigma_z"]).validate()
        tc.rho(env["rho_x1"], env["rho_z"]).validate()

    return _resolve(
        cfg,
        {"sigma_x1": "-1", "epsilon": "1"},
        ["rho_x1", "sigma_z", "rho_z"],
        ["(rho_x1*sigma_z)^2 - rho_x1*sigma_z + 1 = 0", "rho_x1*rho_z*sigma_z = 1"],
        validator,
    )


def run_t_case(cfg: ScenarioConfig) -> Report:
    rep = Report(cfg)
    fld = cfg.scalar_field()
    img = _quotient(t_presentation(), cfg.quotient_relators())
    tc = TCase(img)
    x1, x2, x3, x4, z = tc.x1, tc.x2, tc.x3, tc.x4, tc.z
    rep.data["quotient_order"] = img.order
    params, source = _t_params(cfg, tc)
    rep.data["parameters"] = _scalar_map(params)
    rep.data["parameter_source"] = source
    sx1, eps, sz, rx1, rz = (params[k] for k in ("sigma_x1", "epsilon", "sigma_z", "rho_x1", "rho_z"))

    # group structure
    rep.check("non-abelian quotient", "x1, x2, x3, x4 are pairwise different and form one class",
              lambda: (len({g.index for g in tc.xs}) == 4 and sorted(g.index for g in tc.xs) == img.class_indices(x1.index),
                       f"|x1^G| = {len(img.class_indices(x1.index))}"))
    rep.check("centralizer of x1", "G^x1 = <x1, x2x3, z> of index 4",
              lambda: (set(img.subgroup_indices([x1.index, (x2 * x3).index, z.index])) == set(img.centralizer_indices(x1.index))
                       and 4 * len(img.centralizer_indices(x1.index)) == img.order,
                       f"|G^x1| = {len(img.centralizer_indices(x1.index))}"))
    rep.check("central products", "x2 x1 x4 = x1 x2 x3 and x1 x2 x3, x1^3 are central",
              lambda: x2 * x1 * x4 == x1 * x2 * x3 and img.is_central(x1 * x2 * x3) and img.is_central(x1 ** 3))

    w_spec = tc.sigma(sx1, eps, sz)
    v_spec = tc.rho(rx1, rz)
    w = tc.module_w(w_spec)
    v = tc.module_v(v_spec)
    rep.data["modules"] = {"V": v.dump(), "W": w.dump()}

    def w_table():
        s, e = sx1, eps
        q = [
            [s, s, s, s],
            [s, s, s ** 3 / e, e / s],
            [s, e / s, s, s ** 3 / e],
            [s, s ** 3 / e, e / s, s],
        ]
        bad = []
        for i, xi in enumerate(tc.xs):
            mat = w.matrix(xi)
            for j, xj in enumerate(tc.xs):
                k = tc.quandle_index(xi, xj)
                col = [mat[r][j] for r in range(4)]
                expect = [q[i][j] if r == k else fld.zero() for r in range(4)]
                if col != expect:
                    bad.append(f"x{i + 1} w{j + 1}")
        return not bad, "all 16 entries match" if not bad else f"mismatch at {bad}"

    rep.check("action on W", "x_i w_j = q_ij w_(i|>j) with the sigma(x1), epsilon table", w_table)
    rep.check("x2 w4", "x2 w4 = sigma(x1)^-1 epsilon w1",
              lambda: w.act(x2, [fld.zero(), fld.zero(), fld.zero(), fld.one()]) == [eps / sx1, fld.zero(), fld.zero(), fld.zero()])
    rep.check("epsilon squared", "epsilon^2 = 1 when sigma(x1) = -1", lambda: sx1 != -1 or eps * eps == 1)

    q = rx1 * sz
    conditions = {
        "(rho(x1)sigma(z))^2 - rho(x1)sigma(z) + 1 = 0": q * q - q + 1 == 0,
        "sigma(x1) = -1": sx1 == -1,
        "sigma(x2x3) = 1": eps == 1,
        "rho(x1 z) sigma(z) = 1": rx1 * rz * sz == 1,
    }
    rep.data["conditions"] = conditions

    rep.check("braiding is a YB solution", "c satisfies the braid equation on (V+W)^3",
              lambda: yang_baxter_holds(braided_space(v, w)))

    def phi1():
        from .adjoint import PhiMap

        phi = PhiMap(v, w)
        out = phi.apply(1, {(0, 0): fld.one()})
        expect = {(0, 0): 1 - q} if 1 - q else {}
        return out == expect, f"phi1(v w1) = {_show(out.get((0, 0), fld.zero()))} v w1"

    rep.check("phi_1(v w1)", "phi_1(v w1) = (1 - rho(x1)sigma(z)) v w1", phi1)

    state: dict = {}

    def ladders():
        state["vw"] = compute_ladder(v, w, cfg.ladder_max_m)
        state["wv"] = compute_ladder(w, v, cfg.ladder_max_m)
        rep.data["ladder_dims"] = {"VW": list(state["vw"].dims), "WV": list(state["wv"].dims)}
        rep.data["ladders"] = {"VW": _ladder_fragment(state["vw"]), "WV": _ladder_fragment(state["wv"])}
        return True, f"VW {state['vw'].dims}, WV {state['wv'].dims}"

    rep.check("ladders computed", "X_m = phi_m(V (x) X_(m-1))", ladders)
    rep.check("X_1^{V,W} nonzero", "X_1^{V,W} != 0 iff rho(x1)sigma(z) != 1",
              lambda: (state["vw"].dims[0] > 0, f"dim X_1^(V,W) = {state['vw'].dims[0]}, rho(x1)sigma(z) = {_show(q)}"))
    for m in (1, 2, 3):
        rep.check(f"X_{m}^{{W,V}} absolutely simple", f"X_{m}^{{W,V}} is absolutely simple",
                  lambda m=m: (lambda r: (r.simple, r.witness))(is_absolutely_simple(state["wv"].module(m))))
    rep.expect_equal("ladder V,W", "dims X_m^{V,W} = 4, 0", lambda: state["vw"].dims, (4, 0))
    rep.expect_equal("ladder W,V", "dims X_m^{W,V} = 4, 4, 1, 0", lambda: state["wv"].dims, (4, 4, 1, 0))
    rep.check("generator route agrees", "phi_m on V_g (x) X_(m-1) closed under G gives the same ladder",
              lambda: (compute_ladder(w, v, cfg.ladder_max_m, route="generators").dims == state["wv"].dims
                       and compute_ladder(v, w, cfg.ladder_max_m, route="generators").dims == state["vw"].dims))

    def x1_identity():
        x = state["vw"].module(1)
        base, spec = identify(x)
        xz = x1 * z
        got = (base == xz, spec.value(x1), spec.value(z), spec.value(xz))
        ok = got[0] and got[1] == -rx1 and got[2] == rz * sz and got[3] == -1
        return ok, f"base {base.text()}, sigma1(x1) = {_show(got[1])}, sigma1(z) = {_show(got[2])}, sigma1(x1 z) = {_show(got[3])}"

    rep.check("X_1^{V,W} identification", "X_1^{V,W} = M(x1 z, sigma1), sigma1(x1) = -rho(x1), sigma1(z) = rho(z)sigma(z), sigma1(x1 z) = -1", x1_identity)

    def phi2_vanish():
        from .adjoint import PhiMap

        phi = PhiMap(w, v)
        v1p = phi.apply(1, {(0, 0): fld.one()})
        out = phi.apply(2, {(0,) + k: c for k, c in v1p.items()})
        return not out and bool(v1p), f"v1' has {len(v1p)} terms, phi2(w1 v1') has {len(out)} terms"

    rep.check("phi_2(w1 v1')", "phi_2(w1 (x) v1') = 0", phi2_vanish)

    x23z = x2 * x3 * z
    rep.expect_equal("support of X_2^{W,V}", "supp X_2^{W,V} = (x2 x3 z)^G",
                     lambda: state["wv"].module(2).support(), img.class_indices(x23z.index))
    rep.expect_equal("rho_2(x1)", "rho2(x1) = -rho(x1)^2 sigma(z)",
                     lambda: state["wv"].module(2).scalar_at(x23z, x1), -(rx1 * rx1 * sz))
    x123z = x1 * x2 * x3 * z

    def rho3():
        x = state["wv"].module(3)
        a, b = x.scalar_at(x123z, x1), x.scalar_at(x123z, z)
        return a == rx1 * rx1 * sz and b == rz * sz ** 3, f"rho3(x1) = {_show(a)}, rho3(z) = {_show(b)}"

    rep.check("rho_3", "X_3^{W,V} = M(x1x2x3z, rho3), rho3(x1) = rho(x1)^2 sigma(z), rho3(z) = rho(z)sigma(z)^3", rho3)

    def cartan():
        c = analyse_pair(v, w, cfg.ladder_max_m).cartan
        rep.data["cartan"] = c.as_lists()
        return c.as_lists() == [[2, -1], [-3, 2]], f"got {c.as_lists()}"

    rep.check("Cartan matrix", "A = [[2,-1],[-3,2]]", cartan)

    def reflection1():
        a, b = reflect(1, v, w, cfg.ladder_max_m)
        base, spec = identify(b)
        val = spec.value(base)
        return base == x1 * z and val == -1, f"second entry M({base.text()}, sigma1), sigma1(x1 z) = {_show(val)}"

    rep.check("reflection R1", "R1(V,W) = (V*, X_1^{V,W}) with sigma1(x1 z) = -1", reflection1)

    def reflection2():
        a, b = reflect(2, v, w, cfg.ladder_max_m)
        return a.dim == 1 and b.support() == sorted(img.inv_index(d) for d in w.support()), f"dims {a.dim}, {b.dim}"

    rep.check("reflection R2", "R2(V,W) = (X_3^{W,V}, W*)", reflection2)

    rep.check("braided isomorphisms", "V ~ V* ~ X_3^{W,V} and W ~ W* as braided vector spaces",
              lambda: (braided_isomorphic(v, dual(v)) is not None and braided_isomorphic(v, state["wv"].module(3)) is not None
                       and braided_isomorphic(w, dual(w)) is not None))

    _groupoid_checks(rep, v, w, cfg, "G2", "[[2,-1],[-3,2]]")
    g2_roots = [(0, 1), (1, 3), (1, 2), (2, 3), (1, 1), (1, 0)]
    iso_map = {(0, 1): "W", (1, 2): "W", (1, 1): "W", (1, 3): "V", (2, 3): "V", (1, 0): "V"}
    expected_dim = 80621568 if cfg.characteristic != 2 else 1259712
    _hilbert_block(rep, cfg, v, w, t_hilbert_display(cfg.characteristic), expected_dim, g2_roots, iso_map)
    rep.check("finiteness conditions", "deg rho = 1 and the four scalar conditions hold",
              lambda: (all(conditions.values()), ", ".join(k for k, ok in conditions.items() if not ok) or "all hold"))
    return rep


# -- Gamma_4 case ------------------------------------------------------------------------

def gamma4_hilbert_display(characteristic: int) -> BivariateSeries:
    """(1+t2)^4 (1+t2^2)^2 (1+t1t2)^4 (1+t1^2t2^2)^2 q(t1t2^2) q(t1)."""
    four = one_plus_t_power(1) ** 4 * one_plus_t_power(2) ** 2
    if characteristic == 2:
        small = one_plus_t_power(1) ** 2
    else:
        small = one_plus_t_power(1) ** 2 * one_plus_t_power(2)
    return four.substitute((0, 1)) * four.substitute((1, 1)) * small.substitute((1, 2)) * small.substitute((1, 0))


class Gamma4Case:
    def __init__(self, img: FiniteGroupImage):
        self.img = img
        self.g = img.element("a")
        self.h = img.element("b")
        self.eps = img.element("v")

    def rho(self, rho_h, rho_eps, rho_g2) -> CharacterSpec:
        return CharacterSpec(self.h, {self.h: rho_h, self.eps: rho_eps, self.g * self.g: rho_g2})

    def sigma(self, sigma_g, sigma_eps2, sigma_epsinv_h2) -> CharacterSpec:
        e = self.eps
        return CharacterSpec(self.g, {self.g: sigma_g, e * e: sigma_eps2, e.inverse() * self.h * self.h: sigma_epsinv_h2})

    def module_v(self, spec) -> YDModule:
        return induce(self.img, spec, [self.img.identity, self.g], labels=["v", "gv"])

    def module_w(self, spec) -> YDModule:
        img = self.img
        return induce(img, spec, [img.identity, self.h, self.eps, self.eps * self.h], labels=["w", "hw", "ew", "ehw"])


def _g4_params(cfg: ScenarioConfig, gc: Gamma4Case) -> tuple[dict, dict]:
    def validator(env):
        gc.rho(env["rho_h"], env["rho_eps"], env["rho_g2"]).validate()
        gc.sigma(env["sigma_g"], env["sigma_eps2"], env["sigma_epsinv_h2"]).validate()

    return _resolve(
        cfg,
        {"rho_h": "-1", "sigma_g": "-1"},
        ["rho_eps", "sigma_epsinv_h2", "sigma_eps2", "rho_g2"],
        ["rho_eps^2 = -1", "rho_eps = rho_g2*sigma_epsinv_h2"],
        validator,
    )


def _action_table_check(m: YDModule, gens: dict, expected: dict, fld: FieldSpec):
    """expected[(gen name, column)] = (row, scalar)."""
    bad = []
    for (gname, j), (i, c) in expected.items():
        col = m.act(gens[gname], [fld.one() if k == j else fld.zero() for k in range(m.dim)])
        want = [c if k == i else fld.zero() for k in range(m.dim)]
        if col != want:
            bad.append(f"{gname}·{m.labels[j]}")
    return not bad, "all entries match" if not bad else f"mismatch at {bad}"


def run_gamma4_case(cfg: ScenarioConfig) -> Report:
    rep = Report(cfg)
    fld = cfg.scalar_field()
    img = _quotient(gamma_presentation(4), cfg.quotient_relators())
    gc = Gamma4Case(img)
    g, h, e = gc.g, gc.h, gc.eps
    rep.data["quotient_order"] = img.order
    params, source = _g4_params(cfg, gc)
    rep.data["parameters"] = _scalar_map(params)
    rep.data["parameter_source"] = source
    rh, sg, re_, rg2, se2, seh = (params[k] for k in ("rho_h", "sigma_g", "rho_eps", "rho_g2", "sigma_eps2", "sigma_epsinv_h2"))

    rep.check("quotient shape", "eps^2 != 1, |g^G| = 4, |h^G| = 2",
              lambda: (e * e != img.identity and len(img.class_indices(g.index)) == 4 and len(img.class_indices(h.index)) == 2,
                       f"|g^G| = {len(img.class_indices(g.index))}, |h^G| = {len(img.class_indices(h.index))}"))
    rep.check("centralizers", "G^h = <eps, h, g^2> and G^g = <eps^2, eps^-1 h^2, g>",
              lambda: set(img.subgroup_indices([e.index, h.index, (g * g).index])) == set(img.centralizer_indices(h.index))
              and set(img.subgroup_indices([(e * e).index, (e.inverse() * h * h).index, g.index])) == set(img.centralizer_indices(g.index)))
    rep.check("central elements", "eps^-1 h^2, h^4, g^2 are central",
              lambda: all(img.is_central(x) for x in (e.inverse() * h * h, h ** 4, g * g)))
    rep.check("homomorphism for R2", "a -> g^-1, b -> eps h g^2, v -> eps^-1 defines Gamma_4 -> G",
              lambda: hom_check(gamma_presentation(4), img, [g.inverse(), e * h * g * g, e.inverse()]))

    v = gc.module_v(gc.rho(rh, re_, rg2))
    w = gc.module_w(gc.sigma(sg, se2, seh))
    rep.data["modules"] = {"V": v.dump(), "W": w.dump()}
    gens = {"eps": e, "h": h, "g": g}
    one = fld.one()
    if rh == -1:
        rep.check("action on V", "table of eps, h, g on v, gv for rho(h) = -1", lambda: _action_table_check(v, gens, {
            ("eps", 0): (0, re_), ("eps", 1): (1, re_.inverse()),
            ("h", 0): (0, -one), ("h", 1): (1, -re_.inverse()),
            ("g", 0): (1, one), ("g", 1): (0, rg2),
        }, fld))
    if sg == -1:
        rep.check("action on W", "table of eps, h, g on w, hw, eps w, eps hw for sigma(g) = -1", lambda: _action_table_check(w, gens, {
            ("eps", 0): (2, one), ("eps", 1): (3, one), ("eps", 2): (0, se2), ("eps", 3): (1, se2),
            ("h", 0): (1, one), ("h", 1): (2, seh), ("h", 2): (3, one), ("h", 3): (0, se2 * seh),
            ("g", 0): (0, -one), ("g", 1): (3, -se2), ("g", 2): (2, -se2), ("g", 3): (1, -se2),
        }, fld))

    conditions = {
        "rho(h) = -1": rh == -1,
        "sigma(g) = -1": sg == -1,
        "rho(eps) = rho(g^2) sigma(eps^-1 h^2)": re_ == rg2 * seh,
        "rho(eps)^2 = -1": re_ * re_ == -1,
    }
    rep.data["conditions"] = conditions
    rep.check("braiding is a YB solution", "c satisfies the braid equation on (V+W)^3",
              lambda: yang_baxter_holds(braided_space(v, w)))

    state: dict = {}

    def ladders():
        state["vw"] = compute_ladder(v, w, cfg.ladder_max_m)
        state["wv"] = compute_ladder(w, v, cfg.ladder_max_m)
        rep.data["ladder_dims"] = {"VW": list(state["vw"].dims), "WV": list(state["wv"].dims)}
        rep.data["ladders"] = {"VW": _ladder_fragment(state["vw"]), "WV": _ladder_fragment(state["wv"])}
        return True, f"VW {state['vw'].dims}, WV {state['wv'].dims}"

    rep.check("ladders computed", "X_m = phi_m(V (x) X_(m-1))", ladders)
    rep.check("X_1^{V,W} absolutely simple", "X_1^{V,W} is absolutely simple",
              lambda: (lambda r: (r.simple, r.witness))(is_absolutely_simple(state["vw"].module(1))))
    rep.check("X_2^{W,V} absolutely simple", "X_2^{W,V} is absolutely simple iff rho(eps^2) = -1",
              lambda: (lambda r: (r.simple, r.witness))(is_absolutely_simple(state["wv"].module(2))))
    rep.expect_equal("ladder V,W", "dims X_m^{V,W} = 4, 0", lambda: state["vw"].dims, (4, 0))
    rep.expect_equal("ladder W,V", "dims X_m^{W,V} = 4, 2, 0", lambda: state["wv"].dims, (4, 2, 0))
    rep.check("generator route agrees", "phi_m on V_g (x) X_(m-1) closed under G gives the same ladder",
              lambda: (compute_ladder(w, v, cfg.ladder_max_m, route="generators").dims == state["wv"].dims
                       and compute_ladder(v, w, cfg.ladder_max_m, route="generators").dims == state["vw"].dims))
    ehg2 = e * h * g * g
    rep.expect_equal("support of X_2^{W,V}", "supp X_2^{W,V} = {eps h g^2, eps^2 h g^2}",
                     lambda: state["wv"].module(2).support(), sorted({ehg2.index, (e * ehg2).index}))

    def cartan():
        c = analyse_pair(v, w, cfg.ladder_max_m).cartan
        rep.data["cartan"] = c.as_lists()
        return c.as_lists() == [[2, -1], [-2, 2]], f"got {c.as_lists()}"

    rep.check("Cartan matrix", "A = [[2,-1],[-2,2]]", cartan)

    def reflection2():
        a, b = reflect(2, v, w, cfg.ladder_max_m)
        val = a.scalar_at(ehg2, ehg2)
        return val == -1, f"first entry supported on {[img[d].text() for d in a.support()]}, rho2(h2) = {_show(val)}"

    rep.check("reflection R2", "R2(V,W) first entry is M(eps h g^2, rho2) with rho2(h2) = -1", reflection2)

    def diagonal():
        qv = _diagonal_data(braided_space(v))
        qx = _diagonal_data(braided_space(state["wv"].module(2)))
        ei = re_.inverse()
        want_v = [[-one, re_], [re_, -one]]
        want_x = [[-one, ei], [ei, -one]]
        return qv == want_v and qx == want_x, f"V: {_show(qv)}, X_2^(W,V): {_show(qx)}"

    rep.check("diagonal sub-braidings", "V and (ad W)^2(V) have braiding matrices [[-1, rho(eps)],[rho(eps),-1]] and [[-1, rho(eps^-1)],[rho(eps^-1),-1]]", diagonal)

    _groupoid_checks(rep, v, w, cfg, "B2", "[[2,-1],[-2,2]]")
    b2_roots = [(0, 1), (1, 2), (1, 1), (1, 0)]
    expected_dim = 262144 if cfg.characteristic != 2 else 65536
    _hilbert_block(rep, cfg, v, w, gamma4_hilbert_display(cfg.characteristic), expected_dim, b2_roots)
    rep.check("finiteness conditions", "the four scalar conditions hold",
              lambda: (all(conditions.values()), ", ".join(k for k, ok in conditions.items() if not ok) or "all hold"))
    return rep


# -- degree-2 exclusion ---------------------------------------------------------------------

def run_deg2_exclusion(cfg: ScenarioConfig) -> Report:
    rep = Report(cfg)
    fld = cfg.scalar_field()
    img = _quotient(t_presentation(), cfg.quotient_relators())
    tc = TCase(img)
    x1, z = tc.x1, tc.z
    rep.data["quotient_order"] = img.order
    roots = fld.roots_of_unity()
    given = {k: parse_scalar(v, fld) for k, v in cfg.parameters.items()}
    rep.data["parameters"] = _scalar_map(given)

    def choices(name, pool):
        return [given[name]] if name in given else pool

    alphas = choices("alpha", roots)
    betas = choices("beta", [b for b in roots if b * b + b + 1 == 0])
    sigmas = choices("sigma_z", roots)
    rhos = choices("rho_z", roots)
    epsilons = choices("epsilon", [fld.one(), -fld.one()])
    stats = {"assignments": 0, "x1_agree": 0, "x1_simple": 0, "x2_cases": 0, "x2_agree": 0, "survivors": 0}
    disagreements: list[str] = []
    survivors: list[str] = []
    skipped: list[str] = []

    for eps in epsilons:
        for sz in sigmas:
            try:
                w = tc.module_w(tc.sigma(-fld.one(), eps, sz))
            except (InvalidCharacterError, ValueError) as exc:
                skipped.append(f"sigma_z={format_scalar(sz)}, epsilon={format_scalar(eps)}: {exc}")
                continue
            for a in alphas:
                for b in betas:
                    try:
                        v1 = induce_deg2(img, RepSpec2(z, a, b), fld.one())
                    except ValueError as exc:
                        skipped.append(f"alpha={format_scalar(a)}, beta={format_scalar(b)}: {exc}")
                        continue
                    stats["assignments"] += 1
                    x1mod = compute_ladder(v1, w, 1).entries[0]
                    simple = is_absolutely_simple(x1mod).simple
                    cond = (1 - sz * a) * (1 - sz * a * b) == 0
                    tag = f"alpha={format_scalar(a)}, beta={format_scalar(b)}, sigma_z={format_scalar(sz)}, epsilon={format_scalar(eps)}"
                    if simple == cond:
                        stats["x1_agree"] += 1
                    else:
                        disagreements.append("X1 " + tag)
                    if not simple:
                        continue
                    stats["x1_simple"] += 1
                    for rz in rhos:
                        try:
                            vr = induce_deg2(img, RepSpec2(z, a, b), rz)
                        except ValueError as exc:
                            skipped.append(f"{tag}, rho_z={format_scalar(rz)}: {exc}")
                            continue
                        lad = compute_ladder(vr, w, 2)
                        stats["x2_cases"] += 1
                        x2_zero = lad.dims[1] == 0
                        if x2_zero == (rz == -1):
                            stats["x2_agree"] += 1
                        else:
                            disagreements.append(f"X2 {tag}, rho_z={format_scalar(rz)}")
                        if x2_zero:
                            xz = x1 * z
                            s1 = lad.entries[0].scalar_at(xz, xz)
                            if s1 == -1:
                                stats["survivors"] += 1
                                survivors.append(f"{tag}, rho_z={format_scalar(rz)}")
    rep.data["enumeration"] = stats
    rep.data["skipped"] = skipped
    rep.check("enumeration ran", "at least one admissible degree-2 assignment", lambda: (stats["assignments"] > 0, str(stats)))
    rep.check("X_1 simplicity criterion", "X_1^{V,W} absolutely simple iff (1 - sigma(z)alpha)(1 - sigma(z)alpha beta) = 0",
              lambda: (stats["x1_agree"] == stats["assignments"], f"{stats['x1_agree']}/{stats['assignments']} agree"
                       + (f"; first disagreement {disagreements[0]}" if disagreements else "")))
    rep.check("X_2 vanishing criterion", "X_2^{V,W} = 0 iff rho(z) = -1 (when X_1 is simple)",
              lambda: (stats["x2_agree"] == stats["x2_cases"], f"{stats['x2_agree']}/{stats['x2_cases']} agree"))
    rep.check("no degree-2 survivor", "sigma1(x1 z) = -1 is never satisfied, so deg rho = 1",
              lambda: (stats["survivors"] == 0, f"{stats['survivors']} survivors" + (f": {survivors[:3]}" if survivors else "")))

    def deg2_identities():
        if not (alphas and betas):
            return False, "no parameters"
        a, b = alphas[0], betas[0]
        mats = {
            "x1": [[a, -(a * a * b * b)], [fld.zero(), a * b]],
            "x3": [[a * b, fld.zero()], [b * b, a]],
        }
        v1 = induce_deg2(img, RepSpec2(z, a, b), fld.one())
        m123 = v1.matrix(tc.x1 * tc.x2 * tc.x3)
        det = lambda m: m[0][0] * m[1][1] - m[0][1] * m[1][0]
        ok = m123 == [[-(a ** 3), fld.zero()], [fld.zero(), -(a ** 3)]]
        ok &= v1.matrix(tc.x3) == mats["x3"] and det(mats["x3"]) == a * a * b and det(v1.matrix(x1)) == det(v1.matrix(tc.x3))
        return ok, f"rho(x1x2x3) = {_show(m123[0][0])} id, det rho(x3) = {_show(det(mats['x3']))}"

    rep.check("degree-2 representation", "rho(x1x2x3) = -alpha^3 id, det rho(x3) = alpha^2 beta = det rho(x1)", deg2_identities)
    return rep


# -- classification ---------------------------------------------------------------------

CLASSIFICATION_GROUPS = {
    "Z_T^{4,1}": ("T", ("z^6", "x^6")),
    "Z_2^{2,2}": ("Gamma_2", ("a^2", "b^2")),
    "Z_3^{3,1}": ("Gamma_3", ("a^6", "b^6")),
    "Z_3^{3,2}": ("Gamma_3", ("a^6", "b^6")),
    "Z_4^{4,2}": ("Gamma_4", ("a^4", "b^4")),
}


def _group_presentation(name: str):
    if name == "T":
        return t_presentation()
    return gamma_presentation(int(name.split("_")[1]))


def find_class_pair(img: FiniteGroupImage, quandle: FiniteQuandle):
    """First pair of conjugacy classes (larger first) whose union is isomorphic
    to the quandle and generates the group; returns (quandle map, elements) or None."""
    sizes = sorted(len(o) for o in quandle.orbits())
    classes = img.conjugacy_classes()
    everything = set(range(img.order))
    for c1 in classes:
        for c2 in classes:
            if c1 == c2 or sorted([len(c1), len(c2)]) != sizes or len(c1) < len(c2):
                continue
            if len(c1) == len(c2) and c1[0] > c2[0]:
                continue
            q, els = conjugation(img, [img[c1[0]], img[c2[0]]])
            if set(img.subgroup_indices([x.index for x in els])) != everything:
                continue
            f = is_isomorphic(quandle, q)
            if f is not None:
                return f, els, q
    return None


def _split_amalgam(q: FiniteQuandle, first: int):
    """sigma, tau of a quandle whose elements 0..first-1 and first..n-1 are subquandles."""
    n = q.size
    sigma = [[q.table[y][first + k] - first for k in range(n - first)] for y in range(first)]
    tau = [[q.table[first + k][y] for y in range(first)] for k in range(n - first)]
    return sigma, tau


def _relabel(q: FiniteQuandle, order: list[int]) -> FiniteQuandle:
    pos = {e: k for k, e in enumerate(order)}
    return FiniteQuandle([[pos[q.table[a][b]] for b in order] for a in order], check=False)


def structural_description(name: str):
    """(description text, model quandle) for quandles built from standard pieces without amalgamation."""
    if name == "Z_T^{4,1}":
        return "tetrahedral + point", disjoint_union(tetrahedral(), trivial(1))
    if name == "Z_2^{2,2}":
        return "dihedral of order 4", dihedral(4)
    if name == "Z_3^{3,1}":
        return "dihedral of order 3 + point", disjoint_union(dihedral(3), trivial(1))
    raise KeyError(name)


def _amalgam_model(conj_q: FiniteQuandle, big: int, small: int, big_model: FiniteQuandle, small_model: FiniteQuandle, small_first: bool):
    """Relabel the conjugation quandle so each class carries the model table, then
    read off sigma and tau and rebuild as an amalgamated sum."""
    big_idx = list(range(big))
    small_idx = list(range(big, big + small))
    sub_big = FiniteQuandle([[conj_q.table[a][b] for b in big_idx] for a in big_idx], check=False)
    sub_small = FiniteQuandle([[conj_q.table[a][b] - big for b in small_idx] for a in small_idx], check=False)
    fb = is_isomorphic(big_model, sub_big)
    fs = is_isomorphic(small_model, sub_small)
    if fb is None or fs is None:
        return None
    order_big = [big_idx[fb[i]] for i in range(big)]
    order_small = [small_idx[fs[i]] for i in range(small)]
    if small_first:
        rel = _relabel(conj_q, order_small + order_big)
        sigma, tau = _split_amalgam(rel, small)
        return amalgamated_sum(small_model, big_model, sigma, tau), sigma, tau
    rel = _relabel(conj_q, order_big + order_small)
    sigma, tau = _split_amalgam(rel, big)
    return amalgamated_sum(big_model, small_model, sigma, tau), sigma, tau


def run_classification(cfg: ScenarioConfig) -> Report:
    rep = Report(cfg)
    rows = []
    for name in CATALOGUE:
        quandle = catalogue_quandle(name)
        group_name, relators = CLASSIFICATION_GROUPS[name]
        row: dict = {"quandle": name, "rows": list(CATALOGUE[name]), "enveloping_group": group_name}
        rows.append(row)
        state: dict = {}

        def build(name=name, quandle=quandle, group_name=group_name, relators=relators, row=row, state=state):
            img = _quotient(_group_presentation(group_name), relators)
            state["img"] = img
            row["quotient_order"] = img.order
            row["relators"] = list(relators)
            found = find_class_pair(img, quandle)
            if found is None:
                return False, "no generating pair of classes matches"
            f, els, q = found
            state.update(f=f, els=els, q=q)
            row["classes"] = sorted({els[0].text(), els[-1].text()})
            return True, f"classes of {els[0].text()} and {els[-1].text()} in a quotient of order {img.order}"

        rep.check(f"{name} support in {group_name}", f"{name} is a union of two classes generating a quotient of {group_name}", build)

        def structure(name=name, quandle=quandle, state=state, row=row):
            if name in ("Z_T^{4,1}", "Z_2^{2,2}", "Z_3^{3,1}"):
                desc, model = structural_description(name)
                f = is_isomorphic(quandle, model)
                row["structure"] = desc
                return f is not None, desc
            q = state["q"]
            if name == "Z_3^{3,2}":
                built = _amalgam_model(q, 3, 2, dihedral(3), trivial(2), small_first=False)
                desc = "amalgamated sum of the dihedral quandle of order 3 and trivial(2)"
            else:
                built = _amalgam_model(q, 4, 2, dihedral(4), trivial(2), small_first=True)
                desc = "amalgamated sum of trivial(2) and the dihedral quandle of order 4"
            if built is None:
                return False, "class subquandles do not match the models"
            model, sigma, tau = built
            row["structure"] = desc
            row["sigma"] = [_cycle_string(s) for s in sigma]
            row["tau"] = [_cycle_string(t) for t in tau]
            f = is_isomorphic(quandle, model)
            return f is not None, f"{desc}; sigma = {row['sigma']}, tau = {row['tau']}"

        rep.check(f"{name} structure", f"{name} matches its structural description", structure)

        def envelope(name=name, quandle=quandle, state=state, row=row):
            img, f, els = state["img"], state["f"], state["els"]
            images = [els[f[i]] for i in range(quandle.size)]
            pres = enveloping_presentation(quandle)
            hom = hom_check(pres, img, images)
            onto = set(img.subgroup_indices([x.index for x in images])) == set(range(img.order))
            extra = [(i + 1,) * images[i].order() for i in range(quandle.size)]
            env_order = todd_coxeter(pres, extra, max_cosets=200000).order
            row["enveloping_quotient_order"] = env_order
            return hom and onto and env_order == img.order, (
                f"hom {hom}, onto {onto}, enveloping quotient order {env_order} vs {img.order}"
            )

        rep.check(f"{name} enveloping group", f"Env({name}) maps onto the {row['enveloping_group']} quotient", envelope)

    rep.data["classification"] = rows
    rep.check("catalogue pairwise distinct", "the five quandles are pairwise non-isomorphic",
              lambda: all(is_isomorphic(catalogue_quandle(a), catalogue_quandle(b)) is None
                          for i, a in enumerate(CATALOGUE) for b in list(CATALOGUE)[i + 1:]))
    return rep


RUNNERS = {
    "t-case": run_t_case,
    "gamma4-case": run_gamma4_case,
    "deg2-exclusion": run_deg2_exclusion,
    "classification": run_classification,
}


def run_scenario(cfg: ScenarioConfig) -> Report:
    return RUNNERS[cfg.case](cfg)


def build_pair(cfg: ScenarioConfig) -> tuple[FiniteGroupImage, YDModule, YDModule, dict]:
    """The pair (V, W) of the t-case or gamma4-case with resolved parameters."""
    if cfg.case == "t-case":
        img = _quotient(t_presentation(), cfg.quotient_relators())
        tc = TCase(img)
        p, _ = _t_params(cfg, tc)
        v = tc.module_v(tc.rho(p["rho_x1"], p["rho_z"]))
        w = tc.module_w(tc.sigma(p["sigma_x1"], p["epsilon"], p["sigma_z"]))
        return img, v, w, p
    if cfg.case == "gamma4-case":
        img = _quotient(gamma_presentation(4), cfg.quotient_relators())
        gc = Gamma4Case(img)
        p, _ = _g4_params(cfg, gc)
        v = gc.module_v(gc.rho(p["rho_h"], p["rho_eps"], p["rho_g2"]))
        w = gc.module_w(gc.sigma(p["sigma_g"], p["sigma_eps2"], p["sigma_epsinv_h2"]))
        return img, v, w, p
    raise ConfigError(f"{cfg.case} has no fixed pair of modules")
