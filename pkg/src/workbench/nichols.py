"""Hilbert series of Nichols algebras: bivariate series arithmetic, a
quantum-symmetrizer rank oracle, and a library of rank-one factors."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .braided import BraidedSpace, apply_braid, braided_isomorphism, rack_space
from .linalg import Echelon
from .quandle import dihedral, isomorphisms, tetrahedral
from .scalars import FieldSpec, Scalar
from .weylgroupoid import RootSequence
from .ydmodule import YDModule, braided_space


class OracleCapacityError(RuntimeError):
    pass


class UnknownFactorError(LookupError):
    pass


# -- series ----------------------------------------------------------------------

class BivariateSeries:
    """Sparse polynomial in t1, t2 with integer coefficients; keys are (a, b) exponents."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, int] | None = None):
        self.terms = {k: int(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def one(cls) -> "BivariateSeries":
        return cls({(0, 0): 1})

    @classmethod
    def univariate(cls, coeffs: Sequence[int]) -> "BivariateSeries":
        """c_0 + c_1 t + ... stored in the first variable."""
        return cls({(k, 0): c for k, c in enumerate(coeffs)})

    def __mul__(self, other: "BivariateSeries") -> "BivariateSeries":
        out: dict = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return BivariateSeries(out)

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BivariateSeries(out)

    def __pow__(self, k: int) -> "BivariateSeries":
        out = BivariateSeries.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, BivariateSeries) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def coefficient(self, a: int, b: int = 0) -> int:
        return self.terms.get((a, b), 0)

    def substitute(self, root: tuple) -> "BivariateSeries":
        """Univariate series in t (first variable) with t -> t1^root[0] t2^root[1]."""
        out: dict = {}
        for (a, b), c in self.terms.items():
            if b:
                raise ValueError("substitute expects a univariate series")
            k = (a * root[0], a * root[1])
            out[k] = out.get(k, 0) + c
        return BivariateSeries(out)

    def univariate_coeffs(self) -> list[int]:
        if any(b for _, b in self.terms):
            raise ValueError("series is not univariate")
        top = max((a for a, _ in self.terms), default=-1)
        return [self.terms.get((a, 0), 0) for a in range(top + 1)]

    def total_degree_part(self, n: int) -> dict:
        return {k: c for k, c in self.terms.items() if k[0] + k[1] == n}

    def evaluate_at_one(self) -> int:
        return sum(self.terms.values())

    def sorted_terms(self) -> list[tuple]:
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][0]))

    def to_text(self) -> str:
        parts = []
        for (a, b), c in self.sorted_terms():
            mon = []
            if a:
                mon.append("t1" if a == 1 else f"t1^{a}")
            if b:
                mon.append("t2" if b == 1 else f"t2^{b}")
            parts.append("*".join([str(c)] + mon))
        return " + ".join(parts) if parts else "0"

    @classmethod
    def parse(cls, text: str) -> "BivariateSeries":
        out: dict = {}
        for term in text.replace("-", "+-").split("+"):
            term = term.strip()
            if not term:
                continue
            coeff, a, b = 1, 0, 0
            for factor in term.split("*"):
                factor = factor.strip()
                m = re.fullmatch(r"t([12])(?:\^(\d+))?", factor)
                if m:
                    e = int(m.group(2) or 1)
                    if m.group(1) == "1":
                        a += e
                    else:
                        b += e
                elif re.fullmatch(r"-?\d+", factor):
                    coeff *= int(factor)
                elif factor == "-":
                    coeff = -coeff
                else:
                    raise ValueError(f"cannot parse series term {term!r}")
            out[(a, b)] = out.get((a, b), 0) + coeff
        return cls(out)

    def to_json(self) -> dict:
        return {f"{a},{b}": c for (a, b), c in self.sorted_terms()}

    def __repr__(self) -> str:
        return f"BivariateSeries({self.to_text()})"


def q_integer(k: int) -> BivariateSeries:
    """(k)_t = 1 + t + ... + t^(k-1)."""
    return BivariateSeries.univariate([1] * k)


def one_plus_t_power(j: int) -> BivariateSeries:
    """1 + t^j."""
    return BivariateSeries({(0, 0): 1, (j, 0): 1})


def is_palindromic(series: BivariateSeries) -> bool:
    c = series.univariate_coeffs()
    return c == c[::-1]


def dimension(series: BivariateSeries) -> int:
    return series.evaluate_at_one()


def hilbert_from_roots(roots: RootSequence | Sequence[tuple], factors: Sequence[BivariateSeries]) -> BivariateSeries:
    coords = roots.coords() if isinstance(roots, RootSequence) else list(roots)
    if len(coords) != len(factors):
        raise ValueError("one factor per root is required")
    out = BivariateSeries.one()
    for beta, f in zip(coords, factors):
        out = out * f.substitute(tuple(beta))
    return out


# -- symmetrizer oracle -------------------------------------------------------------

DEFAULT_BUDGET = 200_000


def _as_space(m) -> BraidedSpace:
    if isinstance(m, BraidedSpace):
        return m
    if isinstance(m, YDModule):
        return braided_space(m)
    return braided_space(*m)


def _braid_words(n: int) -> list[tuple]:
    """For each permutation of S_n a reduced word, by breadth-first left multiplication.

    Entries are (parent index, generator) so that T_sigma = c_gen ∘ T_parent.
    """
    start = tuple(range(n))
    order = {start: 0}
    plan: list[tuple] = [(-1, -1)]
    frontier = [start]
    while frontier:
        nxt = []
        for perm in frontier:
            for i in range(n - 1):
                # left multiplication by s_i swaps the values i and i+1
                new = tuple(i + 1 if x == i else i if x == i + 1 else x for x in perm)
                if new not in order:
                    order[new] = len(plan)
                    plan.append((order[perm], i))
                    nxt.append(new)
        frontier = nxt
    return plan


def _hurwitz_blocks(space: BraidedSpace, n: int) -> dict:
    """Partition of the tensor basis of degree n by Hurwitz orbits of (label, part) sequences."""
    from itertools import product

    rack = space.rack
    by_seq: dict[tuple, list] = {}
    for key in product(range(space.dim), repeat=n):
        seq = tuple((space.labels[i], space.parts[i]) for i in key)
        by_seq.setdefault(seq, []).append(key)
    orbit_of: dict[tuple, int] = {}
    orbits: list[list[tuple]] = []
    for seq in by_seq:
        if seq in orbit_of:
            continue
        idx = len(orbits)
        orbit = [seq]
        orbit_of[seq] = idx
        k = 0
        while k < len(orbit):
            s = orbit[k]
            k += 1
            for i in range(n - 1):
                (x, p), (y, q) = s[i], s[i + 1]
                t = s[:i] + ((rack[x][y], q), (x, p)) + s[i + 2:]
                if t not in orbit_of:
                    orbit_of[t] = idx
                    orbit.append(t)
        orbits.append(orbit)
    return {idx: [key for seq in orbit for key in by_seq.get(seq, [])] for idx, orbit in enumerate(orbits)}


def _symmetrize(space: BraidedSpace, key: tuple, plan: list[tuple]) -> dict:
    one = space.field.one()
    lifts = [None] * len(plan)
    lifts[0] = {key: one}
    total: dict = dict(lifts[0])
    for idx in range(1, len(plan)):
        parent, gen = plan[idx]
        vec = apply_braid(space, lifts[parent], gen)
        lifts[idx] = vec
        for k, c in vec.items():
            cur = total.get(k)
            if cur is None:
                total[k] = c
            else:
                s = cur + c
                if s:
                    total[k] = s
                else:
                    del total[k]
    return total


def symmetrizer_ranks(m, n: int, budget: int = DEFAULT_BUDGET) -> dict[tuple, int]:
    """Rank of the degree-n quantum symmetrizer on each part-multidegree component.

    Keys are tuples counting tensor factors from each part (V, W, ...).
    """
    space = _as_space(m)
    if space.dim ** n > budget:
        raise OracleCapacityError(f"{space.dim}^{n} tensors exceed the oracle budget {budget}")
    nparts = max(space.parts) + 1 if space.parts else 1
    if n == 0:
        return {(0,) * nparts: 1}
    plan = _braid_words(n)
    out: dict[tuple, int] = {}
    for keys in _hurwitz_blocks(space, n).values():
        if not keys:
            continue
        ech = Echelon()
        for key in keys:
            ech.add(_symmetrize(space, key, plan))
        deg = [0] * nparts
        for i in keys[0]:
            deg[space.parts[i]] += 1
        out[tuple(deg)] = out.get(tuple(deg), 0) + ech.rank
    return out


def symmetrizer_rank(m, n: int, budget: int = DEFAULT_BUDGET) -> int:
    """Dimension of the degree-n component of the Nichols algebra of m."""
    return sum(symmetrizer_ranks(m, n, budget).values())


def graded_dims(m, up_to: int, budget: int = DEFAULT_BUDGET) -> list[int]:
    return [symmetrizer_rank(m, n, budget) for n in range(up_to + 1)]


@dataclass
class BidegreeCheck:
    bidegree: tuple
    expected: int
    rank: int

    @property
    def ok(self) -> bool:
        return self.expected == self.rank


def verify_bigraded(v, w, series: BivariateSeries, total_degree_cutoff: int = 4, budget: int = DEFAULT_BUDGET) -> list[BidegreeCheck]:
    """Compare series coefficients with symmetrizer ranks on (V⊕W)^{⊗n}, n <= cutoff."""
    space = braided_space(v, w) if isinstance(v, YDModule) else _as_space((v, w))
    out = []
    for n in range(total_degree_cutoff + 1):
        ranks = symmetrizer_ranks(space, n, budget)
        for a in range(n + 1):
            bideg = (a, n - a)
            out.append(BidegreeCheck(bideg, series.coefficient(*bideg), ranks.get(bideg, 0)))
    return out


# -- rank-one factor library -----------------------------------------------------------

@dataclass
class FactorEntry:
    name: str
    matches: Callable[[BraidedSpace], bool]
    series: Callable[[FieldSpec, BraidedSpace], BivariateSeries]
    verify_degree: int = 4
    example: Callable[[FieldSpec], BraidedSpace] | None = None


def _component_scalar(space: BraidedSpace, x: int, idx: int) -> Scalar | None:
    col = space.ops[x][idx]
    if len(col) == 1 and col[0][0] == idx:
        return col[0][1]
    if not col:
        return space.field.zero()
    return None


def _one_point_match(space: BraidedSpace) -> bool:
    return space.dim == 1


def _one_point_series(fld: FieldSpec, space: BraidedSpace) -> BivariateSeries:
    q = _component_scalar(space, space.labels[0], 0)
    if q == 1:
        if fld.characteristic == 0:
            raise UnknownFactorError("self-braiding 1 in characteristic 0 gives an infinite Nichols algebra")
        return q_integer(fld.characteristic)
    order = q.multiplicative_order()
    if order is None:
        raise UnknownFactorError("self-braiding is not a root of unity")
    return q_integer(order)


def _diagonal_data(space: BraidedSpace) -> list[list[Scalar]] | None:
    """Braiding matrix when every basis vector has its own label and all operators are diagonal."""
    if len(set(space.labels)) != space.dim:
        return None
    q = []
    for a in range(space.dim):
        row = []
        for b in range(space.dim):
            s = _component_scalar(space, space.labels[a], b)
            if s is None:
                return None
            row.append(s)
        q.append(row)
    return q


def _a2_minus_one_match(space: BraidedSpace) -> bool:
    if space.dim != 2:
        return False
    q = _diagonal_data(space)
    return q is not None and q[0][0] == -1 and q[1][1] == -1 and q[0][1] * q[1][0] == -1


def _a2_minus_one_series(fld: FieldSpec, space: BraidedSpace) -> BivariateSeries:
    if fld.characteristic == 2:
        return one_plus_t_power(1) ** 2
    return one_plus_t_power(1) ** 2 * one_plus_t_power(2)


def _tetrahedral_example(fld: FieldSpec) -> BraidedSpace:
    q = tetrahedral()
    return rack_space(fld, q, [[-fld.one()] * 4 for _ in range(4)])


def _tetrahedral_match(space: BraidedSpace) -> bool:
    if space.dim != 4:
        return False
    return braided_isomorphism(space, _tetrahedral_example(space.field)) is not None


def _tetrahedral_series(fld: FieldSpec, space: BraidedSpace) -> BivariateSeries:
    if fld.characteristic == 2:
        return q_integer(2) ** 2 * q_integer(3) ** 2
    return q_integer(2) ** 2 * q_integer(3) * q_integer(6)


def _op_product(space: BraidedSpace, word: Sequence[tuple], idx: int) -> dict:
    """Apply op_{x_1}^{e_1} ... op_{x_k}^{e_k} (rightmost first) to e_idx; word is [(label, ±1)]."""
    one = space.field.one()
    vec = {idx: one}
    inverses: dict[int, list] = {}
    for x, e in reversed(list(word)):
        cols = space.ops[x]
        if e < 0:
            inv = inverses.get(x)
            if inv is None:
                from .linalg import mat_inverse

                inv = mat_inverse(space.matrix(x))
                inverses[x] = inv
            new: dict = {}
            for j, c in vec.items():
                for i in range(space.dim):
                    if inv[i][j]:
                        new[i] = new.get(i, space.field.zero()) + inv[i][j] * c
            vec = {k: v for k, v in new.items() if v}
        else:
            new = {}
            for j, c in vec.items():
                for i, d in cols[j]:
                    new[i] = new.get(i, space.field.zero()) + d * c
            vec = {k: v for k, v in new.items() if v}
    return vec


def _dihedral_pair_match(space: BraidedSpace) -> bool:
    """Four one-dimensional components over the dihedral quandle of order 4,
    self-braidings -1, and for a, b in the two orbits with nu = b a b^-1 a^-1:
    (nu b^2 on e_a) * (nu a^2 on e_b) = 1."""
    if space.dim != 4 or len(set(space.labels)) != 4:
        return False
    phi = next(isomorphisms(dihedral(4), _rack_quandle(space)), None)
    if phi is None:
        return False
    label_to_idx = {space.labels[i]: i for i in range(4)}
    a, b = phi[0], phi[1]
    ea, eb = label_to_idx[a], label_to_idx[b]
    for x, e in ((a, ea), (b, eb)):
        if _component_scalar(space, x, e) != -1:
            return False
    nu = [(b, 1), (a, 1), (b, -1), (a, -1)]
    va = _op_product(space, nu + [(b, 1), (b, 1)], ea)
    vb = _op_product(space, nu + [(a, 1), (a, 1)], eb)
    if set(va) != {ea} or set(vb) != {eb}:
        return False
    return va[ea] * vb[eb] == 1


def _dihedral_pair_series(fld: FieldSpec, space: BraidedSpace) -> BivariateSeries:
    return one_plus_t_power(1) ** 4 * one_plus_t_power(2) ** 2


def _rack_quandle(space: BraidedSpace):
    from .quandle import FiniteQuandle

    return FiniteQuandle(space.rack, check=False)


def _a2_example(fld: FieldSpec) -> BraidedSpace:
    from .braided import diagonal_space

    i = fld.zeta(fld.conductor // 4) if fld.conductor % 4 == 0 else fld.one()
    return diagonal_space(fld, [[-fld.one(), i], [i, -fld.one()]])


class FactorLibrary:
    """Ordered match rules from braided spaces to univariate Hilbert series."""

    def __init__(self, entries: Iterable[FactorEntry] | None = None):
        self.entries = list(entries) if entries is not None else default_entries()

    def lookup(self, m) -> tuple[str, BivariateSeries]:
        space = _as_space(m)
        for entry in self.entries:
            if entry.matches(space):
                return entry.name, entry.series(space.field, space)
        raise UnknownFactorError(f"no library entry matches a braided space of dimension {space.dim}")

    def self_check(self, m, degree: int | None = None) -> list[tuple[int, int, int]]:
        """(degree, series coefficient, oracle rank) for degrees up to the entry's verification degree."""
        space = _as_space(m)
        name, series = self.lookup(space)
        entry = next(e for e in self.entries if e.name == name)
        top = entry.verify_degree if degree is None else degree
        coeffs = series.univariate_coeffs()
        out = []
        for n in range(top + 1):
            expected = coeffs[n] if n < len(coeffs) else 0
            out.append((n, expected, symmetrizer_rank(space, n)))
        return out


def default_entries() -> list[FactorEntry]:
    return [
        FactorEntry("one-point", _one_point_match, _one_point_series, 6),
        FactorEntry("diagonal A2 at -1", _a2_minus_one_match, _a2_minus_one_series, 4, _a2_example),
        FactorEntry("tetrahedral, constant -1", _tetrahedral_match, _tetrahedral_series, 4, _tetrahedral_example),
        FactorEntry("dihedral-4 pair", _dihedral_pair_match, _dihedral_pair_series, 4),
    ]
