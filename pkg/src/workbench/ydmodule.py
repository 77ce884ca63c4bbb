"""Yetter-Drinfeld modules over a finite group image.

A module stores the degree (a group element index) of each basis vector and
one action matrix per presentation generator.  Matrices use the column
convention: column j holds the coordinates of ``s · e_j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .braided import BraidedSpace, braided_isomorphism, yang_baxter_holds
from .fpgroup import FiniteGroupImage, GroupElement
from .linalg import Echelon, add_scaled, identity, is_identity, mat_inverse, mat_mul
from .scalars import FieldSpec, Scalar, format_scalar


class InvalidCharacterError(ValueError):
    pass


class NotSimpleError(ValueError):
    pass


class ModuleValidationError(ValueError):
    pass


@dataclass
class CharacterSpec:
    """A one-dimensional character of the centralizer of ``base_point``,
    given by its values on elements that generate that centralizer."""

    base_point: GroupElement
    values: Mapping[GroupElement, Scalar]
    _table: dict = field(default=None, init=False, repr=False, compare=False)

    def validate(self) -> dict[int, Scalar]:
        """Extend the values to the whole centralizer; raise if impossible."""
        if self._table is not None:
            return self._table
        img = self.base_point.image
        base = self.base_point.index
        cent = set(img.centralizer_indices(base))
        gens = list(self.values.items())
        if not gens:
            raise InvalidCharacterError("no character values supplied")
        fld = gens[0][1].spec
        for g, v in gens:
            if g.index not in cent:
                raise InvalidCharacterError(f"{g.text()} does not centralize {self.base_point.text()}")
            if not v:
                raise InvalidCharacterError(f"character value at {g.text()} is zero")
        table = {0: fld.one()}
        frontier = [0]
        while frontier:
            nxt = []
            for a in frontier:
                for g, v in gens:
                    b = img.mul_index(a, g.index)
                    val = table[a] * v
                    old = table.get(b)
                    if old is None:
                        table[b] = val
                        nxt.append(b)
                    elif old != val:
                        lhs = img.presentation.word_text(img.word_of(a))
                        raise InvalidCharacterError(
                            f"values violate the relation ({lhs})*({g.text()}) = {img[b].text()}: "
                            f"{format_scalar(val)} != {format_scalar(old)}"
                        )
            frontier = nxt
        if set(table) != cent:
            raise InvalidCharacterError(
                f"the given elements generate a subgroup of order {len(table)} "
                f"but the centralizer of {self.base_point.text()} has order {len(cent)}"
            )
        self._table = table
        return table

    def value(self, g: GroupElement) -> Scalar:
        return self.validate()[g.index]

    def text_values(self) -> dict[str, str]:
        return {g.text(): format_scalar(v) for g, v in self.values.items()}


@dataclass(frozen=True)
class RepSpec2:
    """Two-dimensional representation data (alpha, beta) with beta^2 + beta + 1 = 0."""

    base_point: GroupElement
    alpha: Scalar
    beta: Scalar

    def __post_init__(self) -> None:
        if self.alpha.spec.characteristic == 2:
            raise ValueError("degree-2 representations need characteristic different from 2")
        if self.beta * self.beta + self.beta + 1:
            raise ValueError("beta must satisfy beta^2 + beta + 1 = 0")
        if not self.alpha:
            raise ValueError("alpha must be nonzero")


class YDModule:
    def __init__(
        self,
        image: FiniteGroupImage,
        field: FieldSpec,
        degrees: Sequence[int],
        action: Sequence[Sequence[Sequence[Scalar]]],
        labels: Sequence[str] | None = None,
        embedding: tuple | None = None,
        check: bool = True,
    ):
        self.image = image
        self.field = field
        self.degrees = tuple(degrees)
        self.dim = len(self.degrees)
        self.action = tuple(tuple(tuple(row) for row in m) for m in action)
        self.labels = tuple(labels) if labels is not None else tuple(f"e{i + 1}" for i in range(self.dim))
        # (factor modules, list of ambient sparse vectors) when built as a subspace
        self.embedding = embedding
        self._dense: dict[int, list] = {}
        self._sparse: dict[int, tuple] = {}
        if len(self.action) != image.presentation.rank:
            raise ModuleValidationError("one action matrix per generator is required")
        self._inverse_action = []
        for s, m in enumerate(self.action):
            try:
                self._inverse_action.append(mat_inverse([list(r) for r in m]) if self.dim else [])
            except ZeroDivisionError:
                raise ModuleValidationError(f"generator {image.presentation.generators[s]} acts singularly") from None
        if check:
            self.validate()

    # -- action ---------------------------------------------------------------
    def matrix(self, g: GroupElement | int) -> list[list[Scalar]]:
        idx = g.index if isinstance(g, GroupElement) else g
        m = self._dense.get(idx)
        if m is None:
            m = identity(self.field, self.dim)
            for x in self.image.word_of(idx):
                gen = self.action[x - 1] if x > 0 else self._inverse_action[-x - 1]
                m = mat_mul(m, [list(r) for r in gen])
            self._dense[idx] = m
        return m

    def columns(self, g: GroupElement | int) -> tuple:
        """Sparse columns of the action of g: tuple over j of ((i, coeff), ...)."""
        idx = g.index if isinstance(g, GroupElement) else g
        cols = self._sparse.get(idx)
        if cols is None:
            m = self.matrix(idx)
            cols = tuple(tuple((i, m[i][j]) for i in range(self.dim) if m[i][j]) for j in range(self.dim))
            self._sparse[idx] = cols
        return cols

    def act(self, g: GroupElement | int, vec: Sequence[Scalar]) -> list[Scalar]:
        cols = self.columns(g)
        out = [self.field.zero()] * self.dim
        for j, vj in enumerate(vec):
            if vj:
                for i, c in cols[j]:
                    out[i] = out[i] + c * vj
        return out

    # -- structure ------------------------------------------------------------
    def support(self) -> list[int]:
        return sorted(set(self.degrees))

    def component(self, x: int) -> list[int]:
        return [i for i, d in enumerate(self.degrees) if d == x]

    def degree_element(self, i: int) -> GroupElement:
        return self.image[self.degrees[i]]

    def validate(self) -> None:
        img = self.image
        for w in img.presentation.relators + img.extra_relators:
            m = identity(self.field, self.dim)
            for x in w:
                gen = self.action[x - 1] if x > 0 else self._inverse_action[-x - 1]
                m = mat_mul(m, [list(r) for r in gen])
            if not is_identity(m):
                raise ModuleValidationError(f"relator {img.presentation.word_text(w)} does not act trivially")
        if not self.yd_compatible():
            raise ModuleValidationError("action does not permute degree components by conjugation")

    def yd_compatible(self) -> bool:
        img = self.image
        for s in range(img.presentation.rank):
            s_idx = img.element((s + 1,)).index
            m = self.action[s]
            for j in range(self.dim):
                target = img.conj_index(s_idx, self.degrees[j])
                for i in range(self.dim):
                    if m[i][j] and self.degrees[i] != target:
                        return False
        return True

    def scalar_at(self, x: GroupElement | int, g: GroupElement | int) -> Scalar:
        """The scalar by which g acts on the one-dimensional component of degree x."""
        xi = x.index if isinstance(x, GroupElement) else x
        comp = self.component(xi)
        if len(comp) != 1:
            raise ValueError(f"degree component has dimension {len(comp)}, expected 1")
        k = comp[0]
        col = dict(self.columns(g)[k])
        if set(col) - {k}:
            raise ValueError("element does not stabilise the degree component")
        return col.get(k, self.field.zero())

    def rescaled(self, factors: Sequence[Scalar], labels: Sequence[str] | None = None) -> "YDModule":
        """Same module in the basis e'_k = factors[k] * e_k."""
        inv = [f.inverse() for f in factors]
        action = [
            [[inv[i] * m[i][j] * factors[j] for j in range(self.dim)] for i in range(self.dim)]
            for m in self.action
        ]
        emb = None
        if self.embedding is not None:
            factors_mods, vecs = self.embedding
            emb = (factors_mods, [{k: v * f for k, v in vec.items()} for vec, f in zip(vecs, factors)])
        return YDModule(self.image, self.field, self.degrees, action, labels or self.labels, emb, check=False)

    def braided_space(self) -> BraidedSpace:
        return braided_space(self)

    def dump(self) -> dict:
        pres = self.image.presentation
        return {
            "basis": [
                {"label": lab, "degree": self.image[d].text()} for lab, d in zip(self.labels, self.degrees)
            ],
            "action": {
                pres.generators[s]: [[format_scalar(x) for x in row] for row in m]
                for s, m in enumerate(self.action)
            },
        }

    def __repr__(self) -> str:
        return f"YDModule(dim={self.dim}, support={[self.image[d].text() for d in self.support()]})"


# -- constructions -------------------------------------------------------------

def _transversal_bfs(img: FiniteGroupImage, base: int) -> list[int]:
    reps = [0]
    seen = {base: 0}
    k = 0
    gens = [img.element((s + 1,)).index for s in range(img.presentation.rank)]
    while k < len(reps):
        t = reps[k]
        k += 1
        for s in gens:
            st = img.mul_index(s, t)
            d = img.conj_index(st, base)
            if d not in seen:
                seen[d] = len(reps)
                reps.append(st)
    return reps


def induce(
    img: FiniteGroupImage,
    spec: CharacterSpec,
    transversal: Sequence[GroupElement] | None = None,
    labels: Sequence[str] | None = None,
) -> YDModule:
    """M(g, chi): basis t_k ⊗ 1 over a transversal t_0 = 1, t_1, ... of the centralizer.

    The default transversal is breadth-first: t_k * s for generators s in
    presentation order, keeping the first representative of each new degree.
    """
    chi = spec.validate()
    fld = next(iter(spec.values.values())).spec
    base = spec.base_point.index
    if transversal is None:
        reps = _transversal_bfs(img, base)
    else:
        reps = [t.index for t in transversal]
    degrees = [img.conj_index(t, base) for t in reps]
    cls = img.class_indices(base)
    if sorted(degrees) != cls or degrees[0] != base:
        raise ValueError("transversal must start at the identity and meet each coset of the centralizer once")
    pos = {d: k for k, d in enumerate(degrees)}
    zero = fld.zero()
    action = []
    for s in range(img.presentation.rank):
        s_idx = img.element((s + 1,)).index
        m = [[zero] * len(reps) for _ in reps]
        for k, t in enumerate(reps):
            st = img.mul_index(s_idx, t)
            l = pos[img.conj_index(st, base)]
            c = img.mul_index(img.inv_index(reps[l]), st)
            m[l][k] = chi[c]
        action.append(m)
    if labels is None:
        labels = [f"{img[t].text()}·e" if t else "e" for t in reps]
    return YDModule(img, fld, degrees, action, labels)


def induce_deg2(img: FiniteGroupImage, spec: RepSpec2, rho_z: Scalar, generator_roles: Sequence[str] = ("x1", "x2", "z")) -> YDModule:
    """Two-dimensional module of central degree z on which x1, x2, z act by the
    explicit matrices built from (alpha, beta); ``generator_roles`` names the
    role of each presentation generator."""
    if not img.is_central(spec.base_point):
        raise ValueError("the base point of a degree-2 module must be central")
    a, b = spec.alpha, spec.beta
    fld = a.spec
    zero = fld.zero()
    mats = {
        "x1": [[a, -(a * a * b * b)], [zero, a * b]],
        "x2": [[zero, -(a * a * b)], [fld.one(), -(a * b * b)]],
        "z": [[rho_z, zero], [zero, rho_z]],
    }
    action = [mats[r] for r in generator_roles]
    base = spec.base_point.index
    return YDModule(img, fld, [base, base], action, ["u1", "u2"])


def rep2_matrices(spec: RepSpec2) -> dict[str, list[list[Scalar]]]:
    """The four matrices rho(x1)..rho(x4) of the degree-2 representation."""
    a, b = spec.alpha, spec.beta
    fld = a.spec
    zero, one = fld.zero(), fld.one()
    return {
        "x1": [[a, -(a * a * b * b)], [zero, a * b]],
        "x2": [[zero, -(a * a * b)], [one, -(a * b * b)]],
        "x3": [[a * b, zero], [b * b, a]],
        "x4": [[-(a * b * b), -(a * a)], [b, zero]],
    }


def dual(m: YDModule) -> YDModule:
    """Dual module: (g f)(v) = f(g^-1 v); dual basis vectors have inverse degrees."""
    img = m.image
    action = []
    for s in range(img.presentation.rank):
        inv = m._inverse_action[s]
        action.append([[inv[j][i] for j in range(m.dim)] for i in range(m.dim)])
    degrees = [img.inv_index(d) for d in m.degrees]
    return YDModule(img, m.field, degrees, action, [f"{lab}*" for lab in m.labels])


def direct_sum(*modules: YDModule) -> YDModule:
    img = modules[0].image
    fld = modules[0].field
    dim = sum(x.dim for x in modules)
    zero = fld.zero()
    action = []
    for s in range(img.presentation.rank):
        m = [[zero] * dim for _ in range(dim)]
        off = 0
        for mod in modules:
            for i in range(mod.dim):
                for j in range(mod.dim):
                    m[off + i][off + j] = mod.action[s][i][j]
            off += mod.dim
        action.append(m)
    degrees = [d for mod in modules for d in mod.degrees]
    labels = [lab for mod in modules for lab in mod.labels]
    return YDModule(img, fld, degrees, action, labels, check=False)


def tensor(m: YDModule, n: YDModule) -> YDModule:
    """M ⊗ N with diagonal action and product degrees; basis index i * dim N + j."""
    img = m.image
    degrees = [img.mul_index(a, b) for a in m.degrees for b in n.degrees]
    action = []
    for s in range(img.presentation.rank):
        a, b = m.action[s], n.action[s]
        action.append([
            [a[i1][j1] * b[i2][j2] for j1 in range(m.dim) for j2 in range(n.dim)]
            for i1 in range(m.dim) for i2 in range(n.dim)
        ])
    labels = [f"{x}⊗{y}" for x in m.labels for y in n.labels]
    return YDModule(img, m.field, degrees, action, labels, check=False)


def braiding(x: YDModule, y: YDModule) -> list[list[Scalar]]:
    """Matrix of c: X⊗Y -> Y⊗X, c(e_i ⊗ f_j) = (deg e_i)·f_j ⊗ e_i.

    Rows are indexed by k * dim X + i (Y⊗X), columns by i * dim Y + j (X⊗Y).
    """
    zero = x.field.zero()
    out = [[zero] * (x.dim * y.dim) for _ in range(x.dim * y.dim)]
    for i in range(x.dim):
        cols = y.columns(x.degrees[i])
        for j in range(y.dim):
            for k, c in cols[j]:
                out[k * x.dim + i][i * y.dim + j] = c
    return out


def braided_space(*modules: YDModule) -> BraidedSpace:
    """Braided vector space of the direct sum of the modules (one part per module)."""
    img = modules[0].image
    support: list[int] = []
    for mod in modules:
        for d in mod.degrees:
            if d not in support:
                support.append(d)
    support.sort()
    pos = {d: k for k, d in enumerate(support)}
    rack = tuple(tuple(pos[img.conj_index(a, b)] for b in support) for a in support)
    offsets = []
    off = 0
    for mod in modules:
        offsets.append(off)
        off += mod.dim
    ops = []
    for d in support:
        cols = []
        for mod, o in zip(modules, offsets):
            for j, col in enumerate(mod.columns(d)):
                cols.append(tuple((o + i, c) for i, c in col))
        ops.append(tuple(cols))
    labels = tuple(pos[d] for mod in modules for d in mod.degrees)
    parts = tuple(k for k, mod in enumerate(modules) for _ in range(mod.dim))
    names = tuple(img[d].text() for d in support)
    return BraidedSpace(modules[0].field, labels, rack, tuple(ops), parts, names)


def braided_isomorphic(m, n) -> list[list[Scalar]] | None:
    """Basis change (column j = image of e_j) of a braided isomorphism M -> N, or None.

    Accepts modules, braided spaces, or pairs of modules (matched summand by summand).
    """
    src = _as_space(m)
    dst = _as_space(n)
    found = braided_isomorphism(src, dst)
    return None if found is None else found["matrix"]


def _as_space(x) -> BraidedSpace:
    if isinstance(x, BraidedSpace):
        return x
    if isinstance(x, YDModule):
        return braided_space(x)
    return braided_space(*x)


def yang_baxter(m: YDModule) -> bool:
    return yang_baxter_holds(braided_space(m))


# -- simplicity ---------------------------------------------------------------

@dataclass
class SimplicityResult:
    simple: bool
    witness: str
    commutant_dim: int | None = None

    def __bool__(self) -> bool:
        return self.simple


def _algebra_span(gens: list, fld: FieldSpec, d: int) -> int:
    """Dimension of the unital algebra generated by d x d matrices."""
    def key(mat):
        return {(i, j): mat[i][j] for i in range(d) for j in range(d) if mat[i][j]}

    ident = identity(fld, d)
    ech = Echelon([key(ident)])
    queue = [ident]
    while queue and ech.rank < d * d:
        cur = queue.pop()
        for g in gens:
            prod = mat_mul(g, cur)
            if ech.add(key(prod)):
                queue.append(prod)
    return ech.rank


def commutant_dimension(m: YDModule) -> int:
    """Dimension of the degree-preserving linear maps commuting with every generator."""
    variables = {}
    for i in range(m.dim):
        for j in range(m.dim):
            if m.degrees[i] == m.degrees[j]:
                variables[(i, j)] = len(variables)
    ech = Echelon()
    for s in range(m.image.presentation.rank):
        a = m.action[s]
        # (F A - A F)[i][j] = sum_k F[i][k] A[k][j] - A[i][k] F[k][j]
        for i in range(m.dim):
            for j in range(m.dim):
                row: dict = {}
                for k in range(m.dim):
                    v = variables.get((i, k))
                    if v is not None and a[k][j]:
                        add_scaled(row, {(v,): a[k][j]})
                    v = variables.get((k, j))
                    if v is not None and a[i][k]:
                        add_scaled(row, {(v,): -a[i][k]})
                if row:
                    ech.add(row)
    return len(variables) - ech.rank


def is_absolutely_simple(m: YDModule) -> SimplicityResult:
    if m.dim == 0:
        return SimplicityResult(False, "module is zero")
    img = m.image
    sup = m.support()
    cls = img.class_indices(sup[0])
    if sup != cls:
        return SimplicityResult(False, f"support has {len(sup)} elements and is not a single conjugacy class")
    x = sup[0]
    comp = m.component(x)
    d = len(comp)
    # Burnside: the centralizer must span all endomorphisms of the component;
    # the span of a finite group is the algebra generated by its generators
    gens = []
    for c in img.generating_set(img.centralizer_indices(x)):
        mat = m.matrix(c)
        gens.append([[mat[comp[i]][comp[j]] for j in range(d)] for i in range(d)])
    span = _algebra_span(gens, m.field, d)
    cdim = commutant_dimension(m)
    if span != d * d:
        return SimplicityResult(
            False,
            f"centralizer of {img[x].text()} spans {span} of {d * d} endomorphisms of the degree component",
            cdim,
        )
    if cdim != 1:
        return SimplicityResult(False, f"commutant has dimension {cdim}", cdim)
    return SimplicityResult(True, "single class, absolutely irreducible component, trivial commutant", cdim)


def identify(m: YDModule) -> tuple[GroupElement, CharacterSpec]:
    """Base point (first support element) and the character of its centralizer on that component."""
    res = is_absolutely_simple(m)
    if not res:
        raise NotSimpleError(res.witness)
    img = m.image
    x = m.support()[0]
    if len(m.component(x)) != 1:
        raise NotSimpleError("identification is only available for one-dimensional degree components")
    values = {g: m.scalar_at(x, g) for g in img.centralizer(img[x])}
    spec = CharacterSpec(img[x], values)
    spec.validate()
    return img[x], spec


# -- subspaces of tensor powers ------------------------------------------------

class TensorSpace:
    """Tensor product of YD modules with basis tuples (i_1, ..., i_k)."""

    def __init__(self, factors: Sequence[YDModule]):
        self.factors = tuple(factors)
        self.image = factors[0].image
        self.field = factors[0].field

    def degree(self, key: tuple) -> int:
        img = self.image
        acc = 0
        for mod, i in zip(self.factors, key):
            acc = img.mul_index(acc, mod.degrees[i])
        return acc

    def act(self, g: int, vec: Mapping[tuple, Scalar]) -> dict:
        cols = [mod.columns(g) for mod in self.factors]
        out: dict = {}
        for key, val in vec.items():
            partial = [((), val)]
            for f, i in enumerate(key):
                partial = [(k + (r,), c * x) for k, c in partial for r, x in cols[f][i]]
            for k, c in partial:
                add_scaled(out, {k: c})
        return out


def submodule(space: TensorSpace, vectors: Iterable[Mapping[tuple, Scalar]], label: str = "b") -> YDModule:
    """Intrinsic YD module of the span of ``vectors`` (assumed G-stable and
    spanned by homogeneous components), with a homogeneous canonical basis.

    The embedding records the ambient basis vectors.
    """
    img = space.image
    comps: dict[int, Echelon] = {}
    for vec in vectors:
        parts: dict[int, dict] = {}
        for key, val in vec.items():
            parts.setdefault(space.degree(key), {})[key] = val
        for d, part in parts.items():
            comps.setdefault(d, Echelon()).add(part)
    degrees: list[int] = []
    basis: list[dict] = []
    for d in sorted(comps):
        for b in comps[d].basis():
            degrees.append(d)
            basis.append(b)
    index_of = {}
    k = 0
    for d in sorted(comps):
        index_of[d] = k
        k += comps[d].rank
    zero = space.field.zero()
    action = []
    for s in range(img.presentation.rank):
        s_idx = img.element((s + 1,)).index
        m = [[zero] * len(basis) for _ in basis]
        for j, (b, d) in enumerate(zip(basis, degrees)):
            target = img.conj_index(s_idx, d)
            image = space.act(s_idx, b)
            ech = comps.get(target)
            coords = ech.coordinates(image) if ech is not None else None
            if coords is None:
                raise ModuleValidationError("subspace is not stable under the group action")
            for off, c in enumerate(coords):
                if c:
                    m[index_of[target] + off][j] = c
        action.append(m)
    labels = [f"{label}{i + 1}" for i in range(len(basis))]
    return YDModule(img, space.field, degrees, action, labels, embedding=(space.factors, basis), check=False)
