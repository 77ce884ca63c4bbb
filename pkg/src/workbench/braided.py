"""Braided vector spaces of rack type.

A :class:`BraidedSpace` has a basis e_0..e_{d-1}, a label l(i) for each basis
vector drawn from a finite rack, and one operator per label such that

    c(e_a ⊗ u) = (op_{l(a)} u) ⊗ e_a .

Yetter-Drinfeld modules over a group give such spaces with labels = degrees,
the rack = conjugation and op_x = action of x.  Diagonal braidings and racks
with a scalar cocycle are the other constructors used here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .linalg import Echelon, add_scaled, nullspace, rank
from .quandle import FiniteQuandle, isomorphisms
from .scalars import FieldSpec, Scalar

SparseColumns = tuple  # per basis index j: tuple of (i, Scalar) with op e_j = sum coeff * e_i


@dataclass(frozen=True)
class BraidedSpace:
    field: FieldSpec
    labels: tuple            # label index per basis vector
    rack: tuple              # rack[x][y] = x ▷ y on label indices
    ops: tuple               # ops[x] = SparseColumns of the operator attached to label x
    parts: tuple = None      # summand index per basis vector (V = 0, W = 1, ...)
    label_names: tuple = None

    def __post_init__(self) -> None:
        if self.parts is None:
            object.__setattr__(self, "parts", (0,) * len(self.labels))

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def n_labels(self) -> int:
        return len(self.rack)

    def braid_pair(self, a: int, b: int) -> tuple:
        """c(e_a ⊗ e_b) as a tuple of ((i, a), coeff)."""
        return tuple(((i, a), c) for i, c in self.ops[self.labels[a]][b])

    def part_dims(self) -> tuple:
        k = max(self.parts) + 1 if self.parts else 0
        return tuple(sum(1 for p in self.parts if p == j) for j in range(k))

    def matrix(self, label: int) -> list[list[Scalar]]:
        zero = self.field.zero()
        m = [[zero] * self.dim for _ in range(self.dim)]
        for j, col in enumerate(self.ops[label]):
            for i, c in col:
                m[i][j] = c
        return m


def apply_braid(space: BraidedSpace, vec: Mapping[tuple, Scalar], k: int) -> dict:
    """Apply c at tensor positions (k, k+1) to a sparse tensor."""
    out: dict = {}
    labels, ops = space.labels, space.ops
    for key, val in vec.items():
        a, b = key[k], key[k + 1]
        head, tail = key[:k], key[k + 2:]
        for i, c in ops[labels[a]][b]:
            nk = head + (i, a) + tail
            term = c * val
            cur = out.get(nk)
            if cur is None:
                out[nk] = term
            else:
                s = cur + term
                if s:
                    out[nk] = s
                else:
                    del out[nk]
    return {k_: v for k_, v in out.items() if v}


def yang_baxter_holds(space: BraidedSpace) -> bool:
    """Check (c⊗id)(id⊗c)(c⊗id) = (id⊗c)(c⊗id)(id⊗c) on every basis triple."""
    one = space.field.one()
    d = space.dim
    for a in range(d):
        for b in range(d):
            for c in range(d):
                v = {(a, b, c): one}
                left = apply_braid(space, apply_braid(space, apply_braid(space, v, 0), 1), 0)
                right = apply_braid(space, apply_braid(space, apply_braid(space, v, 1), 0), 1)
                if left != right:
                    return False
    return True


def label_quandle(space: BraidedSpace) -> FiniteQuandle:
    return FiniteQuandle(space.rack, check=False)


def diagonal_space(field: FieldSpec, q: Sequence[Sequence[Scalar]]) -> BraidedSpace:
    """c(e_i ⊗ e_j) = q[i][j] e_j ⊗ e_i, one label per basis vector."""
    n = len(q)
    rack = tuple(tuple(range(n)) for _ in range(n))
    ops = tuple(tuple(((j, q[i][j]),) for j in range(n)) for i in range(n))
    return BraidedSpace(field, tuple(range(n)), rack, ops)


def rack_space(field: FieldSpec, quandle: FiniteQuandle, cocycle: Sequence[Sequence[Scalar]]) -> BraidedSpace:
    """c(e_i ⊗ e_j) = cocycle[i][j] e_{i▷j} ⊗ e_i."""
    n = quandle.size
    ops = tuple(tuple(((quandle.table[i][j], cocycle[i][j]),) for j in range(n)) for i in range(n))
    return BraidedSpace(field, tuple(range(n)), quandle.table, ops)


def _signature(space: BraidedSpace, label: int) -> tuple:
    parts = max(space.parts) + 1 if space.parts else 1
    return tuple(sum(1 for i, l in enumerate(space.labels) if l == label and space.parts[i] == p) for p in range(parts))


def _label_maps(src: BraidedSpace, dst: BraidedSpace) -> Iterator[list[int]]:
    if src.n_labels != dst.n_labels:
        return
    sig_s = [_signature(src, l) for l in range(src.n_labels)]
    sig_d = [_signature(dst, l) for l in range(dst.n_labels)]
    yield from isomorphisms(label_quandle(src), label_quandle(dst), lambda a, b: sig_s[a] == sig_d[b])


def intertwiners(src: BraidedSpace, dst: BraidedSpace, phi: Sequence[int]) -> list[list[list[Scalar]]]:
    """Basis of the linear maps f with f ∘ op_x = op'_{phi(x)} ∘ f that send
    label-x basis vectors into the span of label-phi(x) vectors of the same part."""
    field = src.field
    variables: dict[tuple[int, int], int] = {}
    for j in range(src.dim):
        for i in range(dst.dim):
            if dst.labels[i] == phi[src.labels[j]] and dst.parts[i] == src.parts[j]:
                variables[(i, j)] = len(variables)
    nvar = len(variables)
    if nvar == 0:
        return []
    rows: list[dict[int, Scalar]] = []
    for x in range(src.n_labels):
        op_s = src.ops[x]
        op_d = dst.ops[phi[x]]
        for j in range(src.dim):
            eq: dict[int, dict[int, Scalar]] = {}
            # f(op_x e_j): sum_k a_k u_{m k}
            for k, a in op_s[j]:
                for m in range(dst.dim):
                    v = variables.get((m, k))
                    if v is not None:
                        add_scaled(eq.setdefault(m, {}), {v: a})
            # - op'(f(e_j)): sum_i u_{ij} b_{m i}
            for i in range(dst.dim):
                v = variables.get((i, j))
                if v is None:
                    continue
                for m, b in op_d[i]:
                    add_scaled(eq.setdefault(m, {}), {v: -b})
            rows.extend(r for r in eq.values() if r)
    zero = field.zero()
    dense = []
    ech = Echelon()
    for r in rows:
        if ech.add({(k,): c for k, c in r.items()}):
            pass
    for r in ech.basis():
        row = [zero] * nvar
        for (k,), c in r.items():
            row[k] = c
        dense.append(row)
    sols = nullspace(dense, nvar, field)
    out = []
    for s in sols:
        f = [[zero] * src.dim for _ in range(dst.dim)]
        for (i, j), v in variables.items():
            f[i][j] = s[v]
        out.append(f)
    return out


def braided_isomorphism(src: BraidedSpace, dst: BraidedSpace) -> dict | None:
    """First braided isomorphism src -> dst respecting labels and parts.

    Returns ``{"label_map": phi, "matrix": F}`` where column j of F is the
    image of e_j, or None when no such map exists.
    """
    if src.field != dst.field or src.dim != dst.dim or sorted(src.parts) != sorted(dst.parts):
        return None
    for phi in _label_maps(src, dst):
        basis = intertwiners(src, dst, phi)
        if not basis:
            continue
        candidates = list(basis)
        if len(basis) > 1:
            candidates.append(_combine(basis, [1] * len(basis)))
            candidates.append(_combine(basis, list(range(1, len(basis) + 1))))
            candidates.append(_combine(basis, [k * k + 1 for k in range(len(basis))]))
        for f in candidates:
            if rank(f) == src.dim:
                return {"label_map": list(phi), "matrix": f}
    return None


def _combine(mats, coeffs):
    out = [[x * coeffs[0] for x in row] for row in mats[0]]
    for m, c in zip(mats[1:], coeffs[1:]):
        out = [[x + y * c for x, y in zip(r1, r2)] for r1, r2 in zip(out, m)]
    return out
