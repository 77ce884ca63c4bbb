"""Adjoint ladders X_m ≅ (ad V)^m(W), Cartan matrices and rank-2 reflections.

Tensors in V^{⊗m}⊗W are sparse dicts keyed by index tuples (i_1, ..., i_m, j)
where the i's index the basis of V and j the basis of W.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .linalg import Echelon, add_scaled
from .ydmodule import (
    TensorSpace,
    YDModule,
    dual,
    is_absolutely_simple,
    submodule,
)


class LadderUnboundedError(RuntimeError):
    pass


class ReflectionUndefinedError(RuntimeError):
    pass


class PhiMap:
    """The maps φ_m : V ⊗ (V^{⊗(m-1)} ⊗ W) -> V^{⊗m} ⊗ W for a fixed pair.

    φ_m = id - c_{X,V} c_{V,X} + (id ⊗ φ_{m-1}) c_{1,2}, with φ_0 = 0.
    Values on basis tensors are memoised.
    """

    def __init__(self, v: YDModule, w: YDModule):
        self.v = v
        self.w = w
        self.image = v.image
        self._memo: dict[tuple, dict] = {}
        self._spaces: dict[int, TensorSpace] = {}

    def space(self, m: int) -> TensorSpace:
        """V^{⊗m} ⊗ W."""
        sp = self._spaces.get(m)
        if sp is None:
            sp = TensorSpace([self.v] * m + [self.w])
            self._spaces[m] = sp
        return sp

    def on_basis(self, key: tuple) -> dict:
        """φ_m(e_key) where m = len(key) - 1 >= 1."""
        out = self._memo.get(key)
        if out is not None:
            return out
        img = self.image
        m = len(key) - 1
        i, rest = key[0], key[1:]
        g = self.v.degrees[i]
        h = self.space(m - 1).degree(rest)
        out = {key: self.v.field.one()}
        # - c_{X,V} c_{V,X}: e_i ⊗ u -> (g h g^-1)·e_i ⊗ g·u
        moved = self.space(m - 1).act(g, {rest: self.v.field.one()})
        ghg = img.conj_index(g, h)
        for k, c in self.v.columns(ghg)[i]:
            for r, d in moved.items():
                add_scaled(out, {(k,) + r: -(c * d)})
        if m >= 2:
            # (id ⊗ φ_{m-1}) c_{1,2}: e_i ⊗ e_{i2} ⊗ u2 -> sum_k (g·e_{i2})_k e_k ⊗ φ_{m-1}(e_i ⊗ u2)
            i2, u2 = rest[0], rest[1:]
            inner = self.on_basis((i,) + u2)
            for k, c in self.v.columns(g)[i2]:
                for r, d in inner.items():
                    add_scaled(out, {(k,) + r: c * d})
        self._memo[key] = out
        return out

    def apply(self, m: int, vec: Mapping[tuple, object]) -> dict:
        """φ_m on a sparse vector of V ⊗ V^{⊗(m-1)} ⊗ W."""
        out: dict = {}
        for key, val in vec.items():
            if len(key) != m + 1:
                raise ValueError(f"expected tensors of length {m + 1}")
            add_scaled(out, self.on_basis(key), val)
        return out


def phi_apply(m: int, v: YDModule, w: YDModule, vec: Mapping[tuple, object]) -> dict:
    return PhiMap(v, w).apply(m, vec)


@dataclass
class AdjointLadder:
    v: YDModule
    w: YDModule
    entries: list = field(default_factory=list)   # YDModule X_m for m = 1, 2, ...; stops at the first zero
    terminated: bool = True

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(x.dim for x in self.entries)

    @property
    def top_index(self) -> int:
        """Largest m with X_m != 0 (0 when X_1 = 0)."""
        return sum(1 for x in self.entries if x.dim)

    def module(self, m: int) -> YDModule:
        if m == 0:
            return self.w
        return self.entries[m - 1]

    def top(self) -> YDModule:
        return self.module(self.top_index)


def _wrap(vec: dict, i: int) -> dict:
    return {(i,) + k: c for k, c in vec.items()}


def compute_ladder(v: YDModule, w: YDModule, max_m: int = 8, strict: bool = False, route: str = "full") -> AdjointLadder:
    """X_m = φ_m(V ⊗ X_{m-1}) for m = 1..max_m, stopping at the first zero.

    ``route="full"`` applies φ_m to every e_i ⊗ x over a basis of X_{m-1};
    ``route="generators"`` applies it only to V_g ⊗ X_{m-1} for the first
    support degree g of V and closes the result under the generators.
    With ``strict`` a nonzero X_{max_m} raises :class:`LadderUnboundedError`.
    """
    if max_m < 1:
        raise ValueError("max_m must be at least 1")
    if route not in ("full", "generators"):
        raise ValueError(f"unknown route {route!r}")
    phi = PhiMap(v, w)
    one = v.field.one()
    prev_basis = [{(j,): one} for j in range(w.dim)]
    ladder = AdjointLadder(v, w)
    if route == "full":
        v_indices = range(v.dim)
    else:
        g0 = v.support()[0]
        v_indices = v.component(g0)
    for m in range(1, max_m + 1):
        images = []
        for x in prev_basis:
            for i in v_indices:
                y = phi.apply(m, _wrap(x, i))
                if y:
                    images.append(y)
        if route == "generators":
            images = _close_under_generators(phi.space(m), images)
        xm = submodule(phi.space(m), images, label=f"x{m}_")
        ladder.entries.append(xm)
        if xm.dim == 0:
            return ladder
        prev_basis = xm.embedding[1]
    ladder.terminated = False
    if strict:
        raise LadderUnboundedError(f"X_{max_m} is still nonzero (dims {ladder.dims})")
    return ladder


def _close_under_generators(space: TensorSpace, vectors: list[dict]) -> list[dict]:
    img = space.image
    ech = Echelon()
    queue = [v for v in vectors if ech.add(v)]
    gens = [img.element((s + 1,)).index for s in range(img.presentation.rank)]
    out = list(queue)
    while queue:
        vec = queue.pop()
        for s in gens:
            y = space.act(s, vec)
            if ech.add(y):
                queue.append(y)
                out.append(y)
    return out


@dataclass(frozen=True)
class CartanMatrix2:
    a: tuple

    @property
    def a12(self) -> int:
        return self.a[0][1]

    @property
    def a21(self) -> int:
        return self.a[1][0]

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.a]

    def swapped(self) -> "CartanMatrix2":
        return CartanMatrix2(((2, self.a21), (self.a12, 2)))

    def type_name(self) -> str:
        prod = self.a12 * self.a21
        names = {0: "A1xA1", 1: "A2", 2: "B2", 3: "G2"}
        return names.get(prod, "infinite")

    def __str__(self) -> str:
        return str(self.as_lists())


@dataclass
class PairData:
    """Both ladders of a pair together with its Cartan matrix."""

    v: YDModule
    w: YDModule
    ladder_vw: AdjointLadder
    ladder_wv: AdjointLadder

    @property
    def cartan(self) -> CartanMatrix2:
        return CartanMatrix2(((2, -self.ladder_vw.top_index), (-self.ladder_wv.top_index, 2)))


def analyse_pair(v: YDModule, w: YDModule, max_m: int = 8) -> PairData:
    lvw = compute_ladder(v, w, max_m)
    lwv = compute_ladder(w, v, max_m)
    for lad, name in ((lvw, "(V,W)"), (lwv, "(W,V)")):
        if not lad.terminated:
            raise LadderUnboundedError(f"ladder {name} does not vanish within {max_m} steps (dims {lad.dims})")
    return PairData(v, w, lvw, lwv)


def cartan_matrix(v: YDModule, w: YDModule, max_m: int = 8) -> CartanMatrix2:
    """Off-diagonal entries are minus the last nonvanishing ladder index."""
    return analyse_pair(v, w, max_m).cartan


def reflect(i: int, v: YDModule, w: YDModule, max_m: int = 8, pair: PairData | None = None) -> tuple[YDModule, YDModule]:
    """R_1(V, W) = (V*, X_{-a12}^{V,W}) and R_2(V, W) = (X_{-a21}^{W,V}, W*)."""
    if i not in (1, 2):
        raise ValueError("reflection index must be 1 or 2")
    pair = pair or analyse_pair(v, w, max_m)
    if i == 1:
        top = pair.ladder_vw.top()
        if pair.ladder_vw.top_index and not is_absolutely_simple(top):
            raise ReflectionUndefinedError(f"X_{pair.ladder_vw.top_index}^(V,W) is not absolutely simple")
        return dual(v), top
    top = pair.ladder_wv.top()
    if pair.ladder_wv.top_index and not is_absolutely_simple(top):
        raise ReflectionUndefinedError(f"X_{pair.ladder_wv.top_index}^(W,V) is not absolutely simple")
    return top, dual(w)
