"""Rank-2 Weyl groupoids: closure of a pair under reflections, and root
sequences from a reduced decomposition of the longest word."""

from __future__ import annotations

from dataclasses import dataclass, field

from .adjoint import CartanMatrix2, PairData, analyse_pair, reflect
from .braided import braided_isomorphism
from .ydmodule import YDModule, braided_space


class GroupoidUnboundedError(RuntimeError):
    pass


class NotFiniteTypeError(ValueError):
    pass


@dataclass
class WeylObject:
    pair: tuple
    data: PairData

    @property
    def cartan(self) -> CartanMatrix2:
        return self.data.cartan

    @property
    def fingerprint(self) -> tuple:
        """Dimensions, Cartan matrix and support sizes; equal for braided-isomorphic pairs."""
        v, w = self.pair
        return ((v.dim, w.dim), self.cartan.a, (len(v.support()), len(w.support())))


def pairs_isomorphic(p: tuple, q: tuple) -> bool:
    """Both entries braided-isomorphic through one common map of the joint support."""
    return braided_isomorphism(braided_space(*p), braided_space(*q)) is not None


@dataclass
class WeylGroupoid:
    objects: list = field(default_factory=list)
    edges: list = field(default_factory=list)    # (source, reflection index, target)
    finite: bool = True

    @property
    def initial(self) -> WeylObject:
        return self.objects[0]

    def is_standard(self) -> bool:
        """All Cartan matrices equal the initial one (objects are ordered pairs, so no index swap)."""
        a = self.initial.cartan
        return all(o.cartan == a for o in self.objects)

    def is_finite(self) -> bool:
        return self.finite

    def type_name(self) -> str:
        return self.initial.cartan.type_name() if self.is_standard() else "non-standard"

    def summary(self) -> dict:
        return {
            "objects": [
                {"dims": list(o.fingerprint[0]), "cartan": o.cartan.as_lists()} for o in self.objects
            ],
            "edges": [list(e) for e in self.edges],
            "standard": self.is_standard(),
            "finite": self.is_finite(),
            "type": self.type_name(),
        }


def build_groupoid(v: YDModule, w: YDModule, object_bound: int = 64, max_m: int = 8, strict: bool = True) -> WeylGroupoid:
    """Breadth-first closure under R_1 and R_2, merging braided-isomorphic pairs."""
    start = WeylObject((v, w), analyse_pair(v, w, max_m))
    gpd = WeylGroupoid([start])
    k = 0
    while k < len(gpd.objects):
        obj = gpd.objects[k]
        for i in (1, 2):
            new_pair = reflect(i, *obj.pair, max_m=max_m, pair=obj.data)
            target = None
            for n, other in enumerate(gpd.objects):
                cand_fp = (tuple(x.dim for x in new_pair),)
                if cand_fp[0] != other.fingerprint[0]:
                    continue
                if pairs_isomorphic(new_pair, other.pair):
                    target = n
                    break
            if target is None:
                if len(gpd.objects) >= object_bound:
                    gpd.finite = False
                    if strict:
                        raise GroupoidUnboundedError(f"more than {object_bound} objects")
                    return gpd
                gpd.objects.append(WeylObject(new_pair, analyse_pair(*new_pair, max_m)))
                target = len(gpd.objects) - 1
            gpd.edges.append((k, i, target))
        k += 1
    return gpd


def is_standard(gpd: WeylGroupoid) -> bool:
    return gpd.is_standard()


def is_finite(gpd: WeylGroupoid) -> bool:
    return gpd.is_finite()


# -- roots -----------------------------------------------------------------------

_ROOT_COUNT = {0: 2, 1: 3, 2: 4, 3: 6}


@dataclass(frozen=True)
class Root:
    coords: tuple   # (coefficient of alpha_1, coefficient of alpha_2)
    index: int      # reflection index i_k of the simple root it comes from

    def text(self) -> str:
        parts = []
        for c, name in zip(self.coords, ("a1", "a2")):
            if c:
                parts.append(name if c == 1 else f"{c}{name}")
        return "+".join(parts) or "0"


@dataclass
class RootSequence:
    word: tuple
    roots: list

    def coords(self) -> list[tuple]:
        return [r.coords for r in self.roots]


def _simple_reflection(cartan: CartanMatrix2, i: int, vec: tuple) -> tuple:
    # s_i(alpha_j) = alpha_j - a_ij alpha_i
    a = cartan.a
    c = list(vec)
    coeff = sum(a[i - 1][j] * vec[j] for j in range(2))
    c[i - 1] -= coeff
    return tuple(c)


def reduced_longest_word(cartan: CartanMatrix2) -> tuple:
    prod = cartan.a12 * cartan.a21
    if prod not in _ROOT_COUNT or cartan.a12 > 0 or cartan.a21 > 0:
        raise NotFiniteTypeError(f"Cartan matrix {cartan} is not of finite type")
    n = _ROOT_COUNT[prod]
    return tuple(2 if k % 2 == 0 else 1 for k in range(n))


def longest_word_roots(cartan: CartanMatrix2) -> RootSequence:
    """beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}) for the word s_2 s_1 s_2 ..."""
    word = reduced_longest_word(cartan)
    roots = []
    for k, ik in enumerate(word):
        vec = (1, 0) if ik == 1 else (0, 1)
        for i in reversed(word[:k]):
            vec = _simple_reflection(cartan, i, vec)
        if min(vec) < 0:
            raise NotFiniteTypeError("reflection produced a non-positive root")
        roots.append(Root(vec, ik))
    return RootSequence(word, roots)


def root_modules(v: YDModule, w: YDModule, word: tuple, max_m: int = 8) -> list[YDModule]:
    """Module attached to beta_k: entry i_k of R_{i_{k-1}} ... R_{i_1}(V, W)."""
    out = []
    pair = (v, w)
    for k, ik in enumerate(word):
        out.append(pair[ik - 1])
        if k + 1 < len(word):
            pair = reflect(ik, *pair, max_m=max_m)
    return out
