"""Finitely presented groups realised through Todd-Coxeter coset enumeration.

Words are tuples of signed 1-based generator indices: ``+k`` is generator k,
``-k`` its inverse.  Enumerating the cosets of the trivial subgroup gives the
regular permutation representation of a finite quotient, which is all the
rest of the package needs: elements are coset numbers, products are table
lookups.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Word = tuple


class BadWordError(ValueError):
    pass


class EnumerationOverflowError(RuntimeError):
    """Coset enumeration exceeded its coset limit."""


def free_reduce(word: Iterable[int]) -> Word:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def invert_word(word: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(word))


def word_power(word: Sequence[int], k: int) -> Word:
    if k < 0:
        return tuple(invert_word(word)) * (-k)
    return tuple(word) * k


_WORD_TOKEN = re.compile(r"\s*(\(|\)|\^\s*-?\d+|[A-Za-z_][A-Za-z0-9_]*|\S)")


@dataclass(frozen=True)
class Presentation:
    generators: tuple
    relators: tuple = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(tuple(r) for r in self.relators))
        if not self.generators:
            raise ValueError("a presentation needs at least one generator")
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generator names must be distinct")
        n = len(self.generators)
        for r in self.relators:
            for x in r:
                if not isinstance(x, int) or x == 0 or abs(x) > n:
                    raise BadWordError(f"relator {r} uses an undeclared generator")

    @property
    def rank(self) -> int:
        return len(self.generators)

    def check_word(self, word: Sequence[int]) -> Word:
        n = len(self.generators)
        for x in word:
            if not isinstance(x, int) or x == 0 or abs(x) > n:
                raise BadWordError(f"word {tuple(word)} uses an undeclared generator")
        return tuple(word)

    # -- text ----------------------------------------------------------------
    def _name_index(self, name: str) -> Word | None:
        if name in self.generators:
            return (self.generators.index(name) + 1,)
        for i, g in enumerate(self.generators):
            if g.upper() == name and g != name and name not in self.generators:
                return (-(i + 1),)
        # a run of single-letter generators such as "baBAV"
        out = []
        for ch in name:
            if ch in self.generators:
                out.append(self.generators.index(ch) + 1)
            elif ch.lower() in self.generators and ch.lower() != ch:
                out.append(-(self.generators.index(ch.lower()) + 1))
            else:
                return None
        return tuple(out)

    def parse_word(self, text: str) -> Word:
        """Parse e.g. ``"b a B A V"``, ``"x^6"``, ``"(a b)^2"``, ``"baBAV"``; ``1`` is the empty word."""
        tokens = [t.replace(" ", "") for t in _WORD_TOKEN.findall(text)]
        pos = 0

        def seq() -> list[int]:
            nonlocal pos
            out: list[int] = []
            while pos < len(tokens) and tokens[pos] != ")":
                tok = tokens[pos]
                pos += 1
                if tok == "(":
                    item = seq()
                    if pos >= len(tokens) or tokens[pos] != ")":
                        raise BadWordError(f"unbalanced parentheses in {text!r}")
                    pos += 1
                elif tok in ("1", "e") and tok not in self.generators:
                    item = []
                elif tok.startswith("^"):
                    raise BadWordError(f"exponent without base in {text!r}")
                else:
                    found = self._name_index(tok)
                    if found is None:
                        raise BadWordError(f"unknown generator {tok!r} in {text!r}")
                    item = list(found)
                if pos < len(tokens) and tokens[pos].startswith("^"):
                    k = int(tokens[pos][1:])
                    pos += 1
                    item = list(word_power(item, k))
                out.extend(item)
            return out

        word = seq()
        if pos != len(tokens):
            raise BadWordError(f"unbalanced parentheses in {text!r}")
        return free_reduce(word)

    def word_text(self, word: Sequence[int]) -> str:
        if not word:
            return "1"
        parts = []
        for x in word:
            name = self.generators[abs(x) - 1]
            parts.append(name if x > 0 else (name.upper() if name.upper() != name else name + "^-1"))
        return " ".join(parts)

    def with_relators(self, extra: Iterable[Sequence[int]]) -> "Presentation":
        return Presentation(self.generators, self.relators + tuple(tuple(w) for w in extra))

    @classmethod
    def parse(cls, text: str) -> "Presentation":
        """Read the ``gens: a b v`` / ``rels: b a B A V, ...`` format."""
        gens: list[str] = []
        rel_texts: list[str] = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            key, _, rest = line.partition(":")
            key = key.strip().lower()
            if key == "gens":
                gens.extend(rest.split())
            elif key == "rels":
                rel_texts.extend(r for r in rest.split(",") if r.strip())
            else:
                raise ValueError(f"unrecognised presentation line {line!r}")
        pres = cls(tuple(gens))
        return cls(tuple(gens), tuple(pres.parse_word(r) for r in rel_texts))

    def to_text(self) -> str:
        rels = ", ".join(self.word_text(r) for r in self.relators)
        return f"gens: {' '.join(self.generators)}\nrels: {rels}\n"


class _Full(Exception):
    pass


class CosetTable:
    """HLT coset enumeration with lookahead over a fixed subgroup."""

    def __init__(self, pres: Presentation, relators: Sequence[Word], subgroup: Sequence[Word], max_cosets: int):
        if max_cosets < 1:
            raise ValueError("max_cosets must be at least 1")
        self.ncol = 2 * pres.rank
        self.rels = []
        for w in relators:
            w = free_reduce(w)
            while len(w) > 1 and w[0] == -w[-1]:
                w = w[1:-1]
            if w:
                self.rels.append([self._col(x) for x in w])
        self.subgroup = [[self._col(x) for x in free_reduce(w)] for w in subgroup]
        self.max_cosets = max_cosets
        self.table: list[list[int]] = [[-1] * self.ncol]
        self.parent = [0]
        self.live = 1

    @staticmethod
    def _col(x: int) -> int:
        return 2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1

    def find(self, c: int) -> int:
        parent = self.parent
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def define(self, c: int, x: int) -> None:
        if self.live >= self.max_cosets:
            raise _Full
        d = len(self.table)
        self.table.append([-1] * self.ncol)
        self.parent.append(d)
        self.table[c][x] = d
        self.table[d][x ^ 1] = c
        self.live += 1

    def _merge(self, k: int, l: int, queue: list[int]) -> None:
        a, b = self.find(k), self.find(l)
        if a != b:
            if a > b:
                a, b = b, a
            self.parent[b] = a
            self.live -= 1
            queue.append(b)

    def coincidence(self, a: int, b: int) -> None:
        table = self.table
        queue: list[int] = []
        self._merge(a, b, queue)
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            for x in range(self.ncol):
                d = table[g][x]
                if d < 0:
                    continue
                table[d][x ^ 1] = -1
                mu, nu = self.find(g), self.find(d)
                if table[mu][x] >= 0:
                    self._merge(nu, table[mu][x], queue)
                elif table[nu][x ^ 1] >= 0:
                    self._merge(mu, table[nu][x ^ 1], queue)
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu

    def scan(self, c: int, w: list[int], fill: bool) -> None:
        table = self.table
        f, b = c, c
        i, j = 0, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] >= 0:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][w[j] ^ 1] >= 0:
                b = table[b][w[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][w[i] ^ 1] = f
                return
            if not fill:
                return
            self.define(f, w[i])

    def lookahead(self) -> None:
        for c in range(len(self.table)):
            if self.parent[c] != c:
                continue
            for w in self.rels:
                self.scan(c, w, fill=False)
                if self.parent[c] != c:
                    break

    def run(self) -> None:
        while True:
            try:
                for w in self.subgroup:
                    if w:
                        self.scan(0, w, fill=True)
                break
            except _Full:
                self._relieve()
        c = 0
        while c < len(self.table):
            if self.parent[c] == c:
                try:
                    for w in self.rels:
                        self.scan(c, w, fill=True)
                        if self.parent[c] != c:
                            break
                    if self.parent[c] == c:
                        row = self.table[c]
                        for x in range(self.ncol):
                            if row[x] < 0:
                                self.define(c, x)
                except _Full:
                    self._relieve()
                    continue
            c += 1

    def _relieve(self) -> None:
        before = self.live
        self.lookahead()
        if self.live >= self.max_cosets or self.live == before:
            raise EnumerationOverflowError(
                f"coset enumeration exceeded {self.max_cosets} cosets; the quotient may be infinite"
            )

    def standardized(self) -> tuple[list[list[int]], list[int], list[int]]:
        """Live cosets renumbered breadth-first from coset 0.

        Returns the table, and for each new coset its BFS parent and the
        column leading to it (-1 for coset 0).
        """
        order = [0]
        index = {0: 0}
        parent_of = [-1]
        via = [-1]
        k = 0
        while k < len(order):
            c = order[k]
            k += 1
            for x in range(self.ncol):
                d = self.find(self.table[c][x])
                if d not in index:
                    index[d] = len(order)
                    order.append(d)
                    parent_of.append(index[c])
                    via.append(x)
        table = [[index[self.find(self.table[c][x])] for x in range(self.ncol)] for c in order]
        return table, parent_of, via


def coset_index(pres: Presentation, subgroup: Sequence[Word], extra: Sequence[Word] = (), max_cosets: int = 10**6) -> int:
    """Index of the subgroup generated by ``subgroup`` in the quotient by ``extra``."""
    tab = CosetTable(pres, list(pres.relators) + [tuple(w) for w in extra], list(subgroup), max_cosets)
    tab.run()
    return tab.live


def todd_coxeter(pres: Presentation, extra: Sequence[Word] = (), max_cosets: int = 10**6) -> "FiniteGroupImage":
    """Regular permutation representation of ``pres`` modulo ``extra``."""
    extra = tuple(pres.check_word(w) for w in extra)
    tab = CosetTable(pres, list(pres.relators) + list(extra), [], max_cosets)
    tab.run()
    table, parent_of, via = tab.standardized()
    return FiniteGroupImage(pres, extra, table, parent_of, via)


class FiniteGroupImage:
    """A finite quotient of a presented group, stored as its Cayley table.

    Elements are numbered 0..order-1 in shortlex order of their canonical
    words (generator order a < a^-1 < b < b^-1 < ...); 0 is the identity.
    """

    def __init__(self, pres: Presentation, extra: tuple, table, parent_of, via):
        self.presentation = pres
        self.extra_relators = extra
        self.order = len(table)
        n = self.order
        ng = pres.rank
        # right action of generator k: coset c -> c * gen_k
        self.generator_perms = tuple(tuple(table[c][2 * k] for c in range(n)) for k in range(ng))
        self._inverse_perms = tuple(tuple(table[c][2 * k + 1] for c in range(n)) for k in range(ng))
        words: list[Word] = [()]
        for c in range(1, n):
            x = via[c]
            letter = x // 2 + 1
            words.append(words[parent_of[c]] + ((letter if x % 2 == 0 else -letter),))
        self._words = words
        # column b of the Cayley table: a -> a*b
        cols: list[tuple[int, ...]] = [tuple(range(n))]
        for b in range(1, n):
            x = via[b]
            perm = self.generator_perms[x // 2] if x % 2 == 0 else self._inverse_perms[x // 2]
            prev = cols[parent_of[b]]
            cols.append(tuple(perm[a] for a in prev))
        self._cols = cols
        self._inv = [cols[b].index(0) for b in range(n)]
        self._check_relators()

    def _check_relators(self) -> None:
        for w in self.presentation.relators + self.extra_relators:
            if self._eval_index(w) != 0:
                raise AssertionError(f"relator {w} does not vanish in the enumerated quotient")

    # -- element access --------------------------------------------------------
    def _eval_index(self, word: Sequence[int]) -> int:
        c = 0
        for x in word:
            c = self.generator_perms[x - 1][c] if x > 0 else self._inverse_perms[-x - 1][c]
        return c

    def element(self, word: Sequence[int] | str) -> "GroupElement":
        if isinstance(word, str):
            word = self.presentation.parse_word(word)
        word = self.presentation.check_word(word)
        return GroupElement(self, self._eval_index(word))

    def __getitem__(self, index: int) -> "GroupElement":
        return GroupElement(self, index)

    @property
    def identity(self) -> "GroupElement":
        return GroupElement(self, 0)

    @property
    def generators(self) -> list["GroupElement"]:
        return [self.element((k + 1,)) for k in range(self.presentation.rank)]

    def elements(self) -> list["GroupElement"]:
        return [GroupElement(self, i) for i in range(self.order)]

    def mul_index(self, a: int, b: int) -> int:
        return self._cols[b][a]

    def inv_index(self, a: int) -> int:
        return self._inv[a]

    def word_of(self, index: int) -> Word:
        return self._words[index]

    # -- structure ---------------------------------------------------------------
    def conj_index(self, a: int, b: int) -> int:
        """Index of a b a^-1."""
        return self._cols[self._inv[a]][self._cols[b][a]]

    def conjugacy_class(self, g: "GroupElement") -> list["GroupElement"]:
        return [GroupElement(self, i) for i in self.class_indices(g.index)]

    def class_indices(self, b: int) -> list[int]:
        seen = {b}
        frontier = [b]
        gens = [k + 1 for k in range(self.presentation.rank)]
        gen_idx = [self._eval_index((k,)) for k in gens]
        while frontier:
            nxt = []
            for y in frontier:
                for s in gen_idx:
                    z = self.conj_index(s, y)
                    if z not in seen:
                        seen.add(z)
                        nxt.append(z)
            frontier = nxt
        return sorted(seen)

    def conjugacy_classes(self) -> list[list[int]]:
        done: set[int] = set()
        classes = []
        for i in range(self.order):
            if i not in done:
                cls = self.class_indices(i)
                done.update(cls)
                classes.append(cls)
        return classes

    def centralizer_indices(self, b: int) -> list[int]:
        return [a for a in range(self.order) if self._cols[b][a] == self._cols[a][b]]

    def subgroup_indices(self, gens: Iterable[int]) -> list[int]:
        gens = list(gens)
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for a in frontier:
                for s in gens:
                    c = self._cols[s][a]
                    if c not in seen:
                        seen.add(c)
                        nxt.append(c)
            frontier = nxt
        return sorted(seen)

    def generating_set(self, members: Sequence[int]) -> list["GroupElement"]:
        """Greedy generating set of a subgroup given by its element indices."""
        gens: list[int] = []
        span = {0}
        for a in sorted(members):
            if a not in span:
                gens.append(a)
                span = set(self.subgroup_indices(gens))
        if span != set(members):
            raise ValueError("members do not form a subgroup")
        return [GroupElement(self, a) for a in gens]

    def centralizer(self, g: "GroupElement") -> list["GroupElement"]:
        members = self.centralizer_indices(g.index)
        gens = self.generating_set(members)
        assert len(self.class_indices(g.index)) * len(members) == self.order
        return gens

    def center_indices(self) -> list[int]:
        gen_idx = [self._eval_index((k + 1,)) for k in range(self.presentation.rank)]
        return [a for a in range(self.order) if all(self._cols[s][a] == self._cols[a][s] for s in gen_idx)]

    def center(self) -> list["GroupElement"]:
        return self.generating_set(self.center_indices())

    def is_central(self, g: "GroupElement") -> bool:
        b = g.index
        return all(self._cols[b][self._eval_index((k + 1,))] == self._cols[self._eval_index((k + 1,))][b]
                   for k in range(self.presentation.rank))

    def generated_by(self, elements: Iterable["GroupElement"]) -> bool:
        return len(self.subgroup_indices(e.index for e in elements)) == self.order

    def evaluate(self, word: Sequence[int], images: Sequence["GroupElement"]) -> "GroupElement":
        """Image of a word under the substitution generator k -> images[k-1]."""
        acc = 0
        for x in word:
            img = images[abs(x) - 1].index
            acc = self._cols[img if x > 0 else self._inv[img]][acc]
        return GroupElement(self, acc)

    def describe(self) -> str:
        extra = ", ".join(self.presentation.word_text(w) for w in self.extra_relators) or "none"
        return f"quotient of order {self.order} with extra relators: {extra}"


@dataclass(frozen=True)
class GroupElement:
    image: FiniteGroupImage = field(compare=False, repr=False)
    index: int

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupElement) and other.image is self.image and other.index == self.index

    def __hash__(self) -> int:
        return hash((id(self.image), self.index))

    def __lt__(self, other: "GroupElement") -> bool:
        return self.index < other.index

    @property
    def word(self) -> Word:
        return self.image.word_of(self.index)

    @property
    def perm(self) -> tuple[int, ...]:
        """Right-regular permutation a -> a * self on element indices."""
        return self.image._cols[self.index]

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if other.image is not self.image:
            raise ValueError("elements of different group images")
        return GroupElement(self.image, self.image.mul_index(self.index, other.index))

    def inverse(self) -> "GroupElement":
        return GroupElement(self.image, self.image.inv_index(self.index))

    def __pow__(self, k: int) -> "GroupElement":
        base = self if k >= 0 else self.inverse()
        acc = self.image.identity
        for _ in range(abs(k)):
            acc = acc * base
        return acc

    def conj(self, other: "GroupElement") -> "GroupElement":
        """self ▷ other = self * other * self^-1."""
        return GroupElement(self.image, self.image.conj_index(self.index, other.index))

    def order(self) -> int:
        k, acc = 1, self.index
        while acc != 0:
            acc = self.image.mul_index(acc, self.index)
            k += 1
        return k

    def is_identity(self) -> bool:
        return self.index == 0

    def text(self) -> str:
        return self.image.presentation.word_text(self.word)

    def __repr__(self) -> str:
        return f"<{self.text()}>"


def multiply(a: GroupElement, b: GroupElement) -> GroupElement:
    return a * b


def invert(a: GroupElement) -> GroupElement:
    return a.inverse()


def conjugate(a: GroupElement, b: GroupElement) -> GroupElement:
    """a ▷ b = a b a^-1 (left conjugation action)."""
    return a.conj(b)


def conjugacy_class(g: GroupElement) -> list[GroupElement]:
    return g.image.conjugacy_class(g)


def centralizer(g: GroupElement) -> list[GroupElement]:
    return g.image.centralizer(g)


def center(img: FiniteGroupImage) -> list[GroupElement]:
    return img.center()


def is_central(g: GroupElement) -> bool:
    return g.image.is_central(g)


def hom_check(source: Presentation, target: FiniteGroupImage, images: Sequence[GroupElement | Sequence[int] | str]) -> bool:
    """True iff generator k -> images[k-1] kills every relator of ``source``."""
    if len(images) != source.rank:
        raise ValueError("one image per source generator is required")
    elems = [im if isinstance(im, GroupElement) else target.element(im) for im in images]
    return all(target.evaluate(r, elems).is_identity() for r in source.relators)


# -- presentations used by the scenarios ------------------------------------------

def t_presentation() -> Presentation:
    """Generators x, y, z for chi_1, chi_2, zeta: z central, braid relation, x^3 = y^3."""
    p = Presentation(("x", "y", "z"))
    rels = ["z x Z X", "z y Z Y", "x y x Y X Y", "x^3 y^-3"]
    return Presentation(p.generators, tuple(p.parse_word(r) for r in rels))


def gamma_presentation(n: int) -> Presentation:
    """Generators a, b, v with b a = v a b, a v = v^-1 a, b v = v b, v^n = 1."""
    p = Presentation(("a", "b", "v"))
    rels = ["b a B A V", "a v A v", "b v B V", f"v^{n}"]
    return Presentation(p.generators, tuple(p.parse_word(r) for r in rels))
