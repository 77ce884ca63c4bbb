"""Finite quandles given by their left-translation tables.

Internally elements are 0-based; the text format and the cycle notation used
by :func:`from_row_permutations` are 1-based, so row ``(243)`` means the
element sends 2 -> 4 -> 3 -> 2 and fixes everything else.
"""

from __future__ import annotations

import re
from typing import Callable, Mapping, Sequence

from .fpgroup import FiniteGroupImage, GroupElement, Presentation


class NotAQuandleError(ValueError):
    def __init__(self, message: str, triple: tuple | None = None):
        super().__init__(message)
        self.triple = triple


class FiniteQuandle:
    """Table with ``table[i][j] = i ▷ j``; axioms are checked on construction."""

    def __init__(self, table: Sequence[Sequence[int]], labels: Sequence[str] | None = None, check: bool = True):
        self.table = tuple(tuple(row) for row in table)
        self.size = len(self.table)
        self.labels = tuple(labels) if labels is not None else tuple(str(i + 1) for i in range(self.size))
        if check:
            self.check_axioms()

    def act(self, i: int, j: int) -> int:
        return self.table[i][j]

    def check_axioms(self) -> None:
        n = self.size
        t = self.table
        for i in range(n):
            if len(t[i]) != n or any(not 0 <= v < n for v in t[i]):
                raise NotAQuandleError(f"row {i + 1} is not a map into the quandle")
            if t[i][i] != i:
                raise NotAQuandleError(f"idempotence fails at {i + 1}", (i + 1, i + 1, i + 1))
            if len(set(t[i])) != n:
                raise NotAQuandleError(f"left translation by {i + 1} is not bijective", (i + 1,))
        for i in range(n):
            ti = t[i]
            for j in range(n):
                tij = ti[j]
                for k in range(n):
                    if ti[t[j][k]] != t[tij][ti[k]]:
                        raise NotAQuandleError(
                            f"self-distributivity fails for ({i + 1}, {j + 1}, {k + 1})", (i + 1, j + 1, k + 1)
                        )

    def row_permutations(self) -> list[str]:
        return [_cycle_string(row) for row in self.table]

    def to_text(self) -> str:
        return "\n".join(self.row_permutations()) + "\n"

    def orbits(self) -> list[list[int]]:
        """Orbits under the group generated by left translations (0-based)."""
        seen: set[int] = set()
        out = []
        for start in range(self.size):
            if start in seen:
                continue
            orb = {start}
            frontier = [start]
            while frontier:
                y = frontier.pop()
                for i in range(self.size):
                    for z in (self.table[i][y], self.table[i].index(y)):
                        if z not in orb:
                            orb.add(z)
                            frontier.append(z)
            seen |= orb
            out.append(sorted(orb))
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteQuandle) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        return f"FiniteQuandle({' '.join(self.row_permutations())})"


def _cycle_string(row: Sequence[int]) -> str:
    seen: set[int] = set()
    cycles = []
    for start in range(len(row)):
        if start in seen or row[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        nxt = row[start]
        while nxt != start:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = row[nxt]
        cycles.append("(" + "".join(str(c + 1) if len(row) < 10 else f"{c + 1} " for c in cyc).strip() + ")")
    return "".join(cycles) if cycles else "id"


def parse_cycles(text: str, n: int) -> list[int]:
    """Permutation (0-based list) of {1..n} written in cycle notation; ``id`` is the identity."""
    perm = list(range(n))
    text = text.strip()
    if text in ("id", "()", ""):
        return perm
    for body in re.findall(r"\(([^)]*)\)", text):
        items = body.split() if " " in body.strip() or "," in body else list(body)
        items = [int(t.strip(",")) - 1 for t in items if t.strip(",")]
        for a, b in zip(items, items[1:] + items[:1]):
            perm[a] = b
    if re.sub(r"\(([^)]*)\)", "", text).strip():
        raise ValueError(f"cannot parse cycle notation {text!r}")
    return perm


def from_row_permutations(perms: Sequence[str] | str) -> FiniteQuandle:
    """Quandle whose i-th element acts by the i-th permutation string."""
    if isinstance(perms, str):
        perms = perms.split()
    n = len(perms)
    return FiniteQuandle([parse_cycles(p, n) for p in perms])


def parse_quandle(text: str) -> FiniteQuandle:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    return from_row_permutations([ln for ln in lines if ln])


def tetrahedral() -> FiniteQuandle:
    rows = [[1, 4, 2, 3], [3, 2, 4, 1], [4, 1, 3, 2], [2, 3, 1, 4]]
    return FiniteQuandle([[v - 1 for v in row] for row in rows])


def dihedral(n: int) -> FiniteQuandle:
    """i ▷ j = 2i - j mod n."""
    return FiniteQuandle([[(2 * i - j) % n for j in range(n)] for i in range(n)])


def trivial(n: int) -> FiniteQuandle:
    return FiniteQuandle([list(range(n)) for _ in range(n)])


def disjoint_union(q1: FiniteQuandle, q2: FiniteQuandle) -> FiniteQuandle:
    n1 = q1.size
    n = n1 + q2.size
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            if i < n1 and j < n1:
                row.append(q1.table[i][j])
            elif i >= n1 and j >= n1:
                row.append(q2.table[i - n1][j - n1] + n1)
            else:
                row.append(j)
        table.append(row)
    return FiniteQuandle(table)


def amalgamated_sum(
    y: FiniteQuandle,
    z: FiniteQuandle,
    sigma: Sequence[Sequence[int]],
    tau: Sequence[Sequence[int]],
) -> FiniteQuandle:
    """Quandle on Y ⊔ Z (Y first) where y ▷ z = sigma[y][z] and z ▷ y = tau[z][y].

    ``sigma[y]`` is a 0-based permutation of Z and ``tau[z]`` one of Y; the
    result is validated by re-checking the axioms.
    """
    ny, nz = y.size, z.size
    table = []
    for i in range(ny + nz):
        row = []
        for j in range(ny + nz):
            if i < ny and j < ny:
                row.append(y.table[i][j])
            elif i >= ny and j >= ny:
                row.append(z.table[i - ny][j - ny] + ny)
            elif i < ny:
                row.append(sigma[i][j - ny] + ny)
            else:
                row.append(tau[i - ny][j])
        table.append(row)
    return FiniteQuandle(table)


def conjugation(img: FiniteGroupImage, seeds: Sequence[GroupElement]) -> tuple[FiniteQuandle, list[GroupElement]]:
    """Conjugation quandle on the union of the classes of ``seeds``.

    Elements are listed class by class in seed order, each class in
    increasing element index.  Returns the quandle and its element list.
    """
    elems: list[int] = []
    for s in seeds:
        for c in img.class_indices(s.index):
            if c not in elems:
                elems.append(c)
    pos = {e: k for k, e in enumerate(elems)}
    table = [[pos[img.conj_index(a, b)] for b in elems] for a in elems]
    return FiniteQuandle(table), [img[e] for e in elems]


def _profile(q: FiniteQuandle, i: int) -> tuple:
    row = q.table[i]
    col = [q.table[j][i] for j in range(q.size)]
    fixed_row = sum(1 for j in range(q.size) if row[j] == j)
    fixed_col = sum(1 for j in range(q.size) if col[j] == i)
    lengths = []
    seen: set[int] = set()
    for s in range(q.size):
        if s in seen:
            continue
        k, c = 0, s
        while c not in seen:
            seen.add(c)
            c = row[c]
            k += 1
        lengths.append(k)
    orbit = next(len(o) for o in q.orbits() if i in o)
    return (tuple(sorted(lengths)), fixed_row, fixed_col, orbit)


def isomorphisms(q1: FiniteQuandle, q2: FiniteQuandle, constraint: Callable[[int, int], bool] | None = None):
    """Generate every quandle isomorphism q1 -> q2 (as 0-based lists), in lexicographic order."""
    n = q1.size
    if n != q2.size:
        return
    prof1 = [_profile(q1, i) for i in range(n)]
    prof2 = [_profile(q2, i) for i in range(n)]
    if sorted(prof1) != sorted(prof2):
        return
    f = [-1] * n
    used = [False] * n

    def consistent(i: int) -> bool:
        t1, t2 = q1.table, q2.table
        for j in range(n):
            if f[j] < 0:
                continue
            for a, b in ((i, j), (j, i)):
                c = t1[a][b]
                if f[c] >= 0 and f[c] != t2[f[a]][f[b]]:
                    return False
                if f[c] < 0 and used[t2[f[a]][f[b]]]:
                    return False
        return True

    def extend(i: int):
        if i == n:
            # close the check: all products must map correctly
            if all(f[q1.table[a][b]] == q2.table[f[a]][f[b]] for a in range(n) for b in range(n)):
                yield list(f)
            return
        for cand in range(n):
            if used[cand] or prof1[i] != prof2[cand]:
                continue
            if constraint is not None and not constraint(i, cand):
                continue
            f[i] = cand
            used[cand] = True
            if consistent(i):
                yield from extend(i + 1)
            f[i] = -1
            used[cand] = False

    yield from extend(0)


def is_isomorphic(q1: FiniteQuandle, q2: FiniteQuandle) -> list[int] | None:
    """First isomorphism q1 -> q2 in lexicographic order, or None."""
    return next(isomorphisms(q1, q2), None)


def enveloping_presentation(q: FiniteQuandle) -> Presentation:
    """Generators x1..xn with relators x_i x_j x_i^-1 x_{i▷j}^-1 (trivial ones dropped)."""
    gens = tuple(f"x{i + 1}" for i in range(q.size))
    rels = []
    for i in range(q.size):
        for j in range(q.size):
            k = q.table[i][j]
            if i == j:
                continue
            rels.append((i + 1, j + 1, -(i + 1), -(k + 1)))
    return Presentation(gens, tuple(rels))


CATALOGUE: Mapping[str, tuple[str, ...]] = {
    "Z_T^{4,1}": ("(243)", "(134)", "(142)", "(123)", "id"),
    "Z_2^{2,2}": ("(24)", "(13)", "(24)", "(13)"),
    "Z_3^{3,1}": ("(23)", "(13)", "(12)", "id"),
    "Z_3^{3,2}": ("(23)(45)", "(13)(45)", "(12)(45)", "(123)", "(132)"),
    "Z_4^{4,2}": ("(24)(56)", "(13)(56)", "(24)(56)", "(13)(56)", "(1234)", "(1432)"),
}


def catalogue_quandle(name: str) -> FiniteQuandle:
    return from_row_permutations(CATALOGUE[name])
