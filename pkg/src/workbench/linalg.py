"""Exact linear algebra over :class:`Scalar` fields.

Vectors are sparse dicts ``{coordinate key: Scalar}`` holding nonzero entries
only; keys must be mutually comparable (tuples of ints in practice) so that
echelon forms are canonical.  Matrices are dense lists of rows.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping, Sequence

from .scalars import FieldSpec, Scalar

Vector = dict
Matrix = list


def add_scaled(acc: dict, vec: Mapping, coeff: Scalar | None = None) -> dict:
    """acc += coeff * vec, in place, dropping zeros."""
    for k, v in vec.items():
        term = v if coeff is None else coeff * v
        cur = acc.get(k)
        if cur is None:
            if term:
                acc[k] = term
        else:
            s = cur + term
            if s:
                acc[k] = s
            else:
                del acc[k]
    return acc


def scale(vec: Mapping, coeff: Scalar) -> dict:
    if not coeff:
        return {}
    return {k: coeff * v for k, v in vec.items()}


def is_zero_vector(vec: Mapping) -> bool:
    return not any(v for v in vec.values())


class Echelon:
    """Incrementally maintained reduced row-echelon basis of a subspace.

    The pivot of a vector is its smallest key.  Every basis vector has a 1 at
    its pivot and zeros at all other pivots, so the basis is canonical for
    the subspace it spans.
    """

    def __init__(self, vectors: Iterable[Mapping] = ()):
        self.rows: dict[Hashable, dict] = {}
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Mapping) -> dict:
        """Remainder of vec after eliminating all pivots."""
        out = {k: v for k, v in vec.items() if v}
        for piv, row in self.rows.items():
            c = out.get(piv)
            if c is not None:
                add_scaled(out, row, -c)
        return out

    def add(self, vec: Mapping) -> bool:
        rem = self.reduce(vec)
        if not rem:
            return False
        piv = min(rem)
        inv = rem[piv].inverse()
        rem = {k: v * inv for k, v in rem.items()}
        for other_piv, row in self.rows.items():
            c = row.get(piv)
            if c is not None:
                add_scaled(row, rem, -c)
        self.rows[piv] = rem
        return True

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)

    def basis(self) -> list[dict]:
        return [self.rows[p] for p in sorted(self.rows)]

    def pivots(self) -> list:
        return sorted(self.rows)

    def coordinates(self, vec: Mapping) -> list[Scalar] | None:
        """Coordinates of vec in :meth:`basis`, or None if vec is outside the span."""
        if self.reduce(vec):
            return None
        return [vec.get(p) for p in sorted(self.rows)]


def rank_of_vectors(vectors: Iterable[Mapping]) -> int:
    return Echelon(vectors).rank


# -- dense matrices ------------------------------------------------------------

def identity(spec: FieldSpec, n: int) -> Matrix:
    one, zero = spec.one(), spec.zero()
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def zeros(spec: FieldSpec, rows: int, cols: int) -> Matrix:
    zero = spec.zero()
    return [[zero] * cols for _ in range(rows)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    spec_zero = (a[0][0] if a[0] else b[0][0]).spec.zero()
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        new = [spec_zero] * cols
        for k, aik in enumerate(row):
            if aik:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        new[j] = new[j] + aik * bk[j]
        out.append(new)
    return out


def mat_vec(a: Matrix, v: Sequence[Scalar]) -> list[Scalar]:
    out = []
    for row in a:
        acc = None
        for x, y in zip(row, v):
            if x and y:
                acc = x * y if acc is None else acc + x * y
        out.append(acc if acc is not None else row[0].spec.zero())
    return out


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def mat_equal(a: Matrix, b: Matrix) -> bool:
    return len(a) == len(b) and all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def is_identity(a: Matrix) -> bool:
    return all((x == 1) if i == j else (not x) for i, row in enumerate(a) for j, x in enumerate(row))


def row_reduce(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form and pivot columns of a dense matrix (copy)."""
    m = [list(r) for r in a]
    pivots: list[int] = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(a: Matrix) -> int:
    if not a:
        return 0
    return len(row_reduce(a)[1])


def nullspace(a: Matrix, ncols: int, spec: FieldSpec) -> list[list[Scalar]]:
    """Basis of {x : a x = 0}, one basis vector per free column."""
    if not a:
        return identity(spec, ncols)
    red, pivots = row_reduce(a)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [spec.zero()] * ncols
        x[f] = spec.one()
        for row_idx, pc in enumerate(pivots):
            x[pc] = -red[row_idx][f]
        basis.append(x)
    return basis


def mat_inverse(a: Matrix) -> Matrix:
    n = len(a)
    spec = a[0][0].spec
    aug = [list(row) + ident for row, ident in zip(a, identity(spec, n))]
    red, pivots = row_reduce(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]
