"""Exact arithmetic in cyclotomic fields Q(zeta_n) and in finite fields F_p(zeta_n).

Every coefficient used by the rest of the package is a :class:`Scalar`.  A
scalar is a coefficient vector in powers of ``zeta_n`` reduced modulo a fixed
monic polynomial: the n-th cyclotomic polynomial in characteristic 0, or the
lexicographically least irreducible factor of it over F_p otherwise.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Sequence, Union

Number = Union[int, Fraction]


class IncompatibleFieldError(ValueError):
    """Raised when scalars from different fields are combined."""


class UnrepresentableRootError(ValueError):
    """Raised when a requested root of unity does not live in the field."""


class ScalarSyntaxError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p ** 0.5) + 1))


@dataclass(frozen=True)
class FieldSpec:
    """A field generated over its prime field by a primitive n-th root of unity."""

    characteristic: int = 0
    conductor: int = 12

    def __post_init__(self) -> None:
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise ValueError(f"characteristic must be 0 or prime, got {self.characteristic}")
        if self.conductor < 1:
            raise ValueError("conductor must be positive")
        if self.characteristic and self.conductor % self.characteristic == 0:
            raise ValueError("characteristic may not divide the conductor")

    @property
    def degree(self) -> int:
        return len(_field_data(self).modulus) - 1

    @property
    def modulus(self) -> tuple:
        """Coefficients (low to high) of the monic reducing polynomial."""
        return _field_data(self).modulus

    def zero(self) -> "Scalar":
        return _field_data(self).zero

    def one(self) -> "Scalar":
        return _field_data(self).one

    def __call__(self, value: Number) -> "Scalar":
        return self.from_rational(value)

    def from_rational(self, value: Number) -> "Scalar":
        data = _field_data(self)
        return Scalar._raw(self, (data.coerce(value),) + (0,) * (data.degree - 1))

    def zeta(self, power: int = 1) -> "Scalar":
        """The power ``zeta_n ** power`` of the adjoined root."""
        data = _field_data(self)
        return data.zeta_powers[power % self.conductor]

    def roots_of_unity(self) -> list["Scalar"]:
        """All powers of zeta_n, ordered by exponent."""
        return list(_field_data(self).zeta_powers)

    def __str__(self) -> str:
        if self.characteristic == 0:
            return f"Q(zeta{self.conductor})"
        return f"GF({self.characteristic}^{self.degree})"


DEFAULT_CHAR0 = FieldSpec(0, 12)
DEFAULT_CHAR2 = FieldSpec(2, 3)


def default_field(characteristic: int) -> FieldSpec:
    if characteristic == 0:
        return DEFAULT_CHAR0
    if characteristic == 2:
        return DEFAULT_CHAR2
    raise ValueError(f"no default field for characteristic {characteristic}")


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den is monic
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        q[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    rem = num[: len(den) - 1]
    return q, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients (low to high) of the n-th cyclotomic polynomial."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_int(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    return tuple(poly)


def _multiplicative_order(p: int, n: int) -> int:
    if n == 1:
        return 1
    k, acc = 1, p % n
    while acc != 1:
        acc = acc * p % n
        k += 1
    return k


def _divides_mod_p(f: Sequence[int], g: Sequence[int], p: int) -> bool:
    g = [c % p for c in g]
    d = len(f) - 1
    for k in range(len(g) - 1 - d, -1, -1):
        c = g[k + d]
        if c:
            for i, fi in enumerate(f):
                g[k + i] = (g[k + i] - c * fi) % p
    return not any(g[:d])


def _least_irreducible_factor(n: int, p: int) -> tuple[int, ...]:
    # every irreducible factor of Phi_n over F_p has degree ord_n(p), so any
    # monic divisor of that degree is irreducible
    phi = cyclotomic_polynomial(n)
    d = _multiplicative_order(p, n)
    for low in itertools.product(range(p), repeat=d):
        f = tuple(low) + (1,)
        if _divides_mod_p(f, phi, p):
            return f
    raise AssertionError("cyclotomic polynomial has no factor of the expected degree")


class _FieldData:
    """Precomputed reduction tables for one FieldSpec."""

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p = spec.characteristic
        if self.p == 0:
            self.modulus = cyclotomic_polynomial(spec.conductor)
        else:
            self.modulus = _least_irreducible_factor(spec.conductor, self.p)
        self.degree = len(self.modulus) - 1
        d = self.degree
        # x^k mod f for k = d .. 2d-2
        self.reduction: list[list[Number]] = []
        cur = [-c for c in self.modulus[:d]]
        if self.p:
            cur = [c % self.p for c in cur]
        for _ in range(max(d - 1, 0)):
            self.reduction.append(cur)
            top = cur[d - 1]
            nxt = [0] + cur[: d - 1]
            if top:
                nxt = [a + top * b for a, b in zip(nxt, self.reduction[0])]
                if self.p:
                    nxt = [c % self.p for c in nxt]
            cur = nxt
        self.zero = Scalar._raw(spec, (0,) * d)
        self.one = Scalar._raw(spec, (self.coerce(1),) + (0,) * (d - 1))
        powers = [self.one]
        if d == 1:
            x = Scalar._raw(spec, (self._root_in_prime_field(),))
        else:
            x = Scalar._raw(spec, (0, 1) + (0,) * (d - 2))
        for _ in range(spec.conductor - 1):
            powers.append(powers[-1] * x)
        self.zeta_powers = tuple(powers)
        self.power_index = {s.coeffs: j for j, s in enumerate(powers)}

    def _root_in_prime_field(self) -> int:
        # degree-1 case: zeta_n is the root of the linear factor x + c
        if self.p == 0:
            return -self.modulus[0]
        return (-self.modulus[0]) % self.p

    def coerce(self, value: Number) -> Number:
        if self.p == 0:
            if isinstance(value, Fraction):
                return value.numerator if value.denominator == 1 else value
            return int(value)
        if isinstance(value, Fraction):
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p


_FIELD_CACHE: dict[FieldSpec, _FieldData] = {}


def _field_data(spec: FieldSpec) -> _FieldData:
    data = _FIELD_CACHE.get(spec)
    if data is None:
        data = _FieldData.__new__(_FieldData)
        _FIELD_CACHE[spec] = data  # reentrancy: zeta powers use arithmetic
        try:
            _FieldData.__init__(data, spec)
        except Exception:
            del _FIELD_CACHE[spec]
            raise
    return data


def _norm_rational(c: Number) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Scalar:
    """Immutable element of a :class:`FieldSpec`; equality is coefficient-wise."""

    __slots__ = ("spec", "coeffs", "_hash")

    def __init__(self, spec: FieldSpec, coeffs: Iterable[Number]):
        data = _field_data(spec)
        coeffs = [data.coerce(c) for c in coeffs]
        if len(coeffs) > data.degree:
            coeffs = _reduce_poly(data, coeffs)
        coeffs = coeffs + [0] * (data.degree - len(coeffs))
        self.spec = spec
        self.coeffs = tuple(coeffs)
        self._hash = None

    @classmethod
    def _raw(cls, spec: FieldSpec, coeffs: tuple) -> "Scalar":
        obj = object.__new__(cls)
        obj.spec = spec
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    # -- helpers -----------------------------------------------------------
    def _check(self, other: "Scalar") -> None:
        if self.spec is not other.spec and self.spec != other.spec:
            raise IncompatibleFieldError(f"cannot combine scalars of {self.spec} and {other.spec}")

    def _lift(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.spec.from_rational(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        p = self.spec.characteristic
        if p:
            return Scalar._raw(self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))
        return Scalar._raw(self.spec, tuple(_norm_rational(a + b) for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.spec.characteristic
        if p:
            return Scalar._raw(self.spec, tuple((-a) % p for a in self.coeffs))
        return Scalar._raw(self.spec, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            p = self.spec.characteristic
            if p:
                k = _field_data(self.spec).coerce(other)
                return Scalar._raw(self.spec, tuple(a * k % p for a in self.coeffs))
            return Scalar._raw(self.spec, tuple(_norm_rational(a * other) for a in self.coeffs))
        if not isinstance(other, Scalar):
            return NotImplemented
        self._check(other)
        data = _field_data(self.spec)
        a, b = self.coeffs, other.coeffs
        d = data.degree
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        out = prod[:d]
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                red = data.reduction[k - d]
                for i in range(d):
                    if red[i]:
                        out[i] += c * red[i]
        if data.p:
            return Scalar._raw(self.spec, tuple(c % data.p for c in out))
        return Scalar._raw(self.spec, tuple(_norm_rational(c) for c in out))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero scalar")
        return _inverse(self.spec, self.coeffs)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.spec.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison and display ----------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return (self.spec is other.spec or self.spec == other.spec) and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == self.spec.from_rational(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.spec, self.coeffs))
        return self._hash

    def root_exponent(self) -> int | None:
        """The exponent j with self = zeta_n^j, or None if self is not such a power."""
        return _field_data(self.spec).power_index.get(self.coeffs)

    def multiplicative_order(self) -> int | None:
        """Order of self if it is a power of zeta_n, else None."""
        j = self.root_exponent()
        if j is None:
            return None
        n = self.spec.conductor
        return n // gcd(n, j)

    def to_text(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"Scalar({format_scalar(self)})"

    __str__ = to_text


def _reduce_poly(data: _FieldData, coeffs: list) -> list:
    d = data.degree
    coeffs = list(coeffs)
    f = data.modulus
    for k in range(len(coeffs) - 1, d - 1, -1):
        c = coeffs[k]
        if c:
            for i in range(d + 1):
                coeffs[k - d + i] -= c * f[i]
    out = coeffs[:d]
    if data.p:
        out = [c % data.p for c in out]
    else:
        out = [_norm_rational(Fraction(c)) for c in out]
    return out


@lru_cache(maxsize=1 << 16)
def _inverse(spec: FieldSpec, coeffs: tuple) -> Scalar:
    data = _field_data(spec)
    d = data.degree
    a = Scalar._raw(spec, coeffs)
    # columns: a * x^j; solve M y = e_0
    cols = []
    x_power = data.one
    xgen = data.zeta_powers[1] if spec.conductor > 1 else data.one
    for _ in range(d):
        cols.append((a * x_power).coeffs)
        x_power = x_power * xgen if d > 1 else x_power
    p = data.p
    rows = [[cols[j][i] for j in range(d)] + [1 if i == 0 else 0] for i in range(d)]
    if p == 0:
        rows = [[Fraction(v) for v in r] for r in rows]
    for col in range(d):
        piv = next(r for r in range(col, d) if rows[r][col])
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = pow(rows[col][col], -1, p) if p else 1 / rows[col][col]
        rows[col] = [(v * inv) % p if p else v * inv for v in rows[col]]
        for r in range(d):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [((u - f * v) % p if p else u - f * v) for u, v in zip(rows[r], rows[col])]
    sol = tuple((_norm_rational(rows[i][d]) if not p else rows[i][d]) for i in range(d))
    return Scalar._raw(spec, sol)


def root_of_unity(spec: FieldSpec, k: int, power: int = 1) -> Scalar:
    """zeta_k ** power, provided k divides the order of <zeta_n> in the field."""
    if k < 1 or spec.conductor % k:
        raise UnrepresentableRootError(f"a primitive {k}-th root of unity is not available in {spec}")
    return spec.zeta((spec.conductor // k) * power)


# -- text syntax -------------------------------------------------------------

def format_scalar(s: Scalar) -> str:
    spec = s.spec
    n = spec.conductor
    j = s.root_exponent()
    if j is not None:
        return _root_text(j, n)
    mj = (-s).root_exponent()
    if mj is not None and spec.characteristic != 2:
        return "-" + _root_text(mj, n)
    if all(c == 0 for c in s.coeffs[1:]):
        return _rational_text(s.coeffs[0])
    terms = []
    for i, c in enumerate(s.coeffs):
        if not c:
            continue
        if i == 0:
            terms.append(_rational_text(c))
        elif c == 1:
            terms.append(f"zeta{n}^{i}")
        elif c == -1:
            terms.append(f"-zeta{n}^{i}")
        else:
            terms.append(f"{_rational_text(c)}*zeta{n}^{i}")
    text = " + ".join(terms)
    return text.replace("+ -", "- ")


def _root_text(j: int, n: int) -> str:
    if j == 0:
        return "1"
    g = gcd(n, j)
    k, e = n // g, j // g
    if k == 2:
        return "-1"
    return f"zeta{k}^{e}"


def _rational_text(c: Number) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


_TOKEN = re.compile(r"\s*(?:(\d+)|zeta(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text: str) -> list[tuple[str, object]]:
    tokens: list[tuple[str, object]] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        pos = m.end()
        num, zeta, ident, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif zeta is not None:
            tokens.append(("zeta", int(zeta)))
        elif ident is not None:
            tokens.append(("var", ident))
        elif op is not None and op.strip():
            if op not in "+-*/^()=":
                raise ScalarSyntaxError(f"unexpected character {op!r} in {text!r}")
            tokens.append(("op", op))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else ("end", None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect_op(self, op: str) -> None:
        tok = self.take()
        if tok != ("op", op):
            raise ScalarSyntaxError(f"expected {op!r} in {self.text!r}")

    def parse_expr(self):
        node = self.parse_term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            node = (op, node, self.parse_term())
        return node

    def parse_term(self):
        node = self.parse_unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            node = (op, node, self.parse_unary())
        return node

    def parse_unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return ("neg", self.parse_unary())
        if self.peek() == ("op", "+"):
            self.take()
            return self.parse_unary()
        return self.parse_power()

    def parse_power(self):
        node = self.parse_atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            kind, val = self.take()
            if kind != "num":
                raise ScalarSyntaxError(f"exponent must be an integer in {self.text!r}")
            node = ("pow", node, sign * val)
        return node

    def parse_atom(self):
        kind, val = self.take()
        if kind == "num":
            return ("num", val)
        if kind == "zeta":
            return ("zeta", val)
        if kind == "var":
            return ("var", val)
        if (kind, val) == ("op", "("):
            node = self.parse_expr()
            self.expect_op(")")
            return node
        raise ScalarSyntaxError(f"unexpected token {val!r} in {self.text!r}")

    def parse_all(self):
        node = self.parse_expr()
        if self.peek()[0] != "end":
            raise ScalarSyntaxError(f"trailing input in {self.text!r}")
        return node


def _evaluate(node, spec: FieldSpec, env: Mapping[str, Scalar]) -> Scalar:
    kind = node[0]
    if kind == "num":
        return spec.from_rational(node[1])
    if kind == "zeta":
        return root_of_unity(spec, node[1], 1)
    if kind == "var":
        try:
            return env[node[1]]
        except KeyError:
            raise ScalarSyntaxError(f"unknown name {node[1]!r}") from None
    if kind == "neg":
        return -_evaluate(node[1], spec, env)
    if kind == "pow":
        return _evaluate(node[1], spec, env) ** node[2]
    a = _evaluate(node[1], spec, env)
    b = _evaluate(node[2], spec, env)
    if kind == "+":
        return a + b
    if kind == "-":
        return a - b
    if kind == "*":
        return a * b
    return a / b


def _variables(node) -> set[str]:
    if node[0] == "var":
        return {node[1]}
    out: set[str] = set()
    for child in node[1:]:
        if isinstance(child, tuple):
            out |= _variables(child)
    return out


def parse_scalar(text: str, spec: FieldSpec, env: Mapping[str, Scalar] | None = None) -> Scalar:
    """Parse the textual scalar syntax, e.g. ``zeta6^1``, ``-1``, ``(1 + zeta3^1)/2``."""
    return _evaluate(_Parser(text).parse_all(), spec, env or {})


@dataclass(frozen=True)
class Constraint:
    """A polynomial equation ``lhs = rhs`` over named unknowns."""

    text: str
    lhs: tuple
    rhs: tuple
    names: frozenset

    @classmethod
    def parse(cls, text: str) -> "Constraint":
        if text.count("=") > 1:
            raise ScalarSyntaxError(f"more than one '=' in {text!r}")
        left, _, right = text.partition("=")
        lhs = _Parser(left).parse_all()
        rhs = _Parser(right).parse_all() if right.strip() else ("num", 0)
        return cls(text, lhs, rhs, frozenset(_variables(lhs) | _variables(rhs)))

    def holds(self, spec: FieldSpec, env: Mapping[str, Scalar]) -> bool:
        try:
            return _evaluate(self.lhs, spec, env) == _evaluate(self.rhs, spec, env)
        except ZeroDivisionError:
            return False


def solve_unity_constraints(
    spec: FieldSpec,
    constraints: Sequence[str | Constraint],
    fixed: Mapping[str, Scalar] | None = None,
    unknowns: Sequence[str] | None = None,
) -> list[dict[str, Scalar]]:
    """Every assignment of powers of zeta_n to the unknowns satisfying all constraints.

    Unknowns are assigned in the given order (default: sorted names) and each
    ranges over zeta_n^0, zeta_n^1, ...; solutions come out in that
    lexicographic order.  Constraints are checked as soon as their names are
    all bound.
    """
    fixed = dict(fixed or {})
    parsed = [c if isinstance(c, Constraint) else Constraint.parse(c) for c in constraints]
    names = set().union(*(c.names for c in parsed)) if parsed else set()
    if unknowns is None:
        unknowns = sorted(names - set(fixed))
    unknowns = list(unknowns)
    missing = names - set(fixed) - set(unknowns)
    if missing:
        raise ScalarSyntaxError(f"constraints mention unbound names {sorted(missing)}")
    bound_at: dict[int, list[Constraint]] = {i: [] for i in range(-1, len(unknowns))}
    for c in parsed:
        idx = max((unknowns.index(n) for n in c.names if n in unknowns), default=-1)
        bound_at[idx].append(c)
    if not all(c.holds(spec, fixed) for c in bound_at[-1]):
        return []
    roots = spec.roots_of_unity()
    solutions: list[dict[str, Scalar]] = []
    env = dict(fixed)

    def extend(i: int) -> None:
        if i == len(unknowns):
            solutions.append({n: env[n] for n in unknowns})
            return
        for r in roots:
            env[unknowns[i]] = r
            if all(c.holds(spec, env) for c in bound_at[i]):
                extend(i + 1)
        del env[unknowns[i]]

    extend(0)
    return solutions


def scalar_matrix(spec: FieldSpec, rows: Sequence[Sequence[Number | Scalar]]) -> list[list[Scalar]]:
    return [[v if isinstance(v, Scalar) else spec.from_rational(v) for v in row] for row in rows]
