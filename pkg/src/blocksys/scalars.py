"""Exact scalar arithmetic.

Everything downstream runs over an exact field.  Two kinds are supported:

* plain rationals, backed by ``fractions.Fraction``;
* a simple algebraic extension Q[x]/(m(x)) with m monic over Q, used for
  the cyclotomic fields Q(zeta_n) that some corpus members need.

Extension elements are stored as coordinate tuples in the power basis
``1, x, ..., x^(deg-1)``.  They implement the usual operator protocol and
coerce ints and Fractions on the fly, so the generic linear algebra in
:mod:`blocksys.linalg` works with either scalar kind unchanged.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

Rat = Fraction
ScalarLike = Union[int, Fraction, "Ext"]


def _poly_trim(cs: list[Fraction]) -> list[Fraction]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _poly_trim(out)


def _poly_divmod(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    # b must be nonzero; works over Q
    rem = list(a)
    _poly_trim(rem)
    db, lb = len(b) - 1, b[-1]
    quo = [Fraction(0)] * max(0, len(rem) - db)
    while len(rem) - 1 >= db and rem:
        shift = len(rem) - 1 - db
        c = rem[-1] / lb
        quo[shift] = c
        for i in range(db + 1):
            rem[shift + i] -= c * b[i]
        _poly_trim(rem)
    return _poly_trim(quo), rem


def _poly_xgcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[list[Fraction], list[Fraction], list[Fraction]]:
    """Return (g, u, v) with u*a + v*b = g, g monic (or zero)."""
    r0, r1 = _poly_trim(list(a)), _poly_trim(list(b))
    u0, u1 = [Fraction(1)], []
    v0, v1 = [], [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, _poly_trim([x - y for x, y in _zip_pad(u0, _poly_mul(q, u1))])
        v0, v1 = v1, _poly_trim([x - y for x, y in _zip_pad(v0, _poly_mul(q, v1))])
    if r0:
        lead = r0[-1]
        r0 = [c / lead for c in r0]
        u0 = [c / lead for c in u0]
        v0 = [c / lead for c in v0]
    return r0, u0, v0


def _zip_pad(a: Sequence[Fraction], b: Sequence[Fraction]):
    n = max(len(a), len(b))
    za = list(a) + [Fraction(0)] * (n - len(a))
    zb = list(b) + [Fraction(0)] * (n - len(b))
    return zip(za, zb)


class RationalField:
    """The field of rationals; scalars are fractions.Fraction."""

    degree = 1

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, x: ScalarLike) -> Fraction:
        if isinstance(x, Ext):
            if x.field.degree == 1 or all(c == 0 for c in x.coeffs[1:]):
                return x.coeffs[0] if x.coeffs else Fraction(0)
            raise TypeError("cannot coerce a proper extension element into Q")
        return Fraction(x)

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("RationalField")


QQ = RationalField()


class ExtensionField:
    """Q[x]/(m(x)) for a monic irreducible m over Q."""

    def __init__(self, modulus: Sequence[Fraction]):
        mod = [Fraction(c) for c in modulus]
        if not mod or mod[-1] != 1:
            raise ValueError("modulus must be monic")
        if len(mod) < 3:
            raise ValueError("use QQ for degree < 2")
        self.modulus: tuple[Fraction, ...] = tuple(mod)
        self.degree: int = len(mod) - 1

    @property
    def zero(self) -> "Ext":
        return Ext(self, (Fraction(0),) * self.degree)

    @property
    def one(self) -> "Ext":
        return Ext(self, (Fraction(1),) + (Fraction(0),) * (self.degree - 1))

    @property
    def gen(self) -> "Ext":
        cs = [Fraction(0)] * self.degree
        cs[1] = Fraction(1)
        return Ext(self, tuple(cs))

    def element(self, coeffs: Sequence[Fraction]) -> "Ext":
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > self.degree:
            _, rem = _poly_divmod(cs, list(self.modulus))
            cs = rem
        cs += [Fraction(0)] * (self.degree - len(cs))
        return Ext(self, tuple(cs))

    def coerce(self, x: ScalarLike) -> "Ext":
        if isinstance(x, Ext):
            if x.field is self or x.field == self:
                return x
            raise TypeError("extension element from a different field")
        return self.element([Fraction(x)])

    def __repr__(self) -> str:
        return f"QQ[x]/({self.modulus})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ExtensionField) and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash(self.modulus)


class Ext:
    """Element of an ExtensionField, coordinates in the power basis."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: ExtensionField, coeffs: tuple[Fraction, ...]):
        self.field = field
        self.coeffs = coeffs

    def _lift(self, other: ScalarLike) -> "Ext | None":
        if isinstance(other, Ext):
            if other.field == self.field:
                return other
            return None
        if isinstance(other, (int, Fraction)):
            return self.field.element([Fraction(other)])
        return None

    def __add__(self, other: ScalarLike):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Ext(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Ext(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other: ScalarLike):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Ext(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other: ScalarLike):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: ScalarLike):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        prod = _poly_mul(list(self.coeffs), list(o.coeffs))
        return self.field.element(prod)

    __rmul__ = __mul__

    def inverse(self) -> "Ext":
        if not self:
            raise ZeroDivisionError("division by zero extension element")
        g, u, _ = _poly_xgcd(list(self.coeffs), list(self.field.modulus))
        if len(g) != 1:
            raise ZeroDivisionError("element not invertible; modulus not irreducible?")
        return self.field.element([c / g[0] for c in u])

    def __truediv__(self, other: ScalarLike):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: ScalarLike):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __bool__(self) -> bool:
        return any(c != 0 for c in self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and all(c == 0 for c in self.coeffs[1:])
        if isinstance(other, Ext):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if all(c == 0 for c in self.coeffs[1:]):
            return hash(self.coeffs[0])
        return hash((self.field.modulus, self.coeffs))

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*w")
            else:
                terms.append(f"{c}*w^{i}")
        return " + ".join(terms) if terms else "0"


def cyclotomic_polynomial(n: int) -> list[Fraction]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    # Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d, computed by exact division
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            q, r = _poly_divmod(num, cyclotomic_polynomial(d))
            assert not r
            num = q
    return num


def cyclotomic_field(n: int) -> RationalField | ExtensionField:
    """Field containing a primitive n-th root of unity: Q for n <= 2."""
    if n in (1, 2):
        return QQ
    return ExtensionField(cyclotomic_polynomial(n))


def root_of_unity(n: int) -> ScalarLike:
    """A primitive n-th root of unity in cyclotomic_field(n)."""
    if n == 1:
        return Fraction(1)
    if n == 2:
        return Fraction(-1)
    return cyclotomic_field(n).gen


def format_rational(q: Fraction) -> str:
    return str(q)


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


def format_scalar(x: ScalarLike) -> str | list[str]:
    """Serialize a scalar: one "p/q" string over Q, a coordinate list over an extension."""
    if isinstance(x, Ext):
        return [format_rational(c) for c in x.coeffs]
    return format_rational(Fraction(x))


def parse_scalar(field: RationalField | ExtensionField, raw: str | list[str]) -> ScalarLike:
    if isinstance(raw, str):
        q = parse_rational(raw)
        return q if field.degree == 1 else field.coerce(q)
    if field.degree == 1:
        if len(raw) != 1:
            raise ValueError("coordinate list over Q must have length 1")
        return parse_rational(raw[0])
    if len(raw) != field.degree:
        raise ValueError(f"expected {field.degree} coordinates, got {len(raw)}")
    return field.element([parse_rational(c) for c in raw])
