"""Exact linear algebra over a pluggable scalar field.

Vectors are coordinate tuples, matrices act on the left (y = M x), and
subspaces are canonicalized: the stored basis is the reduced row echelon
form of any spanning set, so two equal subspaces have equal
representations and ``==`` is decision procedure enough.

No floating point anywhere.  Scalars are Fractions or extension-field
elements from :mod:`blocksys.scalars`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import AmbientMismatch, ZeroArgument
from .scalars import QQ, ExtensionField, RationalField

Field = RationalField | ExtensionField


def gcd_nat(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise ZeroArgument("gcd_nat takes non-negative integers")
    return math.gcd(a, b)


def lcm_nat(a: int, b: int) -> int:
    if a < 1 or b < 1:
        raise ZeroArgument("lcm_nat takes positive integers")
    return math.lcm(a, b)


@dataclass(frozen=True)
class Matrix:
    field: Field
    rows: int
    cols: int
    entries: tuple[tuple, ...]  # row-major

    @staticmethod
    def from_rows(field: Field, rows: Sequence[Sequence]) -> "Matrix":
        tup = tuple(tuple(field.coerce(x) for x in row) for row in rows)
        ncols = len(tup[0]) if tup else 0
        if any(len(r) != ncols for r in tup):
            raise ValueError("ragged rows")
        return Matrix(field, len(tup), ncols, tup)

    @staticmethod
    def zeros(field: Field, rows: int, cols: int) -> "Matrix":
        z = field.zero
        return Matrix(field, rows, cols, tuple((z,) * cols for _ in range(rows)))

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return Matrix(field, n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.cols, self.rows,
                      tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)))

    def add(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise AmbientMismatch("matrix shapes differ")
        return Matrix(self.field, self.rows, self.cols,
                      tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries)))

    def sub(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise AmbientMismatch("matrix shapes differ")
        return Matrix(self.field, self.rows, self.cols,
                      tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries)))

    def scale(self, c) -> "Matrix":
        c = self.field.coerce(c)
        return Matrix(self.field, self.rows, self.cols,
                      tuple(tuple(c * a for a in row) for row in self.entries))

    def mul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise AmbientMismatch("inner dimensions differ")
        ocols = [other.col(j) for j in range(other.cols)]
        z = self.field.zero
        out = []
        for i in range(self.rows):
            ri = self.entries[i]
            out.append(tuple(_dot(ri, cj, z) for cj in ocols))
        return Matrix(self.field, self.rows, other.cols, tuple(out))

    def apply(self, vec: Sequence) -> tuple:
        if len(vec) != self.cols:
            raise AmbientMismatch("vector length != matrix cols")
        z = self.field.zero
        return tuple(_dot(row, vec, z) for row in self.entries)

    def trace(self):
        if self.rows != self.cols:
            raise AmbientMismatch("trace of a non-square matrix")
        t = self.field.zero
        for i in range(self.rows):
            t = t + self.entries[i][i]
        return t

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))


def _dot(a: Sequence, b: Sequence, zero):
    acc = zero
    for x, y in zip(a, b):
        if x and y:
            acc = acc + x * y
    return acc


def _rref_rows(field: Field, rows: list[list]) -> tuple[list[list], list[int]]:
    """In place Gauss-Jordan; returns (reduced rows, pivot columns)."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        if lead != field.one:
            inv_row = rows[r]
            rows[r] = [x / lead for x in inv_row]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rref(m: Matrix) -> tuple[Matrix, int, tuple[int, ...]]:
    """Reduced row echelon form; returns (rref matrix, rank, pivot columns)."""
    rows = [list(r) for r in m.entries]
    rows, pivots = _rref_rows(m.field, rows)
    red = Matrix(m.field, m.rows, m.cols, tuple(tuple(r) for r in rows))
    return red, len(pivots), tuple(pivots)


@dataclass(frozen=True)
class Subspace:
    """A subspace of field^ambient, stored as an RREF basis (no zero rows).

    Equal subspaces have identical representations, so dataclass equality
    is subspace equality.
    """

    field: Field
    ambient: int
    basis: tuple[tuple, ...]

    @staticmethod
    def from_vectors(field: Field, ambient: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows = []
        for v in vectors:
            v = list(v)
            if len(v) != ambient:
                raise AmbientMismatch(f"vector of length {len(v)} in ambient {ambient}")
            rows.append([field.coerce(x) for x in v])
        rows, pivots = _rref_rows(field, rows)
        basis = tuple(tuple(r) for r in rows[: len(pivots)])
        return Subspace(field, ambient, basis)

    @staticmethod
    def zero(field: Field, ambient: int) -> "Subspace":
        return Subspace(field, ambient, ())

    @staticmethod
    def full(field: Field, ambient: int) -> "Subspace":
        return Subspace.from_vectors(field, ambient, Matrix.identity(field, ambient).entries)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vec: Sequence) -> bool:
        if len(vec) != self.ambient:
            raise AmbientMismatch("vector length != ambient")
        v = [self.field.coerce(x) for x in vec]
        for row in self.basis:
            c = None
            for j, e in enumerate(row):
                if e:
                    c = j
                    break
            if c is None:
                continue
            if v[c]:
                f = v[c]
                v = [a - f * b for a, b in zip(v, row)]
        return all(not x for x in v)

    def contains_subspace(self, other: "Subspace") -> bool:
        if self.ambient != other.ambient:
            raise AmbientMismatch("ambient dimensions differ")
        return all(self.contains(v) for v in other.basis)

    def matrix(self) -> Matrix:
        """Basis vectors as rows."""
        return Matrix(self.field, len(self.basis), self.ambient, self.basis)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient != b.ambient:
        raise AmbientMismatch("ambient dimensions differ")
    return Subspace.from_vectors(a.field, a.ambient, list(a.basis) + list(b.basis))


def kernel(m: Matrix) -> Subspace:
    """Right null space {x : M x = 0}, echelon-normalized."""
    red, rank, pivots = rref(m)
    pivset = set(pivots)
    free = [c for c in range(m.cols) if c not in pivset]
    z, o = m.field.zero, m.field.one
    vecs = []
    for fc in free:
        v = [z] * m.cols
        v[fc] = o
        for r, pc in enumerate(pivots):
            v[pc] = -red.entries[r][fc]
        vecs.append(v)
    return Subspace.from_vectors(m.field, m.cols, vecs)


def image(m: Matrix, s: Subspace | None = None) -> Subspace:
    """Column-space image: span{M v : v in s} (s defaults to the full domain)."""
    if s is None:
        vecs = [m.col(j) for j in range(m.cols)]
    else:
        if s.ambient != m.cols:
            raise AmbientMismatch("subspace ambient != matrix cols")
        vecs = [m.apply(v) for v in s.basis]
    return Subspace.from_vectors(m.field, m.rows, vecs)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection of two subspaces of the same ambient space."""
    if a.ambient != b.ambient:
        raise AmbientMismatch("ambient dimensions differ")
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(a.field, a.ambient)
    # solve x*A - y*B = 0 over coefficient vectors (x, y); columns of the
    # stacked matrix are the basis vectors of a and b
    cols = [list(v) for v in a.basis] + [list(v) for v in b.basis]
    m = Matrix(a.field, a.ambient, len(cols),
               tuple(tuple(cols[j][i] for j in range(len(cols))) for i in range(a.ambient)))
    ker = kernel(m)
    vecs = []
    for coeff in ker.basis:
        v = [a.field.zero] * a.ambient
        for c, bas in zip(coeff[: a.dim], a.basis):
            if c:
                v = [x + c * y for x, y in zip(v, bas)]
        vecs.append(v)
    return Subspace.from_vectors(a.field, a.ambient, vecs)


def annihilator(s: Subspace) -> Subspace:
    """Functionals vanishing on s, via the dot pairing <f, v> = sum f_i v_i."""
    if s.dim == 0:
        return Subspace.full(s.field, s.ambient)
    return kernel(s.matrix())


def preimage(m: Matrix, w: Subspace) -> Subspace:
    """{x : M x in w}.  w lives in the codomain of m."""
    if w.ambient != m.rows:
        raise AmbientMismatch("subspace ambient != matrix rows")
    ann = annihilator(w)
    if ann.dim == 0:
        return Subspace.full(m.field, m.cols)
    return kernel(Matrix(m.field, ann.dim, w.ambient, ann.basis).mul(m))


def solve(m: Matrix, b: Sequence) -> tuple | None:
    """One solution x of M x = b, or None if inconsistent."""
    if len(b) != m.rows:
        raise AmbientMismatch("rhs length != matrix rows")
    aug_rows = [list(r) + [m.field.coerce(x)] for r, x in zip(m.entries, b)]
    rows, pivots = _rref_rows(m.field, aug_rows)
    if m.cols in pivots:
        return None
    z = m.field.zero
    x = [z] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][m.cols]
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise AmbientMismatch("inverse of a non-square matrix")
    n = m.rows
    ident = Matrix.identity(m.field, n)
    aug = [list(m.entries[i]) + list(ident.entries[i]) for i in range(n)]
    rows, pivots = _rref_rows(m.field, aug)
    if len(pivots) != n or any(p >= n for p in pivots):
        raise AmbientMismatch("matrix is singular")
    return Matrix(m.field, n, n, tuple(tuple(rows[i][n:]) for i in range(n)))


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product, consistent with index flattening (i, j) -> i * cols_b + j."""
    out = []
    for i in range(a.rows):
        for k in range(b.rows):
            row = []
            for j in range(a.cols):
                aij = a.entries[i][j]
                row.extend(aij * x for x in b.entries[k])
            out.append(tuple(row))
    return Matrix(a.field, a.rows * b.rows, a.cols * b.cols, tuple(out))


def quotient_complement(field: Field, ambient: int, sub: Subspace) -> list[int]:
    """Coordinates of a complement to sub: the non-pivot columns of its RREF basis.

    The unit vectors at those coordinates descend to a basis of the quotient.
    """
    if sub.ambient != ambient:
        raise AmbientMismatch("ambient dimensions differ")
    pivots = set()
    for row in sub.basis:
        for j, e in enumerate(row):
            if e:
                pivots.add(j)
                break
    return [j for j in range(ambient) if j not in pivots]


def coordinates_in_basis(field: Field, basis: Sequence[Sequence], vec: Sequence) -> tuple | None:
    """Coordinates of vec in the given (independent) spanning set, or None."""
    cols = [list(b) for b in basis]
    amb = len(vec)
    m = Matrix(field, amb, len(cols), tuple(tuple(cols[j][i] for j in range(len(cols))) for i in range(amb)))
    return solve(m, vec)


def minimal_polynomial(field: Field, mul: Callable[[tuple, tuple], tuple], unit: tuple, a: tuple) -> list:
    """Minimal polynomial (monic, coeffs low to high) of a under an
    associative product with the given unit, computed from the first
    linear dependence among 1, a, a^2, ...
    """
    powers = [unit]
    while True:
        nxt = mul(powers[-1], a)
        coeff = coordinates_in_basis(field, powers, nxt)
        if coeff is not None:
            return [-c for c in coeff] + [field.one]
        powers.append(nxt)
        if len(powers) > len(unit) + 1:
            raise AmbientMismatch("power sequence failed to close; product not associative?")
