"""Coalgebras, Hopf algebras, and their duals as exact structure constants.

Conventions, fixed once and used everywhere:

* basis indices are 0-based;
* comultiplication   Delta(e_i) = sum_{j,k} delta[i,j,k] e_j (x) e_k,
  stored sparsely (missing key = zero);
* multiplication     e_i e_j    = sum_k  mult[i,j,k] e_k;
* the antipode is a matrix whose column i holds the coordinates of S(e_i);
* tensor coordinates flatten as (j, k) -> j * dim + k.

The scalar field may be Q or a cyclotomic extension; dimensions always
count over the working field.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Mapping, Sequence

from .errors import AmbientMismatch
from .linalg import Field, Matrix
from .scalars import QQ

SparseTensor = dict[tuple[int, int, int], object]


@dataclass(frozen=True)
class Violation:
    axiom: str
    where: tuple
    detail: str = ""

    def render(self) -> str:
        msg = f"{self.axiom} at {self.where}"
        return f"{msg}: {self.detail}" if self.detail else msg


@dataclass
class ValidationReport:
    violations: list[Violation] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, axiom: str, where: tuple, detail: str = "") -> None:
        self.violations.append(Violation(axiom, where, detail))

    def render(self) -> str:
        if self.ok:
            return "valid"
        return "\n".join(v.render() for v in self.violations)


def _clean_sparse(field: Field, raw: Mapping[tuple[int, int, int], object], dim: int, name: str) -> SparseTensor:
    out: SparseTensor = {}
    for key, val in raw.items():
        i, j, k = key
        if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
            raise AmbientMismatch(f"{name} index {key} out of range for dim {dim}")
        v = field.coerce(val)
        if v:
            out[(i, j, k)] = v
    return out


@dataclass(frozen=True)
class CoalgebraData:
    """A finite-dimensional coalgebra given by structure constants."""

    field: Field
    dim: int
    delta: SparseTensor
    counit: tuple

    @staticmethod
    def make(field: Field, dim: int, delta: Mapping[tuple[int, int, int], object],
             counit: Sequence) -> "CoalgebraData":
        if len(counit) != dim:
            raise AmbientMismatch("counit length != dim")
        return CoalgebraData(field, dim, _clean_sparse(field, delta, dim, "delta"),
                             tuple(field.coerce(x) for x in counit))

    def delta_matrix(self) -> Matrix:
        """Delta as a dim^2 x dim matrix, rows indexed by flattened (j, k)."""
        n = self.dim
        z = self.field.zero
        rows = [[z] * n for _ in range(n * n)]
        for (i, j, k), v in self.delta.items():
            rows[j * n + k][i] = v
        return Matrix(self.field, n * n, n, tuple(tuple(r) for r in rows))

    def delta_of(self, x: Sequence) -> dict[tuple[int, int], object]:
        """Delta(x) as a sparse (j, k) -> coefficient map."""
        out: dict[tuple[int, int], object] = {}
        for (i, j, k), v in self.delta.items():
            if x[i]:
                key = (j, k)
                acc = out.get(key)
                term = x[i] * v
                out[key] = term if acc is None else acc + term
        return {k: v for k, v in out.items() if v}

    def counit_of(self, x: Sequence):
        acc = self.field.zero
        for e, xi in zip(self.counit, x):
            if e and xi:
                acc = acc + e * xi
        return acc


@dataclass(frozen=True)
class HopfData:
    """CoalgebraData plus multiplication, unit, and antipode."""

    coalgebra: CoalgebraData
    mult: SparseTensor
    unit: tuple
    antipode: Matrix

    @staticmethod
    def make(field: Field, dim: int, delta: Mapping, counit: Sequence, mult: Mapping,
             unit: Sequence, antipode: Sequence[Sequence]) -> "HopfData":
        co = CoalgebraData.make(field, dim, delta, counit)
        if len(unit) != dim:
            raise AmbientMismatch("unit length != dim")
        s = Matrix.from_rows(field, antipode)
        if s.rows != dim or s.cols != dim:
            raise AmbientMismatch("antipode must be dim x dim")
        return HopfData(co, _clean_sparse(field, mult, dim, "mult"),
                        tuple(field.coerce(x) for x in unit), s)

    @property
    def field(self) -> Field:
        return self.coalgebra.field

    @property
    def dim(self) -> int:
        return self.coalgebra.dim

    @property
    def delta(self) -> SparseTensor:
        return self.coalgebra.delta

    @property
    def counit(self) -> tuple:
        return self.coalgebra.counit

    def mult_vec(self, x: Sequence, y: Sequence) -> tuple:
        n = self.dim
        z = self.field.zero
        out = [z] * n
        for (i, j, k), v in self.mult.items():
            if x[i] and y[j]:
                out[k] = out[k] + x[i] * y[j] * v
        return tuple(out)

    def left_mult_matrix(self, x: Sequence) -> Matrix:
        """L_x with column j = coordinates of x * e_j."""
        n = self.dim
        z = self.field.zero
        cols = [[z] * n for _ in range(n)]
        for (i, j, k), v in self.mult.items():
            if x[i]:
                cols[j][k] = cols[j][k] + x[i] * v
        return Matrix(self.field, n, n, tuple(tuple(cols[j][i] for j in range(n)) for i in range(n)))

    def right_mult_matrix(self, x: Sequence) -> Matrix:
        """R_x with column i = coordinates of e_i * x."""
        n = self.dim
        z = self.field.zero
        cols = [[z] * n for _ in range(n)]
        for (i, j, k), v in self.mult.items():
            if x[j]:
                cols[i][k] = cols[i][k] + v * x[j]
        return Matrix(self.field, n, n, tuple(tuple(cols[j][i] for j in range(n)) for i in range(n)))


@dataclass(frozen=True)
class DualAlgebra:
    """The convolution algebra C^* in the dual basis.

    (e^a e^b)(e_k) = delta[k,a,b], unit = the counit vector.
    """

    field: Field
    dim: int
    mult: SparseTensor  # (a, b, k) -> coefficient of e^k in e^a e^b
    unit: tuple

    def mult_vec(self, f: Sequence, g: Sequence) -> tuple:
        n = self.dim
        z = self.field.zero
        out = [z] * n
        for (a, b, k), v in self.mult.items():
            if f[a] and g[b]:
                out[k] = out[k] + f[a] * g[b] * v
        return tuple(out)

    def left_mult_matrix(self, f: Sequence) -> Matrix:
        n = self.dim
        z = self.field.zero
        cols = [[z] * n for _ in range(n)]
        for (a, b, k), v in self.mult.items():
            if f[a]:
                cols[b][k] = cols[b][k] + f[a] * v
        return Matrix(self.field, n, n, tuple(tuple(cols[j][i] for j in range(n)) for i in range(n)))


def dual_algebra(c: CoalgebraData) -> DualAlgebra:
    mult: SparseTensor = {}
    for (k, a, b), v in c.delta.items():
        mult[(a, b, k)] = v
    return DualAlgebra(c.field, c.dim, mult, c.counit)


def validate_coalgebra(c: CoalgebraData) -> ValidationReport:
    """Check coassociativity and both counit laws; list every violation."""
    report = ValidationReport()
    n = c.dim
    by_first: dict[int, list[tuple[int, int, object]]] = {}
    for (i, j, k), v in c.delta.items():
        by_first.setdefault(i, []).append((j, k, v))

    # coassociativity: sum_j d[i,j,c] d[j,a,b] = sum_k d[i,a,k] d[k,b,c]
    lhs: dict[tuple[int, int, int, int], object] = {}
    rhs: dict[tuple[int, int, int, int], object] = {}
    for (i, j, cc), v in c.delta.items():
        for (a, b, w) in by_first.get(j, ()):
            key = (i, a, b, cc)
            acc = lhs.get(key)
            term = v * w
            lhs[key] = term if acc is None else acc + term
    for (i, a, k), v in c.delta.items():
        for (b, cc, w) in by_first.get(k, ()):
            key = (i, a, b, cc)
            acc = rhs.get(key)
            term = v * w
            rhs[key] = term if acc is None else acc + term
    for key in sorted(set(lhs) | set(rhs)):
        l = lhs.get(key, c.field.zero)
        r = rhs.get(key, c.field.zero)
        if l != r:
            report.add("coassociativity", key, f"(Delta x id)Delta = {l}, (id x Delta)Delta = {r}")

    # counit laws: (eps x id)Delta = id = (id x eps)Delta
    left = [[c.field.zero] * n for _ in range(n)]
    right = [[c.field.zero] * n for _ in range(n)]
    for (i, j, k), v in c.delta.items():
        if c.counit[j]:
            left[i][k] = left[i][k] + c.counit[j] * v
        if c.counit[k]:
            right[i][j] = right[i][j] + v * c.counit[k]
    for i in range(n):
        for k in range(n):
            want = c.field.one if i == k else c.field.zero
            if left[i][k] != want:
                report.add("counit-left", (i, k), f"got {left[i][k]}")
            if right[i][k] != want:
                report.add("counit-right", (i, k), f"got {right[i][k]}")
    return report


def validate_hopf(h: HopfData) -> ValidationReport:
    """Full axiom check: algebra, coalgebra, bialgebra compatibility, antipode."""
    report = validate_coalgebra(h.coalgebra)
    n = h.dim
    fz = h.field.zero

    by_first: dict[int, list[tuple[int, int, object]]] = {}
    for (i, j, k), v in h.mult.items():
        by_first.setdefault(i, []).append((j, k, v))

    # associativity: (e_i e_j) e_k = e_i (e_j e_k)
    by_second: dict[int, list[tuple[int, int, object]]] = {}
    for (i, j, k), v in h.mult.items():
        by_second.setdefault(j, []).append((i, k, v))
    lhs: dict[tuple[int, int, int, int], object] = {}
    rhs: dict[tuple[int, int, int, int], object] = {}
    for (i, j, m), v in h.mult.items():
        for (k2, out, w) in by_first.get(m, ()):
            key = (i, j, k2, out)
            acc = lhs.get(key)
            lhs[key] = v * w if acc is None else acc + v * w
    for (j, k2, m), v in h.mult.items():
        for (i, out, w) in by_second.get(m, ()):
            key = (i, j, k2, out)
            acc = rhs.get(key)
            rhs[key] = w * v if acc is None else acc + w * v
    for key in sorted(set(lhs) | set(rhs)):
        if lhs.get(key, fz) != rhs.get(key, fz):
            report.add("associativity", key,
                       f"(xy)z = {lhs.get(key, fz)}, x(yz) = {rhs.get(key, fz)}")

    # unit laws
    for j in range(n):
        e_j = tuple(h.field.one if t == j else fz for t in range(n))
        left = h.mult_vec(h.unit, e_j)
        right = h.mult_vec(e_j, h.unit)
        if left != e_j:
            report.add("unit-left", (j,), f"1 * e_{j} = {left}")
        if right != e_j:
            report.add("unit-right", (j,), f"e_{j} * 1 = {right}")

    # bialgebra: Delta and eps are algebra maps; Delta(1) = 1 x 1, eps(1) = 1
    co = h.coalgebra
    unit_delta = co.delta_of(h.unit)
    expect_unit = {}
    for j in range(n):
        for k in range(n):
            v = h.unit[j] * h.unit[k]
            if v:
                expect_unit[(j, k)] = v
    if unit_delta != expect_unit:
        report.add("delta-unit", (), "Delta(1) != 1 x 1")
    if co.counit_of(h.unit) != h.field.one:
        report.add("counit-unit", (), f"eps(1) = {co.counit_of(h.unit)}")

    basis = [tuple(h.field.one if t == i else fz for t in range(n)) for i in range(n)]
    deltas = [co.delta_of(b) for b in basis]
    for i in range(n):
        for j in range(n):
            prod = h.mult_vec(basis[i], basis[j])
            want = co.delta_of(prod)
            got: dict[tuple[int, int], object] = {}
            # Delta(e_i) Delta(e_j) computed through the tensor-square product
            for (a, b), v in deltas[i].items():
                for (cc, d), w in deltas[j].items():
                    first = h.mult_vec(basis[a], basis[cc])
                    second = h.mult_vec(basis[b], basis[d])
                    coef = v * w
                    for p in range(n):
                        if not first[p]:
                            continue
                        for q in range(n):
                            if not second[q]:
                                continue
                            key = (p, q)
                            term = coef * first[p] * second[q]
                            acc = got.get(key)
                            got[key] = term if acc is None else acc + term
            got = {k: v for k, v in got.items() if v}
            if got != want:
                report.add("delta-multiplicative", (i, j), "Delta(xy) != Delta(x)Delta(y)")
            eps_prod = co.counit_of(prod)
            if eps_prod != co.counit[i] * co.counit[j]:
                report.add("counit-multiplicative", (i, j),
                           f"eps(xy) = {eps_prod}, eps(x)eps(y) = {co.counit[i] * co.counit[j]}")

    # antipode: m(S x id)Delta = eta eps = m(id x S)Delta
    for i in range(n):
        left_acc = [fz] * n
        right_acc = [fz] * n
        for (j, k), v in deltas[i].items():
            sx = tuple(h.antipode.entries[t][j] for t in range(n))
            term = h.mult_vec(sx, basis[k])
            left_acc = [p + v * q for p, q in zip(left_acc, term)]
            sy = tuple(h.antipode.entries[t][k] for t in range(n))
            term2 = h.mult_vec(basis[j], sy)
            right_acc = [p + v * q for p, q in zip(right_acc, term2)]
        want_vec = [co.counit[i] * u for u in h.unit]
        if left_acc != want_vec:
            report.add("antipode-left", (i,), f"sum S(x1)x2 = {tuple(left_acc)}")
        if right_acc != want_vec:
            report.add("antipode-right", (i,), f"sum x1 S(x2) = {tuple(right_acc)}")
    return report
