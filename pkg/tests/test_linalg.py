"""Exact linear algebra: unit checks plus seeded fuzz of the core identities."""

import random
from fractions import Fraction

import pytest

from blocksys.errors import AmbientMismatch
from blocksys.linalg import (Matrix, Subspace, annihilator, coordinates_in_basis,
                             image, intersect, inverse, kernel, kron,
                             minimal_polynomial, preimage, quotient_complement,
                             solve, subspace_sum)
from blocksys.scalars import RationalField, cyclotomic_field

QQ = RationalField()


def rand_matrix(rng, field, rows, cols, span=3):
    return Matrix.from_rows(field, [[field.coerce(Fraction(rng.randint(-span, span)))
                                     for _ in range(cols)] for _ in range(rows)])


def rand_subspace(rng, field, ambient):
    k = rng.randint(0, ambient)
    return Subspace.from_vectors(field, ambient,
                                 [[field.coerce(Fraction(rng.randint(-3, 3)))
                                   for _ in range(ambient)] for _ in range(k)])


def test_subspace_canonical_equality():
    a = Subspace.from_vectors(QQ, 3, [[1, 2, 3], [0, 1, 1]])
    b = Subspace.from_vectors(QQ, 3, [[1, 1, 2], [0, 1, 1], [2, 3, 5]])
    assert a == b
    assert a.dim == 2
    assert a.contains([3, 4, 7])
    assert not a.contains([0, 0, 1])


def test_rank_nullity_fuzz():
    rng = random.Random(101)
    for _ in range(60):
        m = rand_matrix(rng, QQ, rng.randint(1, 5), rng.randint(1, 5))
        assert kernel(m).dim + image(m).dim == m.cols
        for v in kernel(m).basis:
            assert all(not x for x in m.apply(v))


def test_image_of_subspace_and_preimage_fuzz():
    rng = random.Random(102)
    for _ in range(50):
        n = rng.randint(1, 4)
        m = rand_matrix(rng, QQ, n, n)
        s = rand_subspace(rng, QQ, n)
        w = rand_subspace(rng, QQ, n)
        img = image(m, s)
        for v in s.basis:
            assert img.contains(m.apply(v))
        pre = preimage(m, w)
        for v in pre.basis:
            assert w.contains(m.apply(v))
        # the preimage is as large as possible: it contains the kernel
        assert pre.contains_subspace(kernel(m))


def test_sum_intersection_dimension_formula_fuzz():
    rng = random.Random(103)
    for _ in range(60):
        n = rng.randint(1, 5)
        a = rand_subspace(rng, QQ, n)
        b = rand_subspace(rng, QQ, n)
        s = subspace_sum(a, b)
        i = intersect(a, b)
        assert s.dim + i.dim == a.dim + b.dim
        assert s.contains_subspace(a) and s.contains_subspace(b)
        assert a.contains_subspace(i) and b.contains_subspace(i)


def test_annihilator_duality_fuzz():
    rng = random.Random(104)
    for _ in range(40):
        n = rng.randint(1, 5)
        s = rand_subspace(rng, QQ, n)
        ann = annihilator(s)
        assert ann.dim == n - s.dim
        assert annihilator(ann) == s


def test_inverse_and_solve_fuzz():
    rng = random.Random(105)
    done = 0
    while done < 30:
        n = rng.randint(1, 4)
        m = rand_matrix(rng, QQ, n, n)
        if image(m).dim < n:
            continue
        done += 1
        minv = inverse(m)
        assert m.mul(minv).entries == Matrix.identity(QQ, n).entries
        rhs = [QQ.coerce(Fraction(rng.randint(-3, 3))) for _ in range(n)]
        x = solve(m, rhs)
        assert list(m.apply(x)) == rhs


def test_inverse_rejects_singular():
    m = Matrix.from_rows(QQ, [[1, 2], [2, 4]])
    with pytest.raises(AmbientMismatch):
        inverse(m)


def test_kron_mixed_product_fuzz():
    rng = random.Random(106)
    for _ in range(30):
        n, m = rng.randint(1, 3), rng.randint(1, 3)
        a = rand_matrix(rng, QQ, n, n)
        b = rand_matrix(rng, QQ, m, m)
        u = [QQ.coerce(Fraction(rng.randint(-2, 2))) for _ in range(n)]
        v = [QQ.coerce(Fraction(rng.randint(-2, 2))) for _ in range(m)]
        uv = [ui * vj for ui in u for vj in v]
        lhs = kron(a, b).apply(uv)
        au, bv = a.apply(u), b.apply(v)
        rhs = [x * y for x in au for y in bv]
        assert list(lhs) == rhs


def test_quotient_complement_and_coordinates():
    rng = random.Random(107)
    for _ in range(30):
        n = rng.randint(1, 5)
        s = rand_subspace(rng, QQ, n)
        coords_idx = quotient_complement(QQ, n, s)
        assert len(coords_idx) == n - s.dim
        unit_vecs = [[QQ.one if j == i else QQ.zero for j in range(n)]
                     for i in coords_idx]
        comp = Subspace.from_vectors(QQ, n, unit_vecs)
        assert intersect(s, comp).dim == 0
        assert subspace_sum(s, comp).dim == n
        basis = list(s.basis) + unit_vecs
        vec = [QQ.coerce(Fraction(rng.randint(-3, 3))) for _ in range(n)]
        coords = coordinates_in_basis(QQ, basis, vec)
        assert coords is not None
        rebuilt = [QQ.zero] * n
        for c, bvec in zip(coords, basis):
            rebuilt = [x + c * y for x, y in zip(rebuilt, bvec)]
        assert rebuilt == list(vec)
        # a unit vector at a non-pivot coordinate lies outside the subspace
        if 0 < s.dim < n:
            assert coordinates_in_basis(QQ, list(s.basis), unit_vecs[-1]) is None


def test_minimal_polynomial_annihilates():
    # companion-style element: multiplication by a matrix inside End(Q^n)
    rng = random.Random(108)
    for _ in range(10):
        n = rng.randint(1, 3)
        mat = rand_matrix(rng, QQ, n, n)

        def mul(a, b):
            # interpret flat n*n vectors as matrices, multiply
            c = [[sum(a[i * n + t] * b[t * n + j] for t in range(n)) for j in range(n)]
                 for i in range(n)]
            return tuple(c[i][j] for i in range(n) for j in range(n))

        unit = tuple(QQ.one if i == j else QQ.zero for i in range(n) for j in range(n))
        a = tuple(mat.entries[i][j] for i in range(n) for j in range(n))
        coeffs = minimal_polynomial(QQ, mul, unit, a)
        acc = tuple(QQ.zero for _ in range(n * n))
        power = unit
        for c in coeffs:
            acc = tuple(x + c * y for x, y in zip(acc, power))
            power = mul(power, a)
        assert all(not x for x in acc)
        assert coeffs[-1] == QQ.one  # monic


def test_extension_field_arithmetic():
    k = cyclotomic_field(3)  # x^2 + x + 1
    z = k.gen
    assert z * z == -z - k.one
    assert z * z * z == k.one
    inv = k.one / z
    assert z * inv == k.one
    lifted = k.coerce(Fraction(2, 3))
    assert lifted + lifted == k.coerce(Fraction(4, 3))
    s = Subspace.from_vectors(k, 2, [[k.one, z]])
    assert s.dim == 1
    assert s.contains([z, z * z])  # scalar multiple by z
