"""Shared test utilities: definition-level oracles (kept independent of the
library's computation routes), brute-force axiom checks, and the seeded
fuzz family of small coalgebras.

The fuzz envelope matches what the analysis pipeline documents: direct sums
of pointed pieces (group algebras of small cyclic groups, the
four-dimensional example) may be conjugated by arbitrary invertible
rational base changes; the six-dimensional dual of the symmetric-group
algebra is only relabelled along a group automorphism.
"""

from __future__ import annotations

import random
from fractions import Fraction

from blocksys.coalgebra import CoalgebraData
from blocksys.linalg import Matrix, Subspace, inverse, kron, preimage, subspace_sum


# ---------------------------------------------------------------------------
# brute-force coalgebra axioms (independent of validate_coalgebra)
# ---------------------------------------------------------------------------

def axioms_hold(field, dim: int, delta: dict, counit) -> bool:
    """Direct evaluation of coassociativity and the counit laws on basis
    elements, by explicit summation over all index tuples."""
    zero = field.zero

    def d(i, j, k):
        return delta.get((i, j, k), zero)

    for i in range(dim):
        for a in range(dim):
            for b in range(dim):
                for c in range(dim):
                    left = sum((d(i, j, c) * d(j, a, b) for j in range(dim)), zero)
                    right = sum((d(i, a, j) * d(j, b, c) for j in range(dim)), zero)
                    if left != right:
                        return False
    for i in range(dim):
        for k in range(dim):
            left = sum((d(i, j, k) * counit[j] for j in range(dim)), zero)
            right = sum((d(i, k, j) * counit[j] for j in range(dim)), zero)
            want = field.one if i == k else zero
            if left != want or right != want:
                return False
    return True


# ---------------------------------------------------------------------------
# definition-level filtration oracle
# ---------------------------------------------------------------------------

def tensor_subspace(field, a: Subspace, b: Subspace) -> Subspace:
    """Span of all u (x) v, flattened as (j, k) -> j*dim + k."""
    n = a.ambient
    vecs = []
    for u in a.basis:
        for v in b.basis:
            vecs.append([u[j] * v[k] for j in range(n) for k in range(n)])
    return Subspace.from_vectors(field, n * n, vecs)


def wedge_chain(c: CoalgebraData, c0: Subspace) -> list[Subspace]:
    """The filtration computed straight from its definition: starting from a
    known degree-0 part, each next level is the preimage under the
    comultiplication of (C0 (x) C) + (C (x) previous level)."""
    field, n = c.field, c.dim
    d = c.delta_matrix()
    full = Subspace.full(field, n)
    left = tensor_subspace(field, c0, full)
    chain = [c0]
    while chain[-1].dim < n:
        w = subspace_sum(left, tensor_subspace(field, full, chain[-1]))
        nxt = preimage(d, w)
        if not nxt.contains_subspace(chain[-1]):
            raise AssertionError("definition-level filtration is not increasing")
        if nxt.dim == chain[-1].dim:
            break
        chain.append(nxt)
    return chain


# ---------------------------------------------------------------------------
# base changes and direct sums
# ---------------------------------------------------------------------------

def conjugate_coalgebra(c: CoalgebraData, p: Matrix) -> CoalgebraData:
    """The same coalgebra written in the basis whose i-th vector has old
    coordinates equal to the i-th column of p."""
    field, n = c.field, c.dim
    pinv = inverse(p)
    big = kron(pinv, pinv).mul(c.delta_matrix()).mul(p)
    delta = {}
    for col in range(n):
        for row in range(n * n):
            v = big.entries[row][col]
            if v:
                delta[(col, row // n, row % n)] = v
    counit = tuple(sum((c.counit[j] * p.entries[j][i] for j in range(n)), field.zero)
                   for i in range(n))
    return CoalgebraData.make(field, n, delta, counit)


def direct_sum(*parts: CoalgebraData) -> CoalgebraData:
    field = parts[0].field
    dim = sum(p.dim for p in parts)
    delta: dict = {}
    counit = []
    off = 0
    for p in parts:
        for (i, j, k), v in p.delta.items():
            delta[(i + off, j + off, k + off)] = v
        counit.extend(p.counit)
        off += p.dim
    return CoalgebraData.make(field, dim, delta, counit)


def random_unimodular(rng: random.Random, field, n: int) -> Matrix:
    """Product of random shears and swaps: always invertible."""
    rows = [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
    for _ in range(2 * n + 2):
        a, b = rng.randrange(n), rng.randrange(n)
        if a == b:
            continue
        if rng.random() < 0.3:
            rows[a], rows[b] = rows[b], rows[a]
        else:
            lam = field.coerce(Fraction(rng.randint(-2, 2)))
            rows[a] = [x + lam * y for x, y in zip(rows[a], rows[b])]
    return Matrix.from_rows(field, rows)


# ---------------------------------------------------------------------------
# the fuzz family
# ---------------------------------------------------------------------------

def fuzz_case(rng: random.Random) -> tuple[CoalgebraData, Subspace]:
    """One random small coalgebra (dim <= 6) with its known degree-0 part."""
    from blocksys.corpus import cyclic, dual_group_algebra, group_algebra, s3, sweedler

    if rng.random() < 0.2:
        base = dual_group_algebra(s3()).coalgebra
        field, n = base.field, base.dim
        # relabel along conjugation by a fixed group element: an automorphism
        table = s3()
        g = rng.randrange(6)
        ginv = next(h for h in range(6) if table[g][h] == table[0][0] and table[h][g] == table[0][0])
        perm = [table[table[g][s]][ginv] for s in range(6)]
        rows = [[field.one if perm[i] == j else field.zero for j in range(n)]
                for i in range(n)]
        p = Matrix.from_rows(field, rows)
        return conjugate_coalgebra(base, p), Subspace.full(field, n)

    parts = []
    c0_markers: list[tuple[int, list[int]]] = []  # (offset, local degree-0 coords)
    total = 0
    while True:
        remaining = 6 - total
        if remaining <= 0 or (parts and rng.random() < 0.3):
            break
        choices = ["point"]
        if remaining >= 2:
            choices += ["cyclic"]
        if remaining >= 4:
            choices += ["sweedler", "cyclic"]
        kind = rng.choice(choices)
        if kind == "point":
            part = group_algebra(cyclic(1)).coalgebra
            local = [0]
        elif kind == "cyclic":
            k = rng.randint(2, min(5, remaining))
            part = group_algebra(cyclic(k)).coalgebra
            local = list(range(k))
        else:
            part = sweedler().coalgebra
            local = [0, 2]  # the two group-like monomials
        c0_markers.append((total, local))
        parts.append(part)
        total += part.dim

    summed = direct_sum(*parts)
    field, n = summed.field, summed.dim
    c0_old = Subspace.from_vectors(
        field, n,
        [[field.one if j == off + loc else field.zero for j in range(n)]
         for off, local in c0_markers for loc in local])
    p = random_unimodular(rng, field, n)
    return conjugate_coalgebra(summed, p), preimage(p, c0_old)
