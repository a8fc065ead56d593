"""Structure-constant containers, validators, and the dual algebra."""

import pytest

from helpers import axioms_hold
from blocksys.coalgebra import (CoalgebraData, HopfData, dual_algebra,
                                validate_coalgebra, validate_hopf)
from blocksys.corpus import (cyclic, dual_group_algebra, group_algebra, s3,
                             sweedler, taft)
from blocksys.linalg import Matrix


def _members_small():
    return [
        ("QC2", group_algebra(cyclic(2))),
        ("QC3", group_algebra(cyclic(3))),
        ("QC4", group_algebra(cyclic(4))),
        ("dualC2", dual_group_algebra(cyclic(2))),
        ("dualC3", dual_group_algebra(cyclic(3))),
        ("sweedler", sweedler()),
    ]


def test_validators_accept_corpus():
    for name, h in _members_small() + [("taft3", taft(3)), ("taft4", taft(4)),
                                       ("QS3", group_algebra(s3())),
                                       ("dualS3", dual_group_algebra(s3()))]:
        assert validate_coalgebra(h.coalgebra).ok, name
        assert validate_hopf(h).ok, name


def test_delta_and_counit_conventions():
    h = group_algebra(cyclic(3))
    c = h.coalgebra
    for i in range(3):
        e = [c.field.one if j == i else c.field.zero for j in range(3)]
        assert c.delta_of(e) == {(i, i): c.field.one}
        assert c.counit_of(e) == c.field.one


def test_dual_algebra_is_transposed_delta():
    c = sweedler().coalgebra
    a = dual_algebra(c)
    assert a.dim == c.dim
    for (x, y, k), v in a.mult.items():
        assert c.delta.get((k, x, y)) == v
    for (k, x, y), v in c.delta.items():
        assert a.mult.get((x, y, k)) == v


def test_single_mutation_detection_exhaustive_dim_le_4():
    """Adding 1 to any single comultiplication structure constant is flagged
    invalid unless the mutated constants genuinely satisfy the axioms,
    checked against an independent brute-force evaluator."""
    for name, h in _members_small():
        c = h.coalgebra
        n = c.dim
        if n > 4:
            continue
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    delta = dict(c.delta)
                    delta[(i, j, k)] = delta.get((i, j, k), c.field.zero) + c.field.one
                    mutated = CoalgebraData.make(c.field, n, delta, c.counit)
                    report = validate_coalgebra(mutated)
                    truth = axioms_hold(c.field, n, mutated.delta, mutated.counit)
                    assert report.ok == truth, (name, i, j, k)


def test_counit_mutation_detected():
    c = sweedler().coalgebra
    counit = list(c.counit)
    counit[0] = counit[0] + c.field.one
    mutated = CoalgebraData.make(c.field, c.dim, c.delta, counit)
    assert not validate_coalgebra(mutated).ok


def test_hopf_antipode_mutation_detected():
    h = sweedler()
    n = h.coalgebra.dim
    bad = HopfData(h.coalgebra, h.mult, h.unit,
                   Matrix.zeros(h.coalgebra.field, n, n))
    assert not validate_hopf(bad).ok


def test_mult_matrices_agree_with_mult_vec():
    h = sweedler()
    f = h.coalgebra.field
    n = h.coalgebra.dim
    for gi in range(n):
        g = [f.one if i == gi else f.zero for i in range(n)]
        lm = h.left_mult_matrix(g)
        rm = h.right_mult_matrix(g)
        for xi in range(n):
            x = [f.one if i == xi else f.zero for i in range(n)]
            assert list(lm.apply(x)) == list(h.mult_vec(g, x))
            assert list(rm.apply(x)) == list(h.mult_vec(x, g))
