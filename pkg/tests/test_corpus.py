"""Built-in example constructions."""

import pytest

from blocksys.coalgebra import validate_hopf
from blocksys.corpus import (corpus, cyclic, dual_group_algebra, group_algebra,
                             named_group, s3, sweedler, taft)
from blocksys.errors import UnsupportedParams


def test_group_algebra_cyclic3_all_group_like():
    h = group_algebra(cyclic(3))
    c = h.coalgebra
    assert c.dim == 3
    f = c.field
    for i in range(3):
        e = [f.one if j == i else f.zero for j in range(3)]
        assert c.delta_of(e) == {(i, i): f.one}
        assert c.counit_of(e) == f.one


def test_sweedler_is_smallest_taft():
    a, b = sweedler(), taft(2)
    assert a.coalgebra.dim == b.coalgebra.dim == 4
    assert a.coalgebra.delta == b.coalgebra.delta
    assert a.mult == b.mult


def test_taft_dimensions_and_fields():
    assert taft(2).coalgebra.dim == 4
    assert taft(3).coalgebra.dim == 9
    assert taft(4).coalgebra.dim == 16
    # n = 2 lives over plain rationals; 3 and 4 need a quadratic extension
    assert not hasattr(taft(2).coalgebra.field, "modulus")
    for n in (3, 4):
        modulus = taft(n).coalgebra.field.modulus
        assert len(modulus) == 3  # monic quadratic


def test_taft_unsupported():
    with pytest.raises(UnsupportedParams):
        taft(5)


def test_all_members_validate():
    for h in (sweedler(), taft(3), taft(4), group_algebra(s3()),
              dual_group_algebra(s3()), group_algebra(cyclic(4)),
              dual_group_algebra(cyclic(4))):
        assert validate_hopf(h).ok


def test_dispatcher_and_named_groups():
    assert corpus("sweedler").coalgebra.dim == 4
    assert corpus("taft", n=3).coalgebra.dim == 9
    assert corpus("group_algebra", group="cyclic:4").coalgebra.dim == 4
    assert corpus("dual_group_algebra", group="s3").coalgebra.dim == 6
    with pytest.raises(UnsupportedParams):
        corpus("nonsense")
    with pytest.raises(UnsupportedParams):
        named_group("dihedral:4")
    assert named_group("cyclic:5")[0] == [0, 1, 2, 3, 4]
