"""Structural rules on analyzed block systems, plus negative controls.

Each negative control takes a genuine example, corrupts one facet of the
analysis (or the antipode), and checks that exactly the right rule fails
with a witness naming the corruption.
"""

import pytest

from blocksys.coalgebra import HopfData
from blocksys.corpus import (cyclic, dual_group_algebra, group_algebra, s3,
                             sweedler, taft)
from blocksys.filtration import analyze
from blocksys.linalg import Matrix
from blocksys.rules import (run_all_rules, verify_chain_and_symmetry,
                            verify_group_and_antipode_stability,
                            verify_group_order_divisibility,
                            verify_necessary_blocks_and_top_line)

_MAKERS = {
    "sweedler": sweedler,
    "taft3": lambda: taft(3),
    "taft4": lambda: taft(4),
    "QS3": lambda: group_algebra(s3()),
    "QC4": lambda: group_algebra(cyclic(4)),
    "dualS3": lambda: dual_group_algebra(s3()),
}


def _report_map(reports):
    return {r.rule_id: r for r in reports}


def test_all_rules_pass_on_examples():
    for name, maker in _MAKERS.items():
        h = maker()
        reports = run_all_rules(h)
        assert len(reports) == 4, name
        for r in reports:
            assert r.ok, (name, r.rule_id, r.details)
        ids = {r.rule_id for r in reports}
        assert ids == {
            "group-and-antipode-stability",
            "group-order-divisibility",
            "chain-and-symmetry",
            "necessary-blocks-and-top-line",
        }, name


def test_precomputed_analysis_is_accepted():
    h = sweedler()
    an = analyze(h)
    assert all(r.ok for r in run_all_rules(h, an))


def test_not_applicable_note_for_skew_primitives_and_cosemisimple():
    for name in ("sweedler", "QS3"):
        h = _MAKERS[name]()
        rep = _report_map(run_all_rules(h))["necessary-blocks-and-top-line"]
        assert rep.verdict == "pass", name
        assert "not applicable" in rep.details, name


def test_stability_fails_on_corrupted_graded_dimensions():
    h = sweedler()
    an = analyze(h)
    an.blocks.q_dims[(1, 0, 1)] = 5
    rep = verify_group_and_antipode_stability(h, an)
    assert not rep.ok
    assert "image" in rep.details


def test_stability_fails_on_zero_antipode():
    h = sweedler()
    broken = HopfData(h.coalgebra, h.mult, h.unit,
                      Matrix.zeros(h.coalgebra.field, 4, 4))
    rep = verify_group_and_antipode_stability(broken, analyze(broken))
    assert not rep.ok
    assert "no simple subcoalgebra" in rep.details


def test_divisibility_fails_on_odd_block():
    h = sweedler()
    an = analyze(h)
    an.blocks.block_dims[(1, 1, 1)] = 3
    rep = verify_group_order_divisibility(h, an)
    assert not rep.ok
    assert "does not divide" in rep.details


def test_mirror_symmetry_fails_on_one_sided_block():
    h = sweedler()
    an = analyze(h)
    an.blocks.block_dims[(1, 1, 2)] = 2
    rep = verify_chain_and_symmetry(h, an)
    assert not rep.ok
    assert "mirror" in rep.details


def test_chain_fails_on_unreachable_degree():
    h = sweedler()
    an = analyze(h)
    an.blocks.q_dims[(3, 0, 0)] = 1
    rep = verify_chain_and_symmetry(h, an)
    assert not rep.ok
    assert "no component sigma" in rep.details


def test_top_line_fails_on_wrong_top_dimension():
    h = sweedler()
    an = analyze(h)
    an.blocks.block_dims[(1, 1, 1)] = 4
    rep = verify_necessary_blocks_and_top_line(h, an)
    assert not rep.ok
    assert "expected the group order" in rep.details


def test_necessary_blocks_fail_when_interior_line_removed():
    h = sweedler()
    an = analyze(h)
    del an.blocks.block_dims[(1, 1, 1)]
    rep = verify_necessary_blocks_and_top_line(h, an)
    assert not rep.ok
    assert "necessary blocks missing" in rep.details


def test_rule_report_ok_semantics():
    h = sweedler()
    for rep in run_all_rules(h):
        assert rep.verdict in ("pass", "fail", "not-applicable")
        assert rep.ok == (rep.verdict != "fail")
        assert rep.details  # every report explains itself
