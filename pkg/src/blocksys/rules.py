"""Machine verification of structural rules of a Hopf algebra's block system.

Each rule takes the Hopf structure plus a completed
:class:`~blocksys.filtration.CoalgebraAnalysis` and returns a
:class:`RuleReport` with verdict ``"pass"``, ``"fail"``, or
``"not-applicable"`` and a human-readable detail string (on failure the
details name a concrete witness).

The four rules:

* ``verify_group_and_antipode_stability`` — multiplying by a group-like on
  either side and applying the antipode each permute the simple
  subcoalgebras (preserving sizes), stabilise every filtration level, and
  leave the table of graded isotypic dimensions invariant (the antipode
  swaps the two component indices).  Only dimension statements are checked
  above degree zero: the degree-n pieces are canonical as subquotients,
  not as subspaces.
* ``verify_group_order_divisibility`` — the number of group-like elements
  divides the dimension of every block.
* ``verify_chain_and_symmetry`` — a nonzero degree-n piece forces chains of
  nonzero pieces at every intermediate bidegree (i, n-i); the block table
  is symmetric under swapping the two size indices; and a nonzero block
  with different left and right sizes forces nonzero blocks strictly above
  it in the same row and the same column.
* ``verify_necessary_blocks_and_top_line`` — the top nonzero entry of the
  (1,1) line has dimension exactly the group order; and, for a
  non-cosemisimple Hopf algebra whose degree-one (1,1) block vanishes (no
  nontrivial skew-primitives), the six necessary blocks exist, plus the
  spiral condition when the (1,1) line starts strictly below its top.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coalgebra import HopfData
from .filtration import CoalgebraAnalysis, analyze
from .linalg import Matrix, Subspace, image

__all__ = [
    "RuleReport",
    "run_all_rules",
    "verify_group_and_antipode_stability",
    "verify_group_order_divisibility",
    "verify_chain_and_symmetry",
    "verify_necessary_blocks_and_top_line",
]


@dataclass(frozen=True)
class RuleReport:
    rule_id: str
    verdict: str  # "pass" | "fail" | "not-applicable"
    details: str

    @property
    def ok(self) -> bool:
        return self.verdict != "fail"


def _component_permutation(an: CoalgebraAnalysis, m: Matrix,
                           label: str) -> list[int] | str:
    """The permutation sigma with m(D_tau) = D_sigma(tau), or a witness
    string when some image is not a simple subcoalgebra of the same size."""
    perm = []
    for s in an.simples:
        img = image(m, s.subspace)
        target = None
        for t in an.simples:
            if img == t.subspace:
                target = t.index
                break
        if target is None:
            return (f"{label} maps component {s.index} (size {s.size}, dim {s.subspace.dim}) "
                    f"to a {img.dim}-dimensional space that is no simple subcoalgebra")
        perm.append(target)
    if sorted(perm) != list(range(len(an.simples))):
        return f"{label} does not permute the components (images {perm})"
    return perm


def _check_q_invariance(an: CoalgebraAnalysis, left_perm: list[int],
                        right_perm: list[int], swap: bool, label: str) -> str | None:
    """Check dim Q[(n, tau, mu)] == dim Q[(n, sigma(tau), sigma(mu))]
    (indices swapped first when ``swap``), in both directions."""
    q = an.blocks.q_dims
    inv_left = [0] * len(left_perm)
    inv_right = [0] * len(right_perm)
    for i, p in enumerate(left_perm):
        inv_left[p] = i
    for i, p in enumerate(right_perm):
        inv_right[p] = i
    for (n, tau, mu), val in q.items():
        if swap:
            fwd = (n, left_perm[mu], right_perm[tau])
            bwd = (n, inv_right[mu], inv_left[tau])
        else:
            fwd = (n, left_perm[tau], right_perm[mu])
            bwd = (n, inv_left[tau], inv_right[mu])
        for key in (fwd, bwd):
            got = q.get(key, 0)
            if got != val:
                return (f"{label}: dim Q{(n, tau, mu)} = {val} but its image "
                        f"Q{key} has dimension {got}")
    return None


def verify_group_and_antipode_stability(h: HopfData,
                                        an: CoalgebraAnalysis) -> RuleReport:
    rule = "group-and-antipode-stability"
    problems: list[str] = []
    maps: list[tuple[Matrix, bool, str]] = []
    for gi, g in enumerate(an.group_likes):
        maps.append((h.left_mult_matrix(g), False, f"left multiplication by group-like #{gi}"))
        maps.append((h.right_mult_matrix(g), False, f"right multiplication by group-like #{gi}"))
    maps.append((h.antipode, True, "the antipode"))

    for m, swap, label in maps:
        perm = _component_permutation(an, m, label)
        if isinstance(perm, str):
            problems.append(perm)
            continue
        sizes = an.blocks.component_sizes
        for tau, sig in enumerate(perm):
            if sizes[tau] != sizes[sig]:
                problems.append(f"{label} maps a size-{sizes[tau]} component to size {sizes[sig]}")
        for lvl, c_n in enumerate(an.filtration.chain):
            if image(m, c_n) != c_n:
                problems.append(f"{label} does not stabilise filtration level {lvl}")
        bad = _check_q_invariance(an, perm, perm, swap, label)
        if bad is not None:
            problems.append(bad)
    if problems:
        return RuleReport(rule, "fail", "; ".join(problems))
    return RuleReport(rule, "pass",
                      f"{len(an.group_likes)} group-like(s) and the antipode permute "
                      f"{len(an.simples)} component(s), stabilise the filtration, and "
                      "preserve the graded dimension table")


def verify_group_order_divisibility(h: HopfData, an: CoalgebraAnalysis) -> RuleReport:
    rule = "group-order-divisibility"
    r = an.blocks.group_like_count
    if r < 1:
        return RuleReport(rule, "fail", "no group-like elements found (the unit is missing?)")
    for key, val in sorted(an.blocks.block_dims.items()):
        if val % r:
            return RuleReport(rule, "fail",
                              f"group order {r} does not divide dim block{key} = {val}")
    return RuleReport(rule, "pass",
                      f"group order {r} divides all {len(an.blocks.block_dims)} block dimension(s)")


def verify_chain_and_symmetry(h: HopfData, an: CoalgebraAnalysis) -> RuleReport:
    rule = "chain-and-symmetry"
    q = an.blocks.q_dims
    blocks = an.blocks.block_dims
    problems: list[str] = []

    for (n, tau, mu), val in sorted(q.items()):
        if n < 2:
            continue
        for i in range(1, n):
            if not any(q.get((i, tau, sig), 0) and q.get((n - i, sig, mu), 0)
                       for sig in range(len(an.simples))):
                problems.append(
                    f"dim Q{(n, tau, mu)} = {val} but no component sigma has "
                    f"Q{(i, tau, 'sigma')} and Q{(n - i, 'sigma', mu)} both nonzero")

    for (n, d1, d2), val in sorted(blocks.items()):
        if n >= 1 and blocks.get((n, d2, d1), 0) != val:
            problems.append(
                f"block{(n, d1, d2)} has dimension {val} but its mirror "
                f"block{(n, d2, d1)} has {blocks.get((n, d2, d1), 0)}")

    for (n, d1, d2), val in sorted(blocks.items()):
        if n >= 1 and d1 != d2:
            row = any(k[0] >= n + 1 and k[1] == d1 for k in blocks)
            col = any(k[0] >= n + 1 and k[2] == d2 for k in blocks)
            if not (row and col):
                problems.append(
                    f"block{(n, d1, d2)} is nonzero with unequal sizes but no nonzero "
                    f"block exists above degree {n} in its row/column")

    if problems:
        return RuleReport(rule, "fail", "; ".join(problems))
    return RuleReport(rule, "pass",
                      "intermediate chains, mirror symmetry, and unequal-size escalation "
                      f"hold across {len(blocks)} block(s)")


def verify_necessary_blocks_and_top_line(h: HopfData,
                                         an: CoalgebraAnalysis) -> RuleReport:
    rule = "necessary-blocks-and-top-line"
    blocks = an.blocks.block_dims
    r = an.blocks.group_like_count
    problems: list[str] = []
    notes: list[str] = []

    line = sorted(n for (n, d1, d2) in blocks if d1 == 1 and d2 == 1)
    if not line:
        return RuleReport(rule, "fail", "no (1,1) blocks at all (missing group-likes)")
    m = line[-1]
    top = blocks.get((m, 1, 1), 0)
    if top != r:
        problems.append(f"top (1,1) block at degree {m} has dimension {top}, "
                        f"expected the group order {r}")
    else:
        notes.append(f"top (1,1) block at degree {m} has dimension {r}")

    gated = (not an.blocks.cosemisimple) and blocks.get((1, 1, 1), 0) == 0
    if gated:
        sizes_present = sorted({d for (n, d, _unused) in blocks if n >= 1} |
                               {d for (n, _unused, d) in blocks if n >= 1})
        found_d = None
        for d in sizes_present:
            if d <= 1:
                continue
            if (blocks.get((1, d, 1), 0) and blocks.get((1, 1, d), 0)
                    and any(blocks.get((k, d, d), 0) for k in range(2, an.filtration.length + 1))):
                found_d = d
                break
        interior = [n for n in line if n >= 1]
        has_top_11 = any(n > 1 for n in interior)
        if found_d is None or not has_top_11:
            problems.append(
                "necessary blocks missing: need some size d > 1 with nonzero blocks "
                "(1, d, 1), (1, 1, d), (k, d, d) for some k > 1, and a nonzero "
                f"(m, 1, 1) with m > 1; block table: {sorted(blocks)}")
        else:
            notes.append(f"necessary blocks present with size d = {found_d}")
        if interior:
            low = min(interior)
            if low < m:
                ok_spiral = False
                for lp in range(low + 1, an.filtration.length + 1):
                    for d1 in sizes_present:
                        for d2 in sizes_present:
                            if d1 <= 1 or d2 <= 1:
                                continue
                            if not (blocks.get((lp, d1, 1), 0) and blocks.get((lp, 1, d2), 0)):
                                continue
                            row = any(k[0] == lp - 1 and k[1] == d1 and k[2] > 1 for k in blocks)
                            col = any(k[0] == lp - 1 and k[2] == d2 and k[1] > 1 for k in blocks)
                            if row and col:
                                ok_spiral = True
                if not ok_spiral:
                    problems.append(
                        f"the (1,1) line starts at degree {low} below its top {m}, but no "
                        "degree l' > {0} carries (l', d1, 1), (l', 1, d2) with matching "
                        "(l'-1, d1, d3), (l'-1, d4, d2) blocks of sizes > 1".format(low))
                else:
                    notes.append(f"spiral condition holds above degree {low}")
    else:
        notes.append("necessary-block part not applicable "
                     "(cosemisimple or nontrivial skew-primitives present)")

    if problems:
        return RuleReport(rule, "fail", "; ".join(problems))
    return RuleReport(rule, "pass", "; ".join(notes))


def run_all_rules(h: HopfData, an: CoalgebraAnalysis | None = None) -> list[RuleReport]:
    if an is None:
        an = analyze(h)
    return [
        verify_group_and_antipode_stability(h, an),
        verify_group_order_divisibility(h, an),
        verify_chain_and_symmetry(h, an),
        verify_necessary_blocks_and_top_line(h, an),
    ]
