"""Exhaustive feasibility search for block layouts of a finite-dimensional
non-cosemisimple Hopf algebra with no nontrivial skew-primitives.

``feasible(dim, r)`` decides whether the structural rules admit *any* block
layout with group order r and total dimension dim.  A layout is a finite
set of blocks (degree, left size, right size) with positive dimensions.
The search enumerates supports: every rule except the two exact pins and
the dimension granularities depends only on which blocks are nonzero.

Constraint identifiers (used in traces and by ``check_profile``):

* S0-structure   — well-formed entries: degree-0 blocks are square, the
                   degree-1 (1,1) block vanishes (that is the no-nontrivial-
                   skew-primitives hypothesis), no (n,1,1) above the top.
* S1-total       — block dimensions sum to the requested total.
* S2-granularity — each block dimension is a positive multiple of its
                   granule, which already encodes divisibility by the group
                   order: r for (n,1,1); d*r per side of an (n,d,1) pair
                   (lcm(d,r) per side for degrees >= 2 in strict mode);
                   lcm(d1*d2, r) for blocks with both sizes > 1.
* S3-pin         — the degree-0 and the top (1,1) blocks equal r exactly.
* S4-necessary   — some size d > 1 has blocks (1,d,1), (1,1,d), (k,d,d)
                   with k > 1, and a (m,1,1) with m > 1 exists.
* S5-chain       — a block at degree n >= 2 forces, for every 0 < i < n,
                   a connecting pair of blocks at degrees i and n-i.
* S6-spiral      — when the (1,1) line starts strictly below its top, some
                   degree l' above its start carries (l',d,1), (l',1,d) and
                   (l'-1, d, d3), (l'-1, d3, d) blocks with d, d3 > 1.
* S7-symmetry    — the table is symmetric under swapping the size indices,
                   with equal dimensions.
* S8-escalation  — a block at degree n >= 1 with unequal sizes forces
                   blocks above degree n containing each of its sizes.
* S9-absorption  — the slack over the support's minimum must be a
                   non-negative integer combination of the granules.

``sweep`` tabulates verdicts for dim = t*r, ``dimension_lower_bound``
evaluates the closed-form minimum (2d+2)r + 2*lcm(d^2, r) over d > 1, and
``check_profile`` independently re-validates any layout, in particular
every certificate the search emits.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import InternalDisagreement, InvalidInput, UnsupportedParams

Entry = tuple[int, int, int]  # (degree, left size, right size)

_TRACE_LIMIT = 1000
_NODE_LIMIT = 2_000_000


# ---------------------------------------------------------------------------
# closed-form dimension data
# ---------------------------------------------------------------------------

def basic_block_dim(r: int, d1: int, d2: int) -> int:
    """Minimum total dimension contributed at one degree by blocks of the
    given size pair (counting both orientations when the sizes differ)."""
    if r < 1 or d1 < 1 or d2 < 1:
        raise InvalidInput("sizes and the group order must be positive")
    if d1 == 1 and d2 == 1:
        return r
    if d1 == 1:
        return 2 * d2 * r
    if d2 == 1:
        return 2 * d1 * r
    return math.lcm(d1 * d2, r)


def minimal_form_dim(r: int, d: int) -> int:
    """Dimension of the cheapest layout built on inner size d > 1."""
    if d < 2:
        raise InvalidInput("the inner size of a minimal form must exceed 1")
    return 2 * basic_block_dim(r, 1, 1) + 2 * basic_block_dim(r, d, d) + basic_block_dim(r, d, 1)


@dataclass(frozen=True)
class Bounds:
    r: int
    value: int
    argmin_d: int
    all_argmin: tuple[int, ...]


def dimension_lower_bound(r: int) -> Bounds:
    if r < 1:
        raise InvalidInput("the group order must be positive")
    best, ties = None, []
    d = 2
    while True:
        val = minimal_form_dim(r, d)
        if best is None or val < best:
            best, ties = val, [d]
        elif val == best:
            ties.append(d)
        # both terms of (2d+2)r + 2*lcm(d^2, r) >= 2d^2 grow from here on
        if (2 * d + 2) * r + 2 * d * d > best:
            break
        d += 1
    return Bounds(r, best, ties[0], tuple(ties))


def no_skew_primitive_guard(dim: int, r: int) -> bool:
    """True when group order r forces the no-nontrivial-skew-primitives
    hypothesis automatically: gcd(r, dim/r) = 1."""
    if r < 1 or dim < 1 or dim % r:
        raise InvalidInput("the group order must divide the dimension")
    return math.gcd(r, dim // r) == 1


# ---------------------------------------------------------------------------
# support entries (canonical: left size <= right size; a canonical entry with
# unequal sizes stands for the mirror pair, whose dimensions agree)
# ---------------------------------------------------------------------------

def _canon(n: int, d1: int, d2: int) -> Entry:
    return (n, d1, d2) if d1 <= d2 else (n, d2, d1)


def _entry_allowed(e: Entry, m: int) -> bool:
    n, d1, d2 = e
    if n < 0 or d1 < 1 or d2 < 1:
        return False
    if n == 0:
        return d1 == d2
    if d1 == 1 and d2 == 1:
        return 2 <= n <= m          # (1,1,1) breaks the hypothesis; m is the top
    return True


def _entry_min(e: Entry, r: int, m: int, strict: bool) -> int:
    """Minimum dimension of a canonical entry (mirror included)."""
    n, d1, d2 = e
    if d1 == 1 and d2 == 1:
        return r                    # pinned at n = 0 and n = m, granule r between
    if n == 0:
        return math.lcm(d1 * d1, r)
    if d1 == 1:
        if strict and n >= 2:
            return 2 * math.lcm(d2, r)
        return 2 * d2 * r
    if d1 == d2:
        return math.lcm(d1 * d2, r)
    return 2 * math.lcm(d1 * d2, r)


def _entry_granule(e: Entry, r: int, m: int, strict: bool) -> int | None:
    """Step by which the entry's dimension may exceed its minimum;
    None for the two pinned entries."""
    n, d1, d2 = e
    if d1 == 1 and d2 == 1 and n in (0, m):
        return None
    return _entry_min(e, r, m, strict)


def _min_sum(support: frozenset[Entry], r: int, m: int, strict: bool) -> int:
    return sum(_entry_min(e, r, m, strict) for e in support)


# ---------------------------------------------------------------------------
# obligations on a support
# ---------------------------------------------------------------------------

def _has(support: frozenset[Entry], n: int, d1: int, d2: int) -> bool:
    return _canon(n, d1, d2) in support


def _chain_gaps(support: frozenset[Entry]) -> list[tuple[Entry, int]]:
    gaps = []
    for e in sorted(support):
        n, d1, d2 = e
        if n < 2:
            continue
        for i in range(1, n):
            if not any(_has(support, i, d1, b) and _has(support, n - i, b, d2)
                       for b in _sizes_upto(support)):
                gaps.append((e, i))
    return gaps


def _sizes_upto(support: frozenset[Entry]) -> range:
    top = max((max(d1, d2) for _, d1, d2 in support), default=1)
    return range(1, top + 1)


def _escalation_gaps(support: frozenset[Entry]) -> list[tuple[Entry, int]]:
    gaps = []
    for e in sorted(support):
        n, d1, d2 = e
        if n < 1 or d1 == d2:
            continue
        for x in sorted({d1, d2}):
            if not any(np >= n + 1 and x in (a, b) for (np, a, b) in support):
                gaps.append((e, x))
    return gaps


def _interior_line(support: frozenset[Entry]) -> list[int]:
    return sorted(n for (n, d1, d2) in support if n >= 1 and d1 == 1 and d2 == 1)


def _spiral_gap(support: frozenset[Entry], m: int) -> int | None:
    """The starting degree l of the (1,1) line when the spiral rule is
    triggered (l < m) and unmet; None otherwise."""
    line = _interior_line(support)
    if not line:
        return None
    low = line[0]
    if low >= m:
        return None
    for lp in range(low + 1, _max_degree(support) + 1):
        for d in _sizes_upto(support):
            if d <= 1 or not _has(support, lp, d, 1):
                continue
            if any(d3 > 1 and _has(support, lp - 1, d, d3) for d3 in _sizes_upto(support)):
                return None
    return low


def _max_degree(support: frozenset[Entry]) -> int:
    return max(n for (n, _a, _b) in support)


# ---------------------------------------------------------------------------
# slack absorption
# ---------------------------------------------------------------------------

def _reachable(amount: int, granules: list[int]) -> list[bool]:
    table = [False] * (amount + 1)
    table[0] = True
    for g in granules:
        for v in range(g, amount + 1):
            if table[v - g]:
                table[v] = True
    return table


def _absorb(leftover: int, entries: list[tuple[Entry, int]]) -> dict[Entry, int] | None:
    """Distribute leftover over entries as multiples of their granules,
    deterministically (canonical order, greedy against suffix feasibility);
    returns entry -> extra amount, or None."""
    if leftover == 0:
        return {}
    granules = [g for _, g in entries]
    suffix: list[list[bool]] = [[False] * (leftover + 1) for _ in range(len(entries) + 1)]
    suffix[len(entries)][0] = True
    for idx in range(len(entries) - 1, -1, -1):
        g = granules[idx]
        nxt = suffix[idx + 1]
        cur = suffix[idx]
        for v in range(leftover + 1):
            if nxt[v]:
                cur[v] = True
        for v in range(g, leftover + 1):
            if cur[v - g]:
                cur[v] = True
    if not suffix[0][leftover]:
        return None
    extra: dict[Entry, int] = {}
    rest = leftover
    for idx, (e, g) in enumerate(entries):
        take = 0
        most = rest // g
        for count in range(most, -1, -1):
            if suffix[idx + 1][rest - count * g]:
                take = count
                break
        if take:
            extra[e] = take * g
            rest -= take * g
    if rest:
        return None
    return extra


# ---------------------------------------------------------------------------
# profiles and their independent validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Profile:
    """A concrete block layout: oriented blocks with their dimensions."""

    r: int
    total: int
    top_degree: int                      # the top of the (1,1) line
    blocks: tuple[tuple[Entry, int], ...]  # sorted, both orientations listed

    def as_dict(self) -> dict[Entry, int]:
        return dict(self.blocks)


def check_profile(profile: Profile, dim: int, r: int, strict: bool = False) -> list[str]:
    """All rule violations of a layout (empty list = valid)."""
    out: list[str] = []
    blocks = profile.as_dict()
    if profile.r != r:
        out.append(f"S0-structure: profile group order {profile.r} != {r}")
    if len(blocks) != len(profile.blocks):
        out.append("S0-structure: duplicate block keys")
    for (n, d1, d2), v in blocks.items():
        if n < 0 or d1 < 1 or d2 < 1 or v < 1:
            out.append(f"S0-structure: malformed block {(n, d1, d2)} -> {v}")
        if n == 0 and d1 != d2:
            out.append(f"S0-structure: degree-0 block {(n, d1, d2)} is not square")
    if blocks.get((1, 1, 1)):
        out.append("S0-structure: nonzero (1,1,1) block contradicts the "
                   "no-nontrivial-skew-primitives hypothesis")
    if sum(blocks.values()) != dim or profile.total != dim:
        out.append(f"S1-total: blocks sum to {sum(blocks.values())}, expected {dim}")

    for (n, d1, d2), v in sorted(blocks.items()):
        if d1 == 1 and d2 == 1:
            gran = r
        elif n == 0:
            gran = math.lcm(d1 * d1, r)
        elif 1 in (d1, d2):
            d = max(d1, d2)
            gran = math.lcm(d, r) if (strict and n >= 2) else d * r
        else:
            gran = math.lcm(d1 * d2, r)
        if v % gran:
            out.append(f"S2-granularity: block {(n, d1, d2)} = {v} is not a multiple of {gran}")

    line = sorted(n for (n, d1, d2) in blocks if d1 == 1 and d2 == 1)
    if not line or line[0] != 0:
        out.append("S3-pin: missing degree-0 (1,1) block")
    else:
        if blocks[(0, 1, 1)] != r:
            out.append(f"S3-pin: degree-0 (1,1) block = {blocks[(0, 1, 1)]}, expected {r}")
        m = line[-1]
        if m != profile.top_degree:
            out.append(f"S3-pin: top of the (1,1) line is {m}, profile says {profile.top_degree}")
        if blocks.get((m, 1, 1)) != r:
            out.append(f"S3-pin: top (1,1) block = {blocks.get((m, 1, 1))}, expected {r}")

        interior = [n for n in line if n >= 1]
        need = None
        for d in sorted({d for (_n, d, _b) in blocks} | {d for (_n, _a, d) in blocks}):
            if d <= 1:
                continue
            if (blocks.get((1, d, 1)) and blocks.get((1, 1, d))
                    and any(blocks.get((k, d, d)) for k in range(2, _max_degree(frozenset(blocks)) + 1))):
                need = d
                break
        if need is None or not any(n > 1 for n in interior):
            out.append("S4-necessary: the six necessary blocks are incomplete")
        if interior and interior[0] < m:
            low = interior[0]
            ok = False
            for lp in range(low + 1, _max_degree(frozenset(blocks)) + 1):
                for d in sorted({a for (_n, a, _b) in blocks if a > 1}):
                    if blocks.get((lp, d, 1)) and blocks.get((lp, 1, d)) and any(
                            blocks.get((lp - 1, d, d3)) and blocks.get((lp - 1, d3, d))
                            for d3 in sorted({a for (_n, a, _b) in blocks if a > 1})):
                        ok = True
            if not ok:
                out.append(f"S6-spiral: the (1,1) line starts at {low} < top {m} "
                           "without the required blocks above it")

    for (n, d1, d2), v in sorted(blocks.items()):
        if n >= 1 and blocks.get((n, d2, d1)) != v:
            out.append(f"S7-symmetry: block {(n, d1, d2)} = {v} but mirror = "
                       f"{blocks.get((n, d2, d1))}")
        if n >= 2:
            for i in range(1, n):
                if not any(blocks.get((i, d1, b)) and blocks.get((n - i, b, d2))
                           for b in range(1, max(d for (_n, a, c) in blocks for d in (a, c)) + 1)):
                    out.append(f"S5-chain: block {(n, d1, d2)} lacks a connection at split {i}")
        if n >= 1 and d1 != d2:
            for x in sorted({d1, d2}):
                if not any(np >= n + 1 and x in (a, b) for (np, a, b) in blocks):
                    out.append(f"S8-escalation: block {(n, d1, d2)} has no block above "
                               f"degree {n} containing size {x}")
    return out


# ---------------------------------------------------------------------------
# the search
# ---------------------------------------------------------------------------

@dataclass
class Verdict:
    sat: bool
    certificate: Profile | None
    trace: tuple[tuple[str, str], ...]
    trace_truncated: bool
    nodes_explored: int


class _Search:
    def __init__(self, dim: int, r: int, strict: bool, search_order: str,
                 trace_limit: int, node_limit: int):
        self.dim = dim
        self.r = r
        self.strict = strict
        self.reverse = search_order == "desc"
        self.trace_limit = trace_limit
        self.node_limit = node_limit
        self.trace: list[tuple[str, str]] = []
        self.truncated = False
        self.nodes = 0
        self.memo: set[tuple[frozenset[Entry], int]] = set()

    # -- bookkeeping --------------------------------------------------------

    def note(self, context: str, constraint: str) -> None:
        if len(self.trace) < self.trace_limit:
            self.trace.append((context, constraint))
        elif not self.truncated:
            self.truncated = True

    def _order(self, ways: list) -> list:
        return list(reversed(ways)) if self.reverse else ways

    # -- candidate generation -----------------------------------------------

    def _budget_ok(self, support: frozenset[Entry], extra: set[Entry], m: int) -> bool:
        base = _min_sum(support, self.r, m, self.strict)
        add = sum(_entry_min(e, self.r, m, self.strict) for e in extra)
        return base + add <= self.dim

    def _chain_ways(self, support: frozenset[Entry], e: Entry, i: int, m: int) -> list[set[Entry]]:
        n, d1, d2 = e
        ways = []
        for b in range(1, self.dim // self.r + 2):
            need = set()
            for cand in (_canon(i, d1, b), _canon(n - i, b, d2)):
                if cand not in support:
                    need.add(cand)
            if not need:
                continue
            if all(_entry_allowed(x, m) for x in need) and self._budget_ok(support, need, m):
                ways.append(need)
        return ways

    def _escalation_ways(self, support: frozenset[Entry], e: Entry, x: int, m: int) -> list[set[Entry]]:
        n = e[0]
        ways = []
        for np in range(n + 1, self.dim // self.r + 2):
            for y in range(1, self.dim // self.r + 2):
                cand = _canon(np, x, y)
                if cand in support or not _entry_allowed(cand, m):
                    continue
                if self._budget_ok(support, {cand}, m):
                    ways.append({cand})
        return ways

    def _spiral_ways(self, support: frozenset[Entry], low: int, m: int) -> list[set[Entry]]:
        ways = []
        top = self.dim // self.r + 2
        for lp in range(low + 1, top):
            for d in range(2, top):
                for d3 in range(2, top):
                    need = {c for c in (_canon(lp, 1, d), _canon(lp - 1, d, d3))
                            if c not in support}
                    if not need:
                        continue
                    if all(_entry_allowed(x, m) for x in need) and self._budget_ok(support, need, m):
                        ways.append(need)
        return ways

    def _optional_entries(self, support: frozenset[Entry], m: int) -> list[Entry]:
        out = []
        slack = self.dim - _min_sum(support, self.r, m, self.strict)
        top = self.dim // self.r + 2
        for n in range(0, top):
            for d1 in range(1, top):
                for d2 in range(d1, top):
                    e = (n, d1, d2)
                    if e in support or not _entry_allowed(e, m):
                        continue
                    if _entry_min(e, self.r, m, self.strict) <= slack:
                        out.append(e)
        return out

    # -- the core recursion --------------------------------------------------

    def run(self) -> Profile | None:
        roots: list[tuple[frozenset[Entry], int, str]] = []
        top = self.dim // self.r + 1
        for d in range(2, math.isqrt(self.dim) + 1):
            for k in range(2, top + 1):
                for m in range(2, top + 1):
                    skeleton = frozenset({
                        (0, 1, 1), (0, d, d), (1, 1, d), _canon(k, d, d), (m, 1, 1)})
                    label = f"root(d={d}, k={k}, m={m})"
                    if _min_sum(skeleton, self.r, m, self.strict) > self.dim:
                        self.note(label, "S1-total")
                        continue
                    roots.append((skeleton, m, label))
        for skeleton, m, label in self._order(roots):
            res = self._solve(skeleton, m, label)
            if res is not None:
                return res
        return None

    def _solve(self, support: frozenset[Entry], m: int, context: str) -> Profile | None:
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise UnsupportedParams(
                f"search exceeded its node budget ({self.node_limit}) for "
                f"dimension {self.dim}, group order {self.r}")
        # cheap degree floor: every degree below an occupied one must hold an
        # entry of dimension >= r once chains are completed
        occupied = {n for (n, _a, _b) in support}
        missing = sum(1 for n in range(1, _max_degree(support)) if n not in occupied)
        if _min_sum(support, self.r, m, self.strict) + missing * self.r > self.dim:
            self.note(context, "S1-total")
            return None
        key = (support, m)
        if key in self.memo:
            return None

        gap = self._first_gap(support, m)
        if gap is not None:
            kind, payload = gap
            if kind == "chain":
                e, i = payload
                ways = self._chain_ways(support, e, i, m)
                label = f"chain split {i} of {e}"
                cid = "S5-chain"
            elif kind == "escalation":
                e, x = payload
                ways = self._escalation_ways(support, e, x, m)
                label = f"escalation of {e} in size {x}"
                cid = "S8-escalation"
            else:
                low = payload
                ways = self._spiral_ways(support, low, m)
                label = f"spiral above degree {low}"
                cid = "S6-spiral"
            if not ways:
                self.note(f"{context}; {label}", cid)
                self.memo.add(key)
                return None
            for need in self._order(ways):
                res = self._solve(support | need, m, f"{context}; {label} += {sorted(need)}")
                if res is not None:
                    return res
            self.memo.add(key)
            return None

        # support closed: distribute the slack
        leftover = self.dim - _min_sum(support, self.r, m, self.strict)
        growable = [(e, g) for e in sorted(support)
                    if (g := _entry_granule(e, self.r, m, self.strict)) is not None]
        extra = _absorb(leftover, growable)
        if extra is not None:
            return self._certify(support, m, extra)
        self.note(f"{context}; slack {leftover} over granules "
                  f"{[g for _, g in growable]}", "S9-absorption")
        for e in self._order(self._optional_entries(support, m)):
            res = self._solve(support | {e}, m, f"{context}; optional {e}")
            if res is not None:
                return res
        self.memo.add(key)
        return None

    def _first_gap(self, support: frozenset[Entry], m: int):
        chains = _chain_gaps(support)
        if chains:
            return ("chain", chains[0])
        esc = _escalation_gaps(support)
        if esc:
            return ("escalation", esc[0])
        low = _spiral_gap(support, m)
        if low is not None:
            return ("spiral", low)
        return None

    def _certify(self, support: frozenset[Entry], m: int,
                 extra: dict[Entry, int]) -> Profile:
        blocks: dict[Entry, int] = {}
        for e in sorted(support):
            n, d1, d2 = e
            total = _entry_min(e, self.r, m, self.strict) + extra.get(e, 0)
            if d1 == d2:
                blocks[e] = total
            else:
                blocks[(n, d1, d2)] = total // 2
                blocks[(n, d2, d1)] = total // 2
        profile = Profile(self.r, self.dim, m, tuple(sorted(blocks.items())))
        bad = check_profile(profile, self.dim, self.r, self.strict)
        if bad:
            raise InternalDisagreement(
                "search produced an invalid certificate: " + "; ".join(bad))
        return profile


def feasible(dim: int, r: int, strict: bool = False, search_order: str = "asc",
             trace_limit: int = _TRACE_LIMIT, node_limit: int = _NODE_LIMIT) -> Verdict:
    """Decide whether any block layout with group order r fits dimension dim.

    ``strict`` swaps the degree >= 2 granularity of (n,d,1) pairs from
    2*d*r down to 2*lcm(d,r) (the most conservative reading); a verdict of
    unsat is a proof that no layout satisfies the rules, while sat comes
    with a re-validated certificate layout.
    """
    if r < 1 or dim < 1:
        raise InvalidInput("dimension and group order must be positive")
    if dim % r:
        raise InvalidInput(f"group order {r} does not divide dimension {dim}")
    if search_order not in ("asc", "desc"):
        raise InvalidInput("search_order must be 'asc' or 'desc'")
    search = _Search(dim, r, strict, search_order, trace_limit, node_limit)
    cert = search.run()
    return Verdict(cert is not None, cert, tuple(search.trace),
                   search.truncated, search.nodes)


def _sweep_one(args: tuple[int, int, bool]) -> tuple[int, Verdict]:
    r, t, strict = args
    return t, feasible(t * r, r, strict=strict, trace_limit=0)


def sweep(r: int, t_max: int, jobs: int = 1, strict: bool = False) -> list[tuple[int, Verdict]]:
    """Verdicts for dimensions t*r, t = 1..t_max, ascending."""
    if r < 1 or t_max < 1:
        raise InvalidInput("group order and range must be positive")
    tasks = [(r, t, strict) for t in range(1, t_max + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_one, tasks))
    else:
        results = [_sweep_one(t) for t in tasks]
    return sorted(results, key=lambda p: p[0])
