"""Command-line front door.

Verbs: ``validate``, ``analyze``, ``verify-rules`` (structure-constant files),
``bound``, ``feasible``, ``sweep`` (layout feasibility), and ``corpus``
(write built-in examples to files).

Exit codes: 0 = ok / valid / SAT / all rules pass; 1 = invalid / UNSAT /
some rule fails; 2 = usage or parameter error; 3 = typed computation or
file-format error (for example a component whose center is a proper field
extension, or a malformed input document).

``--format text`` (default) prints human-readable lines; ``--format machine``
prints one JSON document with the same numbers.
"""

from __future__ import annotations

import argparse
import json
import sys

from .coalgebra import CoalgebraData, HopfData, validate_coalgebra, validate_hopf
from .corpus import corpus
from .errors import (FileFormatError, InternalDisagreement, InvalidInput,
                     LiftingFailed, NonSplitComponent, UnsupportedParams)
from .fileformat import dump_path, load_path
from .filtration import block_system
from .rules import run_all_rules
from .solver import dimension_lower_bound, feasible, no_skew_primitive_guard, sweep


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="blocksys",
        description="Block systems of finite-dimensional coalgebras and "
                    "feasibility of hypothetical block layouts.")
    sub = top.add_subparsers(dest="verb", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "machine"), default="text")

    p = sub.add_parser("validate", help="check the axioms of a structure-constant file")
    p.add_argument("file")
    add_format(p)

    p = sub.add_parser("analyze", help="filtration, simple subcoalgebras, block system")
    p.add_argument("file")
    add_format(p)

    p = sub.add_parser("verify-rules", help="run the structural rule checks (Hopf files)")
    p.add_argument("file")
    add_format(p)

    p = sub.add_parser("bound", help="closed-form dimension lower bound")
    p.add_argument("--r", type=int, required=True, help="group order")
    add_format(p)

    p = sub.add_parser("feasible", help="decide whether a block layout can exist")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--group-order", type=int, required=True)
    p.add_argument("--strict-level1-divisibility", action="store_true",
                   help="assert the full size-times-order granularity only at "
                        "degree 1 (most conservative reading)")
    p.add_argument("--trace-limit", type=int, default=20)
    add_format(p)

    p = sub.add_parser("sweep", help="feasibility table for dim = t * group order")
    p.add_argument("--group-order", type=int, required=True)
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--strict-level1-divisibility", action="store_true")
    add_format(p)

    p = sub.add_parser("corpus", help="write a built-in example to a file")
    p.add_argument("name", help="sweedler | taft | group_algebra | dual_group_algebra")
    p.add_argument("--n", type=int, help="parameter for taft")
    p.add_argument("--group", help="group spec for (dual_)group_algebra: cyclic:<n> | s3")
    p.add_argument("--out", required=True)
    add_format(p)

    return top


def _emit(ns: argparse.Namespace, payload: dict, text_lines: list[str]) -> None:
    if ns.format == "machine":
        doc = {"verb": ns.verb, "payload": payload}
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


def _block_rows(blocks: dict) -> list[dict]:
    return [{"level": n, "left": d1, "right": d2, "dim": v}
            for (n, d1, d2), v in sorted(blocks.items())]


def _cmd_validate(ns: argparse.Namespace) -> int:
    data = load_path(ns.file)
    report = validate_hopf(data) if isinstance(data, HopfData) else validate_coalgebra(data)
    kind = "hopf" if isinstance(data, HopfData) else "coalgebra"
    payload = {"file": ns.file, "kind": kind, "valid": report.ok,
               "violations": [v.render() for v in report.violations]}
    lines = [f"{kind} data of dimension {data.coalgebra.dim if isinstance(data, HopfData) else data.dim}",
             f"valid: {report.ok}"]
    lines += [f"violation {v.render()}" for v in report.violations]
    _emit(ns, payload, lines)
    return 0 if report.ok else 1


def _cmd_analyze(ns: argparse.Namespace) -> int:
    data = load_path(ns.file)
    bs = block_system(data)
    payload = {
        "file": ns.file,
        "dim": bs.dim,
        "filtration_level_dims": list(bs.level_dims),
        "cosemisimple": bs.cosemisimple,
        "simple_subcoalgebra_sizes": list(bs.component_sizes),
        "group_like_count": bs.group_like_count,
        "blocks": _block_rows(bs.block_dims),
    }
    lines = [f"dimension: {bs.dim}",
             "filtration level dimensions: " + ", ".join(str(v) for v in bs.level_dims),
             f"cosemisimple: {bs.cosemisimple}",
             "simple subcoalgebra sizes: " + ", ".join(str(s) for s in bs.component_sizes),
             f"group-like elements: {bs.group_like_count}"]
    for (n, d1, d2), v in sorted(bs.block_dims.items()):
        lines.append(f"block level {n} sizes {d1}x{d2}: dimension {v}")
    _emit(ns, payload, lines)
    return 0


def _cmd_verify_rules(ns: argparse.Namespace) -> int:
    data = load_path(ns.file)
    if not isinstance(data, HopfData):
        raise InvalidInput("verify-rules requires a file with full Hopf structure "
                           "(multiplication, unit, and antipode)")
    reports = run_all_rules(data)
    payload = {"file": ns.file,
               "reports": [{"rule": r.rule_id, "verdict": r.verdict, "details": r.details}
                           for r in reports]}
    lines = [f"rule {r.rule_id}: {r.verdict} — {r.details}" for r in reports]
    _emit(ns, payload, lines)
    return 0 if all(r.ok for r in reports) else 1


def _cmd_bound(ns: argparse.Namespace) -> int:
    b = dimension_lower_bound(ns.r)
    payload = {"group_order": b.r, "value": b.value, "argmin_d": b.argmin_d,
               "all_argmin": list(b.all_argmin)}
    lines = [f"group order: {b.r}",
             f"dimension lower bound: {b.value}",
             f"achieved at inner size d = {b.argmin_d}"
             + (f" (ties: {', '.join(str(d) for d in b.all_argmin)})"
                if len(b.all_argmin) > 1 else "")]
    _emit(ns, payload, lines)
    return 0


def _cmd_feasible(ns: argparse.Namespace) -> int:
    strict = ns.strict_level1_divisibility
    verdict = feasible(ns.dim, ns.group_order, strict=strict,
                       trace_limit=ns.trace_limit)
    guard = no_skew_primitive_guard(ns.dim, ns.group_order)
    payload = {"dim": ns.dim, "group_order": ns.group_order, "strict": strict,
               "sat": verdict.sat, "nodes_explored": verdict.nodes_explored,
               "no_skew_primitive_guard": guard,
               "certificate": _block_rows(verdict.certificate.as_dict()) if verdict.sat else None,
               "trace": [list(t) for t in verdict.trace] if not verdict.sat else [],
               "trace_truncated": verdict.trace_truncated}
    lines = [f"dimension {ns.dim}, group order {ns.group_order}: "
             + ("SAT" if verdict.sat else "UNSAT"),
             f"nodes explored: {verdict.nodes_explored}",
             "no-skew-primitive guard (gcd of group order and quotient = 1): "
             + ("holds" if guard else "does not hold")]
    if verdict.sat:
        lines.append("certificate blocks:")
        for (n, d1, d2), v in sorted(verdict.certificate.as_dict().items()):
            lines.append(f"  level {n} sizes {d1}x{d2}: dimension {v}")
    else:
        for ctx, cid in verdict.trace:
            lines.append(f"  refuted [{cid}] {ctx}")
        if verdict.trace_truncated:
            lines.append("  (trace truncated)")
    _emit(ns, payload, lines)
    return 0 if verdict.sat else 1


def _cmd_sweep(ns: argparse.Namespace) -> int:
    strict = ns.strict_level1_divisibility
    rows = sweep(ns.group_order, ns.t_max, jobs=ns.jobs, strict=strict)
    payload_rows = []
    lines = [f"group order {ns.group_order}, t = 1..{ns.t_max}"]
    for t, verdict in rows:
        dim = t * ns.group_order
        payload_rows.append({"t": t, "dim": dim, "sat": verdict.sat,
                             "nodes_explored": verdict.nodes_explored,
                             "certificate": _block_rows(verdict.certificate.as_dict())
                             if verdict.sat else None})
        lines.append(f"t={t} dim={dim}: " + ("SAT" if verdict.sat else "UNSAT")
                     + f" (nodes {verdict.nodes_explored})")
    payload = {"group_order": ns.group_order, "t_max": ns.t_max, "strict": strict,
               "rows": payload_rows}
    _emit(ns, payload, lines)
    return 0


def _cmd_corpus(ns: argparse.Namespace) -> int:
    params: dict = {}
    if ns.n is not None:
        params["n"] = ns.n
    if ns.group is not None:
        params["group"] = ns.group
    data = corpus(ns.name, **params)
    dump_path(ns.out, data)
    payload = {"name": ns.name, "params": {k: str(v) for k, v in params.items()},
               "out": ns.out, "dim": data.coalgebra.dim}
    lines = [f"wrote {ns.name} (dimension {data.coalgebra.dim}) to {ns.out}"]
    _emit(ns, payload, lines)
    return 0


_DISPATCH = {
    "validate": _cmd_validate,
    "analyze": _cmd_analyze,
    "verify-rules": _cmd_verify_rules,
    "bound": _cmd_bound,
    "feasible": _cmd_feasible,
    "sweep": _cmd_sweep,
    "corpus": _cmd_corpus,
}


def run(argv: list[str] | None = None) -> int:
    """Parse argv and execute; returns the exit code."""
    try:
        ns = _parser().parse_args(argv)
    except SystemExit as exc:  # argparse: 2 on usage error, 0 on --help
        return int(exc.code or 0)
    try:
        return _DISPATCH[ns.verb](ns)
    except (InvalidInput, UnsupportedParams) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NonSplitComponent, LiftingFailed, InternalDisagreement,
            FileFormatError, OSError) as exc:
        print(f"error[{type(exc).__name__}]: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
