"""Command-line interface.

Subcommands: rn (closed-form radio number), label (emit an optimal
labeling), verify (audit a labeling file), exact (branch-and-bound search),
table (formula vs construction sweep), selftest (invariant suites).

Exit codes: 0 success / labeling valid, 1 labeling invalid, 2 bad input,
3 internal inconsistency (a result failed its own audit, or a selftest
suite went red).

The JSON labeling schema, shared by ``label --format json`` output and
``verify --file`` input, is::

    {"n": int, "s": int, "diameter": int, "span": int,
     "labels": [{"cycle": 1|2, "pos": int, "label": int}, ...]}

with labels sorted by (cycle, pos).  On input, n, s, and labels are
required; diameter and span are recomputed rather than trusted.  CSV output
has a cycle,pos,label header row, and DOT output names nodes c<cycle>_p<pos>
inside graph Z_<n>_<s>.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator

from .bounds import in_phi_scope, lower_bound_rn, phi
from .exact import SearchConfig, exact_radio_number
from .graphs import PrismGraph, build_graph
from .labeling import CaseId, Labeling, case_select, construct_labeling
from .selftest import run_selftest
from .verification import verify

EXIT_OK = 0
EXIT_INVALID_LABELING = 1
EXIT_BAD_INPUT = 2
EXIT_INTERNAL = 3


def labeling_to_dict(g: PrismGraph, lab: Labeling) -> dict:
    return {
        "n": g.n,
        "s": g.s,
        "diameter": g.diameter,
        "span": lab.span,
        "labels": [
            {"cycle": v.cycle, "pos": v.position, "label": c} for v, c in lab.items_sorted()
        ],
    }


def labeling_from_dict(data: object) -> tuple[int, int, Labeling]:
    """Parse the JSON labeling schema; ValueError on anything malformed."""
    if not isinstance(data, dict):
        raise ValueError("malformed labeling file: top level must be an object")
    for key in ("n", "s", "labels"):
        if key not in data:
            raise ValueError(f"malformed labeling file: missing key {key!r}")
    n, s = data["n"], data["s"]
    if not isinstance(n, int) or not isinstance(s, int):
        raise ValueError("malformed labeling file: n and s must be integers")
    entries = data["labels"]
    if not isinstance(entries, list):
        raise ValueError("malformed labeling file: labels must be a list")
    assignment: dict = {}
    g = build_graph(n, s)  # validates (n, s)
    for entry in entries:
        if not isinstance(entry, dict) or not {"cycle", "pos", "label"} <= set(entry):
            raise ValueError("malformed labeling file: each label needs cycle, pos, label")
        cycle, pos, label = entry["cycle"], entry["pos"], entry["label"]
        if not all(isinstance(x, int) for x in (cycle, pos, label)):
            raise ValueError("malformed labeling file: cycle, pos, label must be integers")
        if not (cycle in (1, 2) and 1 <= pos <= n):
            raise ValueError(f"labeling references unknown vertex: ({cycle},{pos})")
        v = g.vertex(cycle, pos)
        if v in assignment:
            raise ValueError(f"malformed labeling file: vertex ({cycle},{pos}) labeled twice")
        assignment[v] = label
    return n, s, Labeling(n=n, s=s, assignment=assignment)


def _dot_lines(g: PrismGraph, lab: Labeling | None) -> Iterator[str]:
    yield f"graph Z_{g.n}_{g.s} {{"
    for v in g.vertices():
        node = f"c{v.cycle}_p{v.position}"
        if lab is None:
            yield f"  {node};"
        else:
            yield f'  {node} [label="{lab.label(v)}"];'
    for u, v in g.edges():
        yield f"  c{u.cycle}_p{u.position} -- c{v.cycle}_p{v.position};"
    yield "}"


def _parse_budget(text: str) -> float:
    scale = {"s": 1.0, "m": 60.0, "h": 3600.0}
    raw, unit = (text[:-1], text[-1]) if text and text[-1] in scale else (text, "s")
    try:
        value = float(raw)
    except ValueError:
        raise ValueError(f"cannot parse time budget {text!r} (use e.g. 60s, 5m, 1h)") from None
    if value < 0:
        raise ValueError("time budget must be nonnegative")
    return value * scale[unit]


def cmd_rn(args: argparse.Namespace) -> int:
    case = case_select(args.n, args.s)
    if case is CaseId.UNSUPPORTED:
        raise ValueError(f"(n={args.n}, s={args.s}) is outside theorem scope; use exact")
    if case is CaseId.SPECIAL_3_3:
        value, method = 6, "special"
    elif case is CaseId.SPECIAL_4_3:
        value, method = 9, "special"
    else:
        value, method = lower_bound_rn(args.n, args.s), "formula"
    if args.format == "json":
        print(json.dumps({"n": args.n, "s": args.s, "rn": value, "method": method}))
    else:
        print(value)
    return EXIT_OK


def cmd_label(args: argparse.Namespace) -> int:
    lab = construct_labeling(args.n, args.s)
    g = build_graph(args.n, args.s)
    report = verify(g, lab)
    if not report.valid:
        print(
            f"internal inconsistency: constructed labeling of Z({args.n},{args.s}) "
            f"failed verification ({len(report.violations)} violations)",
            file=sys.stderr,
        )
        return EXIT_INTERNAL
    if args.format == "json":
        print(json.dumps(labeling_to_dict(g, lab)))
    elif args.format == "csv":
        print("cycle,pos,label")
        for v, c in lab.items_sorted():
            print(f"{v.cycle},{v.position},{c}")
    elif args.format == "dot":
        for line in _dot_lines(g, lab):
            print(line)
    else:
        print(f"Z({g.n},{g.s}): diameter {g.diameter}, span {lab.span}")
        for v, c in lab.items_sorted():
            print(f"({v.cycle},{v.position}) {c}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as e:
        raise ValueError(f"cannot read {args.file}: {e}") from None
    except json.JSONDecodeError as e:
        raise ValueError(f"malformed labeling file: {e}") from None
    n, s, lab = labeling_from_dict(data)
    g = build_graph(n, s)
    report = verify(g, lab)  # raises on incomplete assignments
    if args.format == "json":
        print(json.dumps(report.to_dict()))
    elif report.valid:
        print(f"valid: span={report.span}, pairs_checked={report.pairs_checked}")
    else:
        print(
            f"INVALID: {len(report.violations)} violations "
            f"(span={report.span}, pairs_checked={report.pairs_checked})"
        )
        for w in report.violations[:20]:
            print(
                f"  {w.u} -- {w.v}: distance {w.distance} + gap {w.label_gap} "
                f"< required {w.required}"
            )
        if len(report.violations) > 20:
            print(f"  ... and {len(report.violations) - 20} more")
    return EXIT_OK if report.valid else EXIT_INVALID_LABELING


def cmd_exact(args: argparse.Namespace) -> int:
    g = build_graph(args.n, args.s)
    use_phi = in_phi_scope(args.n, args.s) and not args.no_phi_pruning
    cfg = SearchConfig(
        upper_bound_hint=args.hint,
        time_budget=None if args.budget is None else _parse_budget(args.budget),
        use_phi_pruning=use_phi,
        fix_first_vertex=args.fix_first_vertex,
    )
    result = exact_radio_number(g, cfg)
    report = verify(g, result.witness)
    if not report.valid or result.witness.span != result.rn:
        print("internal inconsistency: exact witness failed verification", file=sys.stderr)
        return EXIT_INTERNAL
    status = "proven optimal" if result.proven_optimal else "budget exhausted (upper bound)"
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": args.n,
                    "s": args.s,
                    "rn": result.rn,
                    "proven_optimal": result.proven_optimal,
                    "nodes_explored": result.nodes_explored,
                    "witness": labeling_to_dict(g, result.witness),
                }
            )
        )
    else:
        print(f"rn = {result.rn}")
        print(f"status = {status}")
        print(f"nodes_explored = {result.nodes_explored}")
    return EXIT_OK


def _table_rows(n_min: int, n_max: int) -> Iterator[dict]:
    for n in range(n_min, n_max + 1):
        for s in (1, 2, 3):
            if s > n:
                continue
            case = case_select(n, s)
            if case is CaseId.UNSUPPORTED:
                yield {"n": n, "s": s, "phi": None, "rn_formula": None, "span": None,
                       "match": None, "note": "outside scope"}
                continue
            g = build_graph(n, s)
            lab = construct_labeling(n, s)
            valid = verify(g, lab).valid
            if case is CaseId.SPECIAL_3_3 or case is CaseId.SPECIAL_4_3:
                formula = 6 if case is CaseId.SPECIAL_3_3 else 9
                yield {"n": n, "s": s, "phi": None, "rn_formula": formula,
                       "span": lab.span, "match": valid and lab.span == formula,
                       "note": "special"}
            else:
                formula = lower_bound_rn(n, s)
                yield {"n": n, "s": s, "phi": phi(n, s), "rn_formula": formula,
                       "span": lab.span, "match": valid and lab.span == formula,
                       "note": ""}


def cmd_table(args: argparse.Namespace) -> int:
    if args.n_min > args.n_max:
        raise ValueError(f"--n-min {args.n_min} exceeds --n-max {args.n_max}")
    rows = list(_table_rows(args.n_min, args.n_max))
    if args.format == "json":
        print(json.dumps(rows))
    elif args.format == "csv":
        print("n,s,phi,rn_formula,span,match,note")
        for r in rows:
            cells = [r["n"], r["s"], r["phi"], r["rn_formula"], r["span"], r["match"], r["note"]]
            print(",".join("" if c is None else str(c) for c in cells))
    else:
        print(f"{'n':>4} {'s':>2} {'phi':>4} {'rn':>6} {'span':>6} {'match':>6} note")
        for r in rows:
            def cell(x, width):
                if x is None:
                    x = "-"
                elif isinstance(x, bool):
                    x = "yes" if x else "NO"
                return f"{x:>{width}}"
            print(
                f"{r['n']:>4} {r['s']:>2} {cell(r['phi'], 4)} {cell(r['rn_formula'], 6)} "
                f"{cell(r['span'], 6)} {cell(r['match'], 6)} {r['note']}"
            )
    if any(r["match"] is False for r in rows):
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_selftest(args: argparse.Namespace) -> int:
    results = run_selftest(n_max=args.n_max, inject_fault=args.inject_fault)
    for r in results:
        print(f"{r.name}: {'PASS' if r.passed else 'FAIL'} ({r.detail})")
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} suites passed")
    return EXIT_OK if not failed else EXIT_INTERNAL


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prismradio",
        description="Radio labelings of generalized prism graphs Z(n, s), 1 <= s <= 3.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_ns(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int, required=True, help="cycle length (n >= 3)")
        p.add_argument("--s", type=int, required=True, help="cross-edge count (1..3)")

    p_rn = sub.add_parser("rn", help="radio number by closed form")
    add_ns(p_rn)
    p_rn.add_argument("--format", choices=["text", "json"], default="text")
    p_rn.set_defaults(func=cmd_rn)

    p_label = sub.add_parser("label", help="emit an optimal radio labeling")
    add_ns(p_label)
    p_label.add_argument("--format", choices=["text", "json", "csv", "dot"], default="text")
    p_label.set_defaults(func=cmd_label)

    p_verify = sub.add_parser("verify", help="audit a labeling file (JSON schema)")
    p_verify.add_argument("--file", required=True, help="path to a labeling JSON file")
    p_verify.add_argument("--format", choices=["text", "json"], default="text")
    p_verify.set_defaults(func=cmd_verify)

    p_exact = sub.add_parser("exact", help="prove the radio number by search")
    add_ns(p_exact)
    p_exact.add_argument("--budget", default=None, help="time budget, e.g. 60s, 5m")
    p_exact.add_argument("--hint", type=int, default=None,
                         help="initial incumbent span (must be a true upper bound)")
    p_exact.add_argument("--no-phi-pruning", action="store_true",
                         help="disable the phi-based remaining-vertex bound")
    p_exact.add_argument("--fix-first-vertex", action="store_true",
                         help="fix the first vertex after a vertex-transitivity check")
    p_exact.add_argument("--format", choices=["text", "json"], default="text")
    p_exact.set_defaults(func=cmd_exact)

    p_table = sub.add_parser("table", help="formula vs construction sweep")
    p_table.add_argument("--n-min", type=int, default=4)
    p_table.add_argument("--n-max", type=int, default=12)
    p_table.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p_table.set_defaults(func=cmd_table)

    p_self = sub.add_parser("selftest", help="run cross-module invariant suites")
    p_self.add_argument("--n-max", type=int, default=20)
    p_self.add_argument("--inject-fault", choices=["phi"], default=None,
                        help=argparse.SUPPRESS)
    p_self.set_defaults(func=cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
