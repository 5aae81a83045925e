"""Command-line front-end.

Exit codes: 0 success, 1 usage error, 2 verification failure / cannot
derive / infeasible where feasibility was asserted, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from .bounds import (
    BoundQuery,
    book_bound,
    lemma2_bound,
    lemma_p3_bound,
    parsons_bound,
    stars_bound,
    theorem_mt_bound,
)
from .derive import CannotDeriveError, derive, replay
from .graphs import (
    coloring_from_text,
    coloring_to_text,
    graph6_decode,
)
from .registry import RamseyFact, Registry, load_registry, seed_registry
from .search import (
    UNKNOWN,
    SearchBudget,
    computed_ramsey,
    partition_check,
    ramsey_by_search,
    search_coloring,
)
from .targets import CYCLE4, TargetList, parse_target_sequence, parse_targets, star
from .witness import BadWitnessError, extend_with_disjoint_clique, verify_lower_bound

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_BUDGET = 3


def _load_registry_arg(path: Optional[str]) -> Registry:
    if path is None:
        return seed_registry()
    return load_registry(path)


def _read_arg_or_file(value: str) -> str:
    if value.startswith("@"):
        return Path(value[1:]).read_text()
    return value


def _budget(args) -> SearchBudget:
    return SearchBudget(
        node_limit=args.node_limit,
        time_limit=args.time_limit,
        thread_hint=args.threads,
    )


def _add_budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--node-limit", type=int, default=50_000_000)
    p.add_argument("--time-limit", type=float, default=600.0, metavar="SECS")
    p.add_argument("--threads", type=int, default=1, metavar="N")


def _emit(args, doc: dict, text: str) -> None:
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        print(text)


def _cmd_bound(args) -> int:
    if args.mt or args.lemma2 or args.p3:
        r = tuple(args.r or [])
        if args.n is not None and args.n != len(r):
            raise SystemExit("--n disagrees with the number of --r values")
        q = BoundQuery(args.m, r)
        if args.mt:
            value, formula = theorem_mt_bound(q), "mt"
        elif args.p3:
            value, formula = lemma_p3_bound(q), "p3"
        else:
            value, formula = lemma2_bound(q), "lemma2"
    elif args.parsons is not None:
        value, formula = parsons_bound(args.parsons), "parsons"
    elif args.book is not None:
        reg = _load_registry_arg(args.registry)
        fact = reg.best_upper(TargetList((CYCLE4, star(args.book))))
        value, formula = book_bound(args.book, fact), "book"
    elif args.stars:
        value, formula = stars_bound(args.m, args.stars), "stars"
    else:
        raise SystemExit("choose one of --mt/--lemma2/--p3/--parsons/--book/--stars")
    _emit(args, {"command": "bound", "formula": formula, "value": value}, str(value))
    return EXIT_OK


def _cmd_derive(args) -> int:
    reg = _load_registry_arg(args.registry)
    targets = parse_targets(args.targets)
    try:
        tree = derive(targets, reg, depth_limit=args.depth)
    except CannotDeriveError as e:
        msg = "cannot derive; missing facts for: " + ", ".join(e.missing)
        if args.json:
            print(json.dumps({"command": "derive", "status": "cannot-derive", "missing": e.missing}))
        else:
            print(msg, file=sys.stderr)
        return EXIT_VERIFY
    replay(tree)
    doc = {"command": "derive", "status": "ok", "tree": tree.to_dict()}
    _emit(args, doc, f"{tree.value}\n{tree.render_text()}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    coloring = coloring_from_text(_read_arg_or_file(args.coloring))
    targets = parse_target_sequence(args.targets)
    try:
        fact = verify_lower_bound(coloring, targets, source=args.coloring.lstrip("@"))
    except BadWitnessError as e:
        doc = {
            "command": "verify",
            "status": "bad-witness",
            "color": e.color,
            "target": str(e.target),
            "vertices": list(e.vertices),
        }
        _emit(args, doc, f"BAD WITNESS: {e}")
        return EXIT_VERIFY
    doc = {"command": "verify", "status": "ok", "fact": fact.to_line()}
    _emit(args, doc, fact.to_line())
    return EXIT_OK


def _outcome_doc(command: str, outcome, extra: Optional[dict] = None) -> dict:
    doc = {"command": command, **outcome.to_dict()}
    if extra:
        doc.update(extra)
    return doc


def _write_witness(args, outcome) -> None:
    if getattr(args, "witness_out", None) and outcome.witness is not None:
        Path(args.witness_out).write_text(coloring_to_text(outcome.witness))


def _cmd_search(args) -> int:
    targets = parse_target_sequence(args.targets)
    budget = _budget(args)
    caps = args.degree_caps
    if args.n_min is not None or args.n_max is not None:
        if args.n_min is None or args.n_max is None:
            raise SystemExit("--n-min and --n-max go together")
        outcomes = ramsey_by_search(targets, args.n_min, args.n_max, budget)
        value = computed_ramsey(outcomes)
        doc = {
            "command": "search",
            "outcomes": {str(n): o.to_dict() for n, o in outcomes.items()},
            "ramsey_number": value,
        }
        lines = [f"N={n}: {o.status.capitalize()} ({o.nodes_explored} nodes)" for n, o in outcomes.items()]
        if value is not None:
            lines.append(f"R = {value}")
        _emit(args, doc, "\n".join(lines))
        if any(o.status == UNKNOWN for o in outcomes.values()):
            return EXIT_BUDGET
        return EXIT_OK
    if args.n is None:
        raise SystemExit("need --n or --n-min/--n-max")
    outcome = search_coloring(args.n, targets, budget, caps)
    _write_witness(args, outcome)
    _emit(
        args,
        _outcome_doc("search", outcome, {"n": args.n}),
        f"{outcome.status.capitalize()} ({outcome.nodes_explored} nodes)",
    )
    if outcome.status == UNKNOWN:
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_partition_check(args) -> int:
    g = graph6_decode(_read_arg_or_file(args.graph6))
    targets = parse_target_sequence(args.targets)
    if len(targets) != 2:
        raise SystemExit("partition-check needs exactly two targets")
    outcome = partition_check(g, (targets[0], targets[1]), _budget(args))
    _write_witness(args, outcome)
    _emit(
        args,
        _outcome_doc("partition-check", outcome),
        f"{outcome.status.capitalize()} ({outcome.nodes_explored} nodes)",
    )
    return EXIT_BUDGET if outcome.status == UNKNOWN else EXIT_OK


def _cmd_witness(args) -> int:
    coloring = coloring_from_text(_read_arg_or_file(args.coloring))
    targets = parse_target_sequence(args.targets)
    try:
        extended, promoted = extend_with_disjoint_clique(
            coloring, targets, args.add_clique, args.c4_color, args.clique_color
        )
    except (ValueError, BadWitnessError) as e:
        _emit(args, {"command": "witness", "status": "error", "message": str(e)}, f"ERROR: {e}")
        return EXIT_VERIFY
    if args.witness_out:
        Path(args.witness_out).write_text(coloring_to_text(extended))
    fact = verify_lower_bound(extended, promoted, source="disjoint-clique extension")
    doc = {
        "command": "witness",
        "status": "ok",
        "targets": ",".join(str(t) for t in promoted),
        "fact": fact.to_line(),
        "witness": coloring_to_text(extended),
    }
    _emit(args, doc, fact.to_line())
    return EXIT_OK


def _cmd_registry(args) -> int:
    reg = _load_registry_arg(args.registry)
    if args.add:
        fact = RamseyFact.from_line(args.add)
        reg.add(fact)
        if args.registry:
            reg.save(args.registry)
    lines = [f.to_line() for f in reg.facts()]
    _emit(args, {"command": "registry", "facts": lines}, "\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="c4ramsey",
        description="Ramsey upper-bound derivations and desk-scale coloring searches",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="evaluate one bound formula")
    p.add_argument("--mt", action="store_true")
    p.add_argument("--lemma2", action="store_true")
    p.add_argument("--p3", action="store_true")
    p.add_argument("--parsons", type=int, metavar="K")
    p.add_argument("--book", type=int, metavar="K")
    p.add_argument("--stars", type=int, nargs="+", metavar="K")
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int, nargs="*")
    p.add_argument("--registry", metavar="PATH")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("derive", help="derive an upper bound with an audit tree")
    p.add_argument("targets")
    p.add_argument("--registry", metavar="PATH")
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_derive)

    p = sub.add_parser("verify", help="verify a lower-bound witness coloring")
    p.add_argument("targets")
    p.add_argument("--coloring", required=True, metavar="STR|@FILE")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("search", help="search for a good coloring of K_N")
    p.add_argument("--targets", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--degree-caps", type=int, nargs="+")
    p.add_argument("--witness-out", metavar="PATH")
    p.add_argument("--json", action="store_true")
    _add_budget_flags(p)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("partition-check", help="split a C4-free graph's non-edges")
    p.add_argument("--graph6", required=True, metavar="STR|@FILE")
    p.add_argument("--targets", default="K3,K4")
    p.add_argument("--witness-out", metavar="PATH")
    p.add_argument("--json", action="store_true")
    _add_budget_flags(p)
    p.set_defaults(func=_cmd_partition_check)

    p = sub.add_parser("witness", help="extend a witness by a disjoint clique")
    p.add_argument("targets")
    p.add_argument("--coloring", required=True, metavar="STR|@FILE")
    p.add_argument("--add-clique", type=int, default=3, metavar="K")
    p.add_argument("--c4-color", type=int, default=0)
    p.add_argument("--clique-color", type=int, default=1)
    p.add_argument("--witness-out", metavar="PATH")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("registry", help="list or extend a fact registry")
    p.add_argument("--registry", metavar="PATH")
    p.add_argument("--add", metavar="FACT_LINE")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_registry)

    return parser


def run(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except SystemExit as e:
        if isinstance(e.code, str):
            print(e.code, file=sys.stderr)
            return EXIT_USAGE
        return e.code if e.code is not None else EXIT_OK
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    raise SystemExit(run())
