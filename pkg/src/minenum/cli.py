"""Command line interface: ``minenum run | audit | oracle``."""
from __future__ import annotations

import argparse
import json
import random
import sys
from itertools import combinations
from pathlib import Path

from .cks import ds_tuple_bound
from .engine import EngineError, SolutionRecord
from .io import GraphInstance, ParseError, parse_id_list, read_instance
from .model import Graph, GraphError, Hypergraph, build_graph, build_hypergraph
from .oracle import OracleTooLarge, audit_run, brute_minimal_sets
from .properties import PropertyError, PropertyInstance
from .registry import PROPERTIES, make_property
from .runner import run_enumeration

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INFEASIBLE = 2
EXIT_AUDIT_FAILED = 3


def _add_property_flags(parser: argparse.ArgumentParser, k_required: bool) -> None:
    parser.add_argument("--property", required=True, choices=PROPERTIES)
    parser.add_argument("--k", type=int, required=k_required, help="budget")
    parser.add_argument("--degree-bound", type=int, help="d for bdd")
    parser.add_argument("--rank", type=int, help="d for hs")
    parser.add_argument("--terminals", help="comma-separated 1-based terminals for steiner")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minenum",
        description="Enumerate minimal solutions containing every one of size at most k.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="enumerate and stream solutions")
    _add_property_flags(run, k_required=True)
    run.add_argument("--input", required=True)
    run.add_argument("--seed-file", help="user seed: 1-based ids of a minimal solution")
    run.add_argument("--cap-inclusive", action="store_true",
                     help="admit sets of size |S| + k (default: strictly below)")
    run.add_argument("--force", action="store_true",
                     help="enumerate even if the seed certifies infeasibility")
    run.add_argument("--format", choices=("jsonl", "plain"), default="jsonl")
    run.add_argument("--max-solutions", type=int)
    run.add_argument("--work-limit", type=int, default=10**6,
                     help="warn when the ds restricted search may exceed this many tuples")
    run.add_argument("--check", action="store_true", help="re-verify every emission")

    audit = sub.add_parser("audit", help="enumerate and cross-check against brute force")
    _add_property_flags(audit, k_required=False)
    source = audit.add_mutually_exclusive_group(required=True)
    source.add_argument("--input")
    source.add_argument("--random", nargs=3, type=int, metavar=("N", "M", "COUNT"))
    audit.add_argument("--rng-seed", type=int, default=0)
    audit.add_argument("--factor-claim", type=float,
                       help="claimed approximation factor (default: the property's)")
    audit.add_argument("--cap-inclusive", action="store_true")

    oracle = sub.add_parser("oracle", help="dump the brute-force family of minimal sets")
    _add_property_flags(oracle, k_required=False)
    oracle.add_argument("--input", required=True)
    return parser


def _terminals(args, instance) -> tuple[int, ...] | None:
    if args.terminals:
        return tuple(parse_id_list(args.terminals, "--terminals"))
    if isinstance(instance, GraphInstance):
        return instance.terminals
    return None


def _load_property(args, instance) -> PropertyInstance:
    ground = instance.graph if isinstance(instance, GraphInstance) else instance
    return make_property(
        args.property,
        ground,
        degree_bound=args.degree_bound,
        rank=args.rank,
        terminals=_terminals(args, instance),
    )


def _format(record: SolutionRecord, fmt: str) -> str:
    ids = [e + 1 for e in record.solution]
    if fmt == "plain":
        return " ".join(map(str, ids))
    return json.dumps(
        {"solution": ids, "size": record.size, "within_k": record.within_budget},
        separators=(",", ":"),
    )


def _err(message: str) -> None:
    print(f"minenum: {message}", file=sys.stderr)


def cmd_run(args) -> int:
    instance = read_instance(args.input)
    p = _load_property(args, instance)
    if p.name == "ds" and ds_tuple_bound(p.ground) > args.work_limit:
        _err(f"warning: max degree {p.ground.max_degree} allows up to "
             f"{ds_tuple_bound(p.ground)} dominator tuples per restricted call")
    seed = None
    if args.seed_file:
        ids = parse_id_list(Path(args.seed_file).read_text(encoding="utf-8"), args.seed_file)
        seed = p.element_set(ids)

    out = sys.stdout

    def emit(record: SolutionRecord) -> None:
        out.write(_format(record, args.format) + "\n")
        out.flush()

    outcome = run_enumeration(
        p, args.k, emit,
        seed=seed, force=args.force, cap_inclusive=args.cap_inclusive,
        max_solutions=args.max_solutions, check=args.check,
    )
    if outcome.infeasible:
        reason = outcome.seed_result.certificate() if outcome.seed_result else "infeasible"
        print(json.dumps({"infeasible": reason, "k": args.k}), file=sys.stderr)
        return EXIT_INFEASIBLE
    summary = outcome.summary.as_dict()
    summary.update(property=p.name, k=args.k, seed_size=len(outcome.seed),
                   seed_factor=str(outcome.seed_factor))
    print(json.dumps({"summary": summary}), file=sys.stderr)
    return EXIT_OK


def random_graph(rng: random.Random, n: int, m: int) -> Graph:
    pairs = list(combinations(range(n), 2))
    return build_graph(n, rng.sample(pairs, min(m, len(pairs))))


def random_hypergraph(rng: random.Random, n: int, m: int, rank: int) -> Hypergraph:
    edges = [rng.sample(range(n), rng.randint(1, min(rank, n))) for _ in range(m)] if n else []
    return build_hypergraph(n, edges, rank=rank)


def random_terminals(rng: random.Random, g: Graph) -> tuple[int, ...]:
    start = rng.randrange(g.vertex_count)
    component, stack = {start}, [start]
    while stack:
        for w in g.adjacency[stack.pop()]:
            if w not in component:
                component.add(w)
                stack.append(w)
    return tuple(sorted(rng.sample(sorted(component), rng.randint(1, len(component)))))


def _random_instances(args):
    n, m, count = args.random
    rng = random.Random(args.rng_seed)
    for _ in range(count):
        if args.property == "hs":
            yield random_hypergraph(rng, n, m, args.rank or 3)
            continue
        g = random_graph(rng, n, m)
        if args.property == "steiner" and not args.terminals:
            yield GraphInstance(g, random_terminals(rng, g) if n else (0,))
        else:
            yield GraphInstance(g)


def audit_instance(p: PropertyInstance, ks, factor_claim, cap_inclusive=False) -> list[str]:
    """Run every budget in ``ks`` and return a description of each failure."""
    failures = []
    truth = brute_minimal_sets(p)
    for k in ks:
        emitted = []
        outcome = run_enumeration(p, k, lambda r: emitted.append(r.solution),
                                  cap_inclusive=cap_inclusive)
        if outcome.infeasible:
            if any(len(s) <= k for s in truth):
                failures.append(f"k={k}: seed declared infeasible but a solution exists")
            continue
        report = audit_run(p, k, factor_claim, emitted, truth)
        if not report.ok:
            failures.append(
                f"k={k}: complete={report.complete} minimal={report.all_minimal} "
                f"distinct={report.no_duplicates} factor_ok={report.factor_ok} "
                f"observed={report.observed_factor:.3g} missing={len(report.missing)}"
            )
    return failures


def cmd_audit(args) -> int:
    instances = [read_instance(args.input)] if args.input else list(_random_instances(args))
    failed = 0
    for index, instance in enumerate(instances):
        p = _load_property(args, instance)
        claim = args.factor_claim if args.factor_claim is not None else p.output_factor
        ks = [args.k] if args.k is not None else range(1, max(p.universe, 1) + 1)
        failures = audit_instance(p, ks, claim, args.cap_inclusive)
        for f in failures:
            print(f"instance {index}: {f}")
        failed += bool(failures)
    print(f"audited {len(instances)} instances of {args.property}: {failed} failed")
    return EXIT_AUDIT_FAILED if failed else EXIT_OK


def cmd_oracle(args) -> int:
    instance = read_instance(args.input)
    p = _load_property(args, instance)
    for s in brute_minimal_sets(p, size_cap=args.k):
        print(" ".join(str(e + 1) for e in s))
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"run": cmd_run, "audit": cmd_audit, "oracle": cmd_oracle}[args.command]
    try:
        return handler(args)
    except (ParseError, GraphError, PropertyError, EngineError, OracleTooLarge, OSError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    except BrokenPipeError:
        return EXIT_OK
    except KeyboardInterrupt:
        sys.stdout.flush()
        return 130


if __name__ == "__main__":
    sys.exit(main())
