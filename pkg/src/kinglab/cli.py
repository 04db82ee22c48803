"""Command-line front end: generate graphs, verify properties, audit procedures.

Exit codes: 0 success, 1 verification failure, 2 bad usage or
parameters. Every command takes ``--json`` where there is a report to
emit; the JSON carries every field of the human-readable output and is
byte-identical across runs with the same arguments.
"""

import argparse
import json
import sys

from .constructions import (
    flipped_parity_tournament,
    kingless_digraph,
    layered_tournament,
    parity_tournament,
    perturbed_kingless_digraph,
)
from .fileformat import GraphFileError, format_graph, write_graph
from .graphs import GraphError, Tournament, random_tournament
from .harness import (
    PROCEDURE_FORMS,
    exist_king_hard_distribution,
    get_procedure,
    monte_carlo_error,
    strong_king_hard_distribution,
    verify_properties,
)
from .query import EXIST_KING, STRONG_KING, _audit_exist_king, _audit_strong_king

_FAMILY_EXTRAS = {
    "delta": (),
    "u": (),
    "c": (),
    "c-flip": ("i", "j"),
    "u-flip": ("u", "v"),
    "random": ("seed?",),
}


def _build_graph(family: str, n: int, extras: list):
    spec = _FAMILY_EXTRAS[family]
    required = [e for e in spec if not e.endswith("?")]
    if len(extras) < len(required) or len(extras) > len(spec):
        names = " ".join(s.rstrip("?") for s in spec) or "none"
        raise GraphError(
            "family %s takes extra parameters: %s (got %d)" % (family, names, len(extras))
        )
    if family == "delta":
        return layered_tournament(n)
    if family == "u":
        return parity_tournament(n)
    if family == "c":
        return kingless_digraph(n)
    if family == "c-flip":
        return perturbed_kingless_digraph(n, extras[0], extras[1])
    if family == "u-flip":
        return flipped_parity_tournament(n, (extras[0], extras[1]))
    return random_tournament(n, extras[0] if extras else 0)


def _cmd_gen(args) -> int:
    graph = _build_graph(args.family, args.n, args.extras)
    kind = "tournament" if isinstance(graph, Tournament) else "digraph"
    counts = "%s %d vertices %d edges" % (kind, graph.n, graph.edge_count)
    if args.out:
        write_graph(graph, args.out)
        print("wrote %s: %s" % (args.out, counts))
    else:
        sys.stdout.write(format_graph(graph))
        print(counts, file=sys.stderr)
    return 0


def _cmd_verify(args) -> int:
    report = verify_properties(args.n_max, inject_fault=args.inject_fault)
    if args.json:
        payload = {
            "n_max": report.n_max,
            "all_passed": report.all_passed,
            "checks": report.to_records(),
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for r in report.results:
            line = "%s  %-32s n=%-3d" % ("PASS" if r.passed else "FAIL", r.check, r.n)
            if r.counterexample:
                line += "  %s" % r.counterexample
            print(line)
        passed = sum(1 for r in report.results if r.passed)
        print("summary: %d/%d checks passed" % (passed, len(report.results)))
    return 0 if report.all_passed else 1


def _lookup(task: str, name: str):
    try:
        return get_procedure(task, name)
    except KeyError:
        raise GraphError(
            "no procedure %r for task %s; known forms: %s"
            % (name, task, ", ".join(PROCEDURE_FORMS[task]))
        ) from None


def _cmd_audit(args) -> int:
    procedure = _lookup(args.task, args.procedure)
    if args.task == EXIST_KING:
        bound, queried, outcome = _audit_exist_king(procedure, args.n, args.budget)
    else:
        bound, queried, outcome = _audit_strong_king(procedure, args.n, args.budget)
    fields = [
        ("task", args.task),
        ("procedure", args.procedure),
        ("n", args.n),
        ("budget", args.budget),
        ("bound", str(bound)),
        ("bound-float", float(bound)),
        ("queried-pairs", queried),
        ("budget-exceeded", outcome.budget_exceeded),
        ("exceeds-one-third", bound * 3 > 1),
    ]
    _emit(fields, args.json)
    return 0


def _cmd_mc(args) -> int:
    procedure = _lookup(args.task, args.procedure)
    if args.task == EXIST_KING:
        dist = exist_king_hard_distribution(args.n)
    else:
        dist = strong_king_hard_distribution(args.n)
    est = monte_carlo_error(procedure, dist, args.trials, budget=args.budget, seed=args.seed)
    fields = [
        ("task", args.task),
        ("procedure", args.procedure),
        ("n", args.n),
        ("budget", args.budget),
        ("trials", est.trials),
        ("seed", est.seed),
        ("estimate", est.estimate),
        ("standard-error", est.standard_error),
    ]
    _emit(fields, args.json)
    return 0


def _emit(fields, as_json: bool) -> None:
    if as_json:
        print(json.dumps({k.replace("-", "_"): v for k, v in fields}, indent=2, sort_keys=True))
    else:
        for key, value in fields:
            print("%s: %s" % (key, value))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kinglab",
        description="Tournament king constructions, property checks, and query-budget audits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a graph and write it as text")
    gen.add_argument("family", choices=sorted(_FAMILY_EXTRAS))
    gen.add_argument("n", type=int, help="family size parameter")
    gen.add_argument("extras", type=int, nargs="*", help="c-flip: i j; u-flip: u v; random: [seed]")
    gen.add_argument("--out", help="output path (default: stdout)")
    gen.set_defaults(func=_cmd_gen)

    ver = sub.add_parser("verify", help="check structural properties up to n-max")
    ver.add_argument("n_max", type=int, help="largest (odd) size to sweep")
    ver.add_argument("--json", action="store_true")
    ver.add_argument("--inject-fault", action="store_true", help="flip one edge first; must be caught")
    ver.set_defaults(func=_cmd_verify)

    aud = sub.add_parser("audit", help="adversarial error lower bound for a procedure")
    aud.add_argument("task", choices=[EXIST_KING, STRONG_KING])
    aud.add_argument("procedure")
    aud.add_argument("n", type=int, help="construction size parameter")
    aud.add_argument("budget", type=int)
    aud.add_argument("--json", action="store_true")
    aud.set_defaults(func=_cmd_audit)

    mc = sub.add_parser("mc", help="Monte-Carlo error estimate under the hard distribution")
    mc.add_argument("task", choices=[EXIST_KING, STRONG_KING])
    mc.add_argument("procedure")
    mc.add_argument("n", type=int, help="construction size parameter")
    mc.add_argument("budget", type=int)
    mc.add_argument("trials", type=int)
    mc.add_argument("seed", type=int)
    mc.add_argument("--json", action="store_true")
    mc.set_defaults(func=_cmd_mc)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, GraphFileError, ValueError) as exc:
        print("error: %s" % (exc.args[0] if exc.args else exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
