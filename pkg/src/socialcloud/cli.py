"""Command-line front end.

Usage::

    socialcloud metrics --graph g.txt [--params p.txt]
    socialcloud whatif add Medici Strozzi --graph florentine
    socialcloud choose 0 --graph g.txt
    socialcloud verify TWO_DIAM_NEGATIVE --n-max 5
    socialcloud scenario ring --n 10
    socialcloud scenario florentine

``--graph florentine`` selects the embedded marriage network. Exit status is
0 on success, 1 on usage or input errors and 2 when a universal claim has a
counterexample.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import reports
from .availability import PayoffParams, SharingParams
from .datasets import FLORENTINE_FAMILIES, florentine_network
from .graph import Network
from .io import read_graph, read_params, report_to_csv, report_to_json
from .oracle import DEFAULT_SAMPLE_SIZE, DEFAULT_SEED, FULL_N, MAX_N, PropertyId

__all__ = ["main", "DEFAULT_SHARING", "DEFAULT_PAYOFF"]

EXIT_OK, EXIT_USAGE, EXIT_COUNTEREXAMPLE = 0, 1, 2

DEFAULT_SHARING = SharingParams(Fraction(1, 2), Fraction(1, 2))
DEFAULT_PAYOFF = PayoffParams(Fraction(1), Fraction(1), Fraction(1, 10))

BUILTIN_GRAPH = "florentine"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit 1 rather than argparse's 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--params", metavar="FILE", help="parameter file")
    common.add_argument("--out", metavar="FILE", help="write the report here")
    common.add_argument("--format", choices=("json", "csv"), default="json")

    graph = _Parser(add_help=False)
    graph.add_argument(
        "--graph", metavar="FILE", required=True,
        help=f"graph file, or '{BUILTIN_GRAPH}' for the embedded network",
    )

    parser = _Parser(prog="socialcloud", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("metrics", parents=[common, graph], help="closeness, alpha, gamma, utility")

    p = sub.add_parser("whatif", parents=[common, graph], help="effect of one link change")
    p.add_argument("kind", choices=("add", "del"))
    p.add_argument("i")
    p.add_argument("j")

    p = sub.add_parser("choose", parents=[common, graph], help="rank partners for agent i")
    p.add_argument("i")

    p = sub.add_parser("verify", parents=[common], help="check a claim on small graphs")
    p.add_argument("property")
    p.add_argument("--n-max", type=int, default=FULL_N)
    p.add_argument("--sample-size", type=int, default=DEFAULT_SAMPLE_SIZE)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = sub.add_parser("scenario", parents=[common], help="ring or florentine scenario")
    p.add_argument("name", choices=("ring", "florentine"))
    p.add_argument("--n", type=int, default=10, help="ring size (ring only)")
    return parser


def _load_graph(spec: str) -> tuple[Network, dict[int, str]]:
    if spec == BUILTIN_GRAPH and not Path(spec).exists():
        return florentine_network(), dict(enumerate(FLORENTINE_FAMILIES))
    return read_graph(spec)


def _load_params(path: Optional[str]) -> tuple[SharingParams, PayoffParams]:
    if path is None:
        return DEFAULT_SHARING, DEFAULT_PAYOFF
    return read_params(path, DEFAULT_SHARING, DEFAULT_PAYOFF)


def _run(args: argparse.Namespace) -> tuple[dict, int]:
    sharing, payoff = _load_params(args.params)
    status = EXIT_OK
    if args.command == "verify":
        try:
            prop = PropertyId.parse(args.property)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if not 1 <= args.n_max <= MAX_N:
            raise UsageError(f"--n-max must be between 1 and {MAX_N}")
        report = reports.verify_report(
            prop, args.n_max, sharing, sample_size=args.sample_size, seed=args.seed
        )
        if prop.universal and report["counterexample_count"]:
            status = EXIT_COUNTEREXAMPLE
        return report, status
    if args.command == "scenario":
        if args.name == "florentine":
            return reports.florentine_report(), status
        if args.n < 5:
            raise UsageError("ring scenario needs --n of at least 5")
        return reports.ring_report(args.n, sharing), status

    g, labels = _load_graph(args.graph)
    if args.command == "metrics":
        return reports.metrics_report(g, labels, sharing, payoff), status
    if args.command == "whatif":
        i = reports.resolve_agent(args.i, g.n, labels)
        j = reports.resolve_agent(args.j, g.n, labels)
        change = reports.change_from(args.kind, i, j)
        return reports.whatif_report(g, labels, sharing, payoff, change), status
    i = reports.resolve_agent(args.i, g.n, labels)
    report = reports.choose_report(g, labels, sharing, payoff, i)
    if report["empty"]:
        print(f"note: agent {args.i} is already linked to every other agent", file=sys.stderr)
    return report, status


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        report, status = _run(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"socialcloud: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = report_to_csv(report) if args.format == "csv" else report_to_json(report)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
