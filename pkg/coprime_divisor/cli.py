import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

from pydantic import ValidationError

from coprime_divisor.analysis import analyze_group, check_certificate
from coprime_divisor.classification import FAMILIES, VerifyOptions, render_summary, verify_theorems, write_reports
from coprime_divisor.errors import CoprimeDivisorError
from coprime_divisor.graphs import Graph, read_edge_list, to_dot
from coprime_divisor.group_graphs import RadicalGraph
from coprime_divisor.logger import logger
from coprime_divisor.recognition import Verdict, brute_force_verdict, is_divisor_graph
from coprime_divisor.rendering import dumps_json
from coprime_divisor.version import __version__

EXIT_DIVISOR = 0
EXIT_NOT_DIVISOR = 1
EXIT_ERROR = 2


def _write_radical_dot(radicals: RadicalGraph, verdict: Verdict, path: Path) -> None:
    arcs = verdict.certificate.orientation.arcs if verdict.certificate is not None else None
    _ = path.write_text(to_dot(radicals.graph, arcs, name='radicals'), encoding='utf-8')


def cmd_analyze(args: argparse.Namespace) -> int:
    report, radicals = analyze_group(args.spec, args.element_cap)
    if args.dot is not None:
        _write_radical_dot(radicals, report.verdict, args.dot)
    if args.json:
        print(report.to_json().decode())
    else:
        print(report.render_text(), end='')
    return EXIT_DIVISOR if report.verdict.is_divisor else EXIT_NOT_DIVISOR


def _decide(g: Graph, *, oracle: bool) -> Verdict:
    verdict = brute_force_verdict(g) if oracle else is_divisor_graph(g)
    check_certificate(g, verdict)
    return verdict


def cmd_graph_is_divisor(args: argparse.Namespace) -> int:
    g = read_edge_list(args.path)
    verdict = _decide(g, oracle=args.oracle)
    if args.json:
        print(dumps_json(verdict).decode())
    else:
        print(f'divisor: {"yes" if verdict.is_divisor else "no"} ({verdict.method})')
        print(f'evidence: {verdict.describe_evidence()}')
        if verdict.certificate is not None:
            for vertex, label in verdict.certificate.labeling.labels.items():
                print(f'    {vertex}: {label}')
    return EXIT_DIVISOR if verdict.is_divisor else EXIT_NOT_DIVISOR


def cmd_graph_label(args: argparse.Namespace) -> int:
    g = read_edge_list(args.path)
    verdict = _decide(g, oracle=args.oracle)
    if verdict.certificate is None:
        print(f'not a divisor graph: {verdict.describe_evidence()}', file=sys.stderr)
        return EXIT_NOT_DIVISOR
    print(verdict.certificate.labeling.to_json().decode())
    return EXIT_DIVISOR


def cmd_verify_theorems(args: argparse.Namespace) -> int:
    families = FAMILIES if args.family == 'all' else (args.family,)
    options = VerifyOptions(families=families, max_n=args.max_n, cases=args.cases, seed=args.seed)
    reports = verify_theorems(options)
    written = write_reports(reports, args.out)
    print(render_summary(reports), end='')
    print(f'reports written to {args.out} ({len(written)} files)')
    return EXIT_DIVISOR if all(report.all_agree for report in reports) else EXIT_NOT_DIVISOR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='coprime-divisor',
        description='Decide whether coprime graphs of finite groups, or arbitrary graphs, are divisor graphs.',
    )
    _ = parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    _ = parser.add_argument('-v', '--verbose', action='store_true', help='log decisions at INFO level')
    commands = parser.add_subparsers(dest='command', required=True)

    analyze = commands.add_parser('analyze', help='analyze the coprime graph of a group')
    _ = analyze.add_argument('spec', help='group spec, e.g. "S 7" or "DP (Z 2) (D 10)"')
    _ = analyze.add_argument('--json', action='store_true', help='print the report as JSON')
    _ = analyze.add_argument('--dot', type=Path, help='write the radical graph in DOT format to this path')
    _ = analyze.add_argument('--element-cap', type=int, help='override the element enumeration cap')
    analyze.set_defaults(handler=cmd_analyze)

    graph = commands.add_parser('graph', help='decide an edge-list graph')
    graph_commands = graph.add_subparsers(dest='graph_command', required=True)
    for name, handler, help_text in (
        ('is-divisor', cmd_graph_is_divisor, 'print the verdict and its evidence'),
        ('label', cmd_graph_label, 'print a divisor labeling as JSON'),
    ):
        sub = graph_commands.add_parser(name, help=help_text)
        _ = sub.add_argument('path', type=Path, help='edge-list file')
        _ = sub.add_argument('--oracle', action='store_true', help='decide by exhaustive search (small graphs)')
        _ = sub.add_argument('--json', action='store_true', help='print the verdict as JSON')
        sub.set_defaults(handler=handler)

    verify = commands.add_parser('verify-theorems', help='check the closed-form answers against the recognizer')
    _ = verify.add_argument('--family', choices=('all', *FAMILIES), default='all')
    _ = verify.add_argument(
        '--max-n', type=int, help='upper bound for the group-family sweeps (symmetric and alternating stop at 64)'
    )
    _ = verify.add_argument('--cases', type=int, default=10_000, help='random graphs in the oracle family')
    _ = verify.add_argument('--seed', type=int, default=7, help='seed of the oracle corpus')
    _ = verify.add_argument('--out', type=Path, default=Path('verify-reports'), help='report directory')
    verify.set_defaults(handler=cmd_verify_theorems)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line; returns 0 for a divisor graph or full agreement, 1 otherwise, 2 on errors."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        return handler(args)
    except (CoprimeDivisorError, ValidationError, OSError) as e:
        logger.warning('command_failed', extra={'command': args.command, 'error': type(e).__name__})
        print(f'error: {e}', file=sys.stderr)
        return EXIT_ERROR
