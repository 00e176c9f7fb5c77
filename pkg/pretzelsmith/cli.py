"""
Command-line front door for PretzelSmith.

Run with: python -m pretzelsmith <command> ...

Results go to stdout and logs to stderr, so stdout is identical across
runs and worker counts. Entries are comma-separated integers, e.g.
``span -3,2,1`` or ``span "(-3,2,1)"``.

Exit codes: 0 on success, 1 on a domain error, 2 on a usage error.
"""

import argparse
import logging
import re
import sys
from typing import List, Optional

from pretzelsmith import __version__
from pretzelsmith.core import census
from pretzelsmith.core.bracket import kb_closed, kb_recursive
from pretzelsmith.core.diagram import PretzelDiagram, canonical, params, reduce, sort_desc
from pretzelsmith.core.planar import (
    build,
    component_count,
    jones,
    jones1,
    jones_span,
    max_state_sum,
    state_sum,
)
from pretzelsmith.core.spanlaw import span_checked, span_formula
from pretzelsmith.core.validator import EntryParseError, PretzelSmithError, parse_entries
from pretzelsmith.tables.matcher import audit, classify
from pretzelsmith.tables.table_loader import load_known_pretzels, load_table
from pretzelsmith.utils.formatting import (
    render_census_json,
    render_census_text,
    render_params,
    render_reports_json,
    render_reports_text,
)
from pretzelsmith.utils.parallel import default_jobs

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2

# a comma list such as -3,2 that argparse would take for an option
LEADING_NEGATIVE_LIST = re.compile(r"^-\d+(\s*,\s*-?\d+)+\s*$")


class VerificationError(PretzelSmithError):
    """Raised when independent evaluations of the same quantity differ."""


def _non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"not an integer: '{text}'") from e
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def _positive_int(text: str) -> int:
    value = _non_negative_int(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _guard_entry_lists(argv: List[str]) -> List[str]:
    """Wrap entry lists that start with a minus sign in parentheses."""
    return [f"({arg})" if LEADING_NEGATIVE_LIST.match(arg) else arg for arg in argv]


def _diagram(text: str) -> PretzelDiagram:
    return PretzelDiagram(parse_entries(text))


def _cmd_bracket(args: argparse.Namespace) -> int:
    diagram = _diagram(args.entries)
    value = kb_closed(diagram)
    print(value)
    if args.verify:
        if kb_recursive(diagram) != value:
            raise VerificationError(f"recursive bracket of {diagram} differs from closed form")
        checks = ["recursive"]
        if diagram.crossing_count <= max_state_sum():
            if state_sum(build(diagram)) != value:
                raise VerificationError(f"state sum of {diagram} differs from closed form")
            checks.append("state sum")
        else:
            logger.info(
                "Skipping state sum: %d crossings exceed the cap", diagram.crossing_count
            )
        print(f"verified: {', '.join(checks)}")
    return EXIT_OK


def _cmd_span(args: argparse.Namespace) -> int:
    given = _diagram(args.entries)
    diagram = sort_desc(reduce(given))
    if diagram != given:
        logger.info("Evaluating reduced sorted form %s of %s", diagram, given)

    if args.method == "formula":
        print(span_formula(diagram))
    elif args.method == "bracket":
        print(f"S={jones_span(diagram)} method=bracket")
    else:
        print(span_checked(diagram))
    return EXIT_OK


def _cmd_jones(args: argparse.Namespace) -> int:
    diagram = _diagram(args.entries)
    components = component_count(diagram)
    if components > 1:
        logger.warning(
            "%s has %d components; V depends on the chosen orientation",
            diagram,
            components,
        )
    if args.v1:
        print(jones1(diagram, integral=components == 1))
    else:
        print(jones(diagram))
    return EXIT_OK


def _cmd_reduce(args: argparse.Namespace) -> int:
    diagram = canonical(reduce(_diagram(args.entries)))
    print(render_params(diagram, params(diagram)))
    return EXIT_OK


def _cmd_enumerate(args: argparse.Namespace) -> int:
    jobs = args.jobs or default_jobs()
    entries = census.enumerate(args.span, knots_only=args.knots, jobs=jobs)
    if args.format == "json":
        print(render_census_json(entries))
    else:
        print(render_census_text(entries, args.span))

    if args.oracle:
        brute = census.brute_census(args.span, knots_only=args.knots, jobs=jobs)
        only_formula, only_bracket = census.compare_censuses(entries, brute)
        if only_formula or only_bracket:
            logger.warning(
                "Census oracle mismatch at S=%d: %d only from the span law, %d only from the bracket",
                args.span,
                len(only_formula),
                len(only_bracket),
            )
            raise VerificationError(
                f"census oracle mismatch: span law only {[str(d) for d in only_formula]}, "
                f"bracket only {[str(d) for d in only_bracket]}"
            )
        logger.info("Census oracle agrees on %d diagrams", len(entries))
    return EXIT_OK


def _cmd_classify(args: argparse.Namespace) -> int:
    records = load_table(args.table)
    reports = classify(records, jobs=args.jobs or default_jobs(), span=args.span)
    if args.format == "json":
        print(render_reports_json(reports))
    else:
        print(render_reports_text(reports))

    if args.audit:
        problems = audit(reports, load_known_pretzels())
        for problem in problems:
            print(f"audit: {problem}", file=sys.stderr)
        if problems:
            return EXIT_DOMAIN_ERROR
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    from pretzelsmith.api.app import create_app  # pylint: disable=import-outside-toplevel

    app = create_app()
    logger.info("PretzelSmith API: http://%s:%d/api", args.host, args.port)
    logger.info("Press Ctrl+C to stop")
    app.run(host=args.host, port=args.port, debug=False)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per operation."""
    parser = argparse.ArgumentParser(
        prog="python -m pretzelsmith",
        description="PretzelSmith - Jones spans and censuses of pretzel links",
    )
    parser.add_argument("--version", action="version", version=f"PretzelSmith {__version__}")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="log warnings only")

    commands = parser.add_subparsers(dest="command", required=True)

    bracket = commands.add_parser("bracket", help="Kauffman bracket of a diagram")
    bracket.add_argument("entries", help="entries such as 2,-3,-4")
    bracket.add_argument(
        "--verify",
        action="store_true",
        help="cross-check against the recursion and, within the cap, the state sum",
    )
    bracket.set_defaults(handler=_cmd_bracket)

    span = commands.add_parser("span", help="span of the Jones polynomial")
    span.add_argument("entries")
    span.add_argument("--method", choices=("formula", "bracket", "both"), default="formula")
    span.set_defaults(handler=_cmd_span)

    jones_cmd = commands.add_parser("jones", help="Jones polynomial of a diagram")
    jones_cmd.add_argument("entries")
    jones_cmd.add_argument("--v1", action="store_true", help="unknot-normalized V1")
    jones_cmd.set_defaults(handler=_cmd_jones)

    reduce_cmd = commands.add_parser("reduce", help="reduced canonical form and parameters")
    reduce_cmd.add_argument("entries")
    reduce_cmd.set_defaults(handler=_cmd_reduce)

    enumerate_cmd = commands.add_parser("enumerate", help="census of diagrams with span S")
    enumerate_cmd.add_argument("--span", type=_non_negative_int, required=True)
    enumerate_cmd.add_argument("--knots", action="store_true", help="knots only")
    enumerate_cmd.add_argument("--format", choices=("text", "json"), default="text")
    enumerate_cmd.add_argument(
        "--oracle", action="store_true", help="confirm against the bracket-based census"
    )
    enumerate_cmd.add_argument("--jobs", type=_positive_int, default=None)
    enumerate_cmd.set_defaults(handler=_cmd_enumerate)

    classify_cmd = commands.add_parser("classify", help="match a knot table against censuses")
    classify_cmd.add_argument("--table", required=True, help="JSON-lines knot table")
    classify_cmd.add_argument("--span", type=_non_negative_int, default=None)
    classify_cmd.add_argument("--format", choices=("text", "json"), default="text")
    classify_cmd.add_argument("--jobs", type=_positive_int, default=None)
    classify_cmd.add_argument(
        "--audit",
        action="store_true",
        help="compare verdicts with the bundled pretzel status of knots up to 9 crossings",
    )
    classify_cmd.set_defaults(handler=_cmd_classify)

    serve = commands.add_parser("serve", help="run the JSON API")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=_positive_int, default=5000)
    serve.set_defaults(handler=_cmd_serve)

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, dispatch to a subcommand and map errors to exit codes.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:]

    Returns:
        0 on success, 1 on a domain error, 2 on a usage error
    """
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_guard_entry_lists(argv))
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE_ERROR

    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    elif args.quiet:
        logging.getLogger().setLevel(logging.WARNING)

    try:
        return args.handler(args)
    except EntryParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE_ERROR
    except (PretzelSmithError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR
