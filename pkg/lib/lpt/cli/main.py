"""Command line front door.

Exit codes: 0 success, 1 a check or demo did not pass, 2 invalid input
(specification, trace, dump, configuration or arguments), 3 internal
invariant violation. Data goes to stdout, diagnostics to stderr.
"""

import argparse
import logging
import sys

from lib.lpt import __version__
from lib.lpt.cli import bench, commands
from lib.lpt.conf.Configuration import configure_logging, parse_log_level
from lib.lpt.core.exc import BudgetExceeded, InputError, InvariantViolation, StateError

logger = logging.getLogger("lpt.cli")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_INVARIANT = 3


def _add_spec_arguments(parser, required=True):
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("spec", nargs="?", help="specification file")
    group.add_argument("--formula", help="specification text, instead of a file")
    parser.add_argument("--vocabulary", help="comma separated list of allowed labels")


def _add_run_arguments(parser):
    parser.add_argument("files", nargs="*", metavar="FILE",
                        help="specification file then trace file (the specification is omitted with --formula)")
    parser.add_argument("--formula", help="specification text, instead of a file")
    parser.add_argument("--vocabulary", help="comma separated list of allowed labels")
    parser.add_argument("--trace", help="JSON Lines trace file, instead of the second FILE")


def build_parser():
    parser = argparse.ArgumentParser(prog="lpt", description="Live progress tracking of LTL_f specifications.")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    parser.add_argument("--log-level", help="overrides LPT_LOG and the configuration file")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    parse = subparsers.add_parser("parse", help="parse a specification and describe its tree")
    _add_spec_arguments(parse)
    parse.set_defaults(handler=commands.cmd_parse)

    track = subparsers.add_parser("track", help="track a specification over a trace")
    _add_run_arguments(track)
    track.add_argument("--per-step", action="store_true", help="one report per update")
    track.add_argument("--finalize", action="store_true", help="apply terminal evaluation at the end")
    track.add_argument("--out", help="write the reports to this file")
    track.add_argument("--format", choices=("json", "text"), default="json")
    track.add_argument("--timing", action="store_true", help="add wall_time_ms to reports")
    track.set_defaults(handler=commands.cmd_track)

    check = subparsers.add_parser("oracle-check", help="check engine output against the oracle")
    _add_run_arguments(check)
    check.add_argument("--horizon", type=int, default=4, help="continuation length K")
    check.add_argument("--dump", help="check recorded dumps (track --per-step output)")
    check.set_defaults(handler=commands.cmd_oracle_check)

    demo = subparsers.add_parser("demo-keys", help="reproduce the key collection example")
    demo.add_argument("--format", choices=("json", "text"), default="json")
    demo.set_defaults(handler=commands.cmd_demo_keys)

    sim = subparsers.add_parser("rm-sim", help="reward machine demo on a key gridworld")
    _add_spec_arguments(sim, required=False)
    sim.add_argument("--grid", type=int, default=5, help="grid size N")
    sim.add_argument("--episodes", type=int, default=2)
    sim.add_argument("--steps", type=int, default=None, help="moves per episode (default 4N)")
    sim.add_argument("--policy", choices=("goal", "novelty"), default="novelty")
    sim.add_argument("--agent", choices=("random", "replay", "divergent", "qlearn"), default="replay")
    sim.add_argument("--target", help="goal signature as JSON text or file")
    sim.add_argument("--base-reward", type=float, default=1.0)
    sim.add_argument("--digest", choices=("signature", "state"), default="signature")
    sim.add_argument("--seed", type=int, default=0)
    sim.set_defaults(handler=commands.cmd_rm_sim)

    sweep = subparsers.add_parser("bench", help="evaluation count against 2^L * n^2")
    sweep.add_argument("--heights", default="0-4", help="e.g. 0-4 or 0,2,3")
    sweep.add_argument("--lengths", default="1-20", help="e.g. 1-20 or 3,5")
    sweep.add_argument("--trials", type=int, default=50)
    sweep.add_argument("--seed", type=int, default=0)
    sweep.add_argument("--workers", type=int, default=None, help="processes (default from config)")
    sweep.add_argument("--out", help="CSV file (default stdout)")
    sweep.set_defaults(handler=bench.cmd_bench)
    return parser


def parse_arguments(parser, argv=None):
    """parse_args, except that track and oracle-check files may follow options.

    ``lpt track --formula "F a" run.jsonl`` leaves run.jsonl unrecognized once
    the FILE list has been consumed empty; it is appended to it here.
    """
    args, extras = parser.parse_known_args(argv)
    if extras:
        if not hasattr(args, "files") or any(extra.startswith("-") for extra in extras):
            parser.error("unrecognized arguments: %s" % (" ".join(extras)))
        args.files.extend(extras)
    return args


def main(argv=None, stdout=None):
    stdout = sys.stdout if stdout is None else stdout
    parser = build_parser()
    try:
        args = parse_arguments(parser, argv)
    except SystemExit as err:
        return EXIT_OK if not err.code else EXIT_INPUT
    try:
        configure_logging(parse_log_level(args.log_level) if args.log_level else None)
        return args.handler(args, stdout)
    except (InputError, BudgetExceeded) as err:
        logger.debug("input error", exc_info=True)
        sys.stderr.write("lpt %s: error: %s\n" % (args.command, err))
        return EXIT_INPUT
    except (IOError, OSError) as err:
        sys.stderr.write("lpt %s: error: %s\n" % (args.command, err))
        return EXIT_INPUT
    except (InvariantViolation, StateError) as err:
        logger.error("invariant violation: %s", err)
        sys.stderr.write("lpt %s: internal error: %s\n" % (args.command, err))
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
