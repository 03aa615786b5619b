"""Bench module.

Sweeps formula heights and trace lengths, runs the engine on seeded random
instances and tabulates the mean evaluation count against 2^L * n^2.
"""

import logging

import numpy
import pandas

from lib.lpt.conf.Configuration import get_config
from lib.lpt.core.exc import ConfigError, InvariantViolation
from lib.lpt.engine import tracker
from lib.lpt.engine.tree import build_tree
from lib.lpt.utils.instances import LABEL_NAMES, random_formula, random_trace
from lib.lpt.utils.parallel import easy_parallelize

logger = logging.getLogger("lpt.cli")

COLUMNS = ["height", "trace_len", "trials", "mean_count", "bound", "ratio"]
BENCH_LABELS = LABEL_NAMES[:3]


def parse_range(text):
    """Expand "0-4" to [0, 1, 2, 3, 4] and "1,3" to [1, 3]; empty text gives []."""
    values = []
    for part in (text or "").split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if "-" in part:
                low, high = part.split("-", 1)
                values.extend(range(int(low), int(high) + 1))
            else:
                values.append(int(part))
        except ValueError:
            raise ConfigError("cannot read range '%s'" % (part))
    if any(value < 0 for value in values):
        raise ConfigError("ranges must be nonnegative: %s" % (text))
    return values


def run_trial(parameters):
    """Evaluation count of one seeded instance; raises if it breaks the bound."""
    height, length, seed, trial = parameters
    random = numpy.random.RandomState([seed, height, length, trial])
    f = random_formula(random, height, BENCH_LABELS, full=(trial % 2 == 0))
    trace = random_trace(random, length, BENCH_LABELS)
    state = tracker.track(build_tree(f), trace, strict=False)
    bound = tracker.complexity_bound(state.tree, length)
    if state.eval_count > bound:
        raise InvariantViolation("%i evaluations for height %i and length %i exceed %i"
                                 % (state.eval_count, height, length, bound))
    return state.eval_count


def bench_table(heights, lengths, trials, seed=0, workers=1):
    rows = []
    if trials > 0:
        for height in heights:
            for length in lengths:
                if length == 0:
                    continue
                counts = easy_parallelize(run_trial, [(height, length, seed, trial)
                                                      for trial in range(trials)], workers)
                bound = (2 ** height) * length * length
                mean = float(numpy.mean(counts))
                rows.append([height, length, trials, mean, bound, mean / bound])
                logger.debug("height %i length %i: mean %.2f bound %i", height, length, mean, bound)
    return pandas.DataFrame(rows, columns=COLUMNS)


def cmd_bench(args, out):
    if args.trials < 0:
        raise ConfigError("--trials must be nonnegative")
    workers = args.workers if args.workers is not None else get_config().bench_workers()
    if workers < 1:
        raise ConfigError("--workers must be at least 1")
    table = bench_table(parse_range(args.heights), parse_range(args.lengths), args.trials,
                        args.seed, workers)
    if args.out:
        table.to_csv(args.out, index=False)
    else:
        out.write(table.to_csv(index=False))
    logger.info("bench: %i row(s), worst ratio %s", len(table),
                table["ratio"].max() if len(table) else "n/a")
    return 0
