"""Subcommand implementations.

Every command takes the parsed arguments and the stream to write data to,
and returns the process exit code.
"""

import io
import logging
import os
import time

from lib.lpt.core.dataformat import get_decoder, get_encoder
from lib.lpt.core.exc import ConfigError, FormatError
from lib.lpt.core.formula import atoms, depth
from lib.lpt.core.parser import format_formula, load_spec, parse
from lib.lpt.core.trace import Vocabulary, load_trace
from lib.lpt.engine import tracker
from lib.lpt.engine.tree import build_tree
from lib.lpt.oracle.checks import records_from_dumps, run_instance
from lib.lpt.rm import gridworld
from lib.lpt.rm.machine import build_policy
from lib.lpt.signature.signature import signature, signatures_equal

logger = logging.getLogger("lpt.cli")

KEY_FORMULA = "F keyA & F keyB"

# the four snapshots of the key collection example
KEY_SCENARIOS = [
    ("start", [[]], [[-1], [-1], [-1], [0], [0]]),
    ("keyA at t=2", [[], [], ["keyA"]], [[-1], [1], [-1], [0, 1], [0]]),
    ("keyA at t=4", [[], [], [], [], ["keyA"]], [[-1], [1], [-1], [0, 1], [0]]),
    ("keyB at t=5", [[], [], [], [], [], ["keyB"]], [[-1], [-1], [1], [0], [0, 1]]),
]


def _vocabulary(args):
    text = getattr(args, "vocabulary", None)
    if not text:
        return None
    return Vocabulary(label.strip() for label in text.split(",") if label.strip())


def load_formula(args, default=None):
    vocabulary = _vocabulary(args)
    if getattr(args, "formula", None) is not None:
        return parse(args.formula, vocabulary)
    if getattr(args, "spec", None):
        return load_spec(args.spec, vocabulary)
    if default is not None:
        return parse(default, vocabulary)
    raise ConfigError("a specification file or --formula is required")


def resolve_run_inputs(args):
    """Split the FILE arguments of track and oracle-check into spec and trace."""
    files = list(args.files)
    args.spec = None
    if args.formula is None:
        if not files:
            raise ConfigError("a specification file or --formula is required")
        args.spec = files.pop(0)
    if args.trace is None:
        if not files:
            raise ConfigError("a trace file is required (second FILE or --trace)")
        args.trace = files.pop(0)
    if files:
        raise ConfigError("unexpected argument(s): %s" % (" ".join(files)))
    return args


def _write_lines(out, lines):
    for line in lines:
        out.write(line)
        out.write("\n")


def _ast(f):
    node = {"kind": f.kind.value}
    if f.atom_name is not None:
        node["atom"] = f.atom_name
    if f.children:
        node["children"] = [_ast(child) for child in f.children]
    return node


def cmd_parse(args, out):
    f = load_formula(args)
    tree = build_tree(f)
    report = {
        "formula": format_formula(f),
        "ast": _ast(f),
        "nodes": tree.describe(),
        "node_count": len(tree),
        "height": depth(f),
    }
    _write_lines(out, [get_encoder().encode(report)])
    return 0


def run_report(state, started=None):
    """RunReport of a state: dump, signature, count and its bound."""
    bound = tracker.check_bound(state)
    report = {
        "dump": tracker.dump(state),
        "signature": signature(state),
        "eval_count": state.eval_count,
        "bound": bound,
    }
    if started is not None:
        report["wall_time_ms"] = round((time.perf_counter() - started) * 1000.0, 3)
    return report


def format_report_text(report):
    dump = report["dump"]
    lines = ["t'=%s finalized=%s eval_count=%i bound=%i"
             % (dump["time"], str(dump["finalized"]).lower(), report["eval_count"], report["bound"])]
    for node, vector in zip(dump["nodes"], dump["vectors"]):
        lines.append("  %2i %-13s %-24s %s" % (node["index"], node["type"], node["formula_text"],
                                              " ".join("%2i" % value for value in vector)))
    if "wall_time_ms" in report:
        lines.append("  wall_time_ms=%s" % (report["wall_time_ms"]))
    return "\n".join(lines)


def cmd_track(args, out):
    resolve_run_inputs(args)
    f = load_formula(args)
    trace = load_trace(args.trace, _vocabulary(args))
    encoder = get_encoder()
    started = time.perf_counter() if args.timing else None
    reports = []
    state = tracker.init(build_tree(f), trace.origin, trace.declared_vocabulary)
    for labels in trace:
        tracker.step(state, labels)
        if args.per_step:
            reports.append(run_report(state, started))
    if args.finalize:
        tracker.finalize(state)
    if args.finalize or not args.per_step:
        reports.append(run_report(state, started))
    if args.format == "text":
        lines = [format_report_text(report) for report in reports]
    else:
        lines = [encoder.encode(report) for report in reports]
    if args.out:
        with io.open(args.out, "w", encoding="utf-8") as target:
            _write_lines(target, lines)
    else:
        _write_lines(out, lines)
    logger.info("tracked %s over %i step(s), %i evaluation(s)", format_formula(f), len(trace),
                state.eval_count)
    return 0


def read_dumps(path):
    """Dumps of a file written by ``track``: one dump or RunReport per line."""
    decoder = get_decoder()
    dumps = []
    with io.open(path, "r", encoding="utf-8") as dump_file:
        try:
            lines = dump_file.readlines()
        except UnicodeDecodeError as err:
            raise FormatError("dump file is not valid UTF-8: %s" % (err))
    for number, line in enumerate(lines, 1):
        if not line.strip():
            continue
        obj = decoder.decode(line, number)
        if isinstance(obj, dict) and "dump" in obj:
            obj = obj["dump"]
        dumps.append(obj)
    if not dumps:
        raise FormatError("no dump found in %s" % (path))
    return dumps


def cmd_oracle_check(args, out):
    resolve_run_inputs(args)
    f = load_formula(args)
    trace = load_trace(args.trace, _vocabulary(args))
    if args.horizon < 0:
        raise ConfigError("--horizon must be nonnegative")
    tree = build_tree(f)
    records = None
    if args.dump:
        records = records_from_dumps(read_dumps(args.dump), tree, trace)
    report = run_instance(tree, trace, args.horizon, records=records)
    result = report.as_dict()
    if report.violations:
        result["counterexample"] = report.violations[0].as_dict()
    _write_lines(out, [get_encoder().encode(result)])
    return 0 if report.passed else 1


def key_scenario_signature(steps):
    state = tracker.init(build_tree(parse(KEY_FORMULA)))
    tracker.catch_up(state, steps)
    return signature(state)


def cmd_demo_keys(args, out):
    encoder = get_encoder()
    lines = []
    results = {}
    all_match = True
    for name, steps, expected in KEY_SCENARIOS:
        actual = key_scenario_signature(steps)
        results[name] = actual
        match = signatures_equal(actual, expected)
        all_match = all_match and match
        if args.format == "text":
            lines.append("%-12s %s %s" % (name, encoder.signature(actual), "ok" if match else "MISMATCH"))
        else:
            lines.append(encoder.encode({"scenario": name, "trace": steps,
                                         "signature": actual, "expected": expected,
                                         "match": match}))
    same_behaviour = signatures_equal(results["keyA at t=2"], results["keyA at t=4"])
    diverged = not signatures_equal(results["keyA at t=2"], results["keyB at t=5"])
    all_match = all_match and same_behaviour and diverged
    if args.format == "text":
        lines.append("keyA at t=2 == keyA at t=4: %s" % (str(same_behaviour).lower()))
        lines.append("keyA first != keyB first: %s" % (str(diverged).lower()))
    else:
        lines.append(encoder.encode({"keyA_t2_equals_keyA_t4": same_behaviour,
                                     "keyA_first_differs_from_keyB_first": diverged,
                                     "passed": all_match}))
    _write_lines(out, lines)
    return 0 if all_match else 1


def _load_target(text):
    if text is None:
        return None
    if os.path.exists(text):
        with io.open(text, "r", encoding="utf-8") as target_file:
            text = target_file.read()
    return get_decoder().signature(text.strip())


def _episode_agent(args, world, episode, first_log, shared):
    if args.agent == "random":
        return gridworld.RandomWalkAgent(args.seed + episode)
    if args.agent == "replay":
        if first_log is None:
            return gridworld.RandomWalkAgent(args.seed)
        return gridworld.ReplayAgent(first_log)
    if args.agent == "divergent":
        order = (gridworld.KEY_A, gridworld.KEY_B) if episode == 0 else (gridworld.KEY_B, gridworld.KEY_A)
        return gridworld.ScriptedAgent.collecting(world, order)
    if "qlearn" not in shared:
        shared["qlearn"] = gridworld.QLearningAgent(args.seed)
    return shared["qlearn"]


def cmd_rm_sim(args, out):
    if args.episodes < 0:
        raise ConfigError("--episodes must be nonnegative")
    f = load_formula(args, KEY_FORMULA)
    missing = set(atoms(f)) - set(gridworld.VOCABULARY)
    if missing:
        raise ConfigError("the gridworld only emits %s, not %s"
                          % (", ".join(gridworld.VOCABULARY), ", ".join(sorted(missing))))
    world = gridworld.KeyGridWorld(args.grid)
    steps = args.steps if args.steps is not None else 4 * args.grid
    if steps < 0:
        raise ConfigError("--steps must be nonnegative")
    target = _load_target(args.target)
    if args.policy == "goal" and target is None:
        target = gridworld.reference_signature(world, f)
    policy = build_policy(args.policy, args.base_reward, target, args.digest)
    encoder = get_encoder()
    first_log = None
    shared = {}
    totals = []
    for episode in range(args.episodes):
        agent = _episode_agent(args, world, episode, first_log, shared)
        log = gridworld.run_episode(world, agent, f, policy, steps)
        if first_log is None:
            first_log = log
        totals.append(log.total)
        _write_lines(out, [encoder.encode(log.as_dict(episode))])
    _write_lines(out, [encoder.encode({"policy": args.policy, "agent": args.agent,
                                       "episodes": args.episodes, "totals": totals})])
    return 0
