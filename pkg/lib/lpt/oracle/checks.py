"""Checks module.

Validity suites run against the semantics oracle:

* soundness: every locked entry agrees with every bounded continuation;
* lock-in: a locked entry never changes at a later update;
* terminal: after finalize every entry equals whole-trace evaluation.

Each suite returns a list of Violation records; an empty list means the
instance passed.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

from lib.lpt.core.dataformat import get_decoder
from lib.lpt.core.exc import FormatError, ShapeMismatch
from lib.lpt.core.formula import atoms
from lib.lpt.core.trace import Vocabulary
from lib.lpt.engine import tracker
from lib.lpt.engine.tree import FormulaTree, build_tree
from lib.lpt.oracle.continuations import check_budget, continuations
from lib.lpt.oracle.semantics import oracle_tracking_vector, truth_vectors
from lib.lpt.utils.BoundedCache import build_oracle_cache

logger = logging.getLogger("lpt.oracle")

SOUNDNESS = "soundness"
LOCK_IN = "lock-in"
TERMINAL = "terminal"


@dataclass
class Violation:
    check: str
    node: int
    t: int
    time: int
    engine: int
    oracle: Optional[int] = None
    continuation: Optional[List[List[str]]] = None
    formula_text: Optional[str] = None

    def as_dict(self):
        return {
            "check": self.check,
            "node": self.node,
            "formula_text": self.formula_text,
            "t": self.t,
            "time": self.time,
            "engine": self.engine,
            "oracle": self.oracle,
            "continuation": self.continuation,
        }


@dataclass
class CheckReport:
    formula_text: str
    updates: int
    horizon: int
    violations: List[Violation] = field(default_factory=list)
    checked: dict = field(default_factory=dict)

    @property
    def passed(self):
        return not self.violations

    def as_dict(self):
        return {
            "formula": self.formula_text,
            "updates": self.updates,
            "horizon": self.horizon,
            "passed": self.passed,
            "checked": dict(self.checked),
            "violations": [violation.as_dict() for violation in self.violations],
        }


@dataclass
class Record:
    """Vectors of every node after the update at ``time``."""

    time: int
    vectors: list
    finalized: bool = False


def record_run(tree, trace, strict=False):
    """Step a fresh engine over trace, keeping one Record per update.

    Returns (records, final state); the final state is not finalized.
    """
    records = []

    def keep(state):
        records.append(Record(state.current_time, state.vectors, False))

    state = tracker.track(tree, trace, strict=strict, per_step=keep)
    return records, state


def check_record(record, trace, line=None):
    """A record must fall inside trace and hold one entry per suffix start."""
    if record.time < trace.origin or record.time > trace.last:
        raise FormatError("record at time %i is outside the trace [%i, %i]"
                          % (record.time, trace.origin, trace.last), line)
    expected = record.time - trace.origin + 1
    for index, vector in enumerate(record.vectors):
        if len(vector) != expected:
            raise FormatError("vector of node %i has %i entries, time %i needs %i"
                              % (index, len(vector), record.time, expected), line)
    return record


def records_from_dumps(dumps, tree=None, trace=None):
    """Decode tracking dumps into Records, checking they share one tree shape.

    With a trace, every record is also checked against it (``check_record``).
    """
    decoder = get_decoder()
    records = []
    shape = None
    for number, dump in enumerate(dumps, 1):
        obj = decoder.dump(dump, number)
        current = [(node["type"], node["parent"]) for node in obj["nodes"]]
        if shape is None:
            shape = current
            if tree is not None and tree.shape() != shape:
                raise ShapeMismatch("dump nodes do not match the formula tree")
        elif current != shape:
            raise ShapeMismatch("dump %i has a different tree shape" % (number))
        if obj["time"] is None:
            continue
        record = Record(obj["time"], obj["vectors"], obj["finalized"])
        if trace is not None:
            check_record(record, trace, number)
        records.append(record)
    return records


def instance_vocabulary(tree, trace):
    """Declared vocabulary of trace, else every label it or the formula mentions."""
    if trace.declared_vocabulary is not None:
        return trace.declared_vocabulary
    return Vocabulary(sorted(set(trace.vocabulary) | set(atoms(tree.formula))))


def _text(tree, index):
    return tree.nodes[index].formula_text


def check_soundness(tree, trace, records, horizon, vocabulary=None, cap=None):
    """Refute locked entries with bounded continuations.

    For every record (update t'), every continuation of the trace prefix up
    to t' is evaluated once for all nodes. The first violation reported for
    an entry uses the shortest refuting continuation.
    """
    if vocabulary is None:
        vocabulary = instance_vocabulary(tree, trace)
    check_budget(vocabulary, horizon, cap)
    violations = []
    for record in records:
        if record.finalized:
            continue
        check_record(record, trace)
        prefix = trace.prefix(record.time)
        offset = trace.origin
        locked = [(index, i, value)
                  for index, vector in enumerate(record.vectors)
                  for i, value in enumerate(vector) if value != tracker.OPEN]
        if not locked:
            continue
        refuted = set()
        for extension in continuations(vocabulary, horizon):
            truths = truth_vectors(tree, prefix.extended(extension))
            for index, i, value in locked:
                if (index, i) in refuted:
                    continue
                oracle = 1 if truths[index][i] else 0
                if oracle != value:
                    refuted.add((index, i))
                    violations.append(Violation(
                        SOUNDNESS, index, offset + i, record.time, value, oracle,
                        [sorted(labels) for labels in extension], _text(tree, index)))
            if len(refuted) == len(locked):
                break
    if violations:
        logger.warning("%i soundness violation(s) for %s", len(violations), _text(tree, 0))
    return violations


def check_lock_in(records, tree=None, origin=0):
    """Locked entries of consecutive records must be carried over unchanged.

    In the violations, ``oracle`` holds the value the entry was locked at.
    """
    violations = []
    for previous, current in zip(records, records[1:]):
        for index, (before, after) in enumerate(zip(previous.vectors, current.vectors)):
            if len(after) < len(before):
                raise FormatError("tracking vector of node %i shrank at time %s"
                                  % (index, current.time))
            for i, value in enumerate(before):
                if value != tracker.OPEN and after[i] != value:
                    violations.append(Violation(
                        LOCK_IN, index, origin + i, current.time, after[i], value, None,
                        None if tree is None else _text(tree, index)))
    if violations:
        logger.warning("%i lock-in violation(s)", len(violations))
    return violations


def check_terminal(tree, trace, vectors, cache=None):
    """Finalized vectors against whole-trace evaluation of every node."""
    violations = []
    for node in tree.nodes:
        expected = oracle_tracking_vector(node.formula, trace, cache)
        actual = vectors[node.index]
        for i, truth in enumerate(expected):
            oracle = 1 if truth else 0
            value = actual[i] if i < len(actual) else tracker.OPEN
            if value != oracle:
                violations.append(Violation(TERMINAL, node.index, trace.origin + i,
                                            trace.last, value, oracle, None,
                                            node.formula_text))
    if violations:
        logger.warning("%i terminal violation(s) for %s", len(violations), _text(tree, 0))
    return violations


def run_instance(f, trace, horizon=4, vocabulary=None, cap=None, records=None, cache=None):
    """All three suites on one formula and trace.

    When records is None the engine is run here; otherwise the given records
    (e.g. decoded dumps) are checked, and the last one is expected to be
    finalized for the terminal suite to apply.
    """
    tree = f if isinstance(f, FormulaTree) else build_tree(f)
    if records is None:
        records, state = record_run(tree, trace)
        tracker.finalize(state)
        records.append(Record(state.current_time, state.vectors, True))
    if vocabulary is None:
        vocabulary = instance_vocabulary(tree, trace)
    report = CheckReport(_text(tree, 0), sum(1 for r in records if not r.finalized), horizon)
    report.violations.extend(check_soundness(tree, trace, records, horizon, vocabulary, cap))
    report.violations.extend(check_lock_in(records, tree, trace.origin))
    report.checked = {SOUNDNESS: True, LOCK_IN: True, TERMINAL: False}
    if records and records[-1].finalized:
        if records[-1].time != trace.last:
            raise FormatError("finalized record at time %i but the trace ends at %i"
                              % (records[-1].time, trace.last))
        check_record(records[-1], trace)
        if cache is None:
            cache = build_oracle_cache()
        report.violations.extend(check_terminal(tree, trace, records[-1].vectors, cache))
        report.checked[TERMINAL] = True
    logger.info("checked %s over %i update(s): %s", report.formula_text, report.updates,
                "pass" if report.passed else "%i violation(s)" % len(report.violations))
    return report
