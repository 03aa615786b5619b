"""Tracker module.

This module contains the incremental tracking engine: an EngineState holds
one tracking vector per formula tree node and is advanced one label set at a
time by ``step``. ``finalize`` settles the entries that are still open once
the trace is known to be complete.

Typical use::

    state = init(build_tree(parse("F keyA & F keyB")))
    for labels in trace:
        step(state, labels)
    finalize(state)

"""

import logging

from lib.lpt.core.exc import AlreadyFinalized, EmptyTrace, InvariantViolation
from lib.lpt.core.formula import Kind
from lib.lpt.core.parser import format_formula
from lib.lpt.core.trace import Trace, label_set
from lib.lpt.engine import modules
from lib.lpt.engine.tree import FormulaTree, build_tree
from lib.lpt.oracle.semantics import truth_vectors

logger = logging.getLogger("lpt.engine")

OPEN = modules.OPEN


class EngineState(object):
    """Tracking state of one formula over one rolling trace.

    An EngineState has a single writer; take a ``snapshot`` to hand a
    consistent copy to a reader.
    """

    def __init__(self, tree, origin=0, vocabulary=None, strict=False):
        self.tree = tree
        self.origin = origin
        self.vectors = [[] for _ in tree.nodes]
        self.current_time = None
        self.trace = Trace(origin=origin, vocabulary=vocabulary)
        self.eval_count = 0
        self.finalized = False
        self.strict = strict

    @property
    def started(self):
        return self.current_time is not None

    @property
    def length(self):
        return len(self.trace)

    def vector(self, index):
        return list(self.vectors[index])

    def value(self, index, t):
        """Tracking value of node index for the suffix starting at time t."""
        if not self.started or t < self.origin or t > self.current_time:
            raise IndexError("time %r outside the tracked range" % (t,))
        return self.vectors[index][t - self.origin]

    def __eq__(self, other):
        if isinstance(other, EngineState):
            return (self.tree.formula == other.tree.formula
                    and self.current_time == other.current_time
                    and self.vectors == other.vectors
                    and self.finalized == other.finalized)
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return "EngineState(%s, time=%r, finalized=%r)" % (
            format_formula(self.tree.formula), self.current_time, self.finalized)


def init(tree, origin=0, vocabulary=None, strict=None):
    """Fresh state: no step taken, every vector empty, no evaluation counted."""
    if not isinstance(tree, FormulaTree):
        tree = build_tree(tree)
    if strict is None:
        from lib.lpt.conf.Configuration import get_config
        strict = get_config().strict()
    return EngineState(tree, origin, vocabulary, strict)


def _module_pass(state, labels):
    """Run every module once at the current time; returns the evaluations."""
    tree = state.tree
    count = 0
    last = state.current_time - state.origin
    for indices in tree.label_leaves.values():
        first = tree.nodes[indices[0]]
        modules.module_ap(state, first, labels)
        value = state.vectors[first.index][last]
        for index in indices[1:]:
            modules.assign(state, tree.nodes[index], last, value)
    for index in tree.leaves:
        node = tree.nodes[index]
        if node.node_type is Kind.TRUE:
            modules.module_true(state, node, labels)
    if not tree.schedule:
        return 1
    for index in tree.schedule:
        node = tree.nodes[index]
        count += modules.get_module(node.node_type)(state, node)
    return count


def step(state, labels):
    """Append one label set and update every node vector.

    Leaves are evaluated first, once per distinct label, then every other node
    in schedule order. Returns state.
    """
    if state.finalized:
        raise AlreadyFinalized("cannot step a finalized state")
    labels = label_set(labels, state.trace.declared_vocabulary)
    state.trace.append(labels)
    state.current_time = state.trace.last
    for vector in state.vectors:
        vector.append(OPEN)
    count = _module_pass(state, labels)
    state.eval_count += count
    logger.debug("t'=%i labels=%s evaluations=%i total=%i", state.current_time,
                 sorted(labels), count, state.eval_count)
    if state.strict:
        check_bound(state)
    return state


def catch_up(state, label_sets):
    """Feed several label sets in order; same result as one step per set."""
    label_sets = list(label_sets)
    for labels in label_sets:
        step(state, labels)
    logger.debug("caught up %i step(s), now at t'=%r", len(label_sets), state.current_time)
    return state


def rerun(state):
    """Run the module pass again at the current time without new input.

    Modules only fill open entries, so a second pass changes nothing; the
    evaluation count is left untouched.
    """
    if state.finalized:
        raise AlreadyFinalized("cannot rerun a finalized state")
    if not state.started:
        return state
    _module_pass(state, state.trace[-1])
    return state


def finalize(state):
    """Settle every open entry from the semantics of the complete trace."""
    if state.finalized:
        raise AlreadyFinalized("state is already finalized")
    if not state.started:
        raise EmptyTrace("cannot finalize before the first step")
    truths = truth_vectors(state.tree, state.trace)
    settled = 0
    for node in state.tree.nodes:
        vector = state.vectors[node.index]
        for i, truth in enumerate(truths[node.index]):
            expected = modules.TRUE if truth else modules.FALSE
            if vector[i] == OPEN:
                vector[i] = expected
                settled += 1
            elif state.strict and vector[i] != expected:
                logger.warning("node %i locked %i at t=%i but the trace says %i",
                               node.index, vector[i], state.origin + i, expected)
                raise InvariantViolation("node %i (%s): locked entry t=%i disagrees with "
                                         "terminal evaluation" % (node.index, node.node_type.value,
                                                                  state.origin + i))
    state.finalized = True
    logger.debug("finalized at t'=%i, %i entry(ies) settled", state.current_time, settled)
    return state


def evaluation_count(state):
    return state.eval_count


def complexity_bound(tree, trace_length):
    """2^L * n^2 for a tree of height L over n steps."""
    return (2 ** tree.height) * trace_length * trace_length


def check_bound(state):
    bound = complexity_bound(state.tree, state.length)
    if state.eval_count > bound:
        logger.warning("evaluation count %i exceeds bound %i", state.eval_count, bound)
        raise InvariantViolation("evaluation count %i exceeds 2^L*n^2 = %i"
                                 % (state.eval_count, bound))
    return bound


def snapshot(state):
    """Independent copy sharing only the immutable tree."""
    copy = EngineState(state.tree, state.origin, state.trace.declared_vocabulary, state.strict)
    copy.vectors = [list(vector) for vector in state.vectors]
    copy.current_time = state.current_time
    copy.trace = Trace(state.trace.steps, state.origin, state.trace.declared_vocabulary)
    copy.eval_count = state.eval_count
    copy.finalized = state.finalized
    return copy


def dump(state):
    """Tracking dump: the JSON-ready view of a state."""
    return {
        "formula": format_formula(state.tree.formula),
        "nodes": state.tree.describe(),
        "time": state.current_time,
        "vectors": [list(vector) for vector in state.vectors],
        "finalized": state.finalized,
        "eval_count": state.eval_count,
    }


def track(f, trace, finalize_at_end=False, strict=None, per_step=None):
    """Run f over a whole trace.

    :param per_step: optional callable receiving a snapshot after every step
    :return: the final state
    """
    tree = f if isinstance(f, FormulaTree) else build_tree(f)
    state = init(tree, trace.origin, trace.declared_vocabulary, strict)
    for labels in trace:
        step(state, labels)
        if per_step is not None:
            per_step(snapshot(state))
    if finalize_at_end:
        finalize(state)
    return state
