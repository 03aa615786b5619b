"""Modules module.

This module contains one update function per operator type. Each function
reads the tracking vectors of a node's children and writes the node's own
vector for every suffix start from the trace origin up to the current time.

Vectors are indexed from 0 (the trace origin). Values: 1 true, 0 false,
-1 open. A module only ever fills open entries; rewriting a locked entry
with the other value raises InvariantViolation.

Every function returns the number of evaluations it performed: one per
suffix-start entry visited. Leaf evaluations are free, except when the
whole tree is a single leaf (see ``tracker``).
"""

from lib.lpt.core.exc import InvariantViolation
from lib.lpt.core.formula import Kind

TRUE = 1
FALSE = 0
OPEN = -1


def assign(state, node, i, value):
    vector = state.vectors[node.index]
    current = vector[i]
    if current == OPEN:
        vector[i] = value
    elif current != value:
        raise InvariantViolation(
            "node %i (%s): entry t=%i is locked at %i, update wanted %i"
            % (node.index, node.node_type.value, state.origin + i, current, value))


def _child_vectors(state, node):
    return [state.vectors[child] for child in node.children]


def _size(state):
    return state.current_time - state.origin + 1


def module_ap(state, node, labels):
    """Atomic proposition: entry t' is 1 iff the label is in L_t'."""
    value = TRUE if node.formula.atom_name in labels else FALSE
    assign(state, node, _size(state) - 1, value)
    return 0


def module_true(state, node, labels=None):
    assign(state, node, _size(state) - 1, TRUE)
    return 0


def module_not(state, node):
    (operand,) = _child_vectors(state, node)
    n = _size(state)
    for i in range(n):
        if operand[i] == FALSE:
            assign(state, node, i, TRUE)
        elif operand[i] == TRUE:
            assign(state, node, i, FALSE)
    return n


def module_and(state, node):
    left, right = _child_vectors(state, node)
    n = _size(state)
    for i in range(n):
        if left[i] == TRUE and right[i] == TRUE:
            assign(state, node, i, TRUE)
        elif left[i] == FALSE or right[i] == FALSE:
            assign(state, node, i, FALSE)
    return n


def module_or(state, node):
    left, right = _child_vectors(state, node)
    n = _size(state)
    for i in range(n):
        if left[i] == TRUE or right[i] == TRUE:
            assign(state, node, i, TRUE)
        elif left[i] == FALSE and right[i] == FALSE:
            assign(state, node, i, FALSE)
    return n


def module_implies(state, node):
    left, right = _child_vectors(state, node)
    n = _size(state)
    for i in range(n):
        if left[i] == FALSE or right[i] == TRUE:
            assign(state, node, i, TRUE)
        elif left[i] == TRUE and right[i] == FALSE:
            assign(state, node, i, FALSE)
    return n


def module_next(state, node):
    """Entry t-1 takes the locked value of the operand at t.

    The last step of a finite trace has no successor; those entries are left
    open and settled by finalize.
    """
    (operand,) = _child_vectors(state, node)
    n = _size(state)
    for i in range(1, n):
        if operand[i] == TRUE:
            assign(state, node, i - 1, TRUE)
        elif operand[i] == FALSE:
            assign(state, node, i - 1, FALSE)
    return n


def module_eventually(state, node):
    (operand,) = _child_vectors(state, node)
    n = _size(state)
    for i in range(n):
        if operand[i] == TRUE:
            for j in range(i + 1):
                assign(state, node, j, TRUE)
    return n


def module_globally(state, node):
    (operand,) = _child_vectors(state, node)
    visited = 0
    for i in range(_size(state) - 1, -1, -1):
        visited += 1
        if operand[i] == FALSE:
            for j in range(i + 1):
                assign(state, node, j, FALSE)
            break
    return visited


def module_until(state, node):
    """Until and weak until.

    ``start`` is the first suffix start of the current window: every entry of
    the window has a locked-true left operand, so a locked-true right operand
    closes the window as true.
    """
    left, right = _child_vectors(state, node)
    n = _size(state)
    start = 0
    for i in range(n):
        if left[i] == FALSE and right[i] == FALSE:
            assign(state, node, i, FALSE)
            start = i + 1
        elif right[i] == TRUE:
            for j in range(start, i + 1):
                assign(state, node, j, TRUE)
            start = i + 1
        elif left[i] in (FALSE, OPEN):
            start = i + 1
    return n


def module_release(state, node):
    """Release and strong release.

    The window holds suffix starts whose right operand is locked true; it
    closes as true once both operands are locked true at the same step.
    """
    left, right = _child_vectors(state, node)
    n = _size(state)
    start = 0
    for i in range(n):
        if right[i] == FALSE:
            assign(state, node, i, FALSE)
            start = i + 1
        elif left[i] == TRUE and right[i] == TRUE:
            for j in range(start, i + 1):
                assign(state, node, j, TRUE)
            start = i + 1
        elif right[i] == OPEN:
            start = i + 1
    return n


MODULES = {
    Kind.NOT: module_not,
    Kind.AND: module_and,
    Kind.OR: module_or,
    Kind.IMPLIES: module_implies,
    Kind.NEXT: module_next,
    Kind.EVENTUALLY: module_eventually,
    Kind.GLOBALLY: module_globally,
    Kind.UNTIL: module_until,
    Kind.WEAK_UNTIL: module_until,
    Kind.RELEASE: module_release,
    Kind.STRONG_RELEASE: module_release,
}


def get_module(node_type):
    return MODULES[node_type]
