"""Semantics module.

Whole-trace evaluation of LTL_f formulas. ``holds`` is a literal recursive
rendering of the finite-trace semantics and serves as ground truth;
``truth_vectors`` computes the same values for every node of a formula tree
at once with backward recurrences.

"""

import logging

from lib.lpt.core.formula import Kind

logger = logging.getLogger("lpt.oracle")


def _check_time(trace, t0):
    if t0 < trace.origin or t0 > trace.last:
        raise IndexError("time %i outside [%i, %i]" % (t0, trace.origin, trace.last))


def holds(f, trace, t0, cache=None):
    """True iff the suffix of trace starting at t0 satisfies f.

    :param cache: optional BoundedCache; it is bound to trace and cleared
        whenever it is used with another trace
    """
    _check_time(trace, t0)
    if cache is not None:
        cache.bind(trace)
        key = (f, t0, trace.last)
        result = cache.lookup(key)
        if result is None:
            result = _holds(f, trace, t0, cache)
            cache[key] = result
        return result
    return _holds(f, trace, t0, None)


def _holds(f, trace, t0, cache):
    kind = f.kind
    end = trace.last
    sub = lambda g, t: holds(g, trace, t, cache)
    if kind is Kind.TRUE:
        return True
    if kind is Kind.ATOM:
        return f.atom_name in trace.at(t0)
    if kind is Kind.NOT:
        return not sub(f.children[0], t0)
    if kind is Kind.AND:
        return sub(f.children[0], t0) and sub(f.children[1], t0)
    if kind is Kind.OR:
        return sub(f.children[0], t0) or sub(f.children[1], t0)
    if kind is Kind.IMPLIES:
        return not sub(f.children[0], t0) or sub(f.children[1], t0)
    if kind is Kind.NEXT:
        return t0 < end and sub(f.children[0], t0 + 1)
    if kind is Kind.EVENTUALLY:
        return any(sub(f.children[0], i) for i in range(t0, end + 1))
    if kind is Kind.GLOBALLY:
        return all(sub(f.children[0], i) for i in range(t0, end + 1))
    left, right = f.children
    if kind is Kind.UNTIL:
        return _until(sub, left, right, t0, end)
    if kind is Kind.WEAK_UNTIL:
        return (_until(sub, left, right, t0, end)
                or all(sub(left, i) for i in range(t0, end + 1)))
    if kind is Kind.RELEASE:
        # right holds up to and including the first step where left holds
        return all(sub(right, i) or any(sub(left, k) for k in range(t0, i))
                   for i in range(t0, end + 1))
    if kind is Kind.STRONG_RELEASE:
        return any(sub(left, i) and all(sub(right, k) for k in range(t0, i + 1))
                   for i in range(t0, end + 1))
    raise ValueError("unsupported formula kind %r" % (kind,))


def _until(sub, left, right, t0, end):
    return any(sub(right, i) and all(sub(left, k) for k in range(t0, i))
               for i in range(t0, end + 1))


def oracle_tracking_vector(f, trace, cache=None):
    """[holds(f, trace, t) for every time t of trace]."""
    return [holds(f, trace, t, cache) for t in trace.times()]


# value of each operator beyond the last step of the trace
_END_VALUES = {
    Kind.EVENTUALLY: False,
    Kind.GLOBALLY: True,
    Kind.UNTIL: False,
    Kind.WEAK_UNTIL: True,
    Kind.RELEASE: True,
    Kind.STRONG_RELEASE: False,
}


def truth_vectors(tree, trace):
    """Truth value of every node of tree for every suffix start of trace.

    Returns one list of booleans per node (BFS order), indexed from the
    trace origin.
    """
    n = len(trace)
    values = [None] * len(tree)
    for node in reversed(tree.nodes):
        kind = node.node_type
        operands = [values[child] for child in node.children]
        if kind is Kind.TRUE:
            result = [True] * n
        elif kind is Kind.ATOM:
            name = node.formula.atom_name
            result = [name in step for step in trace]
        elif kind is Kind.NOT:
            result = [not v for v in operands[0]]
        elif kind is Kind.AND:
            result = [a and b for a, b in zip(*operands)]
        elif kind is Kind.OR:
            result = [a or b for a, b in zip(*operands)]
        elif kind is Kind.IMPLIES:
            result = [not a or b for a, b in zip(*operands)]
        elif kind is Kind.NEXT:
            result = operands[0][1:] + [False]
        else:
            result = _backward(kind, operands, n)
        values[node.index] = result
    return values


def _backward(kind, operands, n):
    result = [False] * n
    following = _END_VALUES[kind]
    for i in range(n - 1, -1, -1):
        if kind is Kind.EVENTUALLY:
            current = operands[0][i] or following
        elif kind is Kind.GLOBALLY:
            current = operands[0][i] and following
        elif kind in (Kind.UNTIL, Kind.WEAK_UNTIL):
            left, right = operands
            current = right[i] or (left[i] and following)
        else:
            left, right = operands
            current = right[i] and (left[i] or following)
        result[i] = current
        following = current
    return result
