"""Signature module.

A signature is the list, in BFS node order, of every tracking vector with
runs of equal adjacent values merged: ``[0, 0, 1, -1, -1]`` becomes
``[0, 1, -1]``. It keeps the order of events and forgets their timing.

"""

from itertools import groupby

from lib.lpt.core.dataformat import get_decoder, get_encoder
from lib.lpt.core.exc import EmptyState, ShapeMismatch


def merge(vector):
    return [value for value, _ in groupby(vector)]


def signature(state):
    if not state.started:
        raise EmptyState("no step taken yet, the signature is empty")
    return [merge(vector) for vector in state.vectors]


def signatures_equal(a, b):
    if len(a) != len(b):
        raise ShapeMismatch("signatures cover %i and %i nodes" % (len(a), len(b)))
    return all(list(x) == list(y) for x, y in zip(a, b))


def edit_distance(a, b):
    """Levenshtein distance between two sequences."""
    previous = list(range(len(b) + 1))
    for i, x in enumerate(a, 1):
        current = [i]
        for j, y in enumerate(b, 1):
            current.append(min(previous[j] + 1,
                               current[j - 1] + 1,
                               previous[j - 1] + (x != y)))
        previous = current
    return previous[-1]


def signature_distance(a, b):
    """Sum over nodes of the edit distance between merged sequences.

    Not part of the tracking framework itself; used to grade novelty.
    """
    if len(a) != len(b):
        raise ShapeMismatch("signatures cover %i and %i nodes" % (len(a), len(b)))
    return sum(edit_distance(x, y) for x, y in zip(a, b))


def signature_to_json(sig):
    return get_encoder().signature(sig)


def signature_from_json(text):
    return get_decoder().signature(text)
