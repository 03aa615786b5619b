"""Seeded random formulas and traces for benchmarks and property tests."""

import numpy

from lib.lpt.core import formula as fm
from lib.lpt.core.trace import Trace, Vocabulary

LABEL_NAMES = ("a", "b", "c", "d", "e", "f")

UNARY = (fm.not_, fm.next_, fm.eventually, fm.globally)
BINARY = (fm.and_, fm.or_, fm.implies, fm.until, fm.weak_until, fm.release, fm.strong_release)


def make_random(seed):
    if isinstance(seed, numpy.random.RandomState):
        return seed
    return numpy.random.RandomState(seed)


def vocabulary(size):
    return Vocabulary(LABEL_NAMES[:size])


def random_formula(random, height, labels, full=False, true_weight=0.1):
    """Formula of exactly the given height over atoms drawn from labels.

    With full, binary operators get two children of the same height, which
    maximises the node count.
    """
    labels = list(labels)
    if height == 0:
        if random.rand() < true_weight:
            return fm.true()
        return fm.atom(labels[random.randint(len(labels))])
    operators = BINARY if full else UNARY + BINARY
    builder = operators[random.randint(len(operators))]
    if builder in UNARY:
        return builder(random_formula(random, height - 1, labels, full, true_weight))
    if full:
        left = random_formula(random, height - 1, labels, full, true_weight)
        right = random_formula(random, height - 1, labels, full, true_weight)
        return builder(left, right)
    tall = random_formula(random, height - 1, labels, full, true_weight)
    other = random_formula(random, random.randint(height), labels, full, true_weight)
    if random.rand() < 0.5:
        return builder(tall, other)
    return builder(other, tall)


def random_trace(random, length, labels, density=0.5, origin=0):
    labels = list(labels)
    steps = []
    for _ in range(length):
        steps.append([label for label in labels if random.rand() < density])
    return Trace(steps, origin)


def random_instance(random, max_height, vocabulary_size, max_length, min_length=1):
    """(formula, trace) with height in [0, max_height] and length in [min_length, max_length]."""
    labels = LABEL_NAMES[:vocabulary_size]
    height = random.randint(max_height + 1)
    length = random.randint(min_length, max_length + 1)
    return random_formula(random, height, labels), random_trace(random, length, labels)


def corpus(seed, count, max_height, vocabulary_size, max_length):
    random = make_random(seed)
    for _ in range(count):
        yield random_instance(random, max_height, vocabulary_size, max_length)
