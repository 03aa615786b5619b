"""Continuations module.

Bounded enumeration of the ways a trace prefix may continue, and the
three-valued verdict a formula gets over all of them.

"""

import enum
import itertools
import logging

from lib.lpt.core.exc import BudgetExceeded
from lib.lpt.core.formula import atoms
from lib.lpt.core.trace import Vocabulary
from lib.lpt.oracle.semantics import holds

logger = logging.getLogger("lpt.oracle")


class Verdict(enum.Enum):
    TRUE = "True"
    FALSE = "False"
    OPEN = "Open"


def powerset(vocabulary):
    """Every label set over vocabulary, smallest first."""
    labels = list(vocabulary)
    result = []
    for size in range(len(labels) + 1):
        for members in itertools.combinations(labels, size):
            result.append(frozenset(members))
    return result


def enumeration_size(vocabulary, horizon):
    return (2 ** len(vocabulary)) ** horizon


def check_budget(vocabulary, horizon, cap=None):
    if cap is None:
        from lib.lpt.conf.Configuration import get_config
        cap = get_config().enumeration_cap()
    size = enumeration_size(vocabulary, horizon)
    if size > cap:
        logger.warning("%i continuations requested, cap is %i", size, cap)
        raise BudgetExceeded("(2^%i)^%i = %i continuations exceed the cap of %i"
                             % (len(vocabulary), horizon, size, cap))
    return size


def continuations(vocabulary, horizon):
    """Label-set sequences of length 0..horizon, shorter ones first."""
    alphabet = powerset(vocabulary)
    for length in range(horizon + 1):
        for extension in itertools.product(alphabet, repeat=length):
            yield extension


def status_under_continuations(f, prefix, t, vocabulary=None, horizon=0, cap=None, cache=None):
    """Verdict of f at suffix start t over every bounded continuation of prefix.

    TRUE if every continuation satisfies f at t, FALSE if none does, OPEN
    otherwise.
    """
    if t < prefix.origin or t > prefix.last:
        raise IndexError("suffix start %i outside [%i, %i]" % (t, prefix.origin, prefix.last))
    if horizon < 0:
        raise ValueError("horizon must be nonnegative")
    if vocabulary is None and prefix.declared_vocabulary is not None:
        vocabulary = prefix.declared_vocabulary
    elif vocabulary is None:
        vocabulary = Vocabulary(sorted(set(prefix.vocabulary) | set(atoms(f))))
    elif not isinstance(vocabulary, Vocabulary):
        vocabulary = Vocabulary(vocabulary)
    check_budget(vocabulary, horizon, cap)
    seen_true = seen_false = False
    for extension in continuations(vocabulary, horizon):
        if holds(f, prefix.extended(extension), t, cache):
            seen_true = True
        else:
            seen_false = True
        if seen_true and seen_false:
            return Verdict.OPEN
    return Verdict.TRUE if seen_true else Verdict.FALSE
