"""Reward machine module.

This module exposes the tracking engine as a reward machine: the internal
state u is a snapshot of every node vector plus the current time, the state
transition is one engine step, and rewards come from a pluggable policy.

Digests identify states for the goal and novelty policies. They are the
lowercase hex SHA-256 of a canonical JSON document (sorted keys, no
whitespace):

* ``signature`` (default): the signature, e.g. ``[[-1],[1],[-1],[0,1],[0]]``;
* ``state``: ``{"time":t',"vectors":[...]}``.
"""

import logging
from abc import ABC, abstractmethod

from lib.lpt.core.dataformat import digest as canonical_digest
from lib.lpt.core.exc import ConfigError, InvariantViolation
from lib.lpt.engine import tracker
from lib.lpt.engine.tree import build_tree
from lib.lpt.signature.signature import merge

logger = logging.getLogger("lpt.rm")

SIGNATURE_DIGEST = "signature"
STATE_DIGEST = "state"
DIGEST_KINDS = (SIGNATURE_DIGEST, STATE_DIGEST)


class RMState(object):
    """Immutable reward machine state wrapping an engine snapshot."""

    def __init__(self, engine):
        self._engine = engine

    @property
    def engine(self):
        return tracker.snapshot(self._engine)

    @property
    def time(self):
        return self._engine.current_time

    @property
    def vectors(self):
        return [list(vector) for vector in self._engine.vectors]

    @property
    def is_terminal(self):
        return self._engine.finalized

    def signature(self):
        """Signature of the wrapped state; empty sequences before the first step."""
        return [merge(vector) for vector in self._engine.vectors]

    def digest(self, kind=SIGNATURE_DIGEST):
        if kind == SIGNATURE_DIGEST:
            return canonical_digest(self.signature())
        if kind == STATE_DIGEST:
            return canonical_digest({"time": self.time, "vectors": self.vectors})
        raise ConfigError("unknown digest kind '%s' (use %s)" % (kind, " or ".join(DIGEST_KINDS)))

    def __eq__(self, other):
        if isinstance(other, RMState):
            return self.time == other.time and self._engine.vectors == other._engine.vectors
        return NotImplemented

    def __hash__(self):
        return hash(self.digest(STATE_DIGEST))

    def __repr__(self):
        return "RMState(time=%r, signature=%r)" % (self.time, self.signature())


def rm_init(f, vocabulary=None):
    return RMState(tracker.init(build_tree(f), vocabulary=vocabulary))


def rm_step(u, labels):
    """Successor of u after one label set; u itself is left untouched."""
    return RMState(tracker.step(u.engine, labels))


def rm_finalize(u):
    """Terminal successor of u (finalized states are the terminal ones)."""
    return RMState(tracker.finalize(u.engine))


def _check_base(base):
    if base < 0:
        raise ConfigError("rewards must be nonnegative, got %r" % (base,))
    return base


class RewardPolicy(ABC):

    def __init__(self, base_reward=1.0):
        self.base_reward = _check_base(base_reward)

    def base(self, base=None):
        return self.base_reward if base is None else _check_base(base)

    @abstractmethod
    def reward(self, u_next, base=None):
        raise NotImplementedError("To be implemented")


class GoalState(RewardPolicy):
    """Pays base when the new state matches the target."""

    def __init__(self, target, base_reward=1.0, digest_kind=SIGNATURE_DIGEST):
        RewardPolicy.__init__(self, base_reward)
        self.digest_kind = digest_kind
        if isinstance(target, RMState):
            target = target.digest(digest_kind)
        elif isinstance(target, (list, tuple)):
            if digest_kind != SIGNATURE_DIGEST:
                raise ConfigError("a signature target needs signature digests")
            target = canonical_digest([list(sequence) for sequence in target])
        self.target = target

    def reward(self, u_next, base=None):
        if u_next.digest(self.digest_kind) == self.target:
            return self.base(base)
        return 0.0


class Novelty(RewardPolicy):
    """Pays base for states whose digest is not in ``seen``.

    ``seen`` is owned by the caller and only changes through ``observe``.
    """

    def __init__(self, seen=(), base_reward=1.0, digest_kind=SIGNATURE_DIGEST):
        RewardPolicy.__init__(self, base_reward)
        self.digest_kind = digest_kind
        self.seen = set(seen)

    def reward(self, u_next, base=None):
        if u_next.digest(self.digest_kind) in self.seen:
            return 0.0
        return self.base(base)

    def observe(self, u):
        self.seen.add(u.digest(self.digest_kind))


class Custom(RewardPolicy):

    def __init__(self, hook, base_reward=1.0):
        RewardPolicy.__init__(self, base_reward)
        self.hook = hook

    def reward(self, u_next, base=None):
        value = self.hook(u_next)
        if value < 0:
            raise InvariantViolation("custom reward hook returned %r" % (value,))
        return value


def reward(u_next, policy, base=None):
    return policy.reward(u_next, base)


def build_policy(name, base_reward=1.0, target=None, digest_kind=SIGNATURE_DIGEST):
    if name == "goal":
        if target is None:
            raise ConfigError("the goal policy needs a target")
        return GoalState(target, base_reward, digest_kind)
    if name == "novelty":
        return Novelty((), base_reward, digest_kind)
    raise ConfigError("unknown reward policy '%s'" % (name))
