"""Gridworld module.

A memoryless N x N key collection world used by the reward machine demo.
Cells are (x, y) with (0, 0) the top-left corner where the agent starts;
keyA sits in the top-right corner and keyB in the bottom-left one. A key
label fires on the step the agent enters its cell. The world itself never
remembers which keys were collected: that memory lives in the tracking
state only.

"""

import logging
from dataclasses import dataclass, field
from typing import List

import numpy

from lib.lpt.core.exc import ConfigError
from lib.lpt.rm.machine import Novelty, rm_init, rm_step

logger = logging.getLogger("lpt.rm")

KEY_A = "keyA"
KEY_B = "keyB"
VOCABULARY = (KEY_A, KEY_B)

UP, RIGHT, DOWN, LEFT = range(4)
ACTIONS = (UP, RIGHT, DOWN, LEFT)
ACTION_NAMES = ("up", "right", "down", "left")
MOVES = {UP: (0, -1), RIGHT: (1, 0), DOWN: (0, 1), LEFT: (-1, 0)}


class KeyGridWorld(object):

    def __init__(self, size=5):
        if size < 2:
            raise ConfigError("the grid needs at least 2 x 2 cells, got %r" % (size,))
        self.size = size
        self.start = (0, 0)
        self.keys = {(size - 1, 0): KEY_A, (0, size - 1): KEY_B}
        self.cell = self.start

    def reset(self):
        self.cell = self.start
        return self.cell

    def labels_at_start(self):
        return frozenset()

    def move(self, cell, action):
        dx, dy = MOVES[action]
        x = min(max(cell[0] + dx, 0), self.size - 1)
        y = min(max(cell[1] + dy, 0), self.size - 1)
        return (x, y)

    def step(self, action):
        """Apply action; returns (new cell, labels of this step)."""
        previous = self.cell
        self.cell = self.move(previous, action)
        if self.cell != previous and self.cell in self.keys:
            return self.cell, frozenset([self.keys[self.cell]])
        return self.cell, frozenset()

    def key_cell(self, key):
        for cell, name in self.keys.items():
            if name == key:
                return cell
        raise ConfigError("no cell holds '%s'" % (key))

    def path(self, source, target):
        """Actions of a shortest path, horizontal moves first."""
        actions = []
        x, y = source
        while x != target[0]:
            actions.append(RIGHT if target[0] > x else LEFT)
            x += 1 if target[0] > x else -1
        while y != target[1]:
            actions.append(DOWN if target[1] > y else UP)
            y += 1 if target[1] > y else -1
        return actions


class RandomWalkAgent(object):

    name = "random"

    def __init__(self, seed=0):
        self.random = numpy.random.RandomState(seed)

    def act(self, cell, u):
        return int(self.random.randint(len(ACTIONS)))

    def learn(self, cell, u, action, reward, next_cell, next_u):
        pass


class ScriptedAgent(object):
    """Plays a fixed list of actions, then stops the episode."""

    name = "scripted"

    def __init__(self, actions):
        self.actions = list(actions)
        self.position = 0

    def act(self, cell, u):
        if self.position >= len(self.actions):
            return None
        action = self.actions[self.position]
        self.position += 1
        return action

    def learn(self, cell, u, action, reward, next_cell, next_u):
        pass

    @classmethod
    def collecting(cls, world, order):
        """Agent walking from the start to each key of order in turn."""
        actions = []
        cell = world.start
        for key in order:
            target = world.key_cell(key)
            actions.extend(world.path(cell, target))
            cell = target
        return cls(actions)


class ReplayAgent(ScriptedAgent):

    name = "replay"

    def __init__(self, log):
        ScriptedAgent.__init__(self, log.actions)


class QLearningAgent(object):
    """Tabular epsilon-greedy learner over (cell, signature digest)."""

    name = "qlearn"

    def __init__(self, seed=0, alpha=0.5, gamma=0.9, epsilon=0.2):
        self.random = numpy.random.RandomState(seed)
        self.alpha = alpha
        self.gamma = gamma
        self.epsilon = epsilon
        self.table = {}

    def values(self, cell, u):
        key = (cell, u.digest())
        if key not in self.table:
            self.table[key] = numpy.zeros(len(ACTIONS))
        return self.table[key]

    def act(self, cell, u):
        values = self.values(cell, u)
        if self.random.rand() < self.epsilon:
            return int(self.random.randint(len(ACTIONS)))
        best = numpy.flatnonzero(values == values.max())
        return int(self.random.choice(best))

    def learn(self, cell, u, action, reward, next_cell, next_u):
        values = self.values(cell, u)
        target = reward + self.gamma * self.values(next_cell, next_u).max()
        values[action] += self.alpha * (target - values[action])


@dataclass
class EpisodeLog:
    agent: str
    actions: List[int] = field(default_factory=list)
    cells: List[tuple] = field(default_factory=list)
    labels: List[List[str]] = field(default_factory=list)
    rewards: List[float] = field(default_factory=list)
    digests: List[str] = field(default_factory=list)
    signature: list = field(default_factory=list)

    @property
    def total(self):
        return float(sum(self.rewards))

    @property
    def first_reward_step(self):
        for position, value in enumerate(self.rewards):
            if value > 0:
                return position
        return None

    def as_dict(self, episode=None):
        result = {
            "agent": self.agent,
            "actions": [ACTION_NAMES[action] for action in self.actions],
            "labels": self.labels,
            "rewards": self.rewards,
            "digests": self.digests,
            "signature": self.signature,
            "total": self.total,
            "first_reward_step": self.first_reward_step,
        }
        if episode is not None:
            result["episode"] = episode
        return result


def run_episode(world, agent, f, policy, steps=20, base_reward=None, observe=True):
    """Roll agent out for at most steps moves, rewarding every new RM state.

    The state reached on the start cell counts as the first step. With
    observe, a Novelty policy records every digest reached.
    """
    log = EpisodeLog(agent.name)
    cell = world.reset()
    labels = world.labels_at_start()
    u = rm_step(rm_init(f, VOCABULARY), labels)

    def settle(u, labels):
        value = policy.reward(u, base_reward)
        if observe and isinstance(policy, Novelty):
            policy.observe(u)
        log.labels.append(sorted(labels))
        log.rewards.append(value)
        log.digests.append(u.digest())
        return value

    settle(u, labels)
    log.cells.append(cell)
    for _ in range(steps):
        action = agent.act(cell, u)
        if action is None:
            break
        next_cell, labels = world.step(action)
        next_u = rm_step(u, labels)
        value = settle(next_u, labels)
        agent.learn(cell, u, action, value, next_cell, next_u)
        log.actions.append(action)
        log.cells.append(next_cell)
        cell, u = next_cell, next_u
    log.signature = u.signature()
    logger.info("%s episode: %i step(s), total reward %s", agent.name, len(log.actions), log.total)
    return log


def reference_signature(world, f, order=(KEY_A, KEY_B)):
    """Signature reached by walking straight to the keys of order."""
    agent = ScriptedAgent.collecting(world, order)
    cell = world.reset()
    u = rm_step(rm_init(f, VOCABULARY), world.labels_at_start())
    while True:
        action = agent.act(cell, u)
        if action is None:
            return u.signature()
        cell, labels = world.step(action)
        u = rm_step(u, labels)
