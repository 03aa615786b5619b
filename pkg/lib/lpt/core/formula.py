"""Formula module.

This module contains the abstract syntax tree of finite-trace LTL
specifications and the helpers used to decompose it.

"""

import enum
from dataclasses import dataclass, field
from typing import Optional, Tuple

from lib.lpt.core.exc import ArityError


class Kind(enum.Enum):
    TRUE = "TrueLit"
    ATOM = "Atom"
    NOT = "Not"
    NEXT = "Next"
    EVENTUALLY = "Eventually"
    GLOBALLY = "Globally"
    AND = "And"
    OR = "Or"
    IMPLIES = "Implies"
    UNTIL = "Until"
    WEAK_UNTIL = "WeakUntil"
    RELEASE = "Release"
    STRONG_RELEASE = "StrongRelease"

    @property
    def arity(self):
        return ARITY[self]

    @classmethod
    def from_name(cls, name):
        for kind in cls:
            if kind.value == name:
                return kind
        raise KeyError(name)


LEAF_KINDS = frozenset([Kind.TRUE, Kind.ATOM])
UNARY_KINDS = frozenset([Kind.NOT, Kind.NEXT, Kind.EVENTUALLY, Kind.GLOBALLY])
BINARY_KINDS = frozenset([Kind.AND, Kind.OR, Kind.IMPLIES, Kind.UNTIL,
                          Kind.WEAK_UNTIL, Kind.RELEASE, Kind.STRONG_RELEASE])

ARITY = {}
ARITY.update((kind, 0) for kind in LEAF_KINDS)
ARITY.update((kind, 1) for kind in UNARY_KINDS)
ARITY.update((kind, 2) for kind in BINARY_KINDS)


@dataclass(frozen=True)
class Formula:
    """An immutable LTL_f formula node."""

    kind: Kind
    atom_name: Optional[str] = None
    children: Tuple["Formula", ...] = field(default=())

    def __post_init__(self):
        if not isinstance(self.kind, Kind):
            raise ArityError("unknown formula kind %r" % (self.kind,))
        if not isinstance(self.children, tuple):
            object.__setattr__(self, "children", tuple(self.children))
        if len(self.children) != self.kind.arity:
            raise ArityError("%s expects %i argument(s), got %i"
                             % (self.kind.value, self.kind.arity, len(self.children)))
        for child in self.children:
            if not isinstance(child, Formula):
                raise ArityError("%s argument is not a formula: %r" % (self.kind.value, child))
        if self.kind is Kind.ATOM:
            if not self.atom_name:
                raise ArityError("atoms need a nonempty name")
        elif self.atom_name is not None:
            raise ArityError("only atoms carry a name")

    @property
    def is_leaf(self):
        return self.kind in LEAF_KINDS

    def __str__(self):
        from lib.lpt.core.parser import format_formula
        return format_formula(self)


def true():
    return Formula(Kind.TRUE)


def atom(name):
    return Formula(Kind.ATOM, name)


def not_(f):
    return Formula(Kind.NOT, children=(f,))


def next_(f):
    return Formula(Kind.NEXT, children=(f,))


def eventually(f):
    return Formula(Kind.EVENTUALLY, children=(f,))


def globally(f):
    return Formula(Kind.GLOBALLY, children=(f,))


def and_(left, right):
    return Formula(Kind.AND, children=(left, right))


def or_(left, right):
    return Formula(Kind.OR, children=(left, right))


def implies(left, right):
    return Formula(Kind.IMPLIES, children=(left, right))


def until(left, right):
    return Formula(Kind.UNTIL, children=(left, right))


def weak_until(left, right):
    return Formula(Kind.WEAK_UNTIL, children=(left, right))


def release(left, right):
    return Formula(Kind.RELEASE, children=(left, right))


def strong_release(left, right):
    return Formula(Kind.STRONG_RELEASE, children=(left, right))


def arguments(f):
    """Return the immediate arguments of f's top-level operator, left to right."""
    return list(f.children)


def depth(f):
    """Height of the formula tree, the root being at level 0."""
    if not f.children:
        return 0
    return 1 + max(depth(child) for child in f.children)


def size(f):
    return 1 + sum(size(child) for child in f.children)


def atoms(f):
    """Atom names of f in first-occurrence order."""
    result = []
    stack = [f]
    while stack:
        current = stack.pop()
        if current.kind is Kind.ATOM and current.atom_name not in result:
            result.append(current.atom_name)
        stack.extend(reversed(current.children))
    return result
