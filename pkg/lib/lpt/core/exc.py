"""lpt exceptions."""


class LptError(Exception):
    """Base class of every error raised by lpt."""


class InputError(LptError):
    """A specification, trace, dump or argument given by the user is invalid."""


class SpecSyntaxError(InputError):
    """A specification string could not be parsed."""

    def __init__(self, message, text=None, position=None, expected=()):
        self.text = text
        self.position = position
        self.expected = tuple(expected)
        if position is not None:
            message = "%s (at position %i)" % (message, position)
        if self.expected:
            message = "%s; expected one of: %s" % (message, ", ".join(self.expected))
        InputError.__init__(self, message)


class UnknownAtom(InputError):
    """An atom of the specification is not part of the declared vocabulary."""

    def __init__(self, atom, vocabulary=()):
        self.atom = atom
        InputError.__init__(self, "unknown atom '%s' (vocabulary: %s)" % (atom, ", ".join(vocabulary)))


class ArityError(InputError):
    """An operator was applied to the wrong number of arguments."""


class FormatError(InputError):
    """A trace or dump record is malformed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = "line %i: %s" % (line, message)
        InputError.__init__(self, message)


class UnknownLabel(InputError):
    """A label set contains a label that is absent from the vocabulary."""

    def __init__(self, label, line=None):
        self.label = label
        self.line = line
        message = "unknown label '%s'" % (label)
        if line is not None:
            message = "line %i: %s" % (line, message)
        InputError.__init__(self, message)


class ShapeMismatch(InputError):
    """Two signatures do not come from the same formula tree shape."""


class ConfigError(InputError):
    """Configuration or command line values are invalid."""


class StateError(LptError):
    """An engine state was used in a way its life cycle does not allow."""


class AlreadyFinalized(StateError):
    """The engine state has been finalized and cannot be updated anymore."""


class EmptyTrace(StateError):
    """Terminal evaluation was requested before any trace step was seen."""


class EmptyState(StateError):
    """A signature was requested before any trace step was seen."""


class BudgetExceeded(LptError):
    """Continuation enumeration would exceed the configured cap."""


class InvariantViolation(LptError):
    """An internal invariant of the tracking engine does not hold."""
