"""Trace module.

This module contains label vocabularies, label sets and finite traces, plus
the JSON Lines reader and writer used for trace files.

A trace file holds one JSON array of labels per step, optionally preceded by
a header object ``{"vocabulary": [...], "origin": T0}``.
"""

import io
import logging
from collections.abc import Sequence

from lib.lpt.core.dataformat import get_decoder, get_encoder
from lib.lpt.core.exc import FormatError, InputError, UnknownLabel

logger = logging.getLogger("lpt.trace")


class Vocabulary(Sequence):
    """Ordered set of label names."""

    def __init__(self, labels=()):
        self.labels = []
        for label in labels:
            if not isinstance(label, str) or not label:
                raise InputError("labels must be nonempty strings, got %r" % (label,))
            if label in self.labels:
                raise InputError("duplicate label '%s' in vocabulary" % (label))
            self.labels.append(label)
        self._members = frozenset(self.labels)

    def __contains__(self, label):
        return label in self._members

    def __getitem__(self, index):
        return self.labels[index]

    def __len__(self):
        return len(self.labels)

    def __eq__(self, other):
        if isinstance(other, Vocabulary):
            return self.labels == other.labels
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.labels))

    def __repr__(self):
        return "Vocabulary(%r)" % (self.labels,)

    def label_set(self, members, line=None):
        return label_set(members, self, line)


def label_set(members=(), vocabulary=None, line=None):
    """Build a LabelSet, dropping duplicates.

    Every member must belong to vocabulary when one is given.
    """
    result = frozenset(members)
    if vocabulary is not None:
        for label in sorted(result):
            if label not in vocabulary:
                raise UnknownLabel(label, line)
    return result


LabelSet = frozenset


class TraceBase(Sequence):
    """Positional access plus absolute-time helpers shared by traces and views.

    ``trace[i]`` is the i-th step of the trace; ``trace.at(t)`` is the step
    at absolute time t.
    """

    origin = 0

    @property
    def last(self):
        """Absolute time of the newest step (origin - 1 when empty)."""
        return self.origin + len(self) - 1

    def at(self, t):
        if t < self.origin or t > self.last:
            raise IndexError("time %i outside [%i, %i]" % (t, self.origin, self.last))
        return self[t - self.origin]

    def times(self):
        return range(self.origin, self.last + 1)

    def __eq__(self, other):
        if isinstance(other, TraceBase):
            return self.origin == other.origin and list(self) == list(other)
        return NotImplemented

    def __repr__(self):
        return "%s(origin=%i, steps=%r)" % (self.__class__.__name__, self.origin,
                                           [sorted(step) for step in self])


class Trace(TraceBase):
    """Append-only sequence of label sets starting at time ``origin``."""

    def __init__(self, steps=(), origin=0, vocabulary=None):
        if origin < 0:
            raise InputError("trace origin must be nonnegative")
        if vocabulary is not None and not isinstance(vocabulary, Vocabulary):
            vocabulary = Vocabulary(vocabulary)
        self.origin = origin
        self.declared_vocabulary = vocabulary
        self.steps = []
        for step in steps:
            self.append(step)

    def __getitem__(self, index):
        return self.steps[index]

    def __len__(self):
        return len(self.steps)

    @property
    def vocabulary(self):
        """The declared vocabulary, or the labels seen so far in sorted order."""
        if self.declared_vocabulary is not None:
            return self.declared_vocabulary
        seen = set()
        for step in self.steps:
            seen.update(step)
        return Vocabulary(sorted(seen))

    def append(self, labels):
        self.steps.append(label_set(labels, self.declared_vocabulary))
        return self

    def prefix(self, t):
        """Copy of the steps from origin up to and including time t."""
        if t < self.origin - 1 or t > self.last:
            raise IndexError("time %i outside [%i, %i]" % (t, self.origin, self.last))
        return Trace(self.steps[:t - self.origin + 1], self.origin, self.declared_vocabulary)

    def extended(self, steps):
        """New trace made of this one followed by steps."""
        result = Trace(self.steps, self.origin, self.declared_vocabulary)
        for step in steps:
            result.append(step)
        return result


class TraceSuffix(TraceBase):
    """Read-only view of a trace from time ``origin`` on; no copy is made."""

    def __init__(self, trace, start):
        self.trace = trace
        self.origin = start

    def __getitem__(self, index):
        if isinstance(index, slice):
            return [self[i] for i in range(*index.indices(len(self)))]
        if index < 0:
            index += len(self)
        if index < 0 or index >= len(self):
            raise IndexError("suffix index out of range")
        return self.trace.at(self.origin + index)

    def __len__(self):
        return self.trace.last - self.origin + 1


def suffix(trace, t):
    """View over the steps of trace from time t to its last step."""
    if t < trace.origin or t > trace.last:
        raise IndexError("suffix start %i outside [%i, %i]" % (t, trace.origin, trace.last))
    return TraceSuffix(trace, t)


def read_trace(stream, vocabulary=None):
    """Read a JSON Lines trace from an open text stream.

    An explicit vocabulary takes precedence over the one in the header.
    """
    decoder = get_decoder()
    origin = 0
    declared = vocabulary
    records = []
    blank_line = None
    for number, raw in enumerate(stream, 1):
        text = raw.strip()
        if not text:
            if blank_line is None:
                blank_line = number
            continue
        if blank_line is not None:
            raise FormatError("blank line inside trace", blank_line)
        record = decoder.decode(text, number)
        if isinstance(record, dict):
            if number != 1:
                raise FormatError("header object only allowed on the first line", number)
            header_vocabulary, origin = decoder.trace_header(record, number)
            if declared is None and header_vocabulary is not None:
                declared = header_vocabulary
            continue
        records.append((number, decoder.label_record(record, number)))
    if not records:
        raise FormatError("a trace must have at least one step")
    if declared is not None and not isinstance(declared, Vocabulary):
        declared = Vocabulary(declared)
    trace = Trace(origin=origin, vocabulary=declared)
    for number, record in records:
        trace.steps.append(label_set(record, declared, number))
    logger.debug("read trace of %i step(s) from origin %i", len(trace), origin)
    return trace


def load_trace(source, vocabulary=None):
    """Load a trace from a path or an open text stream."""
    try:
        if hasattr(source, "read"):
            return read_trace(source, vocabulary)
        with io.open(source, "r", encoding="utf-8") as trace_file:
            return read_trace(trace_file, vocabulary)
    except UnicodeDecodeError as err:
        raise FormatError("trace is not valid UTF-8: %s" % (err))


def trace_lines(trace, header=None):
    encoder = get_encoder()
    if header is None:
        header = trace.declared_vocabulary is not None or trace.origin != 0
    if header:
        vocabulary = trace.declared_vocabulary
        yield encoder.trace_header(None if vocabulary is None else list(vocabulary), trace.origin)
    for step in trace:
        yield encoder.label_record(step)


def emit_trace(trace, target=None, header=None):
    """Write trace in the JSON Lines format; returns the text when target is None."""
    text = "".join(line + "\n" for line in trace_lines(trace, header))
    if target is None:
        return text
    if hasattr(target, "write"):
        target.write(text)
    else:
        with io.open(target, "w", encoding="utf-8") as trace_file:
            trace_file.write(text)
    return text


def parse_trace_text(text, vocabulary=None):
    return read_trace(io.StringIO(text), vocabulary)
