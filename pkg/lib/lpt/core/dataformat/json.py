"""JSON module.

This module contains the encoder and decoder used for every JSON document lpt
reads or writes: trace records, tracking dumps and signatures. The canonical
form (sorted keys, no whitespace) is what digests are computed on.

"""

import hashlib

import ujson

from lib.lpt.core.exc import FormatError
from lib.lpt.core.formula import Kind

TERNARY_VALUES = (-1, 0, 1)
DUMP_KEYS = ("formula", "nodes", "time", "vectors", "finalized", "eval_count")
NODE_KEYS = ("index", "formula_text", "type", "parent")


def canonical(obj):
    return ujson.dumps(obj, sort_keys=True)


def digest(obj):
    """Lowercase hex SHA-256 of the canonical serialization of obj."""
    return hashlib.sha256(canonical(obj).encode("utf-8")).hexdigest()


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


class Encoder(object):
    """Converts lpt values into their JSON text form."""

    def encode(self, obj):
        return canonical(obj)

    def label_record(self, labels):
        return canonical(sorted(labels))

    def trace_header(self, vocabulary=None, origin=0):
        header = {}
        if vocabulary is not None:
            header["vocabulary"] = list(vocabulary)
        if origin:
            header["origin"] = origin
        return canonical(header)

    def signature(self, signature):
        return canonical([list(sequence) for sequence in signature])

    def digest(self, obj):
        return digest(obj)


class Decoder(object):
    """Parses and validates JSON text produced by Encoder or by hand."""

    def decode(self, text, line=None):
        try:
            return ujson.loads(text)
        except ValueError as err:
            raise FormatError("invalid JSON: %s" % (err), line)

    def label_record(self, record, line=None):
        if not isinstance(record, list):
            raise FormatError("a step must be a JSON array of labels", line)
        for label in record:
            if not isinstance(label, str) or not label:
                raise FormatError("labels must be nonempty strings, got %r" % (label,), line)
        return record

    def trace_header(self, record, line=None):
        unknown = set(record) - set(["vocabulary", "origin"])
        if unknown:
            raise FormatError("unknown header key(s): %s" % (", ".join(sorted(unknown))), line)
        vocabulary = record.get("vocabulary")
        if vocabulary is not None:
            self.label_record(vocabulary, line)
        origin = record.get("origin", 0)
        if not _is_int(origin) or origin < 0:
            raise FormatError("origin must be a nonnegative integer", line)
        return vocabulary, origin

    def vector(self, values, line=None):
        if not isinstance(values, list):
            raise FormatError("a tracking vector must be an array", line)
        for value in values:
            if not _is_int(value) or value not in TERNARY_VALUES:
                raise FormatError("tracking values are -1, 0 or 1, got %r" % (value,), line)
        return values

    def signature(self, text, line=None):
        obj = self.decode(text, line) if isinstance(text, str) else text
        if not isinstance(obj, list):
            raise FormatError("a signature must be an array of arrays", line)
        return [self.vector(sequence, line) for sequence in obj]

    def dump(self, text, line=None):
        """Validate a tracking dump and return it as a dict."""
        obj = self.decode(text, line) if isinstance(text, str) else text
        if not isinstance(obj, dict):
            raise FormatError("a tracking dump must be a JSON object", line)
        missing = [key for key in DUMP_KEYS if key not in obj]
        if missing:
            raise FormatError("dump misses key(s): %s" % (", ".join(missing)), line)
        nodes = obj["nodes"]
        if not isinstance(nodes, list) or not nodes:
            raise FormatError("dump nodes must be a nonempty array", line)
        for position, node in enumerate(nodes):
            if not isinstance(node, dict) or any(key not in node for key in NODE_KEYS):
                raise FormatError("dump node %i is malformed" % (position), line)
            if node["index"] != position:
                raise FormatError("dump node %i carries index %r" % (position, node["index"]), line)
            try:
                Kind.from_name(node["type"])
            except KeyError:
                raise FormatError("dump node %i has unknown type %r" % (position, node["type"]), line)
        vectors = obj["vectors"]
        if not isinstance(vectors, list) or len(vectors) != len(nodes):
            raise FormatError("dump needs one vector per node", line)
        for values in vectors:
            self.vector(values, line)
        lengths = set(len(values) for values in vectors)
        if len(lengths) > 1:
            raise FormatError("dump vectors differ in length", line)
        time = obj["time"]
        if time is not None and not _is_int(time):
            raise FormatError("dump time must be an integer or null", line)
        if time is None and lengths - set([0]):
            raise FormatError("dump without a time must have empty vectors", line)
        if not isinstance(obj["finalized"], bool):
            raise FormatError("dump finalized flag must be a boolean", line)
        if not _is_int(obj["eval_count"]) or obj["eval_count"] < 0:
            raise FormatError("dump eval_count must be a nonnegative integer", line)
        return obj
