"""Parser module.

Text <-> Formula conversion for the ASCII LTL_f surface syntax.

Binding, strongest to weakest:

    1. grouping ( )
    2. unary         !  X  F  G
    3. temporal      U  W  R  M      (right-associative)
    4. conjunction   &
    5. disjunction   |
    6. implication   ->              (right-associative)

&, | and -> get separate levels, the usual logic convention.
"""

import io
import logging

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken

from lib.lpt.core import formula as fm
from lib.lpt.core.exc import SpecSyntaxError, UnknownAtom
from lib.lpt.core.formula import Kind

logger = logging.getLogger("lpt.syntax")

GRAMMAR = r"""
start: implication

?implication: disjunction
            | disjunction _IMPLIES implication          -> implies

?disjunction: conjunction
            | disjunction _OR conjunction               -> or_

?conjunction: temporal
            | conjunction _AND temporal                 -> and_

?temporal: unary
         | unary _UNTIL temporal                        -> until
         | unary _WEAK_UNTIL temporal                   -> weak_until
         | unary _RELEASE temporal                      -> release
         | unary _STRONG_RELEASE temporal               -> strong_release

?unary: primary
      | _NOT unary                                      -> not_
      | _NEXT unary                                     -> next_
      | _EVENTUALLY unary                               -> eventually
      | _GLOBALLY unary                                 -> globally

?primary: _TRUE                                         -> true
        | NAME                                          -> atom
        | _LPAR implication _RPAR

_IMPLIES: "->"
_OR: "|"
_AND: "&"
_NOT: "!"
_NEXT: "X"
_EVENTUALLY: "F"
_GLOBALLY: "G"
_UNTIL: "U"
_WEAK_UNTIL: "W"
_RELEASE: "R"
_STRONG_RELEASE: "M"
_TRUE: "true"
_LPAR: "("
_RPAR: ")"
NAME: /[A-Za-z_][A-Za-z0-9_]*/

%import common.WS
%ignore WS
"""

RESERVED = frozenset(["X", "F", "G", "U", "W", "R", "M", "true"])

TOKEN_DISPLAY = {
    "_IMPLIES": "'->'",
    "_OR": "'|'",
    "_AND": "'&'",
    "_NOT": "'!'",
    "_NEXT": "'X'",
    "_EVENTUALLY": "'F'",
    "_GLOBALLY": "'G'",
    "_UNTIL": "'U'",
    "_WEAK_UNTIL": "'W'",
    "_RELEASE": "'R'",
    "_STRONG_RELEASE": "'M'",
    "_TRUE": "'true'",
    "_LPAR": "'('",
    "_RPAR": "')'",
    "NAME": "atom",
    "$END": "end of input",
}

SYMBOLS = {
    Kind.NOT: "!",
    Kind.NEXT: "X",
    Kind.EVENTUALLY: "F",
    Kind.GLOBALLY: "G",
    Kind.AND: "&",
    Kind.OR: "|",
    Kind.IMPLIES: "->",
    Kind.UNTIL: "U",
    Kind.WEAK_UNTIL: "W",
    Kind.RELEASE: "R",
    Kind.STRONG_RELEASE: "M",
}

# binding strength and associativity used by format_formula
LEVELS = {
    Kind.IMPLIES: (1, "right"),
    Kind.OR: (2, "left"),
    Kind.AND: (3, "left"),
    Kind.UNTIL: (4, "right"),
    Kind.WEAK_UNTIL: (4, "right"),
    Kind.RELEASE: (4, "right"),
    Kind.STRONG_RELEASE: (4, "right"),
    Kind.NOT: (5, None),
    Kind.NEXT: (5, None),
    Kind.EVENTUALLY: (5, None),
    Kind.GLOBALLY: (5, None),
    Kind.TRUE: (6, None),
    Kind.ATOM: (6, None),
}


@v_args(inline=True)
class FormulaBuilder(Transformer):

    def start(self, f):
        return f

    def true(self):
        return fm.true()

    def atom(self, name):
        return fm.atom(str(name))

    def not_(self, f):
        return fm.not_(f)

    def next_(self, f):
        return fm.next_(f)

    def eventually(self, f):
        return fm.eventually(f)

    def globally(self, f):
        return fm.globally(f)

    def and_(self, left, right):
        return fm.and_(left, right)

    def or_(self, left, right):
        return fm.or_(left, right)

    def implies(self, left, right):
        return fm.implies(left, right)

    def until(self, left, right):
        return fm.until(left, right)

    def weak_until(self, left, right):
        return fm.weak_until(left, right)

    def release(self, left, right):
        return fm.release(left, right)

    def strong_release(self, left, right):
        return fm.strong_release(left, right)


_parser = Lark(GRAMMAR, parser="lalr", lexer="basic", transformer=FormulaBuilder())


def _expected(names):
    return sorted(set(TOKEN_DISPLAY.get(name, name) for name in names))


def _syntax_error(text, err):
    if isinstance(err, UnexpectedCharacters):
        return SpecSyntaxError("unexpected character %r" % (text[err.pos_in_stream],),
                               text, err.pos_in_stream, _expected(err.allowed or ()))
    if isinstance(err, UnexpectedToken):
        expected = _expected(getattr(err, "accepts", None) or err.expected)
        if err.token.type == "$END":
            return SpecSyntaxError("unexpected end of input", text, len(text.rstrip()), expected)
        return SpecSyntaxError("unexpected token %r" % (str(err.token),), text,
                               err.token.start_pos, expected)
    if isinstance(err, UnexpectedEOF):
        return SpecSyntaxError("unexpected end of input", text, len(text.rstrip()),
                               _expected(err.expected))
    return SpecSyntaxError(str(err), text)


def parse(text, vocabulary=None):
    """Parse a specification string into a Formula.

    :param text: the specification, e.g. ``"F keyA & F keyB"``
    :param vocabulary: optional iterable of allowed atom names
    :return: the formula whose top-level operator is the weakest one in text
    """
    if text is None or not text.strip():
        raise SpecSyntaxError("empty specification", text, 0)
    try:
        result = _parser.parse(text)
    except UnexpectedInput as err:
        raise _syntax_error(text, err)
    if vocabulary is not None:
        allowed = list(vocabulary)
        for name in fm.atoms(result):
            if name not in allowed:
                raise UnknownAtom(name, allowed)
    logger.debug("parsed %r into %s", text, result.kind.value)
    return result


def _render_child(child, parenthesize):
    text = format_formula(child)
    if parenthesize:
        return "(%s)" % (text)
    return text


def format_formula(f):
    """Render f with the fewest parentheses that parse back to f."""
    kind = f.kind
    if kind is Kind.TRUE:
        return "true"
    if kind is Kind.ATOM:
        return f.atom_name
    level, assoc = LEVELS[kind]
    if kind.arity == 1:
        child = f.children[0]
        wrap = LEVELS[child.kind][0] < level
        operand = _render_child(child, wrap)
        if kind is Kind.NOT or wrap:
            return "%s%s" % (SYMBOLS[kind], operand)
        return "%s %s" % (SYMBOLS[kind], operand)
    left, right = f.children
    left_level = LEVELS[left.kind][0]
    right_level = LEVELS[right.kind][0]
    wrap_left = left_level < level or (left_level == level and assoc == "right")
    wrap_right = right_level < level or (right_level == level and assoc == "left")
    return "%s %s %s" % (_render_child(left, wrap_left),
                         SYMBOLS[kind],
                         _render_child(right, wrap_right))


def parse_spec_text(text, vocabulary=None):
    """Parse the content of a specification file.

    Lines starting with ``#`` are comments; the remaining lines form a single
    formula.
    """
    lines = []
    for line in io.StringIO(text):
        stripped = line.rstrip()
        if stripped.lstrip().startswith("#"):
            continue
        lines.append(stripped)
    return parse(" ".join(line for line in lines if line.strip()), vocabulary)


def load_spec(path, vocabulary=None):
    with io.open(path, "r", encoding="utf-8") as spec_file:
        try:
            text = spec_file.read()
        except UnicodeDecodeError as err:
            raise SpecSyntaxError("specification file is not valid UTF-8: %s" % (err), None, err.start)
    return parse_spec_text(text, vocabulary)
