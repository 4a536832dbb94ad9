"""Abstract syntax, parser, and printer for epistemic propositional formulas.

Concrete syntax (the wire format used by the CLI, theory files, and reports):

    atoms          identifiers matching [a-z][a-zA-Z0-9_]*
    constants      true, false
    negation       !F
    knowledge      K(F)            (parentheses mandatory)
    conjunction    F & G           (left associative)
    disjunction    F | G           (left associative)
    implication    F -> G          (right associative)
    biconditional  F <-> G         (right associative)
    grouping       (F)

Precedence, high to low: {!, K} > & > | > -> > <->.  Whitespace is
insignificant.  `K`, `true`, `false`, `and`, `or`, `not`, `implies`, `iff`
are reserved and cannot be used as atoms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from .errors import LogicError

RESERVED_WORDS = frozenset({"K", "and", "or", "not", "implies", "iff", "true", "false"})

_ATOM_RE = re.compile(r"[a-z][a-zA-Z0-9_]*\Z")


def is_atom_name(name: str) -> bool:
    """True iff `name` is a legal atom: lowercase-led identifier, not reserved."""
    return bool(_ATOM_RE.match(name)) and name not in RESERVED_WORDS


@dataclass(frozen=True)
class Formula:
    """Base class; concrete cases below. Structural equality throughout."""

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class Var(Formula):
    name: str

    def __post_init__(self):
        if not is_atom_name(self.name):
            raise ValueError(f"invalid atom name: {self.name!r}")


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Know(Formula):
    operand: Formula


class ParseError(LogicError):
    """Syntax error with a 1-based character offset into the input string."""

    def __init__(self, offset: int, message: str):
        self.offset = offset
        super().__init__(f"syntax error at offset {offset}: {message}")


_TOKEN_NAMES = {
    "&": "'&'",
    "|": "'|'",
    "!": "'!'",
    "->": "'->'",
    "<->": "'<->'",
    "(": "'('",
    ")": "')'",
    "eof": "end of input",
}


@dataclass(frozen=True)
class _Token:
    kind: str  # "ident" | one of the keys in _TOKEN_NAMES
    text: str
    pos: int  # 0-based character offset

    def describe(self) -> str:
        if self.kind == "ident":
            return f"'{self.text}'"
        return _TOKEN_NAMES[self.kind]


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "()&|!":
            tokens.append(_Token(c, c, i))
            i += 1
        elif c == "-":
            if text.startswith("->", i):
                tokens.append(_Token("->", "->", i))
                i += 2
            else:
                raise ParseError(i + 1, "expected '->'")
        elif c == "<":
            if text.startswith("<->", i):
                tokens.append(_Token("<->", "<->", i))
                i += 3
            else:
                raise ParseError(i + 1, "expected '<->'")
        elif c.isalpha() or c == "_":
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("ident", text[i:j], i))
            i = j
        else:
            raise ParseError(i + 1, f"unexpected character {c!r}")
    tokens.append(_Token("eof", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.index = 0

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(
                tok.pos + 1, f"expected {_TOKEN_NAMES[kind]}, found {tok.describe()}"
            )
        return self.advance()

    def iff(self) -> Formula:
        left = self.implication()
        if self.peek().kind == "<->":
            self.advance()
            return Iff(left, self.iff())
        return left

    def implication(self) -> Formula:
        left = self.disjunction()
        if self.peek().kind == "->":
            self.advance()
            return Implies(left, self.implication())
        return left

    def disjunction(self) -> Formula:
        left = self.conjunction()
        while self.peek().kind == "|":
            self.advance()
            left = Or(left, self.conjunction())
        return left

    def conjunction(self) -> Formula:
        left = self.unary()
        while self.peek().kind == "&":
            self.advance()
            left = And(left, self.unary())
        return left

    def unary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "!":
            self.advance()
            return Not(self.unary())
        if tok.kind == "(":
            self.advance()
            inner = self.iff()
            self.expect(")")
            return inner
        if tok.kind == "ident":
            self.advance()
            if tok.text == "true":
                return Top()
            if tok.text == "false":
                return Bottom()
            if tok.text == "K":
                self.expect("(")
                inner = self.iff()
                self.expect(")")
                return Know(inner)
            if tok.text in RESERVED_WORDS:
                raise ParseError(
                    tok.pos + 1, f"reserved word '{tok.text}' cannot be used as an atom"
                )
            if not _ATOM_RE.match(tok.text):
                raise ParseError(
                    tok.pos + 1,
                    f"invalid atom name '{tok.text}' (atoms match [a-z][a-zA-Z0-9_]*)",
                )
            return Var(tok.text)
        raise ParseError(tok.pos + 1, f"expected a formula, found {tok.describe()}")


def parse(text: str) -> Formula:
    """Parse concrete syntax into a Formula; raises ParseError with offset."""
    parser = _Parser(_tokenize(text))
    formula = parser.iff()
    trailing = parser.peek()
    if trailing.kind != "eof":
        raise ParseError(
            trailing.pos + 1, f"expected end of input, found {trailing.describe()}"
        )
    return formula


# Binding strength of each connective; prefix operators and atoms bind tightest.
_PRECEDENCE = {Iff: 0, Implies: 1, Or: 2, And: 3}
_SYMBOL = {Iff: "<->", Implies: "->", Or: "|", And: "&"}
_PREFIX_LEVEL = 4


def _render(f: Formula, context: int) -> str:
    if isinstance(f, Top):
        return "true"
    if isinstance(f, Bottom):
        return "false"
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Know):
        return f"K({_render(f.operand, 0)})"
    if isinstance(f, Not):
        return "!" + _render(f.operand, _PREFIX_LEVEL)
    level = _PRECEDENCE[type(f)]
    # Left-associative: & and |; right-associative: -> and <->.
    if isinstance(f, (And, Or)):
        left = _render(f.left, level)
        right = _render(f.right, level + 1)
    else:
        left = _render(f.left, level + 1)
        right = _render(f.right, level)
    text = f"{left} {_SYMBOL[type(f)]} {right}"
    return f"({text})" if level < context else text


def render(f: Formula) -> str:
    """Minimally parenthesized concrete syntax; parse(render(f)) == f."""
    return _render(f, 0)


def subformulas(f: Formula) -> Iterator[Formula]:
    """Depth-first iterator over f and all its subterms."""
    yield f
    if isinstance(f, (Not, Know)):
        yield from subformulas(f.operand)
    elif isinstance(f, (And, Or, Implies, Iff)):
        yield from subformulas(f.left)
        yield from subformulas(f.right)


def atoms(f: Formula) -> tuple[str, ...]:
    """All distinct atom names in f, sorted lexicographically."""
    return tuple(sorted({g.name for g in subformulas(f) if isinstance(g, Var)}))


def modal_depth(f: Formula) -> int:
    """Maximum nesting depth of K; 0 iff f is K-free."""
    if isinstance(f, (Top, Bottom, Var)):
        return 0
    if isinstance(f, Know):
        return 1 + modal_depth(f.operand)
    if isinstance(f, Not):
        return modal_depth(f.operand)
    return max(modal_depth(f.left), modal_depth(f.right))
