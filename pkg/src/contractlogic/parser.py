"""Concrete syntax for the contract-logic language.

Grammar (precedence high to low, ``->`` and ``<->`` right-associative)::

    atom  := ident | ident(a, b) | true | false | [arith]
    arith := term ('-' term)? op int     where term := ident | '0'
    !  >  &  >  |  >  ->  >  <->

Arithmetic atoms are bracketed so lexing needs no symbol table; ``0`` (or
the identifier ``zero``) denotes the distinguished zero variable.
"""

from __future__ import annotations

import re

from .formulas import (
    ZERO,
    And,
    ArithAtom,
    ArithFormError,
    FalseConst,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    PropAtom,
    TrueConst,
)


class FormulaSyntaxError(ValueError):
    """Syntax error with byte offset and the token set that was expected."""

    def __init__(self, offset: int, expected: set[str], found: str):
        self.offset = offset
        self.expected = expected
        self.found = found
        exp = ", ".join(sorted(expected))
        super().__init__(f"at offset {offset}: expected one of {{{exp}}}, found {found!r}")


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<ident>[a-z_][a-z0-9_]*)
  | (?P<int>-?\d+)
  | (?P<op><->|->|<=|>=|!=|[<>=]|[()\[\],&|!\-*+])
    """,
    re.VERBOSE,
)

_END = "<end>"


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens: list[tuple[str, int]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(pos, {"token"}, text[pos])
        if m.lastgroup != "ws":
            tokens.append((m.group(), m.start()))
        pos = m.end()
    tokens.append((_END, len(text)))
    return tokens


_IDENT_RE = re.compile(r"[a-z_][a-z0-9_]*$")
_INT_RE = re.compile(r"-?\d+$")


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> str:
        return self.tokens[self.pos][0]

    def offset(self) -> int:
        return self.tokens[self.pos][1]

    def advance(self) -> str:
        tok = self.tokens[self.pos][0]
        self.pos += 1
        return tok

    def expect(self, tok: str) -> None:
        if self.peek() != tok:
            raise FormulaSyntaxError(self.offset(), {tok}, self.peek())
        self.advance()

    def parse(self) -> Formula:
        f = self.parse_iff()
        if self.peek() != _END:
            raise FormulaSyntaxError(self.offset(), {_END}, self.peek())
        return f

    def parse_iff(self) -> Formula:
        parts = [self.parse_implies()]
        while self.peek() == "<->":
            self.advance()
            parts.append(self.parse_implies())
        f = parts[-1]
        for lhs in reversed(parts[:-1]):
            f = Iff(lhs, f)
        return f

    def parse_implies(self) -> Formula:
        parts = [self.parse_or()]
        while self.peek() == "->":
            self.advance()
            parts.append(self.parse_or())
        f = parts[-1]
        for lhs in reversed(parts[:-1]):
            f = Implies(lhs, f)
        return f

    def parse_or(self) -> Formula:
        parts = [self.parse_and()]
        while self.peek() == "|":
            self.advance()
            parts.append(self.parse_and())
        return parts[0] if len(parts) == 1 else Or(tuple(parts))

    def parse_and(self) -> Formula:
        parts = [self.parse_unary()]
        while self.peek() == "&":
            self.advance()
            parts.append(self.parse_unary())
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def parse_unary(self) -> Formula:
        if self.peek() == "!":
            self.advance()
            return Not(self.parse_unary())
        return self.parse_atom()

    def parse_atom(self) -> Formula:
        tok = self.peek()
        if tok == "(":
            self.advance()
            f = self.parse_iff()
            self.expect(")")
            return f
        if tok == "[":
            self.advance()
            f = self.parse_arith()
            self.expect("]")
            return f
        if tok == "true":
            self.advance()
            return TrueConst()
        if tok == "false":
            self.advance()
            return FalseConst()
        if _IDENT_RE.match(tok):
            self.advance()
            if self.peek() != "(":
                return PropAtom(tok)
            self.advance()
            args = [self._ident()]
            while self.peek() == ",":
                self.advance()
                args.append(self._ident())
            self.expect(")")
            return PropAtom(tok, tuple(args))
        raise FormulaSyntaxError(self.offset(), {"ident", "(", "[", "!", "true", "false"}, tok)

    def _ident(self) -> str:
        tok = self.peek()
        if not _IDENT_RE.match(tok):
            raise FormulaSyntaxError(self.offset(), {"ident"}, tok)
        return self.advance()

    def parse_arith(self) -> Formula:
        off = self.offset()
        left = self._arith_term()
        right = ZERO
        if self.peek() == "-":
            self.advance()
            right = self._arith_term()
        if self.peek() in ("*", "+"):
            raise ArithFormError(f"at offset {self.offset()}: only unit-coefficient differences are supported")
        if self.peek() == "-":
            raise ArithFormError(f"at offset {self.offset()}: more than two variables in arithmetic atom")
        op = self.peek()
        if op not in ("<=", "<", ">=", ">", "=", "!="):
            raise FormulaSyntaxError(self.offset(), {"<=", "<", ">=", ">", "=", "!="}, op)
        self.advance()
        bound_tok = self.peek()
        if not _INT_RE.match(bound_tok):
            raise FormulaSyntaxError(self.offset(), {"int"}, bound_tok)
        self.advance()
        if left == ZERO and right == ZERO:
            raise ArithFormError(f"at offset {off}: arithmetic atom needs at least one variable")
        return ArithAtom(left, right, op, int(bound_tok))

    def _arith_term(self) -> str:
        tok = self.peek()
        if tok == "0":
            self.advance()
            return ZERO
        if _IDENT_RE.match(tok):
            self.advance()
            return tok
        if _INT_RE.match(tok):
            raise ArithFormError(f"at offset {self.offset()}: only unit-coefficient differences are supported")
        raise FormulaSyntaxError(self.offset(), {"ident", "0"}, tok)


def parse(text: str) -> Formula:
    """Parse concrete syntax into a Formula AST."""
    return _Parser(text).parse()


# precedence levels for minimal parenthesization
_IFF, _IMPLIES, _OR, _AND, _NOT, _ATOM = 1, 2, 3, 4, 5, 6


def _level(f: Formula) -> int:
    if isinstance(f, Iff):
        return _IFF
    if isinstance(f, Implies):
        return _IMPLIES
    if isinstance(f, Or):
        return _OR
    if isinstance(f, And):
        return _AND
    if isinstance(f, Not):
        return _NOT
    return _ATOM


def _wrap(f: Formula, min_level: int) -> str:
    s = pretty(f)
    return f"({s})" if _level(f) < min_level else s


def _arith_str(a: ArithAtom) -> str:
    if a.right == ZERO and a.left != ZERO:
        lhs = a.left
    else:
        left = "0" if a.left == ZERO else a.left
        right = "0" if a.right == ZERO else a.right
        lhs = f"{left} - {right}"
    return f"[{lhs} {a.op} {a.bound}]"


def pretty(f: Formula) -> str:
    """Render with minimal parentheses; parse(pretty(f)) == f."""
    if isinstance(f, PropAtom):
        return f.predicate if not f.args else f"{f.predicate}({', '.join(f.args)})"
    if isinstance(f, ArithAtom):
        return _arith_str(f)
    if isinstance(f, TrueConst):
        return "true"
    if isinstance(f, FalseConst):
        return "false"
    if isinstance(f, Not):
        return "!" + _wrap(f.child, _NOT)
    if isinstance(f, And):
        # same-level children keep explicit parens so nesting survives reparsing
        return " & ".join(_wrap(c, _AND + 1) for c in f.children)
    if isinstance(f, Or):
        return " | ".join(_wrap(c, _OR + 1) for c in f.children)
    if isinstance(f, Implies):
        return f"{_wrap(f.lhs, _IMPLIES + 1)} -> {_wrap(f.rhs, _IMPLIES)}"
    if isinstance(f, Iff):
        return f"{_wrap(f.lhs, _IFF + 1)} <-> {_wrap(f.rhs, _IFF)}"
    raise TypeError(f"not a Formula: {f!r}")
