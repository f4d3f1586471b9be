"""Parser for the polynomial expression grammar.

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INTEGER)?
    atom   := INTEGER ('/' INTEGER)? | IDENT | '(' expr ')'

Identifiers must come from the declared variable list. Juxtaposition
(``2X``, ``X Y``) is rejected; whitespace is otherwise insignificant.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .errors import ParseError
from .poly import Polynomial

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^/()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[bad]!r}", text, bad)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.text = text
        self.variables = tuple(variables)
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, self.text, tok[2])

    def expect_op(self, op: str):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            self.fail(f"expected {op!r}, found {what}", tok)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.fail("empty expression")
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            if tok[0] in ("num", "ident") or tok[1] == "(":
                self.fail("juxtaposition is not allowed; use '*'")
            self.fail(f"unexpected {tok[1]!r}")
        return value

    def expr(self) -> Polynomial:
        value = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Polynomial:
        value = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            value = value * self.unary()
        return value

    def unary(self) -> Polynomial:
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            value = self.unary()
            return -value if tok[1] == "-" else value
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "num":
                what = "end of input" if tok[0] == "end" else repr(tok[1])
                self.fail(f"exponent must be a non-negative integer literal, found {what}", tok)
            base = base ** int(tok[1])
            if self.peek()[0] == "op" and self.peek()[1] == "^":
                self.fail("chained '^' is ambiguous; use parentheses")
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            c = Fraction(int(val))
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                den = self.take()
                if den[0] != "num":
                    self.fail("'/' is only allowed between integer literals", den)
                if int(den[1]) == 0:
                    self.fail("zero denominator", den)
                c = Fraction(int(val), int(den[1]))
            return Polynomial.constant(c, self.variables)
        if kind == "ident":
            if val not in self.variables:
                self.fail(f"unknown variable {val!r} (declared: {', '.join(self.variables)})", tok)
            return Polynomial.variable(val, self.variables)
        if kind == "op" and val == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        what = "end of input" if kind == "end" else repr(val)
        self.fail(f"expected a number, variable or '(', found {what}", tok)


def parse_polynomial(text: str, variables: Sequence[str] = ("X", "Y", "Z")) -> Polynomial:
    """Parse ``text`` into a :class:`Polynomial` over ``variables``."""
    return _Parser(text, variables).parse()
