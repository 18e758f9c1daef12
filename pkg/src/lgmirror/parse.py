"""Recursive-descent parser for polynomial text.

Grammar::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := INT ['/' INT] | VAR ['^' INT] | '(' expr ')' ['^' INT]

Whitespace is ignored.  ``a/b`` literals and powers of parenthesised
groups go beyond the minimal grammar; they let every printed polynomial,
including ones with rational coefficients, parse back.
"""

from __future__ import annotations

import re

from .poly import Polynomial, PolynomialRing, UnknownVariableError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(.))")


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _tokenize(src: str):
    tokens = []
    pos = 0
    n = len(src)
    while pos < n:
        m = _TOKEN.match(src, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1) is not None:
            tokens.append(("INT", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("VAR", m.group(2), start))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*^()/":
                raise PolynomialSyntaxError(f"unexpected character {ch!r}", start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("EOF", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str, ring: PolynomialRing):
        self.ring = ring
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "EOF" else repr(tok[1])
            raise PolynomialSyntaxError(f"expected {kind}, found {what}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        if self.peek()[0] == "EOF":
            raise PolynomialSyntaxError("empty expression", 0)
        p = self.expr()
        tok = self.peek()
        if tok[0] != "EOF":
            raise PolynomialSyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return p

    def expr(self) -> Polynomial:
        negate = False
        if self.peek()[0] == "-":
            self.take()
            negate = True
        acc = self.term()
        if negate:
            acc = -acc
        while self.peek()[0] in "+-":
            op = self.take()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def _exponent(self) -> int:
        return int(self.take("INT")[1])

    def factor(self) -> Polynomial:
        kind, text, pos = self.peek()
        if kind == "INT":
            self.take()
            if self.peek()[0] == "/":
                self.take()
                den_tok = self.take("INT")
                if int(den_tok[1]) == 0:
                    raise PolynomialSyntaxError("zero denominator", den_tok[2])
                return self.ring.const(_fraction(text, den_tok[1]))
            return self.ring.const(int(text))
        if kind == "VAR":
            self.take()
            if text not in self.ring.registry:
                raise UnknownVariableError(f"unknown variable {text!r} at position {pos}")
            v = self.ring.var(text)
            if self.peek()[0] == "^":
                self.take()
                return v ** self._exponent()
            return v
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            if self.peek()[0] == "^":
                self.take()
                return inner ** self._exponent()
            return inner
        what = "end of input" if kind == "EOF" else repr(text)
        raise PolynomialSyntaxError(f"unexpected {what}", pos)


def _fraction(num: str, den: str):
    from fractions import Fraction
    return Fraction(int(num), int(den))


def parse_poly(src: str, ring: PolynomialRing) -> Polynomial:
    """Parse ``src`` into a polynomial of ``ring``."""
    return _Parser(src, ring).parse()
