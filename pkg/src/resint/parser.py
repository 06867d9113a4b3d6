"""Recursive-descent parser for polynomial expressions.

Grammar:

    expr   := ['-'|'+'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := NUMBER | VAR ('^' INT)? | '(' expr ')'
    VAR    := [A-Za-z_][A-Za-z0-9_]*
    INT    := [0-9]+

Whitespace is insignificant.  NUMBER extends INT with an optional '/INT'
denominator so that printed monic Groebner elements round-trip.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Polynomial, PolyError, UnknownVariableError


class ParseError(PolyError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NegativeExponentError(ParseError):
    pass


_OPS = set("+-*^()/")


def _tokenize(source):
    tokens = []
    i, n = 0, len(source)
    while i < n:
        ch = source[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _OPS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and source[j].isdigit():
                j += 1
            tokens.append(("int", source[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            tokens.append(("name", source[i:j], i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, source, ring):
        self.tokens = _tokenize(source)
        self.pos = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.advance()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self):
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected trailing {tok[1]!r}", tok[2])
        return p

    def expr(self):
        sign = 1
        if self.peek()[0] in ("+", "-"):
            if self.advance()[0] == "-":
                sign = -1
        p = self.term()
        if sign < 0:
            p = -p
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.factor()
        while self.peek()[0] == "*":
            self.advance()
            p = p * self.factor()
        return p

    def factor(self):
        tok = self.advance()
        kind, text, at = tok
        if kind == "int":
            value = Fraction(int(text))
            if self.peek()[0] == "/":
                self.advance()
                den = self.expect("int")
                value = value / int(den[1])
            return self.ring.constant(value)
        if kind == "name":
            try:
                p = self.ring.var(text)
            except UnknownVariableError:
                raise UnknownVariableError(
                    f"unknown variable {text!r} (at position {at})"
                ) from None
            if self.peek()[0] == "^":
                self.advance()
                nxt = self.peek()
                if nxt[0] == "-":
                    raise NegativeExponentError("negative exponent", nxt[2])
                e = self.expect("int")
                p = p ** int(e[1])
            return p
        if kind == "(":
            p = self.expr()
            self.expect(")")
            return p
        raise ParseError(f"expected a factor, found {text!r}", at)


def parse_poly(source, ring) -> Polynomial:
    """Parse `source` into the canonical Polynomial of `ring`."""
    return _Parser(source, ring).parse()
