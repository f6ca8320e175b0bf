"""Text grammar for polynomials.

Terms are separated by + and -; a term is a coefficient, coeff*monomial or
a bare monomial; monomials are var(^exp)? factors joined by *.  Coefficients
are integers or a/b rationals; parenthesized subexpressions may be raised to
integer powers.  The printer in MultiPoly.format round-trips through this
grammar up to term order.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import QQ
from .poly import MultiPoly


class PolyParseError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


_OPS = set("+-*^/()")


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _OPS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        raise PolyParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, var_names, field):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.n = len(var_names)
        self.vars = {name: i for i, name in enumerate(var_names)}
        self.field = field

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise PolyParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self):
        poly = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise PolyParseError(f"unexpected {tok[1]!r}", tok[2])
        return poly

    def expr(self):
        sign = 1
        tok = self.peek()
        if tok[0] in "+-":
            self.next()
            sign = -1 if tok[0] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while True:
            tok = self.peek()
            if tok[0] == "+":
                self.next()
                acc = acc + self.term()
            elif tok[0] == "-":
                self.next()
                acc = acc - self.term()
            else:
                return acc

    def term(self):
        acc = self.factor()
        while self.peek()[0] == "*":
            self.next()
            acc = acc * self.factor()
        return acc

    def factor(self):
        base = self.base()
        if self.peek()[0] == "^":
            self.next()
            tok = self.expect("int")
            return base ** tok[1]
        return base

    def base(self):
        tok = self.next()
        kind, value, pos = tok
        if kind == "int":
            if self.peek()[0] == "/":
                self.next()
                den = self.expect("int")
                if den[1] == 0:
                    raise PolyParseError("zero denominator", den[2])
                coeff = self.field.of(Fraction(value, den[1]))
            else:
                coeff = self.field.of(value)
            return MultiPoly(self.n, {(0,) * self.n: coeff}, self.field)
        if kind == "name":
            idx = self.vars.get(value)
            if idx is None:
                raise PolyParseError(f"unknown variable {value!r}", pos)
            return MultiPoly.variable(idx, self.n, self.field)
        if kind == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "/":
            raise PolyParseError(
                "'/' is only allowed inside a rational coefficient", pos)
        raise PolyParseError(f"unexpected {value!r}", pos)


def parse_poly(text: str, var_names, field=QQ) -> MultiPoly:
    """Parse a polynomial over the given variables."""
    return _Parser(text, list(var_names), field).parse()


def parse_poly_list(text: str, var_names, field=QQ):
    """Comma-separated list of polynomials."""
    return [parse_poly(part, var_names, field)
            for part in text.split(",") if part.strip()]
