"""Parser for the operator text grammar used in reports, configs and the CLI.

Grammar (round-trips with OperatorPoly.render):

    expr     := ['-'] term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := atom ['^' integer]        (negative exponents for x only)
    atom     := rational | 'i' | 'g' | 'lam' | 't' | 'x'
              | 'f' | "f'" | "f''" | ... | 'f^(j)'
              | 'dt' | 'dx' | 'dy' | 'dz' | 'dw' | 'dx<k>'
              | '(' expr ')'

Multiplication is the noncommutative operator product, applied in written
order, so "x*dx" and "dx*x" parse to different operators.
"""

from __future__ import annotations

import re
from fractions import Fraction

from . import operators as op
from .operators import OperatorPoly

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<fder>f\^\(\d+\))|"
    r"(?P<name>[a-zA-Z]+\d*'*)|"
    r"(?P<num>\d+(?:/\d+)?)|"
    r"(?P<sym>[()^*+-])"
    r")"
)

_DX_NAMES = {"dx": 1, "dy": 2, "dz": 3, "dw": 4}


class ParseError(ValueError):
    """Unparseable operator expression."""


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r} at position {pos}")
        pos = m.end()
        if m.lastgroup == "fder":
            tokens.append(("fder", int(m.group("fder")[3:-1])))
        elif m.lastgroup == "name":
            tokens.append(("name", m.group("name")))
        elif m.lastgroup == "num":
            tokens.append(("num", Fraction(m.group("num"))))
        else:
            tokens.append(("sym", m.group("sym")))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect_sym(self, sym):
        kind, val = self.take()
        if kind != "sym" or val != sym:
            raise ParseError(f"expected {sym!r}, got {val!r}")

    def parse_expr(self) -> OperatorPoly:
        negate = False
        kind, val = self.peek()
        if kind == "sym" and val == "-":
            self.take()
            negate = True
        result = self.parse_term()
        if negate:
            result = -result
        while True:
            kind, val = self.peek()
            if kind == "sym" and val in "+-":
                self.take()
                term = self.parse_term()
                result = result + term if val == "+" else result - term
            else:
                return result

    def parse_term(self) -> OperatorPoly:
        result = self.parse_factor()
        while True:
            kind, val = self.peek()
            if kind == "sym" and val == "*":
                self.take()
                result = result * self.parse_factor()
            else:
                return result

    def parse_factor(self) -> OperatorPoly:
        kind, val = self.take()
        if kind == "num":
            return OperatorPoly.coerce(val)
        if kind == "sym" and val == "(":
            inner = self.parse_expr()
            self.expect_sym(")")
            return self._with_exponent_generic(inner)
        if kind == "fder":
            return self._atom_power(lambda p: op.f_sym(val, p), "f derivative")
        if kind == "name":
            return self._named_atom(val)
        raise ParseError(f"unexpected token {val!r}")

    def _exponent(self):
        kind, val = self.peek()
        if not (kind == "sym" and val == "^"):
            return None
        self.take()
        kind, val = self.take()
        neg = False
        if kind == "sym" and val == "-":
            neg = True
            kind, val = self.take()
        if kind != "num" or val.denominator != 1:
            raise ParseError("exponent must be an integer")
        return -val.numerator if neg else val.numerator

    def _atom_power(self, build, what) -> OperatorPoly:
        e = self._exponent()
        if e is None:
            return build(1)
        if e < 0:
            raise ParseError(f"negative power of {what} is not supported")
        return build(e)

    def _with_exponent_generic(self, p: OperatorPoly) -> OperatorPoly:
        e = self._exponent()
        if e is None:
            return p
        if e < 0:
            raise ParseError("negative powers of grouped expressions are not supported")
        return p ** e

    def _named_atom(self, name: str) -> OperatorPoly:
        if name == "i":
            return self._with_exponent_generic(op.i_const())
        if name == "g":
            return self._atom_power(op.g_sym, "g")
        if name == "lam":
            return self._atom_power(op.lam_sym, "lam")
        if name == "t":
            return self._atom_power(op.t_pow, "t")
        if name == "x":
            e = self._exponent()
            return op.x_pow(1 if e is None else e)
        if name == "dt":
            return self._atom_power(op.dt, "dt")
        if name in _DX_NAMES:
            direction = _DX_NAMES[name]
            return self._atom_power(lambda p: op.dx(direction, p), name)
        m = re.fullmatch(r"dx(\d+)", name)
        if m:
            direction = int(m.group(1))
            return self._atom_power(lambda p: op.dx(direction, p), name)
        m = re.fullmatch(r"(f)('*)", name)
        if m:
            j = len(m.group(2))
            return self._atom_power(lambda p: op.f_sym(j, p), "f")
        raise ParseError(f"unknown symbol {name!r}")


def parse_operator(text: str) -> OperatorPoly:
    """Parse an operator expression; raises ParseError on malformed input."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression")
    parser = _Parser(tokens)
    result = parser.parse_expr()
    if parser.pos != len(parser.tokens):
        raise ParseError(f"trailing input near token {parser.pos}")
    return result
