"""Polynomial text grammar: parser and canonical printer.

Grammar: variables x0..x3 with aliases x,y,z,w; integer or rational
coefficients; + - * ^ and parentheses; implicit multiplication by
juxtaposition (2x^3y); whitespace-insensitive. Errors carry line/column.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .poly import Poly

ALIASES = {"x0": 0, "x1": 1, "x2": 2, "x3": 3, "x": 0, "y": 1, "z": 2, "w": 3}


class _Lexer:
    def __init__(self, text):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def _advance(self, n):
        for ch in self.text[self.pos:self.pos + n]:
            if ch == "\n":
                self.line += 1
                self.col = 1
            else:
                self.col += 1
        self.pos += n

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self._advance(1)

    def peek(self):
        self.skip_ws()
        if self.pos >= len(self.text):
            return None
        return self.text[self.pos]

    def error(self, expected):
        got = self.peek()
        what = f"unexpected {got!r}" if got else "unexpected end of input"
        raise ParseError(
            f"{what}, expected {expected}", self.line, self.col, expected
        )

    def take_char(self, ch):
        if self.peek() == ch:
            self._advance(1)
            return True
        return False

    def take_number(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self._advance(1)
        if self.pos == start:
            return None
        num = int(self.text[start:self.pos])
        # rational coefficient p/q
        save = (self.pos, self.line, self.col)
        if self.take_char("/"):
            dstart = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self._advance(1)
            if self.pos == dstart:
                self.pos, self.line, self.col = save
                return Fraction(num)
            den = int(self.text[dstart:self.pos])
            if den == 0:
                raise ParseError("zero denominator", self.line, self.col)
            return Fraction(num, den)
        return Fraction(num)

    def take_variable(self):
        self.skip_ws()
        rest = self.text[self.pos:]
        for name in ("x0", "x1", "x2", "x3"):
            if rest.startswith(name):
                self._advance(2)
                return ALIASES[name]
        if rest[:1] in ("x", "y", "z", "w"):
            idx = ALIASES[rest[0]]
            self._advance(1)
            return idx
        return None


def _parse_exponent(lx):
    if not lx.take_char("^"):
        return 1
    n = lx.take_number()
    if n is None or n.denominator != 1:
        lx.error("integer exponent")
    if n < 0:
        lx.error("non-negative exponent")
    return int(n)


def _parse_factor(lx):
    n = lx.take_number()
    if n is not None:
        return Poly.constant(n)
    v = lx.take_variable()
    if v is not None:
        e = _parse_exponent(lx)
        m = [0, 0, 0, 0]
        m[v] = e
        return Poly.monomial(tuple(m))
    if lx.take_char("("):
        p = _parse_expr(lx)
        if not lx.take_char(")"):
            lx.error("')'")
        e = _parse_exponent(lx) if lx.peek() == "^" else 1
        return p ** e
    lx.error("number, variable, or '('")


def _starts_factor(lx):
    ch = lx.peek()
    if ch is None:
        return False
    return ch.isdigit() or ch in "xyzw("


def _parse_term(lx):
    p = _parse_factor(lx)
    while True:
        if lx.take_char("*"):
            p = p * _parse_factor(lx)
        elif _starts_factor(lx):
            p = p * _parse_factor(lx)
        else:
            return p


def _take_signs(lx):
    sign = 1
    saw = False
    while True:
        if lx.take_char("+"):
            saw = True
        elif lx.take_char("-"):
            sign = -sign
            saw = True
        else:
            return sign, saw


def _parse_expr(lx):
    sign, _ = _take_signs(lx)
    p = sign * _parse_term(lx)
    while True:
        ch = lx.peek()
        if ch in ("+", "-"):
            sign, _ = _take_signs(lx)
            p = p + sign * _parse_term(lx)
        else:
            return p


def parse_poly(text):
    """Parse polynomial text into a Poly. Raises ParseError on bad input."""
    lx = _Lexer(text)
    if lx.peek() is None:
        raise ParseError("empty polynomial", lx.line, lx.col)
    p = _parse_expr(lx)
    if lx.peek() is not None:
        lx.error("operator or end of input")
    return p


def _format_monomial(m):
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def format_poly(p):
    """Canonical printing: terms descending under the global order."""
    if p.is_zero():
        return "0"
    chunks = []
    for m, c in p.sorted_terms():
        mon = _format_monomial(m)
        if not mon:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mon
        else:
            body = f"{abs(c)}*{mon}"
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(chunks)
