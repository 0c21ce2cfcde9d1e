"""Polynomial expression parser and canonical printer.

Grammar (whitespace is insignificant, implicit multiplication is rejected)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' uint)?
    base   := var | rational | '(' expr ')' | ('+' | '-') factor

A rational literal is ``p`` or ``p/q`` with non-negative integers; signs are
handled by the unary rule.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra.numberfield import NFElement
from .algebra.poly import MultiPoly
from .errors import ParseError

FIBRE_VARS = ("x1", "x2", "x3", "y")
FIBRE_WEIGHTS = (1, 1, 1, 2)

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


@dataclass(frozen=True)
class Num:
    value: Fraction
    pos: int


@dataclass(frozen=True)
class Var:
    name: str
    pos: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: int


@dataclass(frozen=True)
class Neg:
    operand: object
    pos: int


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int
    pos: int


def _tokenize(text):
    toks = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            num = m.group(1)
            if "/" in num:
                p, q = num.split("/")
                if int(q) == 0:
                    raise ParseError("zero denominator", start)
            toks.append(("num", num, start))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2), start))
        else:
            toks.append(("op", m.group(3), start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text, variables):
        self.toks = _tokenize(text)
        self.i = 0
        self.variables = tuple(variables)

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value):
        t = self.take()
        if t[1] != value or t[0] != "op":
            raise ParseError(f"expected '{value}', found {_describe(t)}", t[2])
        return t

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        node = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ParseError(f"unexpected {_describe(t)}", t[2])
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            t = self.take()
            node = BinOp(t[1], node, self.term(), t[2])
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            t = self.take()
            node = BinOp("*", node, self.factor(), t[2])
        return node

    def factor(self):
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.take()
            inner = self.factor()
            return inner if t[1] == "+" else Neg(inner, t[2])
        base = self.base()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            caret = self.take()
            e = self.take()
            if e[0] == "op" and e[1] == "-":
                raise ParseError("negative exponent", e[2])
            if e[0] != "num":
                raise ParseError(f"exponent must be a non-negative integer, found {_describe(e)}", e[2])
            if "/" in e[1]:
                raise ParseError("fractional exponent", e[2])
            base = Pow(base, int(e[1]), caret[2])
        return base

    def base(self):
        t = self.take()
        if t[0] == "num":
            return Num(Fraction(t[1]), t[2])
        if t[0] == "name":
            if t[1] not in self.variables:
                raise ParseError(f"unknown variable '{t[1]}'", t[2])
            return Var(t[1], t[2])
        if t[0] == "op" and t[1] == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected {_describe(t)}", t[2])


def _describe(tok):
    if tok[0] == "end":
        return "end of input"
    return f"'{tok[1]}'"


def parse_expr(text: str, variables=FIBRE_VARS):
    """Parse ``text`` into an expression tree."""
    return _Parser(text, variables).parse()


def to_poly(node, names=FIBRE_VARS, weights=None) -> MultiPoly:
    if isinstance(node, Num):
        return MultiPoly.const(node.value, names, weights)
    if isinstance(node, Var):
        return MultiPoly.var(node.name, names, weights)
    if isinstance(node, Neg):
        return -to_poly(node.operand, names, weights)
    if isinstance(node, Pow):
        return to_poly(node.base, names, weights) ** node.exponent
    a = to_poly(node.left, names, weights)
    b = to_poly(node.right, names, weights)
    if node.op == "+":
        return a + b
    if node.op == "-":
        return a - b
    return a * b


def parse_poly(text: str, names=FIBRE_VARS, weights=None) -> MultiPoly:
    """Parse ``text`` into a polynomial over the given variables."""
    if weights is None and tuple(names) == FIBRE_VARS:
        weights = FIBRE_WEIGHTS
    return to_poly(parse_expr(text, names), tuple(names), weights)


def _coeff_str(c) -> str:
    if isinstance(c, NFElement):
        return f"({c})"
    return str(c)


def format_poly(f: MultiPoly) -> str:
    """Canonical text: terms in descending graded-lex order."""
    if not f.terms:
        return "0"
    out = []
    for e in sorted(f.terms, key=lambda e: (sum(e), e), reverse=True):
        c = f.terms[e]
        mono = "*".join(
            (n if a == 1 else f"{n}^{a}") for n, a in zip(f.names, e) if a)
        neg = not isinstance(c, NFElement) and c < 0
        mag = -c if neg else c
        if not mono:
            body = _coeff_str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_coeff_str(mag)}*{mono}"
        out.append((neg, body))
    s = ("-" if out[0][0] else "") + out[0][1]
    for neg, body in out[1:]:
        s += (" - " if neg else " + ") + body
    return s
