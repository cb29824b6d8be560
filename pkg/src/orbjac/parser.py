"""Polynomial expression input.

Grammar (standard precedence, ``^`` binds tighter than ``*`` and ``/``,
which bind tighter than ``+`` and ``-``; unary minus sits below ``^``)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := NUMBER | NAME | '(' expr ')'

Names are ring variables (``x``, ``y'``...), the cyclotomic generator ``w``
and formal parameters.  Division is only allowed by scalars.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .poly import PolyRing, Polynomial
from .scalars import PARAM_ORDER, CycloRational, FieldScalar, param

__all__ = [
    "ParseError",
    "ExprSyntaxError",
    "UnknownSymbolError",
    "Num",
    "Sym",
    "Neg",
    "BinOp",
    "Pow",
    "ExprAst",
    "parse_expr",
    "parse_polynomial",
    "parse_scalar",
]


class ParseError(ValueError):
    """Base class for expression input errors."""


class ExprSyntaxError(ParseError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


class UnknownSymbolError(ParseError):
    def __init__(self, name: str, legal: Sequence[str], line: int, column: int):
        super().__init__(
            f"unknown symbol {name!r} at line {line}, column {column}; legal symbols: {', '.join(legal)}"
        )
        self.name = name
        self.legal = tuple(legal)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str
    line: int = 1
    column: int = 1


@dataclass(frozen=True)
class Neg:
    operand: "ExprAst"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "ExprAst"
    right: "ExprAst"
    line: int = 1
    column: int = 1


@dataclass(frozen=True)
class Pow:
    base: "ExprAst"
    exponent: int


ExprAst = Union[Num, Sym, Neg, BinOp, Pow]

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<num>\d+(?:\.\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*'?)|(?P<op>[-+*/^()])"
)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    pos, line, col0 = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        col = pos - col0 + 1
        if m is None:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            col0 = m.end()
        elif kind != "ws":
            toks.append(_Tok(kind, m.group(), line, col))
        pos = m.end()
    toks.append(_Tok("end", "", line, len(text) - col0 + 1))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def _advance(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def _expect(self, text: str) -> _Tok:
        if self.tok.text != text:
            found = self.tok.text or "end of input"
            raise ExprSyntaxError(f"expected {text!r}, found {found!r}", self.tok.line, self.tok.column)
        return self._advance()

    def parse(self) -> ExprAst:
        node = self.expr()
        if self.tok.kind != "end":
            raise ExprSyntaxError(f"unexpected {self.tok.text!r}", self.tok.line, self.tok.column)
        return node

    def expr(self) -> ExprAst:
        node = self.term()
        while self.tok.text in ("+", "-"):
            t = self._advance()
            node = BinOp(t.text, node, self.term(), t.line, t.column)
        return node

    def term(self) -> ExprAst:
        node = self.unary()
        while self.tok.text in ("*", "/"):
            t = self._advance()
            node = BinOp(t.text, node, self.unary(), t.line, t.column)
        return node

    def unary(self) -> ExprAst:
        if self.tok.text == "-":
            self._advance()
            return Neg(self.unary())
        if self.tok.text == "+":
            self._advance()
            return self.unary()
        return self.power()

    def power(self) -> ExprAst:
        base = self.atom()
        if self.tok.text != "^":
            return base
        self._advance()
        t = self.tok
        if t.kind == "num" and "." not in t.text:
            self._advance()
            return Pow(base, int(t.text))
        if t.text == "(":
            inner = self.toks[self.i + 1]
            if inner.text == "-":
                raise ExprSyntaxError("negative exponent", inner.line, inner.column)
            if inner.kind == "num" and "." not in inner.text and self.toks[self.i + 2].text == ")":
                self.i += 3
                return Pow(base, int(inner.text))
        if t.text == "-":
            raise ExprSyntaxError("negative exponent", t.line, t.column)
        raise ExprSyntaxError("exponent must be a non-negative integer literal", t.line, t.column)

    def atom(self) -> ExprAst:
        t = self.tok
        if t.kind == "num":
            self._advance()
            return Num(Fraction(t.text))
        if t.kind == "name":
            self._advance()
            return Sym(t.text, t.line, t.column)
        if t.text == "(":
            self._advance()
            node = self.expr()
            self._expect(")")
            return node
        found = t.text or "end of input"
        raise ExprSyntaxError(f"unexpected {found!r}", t.line, t.column)


def parse_expr(text: str) -> ExprAst:
    return _Parser(text).parse()


def _legal(ring: PolyRing, params: Iterable[str]) -> list[str]:
    return list(ring.names) + ["w"] + list(params)


def evaluate(node: ExprAst, ring: PolyRing, params: Sequence[str] = PARAM_ORDER) -> Polynomial:
    params = tuple(params)
    names = set(ring.names)

    def ev(n: ExprAst) -> Polynomial:
        if isinstance(n, Num):
            return ring.constant(FieldScalar.from_cyclo(CycloRational.from_rational(n.value)))
        if isinstance(n, Sym):
            if n.name in names:
                return ring.var(ring.index(n.name))
            if n.name == "w":
                return ring.constant(FieldScalar.from_cyclo(CycloRational.w(1)))
            if n.name in params:
                return ring.constant(param(n.name))
            raise UnknownSymbolError(n.name, _legal(ring, params), n.line, n.column)
        if isinstance(n, Neg):
            return -ev(n.operand)
        if isinstance(n, Pow):
            return ev(n.base) ** n.exponent
        left, right = ev(n.left), ev(n.right)
        if n.op == "+":
            return left + right
        if n.op == "-":
            return left - right
        if n.op == "*":
            return left * right
        if not right.is_constant():
            raise ExprSyntaxError("division is only allowed by scalars", n.line, n.column)
        if right.is_zero():
            raise ExprSyntaxError("division by zero", n.line, n.column)
        return left.scale(FieldScalar.one() / right.constant_term())

    return ev(node)


def parse_polynomial(text: str, ring: PolyRing | None = None, params: Sequence[str] = PARAM_ORDER) -> Polynomial:
    ring = ring or PolyRing()
    return evaluate(parse_expr(text), ring, params)


def parse_scalar(text: str, params: Sequence[str] = PARAM_ORDER) -> FieldScalar:
    ring = PolyRing()
    p = evaluate(parse_expr(text), ring, params)
    if not p.is_constant():
        raise ParseError(f"expected a scalar, got a polynomial in the variables: {text!r}")
    return p.constant_term()
