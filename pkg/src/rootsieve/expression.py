"""Parser and printer for single-variable math expressions.

Grammar (lowest to highest precedence)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' unary)?          # right-associative
    atom   := NUMBER | 'x' | 'pi' | FUNC '(' expr ')' | '(' expr ')'

``FUNC`` is one of sin cos tan exp log sqrt abs.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Union

from . import hyperdual as hd


class ParseError(ValueError):
    """Syntax error at a byte offset of the source text."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class UnknownIdentifierError(ParseError):
    pass


# -- tree ------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Const:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Node"


Node = Union[Num, Var, Const, Neg, BinOp, Call]

CONSTANTS = {"pi": math.pi}

# -- tokenizer -------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*/^()]))"
)


@dataclass
class _Tok:
    kind: str  # 'num', 'name', 'op', 'end'
    text: str
    offset: int


def tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        toks.append(_Tok(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    toks.append(_Tok("end", "", n))
    return toks


# -- parser ----------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def advance(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str):
        if self.tok.text != text or self.tok.kind != "op":
            found = self.tok.text or "end of input"
            raise ParseError(f"expected {text!r}, found {found!r}", self.tok.offset)
        self.advance()

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.offset)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op = self.advance().text
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Node:
        if self.tok.kind == "op" and self.tok.text == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.advance()
            return BinOp("^", base, self.unary())
        return base

    def atom(self) -> Node:
        t = self.tok
        if t.kind == "num":
            self.advance()
            return Num(float(t.text))
        if t.kind == "name":
            self.advance()
            if t.text == "x":
                return Var()
            if t.text in CONSTANTS:
                return Const(t.text)
            if t.text in hd.FUNCTIONS:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Call(t.text, arg)
            raise UnknownIdentifierError(f"unknown identifier {t.text!r}", t.offset)
        if t.kind == "op" and t.text == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        found = t.text or "end of input"
        raise ParseError(f"unexpected {found!r}", t.offset)


def parse_expression(text: str) -> Node:
    """Parse ``text`` into an expression tree.

    Raises ParseError (with ``.offset``) on malformed input and
    UnknownIdentifierError for names outside the grammar.
    """
    return _Parser(text).parse()


# -- printing --------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2, "^": 4}
_NEG_PREC = 3
_ATOM_PREC = 5


def _prec(node: Node) -> int:
    if isinstance(node, BinOp):
        return _PREC[node.op]
    if isinstance(node, Neg):
        return _NEG_PREC
    return _ATOM_PREC


def _wrap(node: Node, min_prec: int) -> str:
    s = format_expression(node)
    return f"({s})" if _prec(node) < min_prec else s


def format_expression(node: Node) -> str:
    """Render a tree with the fewest parentheses that re-parse to the same tree."""
    if isinstance(node, Num):
        return repr(node.value)
    if isinstance(node, Var):
        return "x"
    if isinstance(node, Const):
        return node.name
    if isinstance(node, Call):
        return f"{node.func}({format_expression(node.arg)})"
    if isinstance(node, Neg):
        return "-" + _wrap(node.arg, _NEG_PREC)
    p = _PREC[node.op]
    if node.op == "^":
        return f"{_wrap(node.left, _ATOM_PREC)}^{_wrap(node.right, _NEG_PREC)}"
    # left-associative: the right operand must bind strictly tighter
    return f"{_wrap(node.left, p)} {node.op} {_wrap(node.right, p + 1)}"


# -- evaluation ------------------------------------------------------------

def evaluate(node: Node, x):
    """Evaluate the tree at ``x`` (a HyperDual; floats are promoted).

    Domain errors propagate as the usual ``math`` exceptions.
    """
    if not isinstance(x, hd.HyperDual):
        x = hd.HyperDual(float(x))
    return _eval(node, x)


def _eval(node: Node, x: hd.HyperDual) -> hd.HyperDual:
    if isinstance(node, Num):
        return hd.HyperDual(node.value)
    if isinstance(node, Var):
        return x
    if isinstance(node, Const):
        return hd.HyperDual(CONSTANTS[node.name])
    if isinstance(node, Neg):
        return -_eval(node.arg, x)
    if isinstance(node, Call):
        return hd.FUNCTIONS[node.func](_eval(node.arg, x))
    a = _eval(node.left, x)
    b = _eval(node.right, x)
    if node.op == "+":
        return a + b
    if node.op == "-":
        return a - b
    if node.op == "*":
        return a * b
    if node.op == "/":
        return a / b
    return a ** b
