"""Integrand expressions in one variable ``x``.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | power
    power  := atom ('^' factor)?
    atom   := NUMBER | 'x' | IDENT '(' expr ')' | '(' expr ')'

so ``^`` binds tighter than unary minus (``-x^2 == -(x^2)``) and is
right-associative (``2^3^2 == 2^(3^2)``).

Nodes are frozen dataclasses and compare structurally.  Evaluation accepts
scalars or numpy arrays.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

import numpy as np
from numpy.polynomial import Polynomial

FUNCTIONS = {
    "sin": np.sin,
    "cos": np.cos,
    "exp": np.exp,
    "sqrt": np.sqrt,
    "abs": np.abs,
}
VARIABLE = "x"


class ParseError(ValueError):
    """Base class for expression parse failures."""


class ExpressionSyntaxError(ParseError):
    def __init__(self, offset: int, expected: frozenset[str] | set[str], found: str):
        self.offset = offset
        self.expected = frozenset(expected)
        self.found = found
        want = ", ".join(sorted(self.expected))
        super().__init__(f"syntax error at offset {offset}: expected one of {{{want}}}, found {found}")


class UnknownFunction(ParseError):
    def __init__(self, name: str, offset: int):
        self.name = name
        self.offset = offset
        super().__init__(f"unknown function {name!r} at offset {offset}")


class UnknownVariable(ParseError):
    def __init__(self, name: str, offset: int):
        self.name = name
        self.offset = offset
        super().__init__(f"unknown variable {name!r} at offset {offset} (only 'x' is allowed)")


class EvaluationError(ArithmeticError):
    """Raised when an expression is undefined at some sample point."""


# --------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    name: str = VARIABLE


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Expr"


Expr = Union[Num, Var, Neg, BinOp, Call]

_BINARY = {
    "+": np.add,
    "-": np.subtract,
    "*": np.multiply,
    "/": np.divide,
    "^": np.power,
}


def _eval(node: Expr, x):
    if isinstance(node, Num):
        return np.full_like(x, node.value, dtype=float) if np.ndim(x) else np.float64(node.value)
    if isinstance(node, Var):
        return np.asarray(x, dtype=float) if np.ndim(x) else np.float64(x)
    if isinstance(node, Neg):
        return -_eval(node.operand, x)
    if isinstance(node, BinOp):
        return _BINARY[node.op](_eval(node.left, x), _eval(node.right, x))
    if isinstance(node, Call):
        return FUNCTIONS[node.func](_eval(node.arg, x))
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(node: Expr, x):
    """Evaluate ``node`` at ``x`` (float or array).

    Division by zero, square roots of negatives, non-real powers and
    overflow raise :class:`EvaluationError` instead of yielding inf/nan.
    """
    with np.errstate(divide="raise", invalid="raise", over="raise", under="ignore"):
        try:
            out = _eval(node, x)
        except FloatingPointError as exc:
            raise EvaluationError(f"{to_source(node)} is undefined at a sample point: {exc}") from None
    if np.ndim(out) == 0:
        return float(out)
    return out


# --------------------------------------------------------------------------
# Tokenizer and parser

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str  # "number", "ident", "op", "end"
    text: str
    offset: int  # byte offset into the UTF-8 source


def _tokenize(source: str) -> list[_Token]:
    tokens = []
    pos = 0
    byte_pos = 0
    while pos < len(source):
        m = _TOKEN.match(source, pos)
        if m is None:
            raise ExpressionSyntaxError(byte_pos, {"number", "x", "function", "(", "-"}, repr(source[pos]))
        text = m.group()
        if m.lastgroup != "ws":
            tokens.append(_Token(m.lastgroup, text, byte_pos))
        pos = m.end()
        byte_pos += len(text.encode("utf-8"))
    tokens.append(_Token("end", "", byte_pos))
    return tokens


_ATOM_START = frozenset({"number", "x", "function", "("})


class _Parser:
    def __init__(self, source: str):
        self.tokens = _tokenize(source)
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def _fail(self, expected):
        tok = self.tok
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ExpressionSyntaxError(tok.offset, expected, found)

    def _accept(self, text: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def parse(self) -> Expr:
        node = self.expr()
        if self.tok.kind != "end":
            self._fail({"+", "-", "*", "/", "^", "end of input"})
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.tok.text
            self.i += 1
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op = self.tok.text
            self.i += 1
            node = BinOp(op, node, self.factor())
        return node

    def factor(self) -> Expr:
        if self._accept("-"):
            return Neg(self.factor())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self._accept("^"):
            return BinOp("^", base, self.factor())
        return base

    def atom(self) -> Expr:
        tok = self.tok
        if tok.kind == "number":
            self.i += 1
            return Num(float(tok.text))
        if tok.kind == "ident":
            self.i += 1
            is_call = self.tok.kind == "op" and self.tok.text == "("
            if is_call:
                if tok.text not in FUNCTIONS:
                    raise UnknownFunction(tok.text, tok.offset)
                self.i += 1
                arg = self.expr()
                if not self._accept(")"):
                    self._fail({")", "+", "-", "*", "/", "^"})
                return Call(tok.text, arg)
            if tok.text != VARIABLE:
                raise UnknownVariable(tok.text, tok.offset)
            return Var()
        if self._accept("("):
            node = self.expr()
            if not self._accept(")"):
                self._fail({")", "+", "-", "*", "/", "^"})
            return node
        self._fail(_ATOM_START | {"-"})


def parse_expression(source: str) -> Expr:
    """Parse ``source`` into an expression tree.

    >>> evaluate(parse_expression("2^3^2"), 0.0)
    512.0
    """
    if not source or not source.strip():
        raise ExpressionSyntaxError(len(source.encode("utf-8")), _ATOM_START | {"-"}, "end of input")
    return _Parser(source).parse()


# --------------------------------------------------------------------------
# Printing

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}
_NEG_PREC = 3
_POW_PREC = 4
_ATOM_PREC = 5


def _prec(node: Expr) -> int:
    if isinstance(node, BinOp):
        return _POW_PREC if node.op == "^" else _PREC[node.op]
    if isinstance(node, Neg):
        return _NEG_PREC
    return _ATOM_PREC


def _format_number(value: float) -> str:
    if value.is_integer() and abs(value) < 1e15:
        return str(int(value))
    return repr(value)


def _wrap(node: Expr, parens: bool) -> str:
    text = to_source(node)
    return f"({text})" if parens else text


def to_source(node: Expr) -> str:
    """Pretty-print with the minimal parentheses that re-parse to the same tree."""
    if isinstance(node, Num):
        return _format_number(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Call):
        return f"{node.func}({to_source(node.arg)})"
    if isinstance(node, Neg):
        return "-" + _wrap(node.operand, _prec(node.operand) < _NEG_PREC)
    if isinstance(node, BinOp):
        if node.op == "^":
            left = _wrap(node.left, _prec(node.left) < _ATOM_PREC)
            right = _wrap(node.right, _prec(node.right) < _NEG_PREC)
            return f"{left}^{right}"
        p = _PREC[node.op]
        left = _wrap(node.left, _prec(node.left) < p)
        right = _wrap(node.right, _prec(node.right) <= p)
        return f"{left} {node.op} {right}"
    raise TypeError(f"not an expression node: {node!r}")


# --------------------------------------------------------------------------
# Polynomial recognition


def to_polynomial(node: Expr) -> Polynomial | None:
    """Return ``node`` as a numpy Polynomial in x, or None if it is not one.

    Recognized: literals, ``x``, negation, ``+ - *``, division by a constant
    and ``^`` with a non-negative integer constant exponent.
    """
    poly = _to_poly(node)
    return None if poly is None else poly.trim()


def _to_poly(node: Expr) -> Polynomial | None:
    if isinstance(node, Num):
        return Polynomial([node.value])
    if isinstance(node, Var):
        return Polynomial([0.0, 1.0])
    if isinstance(node, Neg):
        inner = _to_poly(node.operand)
        return None if inner is None else -inner
    if isinstance(node, Call):
        return None
    left = _to_poly(node.left)
    right = _to_poly(node.right)
    if left is None or right is None:
        return None
    left, right = left.trim(), right.trim()
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if node.op == "/":
        if right.degree() > 0 or right.coef[0] == 0:
            return None
        return left / right.coef[0]
    # "^": exponent must be a constant non-negative integer
    if right.degree() > 0:
        return None
    k = right.coef[0]
    if k < 0 or not float(k).is_integer() or k > 64:
        return None
    return left ** int(k)


def as_expression(f) -> Expr:
    """Coerce a string or a number to an expression tree."""
    if isinstance(f, (Num, Var, Neg, BinOp, Call)):
        return f
    if isinstance(f, str):
        return parse_expression(f)
    if isinstance(f, (int, float)):
        value = float(f)
        return Neg(Num(-value)) if value < 0 else Num(value)
    raise TypeError(f"cannot interpret {f!r} as an integrand")
