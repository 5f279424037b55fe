"""Contraction patterns such as ``([2] x [2]) o [2]``.

Grammar (``x`` binds tighter than ``o``, both left-associative)::

    expr  := group ("o" group)*
    group := atom ("x" atom)*
    atom  := "[1]" | "[2]" | "(" expr ")"

``x`` is the contracted product (one slot, realised through the coproduct)
and ``o`` the uncontracted one (separate slots). ``[2]`` is the fundamental
and ``[1]`` the trivial representation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union


class ExpressionSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


@dataclass(frozen=True)
class Leaf:
    kind: str  # "FUND" or "TRIV"

    def __str__(self) -> str:
        return "[2]" if self.kind == "FUND" else "[1]"


@dataclass(frozen=True)
class Contract:
    left: Node
    right: Node

    def __str__(self) -> str:
        return f"{_wrap(self.left, (Outer,))} x {_wrap(self.right, (Outer, Contract))}"


@dataclass(frozen=True)
class Outer:
    left: Node
    right: Node

    def __str__(self) -> str:
        return f"{self.left} o {_wrap(self.right, (Outer,))}"


Node = Union[Leaf, Contract, Outer]


def _wrap(node: Node, kinds: tuple) -> str:
    return f"({node})" if isinstance(node, kinds) else str(node)


def groups(node: Node) -> list[Node]:
    """The uncontracted factors, left to right."""
    if isinstance(node, Outer):
        return groups(node.left) + groups(node.right)
    return [node]


def width(node: Node) -> int:
    if isinstance(node, Leaf):
        return 1 if node.kind == "FUND" else 0
    if isinstance(node, Outer):
        raise ValueError(f"uncontracted product inside a contracted one: {node}")
    return width(node.left) + width(node.right)


@dataclass(frozen=True)
class ProductExpression:
    root: Node
    text: str = ""

    @property
    def s(self) -> int:
        return len(groups(self.root))

    @property
    def widths(self) -> tuple[int, ...]:
        return tuple(width(g) for g in groups(self.root))

    def __str__(self) -> str:
        return str(self.root)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None) -> ExpressionSyntaxError:
        pos = self.pos if pos is None else pos
        return ExpressionSyntaxError(message, len(self.text[:pos].encode("utf-8")))

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expr(self) -> Node:
        node = self.group()
        while self.peek() in ("o", "⊗"):
            self.pos += 1
            node = Outer(node, self.group())
        return node

    def group(self) -> Node:
        node = self.atom()
        while self.peek() in ("x", "×"):
            self.pos += 1
            node = Contract(node, self.atom())
        return node

    def atom(self) -> Node:
        c = self.peek()
        if c == "(":
            self.pos += 1
            node = self.expr()
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.pos += 1
            return node
        if c == "[":
            self.pos += 1
            digit = self.peek()
            if digit not in ("1", "2"):
                raise self.error("expected '1' or '2' inside brackets")
            self.pos += 1
            if self.peek() != "]":
                raise self.error("expected ']'")
            self.pos += 1
            return Leaf("FUND" if digit == "2" else "TRIV")
        if not c:
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected character {c!r}")


def parse_expression(text: str) -> ProductExpression:
    p = _Parser(text)
    if not p.peek():
        raise p.error("empty expression")
    root = p.expr()
    if p.peek():
        raise p.error(f"unexpected trailing {p.peek()!r}")
    expr = ProductExpression(root, text)
    try:
        expr.widths
    except ValueError as exc:
        raise ExpressionSyntaxError(str(exc), 0) from None
    return expr
