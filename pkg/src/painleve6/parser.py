"""Recursive-descent parser for the formula grammar used in the catalog.

Grammar (no implicit multiplication)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := INT | SYMBOL | '(' expr ')'

Symbols: ``s``, ``t``, ``t1``, ``t2``, ``i`` plus any extra names the caller
declares (family parameters ``a``, ``b`` or the space-curve coordinates).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

MAX_EXPONENT = 4096
DEFAULT_SYMBOLS = frozenset({"s", "t", "t1", "t2", "i"})


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        super().__init__(f"{message} at offset {pos}")
        self.pos = pos
        self.text = text


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


def _tokenize(text: str):
    pos, n = 0, len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif ch.isdigit():
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            yield ("int", text[start:pos], start)
        elif ch.isalpha() or ch == "_":
            start = pos
            while pos < n and (text[pos].isalnum() or text[pos] == "_"):
                pos += 1
            yield ("sym", text[start:pos], start)
        elif ch in "+-*/^()":
            yield (ch, ch, pos)
            pos += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", pos, text)
    yield ("end", "", n)


class _Parser:
    def __init__(self, text: str, symbols):
        self.text = text
        self.symbols = symbols
        self.toks = list(_tokenize(text))
        self.k = 0

    def peek(self):
        return self.toks[self.k]

    def take(self, kind=None):
        tok = self.toks[self.k]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", tok[2], self.text)
        self.k += 1
        return tok

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2], self.text)
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek()[0] in ("*", "/"):
            op = self.take()[0]
            node = BinOp(op, node, self.unary())
        return node

    def unary(self):
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return Neg(self.unary())
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "int":
                what = "end of input" if tok[0] == "end" else repr(tok[1])
                raise ParseError(f"exponent must be a nonnegative integer, found {what}", tok[2], self.text)
            self.take()
            e = int(tok[1])
            if e > MAX_EXPONENT:
                raise ParseError(f"exponent {e} exceeds {MAX_EXPONENT}", tok[2], self.text)
            return Pow(base, e)
        return base

    def atom(self):
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            return Num(int(tok[1]))
        if tok[0] == "sym":
            if tok[1] not in self.symbols:
                raise ParseError(f"unknown symbol {tok[1]!r}", tok[2], self.text)
            self.take()
            return Sym(tok[1])
        if tok[0] == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        what = "end of input" if tok[0] == "end" else repr(tok[1])
        raise ParseError(f"unexpected {what}", tok[2], self.text)


def parse_tree(text: str, extra_symbols=()):
    if not text.strip():
        raise ParseError("empty expression", 0, text)
    return _Parser(text, DEFAULT_SYMBOLS | frozenset(extra_symbols)).parse()


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def to_text(node, parent: int = 0, right: bool = False) -> str:
    """Print an AST so that ``parse_tree(to_text(n)) == n``."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Neg):
        inner = to_text(node.arg, 3)
        out = "-" + inner
        return f"({out})" if parent >= 1 else out
    if isinstance(node, Pow):
        base = to_text(node.base, 4)
        if isinstance(node.base, Pow):
            base = f"({base})"
        return f"{base}^{node.exp}"
    if isinstance(node, BinOp):
        p = _PREC[node.op]
        out = f"{to_text(node.left, p)}{node.op}{to_text(node.right, p, True)}"
        if p < parent or (p == parent and right):
            return f"({out})"
        return out
    raise TypeError(node)


def evaluate(node, env: Mapping[str, object], const: Callable[[int], object]):
    """Fold an AST with values from ``env``; integers go through ``const``."""
    if isinstance(node, Num):
        return const(node.value)
    if isinstance(node, Sym):
        return env[node.name]
    if isinstance(node, Neg):
        return -evaluate(node.arg, env, const)
    if isinstance(node, Pow):
        return evaluate(node.base, env, const) ** node.exp
    left = evaluate(node.left, env, const)
    right = evaluate(node.right, env, const)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    return left / right


def parse_expr(text: str, rad=None, extra: Mapping[str, object] | None = None):
    """Parse ``text`` into an exact value.

    With ``rad=None`` the result is a :class:`RatFun` in ``s``; given a
    :class:`RadicalSet` it is an :class:`FFElem` over it (``t`` aliases ``t1``).
    """
    from .funcfield import FFElem
    from .ratfun import RatFun
    from .scalars import I

    extra = dict(extra or {})
    tree = parse_tree(text, extra.keys())
    if rad is None:
        env = {"s": RatFun.gen(), "i": RatFun.const(I)}
        const = RatFun.const
        if _uses(tree, {"t", "t1", "t2"}):
            raise ParseError("radical symbol used without a radical set", 0, text)
    else:
        env = {"s": FFElem.s(rad), "i": FFElem.const(rad, I)}
        if rad.count >= 1:
            env["t"] = env["t1"] = FFElem.t1(rad)
        if rad.count == 2:
            env["t2"] = FFElem.t2(rad)
        missing = {"t", "t1", "t2"} - env.keys()
        if _uses(tree, missing):
            raise ParseError(f"radical symbol used but only {rad.count} radical(s) defined", 0, text)

        def const(v):
            return FFElem.const(rad, v)

    env.update(extra)
    return evaluate(tree, env, const)


def _uses(node, names) -> bool:
    if isinstance(node, Sym):
        return node.name in names
    if isinstance(node, Num):
        return False
    if isinstance(node, Neg):
        return _uses(node.arg, names)
    if isinstance(node, Pow):
        return _uses(node.base, names)
    return _uses(node.left, names) or _uses(node.right, names)
