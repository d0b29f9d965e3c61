"""Element grammar shared by the CLI, the catalog and the tests.

    expr    := term (("+" | "-") term)*
    term    := ["-"] factor (["*"] factor)*
    factor  := atom ["^" ["-"] INT]
    atom    := INT ["/" INT] | "z" | NAME | "x"INT | "g"INT | "[" word "]" | "(" expr ")"
    word    := ("x"INT ["^" INT])+

Parsing yields an AST; ``evaluate`` folds it with a builder so the same
source can become a SmashElement, a coproduct, or a plain scalar.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ExpressionSyntaxError, NotLyndonInBrackets
from .scalars import CycloNumber, ParamScalar

__all__ = ["Node", "parse", "evaluate", "parse_scalar", "parse_element", "SmashBuilder"]

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()\[\]]))"
)


@dataclass(frozen=True)
class Node:
    kind: str
    args: tuple
    pos: int


def _tokenize(src):
    out = []
    i = 0
    while i < len(src):
        if src[i].isspace():
            i += 1
            continue
        m = _TOKEN.match(src, i)
        if not m or m.end() == i:
            raise ExpressionSyntaxError(f"unexpected character {src[i]!r}", i)
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), start))
        i = m.end()
    out.append(("end", "", len(src)))
    return out


_LETTERS = re.compile(r"^(?:x\d+)+$")


class _Parser:
    def __init__(self, src):
        self.src = src
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value):
        t = self.take()
        if t[1] != value:
            raise ExpressionSyntaxError(f"expected {value!r}, found {t[1] or 'end of input'!r}", t[2])
        return t

    def parse(self):
        node = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ExpressionSyntaxError(f"unexpected {t[1]!r}", t[2])
        return node

    def expr(self):
        pos = self.peek()[2]
        items = []
        sign = 1
        t = self.peek()
        if t[1] in "+-" and t[0] == "op":
            self.take()
            sign = -1 if t[1] == "-" else 1
        items.append((sign, self.term()))
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in ("+", "-"):
                self.take()
                items.append((-1 if t[1] == "-" else 1, self.term()))
            else:
                break
        if len(items) == 1 and items[0][0] == 1:
            return items[0][1]
        return Node("add", tuple(items), pos)

    def _starts_factor(self, t):
        return t[0] in ("num", "name") or (t[0] == "op" and t[1] in ("(", "["))

    def term(self):
        pos = self.peek()[2]
        factors = [self.factor()]
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] == "*":
                self.take()
                factors.append(self.factor())
            elif self._starts_factor(t):
                factors.append(self.factor())
            else:
                break
        return factors[0] if len(factors) == 1 else Node("mul", tuple(factors), pos)

    def _int_exponent(self):
        t = self.take()
        neg = False
        if t[0] == "op" and t[1] == "(":
            inner = self._int_exponent()
            self.expect(")")
            return inner
        if t[0] == "op" and t[1] == "-":
            neg = True
            t = self.take()
        if t[0] != "num":
            raise ExpressionSyntaxError("exponent must be an integer", t[2])
        return -int(t[1]) if neg else int(t[1])

    def factor(self):
        base = self.atom()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.take()
            n = self._int_exponent()
            return Node("pow", (base, n), base.pos)
        return base

    def atom(self):
        t = self.take()
        kind, val, pos = t
        if kind == "num":
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "/":
                self.take()
                d = self.take()
                if d[0] != "num":
                    raise ExpressionSyntaxError("expected a denominator", d[2])
                if int(d[1]) == 0:
                    raise ExpressionSyntaxError("zero denominator", d[2])
                return Node("num", (Fraction(int(val), int(d[1])),), pos)
            return Node("num", (Fraction(int(val)),), pos)
        if kind == "name":
            if val == "z":
                return Node("zeta", (), pos)
            if _LETTERS.match(val):
                idx = [int(s) for s in val.split("x")[1:]]
                if len(idx) == 1:
                    return Node("x", (idx[0],), pos)
                return Node("mul", tuple(Node("x", (i,), pos) for i in idx), pos)
            m = re.fullmatch(r"g(\d+)", val)
            if m:
                return Node("g", (int(m.group(1)),), pos)
            return Node("param", (val,), pos)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect(")")
            return node
        if kind == "op" and val == "[":
            return self.bracket(pos)
        raise ExpressionSyntaxError(f"unexpected {val or 'end of input'!r}", pos)

    def bracket(self, pos):
        word = []
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] == "]":
                self.take()
                break
            if t[0] != "name" or not _LETTERS.match(t[1]):
                raise ExpressionSyntaxError("brackets may only contain letters x<i>", t[2])
            self.take()
            idx = [int(s) for s in t[1].split("x")[1:]]
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "^":
                self.take()
                n = self._int_exponent()
                if n < 1:
                    raise ExpressionSyntaxError("letter exponent must be positive", nxt[2])
                idx = idx[:-1] + [idx[-1]] * n
            word.extend(idx)
        if not word:
            raise ExpressionSyntaxError("empty brackets", pos)
        return Node("br", (tuple(word),), pos)


def parse(src):
    return _Parser(src).parse()


def _is_scalar(v):
    return isinstance(v, (CycloNumber, ParamScalar))


def evaluate(node, builder, order, symbols=None):
    """Fold an AST. ``symbols`` maps parameter names to scalars (e.g. braiding entries)."""
    symbols = symbols or {}

    def ev(n):
        k = n.kind
        if k == "num":
            return CycloNumber.rational(n.args[0])
        if k == "zeta":
            return CycloNumber.root(order)
        if k == "param":
            name = n.args[0]
            if name in symbols:
                return symbols[name]
            return ParamScalar.param(name)
        if k == "x":
            return builder.letter(n.args[0], n.pos)
        if k == "g":
            return builder.group(n.args[0], 1, n.pos)
        if k == "br":
            return builder.bracket(n.args[0], n.pos)
        if k == "pow":
            base, e = n.args
            if base.kind == "g":
                return builder.group(base.args[0], e, base.pos)
            v = ev(base)
            if _is_scalar(v):
                return v ** e
            if e < 0:
                raise ExpressionSyntaxError("negative powers only for scalars and group elements", n.pos)
            return builder.pow(v, e)
        if k == "mul":
            acc = ev(n.args[0])
            for f in n.args[1:]:
                v = ev(f)
                if _is_scalar(acc) and _is_scalar(v):
                    acc = acc * v
                elif _is_scalar(acc):
                    acc = builder.scale(v, acc)
                elif _is_scalar(v):
                    acc = builder.scale(acc, v)
                else:
                    acc = builder.mul(acc, v)
            return acc
        if k == "add":
            acc = None
            for sign, t in n.args:
                v = ev(t)
                if sign < 0:
                    v = -v if _is_scalar(v) else builder.scale(v, CycloNumber.rational(-1))
                if acc is None:
                    acc = v
                elif _is_scalar(acc) and _is_scalar(v):
                    acc = acc + v
                else:
                    acc = builder.add(builder.lift(acc) if _is_scalar(acc) else acc,
                                      builder.lift(v) if _is_scalar(v) else v)
            return acc
        raise AssertionError(k)

    return ev(node)


class ScalarBuilder:
    """Rejects algebra generators: used for scalar-only text."""

    def _fail(self, pos):
        raise ExpressionSyntaxError("algebra generator in a scalar expression", pos)

    def letter(self, i, pos):
        self._fail(pos)

    def group(self, i, e, pos):
        self._fail(pos)

    def bracket(self, w, pos):
        self._fail(pos)


def parse_scalar(src, order=12, symbols=None):
    v = evaluate(parse(src), ScalarBuilder(), order, symbols)
    return v if isinstance(v, ParamScalar) else ParamScalar.const(v)


class SmashBuilder:
    """Evaluates into SmashElements of a SmashAlgebra."""

    def __init__(self, alg):
        self.alg = alg

    def _check_index(self, i, pos):
        if not 1 <= i <= self.alg.theta:
            raise ExpressionSyntaxError(f"index {i} outside 1..{self.alg.theta}", pos)

    def letter(self, i, pos):
        self._check_index(i, pos)
        return self.alg.x(i)

    def group(self, i, e, pos):
        self._check_index(i, pos)
        exps = [0] * self.alg.theta
        exps[i - 1] = e
        return self.alg.g(exps)

    def bracket(self, word, pos):
        from .lyndon import format_word, is_lyndon

        for i in word:
            self._check_index(i, pos)
        if not is_lyndon(word):
            raise NotLyndonInBrackets(f"[{format_word(word)}] is not a Lyndon word (position {pos})")
        return self.alg.super_letter(word)

    def lift(self, c):
        return self.alg.scalar(c)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def scale(self, a, c):
        return a.scale(c)

    def pow(self, a, n):
        return a ** n


def parse_element(src, alg, symbols=None):
    """Parse text into a SmashElement of ``alg``."""
    v = evaluate(parse(src), SmashBuilder(alg), alg.order, symbols)
    return alg.scalar(v) if _is_scalar(v) else v
