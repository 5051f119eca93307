"""Expression language for elements of O_q(M_{m,n}).

    expr   := term (('+' | '-') term)*
    term   := ('+' | '-')* factor ('*'? factor)*
    factor := atom ('^' ['-'] INT)?
    atom   := INT | 'q' | 'x[' INT ',' INT ']' | minor | '(' expr ')'
    minor  := '[' cols ']' | '[' rows '|' cols ']'

Index lists are comma separated, or written as bare digits ([134]).
Juxtaposition multiplies, so "[12][34] - q^2*[34][12]" is valid.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .coeff import ONE, LaurentPoly
from .minors import quantum_minor
from .qmatrix import NCPoly


class ParseError(ValueError):
    def __init__(self, msg, pos):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


class AmbientError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|(x\[)|(\[)|(q)|([-+*^()]))")


@dataclass
class Node:
    kind: str
    args: tuple
    pos: int


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def peek(self):
        m = _TOKEN.match(self.text, self.pos)
        if not m:
            rest = self.text[self.pos:].strip()
            if not rest:
                return None, self.pos
            raise ParseError(f"unexpected character {rest[0]!r}", self.text.index(rest[0], self.pos))
        return m, m.start(m.lastindex)

    def take(self, ch):
        m, p = self.peek()
        if m is None or m.group(m.lastindex) != ch:
            raise ParseError(f"expected {ch!r}", p)
        self.pos = m.end()

    def parse(self):
        node = self.expr()
        m, p = self.peek()
        if m is not None:
            raise ParseError(f"unexpected {m.group(m.lastindex)!r}", p)
        return node

    def expr(self):
        node = self.term()
        while True:
            m, p = self.peek()
            if m is None or m.group(5) not in ("+", "-"):
                return node
            self.pos = m.end()
            rhs = self.term()
            node = Node("add" if m.group(5) == "+" else "sub", (node, rhs), p)

    def term(self):
        m, p = self.peek()
        if m is not None and m.group(5) in ("+", "-"):
            self.pos = m.end()
            inner = self.term()
            return Node("neg", (inner,), p) if m.group(5) == "-" else inner
        node = self.factor()
        while True:
            m, p = self.peek()
            if m is None:
                return node
            if m.group(5) == "*":
                self.pos = m.end()
                node = Node("mul", (node, self.factor()), p)
            elif m.group(5) == "(" or m.group(1) or m.group(2) or m.group(3) or m.group(4):
                node = Node("mul", (node, self.factor()), p)
            else:
                return node

    def factor(self):
        node = self.atom()
        m, p = self.peek()
        if m is not None and m.group(5) == "^":
            self.pos = m.end()
            m2, p2 = self.peek()
            if m2 is not None and m2.group(5) == "(":
                self.pos = m2.end()
                e = self._signed_int()
                self.take(")")
            else:
                e = self._signed_int()
            node = Node("pow", (node, e), p)
        return node

    def _signed_int(self):
        m, p = self.peek()
        sgn = 1
        if m is not None and m.group(5) == "-":
            sgn = -1
            self.pos = m.end()
            m, p = self.peek()
        if m is None or not m.group(1):
            raise ParseError("expected integer exponent", p)
        self.pos = m.end()
        return sgn * int(m.group(1))

    def atom(self):
        m, p = self.peek()
        if m is None:
            raise ParseError("unexpected end of input", len(self.text))
        if m.group(1):
            self.pos = m.end()
            return Node("int", (int(m.group(1)),), p)
        if m.group(4):
            self.pos = m.end()
            return Node("q", (), p)
        if m.group(2):
            self.pos = m.end()
            i = self._uint()
            self._lit(",")
            j = self._uint()
            self._close()
            return Node("gen", (i, j), p)
        if m.group(3):
            self.pos = m.end()
            return self._minor(p)
        if m.group(5) == "(":
            self.pos = m.end()
            node = self.expr()
            self.take(")")
            return node
        raise ParseError(f"unexpected {m.group(m.lastindex)!r}", p)

    def _uint(self):
        m = re.compile(r"\s*(\d+)").match(self.text, self.pos)
        if not m:
            raise ParseError("expected integer", self.pos)
        self.pos = m.end()
        return int(m.group(1))

    def _lit(self, ch):
        m = re.compile(r"\s*" + re.escape(ch)).match(self.text, self.pos)
        if not m:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos = m.end()

    def _close(self):
        self._lit("]")

    def _minor(self, start):
        end = self.text.find("]", self.pos)
        if end < 0:
            raise ParseError("unterminated minor", start)
        body = self.text[self.pos:end]
        self.pos = end + 1
        if "|" in body:
            r, c = body.split("|", 1)
            return Node("pair", (_indices(r, start), _indices(c, start)), start)
        return Node("maxminor", (_indices(body, start),), start)


def _indices(s, pos):
    s = s.strip()
    if not s:
        raise ParseError("empty index list", pos)
    if "," in s:
        parts = [x.strip() for x in s.split(",")]
        if not all(x.isdigit() for x in parts):
            raise ParseError(f"bad index list {s!r}", pos)
        out = tuple(int(x) for x in parts)
    else:
        if not s.replace(" ", "").isdigit():
            raise ParseError(f"bad index list {s!r}", pos)
        out = tuple(int(ch) for ch in s.replace(" ", ""))
    if list(out) != sorted(set(out)):
        raise ParseError(f"indices must be strictly increasing: {s!r}", pos)
    if out[0] < 1:
        raise ParseError("indices start at 1", pos)
    return out


def parse_expr(text):
    return _Parser(text).parse()


def _extent(node, acc):
    if node.kind == "gen":
        acc["m"] = max(acc["m"], node.args[0])
        acc["n"] = max(acc["n"], node.args[1])
    elif node.kind == "pair":
        acc["m"] = max(acc["m"], node.args[0][-1])
        acc["n"] = max(acc["n"], node.args[1][-1])
    elif node.kind == "maxminor":
        acc["sizes"].add(len(node.args[0]))
        acc["n"] = max(acc["n"], node.args[0][-1])
    else:
        for a in node.args:
            if isinstance(a, Node):
                _extent(a, acc)


def eval_expr(text, m=None, n=None):
    """Evaluate an expression to its normal form NCPoly."""
    tree = parse_expr(text)
    acc = {"m": 1, "n": 1, "sizes": set()}
    _extent(tree, acc)
    if len(acc["sizes"]) > 1:
        raise AmbientError("maximal minors of different sizes in one expression")
    if m is None:
        m = max([acc["m"]] + list(acc["sizes"]))
    if n is None:
        n = max(acc["n"], m)
    if acc["m"] > m or acc["n"] > n:
        raise AmbientError(f"indices exceed the ambient M_{m},{n}")
    if acc["sizes"] and acc["sizes"] != {m}:
        raise AmbientError(f"maximal minors must have {m} columns in G({m},{n})")
    return _eval(tree, m, n)


def _eval(node, m, n):
    k = node.kind
    if k == "int":
        return NCPoly.scalar(node.args[0], m, n)
    if k == "q":
        return NCPoly.scalar(LaurentPoly.q(1), m, n)
    if k == "gen":
        return NCPoly.gen(node.args[0], node.args[1], m, n)
    if k == "pair":
        rows, cols = node.args
        if len(rows) != len(cols):
            raise ParseError("row and column lists differ in size", node.pos)
        return quantum_minor((rows, cols), m, n)
    if k == "maxminor":
        return quantum_minor((tuple(range(1, m + 1)), node.args[0]), m, n)
    if k == "neg":
        return -_eval(node.args[0], m, n)
    if k == "add":
        return _eval(node.args[0], m, n) + _eval(node.args[1], m, n)
    if k == "sub":
        return _eval(node.args[0], m, n) - _eval(node.args[1], m, n)
    if k == "mul":
        return _eval(node.args[0], m, n) * _eval(node.args[1], m, n)
    if k == "pow":
        base, e = node.args
        b = _eval(base, m, n)
        if e >= 0:
            return b ** e
        if set(b.terms) == {()} and b.terms[()].is_unit():
            return NCPoly.scalar(b.terms[()] ** e, m, n)
        raise ParseError("negative powers are only defined for +-q^k", node.pos)
    raise AssertionError(k)
