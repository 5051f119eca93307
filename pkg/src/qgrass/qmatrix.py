"""The quantum matrix algebra O_q(M_{m,n}) with its PBW normal form.

Words are tuples of Generator; a word is normal when it is non-decreasing in
row-major order. Every element has a unique expansion over normal words.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import NamedTuple

from .coeff import ONE, ZERO, LaurentPoly, format_laurent, parse_laurent

Q_MINUS_QINV = LaurentPoly({1: 1, -1: -1})
QINV = LaurentPoly({-1: 1})


class Generator(NamedTuple):
    row: int
    col: int

    def __str__(self):
        return f"x[{self.row},{self.col}]"


class InOrder(ValueError):
    """Raised by rewrite_pair when the pair is already in normal order."""


class AmbientMismatch(ValueError):
    pass


def is_normal(word):
    return all(word[i] <= word[i + 1] for i in range(len(word) - 1))


def relation_class(g, h):
    """Name of the defining relation that reorders g*h (g > h)."""
    if g.row == h.row:
        return "row"
    if g.col == h.col:
        return "column"
    if g.col < h.col:
        return "antidiagonal"
    return "diagonal"


@lru_cache(maxsize=None)
def _rewrite(g, h):
    if g.row == h.row or g.col == h.col:
        return (((h, g), QINV),)
    if g.col < h.col:
        return (((h, g), ONE),)
    # g = x_{kl}, h = x_{ij} with i<k, j<l:
    # x_kl x_ij = x_ij x_kl - (q - q^-1) x_il x_kj
    return (
        ((h, g), ONE),
        ((Generator(h.row, g.col), Generator(g.row, h.col)), -Q_MINUS_QINV),
    )


def rewrite_pair(g, h, m=None, n=None):
    """Rewrite the out-of-order product g*h as a combination of normal pairs."""
    g, h = Generator(*g), Generator(*h)
    if g <= h:
        raise InOrder(f"{g}{h} is already in normal order")
    if m is None:
        m = max(g.row, h.row)
    if n is None:
        n = max(g.col, h.col)
    return NCPoly(dict(_rewrite(g, h)), m, n)


@lru_cache(maxsize=None)
def _insert(g, word):
    """Normal form of g*word, word normal. Returns tuple of (word, coeff)."""
    if not word or g <= word[0]:
        return (((g,) + word, ONE),)
    h = word[0]
    rest = word[1:]
    out = {}
    for (a, b), c in _rewrite(g, h):
        for w1, c1 in _insert(b, rest):
            for w2, c2 in _insert(a, w1):
                _acc(out, w2, c * c1 * c2)
    return tuple(out.items())


@lru_cache(maxsize=None)
def _nf_word(word):
    if len(word) <= 1:
        return ((word, ONE),)
    out = {}
    for w1, c1 in _nf_word(word[1:]):
        for w2, c2 in _insert(word[0], w1):
            _acc(out, w2, c1 * c2)
    return tuple(out.items())


@lru_cache(maxsize=None)
def _mul_normal(u, v):
    """Normal form of u*v for normal words u, v."""
    if not u:
        return ((v, ONE),)
    if not v or u[-1] <= v[0]:
        return ((u + v, ONE),)
    out = {}
    for w1, c1 in _mul_normal(u[1:], v):
        for w2, c2 in _insert(u[0], w1):
            _acc(out, w2, c1 * c2)
    return tuple(out.items())


def _acc(out, w, c):
    x = out.get(w)
    x = c if x is None else x + c
    if x:
        out[w] = x
    else:
        out.pop(w, None)


def clear_caches():
    for f in (_rewrite, _insert, _nf_word, _mul_normal):
        f.cache_clear()


class NCPoly:
    """An element of O_q(M_{m,n}) as {normal word: LaurentPoly coefficient}."""

    __slots__ = ("terms", "m", "n")

    def __init__(self, terms=None, m=1, n=1, *, normalized=True):
        self.m, self.n = m, n
        if terms is None:
            self.terms = {}
            return
        if normalized:
            t = {}
            for w, c in terms.items():
                c = LaurentPoly(c) if not isinstance(c, LaurentPoly) else c
                if c:
                    t[tuple(Generator(*g) for g in w)] = c
            for w in t:
                if not is_normal(w):
                    raise ValueError(f"word {format_word(w)} is not normal")
            self.terms = t
        else:
            self.terms = normal_form_terms(terms)

    @classmethod
    def _raw(cls, terms, m, n):
        obj = cls.__new__(cls)
        obj.terms, obj.m, obj.n = terms, m, n
        return obj

    @classmethod
    def one(cls, m, n):
        return cls._raw({(): ONE}, m, n)

    @classmethod
    def scalar(cls, c, m, n):
        c = LaurentPoly(c) if not isinstance(c, LaurentPoly) else c
        return cls._raw({(): c} if c else {}, m, n)

    @classmethod
    def gen(cls, i, j, m, n):
        if not (1 <= i <= m and 1 <= j <= n):
            raise ValueError(f"x[{i},{j}] outside M_{m},{n}")
        return cls._raw({(Generator(i, j),): ONE}, m, n)

    @classmethod
    def from_words(cls, terms, m, n):
        """Normal form of an arbitrary combination {word: coeff}."""
        return cls._raw(normal_form_terms(terms), m, n)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other):
        if (self.m, self.n) != (other.m, other.n):
            raise AmbientMismatch(f"M_{self.m},{self.n} vs M_{other.m},{other.n}")

    def _lift(self, other):
        if isinstance(other, NCPoly):
            self._check(other)
            return other
        if isinstance(other, (int, LaurentPoly)):
            return NCPoly.scalar(other, self.m, self.n)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        t = dict(self.terms)
        for w, c in other.terms.items():
            _acc(t, w, c)
        return NCPoly._raw(t, self.m, self.n)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly._raw({w: -c for w, c in self.terms.items()}, self.m, self.n)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            if not other:
                return NCPoly._raw({}, self.m, self.n)
            return NCPoly._raw({w: c * other for w, c in self.terms.items()}, self.m, self.n)
        if not isinstance(other, NCPoly):
            return NotImplemented
        return nc_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self * other
        return NotImplemented

    def __pow__(self, k):
        out = NCPoly.one(self.m, self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return (self.m, self.n) == (other.m, other.n) and self.terms == other.terms
        if isinstance(other, (int, LaurentPoly)):
            return self.terms == NCPoly.scalar(other, self.m, self.n).terms
        return NotImplemented

    __hash__ = None

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda wc: (len(wc[0]), wc[0]))

    def __str__(self):
        return format_ncpoly(self)

    def __repr__(self):
        return f"NCPoly({format_ncpoly(self)!r}, m={self.m}, n={self.n})"

    @classmethod
    def parse(cls, text, m, n):
        return parse_ncpoly(text, m, n)


def normal_form_terms(terms):
    out = {}
    for w, c in terms.items():
        c = LaurentPoly(c) if not isinstance(c, LaurentPoly) else c
        if not c:
            continue
        w = tuple(Generator(*g) for g in w)
        for w2, c2 in _nf_word(w):
            _acc(out, w2, c * c2)
    return out


def normal_form(p, m=None, n=None):
    """PBW normal form of an arbitrary combination of words.

    p is a dict {word: coeff}, a single word (tuple of generators) or an NCPoly.
    """
    if isinstance(p, NCPoly):
        return p
    if isinstance(p, tuple):
        p = {p: ONE}
    words = [tuple(Generator(*g) for g in w) for w in p]
    if m is None:
        m = max((g.row for w in words for g in w), default=1)
    if n is None:
        n = max((g.col for w in words for g in w), default=1)
    return NCPoly._raw(normal_form_terms(p), m, n)


def nc_mul(a, b):
    a._check(b)
    out = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            c = cu * cv
            for w, cw in _mul_normal(u, v):
                _acc(out, w, c * cw)
    return NCPoly._raw(out, a.m, a.n)


def nc_square(a):
    """a*a, computed by expanding over unordered pairs of terms."""
    out = {}
    items = list(a.terms.items())
    for i, (u, cu) in enumerate(items):
        for w, cw in _mul_normal(u, u):
            _acc(out, w, cu * cu * cw)
        for v, cv in items[i + 1:]:
            c = cu * cv
            for w, cw in _mul_normal(u, v):
                _acc(out, w, c * cw)
            for w, cw in _mul_normal(v, u):
                _acc(out, w, c * cw)
    return NCPoly._raw(out, a.m, a.n)


# -- single-step rewriting (independent of the memoised insertion path) -----

def rewrite_step_normal_form(p, strategy="leftmost"):
    """Normal form by repeated single rewrites at the leftmost or rightmost
    descent. Slow; used to cross-check normal_form."""
    todo = {}
    for w, c in p.items():
        w = tuple(Generator(*g) for g in w)
        c = LaurentPoly(c) if not isinstance(c, LaurentPoly) else c
        _acc(todo, w, c)
    done = {}
    while todo:
        w, c = todo.popitem()
        descents = [i for i in range(len(w) - 1) if w[i] > w[i + 1]]
        if not descents:
            _acc(done, w, c)
            continue
        i = descents[0] if strategy == "leftmost" else descents[-1]
        for (a, b), r in _rewrite(w[i], w[i + 1]):
            _acc(todo, w[:i] + (a, b) + w[i + 2:], c * r)
    return done


# -- text -------------------------------------------------------------------

def format_word(w):
    return "".join(str(g) for g in w)


def _format_coeff_term(c, word):
    """Return (negative, body) for one term."""
    ws = format_word(word)
    if c.is_monomial():
        (e, k), = c.items()
        neg = k < 0
        mag = LaurentPoly.q(e, abs(k))
        cs = format_laurent(mag)
        if not ws:
            return neg, cs
        if cs == "1":
            return neg, ws
        return neg, f"{cs}*{ws}"
    cs = format_laurent(c)
    if not ws:
        return False, f"({cs})"
    return False, f"({cs})*{ws}"


def format_ncpoly(p):
    if not p.terms:
        return "0"
    parts = []
    for w, c in p.sorted_terms():
        neg, body = _format_coeff_term(c, w)
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


_GEN = re.compile(r"x\[(\d+),(\d+)\]")


def parse_ncpoly(text, m, n):
    """Inverse of format_ncpoly."""
    s = text.strip()
    if s == "0":
        return NCPoly._raw({}, m, n)
    terms = {}
    pos = 0
    first = True
    while pos < len(s):
        while pos < len(s) and s[pos] == " ":
            pos += 1
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
            while s[pos] == " ":
                pos += 1
        elif not first:
            raise ValueError(f"expected + or - at {pos} in {text!r}")
        if s[pos] == "(":
            end = s.index(")", pos)
            coeff = parse_laurent(s[pos + 1:end])
            pos = end + 1
            if pos < len(s) and s[pos] == "*":
                pos += 1
        else:
            m_gen = _GEN.match(s, pos)
            if m_gen:
                coeff = ONE
            else:
                end = pos
                while end < len(s) and s[end] not in " x":
                    end += 1
                token = s[pos:end].rstrip("*")
                coeff = parse_laurent(token)
                pos = end
                if pos < len(s) and s[pos - 1] != "*" and s[pos] == "x":
                    raise ValueError(f"expected * before word at {pos} in {text!r}")
        word = []
        while True:
            m_gen = _GEN.match(s, pos)
            if not m_gen:
                break
            word.append(Generator(int(m_gen.group(1)), int(m_gen.group(2))))
            pos = m_gen.end()
        w = tuple(word)
        if not is_normal(w):
            raise ValueError(f"word {format_word(w)} is not normal")
        _acc(terms, w, coeff * sign)
        first = False
    return NCPoly._raw(terms, m, n)
