"""Laurent polynomials in q with integer coefficients."""

from __future__ import annotations

import re
from math import gcd as igcd


class LaurentPoly:
    """An element of Z[q, q^-1], stored as {exponent: coefficient}.

    Instances are immutable and canonical: zero coefficients are never stored,
    so structural equality is value equality.
    """

    __slots__ = ("_t", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            t = {}
        elif isinstance(terms, int):
            t = {0: terms} if terms else {}
        elif isinstance(terms, LaurentPoly):
            t = terms._t
        else:
            t = {int(e): int(c) for e, c in dict(terms).items() if c}
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t):
        obj = cls.__new__(cls)
        obj._t = t
        obj._hash = None
        return obj

    @classmethod
    def q(cls, e=1, c=1):
        return cls._raw({e: c} if c else {})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self):
        return dict(self._t)

    def items(self):
        return self._t.items()

    def coeff(self, e):
        return self._t.get(e, 0)

    def is_zero(self):
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def low(self):
        return min(self._t)

    def high(self):
        return max(self._t)

    def leading_coeff(self):
        return self._t[max(self._t)]

    def is_unit(self):
        """True for +-q^k, the units of Z[q, q^-1]."""
        if len(self._t) != 1:
            return False
        (c,) = self._t.values()
        return c == 1 or c == -1

    def is_monomial(self):
        return len(self._t) == 1

    def monomial_exponent(self):
        """Exponent k when self is exactly q^k, else None."""
        if len(self._t) == 1:
            (e, c), = self._t.items()
            if c == 1:
                return e
        return None

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other._t:
            return self
        if not self._t:
            return other
        t = dict(self._t)
        for e, c in other._t.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return LaurentPoly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._t.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._raw({e: c * other for e, c in self._t.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return ZERO
        if len(b) == 1:
            (f, d), = b.items()
            return LaurentPoly._raw({e + f: c * d for e, c in a.items()})
        if len(a) == 1:
            (f, d), = a.items()
            return LaurentPoly._raw({e + f: c * d for e, c in b.items()})
        t = {}
        for e, c in a.items():
            for f, d in b.items():
                k = e + f
                t[k] = t.get(k, 0) + c * d
        return LaurentPoly._raw({k: v for k, v in t.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if not self.is_unit():
                raise ValueError("negative power of a non-unit Laurent polynomial")
            (e, c), = self._t.items()
            return LaurentPoly._raw({e * k: c ** (-k)})
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k):
        """Multiply by q^k."""
        return LaurentPoly._raw({e + k: c for e, c in self._t.items()})

    def divexact(self, other):
        """Exact quotient self / other; raises ArithmeticError when inexact."""
        if not other._t:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self._t:
            return ZERO
        if len(other._t) == 1:
            (f, d), = other._t.items()
            t = {}
            for e, c in self._t.items():
                qt, r = divmod(c, d)
                if r:
                    raise ArithmeticError("inexact division")
                t[e - f] = qt
            return LaurentPoly._raw(t)
        la, a = _dense(self)
        lb, b = _dense(other)
        quot = _dense_divexact(a, b)
        return _from_dense(la - lb, quot)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._t == other._t
        if isinstance(other, int):
            return self._t == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    # -- text -------------------------------------------------------------

    def __str__(self):
        return format_laurent(self)

    def __repr__(self):
        return f"LaurentPoly({format_laurent(self)!r})"

    @classmethod
    def parse(cls, text):
        return parse_laurent(text)


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
Q = LaurentPoly._raw({1: 1})


def neg_q_pow(e):
    """(-q)^e for any integer e."""
    return LaurentPoly._raw({e: -1 if e % 2 else 1})


def q_pow(e):
    return LaurentPoly._raw({e: 1})


# -- dense helpers (polynomials as low-to-high integer lists) ---------------

def _dense(p):
    lo, hi = p.low(), p.high()
    out = [0] * (hi - lo + 1)
    for e, c in p._t.items():
        out[e - lo] = c
    return lo, out


def _from_dense(lo, coeffs):
    return LaurentPoly._raw({lo + i: c for i, c in enumerate(coeffs) if c})


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _dense_divexact(a, b):
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(a) < len(b):
        if any(a):
            raise ArithmeticError("inexact division")
        return []
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c == 0:
            continue
        qc, r = divmod(c, lb)
        if r:
            raise ArithmeticError("inexact division")
        quot[i - db] = qc
        for j in range(len(b)):
            a[i - db + j] -= qc * b[j]
    if any(a):
        raise ArithmeticError("inexact division")
    return quot


def _content(a):
    g = 0
    for c in a:
        g = igcd(g, c)
    return g


def _prem(a, b):
    """Pseudo-remainder of a by b (dense, nonempty b)."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        c = a[-1]
        shift = len(a) - 1 - db
        a = [lb * x for x in a]
        for j in range(len(b)):
            a[shift + j] -= c * b[j]
        _trim(a)
    return a


def _primitive(a):
    g = _content(a)
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def laurent_gcd(a, b):
    """Gcd in Z[q, q^-1], normalized to a polynomial with nonzero constant
    term and positive leading coefficient."""
    if not a._t:
        return _normalize_unit(b) if b._t else ZERO
    if not b._t:
        return _normalize_unit(a)
    _, da = _dense(a)
    _, db = _dense(b)
    c = igcd(_content(da), _content(db))
    pa, pb = _primitive(da), _primitive(db)
    if len(pa) < len(pb):
        pa, pb = pb, pa
    while pb:
        r = _prem(pa, pb)
        pa, pb = pb, (_primitive(r) if r else [])
    g = _primitive(pa)
    return _from_dense(0, [c * x for x in g])


def _normalize_unit(p):
    lo, d = _dense(p)
    if d[-1] < 0:
        d = [-x for x in d]
    return _from_dense(0, d)


# -- text -------------------------------------------------------------------

def _mono(e):
    if e == 0:
        return ""
    if e == 1:
        return "q"
    return f"q^{e}"


def format_laurent(p):
    if not p._t:
        return "0"
    parts = []
    for e in sorted(p._t, reverse=True):
        c = p._t[e]
        mono = _mono(e)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+)\s*(?:\*\s*)?)?(q(?:\s*\^\s*\(?\s*(-?\d+)\s*\)?)?)?\s*"
)


def parse_laurent(text):
    """Parse the output of format_laurent (and slightly looser spellings)."""
    s = text.strip()
    if not s:
        raise ValueError("empty Laurent polynomial")
    if s == "0":
        return ZERO
    pos = 0
    out = {}
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse Laurent polynomial at {pos}: {text!r}")
        sign, num, qpart, exp = m.groups()
        if sign is None and not first:
            raise ValueError(f"missing operator at {pos}: {text!r}")
        if num is None and qpart is None:
            raise ValueError(f"empty term at {pos}: {text!r}")
        c = int(num) if num is not None else 1
        if sign == "-":
            c = -c
        e = 0
        if qpart is not None:
            e = int(exp) if exp is not None else 1
        out[e] = out.get(e, 0) + c
        pos = m.end()
        first = False
    return LaurentPoly(out)
