"""Elements of the fraction field Q(q)."""

from __future__ import annotations

from .laurent import ONE, ZERO, LaurentPoly, format_laurent, laurent_gcd, parse_laurent


class RationalFunction:
    """num/den with num, den in Z[q, q^-1], kept in lowest terms.

    The denominator is a polynomial with nonzero constant term and positive
    leading coefficient, which makes the representation canonical.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = LaurentPoly(num) if not isinstance(num, LaurentPoly) else num
        den = LaurentPoly(den) if not isinstance(den, LaurentPoly) else den
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        g = laurent_gcd(num, den)
        if g != ONE:
            num, den = num.divexact(g), den.divexact(g)
        lo = den.low()
        if lo:
            num, den = num.shift(-lo), den.shift(-lo)
        if den.leading_coeff() < 0:
            num, den = -num, -den
        self.num, self.den = num, den

    @classmethod
    def coerce(cls, x):
        return x if isinstance(x, RationalFunction) else cls(x)

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_laurent(self):
        return self.den == ONE

    def as_laurent(self):
        if self.den != ONE:
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def is_unit_monomial(self):
        """True for +-q^k."""
        return self.den == ONE and self.num.is_unit()

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        r = RationalFunction.__new__(RationalFunction)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den == ONE:
            return format_laurent(self.num)
        n = format_laurent(self.num)
        if len(self.num._t) > 1:
            n = f"({n})"
        d = format_laurent(self.den)
        if len(self.den._t) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RationalFunction({self})"

    @classmethod
    def parse(cls, text):
        text = text.strip()
        depth = 0
        for i, ch in enumerate(text):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "/" and depth == 0:
                return cls(_unparen(text[:i]), _unparen(text[i + 1:]))
        return cls(_unparen(text))


def _unparen(s):
    s = s.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    return parse_laurent(s)


def _coerce(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, LaurentPoly)):
        return RationalFunction(x)
    return None
