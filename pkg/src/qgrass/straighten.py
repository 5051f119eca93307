"""Standard-monomial expansion in O_q(G(m,n)) and checks of the straightening
law axioms for a chosen order on the generating minors.

Straightening is done by exact linear algebra: every product of minors is
mapped to its PBW normal form in O_q(M_{m,n}) and solved against the images
of the standard monomials.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .coeff import ONE, Echelon, LaurentPoly, RationalFunction
from .minors import minor_product
from .posets import PosetOrder, enumerate_standard, is_standard, le, lt
from .qmatrix import NCPoly


class NotInSpan(ArithmeticError):
    pass


class RankDeficient(ArithmeticError):
    pass


@dataclass
class GrassElement:
    """Formal combination of products of maximal minors."""

    terms: list
    m: int
    n: int

    @classmethod
    def word(cls, word, m, n, coeff=ONE):
        return cls([(coeff, tuple(tuple(J) for J in word))], m, n)

    def degree(self):
        degs = {len(w) for _, w in self.terms}
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        return degs.pop() if degs else 0

    def to_ncpoly(self):
        out = NCPoly._raw({}, self.m, self.n)
        for c, w in self.terms:
            out = out + minor_product(w, self.m, self.n) * c
        return out

    def __add__(self, other):
        return GrassElement(self.terms + other.terms, self.m, self.n)

    def __neg__(self):
        return GrassElement([(-c, w) for c, w in self.terms], self.m, self.n)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return GrassElement([(c * other, w) for c, w in self.terms], self.m, self.n)
        return GrassElement(
            [(c1 * c2, w1 + w2) for c1, w1 in self.terms for c2, w2 in other.terms],
            self.m, self.n,
        )

    __rmul__ = __mul__


def format_monomial(word):
    return "".join("[" + "".join(map(str, J)) + "]" if max(J) < 10
                   else "[" + ",".join(map(str, J)) + "]" for J in word) or "1"


class StandardBasis:
    """Echelonised images of the standard monomials of one degree."""

    def __init__(self, ord_, degree):
        self.ord = ord_
        self.degree = degree
        self.monomials = enumerate_standard(ord_, degree)
        self.echelon = Echelon()
        self.dependent = []
        m, n = ord_.m, ord_.n
        for mono in self.monomials:
            if not self.echelon.add(minor_product(mono, m, n).terms, mono):
                self.dependent.append(mono)

    @property
    def rank(self):
        return self.echelon.rank

    def expand(self, target):
        """target: NCPoly. Returns {monomial: RationalFunction}."""
        if self.dependent:
            raise RankDeficient(
                f"standard monomials are dependent, e.g. {format_monomial(self.dependent[0])}"
            )
        coeffs = self.echelon.express(target.terms)
        if coeffs is None:
            raise NotInSpan("element is not in the span of the standard monomials")
        return coeffs


@lru_cache(maxsize=None)
def standard_basis(ord_, degree):
    return StandardBasis(ord_, degree)


def expand_in_standard_basis(e, ord_, degree=None):
    """Coefficients of e over the standard monomials, as a list of
    (RationalFunction, monomial) in enumeration order; zero entries omitted."""
    if isinstance(e, GrassElement):
        if degree is None:
            degree = e.degree()
        target = e.to_ncpoly()
    else:
        target = e
        if degree is None:
            degree = _ncpoly_degree(target, ord_.m)
    basis = standard_basis(ord_, degree)
    coeffs = basis.expand(target)
    return [(coeffs[mono], mono) for mono in basis.monomials if mono in coeffs]


def _ncpoly_degree(p, m):
    lens = {len(w) for w in p.terms}
    if not lens:
        return 0
    if len(lens) > 1 or next(iter(lens)) % m:
        raise ValueError("element is not homogeneous in the maximal minors")
    return next(iter(lens)) // m


def format_expansion(terms):
    if not terms:
        return "0"
    parts = []
    for c, mono in terms:
        ms = format_monomial(mono)
        if c == 1:
            body, neg = ms, False
        elif c == -1:
            body, neg = ms, True
        elif c.is_laurent() and c.num.is_monomial():
            (e, k), = c.num.items()
            neg = k < 0
            body = f"{RationalFunction(LaurentPoly.q(e, abs(k)))}*{ms}"
        else:
            body, neg = f"({c})*{ms}", False
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


# -- axiom checks ------------------------------------------------------------

def verify_condition3(ord_, degree):
    """Standard monomials of the given degree are linearly independent."""
    basis = standard_basis(ord_, degree)
    return {
        "condition": 3,
        "order": ord_.label(),
        "degree": degree,
        "monomials": len(basis.monomials),
        "rank": basis.rank,
        "passed": basis.rank == len(basis.monomials),
        "dependent": [format_monomial(x) for x in basis.dependent],
    }


def _support_ok(ord_, alpha, beta, mono):
    lam, mu = mono
    return le(ord_, lam, mu) and lt(ord_, lam, alpha) and lt(ord_, lam, beta)


def _pair_expansion(ord_, alpha, beta):
    return dict((mono, c) for c, mono in
                expand_in_standard_basis(GrassElement.word((alpha, beta), ord_.m, ord_.n), ord_, 2))


def verify_condition4(ord_):
    """Products of incomparable generators straighten below both factors."""
    elems = ord_.elements()
    records = []
    for alpha, beta in product(elems, elems):
        if le(ord_, alpha, beta) or le(ord_, beta, alpha):
            continue
        try:
            exp = _pair_expansion(ord_, alpha, beta)
        except (NotInSpan, RankDeficient) as err:
            records.append({"alpha": alpha, "beta": beta, "passed": False, "error": str(err)})
            continue
        bad = [mono for mono in exp if not _support_ok(ord_, alpha, beta, mono)]
        records.append({
            "alpha": alpha, "beta": beta,
            "expansion": [(str(c), format_monomial(mono)) for mono, c in exp.items()],
            "violations": [format_monomial(x) for x in bad],
            "passed": not bad,
        })
    return {"condition": 4, "order": ord_.label(), "pairs": records,
            "passed": all(r["passed"] for r in records)}


def commutation_scalar(ord_, alpha, beta):
    """Solve for c with alpha*beta - c*beta*alpha supported below alpha, beta.

    Returns (c, remainder expansion, constrained) or raises ValueError when
    no nonzero scalar works. constrained is False when every nonzero c works.
    """
    x = _pair_expansion(ord_, alpha, beta)
    y = _pair_expansion(ord_, beta, alpha)
    bad = {mono for mono in set(x) | set(y) if not _support_ok(ord_, alpha, beta, mono)}
    zero = RationalFunction(0)
    pivot = next((b for b in sorted(bad) if y.get(b, zero)), None)
    if pivot is None:
        if any(x.get(b, zero) for b in bad):
            raise ValueError("no scalar: beta*alpha vanishes where alpha*beta does not")
        c, constrained = RationalFunction(1), False
    else:
        c = x.get(pivot, zero) / y[pivot]
        constrained = True
        if not c:
            raise ValueError("the only candidate scalar is zero")
        for b in bad:
            if x.get(b, zero) != c * y.get(b, zero):
                raise ValueError(f"no scalar works; conflict at {format_monomial(b)}")
    rem = {}
    for mono in set(x) | set(y):
        v = x.get(mono, zero) - c * y.get(mono, zero)
        if v:
            rem[mono] = v
    return c, rem, constrained


def verify_condition5(ord_):
    """Every pair of generators q-commutes modulo terms below both."""
    elems = ord_.elements()
    records = []
    for alpha, beta in product(elems, elems):
        try:
            c, rem, constrained = commutation_scalar(ord_, alpha, beta)
        except (ValueError, NotInSpan, RankDeficient) as err:
            records.append({"alpha": alpha, "beta": beta, "passed": False, "error": str(err)})
            continue
        records.append({
            "alpha": alpha, "beta": beta,
            "c": str(c),
            "constrained": constrained,
            "anomaly": not c.is_unit_monomial(),
            "remainder": [(str(v), format_monomial(mono)) for mono, v in sorted(rem.items())],
            "passed": True,
        })
    return {"condition": 5, "order": ord_.label(), "pairs": records,
            "passed": all(r["passed"] for r in records)}


def verify_spanning(ord_, degree):
    """The standard monomials span the degree-d component: every product of
    d generators lies in their span, so rank(all products) == #standard."""
    basis = standard_basis(ord_, degree)
    elems = ord_.elements()
    m, n = ord_.m, ord_.n
    ech = Echelon()
    outside = []
    for word in product(elems, repeat=degree):
        p = minor_product(word, m, n)
        ech.add(p.terms, word)
        if not is_standard(ord_, word) and basis.echelon.express(p.terms) is None:
            outside.append(format_monomial(word))
    return {
        "degree": degree,
        "order": ord_.label(),
        "standard": len(basis.monomials),
        "rank_all_products": ech.rank,
        "outside_span": outside,
        "passed": ech.rank == len(basis.monomials) == basis.rank and not outside,
    }


def verify_qgasl(ord_, degree=2):
    """All checkable straightening-law conditions for ord_ up to degree."""
    m, n = ord_.m, ord_.n
    elems = ord_.elements()
    structural = all(
        minor_product((J,), m, n).terms and all(len(w) == m for w in minor_product((J,), m, n).terms)
        for J in elems
    )
    cond3 = [verify_condition3(ord_, d) for d in range(1, degree + 1)]
    spans = [verify_spanning(ord_, d) for d in range(1, degree + 1)]
    cond4 = verify_condition4(ord_)
    cond5 = verify_condition5(ord_)
    return {
        "order": ord_.label(), "m": m, "n": n, "degree": degree,
        "conditions_1_2": structural,
        "condition3": cond3,
        "spanning": spans,
        "condition4": cond4,
        "condition5": cond5,
        "passed": structural and all(r["passed"] for r in cond3 + spans)
        and cond4["passed"] and cond5["passed"],
    }
