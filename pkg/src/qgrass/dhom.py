"""Dehomogenisation of O_q(G(m,n)) at a consecutive minor [M].

No localisation is built. An element numerator*[M]^-k is kept as a formal
combination of minor words plus the exponent k, and identities are checked
after clearing [M] to a common power. Moving [M]^-1 across a minor uses the
quasi-commutation exponent, which always exists because [M] is consecutive.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .coeff import ONE, Echelon, LaurentPoly, neg_q_pow, q_pow
from .grassmann import consecutive_minor, q_index_set, quasi_commute_exponent, sign, tilde
from .minors import BadShape, minor_product
from .posets import index_pairs
from .qmatrix import Generator, NCPoly, relation_class, rewrite_pair
from .straighten import GrassElement


class NotQuasiCommuting(ArithmeticError):
    pass


@lru_cache(maxsize=None)
def _twist(M, J, m, n):
    c = quasi_commute_exponent(M, J, m, n)
    if c is None:
        raise NotQuasiCommuting(f"[{M}] and [{J}] do not quasi-commute")
    return c


@dataclass
class LocalElement:
    """numerator * [M]^-mpow with M a consecutive minor (given by a)."""

    numerator: GrassElement
    mpow: int
    a: int

    @property
    def m(self):
        return self.numerator.m

    @property
    def n(self):
        return self.numerator.n

    @property
    def M(self):
        return consecutive_minor(self.a, self.m, self.n).elems

    @classmethod
    def one(cls, a, m, n):
        return cls(GrassElement([(ONE, ())], m, n), 0, a)

    def cleared(self, k):
        """NCPoly of numerator*[M]^(k - mpow), for k >= mpow."""
        if k < self.mpow:
            raise ValueError("cannot clear to a smaller power")
        pad = (self.M,) * (k - self.mpow)
        return GrassElement([(c, w + pad) for c, w in self.numerator.terms],
                            self.m, self.n).to_ncpoly()

    def __eq__(self, other):
        if not isinstance(other, LocalElement):
            return NotImplemented
        _same(self, other)
        k = max(self.mpow, other.mpow)
        return self.cleared(k) == other.cleared(k)

    def is_zero(self):
        return self.cleared(self.mpow).is_zero()

    def __add__(self, other):
        _same(self, other)
        k = max(self.mpow, other.mpow)
        terms = []
        for x in (self, other):
            pad = (self.M,) * (k - x.mpow)
            terms += [(c, w + pad) for c, w in x.numerator.terms]
        return LocalElement(GrassElement(terms, self.m, self.n), k, self.a)

    def __neg__(self):
        return LocalElement(-self.numerator, self.mpow, self.a)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return LocalElement(self.numerator * other, self.mpow, self.a)
        return local_mul(self, other)

    __rmul__ = __mul__


def _same(x, y):
    if (x.a, x.m, x.n) != (y.a, y.m, y.n):
        raise ValueError("local elements at different consecutive minors")


def local_mul(x, y):
    """(u [M]^-k)(v [M]^-l) = q^e u v [M]^-(k+l), moving [M]^-k past v."""
    _same(x, y)
    M, m, n = x.M, x.m, x.n
    terms = []
    for c1, w1 in x.numerator.terms:
        for c2, w2 in y.numerator.terms:
            # [M]^-1 [J] = q^-c [J] [M]^-1 where [M][J] = q^c [J][M]
            e = -x.mpow * sum(_twist(M, J, m, n) for J in w2)
            terms.append((c1 * c2 * q_pow(e), w1 + w2))
    return LocalElement(GrassElement(terms, m, n), x.mpow + y.mpow, x.a)


def _check_a(a, m, n):
    if not 1 <= a <= n:
        raise ValueError(f"a={a} outside 1..{n}")
    if not 1 <= m < n:
        raise ValueError(f"need 1 <= m < n, got m={m}, n={n}")


def rho_generator(i, j, a, m, n):
    """Image of x_ij of O_q(M_{m,n-m}): [Q(i,j)][M]^-1."""
    _check_a(a, m, n)
    J = q_index_set((i,), (j,), a, m, n)
    return LocalElement(GrassElement.word((J,), m, n), 1, a)


def rho_word(word, a, m, n):
    """Image of a word in the x_ij (product of generator images)."""
    out = LocalElement.one(a, m, n)
    for g in word:
        out = local_mul(out, rho_generator(g[0], g[1], a, m, n))
    return out


def rho_ncpoly(p, a, m, n):
    out = LocalElement(GrassElement([], m, n), 0, a)
    for w, c in p.terms.items():
        out = out + rho_word(w, a, m, n) * c
    return out


def verify_matrix_relations(a, m, n):
    """Check that the generator images satisfy every defining relation of
    O_q(M_{m,n-m}), one record per unordered generator pair."""
    _check_a(a, m, n)
    gens = [(i, j) for i in range(1, m + 1) for j in range(1, n - m + 1)]
    records = []
    for h_idx, h in enumerate(gens):
        for g in gens[h_idx + 1:]:
            # g > h; the relation rewrites g*h in terms of normal words
            rhs = rewrite_pair(g, h, m, n - m)
            lhs = rho_word((g,), a, m, n) * rho_word((h,), a, m, n)
            ok = lhs == rho_ncpoly(rhs, a, m, n)
            records.append({
                "pair": [list(g), list(h)],
                "relation": relation_class(Generator(*g), Generator(*h)),
                "rhs": str(rhs),
                "passed": ok,
            })
    return {"a": a, "m": m, "n": n, "records": records,
            "passed": all(r["passed"] for r in records)}


def rho_minor(I, J, a, m, n):
    """rho([I|J]) through the final-row expansion, recursively."""
    I, J = tuple(I), tuple(J)
    t = len(I)
    if t == 1:
        return rho_generator(I[0], J[0], a, m, n)
    out = LocalElement(GrassElement([], m, n), 0, a)
    for k in range(1, t + 1):
        sub = rho_minor(I[:-1], J[:k - 1] + J[k:], a, m, n)
        x = rho_generator(I[-1], J[k - 1], a, m, n)
        out = out + local_mul(sub, x) * neg_q_pow(t - k)
    return out


def check_rho_minor(I, J, a, m, n):
    """rho([I|J]) == [Q(I,J)][M]^-1 ?"""
    target = LocalElement(GrassElement.word((q_index_set(I, J, a, m, n),), m, n), 1, a)
    return rho_minor(I, J, a, m, n) == target


def lemma_qijm_terms(I, J, a, m, n):
    """The summands of the final-row identity relating [Q(I,J)][M] to
    products of smaller images, as (coeff, left set, right set)."""
    I, J = tuple(I), tuple(J)
    t = len(I)
    if t < 1 or len(J) != t or t > min(m, n - m):
        raise BadShape(f"need 1 <= |I| = |J| <= min(m, n-m), got {I}|{J}")
    M = consecutive_minor(a, m, n).elems
    terms = [(ONE, q_index_set(I, J, a, m, n), M)]
    it = I[-1]
    for k in range(1, t + 1):
        jk = J[k - 1]
        e = (t - k) - sign(tilde(a + m - it, n), tilde(jk + a + m - 1, n))
        terms.append((
            neg_q_pow(e),
            q_index_set(I[:-1], J[:k - 1] + J[k:], a, m, n),
            q_index_set((it,), (jk,), a, m, n),
        ))
    return terms


def lemma_qijm_check(I, J, a, m, n):
    """Normal form of the identity; zero when it holds."""
    out = NCPoly._raw({}, m, n)
    for c, A, B in lemma_qijm_terms(I, J, a, m, n):
        out = out + minor_product((A, B), m, n) * c
    return out


def verify_generation(a, m, n, degree=2):
    """Is every [J][M]^-1 (J != M) in the span of products of at most
    `degree` generator images? Returns the shortest length that works."""
    _check_a(a, m, n)
    M = consecutive_minor(a, m, n).elems
    gens = [(i, j) for i in range(1, m + 1) for j in range(1, n - m + 1)]
    ech = Echelon()
    for d in range(degree + 1):
        for word in product(gens, repeat=d):
            ech.add(rho_word(word, a, m, n).cleared(degree).terms, word)
    records = []
    for J in combinations(range(1, n + 1), m):
        if J == M:
            continue
        target = LocalElement(GrassElement.word((J,), m, n), 1, a).cleared(degree).terms
        coeffs = ech.express(target)
        needed = max((len(w) for w in coeffs), default=0) if coeffs is not None else None
        records.append({"J": list(J), "reachable": coeffs is not None,
                        "max_word_length": needed})
    return {"a": a, "m": m, "n": n, "degree": degree, "M": list(M),
            "records": records, "passed": all(r["reachable"] for r in records)}


def all_index_pairs(m, n):
    """Index pairs of O_q(M_{m,n-m})."""
    return index_pairs(m, n - m)
