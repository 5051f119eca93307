"""Quantum minors, the inversion statistic, Pluecker and Muir identities."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import NamedTuple

from .coeff import ONE, LaurentPoly, neg_q_pow
from .qmatrix import Generator, NCPoly, _acc, normal_form_terms


class IndexPair(NamedTuple):
    rows: tuple
    cols: tuple

    def __str__(self):
        return f"[{','.join(map(str, self.rows))}|{','.join(map(str, self.cols))}]"


class BadShape(ValueError):
    pass


class TooSmall(ValueError):
    pass


class NotARelation(ValueError):
    pass


def index_pair(rows, cols, m=None, n=None):
    rows, cols = tuple(rows), tuple(cols)
    if len(rows) != len(cols) or not rows:
        raise BadShape(f"index pair needs equal nonempty sizes, got {rows}|{cols}")
    if list(rows) != sorted(set(rows)) or list(cols) != sorted(set(cols)):
        raise BadShape(f"indices must be strictly increasing: {rows}|{cols}")
    if m is not None and not (rows[0] >= 1 and rows[-1] <= m):
        raise BadShape(f"rows {rows} outside 1..{m}")
    if n is not None and not (cols[0] >= 1 and cols[-1] <= n):
        raise BadShape(f"cols {cols} outside 1..{n}")
    return IndexPair(rows, cols)


def ell(I, J):
    """Number of pairs (i, j) in I x J with i > j."""
    return sum(1 for i in I for j in J if i > j)


def inversions(perm):
    return sum(1 for a, b in combinations(perm, 2) if a > b)


@lru_cache(maxsize=None)
def _minor_terms(rows, cols):
    terms = {}
    t = len(rows)
    for sigma in permutations(range(t)):
        word = tuple(Generator(rows[sigma[k]], cols[k]) for k in range(t))
        _acc(terms, word, neg_q_pow(inversions(sigma)))
    return normal_form_terms(terms)


def quantum_minor(p, m=None, n=None):
    """[I|J] as the signed permutation sum, in normal form."""
    rows, cols = p
    if m is None:
        m = max(rows)
    if n is None:
        n = max(cols)
    return NCPoly._raw(dict(_minor_terms(tuple(rows), tuple(cols))), m, n)


def formal_minor(rows, cols, m, n):
    """Permutation-sum expansion for an arbitrary column list (repeats allowed)."""
    terms = {}
    t = len(rows)
    for sigma in permutations(range(t)):
        word = tuple(Generator(rows[sigma[k]], cols[k]) for k in range(t))
        _acc(terms, word, neg_q_pow(inversions(sigma)))
    return NCPoly._raw(normal_form_terms(terms), m, n)


def laplace_last_row(p, m=None, n=None):
    """[I|J] by recursive expansion along the final row."""
    rows, cols = tuple(p[0]), tuple(p[1])
    t = len(rows)
    if t < 2:
        raise TooSmall("final-row expansion needs t >= 2")
    if m is None:
        m = max(rows)
    if n is None:
        n = max(cols)
    return _laplace(rows, cols, m, n)


def _laplace(rows, cols, m, n):
    t = len(rows)
    if t == 1:
        return NCPoly.gen(rows[0], cols[0], m, n)
    out = NCPoly._raw({}, m, n)
    for k in range(1, t + 1):
        sub = _laplace(rows[:-1], cols[:k - 1] + cols[k:], m, n)
        x = NCPoly.gen(rows[-1], cols[k - 1], m, n)
        out = out + (sub * x) * neg_q_pow(t - k)
    return out


# -- maximal minors in the grassmannian -------------------------------------

def max_minor(J, m, n):
    """The m x m minor [J] with row set 1..m, as an element of O_q(M_{m,n})."""
    J = tuple(J)
    if len(J) != m:
        raise BadShape(f"maximal minor needs {m} columns, got {J}")
    return quantum_minor((tuple(range(1, m + 1)), J), m, n)


@lru_cache(maxsize=None)
def _minor_word(word, m, n):
    out = NCPoly.one(m, n)
    for J in word:
        out = out * max_minor(J, m, n)
    return out


def minor_product(word, m, n):
    """[J_1][J_2]...[J_d] in normal form. Cached; do not mutate the result."""
    return _minor_word(tuple(tuple(J) for J in word), m, n)


def has_repeat(cols):
    return len(set(cols)) != len(cols)


class PluckerInstance(NamedTuple):
    J1: tuple
    J2: tuple
    K: tuple
    m: int
    n: int


def plucker_instance(J1, J2, K, m, n):
    J1, J2, K = (tuple(sorted(x)) for x in (J1, J2, K))
    if len(J1) > m or len(J2) > m:
        raise BadShape("|J1|, |J2| must be at most m")
    if len(K) != 2 * m - len(J1) - len(J2) or len(K) <= m:
        raise BadShape("need |K| = 2m - |J1| - |J2| > m")
    for S in (J1, J2, K):
        if has_repeat(S) or any(not 1 <= j <= n for j in S):
            raise BadShape(f"bad index set {S} for n={n}")
    return PluckerInstance(J1, J2, K, m, n)


def plucker_terms(inst):
    """The nonvanishing summands: list of (coeff, left index set, right index set)."""
    J1, J2, K, m, n = inst
    out = []
    for K1 in combinations(K, m - len(J1)):
        K2 = tuple(k for k in K if k not in K1)
        left = J1 + K1
        right = K2 + J2
        if has_repeat(left) or has_repeat(right):
            continue
        e = ell(J1, K1) + ell(K1, K2) + ell(K2, J2)
        out.append((neg_q_pow(e), tuple(sorted(left)), tuple(sorted(right))))
    return out


def plucker_sum(inst):
    """Normal form of the generalised quantum Pluecker sum; should vanish identically."""
    if not isinstance(inst, PluckerInstance):
        inst = plucker_instance(*inst)
    return relation_value(plucker_terms(inst), inst.m, inst.n)


def plucker_instances(m, n):
    """Every valid (J1, J2, K) for the ambient (m, n)."""
    cols = range(1, n + 1)
    for a in range(m + 1):
        for b in range(m + 1):
            k = 2 * m - a - b
            if k <= m or k > n:
                continue
            for J1 in combinations(cols, a):
                for J2 in combinations(cols, b):
                    for K in combinations(cols, k):
                        yield PluckerInstance(J1, J2, K, m, n)


def relation_value(relation, m, n):
    """Evaluate sum c*[I][J] (or longer words) as an NCPoly."""
    out = NCPoly._raw({}, m, n)
    for c, *word in relation:
        c = LaurentPoly(c) if not isinstance(c, LaurentPoly) else c
        out = out + minor_product(word, m, n) * c
    return out


def muir_extend(relation, P, n, m=None):
    """Adjoin the complement of P to every minor of a vanishing relation.

    relation: list of (coeff, I, J) with I, J subsets of P, vanishing in
    O_q(G(m, n)). Returns the extended relation, checked to vanish in
    O_q(G(m + |complement|, n)).
    """
    P = set(P)
    if m is None:
        m = len(relation[0][1])
    for _, I, J in relation:
        if not (set(I) <= P and set(J) <= P):
            raise BadShape(f"minors {I}, {J} not inside P={sorted(P)}")
    if not relation_value(relation, m, n).is_zero():
        raise NotARelation("input does not vanish")
    Pbar = tuple(j for j in range(1, n + 1) if j not in P)
    if not Pbar:
        return list(relation)
    out = [
        (c, tuple(sorted(set(I) | set(Pbar))), tuple(sorted(set(J) | set(Pbar))))
        for c, I, J in relation
    ]
    m2 = m + len(Pbar)
    if not relation_value(out, m2, n).is_zero():
        raise NotARelation("extended relation does not vanish")
    return out
