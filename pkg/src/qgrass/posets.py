"""Partial orders on index sets and index pairs, standard monomials,
and the comparison between the two orders under the index map."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

from .grassmann import consecutive_minor, q_index_set, tilde


class Cmp(enum.Enum):
    LESS = "LessEq"
    GREATER = "GreaterEq"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"


@dataclass(frozen=True)
class PosetOrder:
    """kind is 'std' (natural order on Pi), 'cyclic' (<_s on Pi) or
    'delta' (index pairs of M_{m,n})."""

    kind: str
    m: int
    n: int
    s: int = 1

    def __post_init__(self):
        if self.kind not in ("std", "cyclic", "delta"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.kind == "cyclic" and not 1 <= self.s <= self.n:
            raise ValueError(f"s={self.s} outside 1..{self.n}")
        if self.kind != "delta" and self.m > self.n:
            raise ValueError("need m <= n")

    @classmethod
    def parse(cls, text, m, n):
        """'std' or 'cyclic:S'."""
        if text == "std":
            return cls("std", m, n)
        if text.startswith("cyclic:"):
            return cls("cyclic", m, n, int(text.split(":", 1)[1]))
        raise ValueError(f"bad order {text!r}; expected std or cyclic:S")

    def label(self):
        return "std" if self.kind == "std" else f"{self.kind}:{self.s}"

    @property
    def is_pi(self):
        return self.kind in ("std", "cyclic")

    def rank(self, j):
        """Position of column j in the base order (0-based)."""
        if self.kind == "cyclic":
            return (j - self.s) % self.n
        return j - 1

    def key(self, J):
        return tuple(sorted(self.rank(j) for j in J))

    def elements(self):
        if self.kind == "delta":
            return index_pairs(self.m, self.n)
        return list(combinations(range(1, self.n + 1), self.m))


def index_pairs(m, n):
    out = []
    for t in range(1, min(m, n) + 1):
        for I in combinations(range(1, m + 1), t):
            for J in combinations(range(1, n + 1), t):
                out.append((I, J))
    return out


def _le_pi(ord_, A, B):
    return all(a <= b for a, b in zip(ord_.key(A), ord_.key(B)))


def _le_delta(A, B):
    (I, J), (K, L) = A, B
    v = len(K)
    if len(I) < v:
        return False
    return all(I[s] <= K[s] and J[s] <= L[s] for s in range(v))


def le(ord_, A, B):
    """A <= B in the given order."""
    if ord_.kind == "delta":
        return _le_delta(A, B)
    return _le_pi(ord_, A, B)


def lt(ord_, A, B):
    return A != B and le(ord_, A, B)


def leq(ord_, A, B):
    """Four-way comparison of A and B."""
    if ord_.kind == "delta":
        A, B = (tuple(A[0]), tuple(A[1])), (tuple(B[0]), tuple(B[1]))
    else:
        A, B = tuple(sorted(A)), tuple(sorted(B))
        for X in (A, B):
            if len(X) != ord_.m or X[0] < 1 or X[-1] > ord_.n:
                raise ValueError(f"{X} is not an index set for G({ord_.m},{ord_.n})")
    if A == B:
        return Cmp.EQUAL
    if le(ord_, A, B):
        return Cmp.LESS
    if le(ord_, B, A):
        return Cmp.GREATER
    return Cmp.INCOMPARABLE


def enumerate_standard(ord_, degree):
    """All weakly increasing chains of the given length, lexicographic order."""
    if not ord_.is_pi:
        raise ValueError("standard monomials are enumerated on Pi orders only")
    elems = ord_.elements()
    if degree == 0:
        return [()]
    out = []

    def extend(prefix):
        if len(prefix) == degree:
            out.append(tuple(prefix))
            return
        for x in elems:
            if not prefix or le(ord_, prefix[-1], x):
                prefix.append(x)
                extend(prefix)
                prefix.pop()

    extend([])
    return out


def is_standard(ord_, word):
    return all(le(ord_, word[i], word[i + 1]) for i in range(len(word) - 1))


def maximal_element(s, m, n):
    """The consecutive minor at a = (s - m)~, top of the cyclic order <_s."""
    return consecutive_minor(tilde(s - m, n), m, n).elems


def hasse_edges(ord_):
    """Covering relations (lower, upper) of the poset."""
    elems = ord_.elements()
    less = {(a, b) for a in elems for b in elems if lt(ord_, a, b)}
    edges = []
    for a, b in sorted(less):
        if not any((a, c) in less and (c, b) in less for c in elems):
            edges.append((a, b))
    return edges


def check_order_iso(s, m, n):
    """Compare the index-pair order of O_q(M_{m,n-m}) with <_s through Q.

    Returns a dict with the mismatch list (witnesses) and counts.
    """
    a = tilde(s - m, n)
    delta = PosetOrder("delta", m, n - m)
    cyc = PosetOrder("cyclic", m, n, s)
    pairs = index_pairs(m, n - m)
    image = {p: q_index_set(p[0], p[1], a, m, n) for p in pairs}
    mismatches = []
    for p1 in pairs:
        for p2 in pairs:
            d = le(delta, p1, p2)
            c = le(cyc, image[p1], image[p2])
            if d != c:
                mismatches.append(
                    {"pair1": p1, "pair2": p2, "delta_le": d, "cyclic_le": c,
                     "Q1": image[p1], "Q2": image[p2]}
                )
    top = consecutive_minor(a, m, n).elems
    everything = set(combinations(range(1, n + 1), m))
    bijective = len(set(image.values())) == len(pairs) and set(image.values()) == everything - {top}
    top_is_max = all(le(cyc, J, top) for J in everything)
    return {
        "s": s, "a": a, "m": m, "n": n,
        "pairs_compared": len(pairs) ** 2,
        "mismatches": mismatches,
        "bijective_onto_pi_minus_top": bijective,
        "top": top,
        "top_is_maximum": top_is_max,
        "passed": not mismatches and bijective and top_is_max,
    }
