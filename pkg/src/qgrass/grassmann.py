"""Index sets of O_q(G(m,n)): cyclic reduction, consecutive minors,
quasi-commutation and the index map attached to a consecutive minor."""

from __future__ import annotations

from typing import NamedTuple

from .minors import minor_product


class Collision(ValueError):
    pass


def tilde(j, n):
    """The representative of j mod n in 1..n."""
    if n < 1:
        raise ValueError("n must be positive")
    return (j - 1) % n + 1


def sign(i, j):
    return (i < j) - (i > j)


def index_set(elems, m, n):
    J = tuple(sorted(elems))
    if len(J) != m or len(set(J)) != m:
        raise ValueError(f"{elems} is not an {m}-subset")
    if J[0] < 1 or J[-1] > n:
        raise ValueError(f"{elems} not inside 1..{n}")
    return J


class ConsecutiveMinor(NamedTuple):
    a: int
    m: int
    n: int

    @property
    def cyclic(self):
        """Indices in their cyclic order a, a+1, ..., a+m-1 (reduced)."""
        return tuple(tilde(self.a + k, self.n) for k in range(self.m))

    @property
    def elems(self):
        return tuple(sorted(self.cyclic))


def consecutive_minor(a, m, n):
    if not 1 <= a <= n:
        raise ValueError(f"a={a} outside 1..{n}")
    if m > n:
        raise ValueError("need m <= n")
    return ConsecutiveMinor(a, m, n)


def consecutive_minors(m, n):
    return [ConsecutiveMinor(a, m, n) for a in range(1, n + 1)]


def quasi_commute_exponent(A, B, m, n):
    """The integer c with [A][B] = q^c [B][A], or None when no such c exists."""
    ab = minor_product((A, B), m, n)
    ba = minor_product((B, A), m, n)
    if not ba.terms:
        return None
    w = max(ba.terms)
    x = ab.terms.get(w)
    if x is None:
        return None
    y = ba.terms[w]
    try:
        r = x.divexact(y)
    except ArithmeticError:
        return None
    c = r.monomial_exponent()
    if c is None:
        return None
    if ab != ba * r:
        return None
    return c


def q_index_set(I, J, a, m, n):
    """Index set of the maximal minor matched to [I|J] of O_q(M_{m,n-m}).

    With I, J empty this is the consecutive minor at a itself.
    """
    I, J = tuple(I), tuple(J)
    if len(I) != len(J) or len(I) > m:
        raise ValueError(f"bad index pair {I}|{J}")
    if any(not 1 <= i <= m for i in I) or any(not 1 <= j <= n - m for j in J):
        raise ValueError(f"index pair {I}|{J} outside M_{m},{n - m}")
    cols = {tilde(j + a + m - 1, n) for j in J}
    removed = {tilde(a + m - i, n) for i in I}
    base = {tilde(a + k, n) for k in range(m)} - removed
    if len(cols) != len(J) or cols & base or len(cols | base) != m:
        raise Collision(f"Q({I},{J}) collides for a={a}, m={m}, n={n}")
    return tuple(sorted(cols | base))
