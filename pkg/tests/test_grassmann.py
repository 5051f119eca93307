from itertools import combinations

import pytest

from qgrass.grassmann import (
    Collision,
    consecutive_minors,
    q_index_set,
    quasi_commute_exponent,
    sign,
    tilde,
)
from qgrass.minors import minor_product
from qgrass.coeff import LaurentPoly


@pytest.mark.parametrize("j, n, expected", [(5, 4, 1), (4, 4, 4), (8, 4, 4), (0, 4, 4), (-1, 4, 3)])
def test_tilde(j, n, expected):
    assert tilde(j, n) == expected


def test_tilde_periodic():
    for n in range(1, 7):
        for j in range(-20, 20):
            assert tilde(j + n, n) == tilde(j, n)
            assert 1 <= tilde(j, n) <= n


def test_consecutive_minors():
    assert [c.elems for c in consecutive_minors(2, 4)] == [(1, 2), (2, 3), (3, 4), (1, 4)]
    assert [c.elems for c in consecutive_minors(1, 3)] == [(1,), (2,), (3,)]
    six = consecutive_minors(3, 6)
    assert len(six) == 6 and all(len(set(c.elems)) == 3 for c in six)


def test_quasi_commute_examples():
    assert quasi_commute_exponent((1, 2), (1, 3), 2, 4) == 1
    assert quasi_commute_exponent((1, 4), (2, 3), 2, 4) == 0
    assert quasi_commute_exponent((1, 3), (2, 4), 2, 4) is None
    assert quasi_commute_exponent((1, 2), (3, 4), 2, 4) == 2


@pytest.mark.parametrize("m,n", [(2, 4), (2, 5), (3, 6)])
def test_consecutive_minors_quasi_commute(m, n):
    for M in consecutive_minors(m, n):
        for J in combinations(range(1, n + 1), m):
            c = quasi_commute_exponent(M.elems, J, m, n)
            assert c is not None
            assert minor_product((M.elems, J), m, n) == minor_product((J, M.elems), m, n) * LaurentPoly.q(c)


@pytest.mark.parametrize("I, J, expected", [((1,), (1,), (2, 4)), ((1, 2), (1, 2), (2, 3)), ((2,), (2,), (1, 3))])
def test_q_index_set_examples(I, J, expected):
    assert q_index_set(I, J, 4, 2, 4) == expected


@pytest.mark.parametrize("m,n", [(2, 4), (2, 5)])
def test_q_index_set_injective(m, n):
    for a in range(1, n + 1):
        seen = set()
        for t in range(1, min(m, n - m) + 1):
            for I in combinations(range(1, m + 1), t):
                for J in combinations(range(1, n - m + 1), t):
                    Q = q_index_set(I, J, a, m, n)
                    assert len(Q) == m and Q not in seen
                    seen.add(Q)


def test_q_index_set_rejects_out_of_range():
    with pytest.raises(ValueError):
        q_index_set((1,), (3,), 1, 2, 4)


def test_collision_type():
    assert issubclass(Collision, ValueError)


@pytest.mark.parametrize("i, j, expected", [(1, 3, 1), (3, 3, 0), (4, 2, -1)])
def test_sign(i, j, expected):
    assert sign(i, j) == expected
