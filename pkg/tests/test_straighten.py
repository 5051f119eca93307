from itertools import product

import pytest

from qgrass.coeff import LaurentPoly, RationalFunction
from qgrass.grassmann import quasi_commute_exponent
from qgrass.minors import minor_product
from qgrass.posets import PosetOrder, enumerate_standard, is_standard
from qgrass.qmatrix import NCPoly
from qgrass.straighten import (
    GrassElement,
    commutation_scalar,
    expand_in_standard_basis,
    verify_condition3,
    verify_condition4,
    verify_condition5,
    verify_qgasl,
    verify_spanning,
)

STD = PosetOrder("std", 2, 4)
CYC2 = PosetOrder("cyclic", 2, 4, 2)


def R(d):
    return RationalFunction(LaurentPoly(d))


def word(*Js):
    return GrassElement.word(Js, 2, 4)


def as_dict(terms):
    return {mono: c for c, mono in terms}


def test_already_standard():
    assert as_dict(expand_in_standard_basis(word((1, 3), (2, 4)), STD)) == {((1, 3), (2, 4)): R({0: 1})}


def test_plucker_straightening():
    got = as_dict(expand_in_standard_basis(word((1, 4), (2, 3)), STD))
    assert got == {((1, 3), (2, 4)): R({-1: 1}), ((1, 2), (3, 4)): R({-2: -1})}


def test_cyclic_straightening():
    got = as_dict(expand_in_standard_basis(word((1, 2), (3, 4)), CYC2))
    assert got == {((2, 4), (1, 3)): R({1: 1}), ((2, 3), (1, 4)): R({0: -1})}


def test_expansion_reproduces_product():
    for order in (STD, CYC2):
        for a, b in product(order.elements(), repeat=2):
            terms = expand_in_standard_basis(word(a, b), order)
            # clear denominators and compare in O_q(M_{2,4})
            den = LaurentPoly(1)
            for c, _ in terms:
                den = den * c.den
            lhs = minor_product((a, b), 2, 4) * den
            rhs = NCPoly(None, 2, 4)
            for c, mono in terms:
                rhs = rhs + minor_product(mono, 2, 4) * (c * den).as_laurent()
            assert lhs == rhs


@pytest.mark.parametrize("order", [STD, CYC2, PosetOrder("cyclic", 2, 5, 4)])
def test_projection_on_standard_monomials(order):
    for mono in enumerate_standard(order, 2):
        got = expand_in_standard_basis(GrassElement.word(mono, order.m, order.n), order)
        assert got == [(RationalFunction(1), mono)]


def test_condition3_ranks():
    assert verify_condition3(STD, 2)["rank"] == 20
    assert verify_condition3(CYC2, 2)["rank"] == 20
    for s in range(1, 6):
        assert verify_condition3(PosetOrder("cyclic", 2, 5, s), 2)["passed"]


def test_condition4_examples():
    r = verify_condition4(STD)
    pairs = {(p["alpha"], p["beta"]): p for p in r["pairs"]}
    assert set(pairs) == {((1, 4), (2, 3)), ((2, 3), (1, 4))}
    assert {m for _, m in pairs[((1, 4), (2, 3))]["expansion"]} == {"[12][34]", "[13][24]"}
    r2 = verify_condition4(CYC2)
    pairs2 = {(p["alpha"], p["beta"]): p for p in r2["pairs"]}
    assert {m for _, m in pairs2[((1, 2), (3, 4))]["expansion"]} == {"[24][13]", "[23][14]"}
    assert r["passed"] and r2["passed"]
    for s in range(1, 6):
        assert verify_condition4(PosetOrder("cyclic", 2, 5, s))["passed"]


def test_condition5_scalars():
    c, rem, _ = commutation_scalar(STD, (1, 2), (3, 4))
    assert c == R({2: 1}) and rem == {}
    # the remainder of [13][24] - c[24][13] must sit below both factors,
    # which forces c = q^2 and leaves (q^-1 - q)[12][34]
    c, rem, _ = commutation_scalar(STD, (1, 3), (2, 4))
    assert c == R({2: 1})
    assert rem == {((1, 2), (3, 4)): R({-1: 1, 1: -1})}


def test_condition5_top_element_quasi_commutes():
    for beta in CYC2.elements():
        c, rem, _ = commutation_scalar(CYC2, (1, 4), beta)
        assert rem == {}
        assert c == RationalFunction(LaurentPoly.q(quasi_commute_exponent((1, 4), beta, 2, 4)))


def test_condition5_all_pairs():
    for order in (STD, CYC2):
        r = verify_condition5(order)
        assert r["passed"]
        assert not any(p["anomaly"] for p in r["pairs"])


@pytest.mark.parametrize("order,degree", [(STD, 3), (CYC2, 3), (PosetOrder("cyclic", 2, 5, 2), 2)])
def test_standard_monomials_form_a_basis(order, degree):
    for d in range(1, degree + 1):
        r = verify_spanning(order, d)
        assert r["passed"], r
        assert r["rank_all_products"] == r["standard"]


def test_qgasl_all_s_small():
    for s in range(1, 5):
        assert verify_qgasl(PosetOrder("cyclic", 2, 4, s), 2)["passed"]


def test_is_standard():
    assert is_standard(CYC2, ((2, 3), (1, 4)))
    assert not is_standard(CYC2, ((1, 4), (2, 3)))
