import random

import pytest

from katoforge import (DivisionByZero, Laurent, PrecisionExhausted,
                       from_rational, func_field, gf)

from conftest import random_ratfunc


def test_char2_square():
    F2 = gf(2)
    a = Laurent(F2, 0, [F2.one, F2.one], 5)
    sq = a * a
    assert sq == Laurent(F2, 0, [F2.one, F2.zero, F2.one], 5)


def test_valuation_of_product():
    F2 = gf(2)
    u = Laurent(F2, 0, [F2.one, F2.one], 9)
    t3 = Laurent.monomial(F2, F2.one, 3, 9)
    assert (t3 * u).val == 3


def test_geometric_series():
    F2 = gf(2)
    K = func_field(F2, ("t",))
    t = K.var("t")
    g = from_rational(K.one / (K.one - t), 10)
    assert g == Laurent(F2, 0, [F2.one] * 10, 10)


def test_precision_rules():
    F2 = gf(2)
    a = Laurent(F2, 0, [F2.one], 5)
    b = Laurent(F2, 2, [F2.one], 9)
    assert (a + b).prec == 5
    assert (a * b).prec == 7      # min(5 + 2, 9 + 0)
    inv = b.inverse()
    assert inv.val == -2 and inv.prec == 5   # relative precision 7 shifted


def test_coeff_beyond_precision_raises():
    F2 = gf(2)
    a = Laurent(F2, 0, [F2.one], 4)
    with pytest.raises(PrecisionExhausted):
        a.coeff(4)
    assert a.coeff(3) == F2.zero


def test_division_by_zero_to_precision():
    F2 = gf(2)
    z = Laurent.zero(F2, 6)
    with pytest.raises(DivisionByZero):
        Laurent.one(F2, 6) / z


def test_agrees_with_rational_arithmetic():
    rng = random.Random(17)
    for (p, e) in [(2, 1), (3, 1), (2, 2)]:
        K = func_field(gf(p, e), ("t",))
        for _ in range(20):
            a = random_ratfunc(rng, K)
            b = random_ratfunc(rng, K)
            sa, sb = from_rational(a, 14), from_rational(b, 14)
            prod = sa * sb
            assert prod == from_rational(a * b, prod.prec)
            s = sa + sb
            assert s == from_rational(a + b, s.prec)


def test_dlog_of_monomial():
    F3 = gf(3)
    t5 = Laurent.monomial(F3, F3.one, 5, 12)
    dl = t5.dlog()
    assert dl.coeff(-1) == F3.elem(5)


def test_print_parse_shape():
    F2 = gf(2)
    s = Laurent(F2, -2, [F2.one, F2.zero, F2.one], 5)
    assert repr(s) == "t^-2 + 1 + O(t^5)"
