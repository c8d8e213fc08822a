import random

import pytest

from katoforge import (ASExtension, DegreeMismatch, MilnorElement,
                       NormShapeUnsupported, d_symbol, dlog, func_field, gf,
                       kn_equal, symbol_expand)

from conftest import random_ratfunc


def _sym(field, entries, coeff=1):
    return MilnorElement.symbol(field, entries, coeff)


def test_steinberg_and_bilinearity():
    F2 = gf(2)
    K = func_field(F2, ("t",))
    t = K.var("t")
    assert symbol_expand(_sym(K, [t, K.one - t])).is_formally_zero()
    assert d_symbol(_sym(K, [t, K.one - t])).is_zero()
    F3 = gf(3)
    M = func_field(F3, ("t", "y"))
    tm, ym = M.var("t"), M.var("y")
    expanded = symbol_expand(_sym(M, [tm * tm, ym]))
    assert expanded.terms == {(tm, ym): 2}


def test_repeated_slot_drops():
    K = func_field(gf(2), ("x", "y"))
    x = K.var("x")
    assert symbol_expand(_sym(K, [x, x])).is_formally_zero()
    K3 = func_field(gf(3), ("x", "y"))
    x3 = K3.var("x")
    # {a,a} = {-1,a} and -1 = (-1)^3: dead mod 3
    assert d_symbol(_sym(K3, [x3, x3])).is_zero()


def test_d_symbol_examples():
    F2 = gf(2)
    L = func_field(F2, ("x", "y"))
    x, y = L.var("x"), L.var("y")
    assert d_symbol(_sym(L, [x, y])) == dlog(x).wedge(dlog(y))
    K = func_field(F2, ("t",))
    t = K.var("t")
    assert d_symbol(_sym(K, [t, t + K.one])).is_zero()   # Omega^2 = 0


def test_kn_equal_characteristic_split():
    L2 = func_field(gf(2), ("x", "y"))
    x, y = L2.var("x"), L2.var("y")
    assert kn_equal(_sym(L2, [x, y]), _sym(L2, [y, x]))
    L3 = func_field(gf(3), ("x", "y"))
    x3, y3 = L3.var("x"), L3.var("y")
    assert not kn_equal(_sym(L3, [x3, y3]), _sym(L3, [y3, x3]))
    s = _sym(L3, [x3, y3])
    assert kn_equal(s, s + s.int_mul(3))


def test_degree_mismatch():
    K = func_field(gf(2), ("t",))
    t = K.var("t")
    with pytest.raises(DegreeMismatch):
        kn_equal(_sym(K, [t]), _sym(K, [t, t + K.one]))


def test_expand_preserves_d_symbol():
    rng = random.Random(19)
    for (p, e, vars) in [(2, 1, ("t",)), (3, 1, ("x", "y")),
                         (2, 2, ("t",))]:
        K = func_field(gf(p, e), vars)
        for _ in range(20):
            entries = [random_ratfunc(rng, K, max_deg=2)
                       for _ in range(min(2, K.k))]
            s = _sym(K, entries)
            assert d_symbol(symbol_expand(s)) == d_symbol(s)
            img = d_symbol(s)
            assert img.is_zero() or img.is_logarithmic()


def test_as_extension_basics():
    F2 = gf(2)
    K = func_field(F2, ("t",))
    ext = ASExtension(K)
    u = ext.u
    t = K.var("t")
    # N(u) = u(u+1) = t
    assert ext.norm_rf(u) == t
    # sigma has order p and fixes restrictions
    a = ext.restrict_rf((t ** 2 + t) / (t + K.one))
    assert ext.sigma_rf(a) == a
    s = ext.sigma_rf(ext.sigma_rf(u))
    assert s == u
    # (1 - sigma){u} = {u} - {u+1} = {u/(u+1)} in k_1
    oms = ext.one_minus_sigma(MilnorElement.symbol(ext.L, [u]))
    quot = MilnorElement.symbol(ext.L, [u / (u + ext.L.one)])
    assert kn_equal(oms, quot)


def test_norm_projection_formula():
    F2 = gf(2)
    K = func_field(F2, ("t",))
    t = K.var("t")
    ext = ASExtension(K)
    u = ext.u
    b = ext.restrict_rf(t + K.one)
    out = ext.norm_proj(MilnorElement.symbol(ext.L, [u, b]))
    assert out.terms == {(t, t + K.one): 1}


def test_norm_shape_guard():
    ext = ASExtension(func_field(gf(2), ("t",)))
    u = ext.u
    with pytest.raises(NormShapeUnsupported):
        ext.norm_proj(MilnorElement.symbol(ext.L, [u, u + ext.L.one]))


@pytest.mark.parametrize("p", [2, 3])
def test_norm_kills_one_minus_sigma(p):
    K = func_field(gf(p), ("t",))
    ext = ASExtension(K)
    rng = random.Random(p)
    done = 0
    while done < 25:
        a = random_ratfunc(rng, ext.L, max_deg=2)
        b = ext.restrict_rf(random_ratfunc(rng, K, max_deg=2))
        if a.is_zero() or b.is_zero():
            continue
        done += 1
        x = MilnorElement.symbol(ext.L, [a, b])
        comp = ext.norm_proj(ext.one_minus_sigma(x))
        assert kn_equal(comp, MilnorElement.zero(K, 2))


def test_restrict_then_one_minus_sigma_zero():
    for p in (2, 3):
        K = func_field(gf(p), ("t",))
        ext = ASExtension(K)
        rng = random.Random(p + 10)
        for _ in range(10):
            a = random_ratfunc(rng, K, max_deg=2)
            if a.is_zero():
                continue
            x = ext.restrict(MilnorElement.symbol(K, [a]))
            assert ext.one_minus_sigma(x).is_formally_zero()
