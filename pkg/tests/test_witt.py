import itertools
import random

import pytest

from katoforge import (ResourceLimit, WittVector, func_field, gf, int_to_witt,
                       verify_ghost_identities, witt_as_solve, witt_structure,
                       witt_to_int)
from katoforge.gring import galois_ring
from katoforge.witt import from_galois_ring

from conftest import random_ratfunc


def test_structure_polynomials():
    st = witt_structure(2, 2)
    # S_0 = a_0 + b_0, P_0 = a_0 b_0, S_1 = a_1 + b_1 - a_0 b_0
    assert st.sums[0] == {(1, 0, 0, 0): 1, (0, 0, 1, 0): 1}
    assert st.prods[0] == {(1, 0, 1, 0): 1}
    assert st.sums[1] == {(0, 1, 0, 0): 1, (0, 0, 0, 1): 1, (1, 0, 1, 0): -1}


@pytest.mark.parametrize("p,i", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2),
                                 (3, 3)])
def test_ghost_identities(p, i):
    assert verify_ghost_identities(p, i)


def test_resource_bound():
    with pytest.raises(ResourceLimit):
        witt_structure(2, 40)


def test_w2f2_examples():
    F2 = gf(2)
    one, zero = F2.one, F2.zero
    w = WittVector(2, (one, zero))
    assert w + w == WittVector(2, (zero, one))
    z = WittVector(2, (zero, zero))
    assert w + z == w
    # additive order 4
    orders = [witt_to_int(w.int_mul(m)) for m in range(5)]
    assert orders == [0, 1, 2, 3, 0]


def test_cache_roundtrip(tmp_path):
    st = witt_structure(3, 2)
    text = st.to_text()
    assert text.splitlines()[0] == "WITTPOLY v1 p=3 i=2"
    from katoforge.witt import WittStructure
    st2 = WittStructure.from_text(text)
    assert st2.sums == st.sums and st2.prods == st.prods \
        and st2.negs == st.negs


@pytest.mark.parametrize("p,i,e", [(2, 2, 1), (2, 3, 2), (3, 2, 2),
                                   (3, 3, 1)])
def test_ring_laws(p, i, e):
    F = gf(p, e)
    rng = random.Random(p * 100 + i * 10 + e)
    els = list(F.elements())
    for _ in range(40):
        u, v, w = (WittVector(p, tuple(rng.choice(els) for _ in range(i)))
                   for _ in range(3))
        assert (u + v) + w == u + (v + w)
        assert u + v == v + u
        assert (u * v) * w == u * (v * w)
        assert u * (v + w) == u * v + u * w
        assert u - v == u + (-v)


def test_frobenius_verschiebung():
    F4 = gf(2, 2)
    rng = random.Random(2)
    els = list(F4.elements())
    for i in (2, 3):
        for _ in range(25):
            x = WittVector(2, tuple(rng.choice(els) for _ in range(i)))
            y = WittVector(2, tuple(rng.choice(els) for _ in range(i)))
            # F(V(x)) = p * x
            assert x.verschiebung().frobenius() == x.int_mul(2)
            assert x.verschiebung().frobenius() == x.frobenius().verschiebung()
            # V(F(x) y) = x V(y)
            assert (x.frobenius() * y).verschiebung() == \
                x * y.verschiebung()


def test_wp_trivial_on_prime_field():
    F2 = gf(2)
    for coords in itertools.product([F2.zero, F2.one], repeat=3):
        w = WittVector(2, coords)
        assert w.wp() == WittVector(2, (F2.zero,) * 3)


def test_teichmuller_order():
    for (p, i) in [(2, 3), (3, 2), (2, 4)]:
        F = gf(p)
        t = WittVector.teichmuller(p, F.one, i)
        acc = t
        order = 1
        zero = WittVector(p, (F.zero,) * i)
        while acc != zero:
            acc = acc + t
            order += 1
        assert order == p ** i


def test_trace_example():
    F4 = gf(2, 2)
    w = WittVector(2, (F4.gen, F4.zero))
    assert w.trace() == WittVector(2, (F4.one, F4.one))
    assert w.trace_int() == 3
    zero = WittVector(2, (F4.zero, F4.zero))
    assert zero.trace_int() == 0


def test_trace_kills_wp_exhaustive():
    F4 = gf(2, 2)
    for coords in itertools.product(list(F4.elements()), repeat=2):
        w = WittVector(2, coords)
        assert w.wp().trace_int() == 0


@pytest.mark.parametrize("q,e,i", [(2, 1, 3), (2, 1, 5), (4, 2, 2),
                                   (3, 1, 3), (9, 2, 2)])
def test_as_solve_exhaustive(q, e, i):
    p = 2 if q in (2, 4) else 3
    F = gf(p, e)
    classes = set()
    solvable = 0
    for coords in itertools.product(list(F.elements()), repeat=i):
        v = WittVector(p, coords)
        tr = v.trace_int()
        w = witt_as_solve(v)
        assert (w is not None) == (tr == 0)
        if w is not None:
            solvable += 1
            assert w.wp() == v
        classes.add(tr)
    total = F.order ** i
    assert len(classes) == p ** i            # the quotient has p^i classes
    assert solvable == total // p ** i


def test_int_conversion_roundtrip():
    for (p, i) in [(2, 3), (3, 2), (2, 8)]:
        for m in range(p ** i):
            assert witt_to_int(int_to_witt(p, m, i)) == m


def test_galois_ring_agrees_with_universal():
    for (p, e, i) in [(2, 1, 3), (2, 2, 2), (3, 1, 2), (3, 2, 2)]:
        F = gf(p, e)
        R = galois_ring(F, i)
        rng = random.Random(p + e + i)
        els = list(F.elements())
        for _ in range(30):
            u = WittVector(p, tuple(rng.choice(els) for _ in range(i)))
            v = WittVector(p, tuple(rng.choice(els) for _ in range(i)))
            assert from_galois_ring(R, u.to_galois_ring(R) + v.to_galois_ring(R),
                                    p, i) == u + v
            assert from_galois_ring(R, u.to_galois_ring(R) * v.to_galois_ring(R),
                                    p, i) == u * v


def test_witt_over_function_field():
    # the universal polynomials drive arithmetic over F_q(t) coordinates
    K = func_field(gf(2), ("t",))
    rng = random.Random(4)
    for _ in range(10):
        u = WittVector(2, (random_ratfunc(rng, K), random_ratfunc(rng, K)))
        v = WittVector(2, (random_ratfunc(rng, K), random_ratfunc(rng, K)))
        assert u + v == v + u
        assert (u + v) - v == u
        assert u.wp() == u.frobenius() - u
