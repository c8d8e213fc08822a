import random

import pytest

from katoforge import MPoly, func_field, gf


def random_mpoly(rng, base, nvars, max_deg=3, max_terms=3):
    terms = {}
    els = list(base.elements())
    for _ in range(rng.randint(1, max_terms)):
        mono = tuple(rng.randint(0, max_deg) for _ in range(nvars))
        terms[mono] = rng.choice(els)
    return MPoly(base, nvars, terms)


def random_ratfunc(rng, field, max_deg=3, max_terms=3):
    base = field.base
    num = random_mpoly(rng, base, field.k, max_deg, max_terms)
    while num.is_zero():
        num = random_mpoly(rng, base, field.k, max_deg, max_terms)
    den = random_mpoly(rng, base, field.k, max_deg, max_terms)
    while den.is_zero():
        den = random_mpoly(rng, base, field.k, max_deg, max_terms)
    return field.from_poly(num, den)


@pytest.fixture
def rng():
    return random.Random(20240801)


@pytest.fixture
def F2():
    return gf(2)


@pytest.fixture
def F3():
    return gf(3)


@pytest.fixture
def F4():
    return gf(2, 2)


@pytest.fixture
def K2t():
    return func_field(gf(2), ("t",))
