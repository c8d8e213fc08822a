"""Witt vectors of length i over characteristic-p coefficient rings.

The ring structure comes from the universal sum/product polynomials, solved
from the ghost equations over exact rationals; every division by a p-power
must be exact (IntegralityViolation otherwise, which would mean a bug).
Structures are cached in memory and, when a cache directory is configured,
on disk as ``wittpoly-v1-p{p}-i{i}.txt``:

    WITTPOLY v1 p=<p> i=<i>
    POLY S 0
    <coefficient> <2i exponents: a_0..a_{i-1} b_0..b_{i-1}>
    ...
    POLY P 0
    ...
    POLY N 0        (negation; derived, stored for completeness)

Coefficient universes only need +, -, * (including by int) and ** with int
exponents: field elements, rational functions, and truncated Laurent series
all qualify.  For finite coefficient fields beyond the universal-polynomial
resource bound, arithmetic runs through the canonical Galois-ring digit
isomorphism instead; both engines agree on the overlap (tested).
"""

import os
import tempfile
from fractions import Fraction

from .errors import (ConfigMismatch, IntegralityViolation, NonPrime,
                     ResourceLimit)
from .gf import GFElem, is_prime
from .gring import galois_ring

# finite-field arithmetic switches to the Galois-ring engine above this level
UNIVERSAL_FINITE_MAX = 4

_CACHE_DIR = os.environ.get("KATOFORGE_CACHE")
_memory_cache = {}


def set_cache_dir(path):
    global _CACHE_DIR
    _CACHE_DIR = path


# ------------------------------------------------------------ qpoly ----

class _QPoly:
    """Sparse polynomial with Fraction coefficients, fixed variable count."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def var(cls, n, j):
        e = tuple(1 if i == j else 0 for i in range(n))
        return cls(n, {e: Fraction(1)})

    @classmethod
    def const(cls, n, c):
        return cls(n, {(0,) * n: Fraction(c)})

    def __add__(self, other):
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, Fraction(0)) + c
        return _QPoly(self.n, t)

    def __sub__(self, other):
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, Fraction(0)) - c
        return _QPoly(self.n, t)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return _QPoly(self.n, {e: c * other for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return _QPoly(self.n, out)

    def __pow__(self, k):
        result = _QPoly.const(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def eval_polys(self, values):
        """Substitute a _QPoly for each variable."""
        n = values[0].n
        out = _QPoly.const(n, 0)
        for e, c in self.terms.items():
            term = _QPoly.const(n, c)
            for j, exp in enumerate(e):
                if exp:
                    term = term * values[j] ** exp
            out = out + term
        return out

    def as_int_terms(self):
        out = {}
        for e, c in self.terms.items():
            if c.denominator != 1:
                raise IntegralityViolation(
                    f"non-integral coefficient {c} in a structure polynomial")
            out[e] = int(c)
        return out


def _ghost_qpoly(p, nvars, offset, n):
    """w_n(x) = sum_{j<=n} p^j x_j^(p^(n-j)) with x_j at offset+j."""
    out = _QPoly.const(nvars, 0)
    for j in range(n + 1):
        out = out + _QPoly.var(nvars, offset + j) ** (p ** (n - j)) * (p ** j)
    return out


def max_structure_level(p):
    """Largest supported length for universal polynomial generation."""
    i = 1
    while p ** i <= 32:
        i += 1
    return i + 1   # p=2 -> 6, p=3 -> 4, p=5 -> 3, p=7 -> 2


def _generate(p, i):
    nv = 2 * i
    A = [_QPoly.var(nv, j) for j in range(i)]
    B = [_QPoly.var(nv, i + j) for j in range(i)]
    S = []
    for n in range(i):
        poly = A[n] + B[n]
        for j in range(n):
            q = p ** (n - j)
            poly = poly + (A[j] ** q + B[j] ** q - S[j] ** q) * Fraction(1, q)
        S.append(poly)
    P = []
    for n in range(i):
        num = _ghost_qpoly(p, nv, 0, n) * _ghost_qpoly(p, nv, i, n)
        for j in range(n):
            num = num - P[j] ** (p ** (n - j)) * (p ** j)
        P.append(num * Fraction(1, p ** n))
    N = []
    for n in range(i):
        poly = _QPoly.const(nv, 0) - A[n]
        for j in range(n):
            q = p ** (n - j)
            poly = poly - (N[j] ** q + A[j] ** q) * Fraction(1, q)
        N.append(poly)
    return ([s.as_int_terms() for s in S],
            [q.as_int_terms() for q in P],
            [m.as_int_terms() for m in N])


class WittStructure:
    """Universal sum/product/negation polynomials for W_i over char p."""

    def __init__(self, p, i, sums, prods, negs):
        self.p = p
        self.i = i
        self.sums = sums
        self.prods = prods
        self.negs = negs

    def __repr__(self):
        return f"WittStructure(p={self.p}, i={self.i})"

    def to_text(self):
        lines = [f"WITTPOLY v1 p={self.p} i={self.i}"]
        for tag, polys in (("S", self.sums), ("P", self.prods),
                           ("N", self.negs)):
            for n, terms in enumerate(polys):
                lines.append(f"POLY {tag} {n}")
                for e in sorted(terms):
                    lines.append(str(terms[e]) + " " + " ".join(map(str, e)))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        lines = [ln for ln in text.splitlines() if ln.strip()]
        head = lines[0].split()
        assert head[0] == "WITTPOLY" and head[1] == "v1"
        p = int(head[2].split("=")[1])
        i = int(head[3].split("=")[1])
        polys = {"S": [None] * i, "P": [None] * i, "N": [None] * i}
        cur = None
        for ln in lines[1:]:
            parts = ln.split()
            if parts[0] == "POLY":
                cur = polys[parts[1]][int(parts[2])] = {}
            else:
                cur[tuple(int(x) for x in parts[1:])] = int(parts[0])
        return cls(p, i, polys["S"], polys["P"], polys["N"])


def _cache_filename(p, i):
    return f"wittpoly-v1-p{p}-i{i}.txt"


def witt_structure(p, i, cache_dir=None):
    """The structure for W_i over char p, generated or loaded from cache."""
    if not is_prime(p):
        raise NonPrime(p)
    if i < 1:
        raise ResourceLimit("Witt length must be >= 1")
    if i > max_structure_level(p):
        raise ResourceLimit(
            f"universal polynomials for p={p}, i={i} exceed the bound "
            f"(max i={max_structure_level(p)})")
    key = (p, i)
    cdir = cache_dir or _CACHE_DIR
    if key in _memory_cache:
        struct = _memory_cache[key]
        if cdir and not os.path.exists(os.path.join(cdir,
                                                    _cache_filename(p, i))):
            _atomic_write(os.path.join(cdir, _cache_filename(p, i)),
                          struct.to_text())
        return struct
    struct = None
    if cdir:
        path = os.path.join(cdir, _cache_filename(p, i))
        if os.path.exists(path):
            try:
                with open(path) as fh:
                    struct = WittStructure.from_text(fh.read())
            except Exception:
                struct = None
    if struct is None:
        struct = WittStructure(p, i, *_generate(p, i))
        if cdir:
            _atomic_write(os.path.join(cdir, _cache_filename(p, i)),
                          struct.to_text())
    _memory_cache[key] = struct
    return struct


def _atomic_write(path, text):
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path) or ".",
                               prefix=".wittpoly-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def verify_ghost_identities(p, i):
    """Exact integer-polynomial check: ghost(S) = ghost(a)+ghost(b),
    ghost(P) = ghost(a)*ghost(b), ghost(N) = -ghost(a)."""
    struct = witt_structure(p, i)
    nv = 2 * i
    Sq = [_QPoly(nv, {e: Fraction(c) for e, c in s.items()})
          for s in struct.sums]
    Pq = [_QPoly(nv, {e: Fraction(c) for e, c in s.items()})
          for s in struct.prods]
    Nq = [_QPoly(nv, {e: Fraction(c) for e, c in s.items()})
          for s in struct.negs]
    for n in range(i):
        ga = _ghost_qpoly(p, nv, 0, n)
        gb = _ghost_qpoly(p, nv, i, n)
        gS = _ghost_of(p, Sq, n)
        if (gS - (ga + gb)).terms:
            return False
        gP = _ghost_of(p, Pq, n)
        if (gP - ga * gb).terms:
            return False
        gN = _ghost_of(p, Nq, n)
        if (gN + ga).terms:
            return False
    return True


def _ghost_of(p, polys, n):
    nv = polys[0].n
    out = _QPoly.const(nv, 0)
    for j in range(n + 1):
        out = out + polys[j] ** (p ** (n - j)) * (p ** j)
    return out


# ------------------------------------------------------ witt vectors ----

def _eval_terms(terms, xs):
    zero = xs[0] * 0
    acc = zero
    powcache = [dict() for _ in xs]

    def power(j, e):
        v = powcache[j].get(e)
        if v is None:
            v = xs[j] ** e
            powcache[j][e] = v
        return v

    for e in sorted(terms):
        c = terms[e]
        m = None
        for j, exp in enumerate(e):
            if exp:
                v = power(j, exp)
                m = v if m is None else m * v
        if m is None:
            m = xs[0] ** 0
        acc = acc + m * c
    return acc


class WittVector:
    __slots__ = ("p", "coords")

    def __init__(self, p, coords):
        self.p = p
        self.coords = tuple(coords)

    @property
    def level(self):
        return len(self.coords)

    @classmethod
    def teichmuller(cls, p, a, level):
        z = a * 0
        return cls(p, (a,) + (z,) * (level - 1))

    @classmethod
    def zeros(cls, p, zero_elem, level):
        return cls(p, (zero_elem,) * level)

    def is_finite_coeffs(self):
        return all(isinstance(c, GFElem) for c in self.coords)

    def _field(self):
        return self.coords[0].field

    def _check(self, other):
        if (not isinstance(other, WittVector) or other.p != self.p
                or other.level != self.level):
            raise ConfigMismatch("incompatible Witt vectors")

    def __eq__(self, other):
        return (isinstance(other, WittVector) and self.p == other.p
                and self.coords == other.coords)

    def __hash__(self):
        return hash((self.p, self.coords))

    def __repr__(self):
        return "[" + ", ".join(repr(c) for c in self.coords) + "]"

    # -- engine dispatch --

    def _use_gr(self):
        return self.is_finite_coeffs() and self.level > UNIVERSAL_FINITE_MAX

    def _binop(self, other, tag):
        self._check(other)
        if self._use_gr():
            R = galois_ring(self._field(), self.level)
            x, y = self.to_galois_ring(R), other.to_galois_ring(R)
            z = {"S": lambda: x + y, "P": lambda: x * y,
                 "D": lambda: x - y}[tag]()
            return from_galois_ring(R, z, self.p, self.level)
        struct = witt_structure(self.p, self.level)
        xs = list(self.coords) + list(other.coords)
        if tag == "S":
            polys = struct.sums
        elif tag == "P":
            polys = struct.prods
        else:
            other = -other
            xs = list(self.coords) + list(other.coords)
            polys = struct.sums
        return WittVector(self.p, [_eval_terms(t, xs) for t in polys])

    def __add__(self, other):
        return self._binop(other, "S")

    def __sub__(self, other):
        return self._binop(other, "D")

    def __mul__(self, other):
        if isinstance(other, int):
            return self.int_mul(other)
        return self._binop(other, "P")

    def __neg__(self):
        if self._use_gr():
            R = galois_ring(self._field(), self.level)
            return from_galois_ring(R, -self.to_galois_ring(R), self.p,
                                    self.level)
        struct = witt_structure(self.p, self.level)
        return WittVector(self.p,
                          [_eval_terms(t, list(self.coords))
                           for t in struct.negs])

    def int_mul(self, m):
        m %= self.p ** self.level   # additive order divides p^i
        result = WittVector(self.p, [c * 0 for c in self.coords])
        base = self
        while m:
            if m & 1:
                result = result + base
            base = base + base
            m >>= 1
        return result

    # -- the standard maps --

    def frobenius(self):
        return WittVector(self.p, [c ** self.p for c in self.coords])

    def verschiebung(self):
        """V within fixed length: (0, a_0, ..., a_{i-2})."""
        z = self.coords[0] * 0
        return WittVector(self.p, (z,) + self.coords[:-1])

    def vshift(self, extra=1):
        """V into a longer vector: (0^extra, a_0, ..., a_{i-1})."""
        z = self.coords[0] * 0
        return WittVector(self.p, (z,) * extra + self.coords)

    def wp(self):
        """The Artin-Schreier-Witt operator F - id."""
        return self.frobenius() - self

    def truncate(self, level):
        return WittVector(self.p, self.coords[:level])

    # -- finite-field specific --

    def to_galois_ring(self, R=None):
        assert self.is_finite_coeffs()
        F = self._field()
        R = R or galois_ring(F, self.level)
        digits = []
        for j, a in enumerate(self.coords):
            d = a
            for _ in range(j):
                d = F.pth_root(d)
            digits.append(d)
        return R.from_digits(digits)

    def trace(self):
        """Sum of Frobenius conjugates; lands in W_i(F_p) read as Z/p^i."""
        assert self.is_finite_coeffs()
        e = self._field().e
        acc = self
        x = self
        for _ in range(e - 1):
            x = x.frobenius()
            acc = acc + x
        return acc

    def trace_int(self):
        """The trace as an integer modulo p^level."""
        from .gf import gf
        t = self.trace()
        Fp = gf(self.p)
        coords = [Fp.elem(c.coeffs[0]) for c in t.coords]
        for c in t.coords:
            assert all(x == 0 for x in c.coeffs[1:]), "trace escaped F_p"
        return witt_to_int(WittVector(self.p, coords))


def from_galois_ring(R, x, p, level):
    digits = R.p_adic_digits(x)
    coords = []
    for j, d in enumerate(digits):
        coords.append(d ** (p ** j))
    return WittVector(p, coords)


def witt_to_int(w):
    """W_i(F_p) -> Z/p^i through the digit isomorphism."""
    assert w.is_finite_coeffs() and w._field().e == 1
    R = galois_ring(w._field(), w.level)
    return w.to_galois_ring(R).coeffs[0]


def int_to_witt(p, m, level):
    """Z/p^i -> W_i(F_p)."""
    from .gf import gf
    R = galois_ring(gf(p), level)
    return from_galois_ring(R, R.elem(m), p, level)


def witt_as_solve(v):
    """Some w with F(w) - w = v over a finite field, or None.

    Coordinate 0 is an Artin-Schreier equation; subtracting the lifted
    solution pushes the problem down the V-filtration, one length at a time.
    Each level takes the canonical Artin-Schreier root, so the answer is
    deterministic.
    """
    assert v.is_finite_coeffs()
    F = v._field()
    if v.level == 0:
        return v
    x0 = F.artin_schreier_solve(v.coords[0])
    if x0 is None:
        return None
    t = WittVector.teichmuller(v.p, x0, v.level)
    rest = v - t.wp()
    assert not rest.coords[0], "coordinate 0 did not cancel"
    if v.level == 1:
        return t
    tail = WittVector(v.p, rest.coords[1:])
    w1 = witt_as_solve(tail)
    if w1 is None:
        return None
    return t + w1.vshift()
