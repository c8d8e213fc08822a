"""Galois rings: Witt vectors of finite fields in p-adic digit form.

GR(p^i, e) = (Z/p^i)[z] / (m(z)) with m the integer lift of the canonical
GF(p^e) modulus.  This is the ring of length-i Witt vectors of GF(p^e) in a
multiplication-friendly presentation: Teichmueller digits correspond to Witt
coordinates (with a Frobenius twist per position).  Used as the fast engine
for Witt arithmetic over finite fields and as the coefficient ring of the
lifted series in level-i local invariants.
"""

from functools import lru_cache

from .errors import ConfigMismatch, DivisionByZero, IntegralityViolation


class GRElem:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = coeffs

    def __eq__(self, other):
        return (isinstance(other, GRElem) and self.ring is other.ring
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((id(self.ring), self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def _check(self, other):
        if not isinstance(other, GRElem) or other.ring is not self.ring:
            raise ConfigMismatch("elements of different Galois rings")

    def __add__(self, other):
        self._check(other)
        m = self.ring.pi
        return GRElem(self.ring, tuple((a + b) % m for a, b in
                                       zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        m = self.ring.pi
        return GRElem(self.ring, tuple((a - b) % m for a, b in
                                       zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        m = self.ring.pi
        return GRElem(self.ring, tuple((-a) % m for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            m = self.ring.pi
            return GRElem(self.ring, tuple((a * other) % m for a in self.coeffs))
        self._check(other)
        return self.ring._mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n):
        assert n >= 0
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self):
        return f"GR{self.coeffs}"


class GaloisRing:
    """GR(p^i, e) built over a GF(p^e) configuration."""

    def __init__(self, field, length):
        self.field = field
        self.length = length
        self.p = field.p
        self.e = field.e
        self.pi = field.p ** length
        self.modulus = tuple(int(c) for c in field.modulus)  # lifted, monic
        self.zero = GRElem(self, (0,) * self.e)
        self.one = GRElem(self, (1,) + (0,) * (self.e - 1))
        self._teich_cache = {}

    def __repr__(self):
        return f"GR({self.p}^{self.length}, {self.e})"

    def elem(self, coeffs):
        if isinstance(coeffs, int):
            return GRElem(self, (coeffs % self.pi,) + (0,) * (self.e - 1))
        coeffs = list(coeffs) + [0] * (self.e - len(coeffs))
        return GRElem(self, tuple(c % self.pi for c in coeffs))

    def _mul(self, a, b):
        m = self.pi
        e = self.e
        res = [0] * (2 * e - 1)
        for i, ai in enumerate(a.coeffs):
            if ai:
                for j, bj in enumerate(b.coeffs):
                    res[i + j] = (res[i + j] + ai * bj) % m
        # reduce by the monic lifted modulus
        for top in range(2 * e - 2, e - 1, -1):
            lead = res[top]
            if lead:
                off = top - e
                for j in range(e):
                    res[off + j] = (res[off + j] - lead * self.modulus[j]) % m
                res[top] = 0
        return GRElem(self, tuple(res[:e]))

    def lift(self, a):
        """Naive coefficient lift GF(p^e) -> GR (not Teichmueller)."""
        return GRElem(self, tuple(int(c) for c in a.coeffs))

    def reduce(self, x):
        """Reduction GR -> GF(p^e)."""
        return self.field.elem([c % self.p for c in x.coeffs])

    def teich(self, a):
        """Teichmueller lift: the unique lift that is a (q-1)-th root of unity
        (or 0), computed as lift(a)^(q^length)."""
        t = self._teich_cache.get(a.coeffs)
        if t is None:
            t = self.lift(a) ** (self.field.order ** self.length)
            self._teich_cache[a.coeffs] = t
        return t

    def inv(self, u):
        """Inverse of a unit, by Newton lifting from the residue field."""
        u0 = self.reduce(u)
        if not u0:
            raise DivisionByZero("not a unit in the Galois ring")
        x = self.lift(u0.inverse())
        two = self.one + self.one
        k = 1
        while k < self.length:
            x = x * (two - u * x)
            k *= 2
        return x

    def div_exact_p(self, x, n):
        """x / p^n for x divisible by p^n.  The result is canonical only
        modulo p^(length-n); callers must not rely on higher digits."""
        pn = self.p ** n
        if any(c % pn for c in x.coeffs):
            raise IntegralityViolation(
                f"element {x.coeffs} not divisible by p^{n}")
        return GRElem(self, tuple((c // pn) % self.pi for c in x.coeffs))

    def frobenius(self, x):
        """The ring automorphism lifting a -> a^p, via Teichmueller digits."""
        digits = self.p_adic_digits(x)
        out = self.zero
        for j, d in enumerate(digits):
            out = out + self.teich(d.frobenius()) * (self.p ** j)
        return out

    def p_adic_digits(self, x):
        """Field elements d_0..d_{length-1} with x = sum p^j teich(d_j)."""
        digits = []
        cur = x
        for j in range(self.length):
            d = self.reduce(cur)
            digits.append(d)
            cur = cur - self.teich(d)
            if j + 1 < self.length:
                cur = self.div_exact_p(cur, 1)
        return digits

    def from_digits(self, digits):
        out = self.zero
        for j, d in enumerate(digits):
            out = out + self.teich(d) * (self.p ** j)
        return out


@lru_cache(maxsize=None)
def galois_ring(field, length):
    return GaloisRing(field, length)
