"""Truncated Laurent series with exact precision tracking.

A series is (ring, val, coeffs, prec): the element is
sum coeffs[j] * t^(val+j) known modulo t^prec.  The leading coefficient is
nonzero; the zero-to-precision element has empty coeffs and val == prec.
Every operation records the guaranteed precision of its result and never
truncates below it; reading a coefficient at or beyond the precision raises
PrecisionExhausted.

The coefficient ring only needs `zero`, `one` and `inv(unit)`; field elements
and Galois-ring elements both qualify.
"""

from .errors import ConfigMismatch, DivisionByZero, PrecisionExhausted

DEFAULT_PREC = 16


class Laurent:
    __slots__ = ("ring", "val", "coeffs", "prec")

    def __init__(self, ring, val, coeffs, prec):
        coeffs = list(coeffs)
        # drop unknown range
        if val + len(coeffs) > prec:
            coeffs = coeffs[:max(0, prec - val)]
        # strip leading zeros
        while coeffs and not coeffs[0]:
            coeffs.pop(0)
            val += 1
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        if not coeffs:
            val = prec
        self.ring = ring
        self.val = val
        self.coeffs = tuple(coeffs)
        self.prec = prec

    @classmethod
    def zero(cls, ring, prec=DEFAULT_PREC):
        return cls(ring, prec, [], prec)

    @classmethod
    def one(cls, ring, prec=DEFAULT_PREC):
        return cls(ring, 0, [ring.one], prec)

    @classmethod
    def monomial(cls, ring, c, n, prec=DEFAULT_PREC):
        return cls(ring, n, [c], prec)

    def is_zero(self):
        """True when no nonzero coefficient is known (zero to precision)."""
        return not self.coeffs

    def coeff(self, n):
        if n >= self.prec:
            raise PrecisionExhausted(
                f"coefficient of t^{n} beyond precision O(t^{self.prec})")
        if n < self.val or n >= self.val + len(self.coeffs):
            return self.ring.zero
        return self.coeffs[n - self.val]

    def _check(self, other):
        if not isinstance(other, Laurent) or other.ring is not self.ring:
            raise ConfigMismatch("series over different coefficient rings")

    def __eq__(self, other):
        return (isinstance(other, Laurent) and self.ring is other.ring
                and self.val == other.val and self.coeffs == other.coeffs
                and self.prec == other.prec)

    def __hash__(self):
        return hash((self.val, self.coeffs, self.prec))

    def __add__(self, other):
        self._check(other)
        prec = min(self.prec, other.prec)
        lo = min(self.val, other.val, prec)
        out = [self.ring.zero] * (prec - lo)
        for src in (self, other):
            for j, c in enumerate(src.coeffs):
                n = src.val + j
                if n < prec:
                    out[n - lo] = out[n - lo] + c
        return Laurent(self.ring, lo, out, prec)

    def __neg__(self):
        return Laurent(self.ring, self.val, [-c for c in self.coeffs],
                       self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Laurent(self.ring, self.val,
                           [c * other for c in self.coeffs], self.prec)
        self._check(other)
        # sound precision: min over operands of (own precision + other's val)
        prec = min(self.prec + other.val, other.prec + self.val)
        if self.is_zero() or other.is_zero():
            return Laurent.zero(self.ring, prec)
        lo = self.val + other.val
        out = [self.ring.zero] * (prec - lo)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                n = i + j
                if lo + n >= prec:
                    break
                if b:
                    out[n] = out[n] + a * b
        return Laurent(self.ring, lo, out, prec)

    __rmul__ = __mul__

    def shift(self, n):
        """Multiply by t^n."""
        return Laurent(self.ring, self.val + n, self.coeffs, self.prec + n)

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of a series that is zero to precision")
        rel = self.prec - self.val  # relative precision of the unit part
        u = self.coeffs
        inv0 = self.ring.inv(u[0])
        out = [inv0]
        for n in range(1, rel):
            s = self.ring.zero
            for j in range(1, min(n, len(u) - 1) + 1):
                s = s + u[j] * out[n - j]
            out.append(-(inv0 * s))
        return Laurent(self.ring, -self.val, out, rel - self.val)

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return Laurent.one(self.ring, prec=max(self.prec - self.val, 1))
        if self.is_zero():
            return Laurent.zero(self.ring, n * self.prec)
        result = Laurent.one(self.ring, prec=self.prec - self.val)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self):
        coeffs = []
        for j, c in enumerate(self.coeffs):
            coeffs.append(c * (self.val + j))
        return Laurent(self.ring, self.val - 1, coeffs, self.prec - 1)

    def dlog(self):
        """d(self)/self; valuation contributes val * t^-1."""
        return self.derivative() / self

    def truncate(self, prec):
        if prec > self.prec:
            raise PrecisionExhausted(
                f"cannot extend precision O(t^{self.prec}) to O(t^{prec})")
        return Laurent(self.ring, self.val, self.coeffs, prec)

    def map_coeffs(self, ring, fn, val_shift=0):
        return Laurent(ring, self.val + val_shift,
                       [fn(c) for c in self.coeffs], self.prec + val_shift)

    def __repr__(self):
        from .render import format_gf_coeff
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            n = self.val + j
            cs = format_gf_coeff(c)
            if n == 0:
                parts.append(cs)
            else:
                tp = "t" if n == 1 else f"t^{n}"
                parts.append(tp if cs == "1" else f"{cs}*{tp}")
        parts.append(f"O(t^{self.prec})")
        return " + ".join(parts)


def from_rational(r, prec=DEFAULT_PREC):
    """Expand a univariate RatFunc at t = 0 to the requested precision."""
    F = r.field
    assert F.k == 1
    base = F.base
    num = _dense(r.num, base)
    den = _dense(r.den, base)
    return _series_div(num, den, base, prec)


def _dense(mp, base):
    deg = mp.degree_in(0)
    out = [base.zero] * (deg + 1)
    for e, c in mp.terms.items():
        out[e[0]] = c
    return out


def _series_div(num, den, ring, prec):
    """num(t)/den(t) as a Laurent series over a field, to precision prec."""
    nv = next((i for i, c in enumerate(num) if c), None)
    if nv is None:
        return Laurent.zero(ring, prec)
    dv = next(i for i, c in enumerate(den) if c)
    big = prec + 2 * dv + abs(nv) + len(num) + len(den) + 2
    n = Laurent(ring, 0, num, big)
    d = Laurent(ring, 0, den, big)
    q = n / d
    assert q.prec >= prec
    return q.truncate(prec)
