"""Rational function fields F_q(x_1, ..., x_k) with exact arithmetic.

A RatFunc is numerator/denominator in lowest terms with the denominator
normalized graded-lex monic; zero is 0/1.  The p-power decomposition
f = sum_e g_e^p * x^e over e in {0..p-1}^k is the workhorse behind the
Cartier operator: denominators are cleared by den^p, the polynomial part
splits coefficient-wise using p-th roots, and den divides back out.
"""

from functools import lru_cache
from itertools import product

from .errors import ConfigMismatch, DivisionByZero
from .mpoly import MPoly, format_mpoly, mpoly_gcd
from .render import parenthesize_factor, parenthesize_if_sum


class FuncField:
    """Descriptor of F_q(vars); also the factory for its elements."""

    def __init__(self, base, vars):
        self.base = base
        self.vars = tuple(vars)
        self.k = len(self.vars)
        one = MPoly.const(base, self.k, 1)
        self.zero = RatFunc(self, MPoly.const(base, self.k, 0), one, _norm=False)
        self.one = RatFunc(self, one, one, _norm=False)

    def __repr__(self):
        return f"{self.base!r}({', '.join(self.vars)})"

    def var(self, name):
        j = self.vars.index(name)
        one = MPoly.const(self.base, self.k, 1)
        return RatFunc(self, MPoly.var(self.base, self.k, j), one, _norm=False)

    def gens(self):
        return [self.var(v) for v in self.vars]

    def const(self, c):
        one = MPoly.const(self.base, self.k, 1)
        return RatFunc(self, MPoly.const(self.base, self.k, c), one, _norm=False)

    def from_poly(self, num, den=None):
        one = MPoly.const(self.base, self.k, 1)
        return RatFunc(self, num, den if den is not None else one)


@lru_cache(maxsize=None)
def func_field(base, vars):
    return FuncField(base, vars)


class RatFunc:
    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den, _norm=True):
        if _norm:
            if den.is_zero():
                raise DivisionByZero("zero denominator")
            if num.is_zero():
                num = MPoly.const(field.base, field.k, 0)
                den = MPoly.const(field.base, field.k, 1)
            else:
                g = mpoly_gcd(num, den)
                if not (g.is_const() and g.const_value() == field.base.one):
                    num = num.divmod_exact(g)
                    den = den.divmod_exact(g)
                _, lc = den.leading()
                if lc != field.base.one:
                    inv = lc.inverse()
                    num = num.scale(inv)
                    den = den.scale(inv)
        self.field = field
        self.num = num
        self.den = den

    def is_zero(self):
        return self.num.is_zero()

    def is_const(self):
        return self.num.is_const() and self.den.is_const()

    def const_value(self):
        assert self.is_const()
        return self.num.const_value()

    def _check(self, other):
        if not isinstance(other, RatFunc) or other.field is not self.field:
            raise ConfigMismatch("rational functions over different fields")

    def __eq__(self, other):
        return (isinstance(other, RatFunc) and self.field is other.field
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        self._check(other)
        return RatFunc(self.field,
                       self.num * other.den + other.num * self.den,
                       self.den * other.den)

    def __neg__(self):
        return RatFunc(self.field, -self.num, self.den, _norm=False)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return RatFunc(self.field, self.num * other, self.den)
        self._check(other)
        return RatFunc(self.field, self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        self._check(other)
        if other.is_zero():
            raise DivisionByZero("division by zero rational function")
        return RatFunc(self.field, self.num * other.den, self.den * other.num)

    def inverse(self):
        return self.field.one / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self, var):
        j = self.field.vars.index(var) if isinstance(var, str) else var
        dn = self.num.derivative(j)
        dd = self.den.derivative(j)
        return RatFunc(self.field, dn * self.den - self.num * dd,
                       self.den * self.den)

    def subs(self, var, value):
        """Substitute a RatFunc of the same field for a variable."""
        j = self.field.vars.index(var) if isinstance(var, str) else var
        num = _subs_poly(self.num, j, value)
        den = _subs_poly(self.den, j, value)
        return num / den

    def map_to(self, other_field, var_images):
        """Ring map sending variable i to var_images[i] (RatFuncs over
        other_field) and coefficients through identical base fields."""
        if other_field.base is not self.field.base:
            raise ConfigMismatch("different coefficient fields")
        num = _map_poly(self.num, other_field, var_images)
        den = _map_poly(self.den, other_field, var_images)
        return num / den

    def sort_key(self):
        return (self.num.sort_key(), self.den.sort_key())

    def __repr__(self):
        n = format_mpoly(self.num, self.field.vars)
        if self.den.is_const():
            return n
        d = format_mpoly(self.den, self.field.vars)
        return f"{parenthesize_if_sum(n)}/{parenthesize_factor(d)}"


def _subs_poly(f, j, value):
    field = value.field
    out = field.zero
    for e, c in f.terms.items():
        term = field.const(c)
        for i, exp in enumerate(e):
            if exp == 0:
                continue
            base = field.var(field.vars[i]) if i != j else value
            term = term * base ** exp
        out = out + term
    return out


def _map_poly(f, field, var_images):
    out = field.zero
    for e, c in f.terms.items():
        term = field.const(c)
        for i, exp in enumerate(e):
            if exp:
                term = term * var_images[i] ** exp
        out = out + term
    return out


def p_power_decompose(f):
    """{e in {0..p-1}^k: g_e} with f = sum_e g_e^p * x^e, exactly and uniquely.

    Denominators are cleared with den^p: f = (num * den^(p-1)) / den^p, the
    polynomial splits term-by-term via p-th roots of coefficients and exponent
    residues, then den divides back out of each component.
    """
    F = f.field
    p = F.base.p
    k = F.k
    poly = f.num * f.den ** (p - 1)
    parts = {e: {} for e in product(range(p), repeat=k)}
    for mono, c in poly.terms.items():
        e = tuple(x % p for x in mono)
        root_mono = tuple(x // p for x in mono)
        parts[e][root_mono] = F.base.pth_root(c)
    out = {}
    for e, terms in parts.items():
        h = MPoly(F.base, k, terms)
        out[e] = RatFunc(F, h, f.den)
    return out


def p_power_rebuild(parts, field):
    """Inverse of p_power_decompose (test oracle)."""
    p = field.base.p
    out = field.zero
    for e, g in parts.items():
        mono = field.one
        for i, exp in enumerate(e):
            if exp:
                mono = mono * field.var(field.vars[i]) ** exp
        out = out + g ** p * mono
    return out
