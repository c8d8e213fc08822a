"""Places of F_q(t), local expansions, and residues of rational 1-forms.

A finite place is a monic irreducible f(t); its residue field F_q[t]/(f) is
realized as the canonical GF(p, e*deg f) through a deterministic embedding:
the base field maps onto the lexicographically least root of its modulus, and
t maps to theta + pi with theta the lexicographically least root of f there.
The infinite place uses the substitution s = 1/t (and dt = -s^-2 ds).

Residues are read off the exact local Laurent expansion; this stays valid for
every pole order in characteristic p (order-reduction tricks that divide by
(order - 1) do not).
"""

from functools import lru_cache

from .errors import ConfigMismatch
from .laurent import Laurent, _series_div
from .poly import Poly, factor, is_irreducible


class Place:
    """Finite(f) for monic irreducible f, or Infinity.

    The variable name is presentation only; identity is the polynomial."""

    __slots__ = ("poly", "var")

    def __init__(self, poly=None, var="t"):
        if poly is not None:
            assert poly.coeffs[-1] == poly.field.one, "place polynomial must be monic"
        self.poly = poly
        self.var = var

    @classmethod
    def infinity(cls):
        return cls(None)

    @classmethod
    def finite(cls, poly, var="t"):
        assert is_irreducible(poly)
        return cls(poly.monic(), var)

    @property
    def is_infinite(self):
        return self.poly is None

    @property
    def degree(self):
        return 1 if self.is_infinite else self.poly.degree

    def __eq__(self, other):
        return isinstance(other, Place) and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def sort_key(self):
        if self.is_infinite:
            return (1, 0, ())
        return (0, self.poly.degree, tuple(c.coeffs for c in self.poly.coeffs))

    def __repr__(self):
        if self.is_infinite:
            return "inf"
        from .render import format_poly
        return format_poly(self.poly, self.var)


def to_dense(mp, base):
    """Univariate MPoly -> dense Poly over the base field."""
    out = [base.zero] * (mp.degree_in(0) + 1)
    for e, c in mp.terms.items():
        out[e[0]] = c
    return Poly(base, out)


class PlaceContext:
    """Everything needed to compute locally at one place of F_q(t)."""

    def __init__(self, field, place):
        assert field.k == 1, "places are defined for one-variable fields only"
        self.field = field
        self.place = place
        base = field.base
        from .gf import gf
        if place.is_infinite:
            self.res_field = base
            self.embed = lambda c: c
            self._phi_inv = None
            self.theta = None
        else:
            d = place.degree
            big = gf(base.p, base.e * d)
            self.res_field = big
            if base.e == 1:
                emb_table = {(c,): big.elem(c) for c in range(base.p)}
                self.embed = lambda a, T=emb_table: T[a.coeffs]
            else:
                root = _least_root(
                    Poly(big, [big.elem(c) for c in base.modulus]), big)
                emb_table = {}
                for a in base.elements():
                    img = big.zero
                    for i in reversed(range(base.e)):
                        img = img * root + big.elem(a.coeffs[i])
                    emb_table[a.coeffs] = img
                self.embed = lambda a, T=emb_table: T[a.coeffs]
            self._phi_inv = {self.embed(a).coeffs: a for a in base.elements()}
            fbig = Poly(big, [self.embed(c) for c in place.poly.coeffs])
            self.theta = _least_root(fbig, big)
            assert self.theta is not None, "place polynomial has no root upstairs"

    def expand(self, r, prec):
        """Local Laurent expansion of a RatFunc, to absolute precision prec."""
        if r.field is not self.field:
            raise ConfigMismatch("rational function over a different field")
        base = self.field.base
        num = to_dense(r.num, base)
        den = to_dense(r.den, base)
        if self.place.is_infinite:
            nrev = num.reverse()
            drev = den.reverse()
            shift = den.degree - num.degree
            q = _series_div(list(nrev.coeffs), list(drev.coeffs), base,
                            prec - shift)
            return q.shift(shift)
        big = self.res_field
        nsh = num.shift(self.theta, big, self.embed)
        dsh = den.shift(self.theta, big, self.embed)
        return _series_div(list(nsh.coeffs), list(dsh.coeffs), big, prec)

    def residue(self, g):
        """Residue of the 1-form g dt at this place, in the residue field."""
        if self.place.is_infinite:
            # dt = -s^-2 ds
            s = self.expand(g, 2)
            return -(s.coeff(1) if s.prec > 1 else s.ring.zero)
        s = self.expand(g, 1)
        return s.coeff(-1)

    def trace_to_base(self, x):
        """Tr_{k(v)/F_q}, landing back in the base field."""
        if self.place.is_infinite:
            return x
        q = self.field.base.order
        acc = self.res_field.zero
        y = x
        for _ in range(self.place.degree):
            acc = acc + y
            y = y ** q
        return self._phi_inv[acc.coeffs]

    def trace_to_prime(self, x):
        """Absolute trace Tr_{k(v)/F_p} as an integer."""
        return self.res_field.trace_int(x)


def _least_root(f, field):
    """Lexicographically least root in the field, via factorization."""
    roots = [(-g.coeffs[0]) * g.coeffs[1].inverse()
             for g, _ in factor(f) if g.degree == 1]
    if not roots:
        return None
    return min(roots, key=lambda a: a.coeffs)


@lru_cache(maxsize=None)
def place_context(field, place):
    return PlaceContext(field, place)


def residue_at(g, place):
    """Res_place(g dt) as an element of the residue field of the place."""
    return place_context(g.field, place).residue(g)


def support_places(r):
    """Finite places where r has a zero or pole (parts of its factorization)."""
    out = set()
    base = r.field.base
    var = r.field.vars[0]
    for mp in (r.num, r.den):
        dense = to_dense(mp, base)
        if dense.degree >= 1:
            for f, _ in factor(dense):
                out.add(Place(f, var))
    return out


def place_order(r, place):
    """Valuation of a rational function at a place."""
    if r.is_zero():
        raise ConfigMismatch("valuation of zero is undefined")
    base = r.field.base
    if place.is_infinite:
        return (to_dense(r.den, base).degree - to_dense(r.num, base).degree)
    out = 0
    for mp, sgn in ((r.num, 1), (r.den, -1)):
        dense = to_dense(mp, base)
        while True:
            q, rem = dense.divmod(place.poly)
            if not rem.is_zero():
                break
            out += sgn
            dense = q
    return out


def residue_table(g):
    """Residues of g dt at all poles plus infinity, traced down to F_q."""
    places = sorted(support_places(g), key=Place.sort_key)
    places.append(Place.infinity())
    out = []
    for pl in places:
        ctx = place_context(g.field, pl)
        out.append((pl, ctx.trace_to_base(ctx.residue(g))))
    return out
