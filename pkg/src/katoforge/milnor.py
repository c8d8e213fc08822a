"""Milnor symbols mod p and the differential symbol normal form.

A MilnorElement is a formal integer combination of symbols {a_1,...,a_n}.
Equality is decided modulo p by comparing differential-symbol images
dlog a_1 ^ ... ^ dlog a_n exactly; the symbol map is injective mod p with
image the logarithmic forms, so this comparison is a sound and complete
normal form for k_n = K_n/p (integral equality is not decidable here).

symbol_expand is a k_n-level normalization: bilinearity splits entries along
a fixed factorization strategy (univariate entries factor into irreducibles,
multivariate entries shed their constant and monomial parts), Steinberg pairs
a + b = 1 drop, repeated slots drop ({a,a} = {-1,a} and -1 = (-1)^p, so such
symbols die mod p in every characteristic), and constant entries drop because
every constant of F_q is a p-th power.  Coefficients come out reduced mod p.

The cyclic extensions are the rational Artin-Schreier ones: L = F_q(u) over
F = F_q(t) with t = u^p - u and sigma(u) = u + 1, so all differential-form
machinery applies verbatim over L.
"""

from .errors import (ConfigMismatch, DegreeMismatch, DlogOfZero,
                     NormShapeUnsupported)
from .forms import DiffForm, dlog
from .places import to_dense
from .poly import factor
from .rational import func_field


class MilnorElement:
    __slots__ = ("field", "degree", "terms")

    def __init__(self, field, degree, terms):
        self.field = field
        self.degree = degree
        self.terms = {s: c for s, c in terms.items() if c}

    @classmethod
    def symbol(cls, field, entries, coeff=1):
        entries = tuple(entries)
        for a in entries:
            if a.is_zero():
                raise DlogOfZero("symbol entries must be nonzero")
        return cls(field, len(entries), {entries: coeff})

    @classmethod
    def zero(cls, field, degree):
        return cls(field, degree, {})

    def is_formally_zero(self):
        return not self.terms

    def _check(self, other):
        if not isinstance(other, MilnorElement) or other.field is not self.field:
            raise ConfigMismatch("symbols over different fields")
        if other.degree != self.degree:
            raise DegreeMismatch(
                f"degree {self.degree} vs {other.degree}")

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for s, c in other.terms.items():
            t[s] = t.get(s, 0) + c
        return MilnorElement(self.field, self.degree, t)

    def __neg__(self):
        return MilnorElement(self.field, self.degree,
                             {s: -c for s, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def int_mul(self, m):
        return MilnorElement(self.field, self.degree,
                             {s: m * c for s, c in self.terms.items()})

    def map_entries(self, fn, field=None):
        out = MilnorElement.zero(field or self.field, self.degree)
        for s, c in self.terms.items():
            out = out + MilnorElement.symbol(field or self.field,
                                             [fn(a) for a in s], c)
        return out

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda sc: tuple(a.sort_key() for a in sc[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for s, c in self.sorted_terms():
            body = "{" + ", ".join(repr(a) for a in s) + "}"
            if c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts)


def _entry_factors(a):
    """[(factor, multiplicity)] with a = prod f^m, per the expansion strategy.

    Univariate: monic irreducibles (constant lead absorbed and dropped mod p).
    Multivariate: variable powers split off, non-monomial parts stay intact.
    """
    F = a.field
    out = []
    if F.k == 1:
        base = F.base
        for mp, sgn in ((a.num, 1), (a.den, -1)):
            dense = to_dense(mp, base)
            if dense.degree >= 1:
                for f, m in factor(dense):
                    out.append((F.from_poly(_poly_to_mpoly(f, F)), sgn * m))
        return out
    for mp, sgn in ((a.num, 1), (a.den, -1)):
        if mp.is_const():
            continue
        common = None
        for e in mp.terms:
            common = e if common is None else tuple(
                min(x, y) for x, y in zip(common, e))
        for j, m in enumerate(common):
            if m:
                out.append((F.var(F.vars[j]), sgn * m))
        rest = {tuple(x - y for x, y in zip(e, common)): c
                for e, c in mp.terms.items()}
        from .mpoly import MPoly
        rest_poly = MPoly(F.base, F.k, rest)
        if not rest_poly.is_const():
            out.append((F.from_poly(rest_poly.monic_grlex()), sgn))
    return out


def _poly_to_mpoly(f, field):
    from .mpoly import MPoly
    return MPoly(field.base, 1, {(d,): c for d, c in enumerate(f.coeffs) if c})


def symbol_expand(s):
    """Normal form mod p: bilinear expansion, Steinberg and repeat drops."""
    F = s.field
    p = F.base.p
    out = {}
    for sym, coeff in s.terms.items():
        expanded = [([], coeff)]
        for a in sym:
            factors = _entry_factors(a)
            nxt = []
            for prefix, c in expanded:
                for f, m in factors:
                    nxt.append((prefix + [f], c * m))
            expanded = nxt
        for entries, c in expanded:
            c %= p
            if c == 0:
                continue
            if len(set(entries)) != len(entries):
                continue   # repeated slot: dies mod p in every characteristic
            if _has_steinberg_pair(entries, F):
                continue
            key = tuple(entries)
            out[key] = (out.get(key, 0) + c) % p
    return MilnorElement(F, s.degree, {k: v for k, v in out.items() if v})


def _has_steinberg_pair(entries, F):
    for i in range(len(entries)):
        for j in range(len(entries)):
            if i != j and (entries[i] + entries[j]) == F.one:
                return True
    return False


def d_symbol(s):
    """{a_1,...,a_n} -> dlog a_1 ^ ... ^ dlog a_n, extended additively."""
    F = s.field
    p = F.base.p
    n = s.degree
    if n > F.k:
        return DiffForm.zero(F, F.k)   # the target module is zero
    out = DiffForm.zero(F, n)
    for sym, c in s.terms.items():
        c %= p
        if c == 0:
            continue
        if not sym:        # degree 0: the empty symbol contributes c * 1
            out = out + DiffForm.from_function(F.const(c))
            continue
        form = None
        for a in sym:
            la = dlog(a)
            form = la if form is None else form.wedge(la)
        out = out + form.scale(F.const(c))
    return out


def kn_equal(s1, s2):
    """Equality in K_n/p, decided through the differential symbol."""
    s1._check(s2)
    return d_symbol(s1 - s2).is_zero()


class ASExtension:
    """L = F_q(u) over F = F_q(t) with t = u^p - u, sigma: u -> u + 1."""

    def __init__(self, base_field, ext_var="u"):
        assert base_field.k == 1
        self.F = base_field
        self.L = func_field(base_field.base, (ext_var,))
        self.p = base_field.base.p
        u = self.L.var(ext_var)
        self.u = u
        self.t_image = u ** self.p - u

    def sigma_rf(self, a):
        """The generator of Gal(L/F) on a rational function of L."""
        return a.subs(0, self.u + self.L.one)

    def restrict_rf(self, a):
        """F -> L along t -> u^p - u."""
        return a.map_to(self.L, [self.t_image])

    def is_invariant(self, a):
        return self.sigma_rf(a) == a

    def norm_rf(self, a):
        """N_{L/F} of a in L*, returned as an element of F."""
        prod = self.L.one
        x = a
        for _ in range(self.p):
            prod = prod * x
            x = self.sigma_rf(x)
        return self.descend_rf(prod)

    def descend_rf(self, a):
        """Rewrite a sigma-invariant element of L as an element of F."""
        assert self.is_invariant(a), "element is not Galois-invariant"
        num = self._descend_poly(a.num)
        den = self._descend_poly(a.den)
        return num / den

    def _descend_poly(self, mp):
        """Invariant polynomial in u -> polynomial in t = u^p - u."""
        from .mpoly import MPoly
        base = self.F.base
        cur = to_dense(mp, base)
        out = self.F.zero
        tau = to_dense(self.t_image.num, base)
        tvar = self.F.var(self.F.vars[0])
        while cur.degree >= 1:
            m = cur.degree
            assert m % self.p == 0, "invariant polynomial of bad degree"
            c = cur.coeffs[-1]
            out = out + self.F.const(c) * tvar ** (m // self.p)
            cur = cur - tau ** (m // self.p) * type(cur).const(base, c)
        if cur.degree == 0 and cur.coeffs:
            out = out + self.F.const(cur.coeffs[0])
        return out

    # -- maps on Milnor elements --

    def sigma(self, x):
        return x.map_entries(self.sigma_rf)

    def one_minus_sigma(self, x):
        return x - self.sigma(x)

    def restrict(self, x):
        """K_n(F) -> K_n(L)."""
        assert x.field is self.F
        return x.map_entries(self.restrict_rf, field=self.L)

    def norm_proj(self, x):
        """N_{L/F} on projection-formula-shaped elements.

        Each symbol may carry at most one entry outside the image of F; the
        norm multiplies that entry's p conjugates and descends, the invariant
        entries descend unchanged.  All-invariant symbols pick up a factor p.
        """
        assert x.field is self.L
        out = MilnorElement.zero(self.F, x.degree)
        for sym, c in x.terms.items():
            invariant = [self.is_invariant(a) for a in sym]
            outside = [k for k, inv in enumerate(invariant) if not inv]
            if len(outside) > 1:
                raise NormShapeUnsupported(
                    "more than one entry outside the base field")
            entries = []
            for k, a in enumerate(sym):
                if invariant[k]:
                    entries.append(self.descend_rf(a))
                else:
                    entries.append(self.norm_rf(a))
            mult = c if outside else c * self.p
            out = out + MilnorElement.symbol(self.F, entries, mult)
        return out
