"""Canonical subfield embeddings GF(p^e) -> GF(p^(e*m)).

The generator of the small field maps to the lexicographically least root of
its modulus in the big field, which pins the embedding deterministically.
Both directions are returned as lookup tables (the small field is small).
"""

from functools import lru_cache

from .errors import ConfigMismatch


@lru_cache(maxsize=None)
def subfield_embedding(small, big):
    """(forward map, inverse dict) for the canonical embedding."""
    if small is big:
        return (lambda a: a), {a.coeffs: a for a in small.elements()}
    if big.p != small.p or big.e % small.e:
        raise ConfigMismatch(f"{big!r} does not contain {small!r}")
    from .poly import Poly, factor
    mod = Poly(big, [big.elem(int(c)) for c in small.modulus])
    roots = [(-g.coeffs[0]) * g.coeffs[1].inverse()
             for g, _ in factor(mod) if g.degree == 1]
    root = min(roots, key=lambda a: a.coeffs)
    table = {}
    for a in small.elements():
        img = big.zero
        for c in reversed(a.coeffs):
            img = img * root + big.elem(int(c))
        table[a.coeffs] = img
    inverse = {img.coeffs: small._make(c) for c, img in table.items()}

    def fwd(a, _t=table):
        return _t[a.coeffs]

    return fwd, inverse
