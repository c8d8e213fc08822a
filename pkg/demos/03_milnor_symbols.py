"""Milnor symbols mod p and the differential-symbol normal form.

Run:  python demos/03_milnor_symbols.py
"""

from katoforge import (ASExtension, MilnorElement, d_symbol, func_field, gf,
                       kn_equal, symbol_expand)

L2 = func_field(gf(2), ("x", "y"))
x, y = L2.var("x"), L2.var("y")

s = MilnorElement.symbol(L2, [x, y])
print("{x, y} maps to", d_symbol(s))
print("Steinberg: d{x, 1-x} =", d_symbol(MilnorElement.symbol(
    L2, [x, L2.one - x])))

# anticommutativity is a sign, so the characteristic decides
print("\n{x,y} == {y,x} in char 2:",
      kn_equal(s, MilnorElement.symbol(L2, [y, x])))
L3 = func_field(gf(3), ("x", "y"))
x3, y3 = L3.var("x"), L3.var("y")
print("{x,y} == {y,x} in char 3:",
      kn_equal(MilnorElement.symbol(L3, [x3, y3]),
               MilnorElement.symbol(L3, [y3, x3])))

# expansion factors entries and reduces along the relations
K = func_field(gf(3), ("t",))
t = K.var("t")
big = MilnorElement.symbol(K, [(t ** 2 + t) / (t + K.one)])
print("\nexpand {(t^2+t)/(t+1)} =", symbol_expand(big))

# the cyclic Artin-Schreier extension L = F_2(u), t = u^2 - u
ext = ASExtension(func_field(gf(2), ("t",)))
u = ext.u
print("\nN(u) =", ext.norm_rf(u))
sym = MilnorElement.symbol(ext.L, [u, ext.restrict_rf(
    ext.F.var("t") + ext.F.one)])
print("norm of {u, res(t+1)} =", ext.norm_proj(sym))
comp = ext.norm_proj(ext.one_minus_sigma(sym))
print("norm((1 - sigma){u, res(t+1)}) == 0 in k_2:",
      kn_equal(comp, MilnorElement.zero(ext.F, 2)))
