"""Splitting unramified classes over F_q((t)) into residue-field data.

Run:  python demos/05_local_field_decomposition.py
"""

from katoforge import (HClass, Laurent, WildClass, WittVector,
                       decompose_local, gf, laurent_field, local_invariant,
                       witt_standard_form)
from katoforge.kato import _t_place

F4 = gf(2, 2)
z = F4.gen
LF = laurent_field(F4)
P = 32

one = Laurent.one(F4, P)
tt = Laurent.monomial(F4, F4.one, 1, P)
zc = Laurent.monomial(F4, z, 0, P)

# an integral class: coordinates have no poles, entry t^2 * unit
w = WittVector(2, (zc + tt, one))
b = (one + tt).shift(2)
c = HClass.build(LF, w, (b,))
spec, resid = decompose_local(c)
print("class:", c)
print("specialization part:", spec)
print("residue part:       ", resid)
print("local invariant:    ", local_invariant(c, _t_place(LF)).value, "mod 4")

# pole orders divisible by p reduce away modulo wp-images (length 1 shown;
# at higher length the subtraction carries into later coordinates)
a = Laurent(F4, -2, [F4.one, F4.one], P)      # t^-2 + t^-1 = wp(t^-1)
red, wild = witt_standard_form(WittVector(2, (a,)), F4)
print("\nt^-2 + t^-1 reduces to:", red, " wild leftovers:", wild)

# ...but a pole order prime to p is a genuinely ramified (wild) class
try:
    decompose_local(HClass.build(LF, WittVector(2, (tt.inverse(), one)),
                                 (tt,)))
except WildClass as exc:
    print("\nwild class rejected as expected:")
    print("   ", exc)
