"""The Cartier operator on rational differential forms in characteristic p.

Run:  python demos/02_cartier_and_logarithmic_forms.py
"""

from katoforge import DiffForm, d_of_function, dlog, func_field, gf

K = func_field(gf(2), ("t",))
t = K.var("t")

# dlog is a homomorphism from the multiplicative group to closed 1-forms
print("dlog t        =", dlog(t))
print("dlog(t(t+1))  =", dlog(t * (t + K.one)))

# the inverse Cartier operator sends f dt to f^2 t dt (p = 2); logarithmic
# forms are exactly its fixed points
dt_t = dlog(t)
print("\nC^{-1}(dt/t) =", dt_t.cartier_inv(), "  fixed:",
      dt_t.cartier_inv() == dt_t)

tdt = DiffForm(K, 1, {(0,): t})
print("C^{-1}(t dt) =", tdt.cartier_inv())
print("C(t^3 dt)    =", DiffForm(K, 1, {(0,): t ** 3}).cartier())

# the Cartier kernel on closed forms is exactly the exact forms
t2dt = DiffForm(K, 1, {(0,): t * t})
print("\nt^2 dt is exact:", t2dt.is_exact(), " (it equals d(t^3))")
print("dt/t  is exact:", dt_t.is_exact())

# membership in the span of dlog wedges = closed and Cartier-fixed
L = func_field(gf(2), ("x", "y"))
x, y = L.var("x"), L.var("y")
w = dlog(x).wedge(dlog(y))
print("\ndx/x ^ dy/y  =", w)
print("logarithmic: ", w.is_logarithmic())
dx = d_of_function(x)
print("dx logarithmic:", dx.is_logarithmic())

# perturbing by an exact form never changes the Cartier value
eta = x * y / (x + y + L.one)
pert = w + d_of_function(eta).wedge(dlog(y))
print("C(w + exact) == C(w):", pert.cartier() == w.cartier())
