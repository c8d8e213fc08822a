"""Tour of the exact arithmetic base layer: GF(p^e) and Witt vectors.

Run:  python demos/01_finite_fields_and_witt.py
"""

from katoforge import WittVector, gf, witt_as_solve, witt_structure, witt_to_int

# Finite fields use the canonical modulus: the lexicographically least monic
# irreducible, so GF(4) is F_2[z]/(z^2+z+1) on every machine.
F4 = gf(2, 2)
z = F4.gen
print("GF(4) modulus coefficients:", F4.modulus)
print("z * z =", z * z, "   z^3 =", z ** 3)
print("trace of z down to F_2:", F4.trace_int(z))

# Artin-Schreier equations x^p - x = c are solvable exactly when the trace
# of c vanishes; the returned root is the lexicographically least one.
print("solve x^2 - x = 1 over GF(4):", F4.artin_schreier_solve(F4.one))
print("solve x^2 - x = z over GF(4):", F4.artin_schreier_solve(z))

# Witt vectors of length i make W_i(F_q) a ring through universal integer
# polynomials solved from the ghost equations.
st = witt_structure(2, 2)
print("\nsum polynomial S_1 (exponents a0 a1 b0 b1 -> coefficient):")
for e, c in sorted(st.sums[1].items()):
    print("   ", e, "->", c)

one = WittVector.teichmuller(2, gf(2).one, 3)
print("teichmuller(1) in W_3(F_2) has additive order",
      next(n for n in range(1, 10)
           if witt_to_int(one.int_mul(n)) == 0))

# wp = F - id drives Artin-Schreier-Witt theory: solvability is detected by
# the Witt-vector trace, and the canonical solution comes from lifting
# Artin-Schreier roots through the V-filtration.
w = WittVector(2, (z, F4.one))
v = w.wp()
print("\nwp(w) for w = (z, 1):", v)
back = witt_as_solve(v)
print("solving wp(x) = wp(w) recovers:", back, " check:", back.wp() == v)
print("trace of (z, 0) read in Z/4:",
      WittVector(2, (z, F4.zero)).trace_int())
