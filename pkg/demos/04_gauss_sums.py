# Residue rings, Gauss sums, and the ramified-twist zeta integrals.
#
# The three character-sum lemmas are checked by literally summing over the
# rings; the ramified-twist integrals are evaluated both from their closed
# forms and through the finite coset sum they came from.
# Run:  python demos/04_gauss_sums.py

import cmath
import math

from besselzeta import (
    BesselSetup,
    GaloisRing,
    LocalRep,
    MultChar,
    ResidueRing,
    gauss_sum_F,
    gauss_sum_L,
    norm_char_sum,
    smith_form_2x2,
    y_eta_check,
    zeta_case2_3_numeric,
)
from besselzeta.localzeta import diag_values_numeric
from besselzeta.padicring import unit_psi_mu_integral

# the quadratic Gauss sum mod 5, normalized to modulus one
ring = ResidueRing(5, 1)
quad = next(c for c in MultChar.all_chars(ring) if c.order == 2)
print("W_F(quadratic mod 5) =", gauss_sum_F(quad))

# the unit-integral lemma: zero away from n = -e
mu = MultChar.primitive_chars(ResidueRing(3, 2))[0]
for n in range(-4, 0):
    print(f"  integral at shift {n}: {abs(unit_psi_mu_integral(mu, n)):.3e}")

# the splitting lemma W_L = (-1)^e W_F^2 over the quadratic Galois ring
for p, e in ((3, 1), (5, 2), (7, 1)):
    ring = ResidueRing(p, e)
    gring = GaloisRing(p, e)
    mu = MultChar.primitive_chars(ring)[0]
    lhs = gauss_sum_L(mu, gring)
    rhs = (-1) ** e * gauss_sum_F(mu) ** 2
    print(f"split lemma p={p}, e={e}: |W_L - (-1)^e W_F^2| = {abs(lhs - rhs):.2e}")

# the norm sum: (-1)^e q^e mu(u), tallied over the whole ring
g = GaloisRing(3, 2)
mu = MultChar.primitive_chars(ResidueRing(3, 2))[0]
print("norm sum at u=2:", norm_char_sum(g, mu, 2), "=", 9 * mu(2))

# Smith normal form with unimodular witnesses
d1, d2, U, V = smith_form_2x2([[6, 4], [2, 8]])
print("SNF of [[6,4],[2,8]]:", (d1, d2), "U =", U, "V =", V)

# the Y_eta lemma: determinant, trace, and elementary-divisor claims
setup = BesselSetup(1, 0, 1, 5)
print("Y_eta check (eta = 0):", y_eta_check(setup, 0, 0, 1))

# ramified-twist integrals: closed forms vs the coset-sum re-derivation
setup3 = BesselSetup(1, 0, 1, 3)
mu3 = MultChar.primitive_chars(ResidueRing(3, 1))[0]
rep = LocalRep.symbolic_trivial("I")
point = {"Q": math.sqrt(3), "A": cmath.exp(0.3j), "G": cmath.exp(0.9j)}
diag = diag_values_numeric(rep, point, 12)
out = zeta_case2_3_numeric(setup3, 1, mu3, cmath.exp(0.4j), 0.7 + 0.2j,
                           lambda l: diag[l])
print("Z(phi):", out["Z_phi"])
print("Z(phi-hat):", out["Z_phi_hat"])
print("coset-sum errors:", [f"{e:.2e}" for e in out["abs_errors"]])
