# Global constants: the epsilon factor, the spectral-average prefactor,
# and partial spinor L-values.
# Run:  python demos/06_global_constants.py

import math

from besselzeta import (
    DirichletChar,
    GlobalParams,
    LocalRep,
    arch_lfactor,
    average_prefactor,
    composite_lfactors,
    global_epsilon,
    partial_spinor_L,
)
from besselzeta.globalasm import mellin_gamma_pin, siegel_index

# archimedean factor and the quadrature identity behind it
print("L(1, pi_infty) for weight (4,4):", arch_lfactor(1.0, 4, 4))
pin = mellin_gamma_pin(4.5, -4)
print(f"Mellin pin: integral {pin['integral']:.6e}, "
      f"closed {pin['closed']:.6e}, rel err {pin['rel_err']:.1e}")

# primitive character data mod 17 (inert for D = -23), and the global
# epsilon factor; for a real even character the center value is (-1)^{l2}
chi = DirichletChar.quadratic(17)
print("|G(chi)| =", abs(chi.gauss_sum()), "= sqrt(17) =", math.sqrt(17))
gp_even = GlobalParams(D=-23, l1=6, l2=4, N=5, M=17, chi=chi)
gp_odd = GlobalParams(D=-23, l1=5, l2=3, N=5, M=17, chi=chi)
print("epsilon(1/2), l2 even:", global_epsilon(0.5, gp_even, 5))
print("epsilon(1/2), l2 odd: ", global_epsilon(0.5, gp_odd, 5))

# the prefactor of the spectral average; index of the congruence subgroup
print("[K_f : K_0(5)] =", siegel_index(5))
print("prefactor at s = 1:", average_prefactor(1.0, gp_even))

# composition identities for the lifted forms: the caller supplies the
# GL(2) L-values and the identity combines them
print("Yoshida product:", composite_lfactors(
    "Yoshida", {"factor1": 1.7, "factor2": 2.2}, 1.0))
print("SK at the center (forced zero):", composite_lfactors(
    "SK", {"pi0_times_mu": 1.3, "mu_plus_half": 0.9, "mu_minus_half": 1.1}, 0.5))

# a labeled partial Euler product: archimedean factor times the supplied
# spinor factors, nothing analytic
gp = GlobalParams(D=-23, l1=6, l2=4, N=1, M=1)
rep = LocalRep("I", (1, 1, 1))
print("partial L at s=2, primes {2, 5}:",
      partial_spinor_L(2.0, [(2, rep), (5, rep)], gp))
