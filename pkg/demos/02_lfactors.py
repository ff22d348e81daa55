# Representation descriptors and their L-factors.
#
# The four Iwahori-spherical types I, IIb, IIIa, VIb carry Satake
# parameters (alpha, beta, gamma as the symbols A, B, G).  The degree-4
# spinor factor, the degree-5 standard factor, the local epsilon factors
# of the computed cases, and the per-prime spectral correction all come
# out as exact rational functions.
# Run:  python demos/02_lfactors.py

from fractions import Fraction

from besselzeta import (
    LocalRep,
    TwistData,
    UNRAMIFIED,
    dims,
    local_epsilon,
    spinor_lfactor,
    std_lfactor,
    t_factor,
)
from besselzeta.symfield import RatFunc, rf_var

for tag in ("I", "IIb", "IIIa", "VIb"):
    rep = LocalRep.symbolic(tag)
    print(f"type {tag}: dim(V^K, V^K0(p)) = {dims(rep)}")
    print("  spinor L:", spinor_lfactor(rep).to_text())

# twisting by an unramified character scales every Satake datum by U
rep = LocalRep.symbolic("IIIa")
tw = TwistData(u=rf_var("U"))
print("IIIa twisted:", spinor_lfactor(rep, tw).to_text())

# the standard degree-5 factor, with a numeric sanity value:
# alpha = beta = gamma = 1 at q = 3, s = 1 gives (3/2)^5
rep1 = LocalRep("I", (1, 1, 1))
print("std factor (generic I):", std_lfactor(LocalRep.symbolic("I")).to_text())
val = std_lfactor(rep1).subst({"T": RatFunc.const(Fraction(1, 3))})
print("L(1, Std) at q=3, trivial parameters:", val.to_text())

# local epsilon factors of the computed cases
print("epsilon (newform IIIa/VIb):",
      local_epsilon(rep, tw, "IIIa").to_text())
print("epsilon (old forms):",
      local_epsilon(LocalRep.symbolic_trivial("I"), tw, "old_I_IIb").to_text())
print("epsilon (ramified twist, e=1):",
      local_epsilon(LocalRep.symbolic("I"), TwistData(e=1),
                    "ramified_spherical").to_text())

# the per-prime correction entering the spectral average
print("t(VIb) =", t_factor(LocalRep.symbolic_trivial("VIb"), UNRAMIFIED, 3))
print("t(IIIa) =", t_factor(LocalRep.symbolic("IIIa"), UNRAMIFIED, 3))
print("t(spherical, p=3, trivial parameters) =",
      t_factor(rep1, UNRAMIFIED, 3), "= (2 - sqrt 3)/8")
