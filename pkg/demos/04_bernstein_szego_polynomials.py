"""
Bernstein-Szego polynomials from the alternating-sum formula
============================================================

P_lam is expanded exactly, first on Weyl characters and then on monomials.
For sufficiently deep lam the leading coefficient is N_lam, and the exact
constant-term pairings confirm the norm and orthogonality.
"""
from fractions import Fraction as F

from bszroots import BszParams, build_P, build_root_system, monic_p, normalization_constant
from bszroots.bszcore import exact_pairing_P_m, exact_pairing_P_P
from bszroots.weightlat import dominant_weights

b2 = build_root_system("B2")
params = BszParams(ts=(F(1, 2), F(-1, 3)), tl=(F(1, 4), F(-1, 2)))

P = build_P(b2, (1, 1), params)
print("deep:", P.deep, " N =", P.norm_const)
print("characters:", dict(P.char_exp.items()))
print("monomials: ", dict(P.mono_exp.items()))

# (1, 1) sits exactly at the threshold (shifted weight 0), so N is a full Poincare
# series; one step deeper the shifted weight is regular and N = 1
print("N(1,1) =", normalization_constant(b2, (1, 1), params),
      " N(2,2) =", normalization_constant(b2, (2, 2), params))
print("monic p(1,1):", dict(monic_p(b2, (1, 1), params).mono_exp.items()))

# <P_lam, m_mu> vanishes unless mu lies above lam, and equals 1 on the diagonal
ws = dominant_weights(2, 2)
print("<P_lam, m_mu> for coordinates <= 2 (rows lam, columns mu):")
for lam in ws:
    print(lam, [str(exact_pairing_P_m(b2, lam, mu, params)) for mu in ws])

# norms and orthogonality among deep weights
deep = [w for w in ws if build_P(b2, w, params).deep]
print("deep weights:", deep)
print("<P, P> on the diagonal:", [str(exact_pairing_P_P(b2, w, w, params)) for w in deep])
print("off-diagonal values:", {str(exact_pairing_P_P(b2, a, b, params))
                               for a in deep for b in deep if a != b})
