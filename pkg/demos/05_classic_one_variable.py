"""
The one-variable case
=====================

On A1 the polynomials have a closed form in z = e^{ix}; the general engine
reproduces it coefficient by coefficient.
"""
from fractions import Fraction as F

from bszroots import BszParams, build_root_system, monic_p
from bszroots.univariate import ClassicParams, classic_norm, classic_p

ts = (F(1, 2), F(1, 3), F(1, 5))
cp = ClassicParams(ts)
a1 = build_root_system("A1")
for ell in range(2, 7):
    closed = classic_p(ell, cp)
    general = monic_p(a1, (ell,), BszParams(ts)).mono_exp
    print(ell, [str(c) for c in closed], " norm", classic_norm(ell, cp),
          " agrees:", closed == [general[(k,)] for k in range(ell + 1)])
