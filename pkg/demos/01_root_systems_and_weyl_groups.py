"""
Root systems and Weyl groups
============================

Everything is written in the basis of fundamental weights, so a weight is a
tuple of integers and a root is stored with its simple-root coordinates, its
weight coordinates and its coroot.
"""
from fractions import Fraction

from bszroots import build_root_system, weyl_group
from bszroots.rootsys import height_stats
from bszroots.weylgrp import poincare_enumerated, poincare_product

g2 = build_root_system("G2")
print(g2.name, "rank", g2.rank, "Cartan", g2.cartan)

# positive roots, ordered by height; short roots have squared length 2
for a in g2.positive_roots:
    kind = "long " if a.is_long else "short"
    print(kind, "sr", a.sr_coords, "fw", a.fw_coords, "heights (s, l):", height_stats(g2, a))

# the Weyl group as integer matrices acting on weight coordinates
W = weyl_group(g2)
print("|W| =", len(W), " longest element has length", W.longest.length)
print("orbit of (1, 0):", sorted(W.orbit((1, 0))))

# bringing a weight into the dominant chamber remembers the sign of the element used
dom, w, sign = W.dominant_representative((-2, 1))
print("(-2, 1) ->", dom, "sign", sign, "length", w.length)

# the Poincare series of a stabilizer, by enumeration and by the product over roots
t_s, t_l = Fraction(1, 3), Fraction(-1, 2)
for lam in [(0, 0), (1, 0), (0, 1), (1, 1)]:
    stab = W.stabilizer(lam)
    print(lam, "|W_lam| =", len(stab),
          poincare_enumerated(stab, t_s, t_l), "=", poincare_product(g2, lam, t_s, t_l))
