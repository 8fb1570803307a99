"""
Weyl characters on the monomial basis
=====================================

Freudenthal's formula gives the weight multiplicities; the slower exact
division of alternating sums is kept as an independent check.
"""
from bszroots import build_root_system, weyl_group
from bszroots.symalg import character_by_division, character_to_monomials, weyl_dimension

for name, lam in [("A2", (1, 1)), ("B2", (1, 1)), ("G2", (1, 0)), ("G2", (0, 1)), ("G2", (2, 1))]:
    rs = build_root_system(name)
    chi = character_to_monomials(rs, lam)
    W = weyl_group(rs)
    size = sum(c * len(W.orbit(mu)) for mu, c in chi.items())
    same = chi == character_by_division(rs, lam)
    print(f"{name} chi{lam} = {dict(chi.items())}")
    print(f"   dimension {size} (Weyl formula {weyl_dimension(rs, lam)}), division agrees: {same}")
