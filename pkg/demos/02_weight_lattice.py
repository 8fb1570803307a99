"""
Dominance, deep weights and saturated sets
==========================================
"""
from bszroots import build_root_system
from bszroots.weightlat import (
    dominance_leq,
    dominant_weights,
    is_sufficiently_deep,
    lambda_tilde,
    saturated_set,
    verify_hull_lemma,
    verify_saturated_prop,
    verify_vertex_prop,
)

b2 = build_root_system("B2")

# dominance is only a partial order: here are the incomparable pairs in a small box
ws = dominant_weights(2, 2)
pairs = [(a, b) for i, a in enumerate(ws) for b in ws[i + 1:]
         if not dominance_leq(b2, a, b) and not dominance_leq(b2, b, a)]
print("incomparable pairs with coordinates <= 2:", pairs)

# the saturated set below (2, 1): dominant part and full W-stable set
s = saturated_set(b2, (2, 1))
print("P+(2,1) =", sorted(s.dominant_members), " full size", len(s.full_members))

# a weight is deep for (Ms, Ml) when it pairs with short (long) coroots at least Ms-1 (Ml-1)
for lam in [(0, 0), (1, 0), (1, 1), (2, 2)]:
    print(lam, "deep for (2, 2):", is_sufficiently_deep(b2, lam, 2, 2),
          "  shifted weight:", lambda_tilde(b2, lam, 2, 2))

# the brute-force lattice checks behind the triangularity argument
print(verify_saturated_prop(b2, (2, 1)).to_dict())
print(verify_hull_lemma(b2, (2, 1)).to_dict())
print(verify_vertex_prop(b2, (2, 2), 2, 2).to_dict())
