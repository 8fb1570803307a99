"""
Checking exact results on a torus grid
======================================

The uniform product grid integrates trigonometric polynomials exactly up to
aliasing, and the weight function is analytic, so errors fall off
geometrically with the grid size.
"""
from fractions import Fraction as F

from bszroots import BszParams, build_P, build_root_system, monic_p
from bszroots.bszcore import exact_pairing_P_m
from bszroots.oracle import Quadrature, gram_schmidt_p, torus_grid

g2 = build_root_system("G2")
params = BszParams(ts=(F(-1, 3),), tl=(F(1, 4), F(1, 2)))
lam, mu = (1, 1), (2, 1)
exact = exact_pairing_P_m(g2, lam, mu, params)
P = build_P(g2, lam, params).mono_exp
for n in (16, 32, 48, 64, 96):
    q = Quadrature(g2, params, torus_grid(2, n))
    print(f"N={n:3d}  <P{lam}, m{mu}> = {q.inner(P, {mu: 1.0}).real: .15f}   exact {exact}")

# Gram-Schmidt from the defining conditions against the exact monic polynomial
q = Quadrature(g2, params)
gs = gram_schmidt_p(g2, (2, 1), params, quad=q)
ex = monic_p(g2, (2, 1), params).mono_exp
for k in sorted(gs, reverse=True):
    print(k, f"{gs[k]: .12f}", ex[k])
