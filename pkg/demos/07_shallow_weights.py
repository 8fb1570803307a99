"""
What happens below the deepness threshold
=========================================

For weights that are not sufficiently deep the orthogonality theorem says
nothing.  Two observations:

1. The alternating-sum expression at a shallow weight need not be triangular,
   so it is not the polynomial defined by Gram-Schmidt.
2. The Gram-Schmidt polynomials of two incomparable shallow weights can fail
   to be orthogonal.  Small rank-two scans stay at rounding level; rank three
   already shows a clear violation.
"""
from fractions import Fraction as F

from bszroots import BszParams, build_P, build_root_system
from bszroots.bszcore import exact_pairing_P_P
from bszroots.oracle import shallow_orthogonality_scan

a1 = build_root_system("A1")
p = BszParams((F(1, 2), F(1, 3)))
P0 = build_P(a1, (0,), p)
print("A1 with two parameters, lam = 0 is shallow:", dict(P0.mono_exp.items()))
print("literal <P_2, P_0> =", exact_pairing_P_P(a1, (2,), (0,), p))

for name, params in [("B2", BszParams((F(1, 2), F(-1, 3)), (F(1, 4), F(-1, 2)))),
                     ("G2", BszParams((F(1, 2), F(-1, 3)), (F(1, 4), F(-1, 2)))),
                     ("A3", BszParams((F(1, 2), F(-1, 2))))]:
    report = shallow_orthogonality_scan(build_root_system(name), params, 2)
    print(f"\n{name}: {len(report.pairs)} incomparable shallow pairs {report.note}")
    worst = sorted(report.pairs, key=lambda r: -abs(r["value_refined"]))[:3]
    for r in worst:
        print(f"  {r['lam']} vs {r['mu']}: {r['value_refined']: .3e}  "
              f"(grid error {r['quadrature_error_estimate']:.1e}, same coset {r['same_coset']})")
