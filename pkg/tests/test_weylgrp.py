from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bszroots.rootsys import SUPPORTED, build_root_system
from bszroots.weightlat import dominant_weights
from bszroots.weylgrp import (
    enumerate_weyl,
    poincare_enumerated,
    poincare_product,
    reflect,
    to_dominant,
    weyl_group,
)

SMALL = ("A1", "A2", "A3", "B2", "B3", "C3", "G2")


def _det(m):
    m = [list(map(Fraction, r)) for r in m]
    n, det = len(m), Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


@pytest.mark.parametrize("name", SUPPORTED)
def test_enumeration_basics(name):
    rs = build_root_system(name)
    W = weyl_group(rs)
    assert len(W) == rs.weyl_order
    assert len({w.matrix for w in W}) == len(W)
    assert sum(w.sign for w in W) == 0
    assert W.identity.length == 0
    assert W.longest.length == len(rs.positive_roots)


@pytest.mark.parametrize("name", SMALL)
def test_element_invariants(name):
    rs = build_root_system(name)
    W = weyl_group(rs)
    seen = set()
    for w in W:
        assert w.sign == _det(w.matrix)
        assert w.sign == (-1) ** (w.len_s + w.len_l)
        S = W.inversion_set(w)
        assert len(S) == w.length
        assert w.len_s == sum(1 for a in S if not a.is_long)
        assert w.len_l == sum(1 for a in S if a.is_long)
        seen.add(S)
    # w is determined by its inversion set
    assert len(seen) == len(W)


def test_small_examples():
    a1 = weyl_group(build_root_system("A1"))
    assert sorted(w.sign for w in a1) == [-1, 1]
    assert a1.act(a1.longest, (3,)) == (-3,)
    a2 = build_root_system("A2")
    assert reflect(a2, (1, 0), 0) == (-1, 1)
    g2 = weyl_group(build_root_system("G2"))
    assert sorted({w.length for w in g2}) == list(range(7))
    for i, a in enumerate(build_root_system("G2").simple_roots):
        r = next(w for w in g2 if w.length == 1 and w(a.fw_coords) != a.fw_coords)
        assert len(g2.inversion_set(g2.element(r.matrix))) == 1


def test_b2_length_pairs_symmetric_under_longest():
    W = weyl_group(build_root_system("B2"))
    pairs = Counter((w.len_s, w.len_l) for w in W)
    top_s, top_l = W.longest.len_s, W.longest.len_l
    assert pairs == Counter((top_s - s, top_l - l) for s, l in pairs.elements())


def test_dominant_representative():
    a1 = weyl_group(build_root_system("A1"))
    dom, w, sign = a1.dominant_representative((-3,))
    assert dom == (3,) and sign == -1 and w.length == 1
    b2 = build_root_system("B2")
    W = weyl_group(b2)
    dom, w, sign = W.dominant_representative((-1, 2))
    # orbit-scan oracle
    orbit_dominant = [mu for mu in W.orbit((-1, 2)) if min(mu) >= 0]
    assert [dom] == orbit_dominant
    shortest = min((v for v in W if v((-1, 2)) == dom), key=lambda v: v.length)
    assert w.matrix == shortest.matrix and sign == shortest.sign


@given(st.sampled_from(SMALL), st.lists(st.integers(-4, 4), min_size=4, max_size=4))
@settings(max_examples=60, deadline=None)
def test_descent_matches_orbit_scan(name, coords):
    rs = build_root_system(name)
    lam = tuple(coords[:rs.rank])
    W = weyl_group(rs)
    dom, w, sign = W.dominant_representative(lam)
    assert min(dom) >= 0 and w(lam) == dom
    assert dom in W.orbit(lam)
    best = min(v.length for v in W if v(lam) == dom)
    assert w.length == best
    assert to_dominant(rs, lam)[0] == dom


@pytest.mark.parametrize("name", SMALL)
def test_orbit_stabilizer(name):
    rs = build_root_system(name)
    W = weyl_group(rs)
    for lam in dominant_weights(rs.rank, 2):
        assert len(W.orbit(lam)) * len(W.stabilizer(lam)) == len(W)
    assert len(W.stabilizer((0,) * rs.rank)) == len(W)
    assert len(W.stabilizer(rs.rho)) == 1


def test_b2_stabilizer_order():
    W = weyl_group(build_root_system("B2"))
    assert len(W.stabilizer((0, 1))) == 2


def test_poincare_examples():
    t = Fraction(2, 7)
    a1 = build_root_system("A1")
    assert poincare_enumerated(weyl_group(a1).elements, t, 0) == 1 + t
    assert poincare_product(a1, (0,), t, 0) == 1 + t
    a2 = build_root_system("A2")
    W = weyl_group(a2)
    expected = 1 + 2 * t + 2 * t ** 2 + t ** 3
    assert poincare_enumerated(W.elements, t, 0) == expected
    assert poincare_product(a2, (0, 0), t, 0) == (1 + t) * (1 + t + t ** 2) == expected
    assert poincare_enumerated([W.identity], t, 0) == 1
    assert poincare_product(a2, (1, 1), t, 0) == 1


@given(st.sampled_from(SMALL), st.data())
@settings(max_examples=40, deadline=None)
def test_poincare_product_matches_enumeration(name, data):
    rs = build_root_system(name)
    lam = tuple(data.draw(st.lists(st.integers(0, 2), min_size=rs.rank, max_size=rs.rank)))
    frac = st.fractions(min_value=-1, max_value=1, max_denominator=9).filter(lambda x: 0 < abs(x) < 1)
    ts, tl = data.draw(frac), data.draw(frac)
    W = weyl_group(rs)
    assert poincare_enumerated(W.stabilizer(lam), ts, tl) == poincare_product(rs, lam, ts, tl)


def test_poincare_product_errors():
    rs = build_root_system("A2")
    with pytest.raises(ValueError):
        poincare_product(rs, (-1, 0), Fraction(1, 2), 0)
    with pytest.raises(ZeroDivisionError):
        poincare_product(rs, (0, 0), Fraction(1), 0)


def test_enumerate_weyl_order_is_deterministic():
    rs = build_root_system("B2")
    first = [w.matrix for w in enumerate_weyl(rs)]
    assert first == [w.matrix for w in enumerate_weyl(rs)]
    lengths = [w.length for w in enumerate_weyl(rs)]
    assert lengths == sorted(lengths)
