from fractions import Fraction

import numpy as np
import pytest

from bszroots.rootsys import (
    SUPPORTED,
    UnsupportedRootSystem,
    build_root_system,
    cartan_matrix,
    coroot_pairing,
    height_stats,
    inner,
    to_simple_root_coords,
)

ROOT_COUNTS = {"A1": 1, "A2": 3, "A3": 6, "A4": 10, "B2": 4, "B3": 9, "B4": 16,
               "C3": 9, "C4": 16, "D4": 12, "G2": 6, "F4": 24}
WEYL_ORDERS = {"A1": 2, "A2": 6, "A3": 24, "A4": 120, "B2": 8, "B3": 48, "B4": 384,
               "C3": 48, "C4": 384, "D4": 192, "G2": 12, "F4": 1152}


@pytest.mark.parametrize("name", SUPPORTED)
def test_counts_and_orders(name):
    rs = build_root_system(name)
    assert len(rs.positive_roots) == ROOT_COUNTS[name]
    assert rs.weyl_order == WEYL_ORDERS[name]


@pytest.mark.parametrize("name", SUPPORTED)
def test_rho_identities(name):
    rs = build_root_system(name)
    assert rs.rho == (1,) * rs.rank
    assert tuple(s + l for s, l in zip(rs.rho_s, rs.rho_l)) == rs.rho
    two_rho = [sum(a.fw_coords[i] for a in rs.positive_roots) for i in range(rs.rank)]
    assert two_rho == [2] * rs.rank


@pytest.mark.parametrize("name", SUPPORTED)
def test_root_data_consistency(name):
    rs = build_root_system(name)
    A = rs.cartan
    assert set(rs.short_positive) | set(rs.long_positive) == set(rs.positive_roots)
    assert not set(rs.short_positive) & set(rs.long_positive)
    if rs.simply_laced:
        assert not rs.long_positive
    for a in rs.positive_roots:
        assert all(c >= 0 for c in a.sr_coords)
        fw = tuple(sum(A[i][j] * a.sr_coords[j] for j in range(rs.rank)) for i in range(rs.rank))
        assert fw == a.fw_coords
        assert coroot_pairing(rs.rho, a) >= 1
        hs, hl = height_stats(rs, a)
        assert hs.denominator == 1 and hl.denominator == 1 and hs + hl >= 1
    # simple roots reproduce the Cartan matrix
    for i, ai in enumerate(rs.simple_roots):
        for j, aj in enumerate(rs.simple_roots):
            assert coroot_pairing(aj.fw_coords, ai) == A[i][j]
    # ordering: by height, then sr coordinates
    keys = [(a.height, a.sr_coords) for a in rs.positive_roots]
    assert keys == sorted(keys)


def test_short_long_split():
    b2 = build_root_system("B2")
    assert len(b2.short_positive) == 2 and len(b2.long_positive) == 2
    g2 = build_root_system("G2")
    assert len(g2.short_positive) == 3 and len(g2.long_positive) == 3
    assert build_root_system("A1").long_positive == ()


def test_simple_root_pairing_with_rho():
    for name in SUPPORTED:
        rs = build_root_system(name)
        assert all(coroot_pairing(rs.rho, a) == 1 for a in rs.simple_roots)
    a1 = build_root_system("A1")
    assert coroot_pairing((5,), a1.simple_roots[0]) == 5


def test_g2_highest_coroot_against_euclidean_realization():
    # G2 inside the plane x + y + z = 0 of R^3
    e = np.eye(3)
    a1 = e[0] - e[1]
    a2 = -2 * e[0] + e[1] + e[2]
    cor = [2 * a / a.dot(a) for a in (a1, a2)]
    # fundamental weights: dual basis to the simple coroots inside the plane
    basis = np.stack([a1, a2])
    gram = np.array([[b.dot(c) for c in cor] for b in basis])
    omegas = np.linalg.inv(gram) @ basis
    lam = omegas[0] + omegas[1]
    theta = 3 * a1 + 2 * a2
    expected = lam.dot(2 * theta / theta.dot(theta))
    rs = build_root_system("G2")
    highest = rs.positive_roots[-1]
    assert highest.sr_coords == (3, 2)
    assert coroot_pairing((1, 1), highest) == round(expected)
    assert abs(expected - round(expected)) < 1e-12


def test_height_stats_examples():
    a1 = build_root_system("A1")
    assert height_stats(a1, a1.simple_roots[0]) == (1, 0)
    a2 = build_root_system("A2")
    assert height_stats(a2, a2.positive_roots[-1]) == (2, 0)
    # B2: brute-force pairing sums
    b2 = build_root_system("B2")
    for a in b2.positive_roots:
        hs = sum(coroot_pairing(a.fw_coords, b) for b in b2.short_positive)
        hl = sum(coroot_pairing(a.fw_coords, b) for b in b2.long_positive)
        assert height_stats(b2, a) == (Fraction(hs, 2), Fraction(hl, 2))


def test_unsupported_and_mismatch():
    with pytest.raises(UnsupportedRootSystem, match="A1"):
        build_root_system("E6")
    with pytest.raises(UnsupportedRootSystem):
        cartan_matrix("Z9")
    rs = build_root_system("A2")
    with pytest.raises(ValueError):
        coroot_pairing((1, 2, 3), rs.simple_roots[0])


def test_form_is_invariant_and_normalised():
    for name in ("B2", "C3", "G2", "F4"):
        rs = build_root_system(name)
        lengths = {inner(rs, a.fw_coords, a.fw_coords) for a in rs.short_positive}
        assert lengths == {2}
        for a in rs.positive_roots:
            for b in rs.positive_roots:
                # <b, a^vee> = 2 (a, b) / (a, a)
                assert coroot_pairing(b.fw_coords, a) == \
                    2 * inner(rs, a.fw_coords, b.fw_coords) / inner(rs, a.fw_coords, a.fw_coords)


def test_simple_root_coordinates_round_trip():
    rs = build_root_system("C3")
    for a in rs.positive_roots:
        assert to_simple_root_coords(rs, a.fw_coords) == a.sr_coords
