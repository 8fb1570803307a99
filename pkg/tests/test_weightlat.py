import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bszroots.rootsys import build_root_system
from bszroots.weightlat import (
    EnumerationCapExceeded,
    deep_parametrization_check,
    dominance_leq,
    dominant_weights,
    hull_membership,
    is_string_closed,
    is_sufficiently_deep,
    lambda_tilde,
    min_pairing_long,
    min_pairing_short,
    root_string_closure,
    saturated_set,
    verify_hull_lemma,
    verify_orbit_prop,
    verify_saturated_prop,
    verify_vertex_prop,
)
from bszroots.weylgrp import weyl_group

RANK2 = ("A2", "B2", "G2")


def test_dominance_examples():
    a2 = build_root_system("A2")
    assert dominance_leq(a2, (1, 1), (3, 0))
    assert dominance_leq(a2, (2, 2), (2, 2))
    a1 = build_root_system("A1")
    assert not dominance_leq(a1, (1,), (2,))
    assert dominance_leq(a1, (0,), (2,))


@pytest.mark.parametrize("name", RANK2 + ("A1",))
def test_dominance_is_a_partial_order(name):
    rs = build_root_system(name)
    ws = dominant_weights(rs.rank, 3)
    for a in ws:
        for b in ws:
            if a != b and dominance_leq(rs, a, b):
                assert not dominance_leq(rs, b, a)


def test_min_pairings():
    for name in ("A1", "A2", "B2", "G2", "B3", "F4"):
        rs = build_root_system(name)
        assert min_pairing_short(rs, rs.rho) == 1
    a2 = build_root_system("A2")
    assert min_pairing_short(a2, (2, 1)) == 1
    assert min_pairing_long(a2, (2, 1)) is None
    b2 = build_root_system("B2")
    short = [sum(c * x for c, x in zip(a.coroot, (1, 2))) for a in b2.short_positive]
    long_ = [sum(c * x for c, x in zip(a.coroot, (1, 2))) for a in b2.long_positive]
    assert min_pairing_short(b2, (1, 2)) == min(short)
    assert min_pairing_long(b2, (1, 2)) == min(long_)
    with pytest.raises(ValueError):
        min_pairing_short(a2, (-1, 0))


def test_deepness():
    a1 = build_root_system("A1")
    assert not is_sufficiently_deep(a1, (1,), 3)
    assert is_sufficiently_deep(a1, (2,), 3)
    for name in ("A2", "B2", "G2"):
        rs = build_root_system(name)
        for lam in dominant_weights(rs.rank, 3):
            assert is_sufficiently_deep(rs, lam, 0, 0)
            assert is_sufficiently_deep(rs, lam, 1, 1)


def test_deep_parametrization():
    assert deep_parametrization_check(build_root_system("A1"), 2, 0, 6)
    assert deep_parametrization_check(build_root_system("B2"), 2, 2, 4)
    assert deep_parametrization_check(build_root_system("G2"), 2, 3, 4)
    assert deep_parametrization_check(build_root_system("C3"), 3, 2, 3)


def test_lambda_tilde():
    b2 = build_root_system("B2")
    assert lambda_tilde(b2, (2, 2), 1, 1) == (2, 2)
    assert lambda_tilde(b2, (2, 2), 0, 0) == (3, 3)
    a1 = build_root_system("A1")
    for M in range(1, 5):
        assert lambda_tilde(a1, (M - 1,), M) == (0,)


def test_saturated_set_examples():
    a1 = build_root_system("A1")
    s = saturated_set(a1, (2,))
    assert s.dominant_members == {(0,), (2,)}
    assert s.full_members == {(-2,), (0,), (2,)}
    a2 = build_root_system("A2")
    s = saturated_set(a2, (1, 1))
    assert s.dominant_members == {(0, 0), (1, 1)}
    assert len(s.full_members) == 7
    assert saturated_set(a2, (0, 0)).full_members == {(0, 0)}


@given(st.sampled_from(RANK2 + ("A3", "B3")), st.data())
@settings(max_examples=30, deadline=None)
def test_saturated_set_invariants(name, data):
    rs = build_root_system(name)
    lam = tuple(data.draw(st.lists(st.integers(0, 2), min_size=rs.rank, max_size=rs.rank)))
    s = saturated_set(rs, lam)
    assert s.dominant_members == {mu for mu in s.full_members if min(mu) >= 0}
    W = weyl_group(rs)
    assert s.full_members == set().union(*(W.orbit(mu) for mu in s.dominant_members))
    assert is_string_closed(rs, s.full_members)
    assert root_string_closure(rs, lam) == s.full_members


def test_hull_membership_examples():
    a1 = build_root_system("A1")
    assert hull_membership(a1, (2,), (2,))
    assert hull_membership(a1, (1,), (2,))
    assert not dominance_leq(a1, (1,), (2,))
    assert not hull_membership(a1, (3,), (2,))


@pytest.mark.parametrize("name", ("A1", "A2", "B2", "G2", "A3", "B3"))
def test_lattice_props_small_grid(name):
    rs = build_root_system(name)
    for lam in dominant_weights(rs.rank, 1 if rs.rank == 3 else 2):
        assert verify_saturated_prop(rs, lam).passed
        assert verify_orbit_prop(rs, lam).passed
        assert verify_hull_lemma(rs, lam).passed


def test_scan_examples():
    a2 = build_root_system("A2")
    r = verify_saturated_prop(a2, (2, 2))
    assert r.passed and r.vectors_scanned == 27
    assert verify_saturated_prop(a2, (0, 0)).vectors_scanned == 1
    assert verify_orbit_prop(build_root_system("G2"), (1, 1)).passed
    assert verify_saturated_prop(build_root_system("B2"), (2, 1)).passed


def test_vertex_examples():
    a1 = build_root_system("A1")
    r = verify_vertex_prop(a1, (2,), 2)
    assert r.passed and r.details["orbit_hits"] == 2
    assert r.details["stabilizer_order"] == 2
    b2 = build_root_system("B2")
    assert verify_vertex_prop(b2, (2, 2), 2, 2).passed
    r = verify_vertex_prop(b2, (3, 3), 1, 1)
    assert r.passed
    with pytest.raises(ValueError):
        verify_vertex_prop(b2, (0, 2), 1, 1)
    with pytest.raises(ValueError):
        verify_vertex_prop(b2, (2, 2), 3, 1)


def test_cap_is_enforced():
    rs = build_root_system("B3")
    with pytest.raises(EnumerationCapExceeded) as exc:
        verify_saturated_prop(rs, (2, 2, 2), cap=100)
    assert exc.value.needed > 100 and exc.value.cap == 100
    report = verify_saturated_prop(rs, (1, 1, 1), cap=10 ** 6)
    assert report.passed and report.to_dict()["vectors_scanned"] == 2 ** 9
