from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bszroots.bszcore import (
    BszParams,
    NotDeepError,
    build_P,
    c_coefficients,
    exact_pairing_P_m,
    exact_pairing_P_P,
    inv_c_coefficients,
    monic_p,
    normalization_constant,
)
from bszroots.rootsys import build_root_system
from bszroots.symalg import SymmetricPolynomial, character_to_monomials
from bszroots.weightlat import (
    EnumerationCapExceeded,
    dominance_leq,
    dominant_weights,
    is_sufficiently_deep,
    lambda_tilde,
)
from bszroots.weylgrp import poincare_enumerated, weyl_group

F = Fraction
param = st.fractions(min_value=-1, max_value=1, max_denominator=9).filter(lambda x: 0 < abs(x) < 1)


def test_params_validation():
    assert BszParams((F(1, 2), F(-1, 3))).bold_ts == F(1, 6)
    assert BszParams().bold_ts == -1
    for bad in (0, 1, -1, F(3, 2)):
        with pytest.raises(ValueError):
            BszParams((bad,))
    with pytest.raises(ValueError):
        BszParams(tl=(F(1, 2),)).check(build_root_system("A2"))
    with pytest.raises(ValueError):
        BszParams().of("medium")


def test_c_coefficients_examples():
    assert c_coefficients(BszParams()) == [1]
    assert c_coefficients(BszParams((F(1, 3),))) == [1, F(1, 3)]
    assert c_coefficients(BszParams((F(1, 2), F(-1, 3)))) == [1, F(1, 6), F(-1, 6)]
    assert c_coefficients(BszParams(tl=(F(1, 5),)), "long") == [1, F(1, 5)]


def test_inv_c_coefficients_examples():
    assert inv_c_coefficients(BszParams(), "short", 3) == [1, 0, 0, 0]
    t = F(2, 7)
    assert inv_c_coefficients(BszParams((t,)), "short", 5) == [(-t) ** n for n in range(6)]
    p = BszParams((F(1, 2), F(-1, 3)))
    f, c = inv_c_coefficients(p, "short", 6), c_coefficients(p)
    assert f[:2] == [1, F(-1, 6)]
    conv = [sum(c[k] * f[n - k] for k in range(len(c)) if k <= n) for n in range(7)]
    assert conv == [1, 0, 0, 0, 0, 0, 0]
    with pytest.raises(ValueError):
        inv_c_coefficients(p, "short", -1)


def test_characters_when_no_parameters():
    for name in ("A2", "B2", "G2"):
        rs = build_root_system(name)
        for lam in dominant_weights(2, 2):
            P = build_P(rs, lam, BszParams())
            assert P.mono_exp == character_to_monomials(rs, lam)
            assert P.norm_const == 1 and monic_p(rs, lam, BszParams()).mono_exp == P.mono_exp


def test_a1_examples():
    a1 = build_root_system("A1")
    t = F(1, 3)
    p = BszParams((t,))
    assert build_P(a1, (2,), p).mono_exp == SymmetricPolynomial({(2,): 1, (0,): 1 + t})
    assert dict(build_P(a1, (2,), p).char_exp.items()) == {(2,): 1, (0,): t}
    assert monic_p(a1, (4,), p).mono_exp == SymmetricPolynomial({(4,): 1, (2,): 1 + t, (0,): 1 + t})
    t1, t2 = F(1, 3), F(1, 5)
    P = build_P(a1, (1,), BszParams((t1, t2)))
    assert P.leading_coefficient == 1 - t1 * t2 == P.norm_const
    assert monic_p(a1, (1,), BszParams((t1, t2))).leading_coefficient == 1


def test_normalization_examples():
    a1 = build_root_system("A1")
    ts = (F(1, 2), F(1, 3), F(-1, 5))
    for M in range(1, 4):
        p = BszParams(ts[:M])
        prod_t = p.bold_ts * -1
        assert normalization_constant(a1, (M - 1,), p) == 1 - prod_t == 1 + p.bold_ts
        for ell in range(M, M + 3):
            assert normalization_constant(a1, (ell,), p) == 1
    b2 = build_root_system("B2")
    assert normalization_constant(b2, (1, 1), BszParams((F(1, 2),), (F(1, 3),))) == 1


def test_normalization_errors():
    a1 = build_root_system("A1")
    with pytest.raises(NotDeepError, match="not sufficiently deep"):
        normalization_constant(a1, (0,), BszParams((F(1, 2), F(1, 3))))
    with pytest.raises(NotDeepError):
        monic_p(a1, (0,), BszParams((F(1, 2), F(1, 3))))
    with pytest.raises(ValueError):
        build_P(a1, (-1,), BszParams())
    with pytest.raises(EnumerationCapExceeded):
        build_P(build_root_system("B3"), (1, 1, 1),
                BszParams((F(1, 2), F(1, 3)), (F(1, 5), F(1, 7))), cap=1000)


@given(st.sampled_from(("B2", "G2", "C3")), st.lists(param, min_size=4, max_size=4), st.data())
@settings(max_examples=25, deadline=None)
def test_norm_matches_stabilizer_poincare(name, ps, data):
    rs = build_root_system(name)
    ms = data.draw(st.integers(1, 2))
    ml = data.draw(st.integers(1, 2))
    p = BszParams(ps[:ms], ps[2:2 + ml])
    lam = tuple(data.draw(st.lists(st.integers(0, 3), min_size=rs.rank, max_size=rs.rank)))
    if not is_sufficiently_deep(rs, lam, ms, ml):
        return
    tilde = lambda_tilde(rs, lam, ms, ml)
    stab = weyl_group(rs).stabilizer(tilde)
    assert normalization_constant(rs, lam, p) == poincare_enumerated(stab, p.bold_ts, p.bold_tl)


def test_pairing_examples():
    a1 = build_root_system("A1")
    t = F(1, 3)
    p = BszParams((t,))
    assert exact_pairing_P_m(a1, (0,), (2,), p) == -(1 + t)
    for lam in range(4):
        assert exact_pairing_P_m(a1, (lam,), (lam,), p) == 1
        assert exact_pairing_P_m(a1, (lam + 2,), (lam,), p) == 0
        assert exact_pairing_P_m(a1, (lam,), (lam + 1,), p) == 0
    with pytest.raises(ValueError):
        exact_pairing_P_m(a1, (-1,), (0,), p)


@pytest.mark.parametrize("name,ms,ml", [("A1", 2, 0), ("A2", 1, 0), ("B2", 1, 1), ("B2", 2, 1),
                                        ("G2", 1, 1)])
def test_theorems_on_small_grid(name, ms, ml):
    rs = build_root_system(name)
    vals = (F(1, 2), F(-1, 3), F(2, 5), F(-3, 7))
    p = BszParams(vals[:ms], vals[2:2 + ml])
    ws = dominant_weights(rs.rank, 2)
    for lam in ws:
        P = build_P(rs, lam, p)
        for mu in ws:
            v = exact_pairing_P_m(rs, lam, mu, p)
            if mu == lam:
                assert v == 1
            elif not dominance_leq(rs, lam, mu):
                assert v == 0, (lam, mu)
        if P.deep:
            assert P.is_triangular(rs)
            assert P.leading_coefficient == normalization_constant(rs, lam, p)
            assert exact_pairing_P_P(rs, lam, lam, p) == P.norm_const
    for lam in ws:
        for mu in ws:
            if lam == mu:
                continue
            a = exact_pairing_P_P(rs, lam, mu, p)
            assert a == exact_pairing_P_P(rs, mu, lam, p)
            deep_l = is_sufficiently_deep(rs, lam, ms, ml)
            deep_m = is_sufficiently_deep(rs, mu, ms, ml)
            if deep_l and deep_m:
                assert a == 0, (lam, mu)


def test_one_deep_literal_pairing_can_be_nonzero():
    # M = 2 on A1: [2] is deep, [0] is not, and the shallow polynomial climbs above [2]
    a1 = build_root_system("A1")
    p = BszParams((F(1, 2), F(1, 3)))
    P0 = build_P(a1, (0,), p)
    assert not P0.deep and (2,) in P0.mono_exp
    assert exact_pairing_P_m(a1, (2,), (2,), p) == 1
    assert exact_pairing_P_P(a1, (2,), (0,), p) == P0.mono_exp[(2,)] != 0
    # the part of P_[0] lying in span{m_nu : nu below [0]} is orthogonal to P_[2]
    assert exact_pairing_P_m(a1, (2,), (0,), p) == 0


def test_orthonormal_characters_without_parameters():
    rs = build_root_system("B2")
    ws = dominant_weights(2, 2)
    for lam in ws:
        for mu in ws:
            assert exact_pairing_P_P(rs, lam, mu, BszParams()) == (1 if lam == mu else 0)
