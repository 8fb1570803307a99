"""Bernstein-Szego polynomials for root systems via the explicit alternating-sum formula.

``P_lam = delta^{-1} sum_w (-1)^w C(x_w) e^{i<rho+lam, x_w>}`` is expanded by
splitting ``C`` into monomials: every choice of exponents ``k_alpha`` gives a
single alternating sum over ``rho + lam - sum k_alpha alpha``, which is either
zero or a signed Weyl character.  Pairings against monomials reduce to finite
constant-term extractions because all exponents involved lie in ``Q_+``.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from math import prod

from .rootsys import RootSystem, Weight, build_root_system, height_stats, to_simple_root_coords
from .symalg import CharacterExpansion, SymmetricPolynomial, expand_characters, reduce_alternating
from .weightlat import (
    DEFAULT_CAP,
    EnumerationCapExceeded,
    is_dominant,
    is_sufficiently_deep,
    lambda_tilde,
    min_pairing_long,
    min_pairing_short,
)
from .weylgrp import weyl_group


class NotDeepError(ValueError):
    pass


def _as_params(values) -> tuple[Fraction, ...]:
    out = tuple(Fraction(v) for v in values)
    for t in out:
        if not (-1 < t < 1) or t == 0:
            raise ValueError(f"parameter {t} outside (-1, 1) \\ {{0}}")
    return out


@dataclass(frozen=True)
class BszParams:
    """Short- and long-root parameters of the c-functions."""

    ts: tuple = ()
    tl: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "ts", _as_params(self.ts))
        object.__setattr__(self, "tl", _as_params(self.tl))

    @property
    def Ms(self) -> int:
        return len(self.ts)

    @property
    def Ml(self) -> int:
        return len(self.tl)

    @property
    def bold_ts(self) -> Fraction:
        return -prod(self.ts, start=Fraction(1))

    @property
    def bold_tl(self) -> Fraction:
        return -prod(self.tl, start=Fraction(1))

    def check(self, rs: RootSystem) -> "BszParams":
        if rs.simply_laced and self.tl:
            raise ValueError(f"{rs.name} is simply laced; long-root parameters are not allowed")
        return self

    def of(self, which: str) -> tuple:
        if which == "short":
            return self.ts
        if which == "long":
            return self.tl
        raise ValueError(f"root class must be 'short' or 'long', got {which!r}")


def c_coefficients(params: BszParams, which: str = "short") -> list[Fraction]:
    """Coefficients of ``c(z) = prod (1 + t_m z)``, i.e. elementary symmetric functions."""
    e = [Fraction(1)]
    for t in params.of(which):
        e = [a + t * b for a, b in zip(e + [Fraction(0)], [Fraction(0)] + e)]
    return e


def inv_c_coefficients(params: BszParams, which: str, n_max: int) -> list[Fraction]:
    """Taylor coefficients of ``1 / c(z)`` up to degree ``n_max``."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    e = c_coefficients(params, which)
    f = [Fraction(1)]
    for n in range(1, n_max + 1):
        f.append(-sum((e[k] * f[n - k] for k in range(1, min(n, len(e) - 1) + 1)), Fraction(0)))
    return f


@dataclass(frozen=True)
class BszPolynomial:
    lam: Weight
    params: BszParams
    char_exp: CharacterExpansion
    mono_exp: SymmetricPolynomial
    norm_const: Fraction | None
    deep: bool
    monic: bool = False

    def is_triangular(self, rs: RootSystem) -> bool:
        from .weightlat import dominance_leq
        return all(dominance_leq(rs, mu, self.lam) for mu in self.mono_exp)

    @property
    def leading_coefficient(self) -> Fraction:
        return self.mono_exp[self.lam]


def _expansion_size(rs: RootSystem, params: BszParams) -> int:
    return prod(params.Ml + 1 if a.is_long else params.Ms + 1 for a in rs.positive_roots)


def _guard(rs, params, cap):
    size = _expansion_size(rs, params)
    if size > cap:
        raise EnumerationCapExceeded(size, cap)


def shifted_weights(rs: RootSystem, lam, params: BszParams) -> dict:
    """Coefficient of ``e^{rho + lam - sum k_alpha alpha}`` in ``C(x) e^{rho+lam}``."""
    terms = {tuple(x + r for x, r in zip(lam, rs.rho)): Fraction(1)}
    cs, cl = c_coefficients(params, "short"), c_coefficients(params, "long")
    for a in rs.positive_roots:
        coeffs = cl if a.is_long else cs
        if len(coeffs) == 1:
            continue
        nxt: dict = {}
        for nu, v in terms.items():
            for k, e in enumerate(coeffs):
                key = tuple(x - k * y for x, y in zip(nu, a.fw_coords))
                nxt[key] = nxt.get(key, 0) + v * e
        terms = {k: v for k, v in nxt.items() if v}
    return terms


def build_P(rs: RootSystem, lam, params: BszParams, cap: int = DEFAULT_CAP) -> BszPolynomial:
    """Expand the explicit formula on Weyl characters and monomials."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    params.check(rs)
    _guard(rs, params, cap)
    return _build_P(rs.name, lam, params)


@lru_cache(maxsize=4096)
def _build_P(name: str, lam: Weight, params: BszParams) -> BszPolynomial:
    rs = build_root_system(name)
    chars: dict = {}
    for nu, v in shifted_weights(rs, lam, params).items():
        red = reduce_alternating(rs, nu)
        if red is None:
            continue
        sign, mu = red
        chars[mu] = chars.get(mu, 0) + sign * v
    char_exp = CharacterExpansion(chars)
    mono_exp = expand_characters(rs, char_exp)
    deep = is_sufficiently_deep(rs, lam, params.Ms, params.Ml)
    norm = None
    if deep:
        norm = normalization_constant(rs, lam, params)
        if mono_exp[lam] != norm:
            raise AssertionError(
                f"leading coefficient {mono_exp[lam]} differs from N_lam = {norm} at {lam}")
    return BszPolynomial(lam, params, char_exp, mono_exp, norm, deep)


def _deepness_diagnostic(rs, lam, params) -> str:
    ms, ml = min_pairing_short(rs, lam), min_pairing_long(rs, lam)
    msg = f"{lam} is not sufficiently deep: m_s={ms} < Ms-1={params.Ms - 1}"
    if ml is not None:
        msg += f" or m_l={ml} < Ml-1={params.Ml - 1}"
    return msg


def normalization_constant(rs: RootSystem, lam, params: BszParams) -> Fraction:
    """Leading coefficient ``N_lam`` as a product over roots orthogonal to ``lam~``."""
    lam = tuple(lam)
    params.check(rs)
    if not is_dominant(lam) or not is_sufficiently_deep(rs, lam, params.Ms, params.Ml):
        raise NotDeepError(_deepness_diagnostic(rs, lam, params))
    tilde = lambda_tilde(rs, lam, params.Ms, params.Ml)
    ts, tl = params.bold_ts, params.bold_tl
    out = Fraction(1)
    for a in rs.positive_roots:
        if sum(c * x for c, x in zip(a.coroot, tilde)) != 0:
            continue
        hs, hl = (int(h) for h in height_stats(rs, a))
        es, el = (hs, hl + 1) if a.is_long else (hs + 1, hl)
        # a root class with M = 0 has no parameter; its exponents must vanish here
        assert params.Ms or (hs == 0 and es == 0), "short exponent with Ms = 0"
        assert params.Ml or (hl == 0 and el == 0), "long exponent with Ml = 0"
        den = 1 - ts ** hs * tl ** hl
        if den == 0:
            raise ZeroDivisionError(f"vanishing factor for root {a.sr_coords}")
        out *= (1 - ts ** es * tl ** el) / den
    return out


def monic_p(rs: RootSystem, lam, params: BszParams, cap: int = DEFAULT_CAP) -> BszPolynomial:
    P = build_P(rs, lam, params, cap)
    if not P.deep:
        raise NotDeepError(_deepness_diagnostic(rs, tuple(lam), params))
    inv = 1 / P.norm_const
    return replace(P, char_exp=P.char_exp.scale(inv), mono_exp=P.mono_exp.scale(inv), monic=True)


@lru_cache(maxsize=256)
def _ct_table(name: str, params: BszParams, box: tuple[int, ...]) -> dict:
    """Coefficients of ``prod_alpha (1 - e^alpha) / c(e^alpha)`` on the box ``0 <= sr <= box``."""
    rs = build_root_system(name)
    table = {(0,) * rs.rank: Fraction(1)}
    for a in rs.positive_roots:
        which = "long" if a.is_long else "short"
        n_max = min(b // c for b, c in zip(box, a.sr_coords) if c > 0)
        f = inv_c_coefficients(params, which, n_max)
        g = [f[0]] + [f[n] - f[n - 1] for n in range(1, n_max + 1)]
        nxt: dict = {}
        for key, v in table.items():
            for n, gn in enumerate(g):
                k = tuple(x + n * c for x, c in zip(key, a.sr_coords))
                if any(x > b for x, b in zip(k, box)):
                    break
                if gn:
                    nxt[k] = nxt.get(k, 0) + v * gn
        table = nxt
    return table


def exact_pairing_P_m(rs: RootSystem, lam, mu, params: BszParams) -> Fraction:
    """``<P_lam, m_mu>`` as a finite sum of constant terms over the orbit of ``mu``."""
    lam, mu = tuple(lam), tuple(mu)
    if not (is_dominant(lam) and is_dominant(mu)):
        raise ValueError("both weights must be dominant")
    params.check(rs)
    gammas = []
    for nu in weyl_group(rs).orbit(mu):
        c = to_simple_root_coords(rs, [n - l for n, l in zip(nu, lam)])
        # the integrand only has exponents in Q_+, so anything else has zero constant term
        if all(x.denominator == 1 and x >= 0 for x in c):
            gammas.append(tuple(int(x) for x in c))
    if not gammas:
        return Fraction(0)
    box = tuple(max(g[i] for g in gammas) for i in range(rs.rank))
    table = _ct_table(rs.name, params, box)
    return sum((table.get(g, Fraction(0)) for g in gammas), Fraction(0))


def exact_pairing_P_P(rs: RootSystem, lam, mu, params: BszParams,
                      cap: int = DEFAULT_CAP) -> Fraction:
    """``<P_lam, P_mu>`` through the monomial expansion of ``P_mu`` (real coefficients)."""
    Pm = build_P(rs, mu, params, cap)
    return sum((c * exact_pairing_P_m(rs, lam, nu, params) for nu, c in Pm.mono_exp.items()),
               Fraction(0))
