"""Exact arithmetic with W-invariant trigonometric polynomials.

Everything is stored by exponent support: an ``ExponentialSum`` maps weights to
rational coefficients, a ``SymmetricPolynomial`` maps dominant weights to
coefficients on the orbit-sum basis ``m_lam``, and a ``CharacterExpansion``
maps dominant weights to coefficients on the Weyl characters ``chi_lam``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .rootsys import RootSystem, Weight, build_root_system, coroot_pairing, inner, to_simple_root_coords
from .weightlat import is_dominant, saturated_set
from .weylgrp import to_dominant, weyl_group


class _Combination:
    """Finite formal linear combination with exact coefficients and no stored zeros."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict = {}
        if terms:
            for k, v in dict(terms).items():
                v = Fraction(v)
                if v:
                    self.terms[tuple(k)] = v

    def _new(self, terms):
        out = type(self).__new__(type(self))
        out.terms = {k: v for k, v in terms.items() if v}
        return out

    def __eq__(self, other):
        return type(self) is type(other) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def items(self):
        return self.terms.items()

    def keys(self):
        return self.terms.keys()

    def __getitem__(self, key) -> Fraction:
        return self.terms.get(tuple(key), Fraction(0))

    def __add__(self, other):
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return self._new(terms)

    def __neg__(self):
        return self._new({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return self._new({k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __repr__(self):
        body = " + ".join(f"({v})*{list(k)}" for k, v in sorted(self.terms.items()))
        return f"{type(self).__name__}({body or '0'})"


class ExponentialSum(_Combination):
    """Element of the group algebra of the weight lattice: sum of ``c * e^{i<nu, x>}``."""

    def __mul__(self, other):
        if not isinstance(other, ExponentialSum):
            return self.scale(other)
        terms: dict = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                k = tuple(i + j for i, j in zip(a, b))
                terms[k] = terms.get(k, 0) + x * y
        return self._new(terms)

    def shift(self, nu):
        return self._new({tuple(k + n for k, n in zip(key, nu)): v
                          for key, v in self.terms.items()})


class SymmetricPolynomial(_Combination):
    """Expansion on the monomial symmetric functions ``m_lam``."""


class CharacterExpansion(_Combination):
    """Expansion on the Weyl characters ``chi_lam``."""


def multiply(f: ExponentialSum, g: ExponentialSum) -> ExponentialSum:
    return f * g


def monomial(rs: RootSystem, lam) -> ExponentialSum:
    """Orbit sum of ``e^lam``; every orbit exponential gets coefficient one."""
    if not is_dominant(lam):
        raise ValueError(f"monomial needs a dominant weight, got {tuple(lam)}")
    return ExponentialSum({mu: 1 for mu in weyl_group(rs).orbit(lam)})


def to_exponential(rs: RootSystem, f: SymmetricPolynomial) -> ExponentialSum:
    W = weyl_group(rs)
    terms: dict = {}
    for lam, c in f.items():
        for mu in W.orbit(lam):
            terms[mu] = terms.get(mu, 0) + c
    return ExponentialSum(terms)


def from_exponential(rs: RootSystem, f: ExponentialSum) -> SymmetricPolynomial:
    """Collect a W-invariant exponential sum on the monomial basis."""
    out = SymmetricPolynomial({k: v for k, v in f.items() if is_dominant(k)})
    if to_exponential(rs, out) != f:
        raise ValueError("exponential sum is not W-invariant")
    return out


def alternating_sum(rs: RootSystem, nu) -> ExponentialSum:
    """``sum_w (-1)^w e^{w nu}``; the Weyl denominator when ``nu = rho``."""
    terms: dict = {}
    for w in weyl_group(rs):
        k = w(nu)
        terms[k] = terms.get(k, 0) + w.sign
    return ExponentialSum(terms)


def reduce_alternating(rs: RootSystem, nu) -> tuple[int, Weight] | None:
    """Write ``A_nu / A_rho`` as ``sign * chi_lam``; ``None`` when ``nu`` is singular."""
    dom, steps = to_dominant(rs, nu)
    if any(x == 0 for x in dom):
        return None
    return (-1) ** steps, tuple(x - r for x, r in zip(dom, rs.rho))


def weyl_dimension(rs: RootSystem, lam) -> Fraction:
    shifted = [x + r for x, r in zip(lam, rs.rho)]
    out = Fraction(1)
    for a in rs.positive_roots:
        out *= Fraction(coroot_pairing(shifted, a), coroot_pairing(rs.rho, a))
    return out


def depth(rs: RootSystem, mu, lam) -> Fraction:
    """Height of ``lam - mu`` measured in simple roots."""
    return sum(to_simple_root_coords(rs, [l - m for l, m in zip(lam, mu)]))


def character_to_monomials(rs: RootSystem, lam) -> SymmetricPolynomial:
    """Dominant weight multiplicities of the irreducible module ``lam`` (Freudenthal)."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"character needs a dominant weight, got {lam}")
    return SymmetricPolynomial(_freudenthal(rs.name, lam))


@lru_cache(maxsize=None)
def _freudenthal(name: str, lam: Weight) -> dict:
    rs = build_root_system(name)
    members = saturated_set(rs, lam).dominant_members
    order = sorted(members, key=lambda mu: (depth(rs, mu, lam), mu))
    top = [x + r for x, r in zip(lam, rs.rho)]
    norm_top = inner(rs, top, top)
    mult = {lam: Fraction(1)}
    for mu in order[1:]:
        acc = Fraction(0)
        for a in rs.positive_roots:
            nu = mu
            while True:
                nu = tuple(x + y for x, y in zip(nu, a.fw_coords))
                d, _ = to_dominant(rs, nu)
                if d not in members:
                    break
                acc += mult[d] * inner(rs, nu, a.fw_coords)
        shifted = [x + r for x, r in zip(mu, rs.rho)]
        mult[mu] = 2 * acc / (norm_top - inner(rs, shifted, shifted))
    return mult


def _order_key(rs: RootSystem):
    def key(nu):
        c = to_simple_root_coords(rs, nu)
        return (sum(c), c)
    return key


def character_by_division(rs: RootSystem, lam) -> SymmetricPolynomial:
    """Exact quotient ``A_{lam+rho} / A_rho`` by leading-term elimination."""
    key = _order_key(rs)
    denom = alternating_sum(rs, rs.rho)
    rem = alternating_sum(rs, [x + r for x, r in zip(lam, rs.rho)])
    quotient: dict = {}
    while rem:
        top = max(rem.keys(), key=key)
        c = rem[top]
        q = tuple(t - r for t, r in zip(top, rs.rho))
        quotient[q] = quotient.get(q, 0) + c
        rem = rem - denom.shift(q).scale(c)
    return from_exponential(rs, ExponentialSum(quotient))


def expand_characters(rs: RootSystem, ce: CharacterExpansion) -> SymmetricPolynomial:
    out = SymmetricPolynomial()
    for lam, c in ce.items():
        out = out + character_to_monomials(rs, lam).scale(c)
    return out
