"""Classic one-variable Bernstein-Szego polynomials in closed form.

Works directly with Laurent coefficients in ``z = e^{ix}``; the Fourier-cosine
monomials are ``m_0 = 1`` and ``m_k = z^k + z^{-k}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod


@dataclass(frozen=True)
class ClassicParams:
    ts: tuple = ()

    def __post_init__(self):
        ts = tuple(Fraction(t) for t in self.ts)
        for t in ts:
            if not (-1 < t < 1) or t == 0:
                raise ValueError(f"parameter {t} outside (-1, 1) \\ {{0}}")
        object.__setattr__(self, "ts", ts)

    @property
    def M(self) -> int:
        return len(self.ts)


def _check_degree(ell: int, params: ClassicParams):
    if ell < 0 or ell < params.M - 1:
        raise ValueError(f"closed form needs ell >= M - 1 = {params.M - 1}, got ell = {ell}")


def _elementary(ts) -> list[Fraction]:
    e = [Fraction(1)]
    for t in ts:
        e = [a + t * b for a, b in zip(e + [Fraction(0)], [Fraction(0)] + e)]
    return e


def classic_norm_constant(ell: int, params: ClassicParams) -> Fraction:
    _check_degree(ell, params)
    if ell == params.M - 1:
        return 1 - prod(params.ts, start=Fraction(1))
    return Fraction(1)


def classic_norm(ell: int, params: ClassicParams) -> Fraction:
    """Squared norm of the monic polynomial, ``1 / N_ell``."""
    return 1 / classic_norm_constant(ell, params)


def classic_p(ell: int, params: ClassicParams) -> list[Fraction]:
    """Monic coefficients ``[a_0, ..., a_ell]`` of ``p_ell = sum_k a_k m_k``."""
    _check_degree(ell, params)
    e = _elementary(params.ts)
    # numerator c(x) z^{ell+1} - c(-x) z^{-(ell+1)}, with c(x) = sum_k e_k z^{-2k}
    top = ell + 1
    num: dict[int, Fraction] = {}
    for k, ek in enumerate(e):
        n = top - 2 * k
        num[n] = num.get(n, 0) + ek
        num[-n] = num.get(-n, 0) - ek
    # divide by z - 1/z:  num_n = q_{n-1} - q_{n+1}, solved from the top down
    q: dict[int, Fraction] = {}
    for j in range(top - 1, -top, -1):
        q[j] = num.get(j + 1, Fraction(0)) + q.get(j + 2, Fraction(0))
    assert num.get(-top, 0) == -q[1 - top], "division by delta left a remainder"
    assert all(q[j] == q[-j] for j in q), "quotient is not symmetric"
    norm = classic_norm_constant(ell, params)
    return [q.get(k, Fraction(0)) / norm for k in range(ell + 1)]
