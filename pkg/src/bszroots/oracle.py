"""Floating-point verification path: uniform-grid quadrature on the torus.

The torus is parametrised by the angles ``theta_i = <omega_i, x>`` (fundamental
weights against ``x``).  Translating ``x`` by ``2 pi`` times a simple coroot
moves exactly one angle by ``2 pi``, so the torus is the standard cube
``[0, 2 pi)^rank`` and ``e^{i<lam, x>} = exp(i lam . theta)`` has integer
frequencies.  The uniform product grid integrates every frequency whose
coordinates are not multiples of ``N`` to zero exactly; for the analytic weight
function the error decays geometrically in ``N``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .bszcore import BszParams
from .rootsys import RootSystem, coroot_pairing, to_simple_root_coords
from .symalg import ExponentialSum, SymmetricPolynomial, character_to_monomials
from .weightlat import dominance_leq, dominant_weights, is_sufficiently_deep, saturated_set
from .weylgrp import weyl_group

DEFAULT_POINTS = {1: 64, 2: 64, 3: 32, 4: 16}
MIN_POINTS = 8
MAX_CONDITION = 1e12


class SingularGramError(np.linalg.LinAlgError):
    pass


@dataclass(frozen=True)
class TorusGrid:
    rank: int
    points_per_dim: int
    theta: np.ndarray = field(repr=False, compare=False)

    @property
    def size(self) -> int:
        return self.points_per_dim ** self.rank


def torus_grid(rank: int, points_per_dim: int | None = None) -> TorusGrid:
    n = points_per_dim or DEFAULT_POINTS[rank]
    if n < MIN_POINTS:
        raise ValueError(f"grid needs at least {MIN_POINTS} points per dimension")
    axis = 2 * np.pi * np.arange(n) / n
    mesh = np.meshgrid(*([axis] * rank), indexing="ij")
    return TorusGrid(rank, n, np.stack([m.ravel() for m in mesh], axis=1))


def _waves(theta: np.ndarray, exponents) -> np.ndarray:
    k = np.asarray(exponents, dtype=float).reshape(-1, theta.shape[-1])
    return np.exp(1j * theta @ k.T)


def _c_values(z: np.ndarray, ts) -> np.ndarray:
    out = np.ones_like(z)
    for t in ts:
        out = out * (1 + float(t) * z)
    return out


def weight_function(x, rs: RootSystem, params: BszParams) -> np.ndarray:
    """``|delta|^2 / (C(x) C(-x))`` at torus angles ``x`` (shape ``(rank,)`` or ``(P, rank)``)."""
    theta = np.atleast_2d(np.asarray(x, dtype=float))
    W = weyl_group(rs)
    delta = np.zeros(theta.shape[0], dtype=complex)
    for w in W:
        delta += w.sign * _waves(theta, w(rs.rho))[:, 0]
    cc = np.ones(theta.shape[0], dtype=complex)
    for a in rs.positive_roots:
        ts = params.tl if a.is_long else params.ts
        z = _waves(theta, a.fw_coords)[:, 0]
        # C(-x) = conj C(x) for real parameters
        cc *= _c_values(np.conj(z), ts) * _c_values(z, ts)
    out = (np.abs(delta) ** 2 / cc).real
    return out if np.ndim(x) > 1 else out[0]


def evaluate(rs: RootSystem, f, grid: TorusGrid) -> np.ndarray:
    """Values of a symmetric polynomial or exponential sum on the grid nodes."""
    if isinstance(f, SymmetricPolynomial):
        W = weyl_group(rs)
        out = np.zeros(grid.size, dtype=complex)
        for lam, c in f.items():
            orbit = sorted(W.orbit(lam))
            out += float(c) * _waves(grid.theta, orbit).sum(axis=1)
        return out
    if isinstance(f, ExponentialSum):
        keys = sorted(f.keys())
        coeffs = np.array([float(f[k]) for k in keys])
        return _waves(grid.theta, keys) @ coeffs if keys else np.zeros(grid.size, complex)
    # dict of float coefficients on monomials
    return evaluate_float(rs, f, grid)


def evaluate_float(rs: RootSystem, coeffs: dict, grid: TorusGrid) -> np.ndarray:
    W = weyl_group(rs)
    out = np.zeros(grid.size, dtype=complex)
    for lam, c in coeffs.items():
        out += c * _waves(grid.theta, sorted(W.orbit(lam))).sum(axis=1)
    return out


class Quadrature:
    """Inner product ``<f, g> = (1 / |W| Vol) int f conj(g) Delta`` on a fixed grid."""

    def __init__(self, rs: RootSystem, params: BszParams, grid: TorusGrid | None = None):
        self.rs = rs
        self.params = params.check(rs)
        self.grid = grid or torus_grid(rs.rank)
        if self.grid.rank != rs.rank:
            raise ValueError("grid rank does not match the root system")
        self.delta = weight_function(self.grid.theta, rs, params)
        self._mono: dict = {}

    def monomial_values(self, lam) -> np.ndarray:
        lam = tuple(lam)
        if lam not in self._mono:
            orbit = sorted(weyl_group(self.rs).orbit(lam))
            self._mono[lam] = _waves(self.grid.theta, orbit).sum(axis=1)
        return self._mono[lam]

    def values(self, f) -> np.ndarray:
        if isinstance(f, dict):
            out = np.zeros(self.grid.size, dtype=complex)
            for lam, c in f.items():
                out += c * self.monomial_values(lam)
            return out
        if isinstance(f, SymmetricPolynomial):
            return self.values({lam: float(c) for lam, c in f.items()})
        return evaluate(self.rs, f, self.grid)

    def character_values(self, lam) -> np.ndarray:
        lam = tuple(lam)
        key = ("chi", lam)
        if key not in self._mono:
            mult = character_to_monomials(self.rs, lam)
            self._mono[key] = sum(float(c) * self.monomial_values(k) for k, c in mult.items())
        return self._mono[key]

    def inner(self, f, g) -> complex:
        return np.mean(self.values(f) * np.conj(self.values(g)) * self.delta) / len(weyl_group(self.rs))

    def gram(self, weights, basis: str = "monomial") -> np.ndarray:
        """Matrix of ``<b_i, b_j>`` for monomials or Weyl characters at ``weights``."""
        get = self.monomial_values if basis == "monomial" else self.character_values
        vals = np.stack([get(w) for w in weights])
        return (vals * self.delta) @ np.conj(vals).T / (self.grid.size * len(weyl_group(self.rs)))


def inner_product_num(f, g, rs: RootSystem, params: BszParams,
                      grid: TorusGrid | None = None) -> float:
    """Quadrature value of ``<f, g>``; real for real-coefficient inputs."""
    return float(Quadrature(rs, params, grid).inner(f, g).real)


def linear_key(rs: RootSystem, lam):
    """Total order extending dominance: ``<lam, 2 rho^vee>`` first, then lexicographic."""
    return (sum(coroot_pairing(lam, a) for a in rs.positive_roots), tuple(lam))


def _linear_lower_set(rs: RootSystem, lam) -> list:
    key = linear_key(rs, lam)
    # <kappa, 2 rho^vee> = sum_i kappa_i h_i with every h_i >= 1
    h = [sum(a.coroot[i] for a in rs.positive_roots) for i in range(rs.rank)]
    bound = max(key[0] // hi for hi in h)
    return sorted((k for k in dominant_weights(rs.rank, bound) if linear_key(rs, k) < key),
                  key=lambda k: linear_key(rs, k))


def gram_schmidt_p(rs: RootSystem, lam, params: BszParams, grid: TorusGrid | None = None,
                   mode: str = "dominance", quad: Quadrature | None = None) -> dict:
    """Monic orthogonalisation of ``m_lam`` against the weights strictly below it.

    ``mode="dominance"`` uses the dominance-lower set (the defining conditions);
    ``mode="linear"`` uses every dominant weight preceding ``lam`` in ``linear_key``.
    """
    lam = tuple(lam)
    quad = quad or Quadrature(rs, params, grid)
    if mode == "dominance":
        lower = sorted((mu for mu in saturated_set(rs, lam).dominant_members if mu != lam),
                       key=lambda k: linear_key(rs, k))
    elif mode == "linear":
        lower = _linear_lower_set(rs, lam)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if not lower:
        return {lam: 1.0}
    # The conditions only involve the span of the m_mu below lam, which the characters
    # chi_mu span as well; their Gram matrix is far better conditioned.
    vals = np.stack([quad.character_values(mu) for mu in lower])
    A = quad.gram(lower, basis="character")
    cond = np.linalg.cond(A)
    if not np.isfinite(cond) or cond > MAX_CONDITION:
        raise SingularGramError(f"Gram matrix below {lam} is numerically singular "
                                f"(condition number {cond:.3g})")
    scale = quad.grid.size * len(weyl_group(rs))
    rhs = (quad.monomial_values(lam) * quad.delta) @ np.conj(vals).T / scale
    # <m_lam + sum_j a_j chi_j, chi_k> = 0 for every k below lam
    a = np.linalg.solve(A.T, -rhs)
    if np.max(np.abs(a.imag), initial=0.0) > 1e-9:
        raise ArithmeticError("Gram-Schmidt produced complex coefficients")
    out = {lam: 1.0}
    for mu, x in zip(lower, a.real):
        for k, c in character_to_monomials(rs, mu).items():
            out[k] = out.get(k, 0.0) + float(c) * x
    return out


@dataclass
class ScanReport:
    system: str
    params: BszParams
    bound: int
    points_per_dim: int
    threshold: float
    vacuous: bool
    pairs: list = field(default_factory=list)
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "system": self.system,
            "ts": [str(t) for t in self.params.ts],
            "tl": [str(t) for t in self.params.tl],
            "bound": self.bound,
            "grid": self.points_per_dim,
            "refined_grid": 2 * self.points_per_dim,
            "threshold": self.threshold,
            "vacuous": self.vacuous,
            "note": self.note,
            "pairs": self.pairs,
        }


def shallow_orthogonality_scan(rs: RootSystem, params: BszParams, bound: int,
                               grid: TorusGrid | None = None,
                               threshold: float = 1e-6) -> ScanReport:
    """Numeric ``<p_lam, p_mu>`` for incomparable pairs where neither weight is deep."""
    params.check(rs)
    grid = grid or torus_grid(rs.rank)
    report = ScanReport(rs.name, params, bound, grid.points_per_dim, threshold, False)
    if params.Ms < 2 and params.Ml < 2:
        report.vacuous = True
        report.note = "every dominant weight is sufficiently deep when Ms, Ml <= 1"
        return report
    shallow = [lam for lam in dominant_weights(rs.rank, bound)
               if not is_sufficiently_deep(rs, lam, params.Ms, params.Ml)]
    pairs = [(a, b) for a, b in combinations(shallow, 2)
             if not dominance_leq(rs, a, b) and not dominance_leq(rs, b, a)]
    if not pairs:
        report.note = "no incomparable pairs of shallow weights in range"
        return report
    coarse = Quadrature(rs, params, grid)
    fine = Quadrature(rs, params, torus_grid(rs.rank, 2 * grid.points_per_dim))
    cache: dict = {}

    def p(q, lam):
        if (id(q), lam) not in cache:
            cache[id(q), lam] = gram_schmidt_p(rs, lam, params, quad=q)
        return cache[id(q), lam]

    for a, b in pairs:
        v = coarse.inner(p(coarse, a), p(coarse, b))
        v2 = fine.inner(p(fine, a), p(fine, b))
        err = abs(v2 - v)
        report.pairs.append({
            "lam": list(a),
            "mu": list(b),
            # weights in different cosets of the root lattice are orthogonal for any weight
            "same_coset": all(x.denominator == 1 for x in
                              to_simple_root_coords(rs, [x - y for x, y in zip(a, b)])),
            "value": float(v.real),
            "value_refined": float(v2.real),
            "quadrature_error_estimate": float(err),
            "exceeds_threshold": bool(abs(v2) > threshold),
        })
    return report
