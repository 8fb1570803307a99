"""Verification suites shared by the CLI and the acceptance tests.

Each suite returns a ``SuiteReport``: a flat list of named checks with status
``pass``, ``fail`` or ``skip`` (the last only when an enumeration cap is hit).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import prod

from .bszcore import (
    BszParams,
    build_P,
    exact_pairing_P_m,
    exact_pairing_P_P,
    monic_p,
    normalization_constant,
)
from .rootsys import SUPPORTED, build_root_system, to_simple_root_coords
from .univariate import ClassicParams, classic_norm, classic_norm_constant, classic_p
from .weightlat import (
    DEFAULT_CAP,
    EnumerationCapExceeded,
    dominance_leq,
    dominant_weights,
    is_sufficiently_deep,
    lambda_tilde,
    min_pairing_long,
    min_pairing_short,
    saturated_set,
    verify_hull_lemma,
    verify_orbit_prop,
    verify_saturated_prop,
    verify_vertex_prop,
)
from .weylgrp import poincare_enumerated, poincare_product, weyl_group

CONFIGS = ((0, 0), (1, 1), (2, 1), (2, 2))
THEOREM_SYSTEMS = ("A1", "A2", "B2", "G2")
LATTICE_SYSTEMS = ("A1", "A2", "B2", "G2", "A3", "B3")
VERTEX_SYSTEMS = ("A1", "A2", "B2", "G2")
POINCARE_SYSTEMS = tuple(s for s in SUPPORTED if build_root_system(s).rank <= 3) + ("F4",)
SUITES = ("lattice", "theorems", "poincare", "classic", "oracle")


@dataclass
class Check:
    name: str
    system: str
    status: str
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"check": self.name, "system": self.system, "status": self.status, **self.details}


@dataclass
class SuiteReport:
    suite: str
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def counts(self) -> dict:
        out = {"pass": 0, "fail": 0, "skip": 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    def extend(self, other: "SuiteReport"):
        self.checks.extend(other.checks)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "passed": self.passed, "counts": self.counts(),
                "checks": [c.to_dict() for c in self.checks]}


def random_rational(rng: random.Random, max_abs: Fraction = Fraction(1), max_den: int = 9) -> Fraction:
    """Nonzero rational with ``|t| < 1`` and ``|t| <= max_abs``."""
    while True:
        q = rng.randint(2, max_den)
        p = rng.randint(-(q - 1), q - 1)
        t = Fraction(p, q)
        if t and abs(t) <= max_abs:
            return t


def draw_params(rng: random.Random, system: str, ms: int, ml: int,
                max_abs: Fraction = Fraction(1)) -> BszParams:
    if build_root_system(system).simply_laced:
        ml = 0
    return BszParams(tuple(random_rational(rng, max_abs) for _ in range(ms)),
                     tuple(random_rational(rng, max_abs) for _ in range(ml)))


def system_configs(system: str, configs=CONFIGS):
    """Parameter-count configurations, long entries dropped for simply-laced systems."""
    out = []
    for ms, ml in configs:
        cfg = (ms, 0 if build_root_system(system).simply_laced else ml)
        if cfg not in out:
            out.append(cfg)
    return out


def _w(lam) -> str:
    return "[" + ",".join(str(x) for x in lam) + "]"


def _params_dict(p: BszParams) -> dict:
    return {"ts": [str(t) for t in p.ts], "tl": [str(t) for t in p.tl]}


# -- classic -----------------------------------------------------------------

def classic_suite(seed: int = 0, draws: int = 3, max_ell: int = 6) -> SuiteReport:
    rng = random.Random(seed)
    rs = build_root_system("A1")
    report = SuiteReport("classic")
    # the instantiated closed form
    cp = ClassicParams((Fraction(1, 2), Fraction(1, 3), Fraction(1, 5)))
    ok = classic_norm_constant(2, cp) == Fraction(29, 30) and classic_norm(2, cp) == Fraction(30, 29)
    report.checks.append(Check("classic-norm-instance", "A1", "pass" if ok else "fail",
                               {"ts": ["1/2", "1/3", "1/5"], "ell": 2, "norm_const": "29/30"}))
    for M in range(4):
        for d in range(draws if M else 1):
            ts = tuple(random_rational(rng) for _ in range(M))
            cp, bp = ClassicParams(ts), BszParams(ts)
            bad = []
            for ell in range(max(M - 1, 0), max_ell + 1):
                coeffs = classic_p(ell, cp)
                mono = monic_p(rs, (ell,), bp).mono_exp
                general = [mono[(k,)] for k in range(ell + 1)]
                expected_n = 1 - prod(ts, start=Fraction(1)) if ell == M - 1 else Fraction(1)
                if (coeffs != general or coeffs[-1] != 1
                        or classic_norm_constant(ell, cp) != normalization_constant(rs, (ell,), bp)
                        or classic_norm_constant(ell, cp) != expected_n):
                    bad.append(ell)
            report.checks.append(Check("classic-vs-general", "A1", "fail" if bad else "pass",
                                       {"M": M, "ts": [str(t) for t in ts], "failed_ell": bad}))
    return report


# -- poincare ----------------------------------------------------------------

def poincare_suite(systems=None, seed: int = 0, draws: int = 5) -> SuiteReport:
    rng = random.Random(seed)
    report = SuiteReport("poincare")
    for name in systems or POINCARE_SYSTEMS:
        rs = build_root_system(name)
        W = weyl_group(rs)
        top = 1 if rs.rank >= 4 else 2
        pts = [random_rational(rng) for _ in range(2 * draws)]
        bad, tested = [], 0
        for lam in dominant_weights(rs.rank, top):
            stab = W.stabilizer(lam)
            if len(W.orbit(lam)) * len(stab) != len(W):
                bad.append({"weight": _w(lam), "reason": "orbit-stabilizer"})
            for ts, tl in zip(pts[::2], pts[1::2]):
                tested += 1
                if poincare_enumerated(stab, ts, tl) != poincare_product(rs, lam, ts, tl):
                    bad.append({"weight": _w(lam), "ts": str(ts), "tl": str(tl)})
        report.checks.append(Check("poincare-product", name, "fail" if bad else "pass",
                                   {"coordinate_bound": top, "evaluations": tested,
                                    "failures": bad}))
    return report


# -- theorems ----------------------------------------------------------------

def _prop32(rs, params, weights) -> list:
    bad = []
    for lam in weights:
        for mu in weights:
            v = exact_pairing_P_m(rs, lam, mu, params)
            if mu == lam:
                if v != 1:
                    bad.append((_w(lam), _w(mu), str(v)))
            elif not dominance_leq(rs, lam, mu) and v != 0:
                bad.append((_w(lam), _w(mu), str(v)))
    return bad


def _leading(rs, params, weights) -> tuple[list, list, int]:
    """Triangularity and leading coefficient for deep weights; non-deep triangularity recorded."""
    W = weyl_group(rs)
    bad, shallow_nontriangular, deep = [], [], 0
    for lam in weights:
        P = build_P(rs, lam, params)
        if not P.deep:
            if not P.is_triangular(rs):
                shallow_nontriangular.append(_w(lam))
            continue
        deep += 1
        tilde = lambda_tilde(rs, lam, params.Ms, params.Ml)
        N = normalization_constant(rs, lam, params)
        enum = poincare_enumerated(W.stabilizer(tilde), params.bold_ts, params.bold_tl)
        if not P.is_triangular(rs) or P.leading_coefficient != N or N != enum:
            bad.append(_w(lam))
    return bad, shallow_nontriangular, deep


def _incomparable(rs, a, b) -> bool:
    return not dominance_leq(rs, a, b) and not dominance_leq(rs, b, a)


def _test_pairs(rs, params, bound: int, min_incomparable: int, limit: int = 10) -> list:
    """All pairs in the box ``<= bound`` with at least one deep weight, topped up with the
    lowest incomparable pairs from a larger box when the box holds too few."""
    def deep(w):
        return is_sufficiently_deep(rs, w, params.Ms, params.Ml)

    pairs = [(a, b) for a, b in combinations(dominant_weights(rs.rank, bound), 2)
             if deep(a) or deep(b)]
    missing = min_incomparable - sum(1 for a, b in pairs if _incomparable(rs, a, b))
    if missing <= 0:
        return pairs
    height = {w: sum(to_simple_root_coords(rs, w)) for w in dominant_weights(rs.rank, limit)}
    extra = [(a, b) for a, b in combinations(sorted(height), 2)
             if (a, b) not in pairs and (deep(a) or deep(b)) and _incomparable(rs, a, b)]
    extra.sort(key=lambda p: (max(height[p[0]], height[p[1]]), p))
    return pairs + extra[:missing]


def _orthogonality(rs, params, pairs, min_incomparable: int) -> dict:
    """Norm formula and orthogonality for pairs with at least one deep weight.

    For a deep ``lam`` and a shallow ``mu`` the polynomial to be tested is the
    Gram-Schmidt ``p_mu``, not the alternating-sum expression at ``mu``.  When
    ``mu`` is not above ``lam`` every ``m_nu`` with ``nu <= mu`` pairs to zero with
    ``P_lam``, which settles the claim for every monic triangular ``p_mu``; when
    ``mu`` is above ``lam`` it holds by the defining conditions of ``p_mu``.
    """
    weights = sorted({w for p in pairs for w in p})
    polys = {lam: build_P(rs, lam, params) for lam in weights}
    out = {"pairs": 0, "incomparable_pairs": 0, "norm_checked": 0, "by_definition": 0,
           "largest_weights": [_w(w) for w in weights[-1:]],
           "failures": [], "literal_nonzero": []}
    for lam in weights:
        if polys[lam].deep:
            out["norm_checked"] += 1
            if exact_pairing_P_P(rs, lam, lam, params) != polys[lam].norm_const:
                out["failures"].append({"norm": _w(lam)})
    for a, b in pairs:
        out["pairs"] += 1
        if _incomparable(rs, a, b):
            out["incomparable_pairs"] += 1
        literal = exact_pairing_P_P(rs, a, b, params)
        if literal != exact_pairing_P_P(rs, b, a, params):
            out["failures"].append({"hermitian": [_w(a), _w(b)]})
        if polys[a].deep and polys[b].deep:
            if literal != 0:
                out["failures"].append({"pair": [_w(a), _w(b)], "value": str(literal)})
            continue
        lam, mu = (a, b) if polys[a].deep else (b, a)
        if literal != 0:
            # only possible when the shallow expression reaches up to lam
            reaches = any(dominance_leq(rs, lam, nu) for nu in polys[mu].mono_exp)
            out["literal_nonzero"].append({"deep": _w(lam), "shallow": _w(mu),
                                           "value": str(literal), "explained": reaches})
            if not reaches:
                out["failures"].append({"pair": [_w(lam), _w(mu)], "value": str(literal)})
        if dominance_leq(rs, lam, mu):
            out["by_definition"] += 1
            continue
        for nu in saturated_set(rs, mu).dominant_members:
            if exact_pairing_P_m(rs, lam, nu, params) != 0:
                out["failures"].append({"deep": _w(lam), "shallow": _w(mu), "monomial": _w(nu)})
    if out["incomparable_pairs"] < min_incomparable:
        out["failures"].append({"too_few_incomparable_pairs": out["incomparable_pairs"]})
    return out


def theorems_suite(systems=None, seed: int = 0, draws: int = 5, bound: int = 3,
                   min_incomparable: int = 10, cap: int = DEFAULT_CAP) -> SuiteReport:
    rng = random.Random(seed)
    report = SuiteReport("theorems")
    for name in systems or THEOREM_SYSTEMS:
        rs = build_root_system(name)
        weights = dominant_weights(rs.rank, bound)
        for ms, ml in system_configs(name):
            for d in range(draws):
                params = draw_params(rng, name, ms, ml)
                base = {"Ms": ms, "Ml": ml, "draw": d, **_params_dict(params)}
                try:
                    bad = _prop32(rs, params, weights)
                    report.checks.append(Check("partial-biorthogonality", name,
                                               "fail" if bad else "pass",
                                               {**base, "failures": bad}))
                    bad, shallow_nt, deep = _leading(rs, params, weights)
                    report.checks.append(Check("triangularity-leading-coefficient", name,
                                               "fail" if bad else "pass",
                                               {**base, "deep_weights": deep, "failures": bad,
                                                "shallow_nontriangular": shallow_nt}))
                    pairs = _test_pairs(rs, params, bound, min_incomparable)
                    res = _orthogonality(rs, params, pairs, min_incomparable)
                    report.checks.append(Check("norm-orthogonality", name,
                                               "fail" if res["failures"] else "pass",
                                               {**base, **res}))
                except EnumerationCapExceeded as exc:
                    report.checks.append(Check("theorems", name, "skip",
                                               {**base, "cap_exceeded": str(exc)}))
    return report


# -- lattice -----------------------------------------------------------------

def _strongly_dominant(rs, bound):
    return [lam for lam in dominant_weights(rs.rank, bound) if min(lam) >= 1]


def lattice_suite(systems=None, bound: int = 2, vertex_bound: int = 3,
                  cap: int = DEFAULT_CAP) -> SuiteReport:
    report = SuiteReport("lattice")

    def run(name, fn, *args):
        try:
            r = fn(*args, cap=cap) if fn is not verify_hull_lemma else fn(*args)
        except EnumerationCapExceeded as exc:
            report.checks.append(Check(fn.__name__, name, "skip", {"cap_exceeded": str(exc)}))
            return
        d = r.to_dict()
        d.pop("system")
        check = d.pop("check")
        d.pop("passed")
        d["weight"] = _w(r.weight)
        report.checks.append(Check(check, name, "pass" if r.passed else "fail", d))

    for name in systems or LATTICE_SYSTEMS:
        rs = build_root_system(name)
        for lam in dominant_weights(rs.rank, bound):
            run(name, verify_saturated_prop, rs, lam)
            run(name, verify_orbit_prop, rs, lam)
            run(name, verify_hull_lemma, rs, lam)
        if systems is None and name not in VERTEX_SYSTEMS:
            continue
        for lam in _strongly_dominant(rs, vertex_bound):
            ms_max = min_pairing_short(rs, lam)
            ml_max = min_pairing_long(rs, lam)
            for ms in range(1, ms_max + 1):
                for ml in ([None] if ml_max is None else range(1, ml_max + 1)):
                    run(name, verify_vertex_prop, rs, lam, ms, ml)
    return report


# -- oracle ------------------------------------------------------------------

def oracle_suite(systems=None, seed: int = 0, draws: int = 1, bound: int = 3,
                 points: int = 64, tol: float = 1e-8) -> SuiteReport:
    """Quadrature versus exact values for the pairings of the theorem suite (rank <= 2)."""
    from .oracle import Quadrature, gram_schmidt_p, torus_grid

    rng = random.Random(seed)
    report = SuiteReport("oracle")
    for name in systems or THEOREM_SYSTEMS:
        rs = build_root_system(name)
        if rs.rank > 2:
            continue
        weights = dominant_weights(rs.rank, bound)
        grid = torus_grid(rs.rank, points)
        for ms, ml in system_configs(name):
            for d in range(draws):
                params = draw_params(rng, name, ms, ml, Fraction(1, 2))
                q = Quadrature(rs, params, grid)
                polys = {lam: build_P(rs, lam, params).mono_exp for lam in weights}
                err_pm = err_pp = err_gs = 0.0
                for lam in weights:
                    for mu in weights:
                        num = q.inner(polys[lam], {mu: 1.0})
                        err_pm = max(err_pm, abs(num - float(exact_pairing_P_m(rs, lam, mu, params))))
                        num = q.inner(polys[lam], polys[mu])
                        err_pp = max(err_pp, abs(num - float(exact_pairing_P_P(rs, lam, mu, params))))
                    P = build_P(rs, lam, params)
                    if P.deep:
                        g = gram_schmidt_p(rs, lam, params, quad=q)
                        m = monic_p(rs, lam, params).mono_exp
                        err_gs = max([err_gs] + [abs(g.get(k, 0.0) - float(m[k]))
                                                 for k in set(g) | set(m.keys())])
                worst = max(err_pm, err_pp, err_gs)
                report.checks.append(Check(
                    "quadrature-agreement", name, "pass" if worst < tol else "fail",
                    {"Ms": ms, "Ml": ml, "draw": d, **_params_dict(params),
                     "numeric": {"grid": points, "tolerance": tol, "max_error_P_m": err_pm,
                                 "max_error_P_P": err_pp, "max_error_gram_schmidt": err_gs}}))
    return report


def run_suite(suite: str, system: str | None = None, seed: int = 0, bound: int | None = None,
              cap: int = DEFAULT_CAP) -> SuiteReport:
    systems = (system,) if system else None
    runners = {
        "lattice": lambda: lattice_suite(systems, **({"bound": bound} if bound is not None else {}),
                                         cap=cap),
        "theorems": lambda: theorems_suite(systems, seed=seed, cap=cap,
                                           **({"bound": bound} if bound is not None else {})),
        "poincare": lambda: poincare_suite(systems, seed=seed),
        "classic": lambda: classic_suite(seed=seed),
        "oracle": lambda: oracle_suite(systems, seed=seed,
                                       **({"bound": bound} if bound is not None else {})),
    }
    if suite == "all":
        out = SuiteReport("all")
        for s in SUITES:
            out.extend(runners[s]())
        return out
    if suite not in runners:
        raise ValueError(f"unknown suite {suite!r}")
    return runners[suite]()
