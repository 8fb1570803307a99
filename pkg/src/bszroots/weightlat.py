"""Weight-lattice geometry: dominance order, deepness, saturated sets and brute-force
checks of the vertex/saturation properties of ``lam - sum n_alpha alpha``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import floor, prod

import numpy as np

from .rootsys import RootSystem, Weight, coroot_pairing, to_simple_root_coords
from .weylgrp import to_dominant, weyl_group

DEFAULT_CAP = 10 ** 7
_CHUNK = 200_000


class EnumerationCapExceeded(RuntimeError):
    def __init__(self, needed: int, cap: int):
        super().__init__(f"enumeration needs {needed} vectors, cap is {cap}")
        self.needed = needed
        self.cap = cap


def is_dominant(lam) -> bool:
    return all(x >= 0 for x in lam)


def _require_dominant(lam):
    if not is_dominant(lam):
        raise ValueError(f"weight {tuple(lam)} is not dominant")


def dominance_leq(rs: RootSystem, mu, lam) -> bool:
    """True iff ``lam - mu`` is a nonnegative integer combination of simple roots."""
    diff = [l - m for l, m in zip(lam, mu)]
    c = to_simple_root_coords(rs, diff)
    return all(x.denominator == 1 and x >= 0 for x in c)


def min_pairing_short(rs: RootSystem, lam) -> int:
    _require_dominant(lam)
    return min(coroot_pairing(lam, a) for a in rs.short_positive)


def min_pairing_long(rs: RootSystem, lam) -> int | None:
    """Minimum over long positive coroots; ``None`` when there are no long roots."""
    _require_dominant(lam)
    if rs.simply_laced:
        return None
    return min(coroot_pairing(lam, a) for a in rs.long_positive)


def is_sufficiently_deep(rs: RootSystem, lam, Ms: int, Ml: int = 0) -> bool:
    if min_pairing_short(rs, lam) < Ms - 1:
        return False
    ml = min_pairing_long(rs, lam)
    return ml is None or ml >= Ml - 1


def lambda_tilde(rs: RootSystem, lam, Ms: int, Ml: int = 0) -> Weight:
    return tuple(x + r - Ms * s - Ml * l
                 for x, r, s, l in zip(lam, rs.rho, rs.rho_s, rs.rho_l))


def dominant_weights(rank: int, bound: int):
    """All dominant weights with coordinates in ``0..bound``, lexicographic."""
    return [tuple(c) for c in product(range(bound + 1), repeat=rank)]


def deep_parametrization_check(rs: RootSystem, Ms: int, Ml: int, bound: int) -> bool:
    """Deep iff subtracting ``(Ms-1) rho_s + (Ml-1) rho_l`` stays dominant, over a box."""
    for lam in dominant_weights(rs.rank, bound):
        shifted = tuple(x - (Ms - 1) * s - (Ml - 1) * l
                        for x, s, l in zip(lam, rs.rho_s, rs.rho_l))
        if is_sufficiently_deep(rs, lam, Ms, Ml) != is_dominant(shifted):
            return False
    return True


@dataclass(frozen=True)
class SaturatedSet:
    top: Weight
    dominant_members: frozenset
    full_members: frozenset


def saturated_set(rs: RootSystem, lam) -> SaturatedSet:
    """Dominant weights below ``lam`` and the union of their orbits."""
    lam = tuple(lam)
    _require_dominant(lam)
    # dominant weights have nonnegative simple-root coordinates, which bounds the scan
    top = to_simple_root_coords(rs, lam)
    alphas = [a.fw_coords for a in rs.simple_roots]
    dom = set()
    for c in product(*(range(floor(x) + 1) for x in top)):
        mu = tuple(l - sum(ci * a[k] for ci, a in zip(c, alphas)) for k, l in enumerate(lam))
        if is_dominant(mu):
            dom.add(mu)
    W = weyl_group(rs)
    full = set()
    for mu in dom:
        full |= W.orbit(mu)
    return SaturatedSet(lam, frozenset(dom), frozenset(full))


def root_string_closure(rs: RootSystem, lam) -> frozenset:
    """Smallest set containing ``lam`` and closed under alpha-strings."""
    roots = [a.fw_coords for a in rs.positive_roots]
    roots += [tuple(-x for x in a) for a in roots]
    coroots = list(rs.positive_roots) + list(rs.positive_roots)
    signs = [1] * len(rs.positive_roots) + [-1] * len(rs.positive_roots)
    out = {tuple(lam)}
    todo = [tuple(lam)]
    while todo:
        mu = todo.pop()
        for alpha, root, s in zip(roots, coroots, signs):
            k = s * coroot_pairing(mu, root)
            for ell in range(1, k + 1):
                nu = tuple(m - ell * a for m, a in zip(mu, alpha))
                if nu not in out:
                    out.add(nu)
                    todo.append(nu)
    return frozenset(out)


def is_string_closed(rs: RootSystem, members) -> bool:
    members = set(members)
    for mu in members:
        for a in rs.positive_roots:
            k = coroot_pairing(mu, a)
            step = a.fw_coords if k > 0 else tuple(-x for x in a.fw_coords)
            for ell in range(1, abs(k) + 1):
                if tuple(m - ell * x for m, x in zip(mu, step)) not in members:
                    return False
    return True


def hull_membership(rs: RootSystem, mu, lam) -> bool:
    """Is ``mu`` in the convex hull of the orbit of dominant ``lam``?"""
    _require_dominant(lam)
    dom, _ = to_dominant(rs, mu)
    c = to_simple_root_coords(rs, [l - d for l, d in zip(lam, dom)])
    return all(x >= 0 for x in c)


def hull_lattice_points(rs: RootSystem, lam) -> frozenset:
    """Points of ``lam + Q`` inside the orbit hull, by scanning a bounding box."""
    lam = tuple(lam)
    _require_dominant(lam)
    low, _ = to_dominant(rs, tuple(-x for x in lam))
    # every hull point mu satisfies  -low <= mu <= lam  in the dominance cone sense
    span = to_simple_root_coords(rs, [l + x for l, x in zip(lam, low)])
    alphas = [a.fw_coords for a in rs.simple_roots]
    out = set()
    for c in product(*(range(floor(x) + 1) for x in span)):
        mu = tuple(l - sum(ci * a[k] for ci, a in zip(c, alphas)) for k, l in enumerate(lam))
        if hull_membership(rs, mu, lam):
            out.add(mu)
    return frozenset(out)


@dataclass
class LatticeReport:
    check: str
    system: str
    weight: Weight
    vectors_scanned: int
    passed: bool
    counterexamples: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "system": self.system,
            "weight": list(self.weight),
            "vectors_scanned": self.vectors_scanned,
            "passed": self.passed,
            "counterexamples": [[list(map(int, x)) for x in c] for c in self.counterexamples],
            **self.details,
        }


def _scan(rs: RootSystem, lam, bounds, cap):
    """Yield (n-vector block, resulting weight block) over the box ``0 <= n <= bounds``."""
    total = prod(b + 1 for b in bounds)
    if total > cap:
        raise EnumerationCapExceeded(total, cap)
    shape = tuple(b + 1 for b in bounds)
    roots = np.array([a.fw_coords for a in rs.positive_roots], dtype=np.int64)
    top = np.array(lam, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        flat = np.arange(start, min(total, start + _CHUNK))
        n = np.stack(np.unravel_index(flat, shape), axis=1).astype(np.int64)
        yield n, top - n @ roots


def _bounds(rs: RootSystem, ms: int, ml: int | None):
    return [ml if a.is_long else ms for a in rs.positive_roots]


def _dominant_rep_cache(rs):
    cache = {}

    def dom(mu):
        if mu not in cache:
            cache[mu] = to_dominant(rs, mu)[0]
        return cache[mu]
    return dom


def verify_saturated_prop(rs: RootSystem, lam, cap: int = DEFAULT_CAP) -> LatticeReport:
    """Every ``lam - sum n_alpha alpha`` with ``n_alpha <= m(lam)`` lies in the saturated set."""
    lam = tuple(lam)
    bounds = _bounds(rs, min_pairing_short(rs, lam), min_pairing_long(rs, lam))
    dom = _dominant_rep_cache(rs)
    leq = {}
    seen = set()
    report = LatticeReport("saturated", rs.name, lam, 0, True)
    for n, mus in _scan(rs, lam, bounds, cap):
        report.vectors_scanned += len(n)
        uniq, first = np.unique(mus, axis=0, return_index=True)
        for row, idx in zip(uniq, first):
            mu = tuple(int(x) for x in row)
            if mu in seen:
                continue
            seen.add(mu)
            d = dom(mu)
            if d not in leq:
                leq[d] = dominance_leq(rs, d, lam)
            if not leq[d]:
                report.passed = False
                report.counterexamples.append((tuple(n[idx]), tuple(row)))
    report.details["distinct_weights"] = len(seen)
    return report


def verify_orbit_prop(rs: RootSystem, lam, cap: int = DEFAULT_CAP) -> LatticeReport:
    """Landing on the orbit of ``lam`` forces every ``n_alpha`` into ``{0, m(lam)}``."""
    lam = tuple(lam)
    ms, ml = min_pairing_short(rs, lam), min_pairing_long(rs, lam)
    bounds = _bounds(rs, ms, ml)
    allowed = np.array(bounds, dtype=np.int64)
    dom = _dominant_rep_cache(rs)
    report = LatticeReport("orbit", rs.name, lam, 0, True)
    hits = 0
    for n, mus in _scan(rs, lam, bounds, cap):
        report.vectors_scanned += len(n)
        uniq, inverse = np.unique(mus, axis=0, return_inverse=True)
        on_orbit = np.array([dom(tuple(int(x) for x in row)) == lam for row in uniq])
        mask = on_orbit[inverse.reshape(-1)]
        hits += int(mask.sum())
        sel = n[mask]
        bad = ~np.all((sel == 0) | (sel == allowed), axis=1)
        for row in sel[bad]:
            report.passed = False
            report.counterexamples.append((tuple(row),))
    report.details["orbit_hits"] = hits
    return report


def verify_vertex_prop(rs: RootSystem, lam, ms: int, ml: int | None = None,
                       cap: int = DEFAULT_CAP) -> LatticeReport:
    """Compare the scanned orbit hits with the inversion-set prediction over the
    stabilizer of ``lam - ms rho_s - ml rho_l``."""
    lam = tuple(lam)
    if not all(coroot_pairing(lam, a) >= 1 for a in rs.positive_roots):
        raise ValueError(f"{lam} is not strongly dominant")
    if not 0 < ms <= min_pairing_short(rs, lam):
        raise ValueError(f"need 0 < ms <= m_s(lam), got ms={ms}")
    if rs.simply_laced:
        ml = 0
    elif ml is None or not 0 < ml <= min_pairing_long(rs, lam):
        raise ValueError(f"need 0 < ml <= m_l(lam), got ml={ml}")

    dom = _dominant_rep_cache(rs)
    scanned = set()
    report = LatticeReport("vertex", rs.name, lam, 0, True,
                           details={"ms": ms, "ml": ml if not rs.simply_laced else None})
    for n, mus in _scan(rs, lam, _bounds(rs, ms, ml), cap):
        report.vectors_scanned += len(n)
        for row in np.unique(mus, axis=0):
            mu = tuple(int(x) for x in row)
            if dom(mu) == lam:
                scanned.add(mu)

    W = weyl_group(rs)
    tilde = tuple(x - ms * s - ml * l for x, s, l in zip(lam, rs.rho_s, rs.rho_l))
    predicted = set()
    for w in W.stabilizer(tilde):
        mu = list(lam)
        for a in W.inversion_set(w):
            k = ml if a.is_long else ms
            mu = [m - k * x for m, x in zip(mu, a.fw_coords)]
        predicted.add(tuple(mu))
    report.passed = scanned == predicted
    report.counterexamples = [(mu,) for mu in sorted(scanned ^ predicted)]
    report.details["orbit_hits"] = len(scanned)
    report.details["stabilizer_order"] = len(W.stabilizer(tilde))
    return report


def verify_hull_lemma(rs: RootSystem, lam) -> LatticeReport:
    """Lattice points of the orbit hull coincide with the saturated set."""
    lam = tuple(lam)
    hull = hull_lattice_points(rs, lam)
    full = saturated_set(rs, lam).full_members
    return LatticeReport("hull", rs.name, lam, len(hull), hull == full,
                         [(mu,) for mu in sorted(hull ^ full)])
