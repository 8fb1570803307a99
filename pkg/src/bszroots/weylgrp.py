"""Weyl group enumeration, orbits, stabilizers and two-parameter Poincare series.

Group elements are integer matrices acting on fundamental-weight coordinates.
The simple reflection ``r_i`` sends ``lam`` to ``lam - lam[i] * alpha_i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .rootsys import Root, RootSystem, Weight, build_root_system, height_stats

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class WeylElement:
    matrix: Matrix
    sign: int
    len_s: int
    len_l: int

    @property
    def length(self) -> int:
        return self.len_s + self.len_l

    def __call__(self, lam) -> Weight:
        return _apply(self.matrix, lam)


def _apply(m: Matrix, lam) -> Weight:
    return tuple(sum(r * x for r, x in zip(row, lam)) for row in m)


def _compose(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                 for i in range(n))


def simple_reflection(rs: RootSystem, i: int) -> Matrix:
    n = rs.rank
    alpha = rs.simple_roots[i].fw_coords
    return tuple(tuple(int(r == c) - (alpha[r] if c == i else 0) for c in range(n))
                 for r in range(n))


def reflect(rs: RootSystem, lam, i: int) -> Weight:
    alpha = rs.simple_roots[i].fw_coords
    li = lam[i]
    return tuple(x - li * a for x, a in zip(lam, alpha))


def to_dominant(rs: RootSystem, lam) -> tuple[Weight, int]:
    """Descend to the dominant chamber; returns (dominant weight, number of reflections)."""
    lam = tuple(lam)
    steps = 0
    while True:
        for i, x in enumerate(lam):
            if x < 0:
                lam = reflect(rs, lam, i)
                steps += 1
                break
        else:
            return lam, steps


class WeylGroup:
    """Full element table of the Weyl group of ``rs`` with orbit/stabilizer queries."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self._roots = {r.fw_coords: r for r in rs.positive_roots}
        gens = [simple_reflection(rs, i) for i in range(rs.rank)]
        ident = tuple(tuple(int(i == j) for j in range(rs.rank)) for i in range(rs.rank))
        seen = {ident}
        levels = [[ident]]
        while True:
            nxt = set()
            for m in levels[-1]:
                for g in gens:
                    p = _compose(g, m)
                    if p not in seen:
                        nxt.add(p)
            if not nxt:
                break
            seen |= nxt
            levels.append(sorted(nxt))
        # BFS level = word length, so sign is (-1)^level
        self.elements: list[WeylElement] = []
        for level, mats in enumerate(levels):
            for m in mats:
                ls, ll = self._lengths(m)
                assert ls + ll == level
                self.elements.append(WeylElement(m, (-1) ** level, ls, ll))
        self._index = {w.matrix: w for w in self.elements}
        if len(self.elements) != rs.weyl_order:
            raise AssertionError(f"{rs.name}: enumerated {len(self.elements)} elements, "
                                 f"expected {rs.weyl_order}")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    @property
    def longest(self) -> WeylElement:
        return self.elements[-1]

    def _lengths(self, m: Matrix) -> tuple[int, int]:
        ls = ll = 0
        for r in self.rs.positive_roots:
            if _apply(m, r.fw_coords) not in self._roots:
                if r.is_long:
                    ll += 1
                else:
                    ls += 1
        return ls, ll

    def element(self, m: Matrix) -> WeylElement:
        return self._index[m]

    def act(self, w: WeylElement, lam) -> Weight:
        if len(lam) != self.rs.rank:
            raise ValueError(f"weight {tuple(lam)} does not match rank {self.rs.rank}")
        return _apply(w.matrix, lam)

    def compose(self, a: WeylElement, b: WeylElement) -> WeylElement:
        return self._index[_compose(a.matrix, b.matrix)]

    def orbit(self, lam) -> set[Weight]:
        return {_apply(w.matrix, lam) for w in self.elements}

    def dominant_representative(self, lam) -> tuple[Weight, WeylElement, int]:
        """Dominant weight in the orbit of ``lam`` and the shortest element reaching it."""
        lam = tuple(lam)
        m = self.identity.matrix
        while True:
            for i, x in enumerate(lam):
                if x < 0:
                    lam = reflect(self.rs, lam, i)
                    m = _compose(simple_reflection(self.rs, i), m)
                    break
            else:
                w = self._index[m]
                return lam, w, w.sign

    def stabilizer(self, lam) -> list[WeylElement]:
        lam = tuple(lam)
        return [w for w in self.elements if _apply(w.matrix, lam) == lam]

    def inversion_set(self, w: WeylElement) -> frozenset[Root]:
        return frozenset(r for r in self.rs.positive_roots
                         if _apply(w.matrix, r.fw_coords) not in self._roots)


@lru_cache(maxsize=None)
def _weyl_group(name: str) -> WeylGroup:
    return WeylGroup(build_root_system(name))


def weyl_group(rs: RootSystem) -> WeylGroup:
    return _weyl_group(rs.name)


def enumerate_weyl(rs: RootSystem) -> list[WeylElement]:
    return list(weyl_group(rs).elements)


def poincare_enumerated(stab, ts, tl) -> Fraction:
    """Sum of ``ts**len_s * tl**len_l`` over a list of group elements."""
    ts, tl = Fraction(ts), Fraction(tl)
    return sum((ts ** w.len_s * tl ** w.len_l for w in stab), Fraction(0))


def poincare_product(rs: RootSystem, lam_tilde, ts, tl) -> Fraction:
    """Macdonald's product formula for the Poincare series of the stabilizer of a dominant weight."""
    if any(x < 0 for x in lam_tilde):
        raise ValueError(f"product formula needs a dominant weight, got {tuple(lam_tilde)}")
    ts, tl = Fraction(ts), Fraction(tl)
    out = Fraction(1)
    for alpha in rs.positive_roots:
        if sum(c * x for c, x in zip(alpha.coroot, lam_tilde)) != 0:
            continue
        hs, hl = (int(h) for h in height_stats(rs, alpha))
        den = 1 - ts ** hs * tl ** hl
        if den == 0:
            raise ZeroDivisionError(
                f"vanishing factor for root {alpha.sr_coords} at ts={ts}, tl={tl}")
        if alpha.is_long:
            out *= (1 - ts ** hs * tl ** (hl + 1)) / den
        else:
            out *= (1 - ts ** (hs + 1) * tl ** hl) / den
    return out
