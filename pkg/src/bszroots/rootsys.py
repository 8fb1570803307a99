"""Irreducible reduced crystallographic root systems of rank <= 4.

Weights are integer tuples in the fundamental-weight basis, so the entry
``lam[i]`` is the coroot pairing of ``lam`` with the i-th simple coroot.
Roots additionally carry their coordinates in the simple-root basis and the
simple-coroot coordinates of their coroot, which turns every coroot pairing
into an integer dot product.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Weight = tuple[int, ...]

SUPPORTED = ("A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4")


@dataclass(frozen=True)
class Root:
    fw_coords: Weight
    sr_coords: tuple[int, ...]
    is_long: bool
    # simple-coroot coordinates of the coroot
    coroot: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.sr_coords)


@dataclass(frozen=True)
class RootSystem:
    name: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    simple_roots: tuple[Root, ...]
    positive_roots: tuple[Root, ...]
    short_positive: tuple[Root, ...]
    long_positive: tuple[Root, ...]
    rho: Weight
    rho_s: Weight
    rho_l: Weight
    weyl_order: int

    @property
    def simply_laced(self) -> bool:
        return not self.long_positive

    def __repr__(self) -> str:
        return f"RootSystem({self.name!r})"


class UnsupportedRootSystem(ValueError):
    pass


def cartan_matrix(name: str) -> list[list[int]]:
    """Cartan matrix with entries ``a[i][j] = <alpha_j, alpha_i^vee>`` (Bourbaki labels)."""
    if name not in SUPPORTED:
        raise UnsupportedRootSystem(
            f"unsupported root system {name!r}; supported: {', '.join(SUPPORTED)}")
    kind, n = name[0], int(name[1:])
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    if kind == "D":
        for i, j in ((0, 1), (1, 2), (1, 3)):
            a[i][j] = a[j][i] = -1
        return a
    for i in range(n - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    if kind == "B":
        # last simple root short
        a[n - 1][n - 2] = -2
    elif kind == "C":
        # last simple root long
        a[n - 2][n - 1] = -2
    elif kind == "G":
        # alpha_1 short, alpha_2 long
        a[0][1] = -3
    elif kind == "F":
        # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        a[2][1] = -2
    return a


def _symmetrizer(a: list[list[int]]) -> list[int]:
    # d_i a_ij = d_j a_ji, normalised so the short simple roots get d = 1
    n = len(a)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if a[i][j] != 0 and d[j] is None:
                d[j] = d[i] * a[i][j] / a[j][i]
                stack.append(j)
    lo = min(d)
    return [int(x / lo) for x in d]


def _weyl_order(name: str) -> int:
    kind, n = name[0], int(name[1:])
    if kind == "A":
        out = 1
        for k in range(2, n + 2):
            out *= k
        return out
    if kind in "BC":
        out = 2 ** n
        for k in range(2, n + 1):
            out *= k
        return out
    if kind == "D":
        out = 2 ** (n - 1)
        for k in range(2, n + 1):
            out *= k
        return out
    return {"G2": 12, "F4": 1152}[name]


def _positive_sr_coords(a: list[list[int]]) -> list[tuple[int, ...]]:
    """Positive roots in simple-root coordinates via root-string closure."""
    n = len(a)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = set()
        for beta in layer:
            for i in range(n):
                # p: how far the alpha_i string extends downward from beta
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                pairing = sum(a[i][j] * beta[j] for j in range(n))
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        nxt.add(up)
        found |= nxt
        layer = sorted(nxt)
    return sorted(found, key=lambda c: (sum(c), c))


def _half_sum(vectors, rank: int) -> Weight:
    total = [0] * rank
    for v in vectors:
        for i, x in enumerate(v):
            total[i] += x
    assert all(x % 2 == 0 for x in total)
    return tuple(x // 2 for x in total)


@lru_cache(maxsize=None)
def build_root_system(name: str) -> RootSystem:
    """Construct the root system with the given type label, e.g. ``"B2"``."""
    a = cartan_matrix(name)
    n = len(a)
    d = _symmetrizer(a)
    dmax = max(d)
    simply_laced = dmax == min(d)

    roots = []
    for c in _positive_sr_coords(a):
        fw = tuple(sum(a[i][j] * c[j] for j in range(n)) for i in range(n))
        # (alpha, alpha)/2 in units where short roots give 1
        d_alpha = Fraction(sum(c[i] * d[i] * a[i][j] * c[j]
                               for i in range(n) for j in range(n)), 2)
        coroot = tuple(Fraction(c[i] * d[i]) / d_alpha for i in range(n))
        assert all(x.denominator == 1 for x in coroot)
        roots.append(Root(
            fw_coords=fw,
            sr_coords=c,
            is_long=(not simply_laced) and d_alpha == dmax,
            coroot=tuple(int(x) for x in coroot),
        ))
    by_sr = {r.sr_coords: r for r in roots}
    simple = tuple(by_sr[tuple(int(i == j) for j in range(n))] for i in range(n))
    short = tuple(r for r in roots if not r.is_long)
    long_ = tuple(r for r in roots if r.is_long)
    return RootSystem(
        name=name,
        rank=n,
        cartan=tuple(tuple(row) for row in a),
        symmetrizer=tuple(d),
        simple_roots=simple,
        positive_roots=tuple(roots),
        short_positive=short,
        long_positive=long_,
        rho=_half_sum((r.fw_coords for r in roots), n),
        rho_s=_half_sum((r.fw_coords for r in short), n),
        rho_l=_half_sum((r.fw_coords for r in long_), n) if long_ else (0,) * n,
        weyl_order=_weyl_order(name),
    )


def coroot_pairing(lam, alpha: Root) -> int:
    """Integer pairing of a weight with the coroot of ``alpha``."""
    if len(lam) != len(alpha.coroot):
        raise ValueError(f"weight {tuple(lam)} does not match rank {len(alpha.coroot)}")
    return sum(c * x for c, x in zip(alpha.coroot, lam))


def height_stats(rs: RootSystem, alpha: Root) -> tuple[Fraction, Fraction]:
    """Half-sums of pairings of ``alpha`` against short and long positive coroots."""
    if alpha not in rs.positive_roots:
        raise ValueError(f"{alpha} is not a positive root of {rs.name}")
    ht_s = Fraction(sum(coroot_pairing(alpha.fw_coords, b) for b in rs.short_positive), 2)
    ht_l = Fraction(sum(coroot_pairing(alpha.fw_coords, b) for b in rs.long_positive), 2)
    assert ht_s.denominator == 1 and ht_l.denominator == 1
    return ht_s, ht_l


def inverse_cartan(rs: RootSystem) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse of the Cartan matrix: maps fundamental-weight to simple-root coordinates."""
    return _inverse_cartan(rs.name)


@lru_cache(maxsize=None)
def _inverse_cartan(name: str):
    a = cartan_matrix(name)
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def to_simple_root_coords(rs: RootSystem, lam) -> tuple[Fraction, ...]:
    inv = inverse_cartan(rs)
    return tuple(sum((inv[i][j] * lam[j] for j in range(rs.rank)), Fraction(0))
                 for i in range(rs.rank))


def form_matrix(rs: RootSystem) -> tuple[tuple[Fraction, ...], ...]:
    """Gram matrix of the W-invariant form on fundamental-weight coordinates.

    Normalised so that short roots have squared length 2; equals ``D A^{-1}``.
    """
    return _form_matrix(rs.name)


@lru_cache(maxsize=None)
def _form_matrix(name: str):
    rs = build_root_system(name)
    inv = _inverse_cartan(name)
    return tuple(tuple(rs.symmetrizer[i] * inv[i][j] for j in range(rs.rank))
                 for i in range(rs.rank))


def inner(rs: RootSystem, lam, mu) -> Fraction:
    g = form_matrix(rs)
    return sum((lam[i] * g[i][j] * mu[j] for i in range(rs.rank) for j in range(rs.rank)
                if lam[i] and mu[j]), Fraction(0))
