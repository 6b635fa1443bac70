"""Per-family constants for the six level-1 affine families."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

FAMILIES = ("A1", "A2even", "A2odd", "B1", "D1", "D2")

# smallest admissible rank parameter for each family
MIN_RANK = {"A1": 2, "A2even": 1, "A2odd": 3, "B1": 3, "D1": 3, "D2": 2}

Content = tuple[int, ...]


@dataclass(frozen=True)
class Weight:
    """Lambda_base minus the root combination ``drop``."""

    base: int
    drop: Content


@dataclass(frozen=True)
class AffineData:
    family: str
    n: int
    top: int
    cartan: tuple[tuple[int, ...], ...]
    delta: Content
    block_counts: Content
    ell: int
    L: int
    epsilon_decomp: int
    level1_weights: tuple[int, ...]
    gamma: Optional[Content] = None

    @property
    def index_set(self) -> range:
        return range(self.top + 1)

    @property
    def rank(self) -> int:
        return self.top + 1

    @property
    def layout_ratio(self) -> Fraction:
        return Fraction(self.L, self.ell)

    def zero(self) -> Content:
        return (0,) * self.rank

    def simple_root(self, i: int) -> Content:
        return tuple(1 if j == i else 0 for j in self.index_set)

    def delta_multiple(self, m: int) -> Content:
        return tuple(m * d for d in self.delta)


def _chain_cartan(size: int, edges: dict[tuple[int, int], int]) -> tuple[tuple[int, ...], ...]:
    a = [[0] * size for _ in range(size)]
    for i in range(size):
        a[i][i] = 2
    for (i, j), v in edges.items():
        a[i][j] = v
    return tuple(tuple(r) for r in a)


def _simple_edges(pairs: Sequence[tuple[int, int]]) -> dict[tuple[int, int], int]:
    out = {}
    for i, j in pairs:
        out[(i, j)] = -1
        out[(j, i)] = -1
    return out


@lru_cache(maxsize=None)
def affine_data(family: str, n: int) -> AffineData:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    if n < MIN_RANK[family]:
        raise ValueError(f"{family} needs n >= {MIN_RANK[family]}, got {n}")

    if family == "A1":
        top = n - 1
        if n == 2:
            edges = {(0, 1): -2, (1, 0): -2}
        else:
            edges = _simple_edges([(i, (i + 1) % n) for i in range(n)])
        delta = (1,) * n
        return AffineData(family, n, top, _chain_cartan(n, edges), delta, delta, n, n, 1, tuple(range(n)))

    if family == "A2even":
        top = n
        if n == 1:
            edges = {(0, 1): -4, (1, 0): -1}
        else:
            edges = _simple_edges([(i, i + 1) for i in range(1, n - 1)])
            edges.update({(0, 1): -2, (1, 0): -1, (n - 1, n): -2, (n, n - 1): -1})
        delta = (2,) * n + (1,)
        ell = 2 * n + 1
        return AffineData(family, n, top, _chain_cartan(n + 1, edges), delta, delta, ell, ell, 1, (0,))

    if family == "D2":
        top = n
        edges = _simple_edges([(i, i + 1) for i in range(1, n - 1)])
        if n == 2:
            edges.update({(0, 1): -2, (1, 0): -1, (1, 2): -1, (2, 1): -2})
        else:
            edges.update({(0, 1): -2, (1, 0): -1, (n - 1, n): -1, (n, n - 1): -2})
        delta = (1,) * (n + 1)
        ell = n + 1
        return AffineData(family, n, top, _chain_cartan(n + 1, edges), delta, tuple(2 * d for d in delta),
                          ell, 2 * ell, 2, (0, n))

    if family == "A2odd":
        top = n
        edges = _simple_edges([(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, n - 1)])
        edges.update({(n - 1, n): -2, (n, n - 1): -1})
        delta = (1, 1) + (2,) * (n - 2) + (1,)
        ell = 2 * n - 1
        return AffineData(family, n, top, _chain_cartan(n + 1, edges), delta, delta, ell, ell, 1, (0, 1))

    if family == "D1":
        top = n + 1
        edges = _simple_edges([(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, n - 1)] + [(n - 1, n), (n - 1, n + 1)])
        delta = (1, 1) + (2,) * (n - 2) + (1, 1)
        return AffineData(family, n, top, _chain_cartan(n + 2, edges), delta, delta, n, 2 * n, 1, (0, 1, n, n + 1))

    # B1
    top = n
    edges = _simple_edges([(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, n - 1)])
    edges.update({(n - 1, n): -1, (n, n - 1): -2})
    delta = (1, 1) + (2,) * (n - 1)
    gamma = (1, 0) + (1,) * (n - 1)
    ell = 2 * n
    return AffineData(family, n, top, _chain_cartan(n + 1, edges), delta, delta, ell, ell, 1, (0, 1, n), gamma)


def null_check(data: AffineData) -> bool:
    """A . delta = 0."""
    return all(sum(a * d for a, d in zip(row, data.delta)) == 0 for row in data.cartan)


def add(c1: Content, c2: Content) -> Content:
    return tuple(a + b for a, b in zip(c1, c2))


def sub(c1: Content, c2: Content) -> Content:
    return tuple(a - b for a, b in zip(c1, c2))


def is_delta_multiple(data: AffineData, c: Content) -> Optional[int]:
    """m with c = m * delta, or None."""
    m, r = divmod(c[-1], data.delta[-1])
    if r or m < 0:
        return None
    return m if tuple(c) == data.delta_multiple(m) else None


def pairing(data: AffineData, w: Weight, i: int) -> int:
    """<w, h_i> with <alpha_k, h_i> = A[i][k]."""
    base = 1 if w.base == i else 0
    return base - sum(k * a for k, a in zip(w.drop, data.cartan[i]))


def weight_of(base: int, content: Content) -> Weight:
    return Weight(base, tuple(content))
