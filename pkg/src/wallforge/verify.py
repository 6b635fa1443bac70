"""Three-way multiplicity comparison: oracle walls, bijection targets, series."""

from __future__ import annotations

from dataclasses import dataclass

from .abacus import target_set, weight_space_content
from .affine import affine_data
from .qseries import multiplicities, string_function
from .wall import enumerate_walls


def string_case(family: str, n: int, lam: int, cross: bool = False) -> str:
    if family != "B1":
        if cross:
            raise ValueError("the cross case exists for family B1 only")
        return f"{family}-diag"
    if cross:
        if lam not in (0, 1):
            raise ValueError("the cross case lives on Lambda_0 or Lambda_1")
        return "B-cross"
    return "B-diag-Ln" if lam == n else "B-diag-L0"


def oracle_counts(family: str, n: int, lam: int, max_m: int, cross: bool = False) -> list[int]:
    d = affine_data(family, n)
    return [len(enumerate_walls(d, lam, weight_space_content(d, m, cross, lam))) for m in range(max_m + 1)]


def bijection_counts(family: str, n: int, lam: int, max_m: int, cross: bool = False) -> list[int]:
    d = affine_data(family, n)
    return [sum(1 for _ in target_set(d, lam, m, cross)) for m in range(max_m + 1)]


def series_counts(family: str, n: int, lam: int, max_m: int, cross: bool = False) -> list[int]:
    return multiplicities(string_function(family, n, string_case(family, n, lam, cross)), max_m)


METHODS = {"oracle": oracle_counts, "bijection": bijection_counts, "series": series_counts}


@dataclass(frozen=True)
class CountRow:
    family: str
    n: int
    lam: int
    cross: bool
    m: int
    oracle: int
    bijection: int
    series: int

    @property
    def ok(self) -> bool:
        return self.oracle == self.bijection == self.series

    def describe(self) -> str:
        tag = " cross" if self.cross else ""
        return (f"{self.family} n={self.n} Lambda_{self.lam}{tag} m={self.m}: "
                f"oracle={self.oracle} bijection={self.bijection} series={self.series}")


def standard_cases(ranks: dict[str, tuple[int, ...]] | None = None) -> list[tuple[str, int, int, bool]]:
    """(family, n, lam, cross) at the smallest ranks, every level-1 weight,
    plus the B1 cross case."""
    ranks = ranks or {"A1": (2,), "A2even": (1, 2), "D2": (2,), "A2odd": (3,), "D1": (3,), "B1": (3,)}
    out = []
    for family, ns in ranks.items():
        for n in ns:
            d = affine_data(family, n)
            for lam in d.level1_weights:
                out.append((family, n, lam, False))
            if family == "B1":
                out.append((family, n, 0, True))
    return out


def three_way(family: str, n: int, lam: int, max_m: int, cross: bool = False) -> list[CountRow]:
    o = oracle_counts(family, n, lam, max_m, cross)
    b = bijection_counts(family, n, lam, max_m, cross)
    s = series_counts(family, n, lam, max_m, cross)
    return [CountRow(family, n, lam, cross, m, o[m], b[m], s[m]) for m in range(max_m + 1)]

