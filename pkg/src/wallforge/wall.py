"""Young walls: column patterns, validity, content and the enumeration oracle.

A wall is a finite sequence of columns listed from right to left.  Each column
records how many blocks sit above the ground state and, when the top block is
a lone half of a split cell, which half it is: ``"LR"`` (lower right) or
``"UL"`` (upper left).  The colors of a column depend on its position only
through the pattern, so orientation is a geometric fact and colors follow from
the column index.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .affine import AffineData, Content, Weight, add, affine_data, sub
from .partition import Partition

LR = "LR"
UL = "UL"

UNIT = "unit"
HALF_OPEN = "half_open"  # a half-height block whose partner is not yet placed
HALF_CLOSE = "half_close"
OPEN = "open"  # first half of a split cell
CLOSE = "close"  # second half of a split cell

DEFAULT_MAX_BLOCKS = 64


def max_blocks() -> int:
    return int(os.environ.get("WALLFORGE_MAX_BLOCKS", DEFAULT_MAX_BLOCKS))


@dataclass(frozen=True)
class Slot:
    kind: str
    color: int = -1  # unit and half-height slots
    lr: int = -1  # split cells: color of the lower-right half
    ul: int = -1  # and of the upper-left half

    def half_color(self, orient: str) -> int:
        return self.lr if orient == LR else self.ul


def _check_lambda(data: AffineData, lam: int) -> None:
    if lam not in data.level1_weights:
        raise ValueError(f"Lambda_{lam} is not a supported level-1 weight for {data.family}; "
                         f"choose from {data.level1_weights}")


@dataclass(frozen=True)
class Pattern:
    data: AffineData
    lam: int

    def __post_init__(self):
        _check_lambda(self.data, self.lam)

    @property
    def period(self) -> int:
        return self.data.L

    @property
    def split(self) -> bool:
        return self.data.family in ("A2odd", "D1", "B1")

    def column_class(self, k: int) -> int:
        f = self.data.family
        if f == "A1":
            return k % self.data.n
        if self.split:
            return k % 2
        return 0

    def slot(self, k: int, j: int) -> Slot:
        return _slot(self.data.family, self.data.n, self.lam, self.column_class(k), j)

    def ground_is_split(self) -> bool:
        return self.split and self.slot(1, 1).kind == CLOSE


def _cell(odd_pair: tuple[int, int], parity: int) -> tuple[int, int]:
    lr, ul = odd_pair
    return (lr, ul) if parity == 1 else (ul, lr)


@lru_cache(maxsize=None)
def _slot(family: str, n: int, lam: int, cls: int, j: int) -> Slot:
    if family == "A1":
        # cls = k mod n
        return Slot(UNIT, (lam - cls + j) % n)
    data = affine_data(family, n)
    P = data.L
    r = (j - 1) % P + 1
    if family == "A2even":
        if r == 1:
            return Slot(HALF_CLOSE, 0)
        if r == P:
            return Slot(HALF_OPEN, 0)
        return Slot(UNIT, min(r - 1, P - r))
    if family == "D2":
        flip = (lambda c: n - c) if lam == n else (lambda c: c)
        if r == 1:
            return Slot(HALF_CLOSE, flip(0))
        if r == P:
            return Slot(HALF_OPEN, flip(0))
        if r == n + 1:
            return Slot(HALF_OPEN, flip(n))
        if r == n + 2:
            return Slot(HALF_CLOSE, flip(n))
        return Slot(UNIT, flip(r - 1 if r <= n else P - r))
    parity = cls
    if family == "A2odd":
        c01 = _cell((1, 0) if lam == 0 else (0, 1), parity)
        if r == 1:
            return Slot(CLOSE, lr=c01[0], ul=c01[1])
        if r == P:
            return Slot(OPEN, lr=c01[0], ul=c01[1])
        return Slot(UNIT, min(r, 2 * n - r))
    if family == "D1":
        if lam in (0, 1):
            bottom = _cell((1, 0) if lam == 0 else (0, 1), parity)
            middle = _cell((n + 1, n), parity)
            unit_up = lambda r: r  # noqa: E731
            unit_down = lambda r: 2 * n + 1 - r  # noqa: E731
        else:
            bottom = _cell((n + 1, n) if lam == n else (n, n + 1), parity)
            middle = _cell((1, 0), parity)
            unit_up = lambda r: n + 1 - r  # noqa: E731
            unit_down = lambda r: r - n  # noqa: E731
        if r == 1:
            return Slot(CLOSE, lr=bottom[0], ul=bottom[1])
        if r == P:
            return Slot(OPEN, lr=bottom[0], ul=bottom[1])
        if r == n:
            return Slot(OPEN, lr=middle[0], ul=middle[1])
        if r == n + 1:
            return Slot(CLOSE, lr=middle[0], ul=middle[1])
        return Slot(UNIT, unit_up(r) if r < n else unit_down(r))
    # B1
    if lam in (0, 1):
        c01 = _cell((1, 0) if lam == 0 else (0, 1), parity)
        if r == 1:
            return Slot(CLOSE, lr=c01[0], ul=c01[1])
        if r == P:
            return Slot(OPEN, lr=c01[0], ul=c01[1])
        if r == n:
            return Slot(HALF_OPEN, n)
        if r == n + 1:
            return Slot(HALF_CLOSE, n)
        return Slot(UNIT, r if r < n else P + 1 - r)
    c01 = _cell((1, 0), parity)
    if r == 1:
        return Slot(HALF_CLOSE, n)
    if r == P:
        return Slot(HALF_OPEN, n)
    if r == n:
        return Slot(OPEN, lr=c01[0], ul=c01[1])
    if r == n + 1:
        return Slot(CLOSE, lr=c01[0], ul=c01[1])
    return Slot(UNIT, n + 1 - r if r < n else r - n)


def top_is_lone_split(pattern: Pattern, k: int, b: int) -> bool:
    return b > 0 and pattern.slot(k, b).kind == OPEN


def is_full(pattern: Pattern, k: int, b: int) -> bool:
    """Top of the column is a complete cell (never true on the bare ground)."""
    if b == 0:
        return pattern.data.family == "A1"
    return pattern.slot(k, b).kind in (UNIT, HALF_CLOSE, CLOSE)


def column_blocks(pattern: Pattern, k: int, b: int, orient: Optional[str]) -> list[int]:
    """Colors of the blocks of one column, bottom to top."""
    out = []
    for j in range(1, b + 1):
        s = pattern.slot(k, j)
        if s.kind in (UNIT, HALF_OPEN, HALF_CLOSE):
            out.append(s.color)
        elif s.kind == OPEN:
            out.append(s.half_color(orient) if j == b else s.lr)
        else:  # CLOSE: the half not placed by the opener (or by the ground)
            out.append(s.ul)
    return out


@lru_cache(maxsize=None)
def _column_content(family: str, n: int, lam: int, cls: int, b: int, orient: Optional[str]) -> Content:
    data = affine_data(family, n)
    pat = Pattern(data, lam)
    # pick a representative column index in the class
    k = cls if cls > 0 else (data.n if family == "A1" else 2)
    c = [0] * data.rank
    for color in column_blocks(pat, k, b, orient):
        c[color] += 1
    return tuple(c)


def column_content(pattern: Pattern, k: int, b: int, orient: Optional[str]) -> Content:
    d = pattern.data
    return _column_content(d.family, d.n, pattern.lam, pattern.column_class(k), b, orient)


Column = tuple[int, Optional[str]]


@dataclass(frozen=True)
class Wall:
    data: AffineData
    lam: int
    columns: tuple[Column, ...]

    def __post_init__(self):
        cols = [(int(b), o) for b, o in self.columns]
        while cols and cols[-1][0] == 0:
            cols.pop()
        object.__setattr__(self, "columns", tuple(cols))
        _check_lambda(self.data, self.lam)

    @property
    def pattern(self) -> Pattern:
        return Pattern(self.data, self.lam)

    def heights(self) -> Partition:
        return tuple(b for b, _ in self.columns)

    def col(self, k: int) -> Column:
        """Column k (1-based); empty beyond the stored ones."""
        return self.columns[k - 1] if k <= len(self.columns) else (0, None)

    def with_column(self, k: int, column: Column) -> "Wall":
        cols = list(self.columns) + [(0, None)] * max(0, k - len(self.columns))
        cols[k - 1] = column
        return Wall(self.data, self.lam, tuple(cols))

    @property
    def num_blocks(self) -> int:
        return sum(b for b, _ in self.columns)

    def key(self) -> tuple:
        return (self.data.family, self.data.n, self.lam, self.columns)

    def to_json(self) -> dict:
        return {
            "family": self.data.family,
            "n": self.data.n,
            "lam": self.lam,
            "columns": [{"b": b, "orient": o} for b, o in self.columns],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Wall":
        data = affine_data(obj["family"], int(obj["n"]))
        cols = tuple((int(c["b"]), c.get("orient")) for c in obj["columns"])
        return cls(data, int(obj["lam"]), cols)

    def __str__(self) -> str:
        parts = [f"{b}{'' if o is None else ('/' if o == LR else chr(92))}" for b, o in self.columns]
        return f"{self.data.family}[{self.data.n}] L{self.lam} ({' '.join(parts)})"


def make_wall(family: str, n: int, lam: int, columns: Sequence) -> Wall:
    cols = []
    for c in columns:
        cols.append((c, None) if isinstance(c, int) else (int(c[0]), c[1]))
    return Wall(affine_data(family, n), lam, tuple(cols))


def empty_wall(data: AffineData, lam: int) -> Wall:
    return Wall(data, lam, ())


# ---------------------------------------------------------------------------
# validity


class WallError(ValueError):
    pass


def check_columns(Y: Wall) -> None:
    """Orientation must be given exactly on lone split-half tops."""
    pat = Y.pattern
    for k, (b, o) in enumerate(Y.columns, start=1):
        if b < 0:
            raise WallError(f"column {k} has negative height")
        lone = top_is_lone_split(pat, k, b)
        if lone and o not in (LR, UL):
            raise WallError(f"column {k} ends in a lone split half but has no orientation")
        if not lone and o is not None:
            raise WallError(f"column {k} has an orientation but its top is not a lone split half")


def is_young(Y: Wall) -> bool:
    pat = Y.pattern
    cols = Y.columns
    for k in range(1, len(cols)):
        (b1, o1), (b2, o2) = cols[k - 1], cols[k]
        if b2 > b1:
            return False
        if b1 == b2 and top_is_lone_split(pat, k, b1) and o1 != o2:
            return False
    return True


def is_proper(Y: Wall) -> bool:
    if Y.data.family == "A1":
        return True
    pat = Y.pattern
    cols = Y.columns
    for k in range(1, len(cols)):
        b1, b2 = cols[k - 1][0], cols[k][0]
        if b1 == b2 and is_full(pat, k, b1):
            return False
    return True


def is_valid(Y: Wall) -> bool:
    try:
        check_columns(Y)
    except WallError:
        return False
    return is_young(Y) and is_proper(Y)


def remove_delta_column(Y: Wall, k: int) -> Optional[Wall]:
    """Remove the top period of column k, or None when that block run is not a
    delta-column or the result is not a proper wall."""
    P = Y.pattern.period
    b, o = Y.col(k)
    if b < P:
        return None
    nb = b - P
    if nb == 0:
        if o == UL:
            return None
        o = None
    Z = Y.with_column(k, (nb, o))
    return Z if is_valid(Z) else None


def is_reduced(Y: Wall) -> bool:
    return all(remove_delta_column(Y, k) is None for k in range(1, len(Y.columns) + 1))


def validate(Y: Wall) -> dict[str, bool]:
    check_columns(Y)
    young = is_young(Y)
    proper = young and is_proper(Y)
    return {"young": young, "proper": proper, "reduced": proper and is_reduced(Y)}


# ---------------------------------------------------------------------------
# content and weight


def content(Y: Wall) -> Content:
    pat = Y.pattern
    total = Y.data.zero()
    for k, (b, o) in enumerate(Y.columns, start=1):
        total = add(total, column_content(pat, k, b, o))
    return total


def weight(Y: Wall) -> Weight:
    return Weight(Y.lam, content(Y))


# ---------------------------------------------------------------------------
# single-block moves inside one column


def add_options(pat: Pattern, k: int, column: Column) -> list[tuple[Column, int]]:
    """Columns reachable by placing one block, with the block's color."""
    b, o = column
    s = pat.slot(k, b + 1)
    if s.kind == OPEN:
        return [((b + 1, LR), s.lr), ((b + 1, UL), s.ul)]
    if s.kind == CLOSE:
        color = s.ul if b == 0 else (s.ul if o == LR else s.lr)
        return [((b + 1, None), color)]
    return [((b + 1, None), s.color)]


def remove_options(pat: Pattern, k: int, column: Column) -> list[tuple[Column, int]]:
    b, o = column
    if b == 0:
        return []
    s = pat.slot(k, b)
    if s.kind == OPEN:
        return [((b - 1, None), s.half_color(o))]
    if s.kind == CLOSE:
        if b == 1:
            return [((0, None), s.ul)]
        return [((b - 1, UL), s.lr), ((b - 1, LR), s.ul)]
    return [((b - 1, None), s.color)]


# ---------------------------------------------------------------------------
# highest-weight walls and the stacking embedding


def delta_column_top(pat: Pattern, k: int, b: int) -> Optional[str]:
    return LR if top_is_lone_split(pat, k, b) else None


def ground_plus_partition(data: AffineData, lam: int, parts: Partition) -> Wall:
    """lam_k delta-columns stacked on column k of the ground state."""
    pat = Pattern(data, lam)
    P = pat.period
    cols = []
    for k, p in enumerate(parts, start=1):
        b = p * P
        cols.append((b, delta_column_top(pat, k, b)))
    return Wall(data, lam, tuple(cols))


def s_lambda(Y: Wall, parts: Partition) -> Wall:
    if not is_reduced(Y):
        raise WallError("the stacking map is defined on reduced walls only")
    pat = Y.pattern
    P = pat.period
    K = max(len(parts), len(Y.columns))
    cols = []
    for k in range(1, K + 1):
        p = parts[k - 1] if k <= len(parts) else 0
        b, o = Y.col(k)
        nb = b + p * P
        if b == 0:
            o = delta_column_top(pat, k, nb)
        cols.append((nb, o))
    return Wall(Y.data, Y.lam, tuple(cols))


# ---------------------------------------------------------------------------
# enumeration oracle


def enumerate_walls(data: AffineData, lam: int, target: Content) -> list[Wall]:
    """Every proper wall on the ground state with content exactly ``target``.

    Depth-first over columns: column k+1 is no taller than column k, shares
    the orientation of an equal-height lone-split neighbour, never repeats the
    height of a full neighbour, and never overdraws the remaining content.
    """
    target = tuple(target)
    if any(t < 0 for t in target):
        return []
    total_blocks = sum(target)
    if total_blocks > max_blocks():
        raise ValueError(f"target has {total_blocks} blocks, above WALLFORGE_MAX_BLOCKS={max_blocks()}")
    pat = Pattern(data, lam)
    found: list[Wall] = []

    def options(k: int, prev: Optional[Column], remaining: Content) -> Iterator[tuple[Column, Content]]:
        cap = sum(remaining) if prev is None else min(prev[0], sum(remaining))
        for b in range(cap, 0, -1):
            orients = [LR, UL] if top_is_lone_split(pat, k, b) else [None]
            for o in orients:
                if prev is not None and prev[0] == b:
                    if o is not None and prev[1] != o:
                        continue
                    if data.family != "A1" and is_full(pat, k, b):
                        continue
                cc = column_content(pat, k, b, o)
                rest = sub(remaining, cc)
                if min(rest) < 0:
                    continue
                yield (b, o), rest

    def dfs(k: int, cols: list[Column], remaining: Content):
        if not any(remaining):
            found.append(Wall(data, lam, tuple(cols)))
            return
        prev = cols[-1] if cols else None
        for col, rest in options(k, prev, remaining):
            cols.append(col)
            dfs(k + 1, cols, rest)
            cols.pop()

    dfs(1, [], target)
    found.sort(key=lambda Y: Y.columns, reverse=True)
    return found


def enumerate_weight_space(data: AffineData, lam: int, target: Weight) -> list[Wall]:
    if target.base != lam:
        raise ValueError("target weight must be based at the wall's ground state")
    return enumerate_walls(data, lam, target.drop)


def enumerate_by_size(data: AffineData, lam: int, max_blocks_: int) -> list[Wall]:
    """All proper walls with at most ``max_blocks_`` blocks."""
    pat = Pattern(data, lam)
    out: list[Wall] = []

    def dfs(k: int, cols: list[Column], budget: int):
        out.append(Wall(data, lam, tuple(cols)))
        prev = cols[-1] if cols else None
        cap = budget if prev is None else min(prev[0], budget)
        for b in range(cap, 0, -1):
            for o in ([LR, UL] if top_is_lone_split(pat, k, b) else [None]):
                if prev is not None and prev[0] == b:
                    if o is not None and prev[1] != o:
                        continue
                    if data.family != "A1" and is_full(pat, k, b):
                        continue
                cols.append((b, o))
                dfs(k + 1, cols, budget - b)
                cols.pop()

    dfs(1, [], max_blocks_)
    return out


def valid_near(Y: Wall, k: int) -> bool:
    """Validity check restricted to column k and its neighbours.

    Enough after a single-column edit of a wall that was valid before.
    """
    pat = Y.pattern
    b, o = Y.col(k)
    if b < 0:
        return False
    lone = top_is_lone_split(pat, k, b)
    if lone != (o is not None):
        return False
    for left, right in ((k - 1, k), (k, k + 1)):
        if left < 1:
            continue
        (b1, o1), (b2, o2) = Y.col(left), Y.col(right)
        if b2 > b1:
            return False
        if b1 == b2 and b1 > 0:
            if top_is_lone_split(pat, left, b1) and o1 != o2:
                return False
            if Y.data.family != "A1" and is_full(pat, left, b1):
                return False
    return True
