"""Ordinary and two-colored partitions.

Partitions are plain tuples of positive integers in weakly decreasing order.
Parts are read as column lengths of a Young diagram whose columns run from
right to left, so ``lam[0]`` is the tallest (rightmost) column.

Two-colored partitions are tuples of ``(value, color)`` pairs with color
``"w"`` (white) or ``"g"`` (gray).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

WHITE = "w"
GRAY = "g"

Partition = tuple[int, ...]
ColoredPartition = tuple[tuple[int, str], ...]


def partition(parts: Sequence[int]) -> Partition:
    """Normalize to a weakly decreasing tuple without zeros."""
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts!r}")
    return tuple(sorted((p for p in parts if p), reverse=True))


def from_multiplicities(mults: dict[int, int]) -> Partition:
    return partition([k for k, c in mults.items() for _ in range(c)])


def size(lam: Sequence[int]) -> int:
    return sum(lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def is_partition(lam: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(lam, lam[1:])) and all(p > 0 for p in lam)


# ---------------------------------------------------------------------------
# Frobenius notation


@dataclass(frozen=True)
class FrobeniusForm:
    """Diagonal coordinates; ``legs[k] = lam[k] - k - 1`` and
    ``arms[k] = conj[k] - k - 1`` (0-based)."""

    arms: tuple[int, ...]
    legs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "arms", tuple(self.arms))
        object.__setattr__(self, "legs", tuple(self.legs))
        if len(self.arms) != len(self.legs):
            raise ValueError("arms and legs must have equal length")
        for seq in (self.arms, self.legs):
            if any(x < 0 for x in seq) or any(a <= b for a, b in zip(seq, seq[1:])):
                raise ValueError(f"{seq} is not strictly decreasing and nonnegative")

    @property
    def size(self) -> int:
        return sum(self.arms) + sum(self.legs) + len(self.arms)


def durfee(lam: Partition) -> int:
    return sum(1 for k, p in enumerate(lam) if p > k)


def to_frobenius(lam: Partition) -> FrobeniusForm:
    d = durfee(lam)
    conj = conjugate(lam)
    return FrobeniusForm(tuple(conj[k] - k - 1 for k in range(d)), tuple(lam[k] - k - 1 for k in range(d)))


def from_frobenius(f: FrobeniusForm) -> Partition:
    d = len(f.arms)
    if d == 0:
        return ()
    # rows below the diagonal block come from the arms
    conj_head = [f.arms[k] + k + 1 for k in range(d)]
    lam = [f.legs[k] + k + 1 for k in range(d)]
    # part k (k >= d) counts the diagonal columns j < d whose conjugate exceeds k
    for k in range(d, conj_head[0]):
        lam.append(sum(1 for j in range(d) if conj_head[j] > k))
    return partition(lam)


# ---------------------------------------------------------------------------
# n-core and n-quotient through the type A abacus


def _bead_count(length: int, n: int) -> int:
    return -(-length // n) * n


def beta_numbers(lam: Partition, r: int) -> list[int]:
    """Bead positions z_k = lam_k + r - k + 1 for k = 1..r."""
    if r < len(lam):
        raise ValueError("bead count smaller than the length of the partition")
    padded = list(lam) + [0] * (r - len(lam))
    return [padded[k] + r - k for k in range(r)]


def from_beta_numbers(beads: Sequence[int], r: int | None = None) -> Partition:
    z = sorted(beads, reverse=True)
    r = len(z) if r is None else r
    return partition([z[k] - r + k for k in range(len(z))])


def core_quotient(lam: Partition, n: int, r: int | None = None) -> tuple[Partition, tuple[Partition, ...]]:
    if n < 2:
        raise ValueError("n must be at least 2")
    r = _bead_count(len(lam), n) if r is None else r
    if r % n:
        raise ValueError("bead count must be a multiple of n")
    beads = beta_numbers(lam, r)
    runners: list[list[int]] = [[] for _ in range(n)]
    for z in beads:
        runners[z % n].append(z)
    quotient = []
    core_beads = []
    # runner k holds positions s = k mod n; label runner n as residue 0
    for k in range(1, n + 1):
        on = sorted(runners[k % n], reverse=True)
        c = len(on)
        parts = [(s - k) // n - (c - 1 - i) for i, s in enumerate(on)]
        quotient.append(partition(parts))
        core_beads.extend(k + n * j for j in range(c))
    return from_beta_numbers(core_beads, r), tuple(quotient)


def from_core_quotient(core: Partition, quotient: Sequence[Partition], n: int) -> Partition:
    if len(quotient) != n:
        raise ValueError(f"expected {n} quotient components")
    r = _bead_count(len(core) + n * (1 + sum(len(q) for q in quotient)), n)
    beads = beta_numbers(core, r)
    counts = [0] * n
    for z in beads:
        counts[z % n] += 1
    out = []
    for k in range(1, n + 1):
        c = counts[k % n]
        q = list(quotient[k - 1])
        if len(q) > c:
            raise ValueError("quotient component too long for the chosen bead count")
        q += [0] * (c - len(q))
        out.extend(k + n * (q[i] + c - 1 - i) for i in range(c))
    return from_beta_numbers(out, r)


def n_weight(lam: Partition, n: int) -> int:
    return sum(size(q) for q in core_quotient(lam, n)[1])


def strip_rim_hooks(lam: Partition, n: int) -> tuple[Partition, int]:
    """Greedy rim-hook removal on the diagram itself; returns (core, removals)."""
    lam = list(lam)
    removed = 0
    while True:
        conj = conjugate(tuple(lam))
        hit = None
        for i, row in enumerate(lam):
            for j in range(row):
                if (row - j - 1) + (conj[j] - i - 1) + 1 == n:
                    hit = (i, j, conj[j] - 1)
                    break
            if hit:
                break
        if hit is None:
            return partition(lam), removed
        i, j, a = hit
        new = lam[:]
        for rrow in range(i, a):
            new[rrow] = lam[rrow + 1] - 1
        new[a] = j
        lam = [p for p in new if p]
        removed += 1


# ---------------------------------------------------------------------------
# classification


def is_strict(lam: Partition) -> bool:
    return all(a > b for a, b in zip(lam, lam[1:]))


def is_reduced(lam: Partition, n: int = 2) -> bool:
    """Adjacent columns differ by less than n (the last one counts against 0)."""
    padded = list(lam) + [0]
    return all(a - b < n for a, b in zip(padded, padded[1:]))


def has_empty_2core(lam: Partition) -> bool:
    return core_quotient(lam, 2)[0] == ()


def classify(lam: Partition) -> dict[str, bool]:
    empty = has_empty_2core(lam)
    red = is_reduced(lam, 2)
    return {"is_strict": is_strict(lam), "is_2_reduced": red, "in_DP0": red and empty, "in_P0": empty}


# ---------------------------------------------------------------------------
# two-colored partitions


def colored(parts: Sequence) -> ColoredPartition:
    """Normalize; accepts (value, color) pairs or bare ints (white)."""
    out = []
    for p in parts:
        v, c = (p, WHITE) if isinstance(p, int) else (int(p[0]), p[1])
        if c not in (WHITE, GRAY):
            raise ValueError(f"unknown color {c!r}")
        if v < 0:
            raise ValueError("negative part")
        if v:
            out.append((v, c))
    # ties keep gray before white
    out.sort(key=lambda vc: (-vc[0], vc[1] != GRAY))
    return tuple(out)


def in_two_colored_class(lam: ColoredPartition) -> bool:
    seen: dict[int, str] = {}
    for v, c in lam:
        if seen.setdefault(v, c) != c:
            return False
    return True


def add_colored(a: tuple[int, str], b: tuple[int, str]) -> tuple[int, str]:
    if a[0] == 0:
        return b
    if b[0] == 0:
        return a
    return (a[0] + b[0], WHITE if a[1] == b[1] else GRAY)


def colored_add(lam, mu) -> ColoredPartition:
    lam, mu = colored(lam), colored(mu)
    k = max(len(lam), len(mu))
    lp = list(lam) + [(0, WHITE)] * (k - len(lam))
    mp = list(mu) + [(0, WHITE)] * (k - len(mu))
    return colored([add_colored(x, y) for x, y in zip(lp, mp)])


def values(lam: ColoredPartition) -> Partition:
    return tuple(v for v, _ in lam)


def parity_colored(lam: Partition, odd_color: str = GRAY) -> ColoredPartition:
    """Color odd parts with ``odd_color`` and even parts with the other one."""
    other = WHITE if odd_color == GRAY else GRAY
    return colored([(v, odd_color if v % 2 else other) for v in lam])


@dataclass(frozen=True)
class ColorSplit:
    white_part: Partition
    reduced_part: ColoredPartition

    @property
    def reduced_plain(self) -> Partition:
        return values(self.reduced_part)


def _alternating_summand(lam: ColoredPartition, odd_color: str, full_length: bool) -> list[int]:
    """Values of the 2-reduced summand, built from the bottom: each step keeps
    or raises the value so that its parity matches the color of lam."""
    other = WHITE if odd_color == GRAY else GRAY
    out = [0] * len(lam)
    below = 0
    for k in range(len(lam) - 1, -1, -1):
        want = lam[k][1]
        for v in (below, below + 1):
            if v == 0 and full_length:
                continue
            color = WHITE if v == 0 else (odd_color if v % 2 else other)
            if color == want:
                break
        else:  # pragma: no cover - one of two consecutive values always fits
            raise AssertionError
        out[k] = v
        below = v
    return out


def color_split(lam) -> ColorSplit:
    lam = colored(lam)
    if not in_two_colored_class(lam):
        raise ValueError("both k and underlined k occur; not a two-colored partition of the admissible class")
    red = _alternating_summand(lam, GRAY, False)
    white = [v - r for (v, _), r in zip(lam, red)]
    if not is_partition([w for w in white if w]) or any(w < 0 for w in white):
        raise ValueError("no white/reduced split exists")
    split = ColorSplit(partition(white), parity_colored(partition(red), GRAY))
    if colored_add(split.white_part, split.reduced_part) != lam:
        raise ValueError("no white/reduced split exists")
    return split


@dataclass(frozen=True)
class QTriple:
    mu: Partition
    nu: Partition
    c: int

    def __post_init__(self):
        object.__setattr__(self, "mu", partition(self.mu))
        object.__setattr__(self, "nu", partition(self.nu))

    def validate(self) -> None:
        if self.c not in (0, 1):
            raise ValueError("c must be 0 or 1")
        if not (is_reduced(self.mu) and has_empty_2core(self.mu)) or len(self.mu) % 2:
            raise ValueError("mu must be 2-reduced with empty 2-core and even length")
        if len(self.nu) > len(self.mu):
            raise ValueError("nu is longer than mu")
        if not self.mu and self.c:
            raise ValueError("the empty mu forces c = 0")

    @property
    def m(self) -> int:
        return size(self.mu) + size(self.nu) - len(self.mu) // 2

    def to_json(self) -> dict:
        return {"mu": list(self.mu), "nu": list(self.nu), "c": self.c}


def q_split(lam) -> QTriple:
    """Write lam = mu + nu with nu white and mu the alternating 2-reduced summand
    of full length whose smallest part is 1; c records the color of that 1."""
    lam = colored(lam)
    if not lam:
        return QTriple((), (), 0)
    c = 1 if lam[-1][1] == WHITE else 0
    odd = WHITE if c else GRAY
    mu = _alternating_summand(lam, odd, True)
    nu = [v - m for (v, _), m in zip(lam, mu)]
    return QTriple(partition(mu), partition(nu), c)


def q_join(t: QTriple) -> ColoredPartition:
    if not t.mu:
        return colored(t.nu)
    odd = WHITE if t.c else GRAY
    return colored_add(parity_colored(t.mu, odd), t.nu)


@dataclass(frozen=True)
class ResidueCounts:
    r0: int
    r1: int
    rg0: int
    rg1: int


def residue_counts(lam) -> ResidueCounts:
    lam = colored(lam)
    r = [0, 0]
    rg = [0, 0]
    for p, (v, c) in enumerate(lam, start=1):
        for q in range(1, v + 1):
            if c == GRAY and q == v:
                rg[(p + 1) % 2] += 1
            else:
                r[(p + q) % 2] += 1
    return ResidueCounts(r[0], r[1], rg[0], rg[1])


# ---------------------------------------------------------------------------
# enumeration


def partitions(m: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """All partitions of m, reverse-lexicographic."""
    if m == 0:
        yield ()
        return
    if max_len == 0:
        return
    top = m if max_part is None else min(m, max_part)
    for first in range(top, 0, -1):
        for rest in partitions(m - first, first, None if max_len is None else max_len - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def count_partitions(m: int, max_part: int | None = None, max_len: int | None = None) -> int:
    if m == 0:
        return 1
    if max_len == 0 or m < 0:
        return 0
    top = m if max_part is None else min(m, max_part)
    return sum(count_partitions(m - f, f, None if max_len is None else max_len - 1) for f in range(top, 0, -1))


def strict_partitions(m: int, max_part: int | None = None) -> Iterator[Partition]:
    if m == 0:
        yield ()
        return
    top = m if max_part is None else min(m, max_part)
    for first in range(top, 0, -1):
        for rest in strict_partitions(m - first, first - 1):
            yield (first,) + rest


def odd_partitions(m: int) -> Iterator[Partition]:
    for lam in partitions(m):
        if all(p % 2 for p in lam):
            yield lam


def reduced_partitions(m: int, length: int | None = None) -> Iterator[Partition]:
    """2-reduced partitions of m (conjugates of strict partitions)."""
    for s in strict_partitions(m):
        lam = conjugate(s)
        if length is None or len(lam) == length:
            yield lam


def dp0(m: int) -> Iterator[Partition]:
    """2-reduced partitions with empty 2-core and 2-weight m."""
    for lam in reduced_partitions(2 * m):
        if has_empty_2core(lam):
            yield lam


def p0(m: int) -> Iterator[Partition]:
    """Partitions with empty 2-core and 2-weight m."""
    for lam in partitions(2 * m):
        if has_empty_2core(lam):
            yield lam


def multipartitions(k: int, m: int) -> Iterator[tuple[Partition, ...]]:
    if k == 0:
        if m == 0:
            yield ()
        return
    for first in range(m, -1, -1):
        for lam in partitions(first):
            for rest in multipartitions(k - 1, m - first):
                yield (lam,) + rest


def _even_length_dp0(budget: int) -> Iterator[Partition]:
    """2-reduced mu with empty 2-core, even length 2k and |mu| - k <= budget."""
    # Parts are grown from the bottom (smallest part 1, each next part equal or
    # one larger).  Every part adds at least 1/2 to |mu| - len/2, so the
    # partial cost is a lower bound for any completion.
    def grow(parts: list[int], total: int):
        if 2 * total - len(parts) > 2 * budget:
            return
        if len(parts) % 2 == 0:
            lam = tuple(reversed(parts))
            if has_empty_2core(lam):
                yield lam
        for v in (parts[-1], parts[-1] + 1):
            yield from grow(parts + [v], total + v)

    yield ()
    yield from grow([1], 1)


def q_triples(m: int) -> Iterator[QTriple]:
    for mu in _even_length_dp0(m):
        rest = m - (size(mu) - len(mu) // 2)
        if rest < 0:
            continue
        for nu in partitions(rest, max_len=len(mu)):
            if mu:
                yield QTriple(mu, nu, 0)
                yield QTriple(mu, nu, 1)
            else:
                yield QTriple(mu, nu, 0)


CLASSES = ("P", "STRICT", "OP", "DP0", "P0", "P_k", "Q")


def enumerate_class(cls: str, m: int, k: int = 1) -> list:
    if m < 0:
        raise ValueError("m must be nonnegative")
    if cls == "P":
        return list(partitions(m))
    if cls == "STRICT":
        return list(strict_partitions(m))
    if cls == "OP":
        return list(odd_partitions(m))
    if cls == "DP0":
        return list(dp0(m))
    if cls == "P0":
        return list(p0(m))
    if cls == "P_k":
        if k < 1:
            raise ValueError("k must be positive")
        return list(multipartitions(k, m))
    if cls == "Q":
        return list(q_triples(m))
    raise ValueError(f"unknown class {cls!r}; expected one of {CLASSES}")


def partition_to_json(lam) -> list:
    return [list(p) if isinstance(p, tuple) else p for p in lam]


def partition_from_json(obj) -> Partition | ColoredPartition:
    if obj and isinstance(obj[0], list):
        return colored([(v, c) for v, c in obj])
    return partition(obj)
