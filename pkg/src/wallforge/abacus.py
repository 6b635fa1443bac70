"""Abacus bead configurations of walls, the reduction moves and the bijections
from weight spaces onto tuples of partitions.

Beads sit at the block counts of the nonempty columns.  Positions fall into
runners by residue; a runner is of kind I (one bead per position, beads slide),
II (several uncolored beads per position) or III (several colored beads per
position, never moved).  The color of a bead on a kind III runner records the
orientation of the lone half on top of its column: white for lower right,
gray for upper left.

Every move preserves, at each kind III position p, the parity of
(number of gray beads at p) + (number of beads strictly above p).  Moves only
touch kind I and II beads, so kind III colors are recomputed from that rule
instead of being flipped case by case.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .affine import AffineData, add, affine_data, is_delta_multiple
from .partition import (GRAY, WHITE, ColoredPartition, FrobeniusForm, Partition, QTriple, beta_numbers,
                        color_split, colored, colored_add, core_quotient, dp0, from_beta_numbers,
                        from_core_quotient, from_frobenius, has_empty_2core, is_reduced, multipartitions,
                        odd_partitions, p0, parity_colored, partition, partition_from_json,
                        partition_to_json, partitions, q_join, q_split, q_triples, residue_counts, size,
                        to_frobenius)
from .wall import LR, UL, Wall, content, is_valid

KIND_I, KIND_II, KIND_III = "I", "II", "III"


class AbacusError(ValueError):
    pass


@dataclass(frozen=True)
class RunnerLayout:
    family: str
    n: int
    lam: int

    @property
    def data(self) -> AffineData:
        return affine_data(self.family, self.n)

    @property
    def step(self) -> int:
        """Distance a kind I bead travels in one move."""
        d = self.data
        return d.n if self.family == "A1" else d.L

    def kind(self, pos: int) -> str:
        d = self.data
        f = self.family
        if f == "A1":
            return KIND_I
        if f in ("A2even", "D2"):
            return KIND_II if pos % d.ell == 0 else KIND_I
        if f in ("A2odd", "D1"):
            return KIND_III if pos % d.ell == 0 else KIND_I
        n = d.n
        if pos % (2 * n) == n:
            return KIND_III if self.lam == n else KIND_II
        if pos % (2 * n) == 0:
            return KIND_II if self.lam == n else KIND_III
        return KIND_I

    def runner(self, pos: int) -> int:
        """Runner label in 1..L (1..n for type A); the special runners of
        A2even/D2/A2odd/D1 are reported as ell."""
        d = self.data
        if self.family in ("A2even", "D2", "A2odd", "D1") and pos % d.ell == 0:
            return d.ell
        r = pos % self.step
        return r if r else self.step

    def base(self, pos: int) -> int:
        """Lowest position of the runner holding ``pos``."""
        return (pos - 1) % self.step + 1

    def describe(self) -> str:
        d = self.data
        if self.family == "A1":
            return f"A1 n={d.n}: {d.n} runners of kind I"
        kinds = {}
        for p in range(1, d.L + 1):
            kinds.setdefault(self.kind(p), []).append(p)
        return f"{self.family} n={d.n} L{self.lam}: " + "; ".join(
            f"kind {k} residues {v}" for k, v in sorted(kinds.items()))


@dataclass(frozen=True)
class BeadConfig:
    layout: RunnerLayout
    counts: tuple[tuple[int, int], ...]  # sorted (pos, count), count > 0
    colors: tuple[tuple[int, str], ...] = ()  # kind III positions only
    r: Optional[int] = None  # bead total for type A

    def __post_init__(self):
        counts = tuple(sorted((int(p), int(c)) for p, c in self.counts if c))
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "colors", tuple(sorted(self.colors)))

    def count_map(self) -> dict[int, int]:
        return dict(self.counts)

    def color_map(self) -> dict[int, str]:
        return dict(self.colors)

    def count(self, pos: int) -> int:
        return self.count_map().get(pos, 0)

    @property
    def total(self) -> int:
        return sum(c for _, c in self.counts)

    def validate(self) -> None:
        lay = self.layout
        colors = self.color_map()
        for p, c in self.counts:
            if p < 1:
                raise AbacusError(f"bead at nonpositive position {p}")
            k = lay.kind(p)
            if k == KIND_I and c > 1:
                raise AbacusError(f"kind I position {p} holds {c} beads")
            if (k == KIND_III) != (p in colors):
                raise AbacusError(f"position {p}: colors are required exactly on kind III runners")
        for p, col in self.colors:
            if col not in (WHITE, GRAY):
                raise AbacusError(f"unknown color {col!r} at {p}")
            if p not in self.count_map():
                raise AbacusError(f"color given for empty position {p}")
        if lay.family == "A1" and self.r is not None and self.total != self.r:
            raise AbacusError("type A configuration must hold exactly r beads")

    def to_json(self) -> dict:
        colors = self.color_map()
        out = {
            "runner_layout": {"family": self.layout.family, "n": self.layout.n, "lam": self.layout.lam},
            "beads": [{"pos": p, "count": c, "color": colors.get(p)} for p, c in self.counts],
        }
        if self.r is not None:
            out["r"] = self.r
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "BeadConfig":
        lay = obj["runner_layout"]
        layout = RunnerLayout(lay["family"], int(lay["n"]), int(lay["lam"]))
        counts = tuple((int(b["pos"]), int(b["count"])) for b in obj["beads"])
        colors = tuple((int(b["pos"]), b["color"]) for b in obj["beads"] if b.get("color"))
        cfg = cls(layout, counts, colors, obj.get("r"))
        cfg.validate()
        return cfg

    def __str__(self) -> str:
        colors = self.color_map()
        items = []
        for p, c in self.counts:
            tag = f"{p}{colors.get(p, '')}"
            items.append(tag if c == 1 else f"{tag}x{c}")
        return "{" + ", ".join(items) + "}"


def layout_of(Y: Wall) -> RunnerLayout:
    return RunnerLayout(Y.data.family, Y.data.n, Y.lam)


def _default_r(Y: Wall) -> int:
    n = Y.data.n
    k = len(Y.columns)
    return -(-k // n) * n if k else 0


def to_beads(Y: Wall, r: Optional[int] = None) -> BeadConfig:
    lay = layout_of(Y)
    if lay.family == "A1":
        if r is None:
            r = _default_r(Y)
        if r < len(Y.columns):
            raise AbacusError("r must be at least the number of nonempty columns")
        return BeadConfig(lay, tuple((z, 1) for z in beta_numbers(Y.heights(), r)), (), r)
    counts = Counter(b for b, _ in Y.columns)
    colors = {}
    for b, o in Y.columns:
        if lay.kind(b) == KIND_III:
            col = WHITE if o == LR else GRAY
            if colors.setdefault(b, col) != col:
                raise AbacusError(f"mixed colors at position {b}")
    return BeadConfig(lay, tuple(counts.items()), tuple(colors.items()))


def from_beads(cfg: BeadConfig) -> Wall:
    cfg.validate()
    lay = cfg.layout
    data = lay.data
    if lay.family == "A1":
        heights = from_beta_numbers([p for p, _ in cfg.counts], cfg.r)
        return Wall(data, lay.lam, tuple((h, None) for h in heights))
    colors = cfg.color_map()
    cols = []
    for p, c in sorted(cfg.counts, reverse=True):
        o = None
        if lay.kind(p) == KIND_III:
            o = LR if colors[p] == WHITE else UL
        cols.extend([(p, o)] * c)
    Y = Wall(data, lay.lam, tuple(cols))
    if not is_valid(Y):
        raise AbacusError(f"bead configuration {cfg} does not describe a proper wall")
    return Y


# ---------------------------------------------------------------------------
# moves


@dataclass(frozen=True)
class Move:
    kind: str  # "B1".."B5"
    pos: int  # the moved bead, or the lower bead of a removed pair

    def __str__(self) -> str:
        return f"{self.kind}@{self.pos}"


def _recolor(lay: RunnerLayout, before: BeadConfig, counts: dict[int, int]) -> tuple[tuple[int, str], ...]:
    """Kind III colors after the uncolored beads changed from ``before`` to ``counts``."""
    old = before.count_map()
    colors = before.color_map()
    out = []
    for p, col in colors.items():
        above_old = sum(c for q, c in old.items() if q > p)
        above_new = sum(c for q, c in counts.items() if q > p)
        if (above_old - above_new) % 2:
            col = WHITE if col == GRAY else GRAY
        out.append((p, col))
    return tuple(out)


def legal_moves(cfg: BeadConfig) -> list[Move]:
    lay = cfg.layout
    d = lay.data
    f = lay.family
    counts = cfg.count_map()
    out = []
    step = lay.step
    for p in sorted(counts):
        if lay.kind(p) == KIND_I and p - step >= 1 and counts.get(p - step, 0) == 0:
            out.append(Move("B1", p))
        if _b2_applies(lay, p):
            out.append(Move("B2", p))
    if f in ("A2even", "D2"):
        for s in range(1, d.n + 1):
            if counts.get(s) and counts.get(d.L - s):
                out.append(Move("B3", s))
        if counts.get(d.ell):
            out.append(Move("B4", d.ell))
    elif f in ("A2odd", "D1"):
        for s in range(1, d.n):
            if counts.get(s) and counts.get(d.L - s):
                out.append(Move("B2", s))
    elif f == "B1":
        n = d.n
        for s in range(1, n):
            if counts.get(s) and counts.get(d.ell - s):
                out.append(Move("B3", s))
        if lay.kind(d.ell) == KIND_II and counts.get(d.ell):
            out.append(Move("B4", d.ell))
        if lay.kind(n) == KIND_II and counts.get(n, 0) >= 2:
            out.append(Move("B5", n))
    return sorted(out, key=lambda mv: (mv.pos, mv.kind))


def _b2_applies(lay: RunnerLayout, p: int) -> bool:
    d = lay.data
    if lay.kind(p) != KIND_II:
        return False
    if lay.family in ("A2even", "D2"):
        return p > d.ell
    if lay.family == "B1":
        return p > lay.base(p)
    return False


def move_delta(lay: RunnerLayout, move: Move) -> int:
    """Number of deltas by which the weight rises."""
    d = lay.data
    if lay.family in ("A2even", "D2") and move.kind in ("B1", "B3"):
        return d.epsilon_decomp
    return 1


def apply_move(cfg: BeadConfig, move: Move) -> tuple[BeadConfig, int]:
    lay = cfg.layout
    d = lay.data
    f = lay.family
    counts = cfg.count_map()

    def need(cond: bool, msg: str):
        if not cond:
            raise AbacusError(f"move {move} not applicable: {msg}")

    def take(p: int, k: int = 1):
        need(counts.get(p, 0) >= k, f"no bead at {p}" if k == 1 else f"fewer than {k} beads at {p}")
        counts[p] -= k
        if not counts[p]:
            del counts[p]

    p = move.pos
    if move.kind == "B1":
        need(lay.kind(p) == KIND_I, f"position {p} is not on a kind I runner")
        q = p - lay.step
        need(q >= 1, "bead is already at the top of its runner")
        need(counts.get(q, 0) == 0, f"position {q} is occupied")
        take(p)
        counts[q] = 1
    elif move.kind == "B2" and f in ("A2odd", "D1"):
        need(1 <= p <= d.n - 1, "pair index out of range")
        take(p)
        take(d.L - p)
    elif move.kind == "B2":
        need(f != "A1" and _b2_applies(lay, p), f"position {p} is not a movable kind II bead")
        take(p)
        counts[p - d.ell] = counts.get(p - d.ell, 0) + 1
    elif move.kind == "B3":
        top = d.L if f in ("A2even", "D2") else d.ell
        limit = d.n if f in ("A2even", "D2") else d.n - 1
        need(f in ("A2even", "D2", "B1") and 1 <= p <= limit, "pair index out of range")
        take(p)
        take(top - p)
    elif move.kind == "B4":
        need(f in ("A2even", "D2") or (f == "B1" and lay.kind(d.ell) == KIND_II), "family has no such move")
        need(p == d.ell, f"removal happens at {d.ell}")
        take(p)
    elif move.kind == "B5":
        need(f == "B1" and lay.kind(d.n) == KIND_II, "family has no such move")
        need(p == d.n, f"removal happens at {d.n}")
        take(p, 2)
    else:
        raise AbacusError(f"unknown move kind {move.kind!r}")
    colors = _recolor(lay, cfg, counts)
    return BeadConfig(lay, tuple(counts.items()), colors, cfg.r), move_delta(lay, move)


@dataclass
class Reduction:
    wall: Wall
    config: BeadConfig
    moves: Counter = field(default_factory=Counter)
    deltas: int = 0


def reduce_config(cfg: BeadConfig, rng: Optional[random.Random] = None) -> tuple[BeadConfig, Counter, int]:
    moves: Counter = Counter()
    total = 0
    while True:
        options = legal_moves(cfg)
        if not options:
            return cfg, moves, total
        mv = options[0] if rng is None else rng.choice(options)
        cfg, dlt = apply_move(cfg, mv)
        moves[mv.kind] += 1
        total += dlt


def reduce(Y: Wall, rng: Optional[random.Random] = None) -> Reduction:
    """Apply moves until none is left; canonical order is lowest position first,
    or random when ``rng`` is given."""
    cfg, moves, total = reduce_config(to_beads(Y), rng)
    return Reduction(from_beads(cfg), cfg, moves, total)


# ---------------------------------------------------------------------------
# weight criterion


def _runner_counts(cfg: BeadConfig) -> Counter:
    lay = cfg.layout
    out: Counter = Counter()
    for p, c in cfg.counts:
        if lay.kind(p) == KIND_I:
            out[lay.runner(p)] += c
    return out


def weight_condition(cfg: BeadConfig, cross: bool = False) -> bool:
    """Membership in the union of the weight spaces Lambda - m delta (for the
    B1 cross case: the other of Lambda_0, Lambda_1, minus m delta).

    Mirror runners must hold equally many kind I beads and, for B1 on
    Lambda_0/Lambda_1, the runner of odd multiples of n an even (odd for the
    cross case) number of beads.  For the colored families the colored
    partition of the reduced wall must then pass its own residue test.
    """
    lay = cfg.layout
    d = lay.data
    f = lay.family
    if f == "A1":
        core, _ = core_quotient(from_beads(cfg).heights(), d.n, cfg.r)
        return not core and not cross
    if cross and not (f == "B1" and lay.lam in (0, 1)):
        return False
    rc = _runner_counts(cfg)
    mirror = d.ell if f == "B1" else d.L
    if any(rc[k] != rc[mirror - k] for k in range(1, _pair_count(d) + 1)):
        return False
    if f in ("A2even", "D2"):
        return True
    if f == "B1" and lay.lam != d.n:
        special = sum(c for p, c in cfg.counts if p % (2 * d.n) == d.n)
        if special % 2 != cross:
            return False
    red, _, _ = reduce_config(cfg)
    return reduced_condition(red, cross)


def reduced_condition(red: BeadConfig, cross: bool = False) -> bool:
    """Residue test on the colored partition of a reduced configuration."""
    lay = red.layout
    d = lay.data
    lam_y = lambda_of_reduced(red, swap=cross and red.total % 2 == 0)
    if d.family in ("A2odd", "D1"):
        res = residue_counts(lam_y)
        return res.rg0 == res.rg1 and (d.family == "A2odd" or res.r0 == res.r1)
    if lay.lam == d.n:
        try:
            t = q_split(lam_y)
            t.validate()
        except ValueError:
            return False
        return q_join(t) == lam_y
    try:
        split = color_split(lam_y)
    except ValueError:
        return False
    return has_empty_2core(split.reduced_plain)


# ---------------------------------------------------------------------------
# the bijections


CASES = ("A1", "A2even", "D2", "A2odd", "D1", "B-L0", "B-Ln", "B-cross")


def case_of(Y: Wall, cross: bool = False) -> str:
    f = Y.data.family
    if f != "B1":
        if cross:
            raise AbacusError("the cross case exists for family B1 only")
        return f
    if cross:
        if Y.lam not in (0, 1):
            raise AbacusError("the cross case lives on the Lambda_0 or Lambda_1 ground state")
        return "B-cross"
    return "B-Ln" if Y.lam == Y.data.n else "B-L0"


@dataclass(frozen=True)
class TupleImage:
    """Image of a wall under the bijection.

    ``parts`` holds, in order:
      A1:      the n-quotient (n partitions)
      A2even, D2: lambda0, lambda1..lambdan
      A2odd, D1:  lambda1..lambda(n-1), white part, reduced part
      B-L0, B-cross: odd-part lambda0, lambda1..lambda(n-1), white part, reduced part
      B-Ln:    lambda0, lambda1..lambda(n-1), QTriple
    Reduced parts are stored as plain partitions.
    """

    case: str
    parts: tuple

    def to_json(self) -> dict:
        return {"case": self.case,
                "parts": [p.to_json() if isinstance(p, QTriple) else partition_to_json(p) for p in self.parts]}

    @classmethod
    def from_json(cls, obj: dict) -> "TupleImage":
        parts = []
        for p in obj["parts"]:
            parts.append(QTriple(tuple(p["mu"]), tuple(p["nu"]), int(p["c"])) if isinstance(p, dict)
                         else partition_from_json(p))
        return cls(obj["case"], tuple(parts))


def _pair_count(data: AffineData) -> int:
    return data.n if data.family in ("A2even", "D2") else data.n - 1


def pi0(cfg: BeadConfig) -> tuple[Partition, ...]:
    """Pair the kind I runner k with its mirror through Frobenius notation:
    bead positions on runner k give the arms, those on the mirror the legs."""
    lay = cfg.layout
    d = lay.data
    step = lay.step
    mirror = d.ell if d.family == "B1" else d.L
    by_runner: dict[int, list[int]] = {}
    for p, _ in cfg.counts:
        if lay.kind(p) == KIND_I:
            by_runner.setdefault(lay.runner(p), []).append(p)
    out = []
    for k in range(1, _pair_count(d) + 1):
        arms = sorted(((p - k) // step for p in by_runner.get(k, [])), reverse=True)
        legs = sorted(((p - (mirror - k)) // step for p in by_runner.get(mirror - k, [])), reverse=True)
        if len(arms) != len(legs):
            raise AbacusError(f"runners {k} and {mirror - k} carry different bead counts")
        out.append(from_frobenius(FrobeniusForm(tuple(arms), tuple(legs))))
    return tuple(out)


def _part_of(lay: RunnerLayout, pos: int) -> int:
    """Part read off a bead on a special runner: k*ell gives k, and on the
    B1 runner of odd multiples of n, (2k-1)*n gives k."""
    d = lay.data
    if pos % d.ell == 0:
        return pos // d.ell
    return (pos + d.n) // (2 * d.n)


def lambda_of_reduced(cfg: BeadConfig, swap: bool = False) -> ColoredPartition:
    """The colored partition read from the kind III beads."""
    lay = cfg.layout
    colors = cfg.color_map()
    parts = []
    for p, c in cfg.counts:
        if lay.kind(p) == KIND_III:
            col = colors[p]
            if swap:
                col = WHITE if col == GRAY else GRAY
            parts.extend([(_part_of(lay, p), col)] * c)
    return colored(parts)


def _kind_two_partition(cfg: BeadConfig) -> Partition:
    """Multiplicities on the kind II runner: k for a bead at k*ell, or the odd
    value 2k-1 for a bead at (2k-1)*n on the B1 runner R_n."""
    lay = cfg.layout
    d = lay.data
    parts = []
    for p, c in cfg.counts:
        if lay.kind(p) == KIND_II:
            parts.extend([p // d.ell if p % d.ell == 0 else p // d.n] * c)
    return partition(parts)


def pi_forward(Y: Wall, cross: bool = False) -> tuple[int, TupleImage]:
    case = case_of(Y, cross)
    d = Y.data
    n = d.n
    c = content(Y)
    if cross:
        m = is_delta_multiple(d, tuple(a - g for a, g in zip(c, cross_gamma(d, Y.lam))))
    else:
        m = is_delta_multiple(d, c)
    if m is None:
        raise AbacusError("wall is not in the weight space of this case")
    if case == "A1":
        core, quotient = core_quotient(Y.heights(), n)
        assert not core
        return m, TupleImage(case, tuple(quotient))
    cfg = to_beads(Y)
    if not weight_condition(cfg, cross):
        raise AbacusError("bead configuration fails the weight criterion")
    lead = pi0(cfg)
    red, _, _ = reduce_config(cfg)
    if case in ("A2even", "D2"):
        lam0 = _kind_two_partition(cfg)
        image = TupleImage(case, (lam0,) + lead)
        total = size(lam0) + d.epsilon_decomp * sum(map(size, lead))
    elif case in ("A2odd", "D1"):
        split = color_split(lambda_of_reduced(red))
        image = TupleImage(case, lead + (split.white_part, split.reduced_plain))
        extra = size(split.white_part) + size(split.reduced_plain)
        total = sum(map(size, lead)) + (extra if case == "A2odd" else extra // 2)
    elif case == "B-Ln":
        lam0 = _kind_two_partition(cfg)
        t = q_split(lambda_of_reduced(red))
        image = TupleImage(case, (lam0,) + lead + (t,))
        total = size(lam0) + sum(map(size, lead)) + t.m
    else:
        lam0 = _kind_two_partition(cfg)
        # in the cross case the colors are read relative to the parity of the
        # bead total of the reduced wall
        mu = lambda_of_reduced(red, swap=case == "B-cross" and red.total % 2 == 0)
        split = color_split(mu)
        image = TupleImage(case, (lam0,) + lead + (split.white_part, split.reduced_plain))
        total = size(lam0) // 2 + sum(map(size, lead)) + size(split.white_part) + size(split.reduced_plain)
    check_image(d, Y.lam, image)
    if total != m:
        raise AbacusError(f"size bookkeeping gives {total}, content gives {m}")
    return m, image


def image_size(data: AffineData, image: TupleImage) -> int:
    parts = image.parts
    case = image.case
    if case == "A1":
        return sum(map(size, parts))
    if case in ("A2even", "D2"):
        return size(parts[0]) + data.epsilon_decomp * sum(map(size, parts[1:]))
    if case == "A2odd":
        return sum(map(size, parts))
    if case == "D1":
        return sum(map(size, parts[:-2])) + (size(parts[-2]) + size(parts[-1])) // 2
    if case == "B-Ln":
        return size(parts[0]) + sum(map(size, parts[1:-1])) + parts[-1].m
    return size(parts[0]) // 2 + sum(map(size, parts[1:]))


def check_image(data: AffineData, lam: int, image: TupleImage) -> None:
    """Raise unless ``image`` lies in the target set of its case."""
    n = data.n
    case, parts = image.case, image.parts
    if case not in CASES:
        raise AbacusError(f"unknown case {case!r}")
    expected = {"A1": n, "A2even": n + 1, "D2": n + 1, "A2odd": n + 1, "D1": n + 1,
                "B-L0": n + 2, "B-cross": n + 2, "B-Ln": n + 1}[case]
    if len(parts) != expected:
        raise AbacusError(f"{case} expects {expected} components, got {len(parts)}")
    for p in parts:
        if not isinstance(p, QTriple) and tuple(partition(p)) != tuple(p):
            raise AbacusError(f"component {p} is not a partition")
    if case in ("A2odd", "D1", "B-L0", "B-cross"):
        red = parts[-1]
        if not (is_reduced(red) and has_empty_2core(red)):
            raise AbacusError(f"reduced component {red} must be 2-reduced with empty 2-core")
        if case == "D1" and not has_empty_2core(parts[-2]):
            raise AbacusError(f"white component {parts[-2]} must have empty 2-core")
    if case in ("B-L0", "B-cross"):
        lam0 = parts[0]
        if any(v % 2 == 0 for v in lam0):
            raise AbacusError("lambda0 must have odd parts only")
        if len(lam0) % 2 != (1 if case == "B-cross" else 0):
            raise AbacusError(f"lambda0 must have {'odd' if case == 'B-cross' else 'even'} length")
    if case == "B-Ln":
        parts[-1].validate()


def _place_type_one(lay: RunnerLayout, lead: tuple[Partition, ...]) -> dict[int, int]:
    d = lay.data
    step = lay.step
    mirror = d.ell if d.family == "B1" else d.L
    counts: dict[int, int] = {}
    for k, lamk in enumerate(lead, start=1):
        f = to_frobenius(lamk)
        for a in f.arms:
            counts[k + step * a] = 1
        for b in f.legs:
            counts[mirror - k + step * b] = 1
    return counts


def pi_inverse(data: AffineData, lam: int, image: TupleImage) -> Wall:
    check_image(data, lam, image)
    case = image.case
    n = data.n
    parts = image.parts
    lay = RunnerLayout(data.family, n, lam)
    if case == "A1":
        heights = from_core_quotient((), parts, n)
        return Wall(data, lam, tuple((h, None) for h in heights))
    if case in ("A2even", "D2"):
        counts = _place_type_one(lay, parts[1:])
        for k in parts[0]:
            counts[k * data.ell] = counts.get(k * data.ell, 0) + 1
        return from_beads(BeadConfig(lay, tuple(counts.items())))
    if case in ("A2odd", "D1"):
        lead, white, red = parts[:-2], parts[-2], parts[-1]
        return _assemble(lay, _rejoin(white, red), data.ell, _place_type_one(lay, lead))
    if case == "B-Ln":
        lam0, lead, t = parts[0], parts[1:-1], parts[-1]
        counts = _place_type_one(lay, lead)
        for k in lam0:
            counts[k * data.ell] = counts.get(k * data.ell, 0) + 1
        return _assemble(lay, q_join(t), None, counts)
    lam0, lead, white, red = parts[0], parts[1:-2], parts[-2], parts[-1]
    mu = _rejoin(white, red)
    counts = _place_type_one(lay, lead)
    for v in lam0:
        counts[v * n] = counts.get(v * n, 0) + 1
    if case == "B-cross":
        # the reduced wall keeps one bead at n; colors were read relative to
        # the parity of its bead total
        if (len(mu) + 1) % 2 == 0:
            mu = colored([(k, WHITE if col == GRAY else GRAY) for k, col in mu])
        return _assemble(lay, mu, data.ell, counts, extra={n: 1})
    return _assemble(lay, mu, data.ell, counts)


def _rejoin(white: Partition, red: Partition) -> ColoredPartition:
    return colored_add(white, parity_colored(red, GRAY))


def _assemble(lay: RunnerLayout, reduced: ColoredPartition, scale: Optional[int],
              uncolored: dict[int, int], extra: Optional[dict[int, int]] = None) -> Wall:
    """Rebuild the reduced wall from its colored partition (part k at k*scale,
    or at (2k-1)*n when ``scale`` is None), put the uncolored beads back and
    recolor."""
    n = lay.n
    red_counts: dict[int, int] = dict(extra or {})
    red_colors: dict[int, str] = {}
    for k, col in reduced:
        p = k * scale if scale else (2 * k - 1) * n
        red_counts[p] = red_counts.get(p, 0) + 1
        red_colors[p] = col
    before = BeadConfig(lay, tuple(red_counts.items()), tuple(red_colors.items()))
    full = dict(red_counts)
    for p, c in (extra or {}).items():
        full[p] -= c
    for p, c in uncolored.items():
        full[p] = full.get(p, 0) + c
    return from_beads(BeadConfig(lay, tuple(full.items()), _recolor(lay, before, full)))


# ---------------------------------------------------------------------------
# target sets


def target_set(data: AffineData, lam: int, m: int, cross: bool = False) -> Iterator[TupleImage]:
    """Every tuple of partitions whose size bookkeeping gives m."""
    f = data.family
    n = data.n
    if f == "A1":
        for q in multipartitions(n, m):
            yield TupleImage("A1", q)
        return
    if f in ("A2even", "D2"):
        eps = data.epsilon_decomp
        for b in range(m // eps + 1):
            for lead in multipartitions(n, b):
                for lam0 in partitions(m - eps * b):
                    yield TupleImage(f, (lam0,) + lead)
        return
    if f == "A2odd":
        for c in range(m // 2 + 1):
            for red in dp0(c):
                for a in range(m - 2 * c + 1):
                    for lead in multipartitions(n - 1, a):
                        for white in partitions(m - 2 * c - a):
                            yield TupleImage(f, lead + (white, red))
        return
    if f == "D1":
        for c in range(m + 1):
            for red in dp0(c):
                for a in range(m - c + 1):
                    for lead in multipartitions(n - 1, a):
                        for white in p0(m - c - a):
                            yield TupleImage(f, lead + (white, red))
        return
    case = "B-cross" if cross else ("B-Ln" if lam == n else "B-L0")
    if case == "B-Ln":
        for a in range(m + 1):
            for lam0 in partitions(a):
                for b in range(m - a + 1):
                    for lead in multipartitions(n - 1, b):
                        for t in q_triples(m - a - b):
                            yield TupleImage(case, (lam0,) + lead + (t,))
        return
    odd_len = 1 if cross else 0
    for a in range(m + 1):
        for lam0 in odd_partitions(2 * a + odd_len):
            if len(lam0) % 2 != odd_len:
                continue
            for c in range((m - a) // 2 + 1):
                for red in dp0(c):
                    for b in range(m - a - 2 * c + 1):
                        for lead in multipartitions(n - 1, b):
                            for white in partitions(m - a - 2 * c - b):
                                yield TupleImage(case, (lam0,) + lead + (white, red))


def cross_gamma(data: AffineData, lam: int):
    """Content separating Lambda_lam from the other of Lambda_0, Lambda_1."""
    g = data.gamma
    return g if lam == 0 else (g[1], g[0]) + g[2:]


def weight_space_content(data: AffineData, m: int, cross: bool = False, lam: int = 0):
    """Content of the weight space the bijection matches with size m."""
    if cross:
        return add(cross_gamma(data, lam), data.delta_multiple(m))
    return data.delta_multiple(m)
