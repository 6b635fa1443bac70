"""Worked examples with known answers, replayed by the CLI and the test suite.

Bead data is written as {position: count} plus colors for the colored runner.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .abacus import BeadConfig, Move, RunnerLayout, apply_move, from_beads, pi_forward, reduce, to_beads
from .partition import QTriple, colored, core_quotient, n_weight, q_split
from .wall import make_wall, validate


def beads(family: str, n: int, lam: int, counts: dict[int, int], colors: dict[int, str] | None = None) -> BeadConfig:
    cfg = BeadConfig(RunnerLayout(family, n, lam), tuple(counts.items()), tuple((colors or {}).items()))
    cfg.validate()
    return cfg


@dataclass(frozen=True)
class Example:
    name: str
    expected: object
    compute: Callable[[], object]


def _move(cfg: BeadConfig, kind: str, pos: int) -> BeadConfig:
    return apply_move(cfg, Move(kind, pos))[0]


# walls given by their bead configurations

CH4 = beads("A2even", 2, 0, {6: 1, 16: 1, 2: 1, 12: 1, 13: 1, 18: 1, 4: 1, 19: 1, 10: 4, 15: 2})

CH5 = beads("A2odd", 3, 0, {6: 1, 16: 1, 12: 1, 8: 1, 4: 1, 14: 1, 5: 5, 10: 1, 15: 3, 20: 1},
            {5: "w", 10: "g", 15: "g", 20: "g"})
CH5_REDUCED = beads("A2odd", 3, 0, {5: 5, 10: 1, 15: 3, 20: 1}, {5: "g", 10: "w", 15: "w", 20: "g"})

B_DIAG = beads("B1", 3, 0, {19: 1, 2: 1, 3: 2, 15: 3, 21: 1, 16: 1, 11: 1, 6: 1, 12: 4, 24: 2},
               {6: "g", 12: "g", 24: "w"})
B_DIAG_REDUCED = beads("B1", 3, 0, {6: 1, 12: 4, 24: 2}, {6: "w", 12: "g", 24: "w"})

B_TOP = beads("B1", 3, 3, {13: 1, 2: 1, 3: 2, 9: 2, 15: 3, 21: 1, 22: 1, 11: 1, 12: 1, 18: 3, 24: 1},
              {3: "w", 9: "w", 15: "w", 21: "g"})
B_TOP_REDUCED = beads("B1", 3, 3, {3: 2, 9: 2, 15: 3, 21: 1}, {3: "w", 9: "w", 15: "g", 21: "g"})

B_CROSS = beads("B1", 3, 0, {19: 1, 2: 1, 3: 2, 15: 2, 21: 1, 16: 1, 11: 1, 6: 1, 12: 4, 24: 3},
                {6: "w", 12: "w", 24: "w"})
B_CROSS_REDUCED = beads("B1", 3, 0, {3: 1, 6: 1, 12: 4, 24: 3}, {6: "w", 12: "g", 24: "w"})


def _wall_5_1_a():
    return make_wall("A2odd", 3, 0, [8, (5, "UL"), (5, "UL"), 4, 1])


def _wall_5_1_b():
    return make_wall("D1", 3, 0, [7, (6, "UL"), (6, "UL"), (3, "LR"), 2])


def _pi(cfg: BeadConfig, cross: bool = False):
    m, image = pi_forward(from_beads(cfg), cross)
    return m, image.parts


EXAMPLES: tuple[Example, ...] = (
    Example("4-core of (6,5,3,1)", ((2, 1), 3),
            lambda: (core_quotient((6, 5, 3, 1), 4)[0], n_weight((6, 5, 3, 1), 4))),
    Example("A4(2) slide a kind I bead", beads("A2even", 2, 0, {1: 1, 2: 1, 4: 1, 5: 3, 10: 1}),
            lambda: _move(beads("A2even", 2, 0, {1: 1, 4: 1, 5: 3, 7: 1, 10: 1}), "B1", 7)),
    Example("A4(2) remove the pair 1, 4", beads("A2even", 2, 0, {5: 3, 7: 1, 10: 1}),
            lambda: _move(beads("A2even", 2, 0, {1: 1, 4: 1, 5: 3, 7: 1, 10: 1}), "B3", 1)),
    Example("A4(2) wall of weight Lambda0 - 32 delta", (32, ((3, 3, 2, 2, 2, 2), (4, 2, 2, 1), (4, 4, 1))),
            lambda: _pi(CH4)),
    Example("A5(2) reduced wall is valid", {"young": True, "proper": True, "reduced": True},
            lambda: validate(_wall_5_1_a())),
    Example("A5(2) wall to beads", beads("A2odd", 3, 0, {1: 1, 4: 1, 5: 2, 8: 1}, {5: "g"}),
            lambda: to_beads(_wall_5_1_a())),
    Example("A5(2) slide with color flip", beads("A2odd", 3, 0, {1: 1, 3: 1, 4: 1, 5: 2}, {5: "w"}),
            lambda: _move(to_beads(_wall_5_1_a()), "B1", 8)),
    Example("D4(1) wall to beads", beads("D1", 3, 0, {2: 1, 3: 1, 6: 2, 7: 1}, {3: "w", 6: "g"}),
            lambda: to_beads(_wall_5_1_b())),
    Example("D4(1) slide with color flips", beads("D1", 3, 0, {1: 1, 2: 1, 3: 1, 6: 2}, {3: "g", 6: "w"}),
            lambda: _move(to_beads(_wall_5_1_b()), "B1", 7)),
    Example("A5(2) reduction", CH5_REDUCED, lambda: to_beads(reduce(from_beads(CH5)).wall)),
    Example("A5(2) wall of weight Lambda0 - 32 delta",
            (32, ((3, 2, 2, 1), (2, 1, 1), (1, 1, 1, 1), (3, 2, 2, 2, 2, 1, 1, 1, 1, 1))),
            lambda: _pi(CH5)),
    Example("B3(1) remove the pair 1, 5 at Lambda3", beads("B1", 3, 3, {3: 1, 6: 1, 8: 1}, {3: "g"}),
            lambda: _move(beads("B1", 3, 3, {1: 1, 3: 1, 5: 1, 6: 1, 8: 1}, {3: "w"}), "B3", 1)),
    Example("B3(1) remove two beads at n", beads("B1", 3, 0, {1: 1, 4: 1}),
            lambda: _move(beads("B1", 3, 0, {1: 1, 3: 2, 4: 1}), "B5", 3)),
    Example("B3(1) Q-triple split", QTriple((3, 3, 2, 2, 2, 2, 1, 1), (4, 3, 2, 1, 1), 1),
            lambda: q_split(colored([7, 6, (4, "g"), (3, "g"), (3, "g"), (2, "g"), 1, 1]))),
    Example("B3(1) Q-triple size", 23,
            lambda: q_split(colored([7, 6, (4, "g"), (3, "g"), (3, "g"), (2, "g"), 1, 1])).m),
    Example("B3(1) Lambda0 reduction", B_DIAG_REDUCED, lambda: reduce(from_beads(B_DIAG)).config),
    Example("B3(1) Lambda0 wall of weight Lambda0 - 37 delta",
            (37, ((7, 5, 5, 5, 1, 1), (2, 1, 1, 1), (3,), (2, 2, 1, 1, 1, 1, 1), (2, 2, 1, 1, 1, 1))),
            lambda: _pi(B_DIAG)),
    Example("B3(1) Lambda3 reduction", B_TOP_REDUCED, lambda: reduce(from_beads(B_TOP)).config),
    Example("B3(1) Lambda3 wall of weight Lambda3 - 38 delta",
            (38, ((4, 3, 3, 3, 2), (2, 1, 1), (4,),
                  QTriple((2, 2, 2, 2, 1, 1, 1, 1), (2, 1, 1, 1, 1, 1), 1))),
            lambda: _pi(B_TOP)),
    Example("B3(1) cross reduction", B_CROSS_REDUCED, lambda: reduce(from_beads(B_CROSS)).config),
    Example("B3(1) wall of weight Lambda1 - 38 delta on Lambda0",
            (38, ((7, 5, 5, 1, 1), (2, 1, 1, 1), (3,), (2, 2, 2, 1, 1, 1, 1, 1), (2, 2, 2, 1, 1, 1, 1))),
            lambda: _pi(B_CROSS, cross=True)),
)


def replay() -> list[tuple[Example, object, bool]]:
    out = []
    for ex in EXAMPLES:
        try:
            got = ex.compute()
        except Exception as err:  # reported, not raised: the caller prints a diff
            got = f"error: {err}"
        out.append((ex, got, got == ex.expected))
    return out

