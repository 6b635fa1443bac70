"""Reduce every wall of a weight space under many random move orders and
tally how often each move fires.

    python3 scripts/reduction_orders.py --family B1 --n 3 --m 3 --trials 50
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from wallforge.abacus import reduce
from wallforge.affine import affine_data
from wallforge.wall import enumerate_walls


@dataclass
class ReductionConfig:
    family: str = "D1"
    n: int = 3
    lam: int = 0
    m: int = 3
    trials: int = 20
    seed: int = 0


def main(cfg: ReductionConfig) -> bool:
    d = affine_data(cfg.family, cfg.n)
    rng = random.Random(cfg.seed)
    walls = enumerate_walls(d, cfg.lam, d.delta_multiple(cfg.m))
    fired = Counter()
    anchors = Counter()
    disagreements = 0
    for Y in walls:
        ref = reduce(Y)
        fired.update(ref.moves)
        anchors[ref.wall.columns] += 1
        for _ in range(cfg.trials):
            other = reduce(Y, rng)
            disagreements += (other.wall, other.deltas) != (ref.wall, ref.deltas)
    print(f"{len(walls)} walls, {len(anchors)} distinct reduced anchors")
    print("moves fired in canonical order:", dict(sorted(fired.items())))
    print(f"random orders that disagreed: {disagreements} of {len(walls) * cfg.trials}")
    return disagreements == 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(ReductionConfig()).items():
        p.add_argument(f"--{name}", type=type(default), default=default)
    raise SystemExit(0 if main(ReductionConfig(**vars(p.parse_args()))) else 1)
