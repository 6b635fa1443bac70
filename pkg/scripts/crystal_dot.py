"""Write the crystal graph of walls near the ground state as a DOT file and
report how many of its walls are reduced.

    python3 scripts/crystal_dot.py --family A2even --n 1 --depth 6 --out a2.dot
"""

import argparse
from collections import Counter
from dataclasses import dataclass

from wallforge.affine import affine_data
from wallforge.crystal import crystal_graph, to_dot
from wallforge.wall import is_reduced


@dataclass
class GraphConfig:
    family: str = "A2even"
    n: int = 1
    lam: int = 0
    depth: int = 6
    out: str = "crystal.dot"


def main(cfg: GraphConfig) -> None:
    d = affine_data(cfg.family, cfg.n)
    vertices, edges = crystal_graph(d, cfg.lam, cfg.depth)
    with open(cfg.out, "w") as fh:
        fh.write(to_dot(vertices, edges))
    colors = Counter(i for _, i, _ in edges)
    print(f"{len(vertices)} walls, {len(edges)} arrows -> {cfg.out}")
    print("arrows per color:", dict(sorted(colors.items())))
    print("reduced walls:", sum(map(is_reduced, vertices)))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(GraphConfig()).items():
        p.add_argument(f"--{name}", type=type(default), default=default)
    main(GraphConfig(**vars(p.parse_args())))
