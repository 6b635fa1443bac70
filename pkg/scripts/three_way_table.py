"""Print weight multiplicities from wall enumeration, the bijection and the
string-function series side by side.

    python3 scripts/three_way_table.py --max-m 5
"""

import argparse
import time
from dataclasses import dataclass, field

from wallforge import verify


@dataclass
class TableConfig:
    max_m: int = 5
    ranks: dict = field(default_factory=lambda: {"A1": (2,), "A2even": (1, 2), "D2": (2,), "A2odd": (3,),
                                                 "D1": (3,), "B1": (3,)})


def main(cfg: TableConfig) -> bool:
    ok = True
    header = "case".ljust(22) + "".join(f"m={m}".rjust(8) for m in range(cfg.max_m + 1))
    print(header)
    for family, n, lam, cross in verify.standard_cases(cfg.ranks):
        t = time.perf_counter()
        rows = verify.three_way(family, n, lam, cfg.max_m, cross)
        name = f"{family} n={n} L{lam}{' cross' if cross else ''}"
        cells = "".join((str(r.oracle) if r.ok else f"{r.oracle}/{r.bijection}/{r.series}!").rjust(8) for r in rows)
        print(name.ljust(22) + cells + f"   ({time.perf_counter() - t:.2f}s)")
        ok = ok and all(r.ok for r in rows)
    print("all three methods agree" if ok else "MISMATCH (entries shown as oracle/bijection/series)")
    return ok


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-m", type=int, default=TableConfig.max_m)
    args = p.parse_args()
    raise SystemExit(0 if main(TableConfig(max_m=args.max_m)) else 1)
