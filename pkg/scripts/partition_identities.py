"""Check the partition identities behind the bijections far past the range
used by the test suite: |Q(m)| against (q^2)_inf/(q)_inf^2 and |DP0(m)|
against p(m).

    python3 scripts/partition_identities.py --order 40
"""

import argparse
import time
from dataclasses import dataclass

from wallforge.partition import count_partitions, dp0, q_triples
from wallforge.qseries import euler, expand


@dataclass
class IdentityConfig:
    order: int = 30
    dp0_order: int = 20


def main(cfg: IdentityConfig) -> bool:
    t = time.perf_counter()
    series = expand(euler(2, 1) * euler(1, -2), cfg.order).coeffs
    q_counts = [sum(1 for _ in q_triples(m)) for m in range(cfg.order + 1)]
    q_ok = q_counts == list(series)
    print(f"|Q(m)| = coeff of (q^2)_inf/(q)_inf^2 for m <= {cfg.order}: {q_ok} "
          f"({time.perf_counter() - t:.1f}s, last {q_counts[-1]})")
    t = time.perf_counter()
    dp = [sum(1 for _ in dp0(m)) for m in range(cfg.dp0_order + 1)]
    dp_ok = dp == [count_partitions(m) for m in range(cfg.dp0_order + 1)]
    print(f"|DP0(m)| = p(m) for m <= {cfg.dp0_order}: {dp_ok} ({time.perf_counter() - t:.1f}s, last {dp[-1]})")
    return q_ok and dp_ok


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--order", type=int, default=IdentityConfig.order)
    p.add_argument("--dp0-order", type=int, default=IdentityConfig.dp0_order)
    args = p.parse_args()
    raise SystemExit(0 if main(IdentityConfig(args.order, args.dp0_order)) else 1)
