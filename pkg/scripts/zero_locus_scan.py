"""Scan a half-integer grid and compare the annihilator oracle with vanishing of PRV determinants."""

import argparse
from collections import Counter
from dataclasses import dataclass

from osp_annihilator import charmult, determinants, oracle
from osp_annihilator.rootdata import format_weight, verma_is_simple


@dataclass(frozen=True)
class ScanConfig:
    l: int = 2
    bound: int = 4
    max_coord: int = 2


def main(cfg: ScanConfig):
    prvs = [determinants.prv_factorization(lam) for lam in charmult.dominant_weights(cfg.l, cfg.max_coord)]
    tally = Counter()
    for mu in oracle.half_integer_grid(cfg.l, cfg.bound):
        central = oracle.annihilator_centrally_generated(mu)
        vanishes = any(determinants.evaluate_factored(d, mu).vanishing_order for d in prvs)
        tally[(central, verma_is_simple(mu), vanishes)] += 1
        if central and verma_is_simple(mu) and vanishes:
            print("counterexample:", format_weight(mu))
    print(f"{'central':>8} {'simple':>7} {'PRV=0':>6} {'count':>6}")
    for (c, s, v), n in sorted(tally.items()):
        print(f"{c!s:>8} {s!s:>7} {v!s:>6} {n:>6}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--l", type=int, default=2)
    ap.add_argument("--bound", type=int, default=4)
    ap.add_argument("--max-coord", type=int, default=2)
    a = ap.parse_args()
    main(ScanConfig(a.l, a.bound, a.max_coord))
