"""Tabulate P_lambda(q), dim V(lambda), dim V(lambda)_0 and the PRV degree for small dominant weights."""

import argparse
from dataclasses import dataclass

from osp_annihilator import charmult, determinants


@dataclass(frozen=True)
class TableConfig:
    l: int = 2
    max_coord: int = 3


def poly_text(p):
    p = charmult.trim(p)
    terms = [(str(c) if c != 1 or i == 0 else "") + (f"q^{i}" if i else "") for i, c in enumerate(p) if c]
    return " + ".join(terms) or "0"


def main(cfg: TableConfig):
    print(f"{'lambda':>10} {'dim':>6} {'dim_0':>6} {'deg PRV':>8} {'N*':>4}  P_lambda(q)")
    for lam in charmult.dominant_weights(cfg.l, cfg.max_coord):
        n = charmult.stabilization_order(lam)
        p = charmult.hesselink_series(lam, n)
        dim = charmult.full_table(lam).dimension()
        dim0 = charmult.h_total_multiplicity(lam)
        deg = determinants.prv_factorization(lam).degree()
        label = ",".join(str(int(x)) for x in lam)
        print(f"{label:>10} {dim:>6} {dim0:>6} {deg:>8} {n:>4}  {poly_text(p)}")
        # the coefficient sum of the stabilized series is the zero-weight multiplicity
        assert sum(p) == dim0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--l", type=int, default=2)
    ap.add_argument("--max-coord", type=int, default=3)
    a = ap.parse_args()
    main(TableConfig(a.l, a.max_coord))
