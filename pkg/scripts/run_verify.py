"""Run the verification suite over a range of ranks and write one JSON report per rank."""

import argparse
import json
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from osp_annihilator import oracle


@dataclass(frozen=True)
class VerifyConfig:
    ranks: tuple = (1, 2, 3)
    depth: int = 6
    order: int = 8
    out_dir: str = "results/verify"


def main(cfg: VerifyConfig) -> bool:
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    ok = True
    for l in cfg.ranks:
        # the zero-locus grid grows like 17^l, keep depth small from l = 3 on
        depth = cfg.depth if l <= 2 else min(cfg.depth, 3)
        t0 = time.perf_counter()
        report = oracle.verify_suite(l, depth, cfg.order)
        dt = time.perf_counter() - t0
        data = report.to_json() | {"config": asdict(cfg) | {"l": l, "depth": depth}, "seconds": round(dt, 2)}
        (out / f"verify_l{l}.json").write_text(json.dumps(data, indent=1, default=str))
        print(f"l={l} depth={depth} order={cfg.order}: allPass={report.all_pass} ({dt:.1f}s)")
        for line in report.lines():
            print("  " + line)
        ok &= report.all_pass
    return ok


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ranks", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--depth", type=int, default=6)
    ap.add_argument("--order", type=int, default=8)
    ap.add_argument("--out-dir", default="results/verify")
    a = ap.parse_args()
    raise SystemExit(0 if main(VerifyConfig(tuple(a.ranks), a.depth, a.order, a.out_dir)) else 3)
