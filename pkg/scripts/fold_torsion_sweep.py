"""Distribution of the fold torsion parameter t(m) over a range of m."""
import argparse
import time
from collections import Counter
from dataclasses import dataclass

from kazcalc.bordism import fold_torsion


@dataclass
class SweepConfig:
    m_max: int = 10_000
    show_first: int = 12


def main(cfg: SweepConfig):
    t0 = time.perf_counter()
    reports = [fold_torsion(m) for m in range(1, cfg.m_max + 1)]
    dt = time.perf_counter() - t0
    assert all(r.minimal() for r in reports)
    print(f"m = 1..{cfg.m_max}: {dt:.3f}s, all minimal")
    print("m  t(m)")
    for r in reports[: cfg.show_first]:
        print(f"{r.m:<3d}{r.t}")
    hist = Counter(r.t for r in reports)
    print("t  count  first m")
    for t in sorted(hist):
        first = next(r.m for r in reports if r.t == t)
        print(f"{t}  {hist[t]:<6d} {first}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m-max", type=int, default=SweepConfig.m_max)
    ap.add_argument("--show-first", type=int, default=SweepConfig.show_first)
    a = ap.parse_args()
    main(SweepConfig(a.m_max, a.show_first))
