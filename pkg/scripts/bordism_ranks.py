"""Tabulate cobordism, left-right bordism and framed bordism ranks side by side."""
import argparse
from dataclasses import dataclass

from kazcalc.bordism import bordism_rank, framed_bordism_rank
from kazcalc.kazarian import make_family
from kazcalc.ranks import cob_rank


@dataclass
class RankConfig:
    kind: str = "morin"
    codim: int = 2
    n_max: int = 24


def main(cfg: RankConfig):
    fam = make_family(cfg.kind, cfg.codim)
    print(f"{fam.label}")
    print(f"{'n':>3}  {'cob':>5}  {'bord':>5}  {'framed':>6}")
    for n in range(cfg.n_max + 1):
        print(f"{n:>3}  {cob_rank(fam, n):>5}  {bordism_rank(fam, n):>5}  {framed_bordism_rank(fam, n):>6}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kind", default=RankConfig.kind, choices=["prim", "morin"])
    ap.add_argument("--codim", type=int, default=RankConfig.codim)
    ap.add_argument("--n-max", type=int, default=RankConfig.n_max)
    a = ap.parse_args()
    main(RankConfig(a.kind, a.codim, a.n_max))
