"""Print E1 and E-infinity tables for a sweep of families, with the engine vs closed-form verdict."""
import argparse
from dataclasses import dataclass, field

from kazcalc.cli import render_page
from kazcalc.kazarian import build_e1, e_infinity, make_family
from kazcalc.ranks import closed_form_series


@dataclass
class TableConfig:
    kinds: list = field(default_factory=lambda: ["prim", "morin"])
    codims: list = field(default_factory=lambda: [1, 2, 3, 4])
    truncation: int = 24
    annotate: bool = True


def main(cfg: TableConfig):
    for kind in cfg.kinds:
        for k in cfg.codims:
            fam = make_family(kind, k)
            print(f"== {fam.label}")
            for page in (build_e1(fam, cfg.truncation), e_infinity(fam, cfg.truncation)):
                print(render_page(page, "table", family=fam, annotate=cfg.annotate))
            same = e_infinity(fam, cfg.truncation).total() == closed_form_series(fam, cfg.truncation)
            print(f"engine == closed form: {same}\n")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kinds", nargs="+", default=TableConfig().kinds)
    ap.add_argument("--codims", nargs="+", type=int, default=TableConfig().codims)
    ap.add_argument("-N", "--truncation", type=int, default=TableConfig.truncation)
    ap.add_argument("--no-annotate", action="store_true")
    a = ap.parse_args()
    main(TableConfig(a.kinds, a.codims, a.truncation, not a.no_annotate))
