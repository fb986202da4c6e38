"""Certify the cone-map obstruction for identity-cycle cones on C_n.

For each apex size, builds the identity cone with the given marks, prints
the size of the obstruction apex, how many maps were checked and their
windings, and optionally runs the bounded brute-force search as a
cross-check.

    python scripts/obstruction_sweep.py --sizes 3 4 5 6 --search-rows 4 --search-cols 10
"""

import argparse
import time
from collections import Counter
from dataclasses import dataclass, field

from ahomotopy import certify_no_cone_map, identity_cone, obstruction_cone, search_cone_maps


@dataclass
class SweepConfig:
    sizes: list = field(default_factory=lambda: [3, 4, 5, 6, 7])
    search_rows: int = 0
    search_cols: int = 0
    cap: int = 2_000_000


def default_marks(n):
    # spread the four marks over the walk, allowing coincidences for short cycles
    return tuple(sorted(min(n, round(i * n / 4)) for i in range(4)))


def run(cfg: SweepConfig):
    print(f"{'apex':>5} {'marks':>14} {'N':>3} {'maps':>7} {'windings':>16} {'search':>8} {'secs':>6}")
    for n in cfg.sizes:
        t0 = time.time()
        src = identity_cone(n, default_marks(n))
        report = certify_no_cone_map(src, cap=cfg.cap)
        windings = dict(sorted(Counter(w for _, _, w in report.entries).items()))
        searched = "-"
        if cfg.search_rows and cfg.search_cols:
            found = search_cone_maps(src, obstruction_cone(src), cfg.search_rows, cfg.search_cols,
                                     cap=cfg.cap)
            searched = str(len(found))
        status = "" if report.certified else "  NOT CERTIFIED"
        print(f"{'C%d' % n:>5} {str(src.marks):>14} {report.n:>3} {len(report.entries):>7} "
              f"{str(windings):>16} {searched:>8} {time.time() - t0:>6.1f}{status}")


def main():
    cfg = SweepConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=cfg.sizes)
    ap.add_argument("--search-rows", type=int, default=cfg.search_rows)
    ap.add_argument("--search-cols", type=int, default=cfg.search_cols)
    ap.add_argument("--cap", type=int, default=cfg.cap)
    run(SweepConfig(**vars(ap.parse_args())))


if __name__ == "__main__":
    main()
