"""Tabulate |Hom(F ⊗ G, H)| against |Hom(F, H^G)| over a family of small graphs.

    python scripts/adjunction_table.py --cap 2000000
"""

import argparse
import itertools
import time
from dataclasses import dataclass, field

from ahomotopy import (ResourceLimit, box_product, count_homomorphisms, cycle_graph,
                       exponential_graph, path_graph)


@dataclass
class TableConfig:
    paths: list = field(default_factory=lambda: [0, 1, 2, 3])
    cycles: list = field(default_factory=lambda: [3, 4, 5, 6])
    cap: int = 2_000_000


def family(cfg):
    out = {f"I{n}": path_graph(n) for n in cfg.paths}
    out.update({f"C{n}": cycle_graph(n) for n in cfg.cycles})
    return out


def _count(g, h, cap):
    try:
        return count_homomorphisms(g, h, cap)
    except ResourceLimit:
        return None


def run(cfg: TableConfig):
    graphs = family(cfg)
    t0 = time.time()
    exps = {}
    agree = over = 0
    print(f"{'F':>3} {'G':>3} {'H':>3} {'Hom(F⊗G,H)':>14} {'Hom(F,H^G)':>14}")
    for (a, f), (b, g), (c, h) in itertools.product(graphs.items(), repeat=3):
        if (b, c) not in exps:
            exps[b, c] = exponential_graph(g, h, cfg.cap)
        lhs = _count(box_product(f, g), h, cfg.cap)
        rhs = _count(f, exps[b, c], cfg.cap)
        if lhs is None and rhs is None:
            over += 1
            continue
        agree += lhs == rhs
        flag = "" if lhs == rhs else "  MISMATCH"
        print(f"{a:>3} {b:>3} {c:>3} {str(lhs):>14} {str(rhs):>14}{flag}")
    print(f"# {agree} equal, {over} over cap {cfg.cap}, {time.time() - t0:.1f}s")


def main():
    cfg = TableConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--paths", type=int, nargs="+", default=cfg.paths)
    ap.add_argument("--cycles", type=int, nargs="+", default=cfg.cycles)
    ap.add_argument("--cap", type=int, default=cfg.cap)
    run(TableConfig(**vars(ap.parse_args())))


if __name__ == "__main__":
    main()
