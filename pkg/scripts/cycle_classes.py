"""Count A-homotopy classes of maps C_m -> C_n and whether id_{C_n} is contractible.

    python scripts/cycle_classes.py --sizes 3 4 5 6 7
"""

import argparse
from dataclasses import dataclass, field

from ahomotopy import are_homotopic, constant_map, cycle_graph, identity_map
from ahomotopy.homotopy import homotopy_classes


@dataclass
class ClassesConfig:
    sizes: list = field(default_factory=lambda: [3, 4, 5, 6])
    cap: int = 200_000


def run(cfg: ClassesConfig):
    print("classes of maps C_m -> C_n (rows m, columns n)")
    print("m\\n " + " ".join(f"{n:>5}" for n in cfg.sizes))
    for m in cfg.sizes:
        row = [len(set(homotopy_classes(cycle_graph(m), cycle_graph(n), cfg.cap))) for n in cfg.sizes]
        print(f"{m:>3} " + " ".join(f"{k:>5}" for k in row))
    print()
    for n in cfg.sizes:
        c = cycle_graph(n)
        tr = are_homotopic(identity_map(c), constant_map(c, c, 0), cfg.cap)
        verdict = f"contractible in {len(tr)} steps" if tr else "not contractible"
        print(f"C{n}: identity {verdict}")


def main():
    cfg = ClassesConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=cfg.sizes)
    ap.add_argument("--cap", type=int, default=cfg.cap)
    run(ClassesConfig(**vars(ap.parse_args())))


if __name__ == "__main__":
    main()
