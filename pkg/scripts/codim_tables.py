"""Print graded codimension tables for a few catalog algebras.

    python3 scripts/codim_tables.py [N] [spec ...]
"""

import sys
import time

from gradedpi.catalog import build
from gradedpi.codim import codim_sequence

DEFAULT = ["A2(2)@Z2", "A2(3)@Z3", "E_trivial", "A1(g,1)@Z2", "A6(g,1,g)@Z2", "D(1,g,h)@Z2xZ2"]


def main(argv: list[str]) -> None:
    n = int(argv[0]) if argv else 4
    specs = argv[1:] or DEFAULT
    for spec in specs:
        t0 = time.time()
        reps = codim_sequence(build(spec).body, n)
        print(f"{spec:18s} c={[r.c for r in reps]} cz={[r.cz for r in reps]} "
              f"cdelta={[r.cdelta for r in reps]}  ({time.time() - t0:.1f}s)")


if __name__ == "__main__":
    main(sys.argv[1:])
