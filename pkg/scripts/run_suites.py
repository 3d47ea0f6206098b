"""Run every verification suite and print one summary line each.

    python3 scripts/run_suites.py [max_degree]

Failing checks are listed under their suite with the recorded detail.
"""

import sys
import time

from gradedpi.harness import SUITES, run_suite


def main(argv: list[str]) -> int:
    n = int(argv[0]) if argv else None
    status = 0
    for name in SUITES:
        t0 = time.time()
        res = run_suite(name, n)
        bad = [c for c in res.checks if not c.passed and not c.informational]
        print(f"{name:10s} {'pass' if res.passed else 'FAIL'}  {len(res.checks)} checks, "
              f"N={res.effective_n}  ({time.time() - t0:.1f}s)")
        for c in bad:
            print(f"    {c.claim}: {c.detail}")
        status |= bool(bad)
    return status


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
