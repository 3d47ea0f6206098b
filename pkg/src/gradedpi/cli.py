"""Batch command line: ``gpi codim|exponent|classify|verify|catalog``.

Exit status: 0 success, 1 a check failed, 2 usage or input error,
3 refused because the request exceeds the budget.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import harness
from .algebra import GradedAlgebra
from .catalog import CatalogError, build, catalog_listing
from .codim import DEFAULT_BUDGET, BudgetExceeded, classify, codim_sequence, identity_kernel
from .exponent import MissingWedderburnData, exponent_report
from .groups import element_label
from .io import AlgebraFileError, load
from .oracle import oracle_identity_kernel
from .poly import PolySyntaxError, canonical_tuples

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class JobConfig:
    command: str
    algebra: str | None = None
    labels: dict[str, list[int]] = field(default_factory=dict)
    n: int = 3
    max_degree: int | None = None
    budget: int = DEFAULT_BUDGET
    out: str = "json"
    jobs: int = 1
    seed: int = 0
    crosscheck: int = 0
    mode: str = "full"
    delta: bool = False
    suite: str | None = None
    poly: str | None = None
    report: str | None = None

    def __post_init__(self):
        if self.n < 1 or self.budget < 1 or self.jobs < 1:
            raise UsageError("--n, --budget and --jobs must be positive")
        if self.max_degree is not None and self.max_degree < 1:
            raise UsageError("--max-degree must be positive")
        residues = [tuple(v) for v in self.labels.values()]
        if len(set(residues)) != len(residues):
            raise UsageError("the label map must be injective")


def load_labels(path: str | None) -> dict[str, list[int]]:
    if not path:
        return {}
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot read label map {path}: {e}") from e
    if not isinstance(data, dict) or not all(isinstance(v, list) for v in data.values()):
        raise UsageError('label map must be a JSON object like {"g": [1]}')
    return {str(k): [int(x) for x in v] for k, v in data.items()}


def load_algebra(source: str | None, labels=None) -> GradedAlgebra:
    if not source:
        raise UsageError("--algebra is required (a JSON file or catalog:<spec>)")
    if source.startswith("catalog:") or not Path(source).exists():
        if not source.startswith("catalog:") and source.endswith(".json"):
            raise UsageError(f"algebra file {source} not found")
        try:
            return build(source, labels or None).body
        except (CatalogError, ValueError) as e:
            raise UsageError(f"{e} (see `gpi catalog list`)") from e
    try:
        return load(source)
    except (AlgebraFileError, OSError) as e:
        raise UsageError(f"malformed algebra file {source}: {e}") from e


# ---------------------------------------------------------------------------
# commands


def _codim(cfg: JobConfig) -> tuple[int, dict | list, list[dict] | None]:
    B = load_algebra(cfg.algebra, cfg.labels)
    reports = codim_sequence(B, cfg.n, budget=cfg.budget, jobs=cfg.jobs)
    payload: list[dict] = []
    rows: list[dict] = []
    for rep in reports:
        tuples = [{"tuple": r.label, "c": r.c, "cz": r.cz, "cdelta": r.cdelta} for r in rep.rows]
        payload.append({"n": rep.n, "tuples": tuples,
                        "totals": {"c": rep.c, "cz": rep.cz, "cdelta": rep.cdelta}})
        rows.extend({"n": rep.n, **t} for t in tuples)
    status = EXIT_OK
    if cfg.crosscheck:
        # seeded spot check of sorted tuples against the generic-element oracle
        rng = random.Random(cfg.seed)
        pool = [t for n in range(1, min(cfg.n, 4) + 1) for t, _ in canonical_tuples(B.group, n)]
        picks = sorted(rng.sample(range(len(pool)), min(cfg.crosscheck, len(pool))))
        checks = []
        for i in picks:
            t = pool[i]
            a, b = identity_kernel(B, t), oracle_identity_kernel(B, t)
            label = "(" + ",".join(element_label(g) for g in t) + ")"
            checks.append({"tuple": label, "agree": a.space == b.space, "dim": a.dim, "oracle_dim": b.dim})
        if not all(c["agree"] for c in checks):
            status = EXIT_FAIL
        return status, {"algebra": B.name, "seed": cfg.seed, "reports": payload, "oracle": checks}, rows
    return status, payload, rows


def _exponent(cfg: JobConfig):
    B = load_algebra(cfg.algebra, cfg.labels)
    n_max = cfg.max_degree or 4
    try:
        rep = exponent_report(B, n_max, delta=cfg.delta, mode=cfg.mode)
    except MissingWedderburnData as e:
        raise UsageError(str(e)) from e
    return (EXIT_OK if rep.consistent else EXIT_FAIL), rep.as_dict(B), None


def _classify(cfg: JobConfig):
    if not cfg.poly:
        raise UsageError("classify needs --poly")
    B = load_algebra(cfg.algebra, cfg.labels)
    try:
        v = classify(cfg.poly, B, cfg.labels or None)
    except (PolySyntaxError, ValueError) as e:
        raise UsageError(f"cannot use polynomial: {e}") from e
    return EXIT_OK, {"algebra": B.name, "poly": cfg.poly, "verdict": v.kind,
                     "evaluation": v.counterexample}, None


def _verify(cfg: JobConfig):
    if cfg.suite not in harness.SUITES:
        raise UsageError(f"--suite must be one of {', '.join(harness.SUITES)}")
    res = harness.run_suite(cfg.suite, cfg.max_degree)
    rows = [{"claim": c.claim, "passed": c.passed, "degree_bound": c.degree_bound,
             "informational": c.informational} for c in res.checks]
    return (EXIT_OK if res.passed else EXIT_FAIL), res.as_dict(), rows


def _catalog(cfg: JobConfig):
    rows = catalog_listing()
    return EXIT_OK, rows, rows


COMMANDS = {"codim": _codim, "exponent": _exponent, "classify": _classify, "verify": _verify,
            "catalog": _catalog}


# ---------------------------------------------------------------------------
# reports


def emit_report(payload, rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=1, sort_keys=True, default=str) + "\n"
    if rows is None:
        raise UsageError("this command has no tabular form; use --out json")
    buf = io.StringIO()
    fields = list(rows[0]) if rows else ["n", "tuple", "c", "cz", "cdelta"]
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gpi", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, *, algebra=True):
        if algebra:
            sp.add_argument("--algebra", help="JSON algebra file or catalog:<id>(<params>)@<group>")
            sp.add_argument("--labels", help="JSON label map, e.g. {\"g\": [1]}")
        sp.add_argument("--out", choices=("json", "csv"), default="json")
        sp.add_argument("--report", help="write the report here instead of stdout")
        sp.add_argument("--jobs", type=int, default=1)
        sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("codim", help="graded codimension tables")
    common(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="largest n accepted")
    sp.add_argument("--crosscheck", type=int, default=0,
                    help="number of seeded random tuples (n<=4) to recheck with the oracle")

    sp = sub.add_parser("exponent", help="exp^G and certified exp^{G,delta} bounds")
    common(sp)
    sp.add_argument("--delta", action="store_true")
    sp.add_argument("--mode", choices=("full", "template"), default="full")
    sp.add_argument("--max-degree", type=int)

    sp = sub.add_parser("classify", help="identity / proper central / not central")
    common(sp)
    sp.add_argument("--poly", required=True)

    sp = sub.add_parser("verify", help="run a verification suite")
    common(sp, algebra=False)
    sp.add_argument("--suite", required=True)
    sp.add_argument("--max-degree", type=int)

    sp = sub.add_parser("catalog", help="list catalog algebras")
    common(sp, algebra=False)
    sp.add_argument("action", choices=("list",))
    return p


def config_from_args(ns: argparse.Namespace) -> JobConfig:
    return JobConfig(
        command=ns.command, algebra=getattr(ns, "algebra", None),
        labels=load_labels(getattr(ns, "labels", None)), n=getattr(ns, "n", 3),
        max_degree=getattr(ns, "max_degree", None), budget=getattr(ns, "budget", DEFAULT_BUDGET),
        out=ns.out, jobs=ns.jobs, seed=ns.seed, crosscheck=getattr(ns, "crosscheck", 0),
        mode=getattr(ns, "mode", "full"), delta=getattr(ns, "delta", False),
        suite=getattr(ns, "suite", None), poly=getattr(ns, "poly", None), report=ns.report)


def run(argv: list[str] | None = None) -> int:
    try:
        ns = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        cfg = config_from_args(ns)
        status, payload, rows = COMMANDS[cfg.command](cfg)
        text = emit_report(payload, rows, cfg.out)
    except UsageError as e:
        print(f"gpi: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as e:
        print(f"gpi: refused: {e}", file=sys.stderr)
        return EXIT_BUDGET
    if cfg.report:
        Path(cfg.report).write_text(text)
    else:
        sys.stdout.write(text)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
