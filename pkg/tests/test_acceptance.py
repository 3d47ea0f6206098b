"""Acceptance criteria, one test each.

Every test records a single PASS/FAIL line in ``RESULTS``; the lines are
printed at the end of the session (see conftest.py) and also immediately.
"""

import itertools
import time

import pytest

from gradedpi.algebra import center
from gradedpi.catalog import build, default_instances
from gradedpi.codim import codim_sequence, direct_identity_kernel, tuple_kernels
from gradedpi.envelope import EnvelopeContext
from gradedpi.exponent import admissible_max, exponent_report
from gradedpi.harness import (check_product_tideal, check_remark_equalities, lemma_suite,
                              section4_mutations, section4_suite, witness_suite)
from gradedpi.oracle import oracle_identity_kernel
from gradedpi.poly import canonical_tuples

RESULTS: dict[int, str] = {}


def record(k: int, ok: bool, text: str, started: float) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {k}: {text} ({time.time() - started:.1f}s)"
    RESULTS[k] = line
    print(line)


def test_1_exponent_values():
    t0 = time.time()
    expected = {"A1(g,0)@Z2": 4, "A1(g,1)@Z2": 4, "A2(3)@Z3": 3, "A6(g,1,g)@Z2": 3,
                "A7(g,1,1,g)@Z2": 3, "A7(g,g,g,g)@Z2": 3, "A2(2)@Z2": 2, "A2(5)@Z5": 5}
    got = {s: admissible_max(build(s).body)[0] for s in expected}
    ok = got == expected and time.time() - t0 < 5
    record(1, ok, "exp^G " + ", ".join(f"{s}={v}" for s, v in got.items()), t0)
    assert ok, got


def _a6_bruteforce() -> tuple[bool, bool, int]:
    """[x1,x2][x3,x4][x5,x6] on the trivially graded A6 body, over all 9^6 basis assignments.

    The 81 commutators of basis pairs are computed once; every product of
    three of them is checked against the center.  Returns (all central,
    some nonzero value touching the three diagonal components, #evaluations).
    """
    B = build("A6(1,1,1)@1").body
    d = B.dim
    comm = {}
    for a, b in itertools.product(range(d), repeat=2):
        ab, ba = B.mult[a][b], B.mult[b][a]
        v = {k: ab.get(k, 0) - ba.get(k, 0) for k in set(ab) | set(ba)}
        comm[(a, b)] = {k: x for k, x in v.items() if x}
    Z = center(B)
    diag = {B.index("e11+e44"), B.index("e22"), B.index("e33")}
    seen: dict[tuple, bool] = {}
    touching = False
    count = 0
    for p1, p2 in itertools.product(comm, repeat=2):
        left = B.mul_sparse(comm[p1], comm[p2])
        for p3 in comm:
            count += 1
            if not left:
                continue
            v = B.mul_sparse(left, comm[p3])
            if not v:
                continue
            key = tuple(sorted(v.items()))
            if key not in seen:
                seen[key] = Z.contains([v.get(k, 0) for k in range(d)])
            if not seen[key]:
                return False, touching, count
            if diag <= set(p1 + p2 + p3):
                touching = True
    return True, touching, count


def test_2_delta_certificates():
    t0 = time.time()
    parts = []
    ok = True
    for p in (2, 3, 5):
        rep = exponent_report(build(f"A2({p})@Z{p}").body, 1)
        good = rep.delta_exact == p and rep.delta_witness is not None and rep.delta_witness.n == 1
        ok &= good
        parts.append(f"FC{p}->{rep.delta_exact}")
    central, touching, count = _a6_bruteforce()
    exp_g = admissible_max(build("A6(1,1,1)@1").body)[0]
    a6 = central and touching and count == 9 ** 6 and exp_g == 3
    ok &= a6 and time.time() - t0 < 120
    parts.append(f"A6 trivial G: {count} evaluations central={central} touching={touching} -> delta 3")
    record(2, ok, "; ".join(parts), t0)
    assert ok


def test_3_codimension_tables():
    t0 = time.time()
    fc2 = codim_sequence(build("A2(2)@Z2").body, 5)
    ok_fc2 = [r.c for r in fc2] == [2 ** n for n in range(1, 6)] and all(r.cz == 0 for r in fc2)
    E = build("E_trivial").body
    e = codim_sequence(E, 6)
    ok_e = [r.c for r in e] == [2 ** (n - 1) for n in range(1, 7)]
    ok_oracle = True
    for n in range(1, 5):
        for t, _ in canonical_tuples(E.group, n):
            ok_oracle &= tuple_kernels(E, t).identities == oracle_identity_kernel(E, t)
    ok = ok_fc2 and ok_e and ok_oracle
    record(3, ok, f"FC2 c={[r.c for r in fc2]} cz={[r.cz for r in fc2]}; E c={[r.c for r in e]}; "
                  f"oracle agreement n<=4: {ok_oracle}", t0)
    assert ok


def test_4_generator_suites():
    t0 = time.time()
    n = 4
    res = [lemma_suite("3.2", n), lemma_suite("3.3", n)]
    ok = all(r.passed for r in res) and time.time() - t0 < 300
    checks = sum(len(r.checks) for r in res)
    record(4, ok, f"8 generator cases, {checks} checks, effective N={n}", t0)
    assert ok, [c.detail for r in res for c in r.checks if not c.passed]


@pytest.mark.xfail(strict=True, reason="the identities of the A9/A10 envelopes strictly contain the "
                                      "product of the factor T-ideals from degree 3 on; see README")
def test_5_product_and_variant_equalities():
    t0 = time.time()
    prod = check_product_tideal(3)
    remark = check_remark_equalities(3)
    ok = prod.passed and remark.passed
    failed = [c for c in prod.checks if not c.passed]
    text = f"product formula {len(prod.checks) - len(failed)}/{len(prod.checks)} checks, " \
           f"variant equalities {'pass' if remark.passed else 'fail'} (N=3)"
    if failed:
        cx = failed[0].detail
        text += f"; first gap {failed[0].params['algebra']} at {cx['tuple']}: " \
                f"dim Id={cx['left_dim']} vs dim product={cx['right_dim']}"
    record(5, ok, text, t0)
    assert remark.passed
    assert all(c.passed for c in prod.checks if "contained" in c.claim or "consequences" in c.claim)
    assert ok


def test_6_witnesses():
    t0 = time.time()
    res = witness_suite()
    checked = [c for c in res.checks if not c.informational]
    literal = [c for c in res.checks if c.informational]
    pair = [c for c in checked if c.params["holds_in"] == "A3@Z4" and c.params["fails_in"] == "A4@Z4"]
    ok = res.passed and len(pair) == 1
    record(6, ok, f"{len(checked)} witnesses match, {len(literal)} literal readings recorded", t0)
    assert ok


def test_7_section4_constructions():
    t0 = time.time()
    res = section4_suite()
    ranks = {c.params["case"]: c.detail["rank_mod_I"] for c in res.checks if "form a basis" in c.claim}
    muts = section4_mutations()
    controls = all(not all(r.passed for r in recs) for recs in muts.values())
    ok = res.passed and ranks.get("4.1") == 9 and ranks.get("4.2") == 13 and controls
    record(7, ok, f"ranks {ranks}; {len(muts)} mutation controls fail as expected: {controls}", t0)
    assert ok


def test_8_invariants():
    t0 = time.time()
    bad = []
    for spec in default_instances():
        B = build(spec).body
        ctx = EnvelopeContext(B)
        top = 3 if B.dim <= 9 else 2
        for n in range(1, top + 1):
            for t, _ in canonical_tuples(B.group, n):
                k = tuple_kernels(ctx, t)
                if k.cdelta < 0 or not k.identities.issubspace(k.central):
                    bad.append((spec, t, "kernels"))
                if not B.has_odd_part and k.identities != direct_identity_kernel(B, t):
                    bad.append((spec, t, "direct"))
        if B.wedderburn is not None and not spec.startswith(("M_", "N_", "P_")):
            rep = exponent_report(B, 2 if B.dim <= 9 else 1)
            if not rep.consistent:
                bad.append((spec, "delta"))
    ok = not bad
    record(8, ok, f"{len(default_instances())} instances, violations: {bad or 'none'}", t0)
    assert ok
