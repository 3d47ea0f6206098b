import pytest
from hypothesis import given, settings, strategies as st

from gradedpi.algebra import from_table
from gradedpi.catalog import build, default_instances
from gradedpi.codim import BudgetExceeded
from gradedpi.exponent import (MissingWedderburnData, admissible_max, central_witness_search,
                               exponent_report, is_admissible, verify_witness)
from gradedpi.linalg import Subspace


def permuted(B, perm):
    """The same algebra with basis element i renamed perm[i]."""
    d = B.dim
    inv = [0] * d
    for i, j in enumerate(perm):
        inv[j] = i
    table = {(perm[i], perm[j]): {perm[k]: c for k, c in B.mult[i][j].items()}
             for i in range(d) for j in range(d) if B.mult[i][j]}
    A = from_table(B.name, B.group, [B.labels[inv[j]] for j in range(d)],
                   [B.degrees[inv[j]] for j in range(d)], table, unit=False)
    move = lambda v: [v[inv[j]] for j in range(d)]  # noqa: E731
    W = B.wedderburn
    return A.with_wedderburn([[move(v) for v in C.basis] for C in W.components],
                             [move(v) for v in W.radical.basis])


@pytest.mark.parametrize("spec, expected", [
    ("A1(g,0)@Z2", 4), ("A1(g,1)@Z2", 4), ("A2(2)@Z2", 2), ("A2(3)@Z3", 3), ("A2(5)@Z5", 5),
    ("A6(g,1,g)@Z2", 3), ("A7(g,1,1,g)@Z2", 3), ("A7(g,g,g,g)@Z2", 3), ("E_trivial", 2),
])
def test_exp_values(spec, expected):
    value, cert = admissible_max(build(spec).body)
    assert value == expected
    B = build(spec).body
    assert is_admissible(B, cert.components).dim > 0


WEDDERBURN = [s for s in default_instances()
              if build(s).body.wedderburn is not None and not s.startswith(("M_", "N_", "P_"))]


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(WEDDERBURN), st.randoms(use_true_random=False))
def test_exp_ignores_basis_order(spec, rnd):
    B = build(spec).body
    perm = list(range(B.dim))
    rnd.shuffle(perm)
    assert admissible_max(permuted(B, perm))[0] == admissible_max(B)[0]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_commutative_delta_at_degree_one(p):
    rep = exponent_report(build(f"A2({p})@Z{p}").body, 1)
    assert rep.delta_exact == p and rep.delta_witness.n == 1


@pytest.mark.parametrize("spec, n, mode", [
    ("A1(g,0)@Z2", 2, "full"), ("A3@Z4", 1, "full"), ("A8(g,1)@Z2", 4, "full"),
    ("A11(g,1)@Z2", 6, "template"), ("D(1,g,h)@Z2xZ2", 2, "full"),
])
def test_delta_bound_is_consistent_and_certified(spec, n, mode):
    B = build(spec).body
    rep = exponent_report(B, n, mode=mode)
    assert rep.consistent
    if rep.delta_witness is not None:
        assert verify_witness(B, rep.delta_witness)


def test_a6_template_witness():
    B = build("A6(g,1,g)@Z2").body
    rep = exponent_report(B, 6, mode="template")
    assert rep.exp_G == 3 and rep.delta_exact == 3
    assert verify_witness(B, rep.delta_witness)


def test_search_budgets():
    B = build("A6(g,1,g)@Z2").body
    with pytest.raises(BudgetExceeded):
        central_witness_search(B, [0, 1, 2], 5, "full")
    with pytest.raises(BudgetExceeded):
        central_witness_search(B, [0, 1, 2], 9, "template")


def test_missing_wedderburn_data():
    B = build("A2(2)@Z2").body
    B.wedderburn = None
    with pytest.raises(MissingWedderburnData):
        admissible_max(B)


def test_chain_order_matters():
    B = build("A6(g,1,g)@Z2").body
    comps = B.wedderburn.components
    owner = lambda lab: next(i for i, C in enumerate(comps)  # noqa: E731
                             if C.contains(B.basis_vector(B.index(lab))))
    assert is_admissible(B, (owner("e22"), owner("e33"))).dim > 0
    # upper triangular: nothing leads from the third diagonal block back to the second
    assert is_admissible(B, (owner("e33"), owner("e22"))).dim == 0
    assert isinstance(is_admissible(B, (owner("e22"),)), Subspace)
