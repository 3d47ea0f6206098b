import pytest

from gradedpi.groups import Group
from gradedpi.poly import multilinearize, parse, t_consequences

from gradedpi import harness
from gradedpi.harness import (check_generators, check_product_tideal, check_remark_equalities,
                              generator_cases, section4_mutations, section4_suite, witness_suite)

CASES = sorted(generator_cases())
Z2 = Group.parse("Z2")


@pytest.mark.parametrize("case", CASES)
def test_generator_sets(case):
    res = check_generators(case, 3)
    assert res.passed, [c.detail for c in res.checks if not c.passed]


@pytest.mark.parametrize("case", CASES)
def test_dropping_a_generator_is_detected(case):
    # over Z2 every generator is needed; its absence shows up by its own degree
    gens = generator_cases("Z2")[case].generators
    for k, gen in enumerate(gens):
        n = max(3, len(parse(gen, Z2).terms[0][0]))
        res = check_generators(case, n, drop=k, group="Z2")
        assert not res.passed, (case, gen)
        assert res.checks[-1].detail["polynomial"]


def test_square_generator_is_redundant_over_z3():
    # x^{g^2} -> x^g y^g is a graded substitution, so x^g y^g adds nothing
    G = Group.parse("Z3")
    one, g, g2 = G.elements()
    T = t_consequences([parse("x1:g2", G)], (g, g), G)
    assert T.contains(multilinearize(parse("x1:g x2:g", G))[0])
    assert check_generators("3.2(1)", 3, drop=1).passed


def test_product_routes_and_inclusion():
    res = check_product_tideal(3)
    for c in res.checks:
        if "contained" in c.claim or "consequences of the product generators" in c.claim:
            assert c.passed, c.claim


def test_product_equality_through_degree_two():
    assert check_product_tideal(2).passed


def test_product_equality_control():
    res = check_product_tideal(2, substitute="A6(g,1,g)@{group}")
    assert not res.passed


def test_remark_equalities():
    assert check_remark_equalities(3).passed
    assert not check_remark_equalities(3, control=True).passed


def test_section4_constructions():
    res = section4_suite()
    assert res.passed, [c.claim for c in res.checks if not c.passed]


@pytest.mark.parametrize("name, records", list(section4_mutations().items()))
def test_section4_mutations_fail(name, records):
    assert not all(r.passed for r in records), name


def test_witness_table():
    res = witness_suite()
    assert res.passed
    literal = [c for c in res.checks if c.informational]
    assert literal and all(c.params["kind"] == "literal" for c in literal)


def test_counterexample_reproduces():
    # the polynomial recorded for a dropped generator is an identity the
    # remaining generators miss
    from gradedpi.codim import is_identity
    res = check_generators("3.2(1)", 3, drop=0)
    cx = res.checks[-1].detail
    assert cx["only_in"] == "right"
    B = harness._body(generator_cases()["3.2(1)"].algebra)
    assert is_identity(cx["polynomial"], B)


def test_unknown_suite():
    with pytest.raises(KeyError):
        harness.run_suite("lemma9.9")
