import itertools

import pytest
from hypothesis import given, strategies as st

from gradedpi.groups import (ExtendedDegree, Group, element_label, parse_label, sign_cocycle,
                             subgroup_generated, trivial_cocycle, validate_cocycle)

orders = st.lists(st.integers(1, 4), min_size=1, max_size=3)


def test_cyclic_orders():
    Z4 = Group.parse("Z4")
    assert Z4.element(1).order() == 4
    assert Z4.element(2).order() == 2
    assert Z4.identity.order() == 1


def test_parse_forms():
    assert Group.parse("Z2xZ2").orders == (2, 2)
    assert Group.parse("Z4×Z2").orders == (4, 2)
    assert Group.parse("1").order == 1
    with pytest.raises(ValueError):
        Group.parse("S3")


def test_labels_round_trip():
    G = Group.parse("Z4xZ2")
    for g in G.elements():
        assert parse_label(G, element_label(g)) == g
    assert parse_label(G, "t", {"t": (2, 1)}) == G.element((2, 1))


@given(orders, st.data())
def test_subgroup_closure_divides_order(ords, data):
    G = Group(tuple(ords))
    els = G.elements()
    gens = data.draw(st.lists(st.sampled_from(els), min_size=1, max_size=3))
    H = subgroup_generated(gens)
    assert G.order % len(H) == 0
    hs = set(H)
    assert all(a * b in hs for a in H for b in H)
    assert subgroup_generated(H) == H


@given(orders)
def test_extended_degree_group_laws(ords):
    G = Group(tuple(ords))
    ext = [ExtendedDegree(g, p) for g in G.elements() for p in (0, 1)]
    for a, b in itertools.product(ext[:6], repeat=2):
        assert (a * b) * b.inverse() == a
        assert a * b == b * a


def test_cocycles_validate():
    G = Group.parse("Z2xZ2")
    g, h = G.generators()
    assert validate_cocycle(sign_cocycle(g, h)).ok
    assert validate_cocycle(trivial_cocycle(G.elements())).ok
