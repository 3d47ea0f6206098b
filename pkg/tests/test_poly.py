import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gradedpi.groups import Group
from gradedpi.poly import (GradedPoly, MultilinearPoly, PolySubspace, PolySyntaxError, all_tuples,
                           anticommutator, canonical_tuples, commutator, emit, multilinearize, parse,
                           product_span, relabel_subspace, sorting_permutation, t_consequences)

Z2 = Group.parse("Z2")
Z3 = Group.parse("Z3")
one, g = Z2.elements()


def x(i, d=one):
    return GradedPoly.var(d.group, i, d)


def test_left_normed_commutator():
    a, b, c = x(1), x(2), x(3)
    assert parse("[x1:1,x2:1,x3:1]", Z2) == commutator(commutator(a, b), c)
    assert parse("ac(x1:1, x2:g)", Z2) == anticommutator(a, x(2, g))


def test_coefficients_and_parentheses():
    p = parse("2/3 x1:1 (x2:g - x3:1) - x1:1", Z2)
    assert p == (x(1) * (x(2, g) - x(3))).scale(Fraction(2, 3)) - x(1)
    assert parse("0", Z2).is_zero


def test_label_map():
    lm = {"t": [1]}
    p = parse("x1:t x2:t", Z2, lm)
    assert p == x(1, g) * x(2, g)
    assert emit(p, lm) == "x1:t x2:t"


@pytest.mark.parametrize("bad", ["x1", "x1:1 +", "[x1:1]", "ac(x1:1)", "x1:q", "(x1:1", "3/0 x1:1"])
def test_syntax_errors(bad):
    with pytest.raises((PolySyntaxError, ValueError)):
        parse(bad, Z2)


def test_syntax_error_position():
    with pytest.raises(PolySyntaxError) as e:
        parse("x1:1 + ]", Z2)
    assert e.value.pos == 7


leaves = st.builds(lambda i, d: GradedPoly.var(Z3, i, d), st.integers(1, 4), st.sampled_from(Z3.elements()))
polys = st.recursive(
    leaves,
    lambda inner: st.one_of(
        st.builds(lambda a, b: a + b, inner, inner),
        st.builds(lambda a, b: a * b, inner, inner),
        st.builds(commutator, inner, inner),
        st.builds(lambda a, c: a.scale(c), inner, st.fractions(-3, 3, max_denominator=4).filter(bool)),
    ),
    max_leaves=6,
)


@settings(max_examples=150)
@given(polys)
def test_emit_parse_round_trip(p):
    assert parse(emit(p), Z3) == p


def test_polarization_of_a_square():
    (m,) = multilinearize(x(1) * x(1))
    assert dict(m.coeffs) == {(0, 1): 1, (1, 0): 1}
    (m,) = multilinearize(x(1) * x(1) * x(2, g))
    assert dict(m.coeffs) == {(0, 1, 2): 1, (1, 0, 2): 1}


def test_multilinear_input_is_unchanged():
    f = parse("x1:1 x2:g - x2:g x1:1", Z2)
    (m,) = multilinearize(f)
    assert m.degrees == (one, g) and dict(m.coeffs) == {(0, 1): 1, (1, 0): -1}


@given(st.permutations(range(4)), st.lists(st.integers(-2, 2), min_size=24, max_size=24))
def test_relabel_inverse(perm, coeffs):
    degs = (one, g, g, one)
    m = MultilinearPoly.from_vector(degs, coeffs)
    inv = [0] * 4
    for i, j in enumerate(perm):
        inv[j] = i
    assert m.relabel(perm).relabel(inv) == m


def test_tuple_enumeration():
    for n in range(1, 5):
        assert len(all_tuples(Z3, n)) == 3 ** n
        assert sum(k for _, k in canonical_tuples(Z3, n)) == 3 ** n
    t = (g, one, g)
    s = sorting_permutation(t)
    assert tuple(sorted(t)) == tuple(t[i] for i in sorted(range(3), key=lambda i: s[i]))


def test_consequences_of_a_commutator():
    # [x1, x2] with both degrees 1 generates all of P_3 minus the symmetric part
    gen = parse("[x1:1,x2:1]", Z2)
    T = t_consequences([gen], (one, one, one), Z2)
    assert T.dim == 5
    T2 = t_consequences([gen], (one, one), Z2)
    assert T2.dim == 1


def test_product_span_formula():
    K1 = lambda t: t_consequences([parse("[x1:1,x2:1]", Z2)], t, Z2)  # noqa: E731
    K2 = lambda t: PolySubspace.full(t)  # noqa: E731
    P = product_span(K1, K2, (one, one, one))
    # f(x_S) x_k with f a commutator on a 2-subset, plus consequences of f of degree 3 times nothing
    f = parse("[x1:1,x2:1] x3:1", Z2)
    (m,) = multilinearize(f)
    assert P.contains(m)
    assert P.dim == 3


def test_relabel_subspace_preserves_dimension():
    U = t_consequences([parse("x1:1 x2:g", Z2)], (g, one, one), Z2)
    V = relabel_subspace(U, [2, 0, 1])
    assert V.dim == U.dim and V.degrees == (one, one, g)
    assert math.factorial(3) == len(V.space.basis[0])
