from fractions import Fraction

from hypothesis import given, settings, strategies as st

from gradedpi.linalg import KernelTracker, Subspace, rank, solve

scalars = st.integers(-3, 3) | st.fractions(min_value=-2, max_value=2, max_denominator=3)


def matrices(rows, cols):
    return st.lists(st.lists(scalars, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@settings(max_examples=60)
@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_kernel_tracker_rank_nullity(r, c, data):
    M = data.draw(matrices(r, c))
    k = KernelTracker(r)
    for j in range(c):
        k.add_column([M[i][j] for i in range(r)])
    K = k.subspace()
    assert K.dim + rank(M, c) == r
    for v in K.basis:
        for j in range(c):
            assert sum(v[i] * M[i][j] for i in range(r)) == 0


@settings(max_examples=60)
@given(st.integers(1, 5), st.data())
def test_sum_intersection_dimension(n, data):
    U = Subspace.span(data.draw(matrices(data.draw(st.integers(0, 4)), n)), n)
    V = Subspace.span(data.draw(matrices(data.draw(st.integers(0, 4)), n)), n)
    assert (U + V).dim + U.intersection(V).dim == U.dim + V.dim
    assert U.issubspace(U + V) and U.intersection(V).issubspace(V)


def test_sparse_and_dense_columns_agree():
    a, b = KernelTracker(3), KernelTracker(3)
    a.add_column([1, Fraction(1, 2), 0])
    b.add_column({0: 1, 1: Fraction(1, 2)})
    assert a.subspace() == b.subspace()


def test_solve():
    assert solve([[1, 0, 1], [0, 1, 1]], [2, 3, 5]) == [2, 3]
    assert solve([[1, 0, 1]], [0, 1, 0]) is None
