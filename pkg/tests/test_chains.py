import numpy as np
import pytest

from hodgewalks import corpus
from hodgewalks.chains import (
    Cochain,
    adjoint_coboundary_matrix,
    boundary_matrix,
    coboundary_matrix,
    inner_product,
)
from hodgewalks.complexes import Simplex, WeightFunction

CORPUS = list(corpus.names())


def test_boundary_matrix_hollow_triangle():
    K = corpus.load("hollow_triangle")
    B = boundary_matrix(K, 1)
    assert B.shape == (3, 3)
    assert B.array.dtype.kind == "i"
    # every edge column: one -1 at the tail, one +1 at the head
    assert (B.array.sum(axis=0) == 0).all()
    assert sorted(B.array[:, 0]) == [-1, 0, 1]
    np.testing.assert_array_equal(
        B.array, [[-1, -1, 0], [1, 0, -1], [0, 1, 1]]
    )


def test_boundary_matrix_dimension_range():
    K = corpus.load("filled_triangle")
    with pytest.raises(ValueError):
        boundary_matrix(K, 0)
    with pytest.raises(ValueError):
        boundary_matrix(K, 3)
    with pytest.raises(ValueError):
        coboundary_matrix(K, 2)


@pytest.mark.parametrize("name", CORPUS)
def test_boundary_of_boundary_is_integer_zero(name):
    K = corpus.load(name)
    for d in range(2, K.dim + 1):
        low = boundary_matrix(K, d - 1).array
        high = boundary_matrix(K, d).array
        prod = low @ high  # exact integer arithmetic
        assert prod.dtype.kind == "i"
        assert not prod.any()


@pytest.mark.parametrize("name", CORPUS)
def test_coboundary_squares_to_zero(name):
    K = corpus.load(name)
    for d in range(K.dim - 1):
        a = coboundary_matrix(K, d).array
        b = coboundary_matrix(K, d + 1).array
        assert not (b @ a).any()


def test_coboundary_is_boundary_transpose():
    K = corpus.load("sphere")
    B = boundary_matrix(K, 2)
    D = coboundary_matrix(K, 1)
    np.testing.assert_array_equal(D.array, B.array.T)
    assert D.rows == B.cols and D.cols == B.rows


def test_coboundary_of_vertex_indicator():
    K = corpus.load("hollow_triangle")
    f = Cochain.indicator(K, Simplex((1,)))
    df = coboundary_matrix(K, 0).array @ f.values
    # +1 on edges entering vertex 1, -1 on edges leaving it
    expected = {"0,1": 1.0, "0,2": 0.0, "1,2": -1.0}
    labels = [s.label() for s in K.simplices(1)]
    assert dict(zip(labels, df)) == expected


def test_adjoint_coboundary_frozen_entries():
    # reciprocal-degree weights on edges double the transpose
    K = corpus.load("sphere")
    w = WeightFunction.reciprocal_degree(K, 1)
    M = adjoint_coboundary_matrix(K, 1, w)
    B = boundary_matrix(K, 2).array
    np.testing.assert_allclose(M.array, 2.0 * B, atol=0)
    assert M.shape == (6, 4)


@pytest.mark.parametrize("name,d", [("sphere", 1), ("torus", 0), ("torus", 1)])
def test_adjoint_property_random_cochains(name, d):
    K = corpus.load(name)
    rng = np.random.default_rng(7)
    table = {
        s: float(rng.uniform(0.5, 2.0))
        for dd in range(K.dim + 1)
        for s in K.simplices(dd)
    }
    w = WeightFunction.explicit(K, table)
    f = Cochain(K, d, rng.standard_normal(K.n_simplices(d)))
    g = Cochain(K, d + 1, rng.standard_normal(K.n_simplices(d + 1)))
    df = Cochain(K, d + 1, coboundary_matrix(K, d).array @ f.values)
    ag = Cochain(K, d, adjoint_coboundary_matrix(K, d, w).array @ g.values)
    lhs = inner_product(df, g, w)
    rhs = inner_product(f, ag, w)
    assert abs(lhs - rhs) < 1e-12 * max(1.0, abs(lhs))


def test_inner_product_frozen_values():
    K = corpus.load("path")
    f = Cochain(K, 0, np.array([1.0, 2.0, 3.0]))
    g = Cochain(K, 0, np.array([2.0, 1.0, 0.0]))
    assert inner_product(f, g, WeightFunction.ones(K)) == 4.0
    assert inner_product(f, g, WeightFunction.normalized(K)) == 6.0


def test_inner_product_rejects_mismatched_cochains():
    K = corpus.load("path")
    f = Cochain(K, 0, np.zeros(3))
    g = Cochain(K, 1, np.zeros(2))
    with pytest.raises(ValueError):
        inner_product(f, g, WeightFunction.ones(K))


def test_cochain_sign_convention():
    K = corpus.load("hollow_triangle")
    f = Cochain.indicator(K, Simplex((0, 1)))
    assert f(Simplex((0, 1))) == 1.0
    assert f(Simplex((0, 1)), sign=-1) == -1.0
    assert f(Simplex((1, 2))) == 0.0
    with pytest.raises(ValueError):
        Cochain(K, 1, np.zeros(2))


def test_operator_matrices_are_read_only():
    K = corpus.load("hollow_triangle")
    B = boundary_matrix(K, 1)
    with pytest.raises(ValueError):
        B.array[0, 0] = 5
