import numpy as np
import pytest

from hodgewalks import corpus
from hodgewalks.chains import OperatorMatrix
from hodgewalks.montecarlo import oriented_marginal_difference, run_monte_carlo
from hodgewalks.walks import (
    down_propagation_matrix,
    down_walk_matrix,
    graph_type_down_walk,
    up_walk_matrix,
)


def test_deterministic_given_seed():
    P = graph_type_down_walk(corpus.load("sphere"), 0.5).matrix
    a = run_monte_carlo(P, 0, steps=20, seed=42, chains=5000)
    b = run_monte_carlo(P, 0, steps=20, seed=42, chains=5000)
    np.testing.assert_array_equal(a.empirical, b.empirical)
    c = run_monte_carlo(P, 0, steps=20, seed=43, chains=5000)
    assert (a.empirical != c.empirical).any()


def test_empirical_tracks_exact_marginals():
    P = graph_type_down_walk(corpus.load("torus"), 0.5).matrix
    res = run_monte_carlo(P, 3, steps=50, seed=0, chains=20_000)
    assert res.sigma_bound == 4.0 * np.sqrt(0.25 / 20_000)
    assert res.max_abs_deviation <= res.sigma_bound
    assert res.within_bound


def test_step_zero_is_the_start_indicator():
    P = up_walk_matrix(corpus.load("sphere"), 0.5)[0]
    res = run_monte_carlo(P, 2, steps=0, seed=1, chains=100)
    np.testing.assert_array_equal(res.exact[0], np.eye(12)[2])
    np.testing.assert_array_equal(res.empirical[0], res.exact[0])


def test_checkpoints_select_times():
    P = graph_type_down_walk(corpus.load("sphere"), 0.5).matrix
    res = run_monte_carlo(P, 0, steps=10, seed=0, chains=1000, checkpoints=(0, 5, 10))
    assert res.checkpoints == (0, 5, 10)
    assert res.empirical.shape == (3, 4)
    full = run_monte_carlo(P, 0, steps=10, seed=0, chains=1000)
    np.testing.assert_array_equal(res.empirical[-1], full.empirical[0])
    with pytest.raises(ValueError):
        run_monte_carlo(P, 0, steps=10, chains=10, checkpoints=(11,))


def test_input_validation():
    bad = OperatorMatrix(("a", "b"), ("a", "b"), np.array([[0.9, 0.2], [0.5, 0.5]]))
    with pytest.raises(ValueError):
        run_monte_carlo(bad, 0, steps=1)
    P = graph_type_down_walk(corpus.load("sphere"), 0.5).matrix
    with pytest.raises(ValueError):
        run_monte_carlo(P, 9, steps=1)


def test_death_mass_matches_exact_rate():
    # the path complex keeps killing oriented edges until only death remains
    K = corpus.load("path")
    P, space = down_walk_matrix(K, 1, 0.5)
    res = run_monte_carlo(P, 0, steps=30, seed=7, chains=20_000)
    death = space.labels.index("DEATH")
    assert res.exact[0][death] > 0.99
    assert abs(res.empirical[0][death] - res.exact[0][death]) <= res.sigma_bound


def test_sampled_marginal_difference_follows_propagation():
    K = corpus.load("mobius")
    p = 0.5
    P, space = down_walk_matrix(K, 1, p)
    B, _ = down_propagation_matrix(K, 1, p)
    m = K.n_simplices(1)
    start = space.labels.index("-0,1")
    t = 12
    res = run_monte_carlo(P, start, steps=t, seed=3, chains=50_000)
    sampled = oriented_marginal_difference(res.empirical[0], m)
    e0 = np.zeros(m)
    e0[K.index(K.simplices(1)[0])] = -1.0
    predicted = np.linalg.matrix_power(B.array, t) @ e0
    np.testing.assert_allclose(
        oriented_marginal_difference(res.exact[0], m), predicted, atol=1e-12
    )
    # each orientation marginal carries its own sampling error
    assert np.max(np.abs(sampled - predicted)) <= 2 * res.sigma_bound


def test_marginal_difference_shape_guard():
    with pytest.raises(ValueError):
        oriented_marginal_difference(np.zeros(6), 4)
    np.testing.assert_array_equal(
        oriented_marginal_difference(np.array([0.5, 0.1, 0.2, 0.1, 0.1]), 2),
        [0.3, 0.0],
    )
