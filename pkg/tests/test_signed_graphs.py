import itertools

import numpy as np
import pytest

from hodgewalks import corpus
from hodgewalks.complexes import OrientedSimplex, Simplex
from hodgewalks.signed_graphs import (
    SignedGraph,
    Switching,
    down_signed_graph,
    is_antibalanced,
    is_balanced,
    signed_laplacian,
    up_signed_graph,
    verify_down_relation,
    verify_up_relation,
)


def _triangle(sign):
    verts = tuple(OrientedSimplex(Simplex((i,))) for i in range(3))
    return SignedGraph(verts, ((0, 1, sign), (0, 2, sign), (1, 2, sign)))


def _balanced_by_brute_force(G):
    """Ground truth: some switching makes every edge positive."""
    for subset in itertools.product([False, True], repeat=G.n):
        sw = Switching(frozenset(i for i in range(G.n) if subset[i]))
        if all(s == 1 for _, _, s in G.switched(sw).edges):
            return True
    return False


def test_signed_graph_validation():
    verts = tuple(OrientedSimplex(Simplex((i,))) for i in range(2))
    with pytest.raises(ValueError):
        SignedGraph(verts, ((0, 2, 1),))
    with pytest.raises(ValueError):
        SignedGraph(verts, ((0, 1, 2),))
    with pytest.raises(ValueError):
        SignedGraph(verts, ((0, 1, 1), (0, 1, -1)))


def test_degrees_and_adjacency():
    G = _triangle(-1)
    np.testing.assert_array_equal(G.degrees(), [2, 2, 2])
    A = G.adjacency()
    assert (A == A.T).all()
    assert A[0, 1] == -1 and A[0, 0] == 0


def test_all_negative_triangle_unbalanced_with_cycle():
    res = is_balanced(_triangle(-1))
    assert not res.balanced
    cyc = res.negative_cycle
    assert sorted(cyc) == [0, 1, 2]
    # the certificate cycle must carry an odd number of negative edges
    assert len(cyc) % 2 == 1


def test_all_negative_triangle_is_antibalanced():
    res = is_antibalanced(_triangle(-1))
    assert res.balanced
    assert res.switching == Switching(frozenset())


def test_signed_laplacian_frozen_negative_triangle():
    L = signed_laplacian(_triangle(-1)).array
    vals = np.linalg.eigvalsh(L)
    np.testing.assert_allclose(vals, [0.5, 0.5, 2.0], atol=1e-12)


def test_signed_laplacian_rejects_isolated_vertices():
    verts = tuple(OrientedSimplex(Simplex((i,))) for i in range(3))
    G = SignedGraph(verts, ((0, 1, 1),))
    with pytest.raises(ValueError):
        signed_laplacian(G)


def test_switching_certificate_clears_all_signs():
    G = down_signed_graph(corpus.load("sphere"), 2)
    res = is_balanced(G)
    assert res.balanced
    switched = G.switched(res.switching)
    assert all(s == 1 for _, _, s in switched.edges)


def test_unbalanced_certificate_on_mobius():
    G = down_signed_graph(corpus.load("mobius"), 2)
    res = is_balanced(G)
    assert not res.balanced
    cyc = res.negative_cycle
    sign_of = {(i, j): s for i, j, s in G.edges}
    prod = 1
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        prod *= sign_of[(min(a, b), max(a, b))]  # KeyError if not a real edge
    assert prod == -1


@pytest.mark.parametrize("trial", range(10))
def test_balance_matches_brute_force_on_random_graphs(trial):
    rng = np.random.default_rng(100 + trial)
    n = 6
    verts = tuple(OrientedSimplex(Simplex((i,))) for i in range(n))
    edges = tuple(
        (i, j, int(rng.choice([-1, 1])))
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < 0.5
    )
    G = SignedGraph(verts, edges)
    assert is_balanced(G).balanced == _balanced_by_brute_force(G)


def test_balance_matches_brute_force_on_corpus_graphs():
    for name, d in [("mobius", 2), ("hollow_triangle", 1), ("cycle", 1)]:
        G = down_signed_graph(corpus.load(name), d)
        assert is_balanced(G).balanced == _balanced_by_brute_force(G)


def test_down_signed_graph_hollow_frozen_edges():
    G = down_signed_graph(corpus.load("hollow_triangle"), 1)
    assert G.edges == ((0, 1, -1), (0, 2, 1), (1, 2, -1))
    assert is_balanced(G).balanced


def test_up_signed_graph_filled_frozen_edges():
    G = up_signed_graph(corpus.load("filled_triangle"), 0)
    assert G.edges == ((0, 1, 1), (0, 2, 1), (1, 2, 1))


def test_signed_graph_dimension_guards():
    hollow = corpus.load("hollow_triangle")
    with pytest.raises(ValueError):
        up_signed_graph(hollow, 1)
    with pytest.raises(ValueError):
        down_signed_graph(hollow, 0)


def test_cycle_parities_match_orientability():
    # pentagon: even negatives (balanced), odd positives (not antibalanced)
    G5 = down_signed_graph(corpus.load("cycle"), 1)
    assert is_balanced(G5).balanced
    assert not is_antibalanced(G5).balanced
    G4 = down_signed_graph(corpus.load("cycle4"), 1)
    assert is_balanced(G4).balanced
    assert is_antibalanced(G4).balanced


@pytest.mark.parametrize(
    "name,d",
    [("hollow_triangle", 0), ("filled_triangle", 1), ("sphere", 1), ("torus", 1), ("path", 0)],
)
def test_up_relation_residual(name, d):
    assert verify_up_relation(corpus.load(name), d) < 1e-12


def test_up_relation_requires_matching_purity():
    with pytest.raises(ValueError):
        verify_up_relation(corpus.load("sphere"), 0)


@pytest.mark.parametrize("name", ["sphere", "torus", "cycle", "hollow_triangle"])
def test_down_relation_residual(name):
    assert verify_down_relation(corpus.load(name)) < 1e-12


def test_down_relation_requires_degree_two_faces():
    with pytest.raises(ValueError):
        verify_down_relation(corpus.load("mobius"))
    with pytest.raises(ValueError):
        verify_down_relation(corpus.load("filled_triangle"))


@pytest.mark.parametrize("name,d,count", [("sphere", 1, 6), ("filled_triangle", 1, 3)])
def test_up_signed_graph_never_balanced(name, d, count):
    # every orientation choice leaves some negative cycle among the cofaces
    K = corpus.load(name)
    simps = K.simplices(d)
    assert len(simps) == count
    for signs in itertools.product([1, -1], repeat=count):
        G = up_signed_graph(K, d, dict(zip(simps, signs)))
        assert not is_balanced(G).balanced


@pytest.mark.parametrize("name,expect", [("sphere", True), ("mobius", False)])
def test_balance_verdict_invariant_under_orientation(name, expect):
    K = corpus.load(name)
    simps = K.simplices(2)
    rng = np.random.default_rng(11)
    for _ in range(20):
        signs = {s: int(rng.choice([-1, 1])) for s in simps}
        G = down_signed_graph(K, 2, signs)
        assert is_balanced(G).balanced is expect


def _symmetrized_eigenvalues(G):
    deg = G.degrees().astype(float)
    root = np.sqrt(deg)
    S = np.eye(G.n) - G.adjacency() / np.outer(root, root)
    return np.linalg.eigvalsh(S)


@pytest.mark.parametrize("name", sorted(corpus.names()))
def test_signed_spectra_live_in_zero_two(name):
    K = corpus.load(name)
    graphs = [down_signed_graph(K, d) for d in range(1, K.dim + 1)]
    graphs += [up_signed_graph(K, d) for d in range(K.dim)]
    for G in graphs:
        if not G.edges or (G.degrees() == 0).any():
            continue
        vals = _symmetrized_eigenvalues(G)
        assert vals[0] > -1e-10 and vals[-1] < 2 + 1e-10
        # similar matrices: the normalized Laplacian has the same spectrum
        direct = np.sort(np.linalg.eigvals(signed_laplacian(G).array).real)
        np.testing.assert_allclose(direct, vals, atol=1e-8)


def test_edge_list_text_format():
    txt = _triangle(-1).edge_list_text()
    assert txt.splitlines() == ["+0 +1 -1", "+0 +2 -1", "+1 +2 -1"]
