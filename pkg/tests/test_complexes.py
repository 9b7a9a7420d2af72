import numpy as np
import pytest

from hodgewalks import corpus
from hodgewalks.complexes import (
    OrientedSimplex,
    Simplex,
    WeightFunction,
    boundary_sign,
    build_from_facets,
    weight_by_kind,
)


def test_simplex_requires_strictly_increasing_vertices():
    with pytest.raises(ValueError):
        Simplex((2, 1))
    with pytest.raises(ValueError):
        Simplex((0, 0))
    with pytest.raises(ValueError):
        Simplex(())
    with pytest.raises(ValueError):
        Simplex((-1, 2))


def test_simplex_faces_drop_one_position():
    faces = list(Simplex((0, 1, 2)).faces())
    assert faces == [
        (0, Simplex((1, 2))),
        (1, Simplex((0, 2))),
        (2, Simplex((0, 1))),
    ]


def test_oriented_simplex_signs_and_labels():
    e = OrientedSimplex(Simplex((0, 1)), -1)
    assert e.label() == "-0,1"
    assert (-e).sign == 1
    with pytest.raises(ValueError):
        OrientedSimplex(Simplex((0,)), -1)  # vertices carry a single orientation
    with pytest.raises(ValueError):
        OrientedSimplex(Simplex((0, 1)), 0)


def test_boundary_sign_alternates():
    tau = OrientedSimplex(Simplex((0, 1, 2)))
    assert boundary_sign(OrientedSimplex(Simplex((1, 2))), tau) == 1
    assert boundary_sign(OrientedSimplex(Simplex((0, 2))), tau) == -1
    assert boundary_sign(OrientedSimplex(Simplex((0, 1))), tau) == 1
    assert boundary_sign(OrientedSimplex(Simplex((0, 1)), -1), tau) == -1
    with pytest.raises(ValueError):
        boundary_sign(OrientedSimplex(Simplex((3, 4))), tau)
    with pytest.raises(ValueError):
        boundary_sign(OrientedSimplex(Simplex((0,))), tau)


def test_build_from_facets_closes_under_inclusion():
    K = build_from_facets([(0, 1, 2)])
    assert [K.n_simplices(d) for d in range(3)] == [3, 3, 1]
    assert Simplex((0, 2)) in K
    assert Simplex((1,)) in K
    assert Simplex((0, 3)) not in K


def test_build_from_facets_rejects_bad_input():
    with pytest.raises(ValueError):
        build_from_facets([])
    with pytest.raises(ValueError):
        build_from_facets([(0, 0, 1)])
    with pytest.raises(ValueError):
        build_from_facets([(-1, 0)])


def test_cofaces_and_degree():
    hollow = corpus.load("hollow_triangle")
    filled = corpus.load("filled_triangle")
    # no triangles above the hollow edges
    assert hollow.cofaces(Simplex((0, 1))) == ()
    assert hollow.degree(Simplex((0, 1))) == 0
    assert hollow.degree(Simplex((0,))) == 2
    assert filled.cofaces(Simplex((0, 1))) == (Simplex((0, 1, 2)),)
    # weighted degree sums coface weights
    w = WeightFunction.normalized(filled)
    assert filled.degree(Simplex((0,)), w) == 2.0


def test_up_and_down_adjacency():
    hollow = corpus.load("hollow_triangle")
    filled = corpus.load("filled_triangle")
    assert hollow.up_adjacent(Simplex((0, 1))) == ()
    down = dict(hollow.down_adjacent(Simplex((0, 1))))
    assert down == {Simplex((0, 2)): Simplex((0,)), Simplex((1, 2)): Simplex((1,))}
    up = dict(filled.up_adjacent(Simplex((0, 1))))
    assert up == {Simplex((0, 2)): Simplex((0, 1, 2)), Simplex((1, 2)): Simplex((0, 1, 2))}
    with pytest.raises(ValueError):
        hollow.down_adjacent(Simplex((0,)))


def test_facets_and_purity():
    two = corpus.load("two_triangles")
    assert two.is_pure()
    assert {f.vertices for f in two.facets()} == {(0, 1, 2), (3, 4, 5)}
    mixed = build_from_facets([(0, 1, 2), (3, 4)])
    assert not mixed.is_pure()
    assert Simplex((3, 4)) in mixed.facets()


def test_connected_components():
    hollow = corpus.load("hollow_triangle")
    comps = hollow.connected_components(1, "down")
    assert len(comps) == 1 and len(comps[0]) == 3
    two = corpus.load("two_triangles")
    assert len(two.connected_components(0, "up")) == 2
    assert len(two.connected_components(2, "down")) == 2
    with pytest.raises(ValueError):
        hollow.connected_components(0, "down")
    with pytest.raises(ValueError):
        hollow.connected_components(1, "sideways")


def test_index_lookup_errors():
    K = corpus.load("filled_triangle")
    assert K.index(Simplex((0, 1, 2))) == 0
    with pytest.raises(ValueError):
        K.index(Simplex((5, 6)))
    with pytest.raises(ValueError):
        K.cofaces(Simplex((5, 6)))


def test_normalized_weights_on_sphere():
    # facets get 1, then each level sums the weights one above
    K = corpus.load("sphere")
    w = WeightFunction.normalized(K)
    assert set(w.diagonal(2)) == {1.0}
    assert set(w.diagonal(1)) == {2.0}
    assert set(w.diagonal(0)) == {6.0}


def test_normalized_weights_on_path():
    K = corpus.load("path")
    w = WeightFunction.normalized(K)
    np.testing.assert_array_equal(w.diagonal(1), [1.0, 1.0])
    np.testing.assert_array_equal(w.diagonal(0), [1.0, 2.0, 1.0])


def test_reciprocal_degree_weights():
    K = corpus.load("sphere")
    w = WeightFunction.reciprocal_degree(K, 1)
    assert set(w.diagonal(1)) == {0.5}
    assert set(w.diagonal(0)) == {1.0}
    assert set(w.diagonal(2)) == {1.0}


def test_weights_must_be_positive():
    K = corpus.load("hollow_triangle")
    table = {s: 1.0 for d in range(2) for s in K.simplices(d)}
    table[Simplex((0, 1))] = 0.0
    with pytest.raises(ValueError):
        WeightFunction.explicit(K, table)
    del table[Simplex((0, 1))]
    with pytest.raises(ValueError):
        WeightFunction.explicit(K, table)


def test_weight_by_kind_spellings():
    K = corpus.load("sphere")
    assert weight_by_kind(K, "one").kind == "one"
    assert weight_by_kind(K, "normalized").kind == "normalized"
    assert weight_by_kind(K, "recip-deg", d=1)(Simplex((0, 1))) == 0.5
    with pytest.raises(ValueError):
        weight_by_kind(K, "recip-deg")
    with pytest.raises(ValueError):
        weight_by_kind(K, "uniformish")


def test_corpus_names_and_loading():
    assert len(corpus.CORPUS_NAMES) == 9
    assert set(corpus.EXTRA_NAMES) == {"annulus", "cycle4", "two_fans"}
    for name in corpus.names():
        K = corpus.load(name)
        assert K.n_simplices(0) > 0
    with pytest.raises(KeyError):
        corpus.facets_of("dodecahedron")
