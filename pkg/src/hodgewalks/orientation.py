"""Orientability and disorientability of a complex at its top dimension.

Both notions reduce to balance questions on the down signed graph of the top
simplexes: a compatible orientation induces opposite orientations on every
shared face, a disorienting one induces equal orientations. Returned
assignments are re-verified by direct pairwise checks, independent of the
signed-graph route.
"""
from __future__ import annotations

from dataclasses import dataclass

from .chains import boundary_matrix
from .complexes import Simplex, SimplicialComplex, build_from_facets
from .signed_graphs import down_signed_graph, is_antibalanced, is_balanced

__all__ = [
    "OrientationAssignment",
    "OrientabilityResult",
    "is_orientable",
    "is_disorientable",
    "assignment_induces",
    "free_faces",
    "extend_closing_boundary",
]


@dataclass(frozen=True)
class OrientationAssignment:
    """Choice of orientation sign for every top-dimension simplex."""

    signs: dict[Simplex, int]
    kind: str  # "compatible" or "disorienting"


@dataclass
class OrientabilityResult:
    verdict: bool
    assignment: OrientationAssignment | None
    certificate: list[Simplex] | None  # cycle of top simplexes witnessing failure


def assignment_induces(K: SimplicialComplex, signs: dict[Simplex, int], same: bool) -> bool:
    """Directly check every adjacent top-simplex pair against an assignment.

    With ``same=False`` the pair must induce opposite orientations on the
    shared face (compatible); with ``same=True``, equal ones (disorienting).
    """
    N = K.dim
    B = boundary_matrix(K, N).array
    for sigma in K.simplices(N):
        i = K.index(sigma)
        for other, rho in K.down_adjacent(sigma):
            j, r = K.index(other), K.index(rho)
            induced_same = signs[sigma] * B[r, i] == signs[other] * B[r, j]
            if induced_same != same:
                return False
    return True


def _balance_to_result(K: SimplicialComplex, res, kind: str, same: bool) -> OrientabilityResult:
    simps = K.simplices(K.dim)
    if not res.balanced:
        cycle = [simps[i] for i in res.negative_cycle]
        return OrientabilityResult(False, None, cycle)
    signs = {
        s: (-1 if i in res.switching.flipped else 1) for i, s in enumerate(simps)
    }
    assert assignment_induces(K, signs, same=same), "assignment failed the pairwise check"
    return OrientabilityResult(True, OrientationAssignment(signs, kind), None)


def is_orientable(K: SimplicialComplex) -> OrientabilityResult:
    """Can the top simplexes be oriented to induce opposite orientations on
    every shared face? Balance of the down signed graph decides, per component.
    """
    if K.dim < 1:
        raise ValueError("orientability needs top dimension >= 1")
    G = down_signed_graph(K, K.dim)
    return _balance_to_result(K, is_balanced(G), "compatible", same=False)


def is_disorientable(K: SimplicialComplex) -> OrientabilityResult:
    """Can the top simplexes be oriented to induce the same orientation on
    every shared face? Antibalance of the down signed graph decides.
    """
    if K.dim < 1:
        raise ValueError("disorientability needs top dimension >= 1")
    G = down_signed_graph(K, K.dim)
    return _balance_to_result(K, is_antibalanced(G), "disorienting", same=True)


def free_faces(K: SimplicialComplex) -> tuple[Simplex, ...]:
    """The (N-1)-simplexes with exactly one top-dimension coface."""
    if K.dim < 1:
        raise ValueError("free faces need top dimension >= 1")
    return tuple(s for s in K.simplices(K.dim - 1) if len(K.cofaces(s)) == 1)


def extend_closing_boundary(K: SimplicialComplex) -> SimplicialComplex:
    """Cone one fresh vertex over each free face, raising its degree to 2.

    Fresh vertex ids continue past the current maximum, assigned to the free
    faces in lexicographic order; original simplexes are untouched.
    """
    free = free_faces(K)
    facets = [f.vertices for f in K.facets()]
    next_id = max(K.vertex_ids()) + 1
    for rho in sorted(free):
        facets.append(rho.vertices + (next_id,))
        next_id += 1
    return build_from_facets(facets)
