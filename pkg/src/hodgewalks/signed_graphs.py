"""Signed graphs induced by simplex adjacency, switching, and balance.

Vertices are oriented simplexes of one dimension; edge signs encode whether
the chosen orientations agree or clash through the shared coface or face.
Balance is decided by BFS potentials with an explicit switching or a negative
cycle as certificate.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .chains import OperatorMatrix, boundary_matrix
from .complexes import OrientedSimplex, Simplex, SimplicialComplex

__all__ = [
    "SignedGraph",
    "Switching",
    "BalanceResult",
    "up_signed_graph",
    "down_signed_graph",
    "signed_laplacian",
    "is_balanced",
    "is_antibalanced",
    "verify_up_relation",
    "verify_down_relation",
]


@dataclass(frozen=True)
class Switching:
    """Vertex subset whose edge signs get negated (cut edges flip)."""

    flipped: frozenset[int]


@dataclass(frozen=True)
class SignedGraph:
    vertices: tuple[OrientedSimplex, ...]
    edges: tuple[tuple[int, int, int], ...]  # (i, j, sign) with i < j

    def __post_init__(self) -> None:
        seen = set()
        for i, j, s in self.edges:
            if not 0 <= i < j < len(self.vertices):
                raise ValueError(f"bad edge endpoints ({i}, {j})")
            if s not in (1, -1):
                raise ValueError(f"edge sign must be +1 or -1, got {s}")
            if (i, j) in seen:
                raise ValueError(f"duplicate edge ({i}, {j})")
            seen.add((i, j))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=int)
        for i, j, _ in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def adjacency(self) -> np.ndarray:
        """Signed adjacency matrix."""
        A = np.zeros((self.n, self.n))
        for i, j, s in self.edges:
            A[i, j] = s
            A[j, i] = s
        return A

    def negated(self) -> "SignedGraph":
        return SignedGraph(self.vertices, tuple((i, j, -s) for i, j, s in self.edges))

    def switched(self, switching: Switching) -> "SignedGraph":
        flip = switching.flipped
        return SignedGraph(
            self.vertices,
            tuple((i, j, -s if (i in flip) != (j in flip) else s) for i, j, s in self.edges),
        )

    def edge_list_text(self) -> str:
        """One edge per line: the two vertex labels and the sign (+1/-1)."""
        lines = [
            f"{self.vertices[i].label()} {self.vertices[j].label()} {'+1' if s > 0 else '-1'}"
            for i, j, s in self.edges
        ]
        return "\n".join(lines) + ("\n" if lines else "")


def _orientation_signs(
    K: SimplicialComplex, d: int, orientation: Mapping[Simplex, int] | None
) -> np.ndarray:
    eps = np.ones(K.n_simplices(d), dtype=int)
    if orientation is not None:
        for s, sign in orientation.items():
            if sign not in (1, -1):
                raise ValueError(f"orientation sign must be +1 or -1, got {sign}")
            eps[K.index(s)] = sign
    return eps


def up_signed_graph(
    K: SimplicialComplex, d: int, orientation: Mapping[Simplex, int] | None = None
) -> SignedGraph:
    """Vertices: oriented d-simplexes; edges join pairs sharing a (d+1)-coface.

    The sign is negative when the two chosen orientations appear with equal
    signs in the shared coface's boundary, positive otherwise.
    """
    if not 0 <= d <= K.dim - 1:
        raise ValueError(f"up signed graph needs 0 <= d <= {K.dim - 1}, got {d}")
    eps = _orientation_signs(K, d, orientation)
    simps = K.simplices(d)
    B = boundary_matrix(K, d + 1).array
    verts = tuple(OrientedSimplex(s, int(eps[i])) for i, s in enumerate(simps))
    edges = []
    for i, sigma in enumerate(simps):
        for other, tau in K.up_adjacent(sigma):
            j = K.index(other)
            if j <= i:
                continue
            t = K.index(tau)
            sign = -int(eps[i]) * int(eps[j]) * int(B[i, t]) * int(B[j, t])
            edges.append((i, j, sign))
    edges.sort()
    return SignedGraph(verts, tuple(edges))


def down_signed_graph(
    K: SimplicialComplex, d: int, orientation: Mapping[Simplex, int] | None = None
) -> SignedGraph:
    """Vertices: oriented d-simplexes; edges join pairs sharing a (d-1)-face.

    The sign is negative when the two chosen orientations induce the same
    orientation on the shared face, positive when they induce opposite ones.
    """
    if not 1 <= d <= K.dim:
        raise ValueError(f"down signed graph needs 1 <= d <= {K.dim}, got {d}")
    eps = _orientation_signs(K, d, orientation)
    simps = K.simplices(d)
    B = boundary_matrix(K, d).array
    verts = tuple(OrientedSimplex(s, int(eps[i])) for i, s in enumerate(simps))
    edges = []
    for i, sigma in enumerate(simps):
        for other, rho in K.down_adjacent(sigma):
            j = K.index(other)
            if j <= i:
                continue
            r = K.index(rho)
            sign = -int(eps[i]) * int(eps[j]) * int(B[r, i]) * int(B[r, j])
            edges.append((i, j, sign))
    edges.sort()
    return SignedGraph(verts, tuple(edges))


def signed_laplacian(G: SignedGraph) -> OperatorMatrix:
    """Degree-normalized signed Laplacian: unit diagonal, -sign/deg off-diagonal."""
    deg = G.degrees()
    isolated = [G.vertices[i].label() for i in np.nonzero(deg == 0)[0]]
    if isolated:
        raise ValueError(f"isolated vertices have no normalized Laplacian row: {isolated}")
    L = np.eye(G.n) - G.adjacency() / deg[:, None]
    labels = tuple(v.label() for v in G.vertices)
    return OperatorMatrix(labels, labels, L)


@dataclass
class BalanceResult:
    balanced: bool
    switching: Switching | None
    negative_cycle: list[int] | None


def is_balanced(G: SignedGraph) -> BalanceResult:
    """Decide balance by BFS potentials.

    Balanced: returns a switching after which every edge is positive.
    Unbalanced: returns a cycle (vertex list) with an odd number of negative
    edges, assembled from the BFS tree paths plus the conflicting edge.
    """
    nbrs: dict[int, list[tuple[int, int]]] = {i: [] for i in range(G.n)}
    for i, j, s in G.edges:
        nbrs[i].append((j, s))
        nbrs[j].append((i, s))
    potential = [0] * G.n  # 0 = unvisited, else +-1
    parent: list[int | None] = [None] * G.n
    for root in range(G.n):
        if potential[root]:
            continue
        potential[root] = 1
        queue = [root]
        while queue:
            u = queue.pop(0)
            for v, s in nbrs[u]:
                want = potential[u] * s
                if potential[v] == 0:
                    potential[v] = want
                    parent[v] = u
                    queue.append(v)
                elif potential[v] != want:
                    return BalanceResult(False, None, _tree_cycle(parent, u, v))
    flipped = frozenset(i for i, p in enumerate(potential) if p < 0)
    return BalanceResult(True, Switching(flipped), None)


def _tree_cycle(parent: list[int | None], u: int, v: int) -> list[int]:
    """Cycle through BFS-tree ancestors of u and v plus the edge (u, v)."""
    anc_u = [u]
    while parent[anc_u[-1]] is not None:
        anc_u.append(parent[anc_u[-1]])
    index_u = {x: k for k, x in enumerate(anc_u)}
    path_v = [v]
    while path_v[-1] not in index_u:
        path_v.append(parent[path_v[-1]])
    meet = path_v[-1]
    return anc_u[: index_u[meet] + 1] + list(reversed(path_v[:-1]))


def is_antibalanced(G: SignedGraph) -> BalanceResult:
    """Balance of the sign-negated graph: can switching make all edges negative?

    An unbalanced certificate here is a cycle with an odd number of positive
    edges of the original graph.
    """
    return is_balanced(G.negated())


def verify_up_relation(K: SimplicialComplex, d: int) -> float:
    """Max entrywise deviation of the normalized up Laplacian at d from
    (d+1) L_signed - d I over the up signed graph (canonical orientations).

    Requires every facet to have dimension d+1, so that normalized weights put
    1 on the (d+1)-simplexes.
    """
    bad = [f for f in K.facets() if f.dim != d + 1]
    if bad:
        raise ValueError(
            f"complex must be pure of dimension {d + 1}; offending facets: "
            + ", ".join(str(f) for f in bad[:5])
        )
    from .complexes import WeightFunction
    from .hodge import up_laplacian

    G = up_signed_graph(K, d)
    Ls = signed_laplacian(G).array
    lap = up_laplacian(K, d, WeightFunction.normalized(K)).array
    return float(np.max(np.abs(lap - ((d + 1) * Ls - d * np.eye(G.n)))))


def verify_down_relation(K: SimplicialComplex) -> float:
    """Max entrywise deviation of the normalized down Laplacian at the top
    dimension from ((N+1)/2) L_signed over the down signed graph.

    Requires every (N-1)-simplex to have exactly two cofaces.
    """
    N = K.dim
    if N < 1:
        raise ValueError("down relation needs top dimension >= 1")
    bad = [s for s in K.simplices(N - 1) if len(K.cofaces(s)) != 2]
    if bad:
        raise ValueError(
            "every face one below the top must have degree exactly 2; offenders: "
            + ", ".join(f"{s} (degree {len(K.cofaces(s))})" for s in bad[:5])
        )
    from .complexes import WeightFunction
    from .hodge import down_laplacian

    G = down_signed_graph(K, N)
    Ls = signed_laplacian(G).array
    lap = down_laplacian(K, N, WeightFunction.normalized(K)).array
    return float(np.max(np.abs(lap - ((N + 1) / 2.0) * Ls)))
