"""Finite abstract simplicial complexes with oriented simplexes and weights.

A complex is stored closed under inclusion: building from facets materializes
every nonempty subset. Simplexes are canonical (strictly increasing vertex
tuples); an orientation is a canonical simplex together with a sign.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Mapping

__all__ = [
    "Simplex",
    "OrientedSimplex",
    "SimplicialComplex",
    "WeightFunction",
    "build_from_facets",
    "boundary_sign",
]


@dataclass(frozen=True, order=True)
class Simplex:
    """Canonical simplex: strictly increasing tuple of non-negative vertex ids."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        v = self.vertices
        if len(v) == 0:
            raise ValueError("simplex needs at least one vertex")
        if any((not isinstance(x, int)) or x < 0 for x in v):
            raise ValueError(f"vertex ids must be non-negative integers: {v}")
        if any(a >= b for a, b in zip(v, v[1:])):
            raise ValueError(f"vertices must be strictly increasing: {v}")

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def face(self, j: int) -> "Simplex":
        """The codimension-one face obtained by dropping vertex position j."""
        if not 0 <= j <= self.dim:
            raise ValueError(f"face index {j} out of range for {self}")
        return Simplex(self.vertices[:j] + self.vertices[j + 1 :])

    def faces(self) -> Iterator[tuple[int, "Simplex"]]:
        """All codimension-one faces as (dropped position, face) pairs."""
        for j in range(len(self.vertices)):
            yield j, self.face(j)

    def label(self) -> str:
        return ",".join(str(x) for x in self.vertices)

    def __str__(self) -> str:  # pragma: no cover - repr convenience
        return "(" + self.label() + ")"


@dataclass(frozen=True)
class OrientedSimplex:
    """A simplex with one of its two orientations (dimension 0 is always +1)."""

    simplex: Simplex
    sign: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"orientation sign must be +1 or -1, got {self.sign}")
        if self.simplex.dim == 0 and self.sign != 1:
            raise ValueError("vertices carry a single orientation (+1)")

    @property
    def dim(self) -> int:
        return self.simplex.dim

    def __neg__(self) -> "OrientedSimplex":
        return OrientedSimplex(self.simplex, -self.sign)

    def label(self) -> str:
        return ("+" if self.sign > 0 else "-") + self.simplex.label()


def boundary_sign(rho: OrientedSimplex, sigma: OrientedSimplex) -> int:
    """Sign with which [rho] appears in the boundary of [sigma].

    With sigma canonical, dropping vertex position j contributes (-1)^j to the
    face at that position; arbitrary orientations multiply both signs in.
    """
    if rho.dim != sigma.dim - 1:
        raise ValueError("rho must be a codimension-one face of sigma")
    for j, face in sigma.simplex.faces():
        if face == rho.simplex:
            return rho.sign * sigma.sign * (-1) ** j
    raise ValueError(f"{rho.simplex} is not a face of {sigma.simplex}")


class SimplicialComplex:
    """Inclusion-closed family of simplexes on a finite vertex set.

    Use :func:`build_from_facets`. Instances are immutable after construction;
    simplexes of each dimension are kept in lexicographic order and indexed.
    """

    def __init__(self, simplexes_by_dim: tuple[tuple[Simplex, ...], ...]):
        self._by_dim = simplexes_by_dim
        self._index: dict[Simplex, int] = {}
        for group in simplexes_by_dim:
            for i, s in enumerate(group):
                self._index[s] = i
        # cofaces: simplex -> tuple of (d+1)-simplexes containing it
        cof: dict[Simplex, list[Simplex]] = {s: [] for s in self._index}
        for group in simplexes_by_dim[1:]:
            for tau in group:
                for _, face in tau.faces():
                    cof[face].append(tau)
        self._cofaces = {s: tuple(ts) for s, ts in cof.items()}
        self._check_closed()

    def _check_closed(self) -> None:
        for group in self._by_dim[1:]:
            for s in group:
                for _, face in s.faces():
                    if face not in self._index:
                        raise ValueError(f"not closed under inclusion: missing {face}")

    # -- basic queries ----------------------------------------------------

    @property
    def dim(self) -> int:
        """Top dimension N."""
        return len(self._by_dim) - 1

    def simplices(self, d: int) -> tuple[Simplex, ...]:
        if not 0 <= d <= self.dim:
            return ()
        return self._by_dim[d]

    def n_simplices(self, d: int) -> int:
        return len(self.simplices(d))

    def index(self, sigma: Simplex) -> int:
        """Position of sigma within its dimension's lexicographic ordering."""
        try:
            return self._index[sigma]
        except KeyError:
            raise ValueError(f"{sigma} is not in the complex") from None

    def __contains__(self, sigma: Simplex) -> bool:
        return sigma in self._index

    def cofaces(self, sigma: Simplex) -> tuple[Simplex, ...]:
        """All (dim+1)-simplexes having sigma as a face."""
        if sigma not in self._index:
            raise ValueError(f"{sigma} is not in the complex")
        return self._cofaces[sigma]

    def facets(self) -> tuple[Simplex, ...]:
        """Inclusion-maximal simplexes (any dimension)."""
        return tuple(
            s for group in self._by_dim for s in group if not self._cofaces[s]
        )

    def is_pure(self) -> bool:
        """True when every facet has the top dimension."""
        return all(f.dim == self.dim for f in self.facets())

    def vertex_ids(self) -> tuple[int, ...]:
        return tuple(s.vertices[0] for s in self._by_dim[0])

    # -- degrees and adjacency --------------------------------------------

    def degree(self, sigma: Simplex, w: "WeightFunction | None" = None) -> float:
        """Weighted degree: total weight of the (dim+1)-cofaces of sigma.

        With no weight function this is the plain coface count.
        """
        cof = self.cofaces(sigma)
        if w is None:
            return float(len(cof))
        return float(sum(w(tau) for tau in cof))

    def up_adjacent(self, sigma: Simplex) -> tuple[tuple[Simplex, Simplex], ...]:
        """Distinct same-dimension simplexes sharing a coface with sigma.

        Returns (neighbor, shared coface) pairs; the shared coface of a pair is
        unique, so each neighbor appears once.
        """
        out = []
        for tau in self.cofaces(sigma):
            for _, other in tau.faces():
                if other != sigma:
                    out.append((other, tau))
        out.sort()
        return tuple(out)

    def down_adjacent(self, sigma: Simplex) -> tuple[tuple[Simplex, Simplex], ...]:
        """Distinct same-dimension simplexes sharing a codimension-one face.

        Returns (neighbor, shared face) pairs; the shared face of a pair is
        unique, so each neighbor appears once.
        """
        if sigma not in self._index:
            raise ValueError(f"{sigma} is not in the complex")
        if sigma.dim == 0:
            raise ValueError("down adjacency needs dimension >= 1")
        out = []
        for _, rho in sigma.faces():
            for other in self._cofaces[rho]:
                if other != sigma:
                    out.append((other, rho))
        out.sort()
        return tuple(out)

    def connected_components(self, d: int, direction: str) -> tuple[tuple[Simplex, ...], ...]:
        """Partition of the d-simplexes under up or down adjacency."""
        if direction not in ("up", "down"):
            raise ValueError(f"direction must be 'up' or 'down', got {direction!r}")
        if not 0 <= d <= self.dim:
            raise ValueError(f"dimension {d} out of range")
        if direction == "down" and d == 0:
            raise ValueError("down adjacency needs dimension >= 1")
        adj = self.up_adjacent if direction == "up" else self.down_adjacent
        seen: set[Simplex] = set()
        parts = []
        for start in self.simplices(d):
            if start in seen:
                continue
            comp = []
            stack = [start]
            seen.add(start)
            while stack:
                s = stack.pop()
                comp.append(s)
                for other, _ in adj(s):
                    if other not in seen:
                        seen.add(other)
                        stack.append(other)
            parts.append(tuple(sorted(comp)))
        return tuple(sorted(parts))


def build_from_facets(facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Close a facet list under inclusion and return the complex.

    Redundant facets (faces of other entries) are tolerated.
    """
    facet_list = [tuple(f) for f in facets]
    if not facet_list:
        raise ValueError("facet list is empty")
    closed: set[tuple[int, ...]] = set()
    for f in facet_list:
        if len(set(f)) != len(f):
            raise ValueError(f"facet with duplicate vertices: {f}")
        verts = tuple(sorted(f))
        if any((not isinstance(x, int)) or x < 0 for x in verts):
            raise ValueError(f"vertex ids must be non-negative integers: {f}")
        for k in range(1, len(verts) + 1):
            closed.update(combinations(verts, k))
    top = max(len(s) for s in closed) - 1
    by_dim: list[list[Simplex]] = [[] for _ in range(top + 1)]
    for vs in closed:
        by_dim[len(vs) - 1].append(Simplex(vs))
    return SimplicialComplex(tuple(tuple(sorted(g)) for g in by_dim))


@dataclass(frozen=True)
class WeightFunction:
    """Strictly positive weight on every simplex of a fixed complex.

    Kinds: "one" (constant), "normalized" (degree on non-facets, 1 on facets,
    computed top-down so degrees use the weights of one dimension up),
    "recip-deg(d)" (reciprocal coface count on d-simplexes, 1 elsewhere), and
    "explicit" (user table).
    """

    complex: SimplicialComplex
    kind: str
    values: Mapping[Simplex, float] = field(repr=False)

    def __post_init__(self) -> None:
        for s, v in self.values.items():
            if not v > 0:
                raise ValueError(f"weights must be strictly positive: w({s}) = {v}")

    def __call__(self, sigma: Simplex) -> float:
        try:
            return self.values[sigma]
        except KeyError:
            raise ValueError(f"{sigma} is not in the complex") from None

    def diagonal(self, d: int):
        """Weight vector over the d-simplexes in index order (numpy array)."""
        import numpy as np

        return np.array([self.values[s] for s in self.complex.simplices(d)], dtype=float)

    # -- constructors ------------------------------------------------------

    @classmethod
    def ones(cls, K: SimplicialComplex) -> "WeightFunction":
        vals = {s: 1.0 for d in range(K.dim + 1) for s in K.simplices(d)}
        return cls(K, "one", vals)

    @classmethod
    def normalized(cls, K: SimplicialComplex) -> "WeightFunction":
        vals: dict[Simplex, float] = {}
        for d in range(K.dim, -1, -1):
            for s in K.simplices(d):
                cof = K.cofaces(s)
                vals[s] = sum(vals[t] for t in cof) if cof else 1.0
        return cls(K, "normalized", vals)

    @classmethod
    def reciprocal_degree(cls, K: SimplicialComplex, d: int) -> "WeightFunction":
        if not 0 <= d <= K.dim:
            raise ValueError(f"dimension {d} out of range")
        vals = {s: 1.0 for dd in range(K.dim + 1) for s in K.simplices(dd)}
        for s in K.simplices(d):
            deg = len(K.cofaces(s))
            if deg >= 1:
                vals[s] = 1.0 / deg
        return cls(K, f"recip-deg({d})", vals)

    @classmethod
    def explicit(cls, K: SimplicialComplex, table: Mapping[Simplex, float]) -> "WeightFunction":
        vals = {}
        for d in range(K.dim + 1):
            for s in K.simplices(d):
                if s not in table:
                    raise ValueError(f"explicit weight table is missing {s}")
                vals[s] = float(table[s])
        return cls(K, "explicit", vals)


def weight_by_kind(K: SimplicialComplex, kind: str, d: int | None = None) -> WeightFunction:
    """Weight constructor keyed by the CLI spelling of the kind."""
    if kind == "one":
        return WeightFunction.ones(K)
    if kind == "normalized":
        return WeightFunction.normalized(K)
    if kind == "recip-deg":
        if d is None:
            raise ValueError("recip-deg weights need a dimension")
        return WeightFunction.reciprocal_degree(K, d)
    raise ValueError(f"unknown weight kind {kind!r}")
