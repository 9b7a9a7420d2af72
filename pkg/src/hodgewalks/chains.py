"""Boundary and coboundary operators as labeled matrices, plus cochains.

Boundary/coboundary entries are exact integers; weighted adjoints are double
precision. Columns and rows follow the complex's lexicographic simplex order.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complexes import Simplex, SimplicialComplex, WeightFunction

__all__ = [
    "OperatorMatrix",
    "Cochain",
    "boundary_matrix",
    "coboundary_matrix",
    "adjoint_coboundary_matrix",
    "inner_product",
]


@dataclass(frozen=True)
class OperatorMatrix:
    """Dense matrix with row/column state labels."""

    rows: tuple[str, ...]
    cols: tuple[str, ...]
    array: np.ndarray

    def __post_init__(self) -> None:
        if self.array.shape != (len(self.rows), len(self.cols)):
            raise ValueError(
                f"shape {self.array.shape} does not match labels "
                f"({len(self.rows)}, {len(self.cols)})"
            )
        self.array.setflags(write=False)

    @property
    def shape(self) -> tuple[int, int]:
        return self.array.shape


def simplex_labels(K: SimplicialComplex, d: int) -> tuple[str, ...]:
    return tuple(s.label() for s in K.simplices(d))


@dataclass
class Cochain:
    """Real-valued alternating function on the oriented d-simplexes.

    Stored as values on the canonical orientations; the value on the reversed
    orientation is the negative.
    """

    complex: SimplicialComplex
    dim: int
    values: np.ndarray

    def __post_init__(self) -> None:
        self.values = np.asarray(self.values, dtype=float)
        n = self.complex.n_simplices(self.dim)
        if self.values.shape != (n,):
            raise ValueError(f"expected {n} values for dimension {self.dim}")

    def __call__(self, simplex: Simplex, sign: int = 1) -> float:
        return sign * float(self.values[self.complex.index(simplex)])

    @classmethod
    def indicator(cls, K: SimplicialComplex, simplex: Simplex, sign: int = 1) -> "Cochain":
        v = np.zeros(K.n_simplices(simplex.dim))
        v[K.index(simplex)] = sign
        return cls(K, simplex.dim, v)


def boundary_matrix(K: SimplicialComplex, d: int) -> OperatorMatrix:
    """Matrix of the boundary map from d-chains to (d-1)-chains (d >= 1).

    Column sigma holds (-1)^j at the face obtained by dropping position j.
    """
    if not 1 <= d <= K.dim:
        raise ValueError(f"boundary matrix needs 1 <= d <= {K.dim}, got {d}")
    rows = K.simplices(d - 1)
    cols = K.simplices(d)
    M = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for c, sigma in enumerate(cols):
        for j, face in sigma.faces():
            M[K.index(face), c] = (-1) ** j
    return OperatorMatrix(simplex_labels(K, d - 1), simplex_labels(K, d), M)


def coboundary_matrix(K: SimplicialComplex, d: int) -> OperatorMatrix:
    """Matrix of the coboundary from d-cochains to (d+1)-cochains.

    Equals the transpose of the (d+1)-boundary matrix.
    """
    if not 0 <= d <= K.dim - 1:
        raise ValueError(f"coboundary matrix needs 0 <= d <= {K.dim - 1}, got {d}")
    B = boundary_matrix(K, d + 1)
    return OperatorMatrix(B.cols, B.rows, B.array.T)


def adjoint_coboundary_matrix(K: SimplicialComplex, d: int, w: WeightFunction) -> OperatorMatrix:
    """Adjoint of the d-coboundary under the weighted inner products.

    W_d^{-1} (coboundary_d)^T W_{d+1}; maps (d+1)-cochains to d-cochains.
    """
    if not 0 <= d <= K.dim - 1:
        raise ValueError(f"adjoint coboundary needs 0 <= d <= {K.dim - 1}, got {d}")
    B = boundary_matrix(K, d + 1).array.astype(float)
    wd = w.diagonal(d)
    wup = w.diagonal(d + 1)
    M = (B * wup[None, :]) / wd[:, None]
    return OperatorMatrix(simplex_labels(K, d), simplex_labels(K, d + 1), M)


def inner_product(f: Cochain, g: Cochain, w: WeightFunction) -> float:
    """Weighted inner product: sum over d-simplexes of w * f * g."""
    if f.dim != g.dim or f.complex is not g.complex:
        raise ValueError("cochains must live on the same complex and dimension")
    return float(np.dot(w.diagonal(f.dim) * f.values, g.values))
