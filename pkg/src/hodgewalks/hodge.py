"""Weighted Hodge Laplacians, their spectra, Betti numbers, and gaps.

Every Laplacian here is self-adjoint with respect to the weighted inner
product of its dimension; spectra are computed by conjugating with W^{1/2},
which yields a symmetric matrix, and mapping eigenvectors back.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chains import Cochain, OperatorMatrix, boundary_matrix, simplex_labels
from .complexes import SimplicialComplex, WeightFunction
from .exactrank import integer_rank

__all__ = [
    "SpectralDecomposition",
    "up_laplacian",
    "down_laplacian",
    "full_laplacian",
    "spectrum",
    "betti",
    "betti_spectral",
    "betti_exact",
    "BettiMismatchError",
    "hodge_decompose",
    "spectral_gap",
    "essential_gap",
    "smallest_nonzero",
    "KERNEL_RTOL",
]

# eigenvalues below KERNEL_RTOL * max(1, spectral radius) count as zero
KERNEL_RTOL = 1e-8


class BettiMismatchError(RuntimeError):
    """Spectral and exact-rank Betti computations disagree."""


def up_laplacian(K: SimplicialComplex, d: int, w: WeightFunction) -> OperatorMatrix:
    """Up Laplacian at dimension d: adjoint-coboundary composed with coboundary.

    Zero matrix at the top dimension (no cofaces).
    """
    if not 0 <= d <= K.dim:
        raise ValueError(f"dimension {d} out of range")
    n = K.n_simplices(d)
    labels = simplex_labels(K, d)
    if d == K.dim:
        return OperatorMatrix(labels, labels, np.zeros((n, n)))
    B = boundary_matrix(K, d + 1).array.astype(float)
    wd = w.diagonal(d)
    wup = w.diagonal(d + 1)
    L = ((B * wup[None, :]) @ B.T) / wd[:, None]
    return OperatorMatrix(labels, labels, L)


def down_laplacian(K: SimplicialComplex, d: int, w: WeightFunction) -> OperatorMatrix:
    """Down Laplacian at dimension d >= 1: coboundary composed with adjoint."""
    if d == 0:
        raise ValueError("down Laplacian needs dimension >= 1")
    if not 1 <= d <= K.dim:
        raise ValueError(f"dimension {d} out of range")
    B = boundary_matrix(K, d).array.astype(float)
    wlow = w.diagonal(d - 1)
    wd = w.diagonal(d)
    L = (B.T / wlow[None, :]) @ B * wd[None, :]
    labels = simplex_labels(K, d)
    return OperatorMatrix(labels, labels, L)


def full_laplacian(K: SimplicialComplex, d: int, w: WeightFunction) -> OperatorMatrix:
    """Sum of the up and down Laplacians (missing side treated as zero)."""
    L = up_laplacian(K, d, w)
    if d == 0:
        return L
    D = down_laplacian(K, d, w)
    return OperatorMatrix(L.rows, L.cols, L.array + D.array)


@dataclass
class SpectralDecomposition:
    """Eigensystem of a weighted self-adjoint operator.

    Eigenvalues ascend; eigenvector columns are orthonormal under the weighted
    inner product. `kernel_dim` counts eigenvalues below `tolerance`.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    kernel_dim: int
    tolerance: float

    def kernel_basis(self) -> np.ndarray:
        return self.eigenvectors[:, : self.kernel_dim]


def spectrum(L: OperatorMatrix, w_diag: np.ndarray | None = None) -> SpectralDecomposition:
    """Eigendecomposition via the symmetrizing similarity W^{1/2} L W^{-1/2}."""
    A = L.array
    n = A.shape[0]
    if w_diag is None:
        w_diag = np.ones(n)
    root = np.sqrt(w_diag)
    S = (A * root[:, None]) / root[None, :]
    asym = float(np.max(np.abs(S - S.T))) if n else 0.0
    if asym > 1e-8:
        raise ValueError(f"operator is not self-adjoint under these weights (dev {asym:.3g})")
    S = (S + S.T) / 2.0
    vals, vecs = np.linalg.eigh(S)
    vecs = vecs / root[:, None]
    radius = float(np.max(np.abs(vals))) if n else 0.0
    tol = KERNEL_RTOL * max(1.0, radius)
    kdim = int(np.sum(np.abs(vals) < tol))
    return SpectralDecomposition(vals, vecs, kdim, tol)


def smallest_nonzero(dec: SpectralDecomposition) -> float | None:
    """Least eigenvalue above the kernel tolerance, or None if all vanish."""
    above = dec.eigenvalues[np.abs(dec.eigenvalues) >= dec.tolerance]
    return float(above[0]) if above.size else None


def betti_spectral(K: SimplicialComplex, d: int, w: WeightFunction) -> int:
    """Betti number as the kernel dimension of the full Laplacian at d."""
    dec = spectrum(full_laplacian(K, d, w), w.diagonal(d))
    return dec.kernel_dim


def betti_exact(K: SimplicialComplex, d: int) -> int:
    """Betti number from exact integer ranks of the two boundary maps."""
    if not 0 <= d <= K.dim:
        raise ValueError(f"dimension {d} out of range")
    n = K.n_simplices(d)
    r_low = integer_rank(boundary_matrix(K, d).array.tolist()) if d >= 1 else 0
    r_high = integer_rank(boundary_matrix(K, d + 1).array.tolist()) if d < K.dim else 0
    return n - r_low - r_high


def betti(K: SimplicialComplex, d: int, w: WeightFunction | None = None) -> int:
    """Betti number computed both ways; raises if the routes disagree."""
    if w is None:
        w = WeightFunction.ones(K)
    exact = betti_exact(K, d)
    spectral = betti_spectral(K, d, w)
    if exact != spectral:
        raise BettiMismatchError(
            f"betti_{d}: exact rank gives {exact}, spectral kernel gives {spectral}"
        )
    return exact


def _projection_onto(columns: np.ndarray, w_diag: np.ndarray, f: np.ndarray) -> np.ndarray:
    """Weighted-orthogonal projection of f onto the column span."""
    if columns.size == 0 or columns.shape[1] == 0:
        return np.zeros_like(f)
    root = np.sqrt(w_diag)
    coef, *_ = np.linalg.lstsq(columns * root[:, None], f * root, rcond=None)
    return columns @ coef


def hodge_decompose(
    K: SimplicialComplex, f: Cochain, w: WeightFunction
) -> tuple[Cochain, Cochain, Cochain]:
    """Split a d-cochain into (exact, harmonic, coexact) mutually orthogonal parts."""
    d = f.dim
    wd = w.diagonal(d)
    dec = spectrum(full_laplacian(K, d, w), wd)
    Q = dec.kernel_basis()
    harmonic = Q @ (Q.T @ (wd * f.values))
    if d >= 1:
        D = boundary_matrix(K, d).array.T.astype(float)  # coboundary of (d-1)-cochains
        exact = _projection_onto(D, wd, f.values)
    else:
        exact = np.zeros_like(f.values)
    if d < K.dim:
        B = boundary_matrix(K, d + 1).array.astype(float)
        C = (B * w.diagonal(d + 1)[None, :]) / wd[:, None]  # adjoint coboundary
        coexact = _projection_onto(C, wd, f.values)
    else:
        coexact = np.zeros_like(f.values)
    return (
        Cochain(K, d, exact),
        Cochain(K, d, harmonic),
        Cochain(K, d, coexact),
    )


def _restricted_spectrum(
    L: np.ndarray, basis: np.ndarray, w_diag: np.ndarray
) -> np.ndarray:
    """Spectrum of L restricted to the span of a weighted-orthonormal basis."""
    G = basis.T @ (w_diag[:, None] * (L @ basis))
    G = (G + G.T) / 2.0
    return np.linalg.eigvalsh(G)


def spectral_gap(K: SimplicialComplex, w: WeightFunction | None = None) -> float | None:
    """Least eigenvalue of the up Laplacian at dimension N-1 restricted to the
    kernel of the down Laplacian there; zero exactly when homology survives.

    None when the restriction subspace is trivial (undefined, distinct from 0).
    """
    if K.dim < 1:
        raise ValueError("gaps need top dimension >= 1")
    if w is None:
        w = WeightFunction.normalized(K)
    d = K.dim - 1
    wd = w.diagonal(d)
    if d == 0:
        # the down Laplacian vanishes at dimension 0, so its kernel is everything
        basis = np.diag(1.0 / np.sqrt(wd))
    else:
        basis = spectrum(down_laplacian(K, d, w), wd).kernel_basis()
    if basis.shape[1] == 0:
        return None
    vals = _restricted_spectrum(up_laplacian(K, d, w).array, basis, wd)
    return float(vals[0])


def essential_gap(K: SimplicialComplex, w: WeightFunction | None = None) -> float | None:
    """Least eigenvalue of the up Laplacian at dimension N-1 restricted to its
    own image, i.e. its smallest nonzero eigenvalue; never zero when defined.

    None when the image is trivial (zero operator).
    """
    if K.dim < 1:
        raise ValueError("gaps need top dimension >= 1")
    if w is None:
        w = WeightFunction.normalized(K)
    d = K.dim - 1
    wd = w.diagonal(d)
    dec = spectrum(up_laplacian(K, d, w), wd)
    basis = dec.eigenvectors[:, dec.kernel_dim :]
    if basis.shape[1] == 0:
        return None
    vals = _restricted_spectrum(up_laplacian(K, d, w).array, basis, wd)
    return float(vals[0])
