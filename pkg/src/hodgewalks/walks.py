"""Random walks driven by simplex adjacency, and their spectral analysis.

Four families:

* lazy walk on the vertices of a graph;
* walk on oriented codimension-one simplexes moving through shared top
  cofaces to the orientation that agrees on the common face (the graph walk
  is the one-dimensional special case);
* absorbing walk on oriented d-simplexes moving through shared faces to the
  orientation that disagrees there, surplus mass going to a death state;
* walk on the top simplexes of an orientable complex carrying a compatible
  orientation, which behaves like an ordinary graph walk.

Each walk comes with the affine identity tying its evolution operator to a
weighted Laplacian, an expectation process with spectral limit, and a
convergence-rate measurement against the theoretical bound.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chains import (
    OperatorMatrix,
    adjoint_coboundary_matrix,
    boundary_matrix,
    coboundary_matrix,
    simplex_labels,
)
from .complexes import OrientedSimplex, Simplex, SimplicialComplex, WeightFunction
from .hodge import (
    down_laplacian,
    smallest_nonzero,
    spectral_gap,
    spectrum,
    up_laplacian,
)
from .orientation import OrientationAssignment, free_faces, is_orientable

__all__ = [
    "WalkConfig",
    "WalkStateSpace",
    "Distribution",
    "ExpectationProcess",
    "ConvergenceResult",
    "GraphTypeWalk",
    "StationaryResult",
    "NotOrientableError",
    "FreeFacesError",
    "graph_walk_matrix",
    "up_walk_matrix",
    "up_transition_operator",
    "expectation_process_up",
    "up_convergence_rate",
    "down_walk_matrix",
    "down_propagation_matrix",
    "antisymmetrizer",
    "expectation_process_down",
    "down_convergence_rate",
    "graph_type_down_walk",
    "stationary_distribution",
    "stationary_independence",
    "graph_type_convergence_rate",
    "up_limit_matrix",
    "down_limit_matrix",
    "projected_limit_span",
    "exactness_residuals",
    "DEATH_LABEL",
]

DEATH_LABEL = "DEATH"


class NotOrientableError(ValueError):
    def __init__(self, certificate: list[Simplex]):
        self.certificate = certificate
        cyc = " ".join(str(s) for s in certificate)
        super().__init__(f"complex is not orientable; negative cycle: {cyc}")


class FreeFacesError(ValueError):
    def __init__(self, faces: tuple[Simplex, ...]):
        self.faces = faces
        listing = ", ".join(str(s) for s in faces[:6])
        super().__init__(
            f"free faces present ({listing}); close the boundary first or pass "
            "allow_free_faces=True"
        )


@dataclass(frozen=True)
class WalkConfig:
    """Sampling parameters shared by the simulation entry points."""

    laziness: float = 0.5
    dim: int | None = None
    steps: int = 50
    seed: int = 0
    chains: int = 100_000

    def __post_init__(self) -> None:
        if not 0.0 <= self.laziness <= 1.0:
            raise ValueError("laziness must lie in [0, 1]")
        if self.steps < 0 or self.chains < 1:
            raise ValueError("steps must be >= 0 and chains >= 1")


@dataclass(frozen=True)
class WalkStateSpace:
    kind: str  # "vertices" | "oriented" | "oriented+death" | "top"
    dim: int
    labels: tuple[str, ...]

    @property
    def size(self) -> int:
        return len(self.labels)


@dataclass
class Distribution:
    space: WalkStateSpace
    probabilities: np.ndarray

    def __post_init__(self) -> None:
        p = np.asarray(self.probabilities, dtype=float)
        if p.shape != (self.space.size,):
            raise ValueError("probability vector does not match the state space")
        if p.min() < -1e-12 or abs(p.sum() - 1.0) > 1e-9:
            raise ValueError("not a probability vector")
        self.probabilities = p


def _oriented_space(K: SimplicialComplex, d: int, death: bool) -> WalkStateSpace:
    simps = K.simplices(d)
    labels = tuple("+" + s.label() for s in simps) + tuple("-" + s.label() for s in simps)
    if death:
        return WalkStateSpace("oriented+death", d, labels + (DEATH_LABEL,))
    return WalkStateSpace("oriented", d, labels)


# ---------------------------------------------------------------------------
# graph walk


def graph_walk_matrix(K: SimplicialComplex, alpha: float) -> OperatorMatrix:
    """Lazy vertex walk: stay with probability alpha, else jump to a uniform
    graph neighbor. Rows are states, so rows sum to one.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError("alpha must lie in [0, 1]")
    if K.dim < 1:
        raise ValueError("graph walk needs edges")
    verts = K.simplices(0)
    n = len(verts)
    P = np.zeros((n, n))
    for i, v in enumerate(verts):
        edges = K.cofaces(v)
        if not edges:
            raise ValueError(f"isolated vertex {v} has no walk step")
        share = (1.0 - alpha) / len(edges)
        P[i, i] = alpha
        for e in edges:
            j = K.index(e.face(0) if e.face(1) == v else e.face(1))
            P[i, j] += share
    labels = simplex_labels(K, 0)
    return OperatorMatrix(labels, labels, P)


# ---------------------------------------------------------------------------
# up walk (codimension one, orientation-agreeing)


def _require_pure(K: SimplicialComplex) -> None:
    if not K.is_pure():
        bad = [f for f in K.facets() if f.dim != K.dim]
        raise ValueError(
            "walk needs a pure complex; lower-dimensional facets: "
            + ", ".join(str(s) for s in bad[:5])
        )


def up_walk_matrix(K: SimplicialComplex, p: float) -> tuple[OperatorMatrix, WalkStateSpace]:
    """Walk on oriented (N-1)-simplexes through shared top cofaces.

    From [sigma], each coface tau contributes N moves: to the orientation of
    every other face of tau that induces the same orientation on the shared
    codimension-two face. Each move has probability (1-p)/(N deg sigma), which
    makes rows stochastic with no dead mass.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError("laziness must lie in [0, 1]")
    _require_pure(K)
    N = K.dim
    if N < 1:
        raise ValueError("up walk needs top dimension >= 1")
    d = N - 1
    simps = K.simplices(d)
    m = len(simps)
    if d == 0:
        # vertices carry one orientation; this is exactly the lazy graph walk
        P = graph_walk_matrix(K, p)
        return P, WalkStateSpace("vertices", 0, P.rows)
    B = boundary_matrix(K, d).array  # signs of (d-1)-faces inside d-simplexes
    P = np.zeros((2 * m, 2 * m))
    for i, sigma in enumerate(simps):
        deg = len(K.cofaces(sigma))
        share = (1.0 - p) / (N * deg)
        for (other, tau) in K.up_adjacent(sigma):
            j = K.index(other)
            shared = tuple(sorted(set(sigma.vertices) & set(other.vertices)))
            r = K.index(Simplex(shared))
            agree = int(B[r, i]) * int(B[r, j])  # +1 when equal boundary signs
            for s, row in ((1, i), (-1, m + i)):
                sprime = s * agree
                col = j if sprime > 0 else m + j
                P[row, col] = share
        P[i, i] = p
        P[m + i, m + i] = p
    space = _oriented_space(K, d, death=False)
    M = OperatorMatrix(space.labels, space.labels, P)
    return M, space


def up_transition_operator(K: SimplicialComplex, p: float) -> tuple[OperatorMatrix, float]:
    """Evolution operator A of the marginal-difference cochain, with the
    entrywise residual of its affine identity against the normalized up
    Laplacian at dimension N-1 (in the marginal basis, i.e. transposed).
    """
    P, space = up_walk_matrix(K, p)
    N = K.dim
    d = N - 1
    m = K.n_simplices(d)
    if space.kind == "vertices":
        A = P.array.T.copy()
    else:
        A = (P.array[:m, :m] - P.array[:m, m : 2 * m]).T.copy()
    a = (p * (N - 1) + 1.0) / N
    b = (1.0 - p) / N
    L = up_laplacian(K, d, WeightFunction.normalized(K)).array
    residual = float(np.max(np.abs(A - (a * np.eye(m) - b * L.T))))
    labels = simplex_labels(K, d)
    return OperatorMatrix(labels, labels, A), residual


@dataclass
class ExpectationProcess:
    """Scaled marginal-difference iterates of an oriented walk.

    iterates[t] is scale^t A^t applied to the start indicator; `limit` is the
    spectral projection of the start onto the top eigenspace, and
    `iterate_gap` the distance between the last iterate and the limit.
    """

    dim: int
    start: str
    scale: float
    labels: tuple[str, ...]
    iterates: np.ndarray
    limit: np.ndarray
    iterate_gap: float
    threshold: float
    warning: str | None = None


def _up_weights(K: SimplicialComplex) -> np.ndarray:
    return WeightFunction.normalized(K).diagonal(K.dim - 1)


def expectation_process_up(
    K: SimplicialComplex, start: OrientedSimplex, p: float, steps: int
) -> ExpectationProcess:
    """Run the up-walk expectation process from an oriented start simplex."""
    N = K.dim
    d = N - 1
    if start.dim != d:
        raise ValueError(f"start must have dimension {d}")
    A, _ = up_transition_operator(K, p)
    m = A.shape[0]
    wd = _up_weights(K)
    e0 = np.zeros(m)
    e0[K.index(start.simplex)] = start.sign
    scale = N / (p * (N - 1) + 1.0)
    iterates = np.empty((steps + 1, m))
    iterates[0] = e0
    x = e0
    for t in range(1, steps + 1):
        x = scale * (A.array @ x)
        iterates[t] = x
    L = up_laplacian(K, d, WeightFunction.normalized(K))
    Q = spectrum(L, wd).kernel_basis()
    limit = wd * (Q @ (Q.T @ e0))
    gap = float(np.sqrt(np.sum((iterates[-1] - limit) ** 2 / wd)))
    thr = (N - 1) / (3.0 * N - 1.0)
    warning = None
    if not thr < p < 1.0:
        warning = (
            f"laziness {p} is outside ({thr:.6g}, 1); the scaled process need not converge"
        )
    return ExpectationProcess(
        d, start.label(), scale, A.rows, iterates, limit, gap, thr, warning
    )


@dataclass
class ConvergenceResult:
    distances: np.ndarray
    measured_rate: float
    bound_rate: float | None
    tv_distances: np.ndarray | None = None
    opnorm_deviation: float | None = None
    warning: str | None = None


def _max_successive_ratio(d: np.ndarray) -> float:
    # iterates carry absolute roundoff near 1e-15, so ratios of distances
    # below ~1e-8 are noise rather than decay
    floor = 1e-8 * max(1.0, float(d[0]) if d.size else 1.0)
    ratios = [d[t + 1] / d[t] for t in range(len(d) - 1) if d[t] > floor and d[t + 1] > floor]
    return float(max(ratios)) if ratios else 0.0


def up_convergence_rate(
    K: SimplicialComplex,
    p: float,
    steps: int = 40,
    start: OrientedSimplex | None = None,
) -> ConvergenceResult:
    """Distance of the up expectation process to its limit per step, the
    fitted geometric ratio, and the spectral-gap bound it must respect.
    """
    N = K.dim
    if start is None:
        start = OrientedSimplex(K.simplices(N - 1)[0], 1)
    proc = expectation_process_up(K, start, p, steps)
    wd = _up_weights(K)
    diffs = proc.iterates - proc.limit[None, :]
    dists = np.sqrt(np.sum(diffs ** 2 / wd[None, :], axis=1))
    lam = spectral_gap(K, WeightFunction.normalized(K))
    bound = None
    if lam is not None:
        bound = 1.0 - (1.0 - p) * lam / (p * (N - 1) + 1.0)
    return ConvergenceResult(
        dists, _max_successive_ratio(dists), bound, warning=proc.warning
    )


# ---------------------------------------------------------------------------
# down walk (orientation-disagreeing, absorbing)


def _max_face_degree(K: SimplicialComplex, d: int) -> int:
    return max(len(K.cofaces(r)) for r in K.simplices(d - 1))


def down_walk_matrix(
    K: SimplicialComplex, d: int, p: float
) -> tuple[OperatorMatrix, WalkStateSpace]:
    """Absorbing walk on oriented d-simplexes through shared faces.

    Moves go to the orientation of each lower neighbor inducing the opposite
    orientation on the shared face, each with probability
    (1-p)/((d+1)(D-1)) where D is the largest (d-1)-simplex degree; leftover
    mass is absorbed by a death state.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError("laziness must lie in [0, 1]")
    if not 1 <= d <= K.dim:
        raise ValueError(f"down walk needs 1 <= d <= {K.dim}, got {d}")
    D = _max_face_degree(K, d)
    if D < 2:
        raise ValueError(
            f"no lower adjacency: the largest (d-1)-simplex degree is {D}, need >= 2"
        )
    simps = K.simplices(d)
    m = len(simps)
    B = boundary_matrix(K, d).array
    q = (1.0 - p) / ((d + 1) * (D - 1))
    P = np.zeros((2 * m + 1, 2 * m + 1))
    for i, sigma in enumerate(simps):
        moved = 0
        for (other, rho) in K.down_adjacent(sigma):
            j, r = K.index(other), K.index(rho)
            flip = -int(B[r, i]) * int(B[r, j])  # +1 keeps canonical, -1 crosses
            for s, row in ((1, i), (-1, m + i)):
                sprime = s * flip
                col = j if sprime > 0 else m + j
                P[row, col] = q
            moved += 1
        death = 1.0 - p - q * moved
        if death < -1e-12:
            raise AssertionError("down walk rows exceeded unit mass")
        death = max(death, 0.0)
        for row in (i, m + i):
            P[row, row] = p
            P[row, 2 * m] = death
    P[2 * m, 2 * m] = 1.0
    space = _oriented_space(K, d, death=True)
    return OperatorMatrix(space.labels, space.labels, P), space


def down_propagation_matrix(
    K: SimplicialComplex, d: int, p: float
) -> tuple[OperatorMatrix, float]:
    """Marginal-difference propagation matrix on canonical d-simplexes, with
    the entrywise residual of its affine identity against the constant-weight
    down Laplacian.

    Entry conventions follow the reading that satisfies both the identity and
    the intertwining with the walk: +q toward opposite-inducing neighbor
    orientations, -q toward their reverses (q the walk's move probability).
    """
    if not 1 <= d <= K.dim:
        raise ValueError(f"down walk needs 1 <= d <= {K.dim}, got {d}")
    D = _max_face_degree(K, d)
    if D < 2:
        raise ValueError(
            f"no lower adjacency: the largest (d-1)-simplex degree is {D}, need >= 2"
        )
    simps = K.simplices(d)
    m = len(simps)
    Bnd = boundary_matrix(K, d).array
    q = (1.0 - p) / ((d + 1) * (D - 1))
    B = np.zeros((m, m))
    for i, sigma in enumerate(simps):
        B[i, i] = p
        for (other, rho) in K.down_adjacent(sigma):
            j, r = K.index(other), K.index(rho)
            B[i, j] = -q * int(Bnd[r, i]) * int(Bnd[r, j])
    a = (p * (D - 2) + 1.0) / (D - 1)
    L = down_laplacian(K, d, WeightFunction.ones(K)).array
    residual = float(np.max(np.abs(B - (a * np.eye(m) - q * L))))
    labels = simplex_labels(K, d)
    return OperatorMatrix(labels, labels, B), residual


def antisymmetrizer(K: SimplicialComplex, d: int) -> OperatorMatrix:
    """T mapping a distribution over oriented d-states (death last) to the
    marginal-difference cochain on canonical simplexes.
    """
    if not 1 <= d <= K.dim:
        raise ValueError(f"dimension {d} out of range")
    m = K.n_simplices(d)
    T = np.zeros((m, 2 * m + 1))
    T[:, :m] = np.eye(m)
    T[:, m : 2 * m] = -np.eye(m)
    space = _oriented_space(K, d, death=True)
    return OperatorMatrix(simplex_labels(K, d), space.labels, T)


def expectation_process_down(
    K: SimplicialComplex, start: OrientedSimplex, d: int, p: float, steps: int
) -> ExpectationProcess:
    """Run the down-walk expectation process from an oriented start simplex."""
    if start.dim != d:
        raise ValueError(f"start must have dimension {d}")
    B, _ = down_propagation_matrix(K, d, p)
    D = _max_face_degree(K, d)
    m = B.shape[0]
    e0 = np.zeros(m)
    e0[K.index(start.simplex)] = start.sign
    scale = (D - 1.0) / (p * (D - 2) + 1.0)
    iterates = np.empty((steps + 1, m))
    iterates[0] = e0
    x = e0
    for t in range(1, steps + 1):
        x = scale * (B.array @ x)
        iterates[t] = x
    L = down_laplacian(K, d, WeightFunction.ones(K))
    Q = spectrum(L).kernel_basis()
    limit = Q @ (Q.T @ e0)
    gap = float(np.linalg.norm(iterates[-1] - limit))
    thr = (D - 2.0) / (3.0 * D - 4.0)
    warning = None
    if not thr < p < 1.0:
        warning = (
            f"laziness {p} is outside ({thr:.6g}, 1); the scaled process need not converge"
        )
    return ExpectationProcess(
        d, start.label(), scale, B.rows, iterates, limit, gap, thr, warning
    )


def down_convergence_rate(
    K: SimplicialComplex,
    d: int,
    p: float,
    steps: int = 40,
    start: OrientedSimplex | None = None,
) -> ConvergenceResult:
    """Per-step distances of the down expectation process to its limit and the
    fitted ratio against the down-Laplacian spectral-gap bound.
    """
    if start is None:
        start = OrientedSimplex(K.simplices(d)[0], 1)
    proc = expectation_process_down(K, start, d, p, steps)
    dists = np.linalg.norm(proc.iterates - proc.limit[None, :], axis=1)
    D = _max_face_degree(K, d)
    lam = smallest_nonzero(spectrum(down_laplacian(K, d, WeightFunction.ones(K))))
    bound = None
    if lam is not None:
        bound = 1.0 - (1.0 - p) * lam / ((d + 1) * (p * (D - 2) + 1.0))
    return ConvergenceResult(
        dists, _max_successive_ratio(dists), bound, warning=proc.warning
    )


# ---------------------------------------------------------------------------
# graph-type walk on compatibly oriented top simplexes


@dataclass
class GraphTypeWalk:
    matrix: OperatorMatrix
    space: WalkStateSpace
    orientation: OrientationAssignment
    laziness: float
    theta: np.ndarray  # per-state count of non-free faces (detailed-balance weights)
    identity_residual: float | None  # None when free faces preclude the identity


def graph_type_down_walk(
    K: SimplicialComplex, p: float, allow_free_faces: bool = False
) -> GraphTypeWalk:
    """Walk on the top simplexes of an orientable complex, all carrying a
    compatible orientation: stay p, else jump uniformly over the neighbors
    through non-free faces.

    When every (N-1)-face has degree 2 the matrix satisfies
    I - (2(1-p)/(N+1)) L_down (normalized weights, compatible basis) exactly,
    and the identity residual is reported; with free faces it is None.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError("laziness must lie in [0, 1]")
    res = is_orientable(K)
    if not res.verdict:
        raise NotOrientableError(res.certificate)
    free = free_faces(K)
    if free and not allow_free_faces:
        raise FreeFacesError(free)
    N = K.dim
    simps = K.simplices(N)
    n = len(simps)
    signs = res.assignment.signs
    P = np.zeros((n, n))
    theta = np.zeros(n)
    for i, sigma in enumerate(simps):
        theta[i] = sum(1 for _, rho in sigma.faces() if len(K.cofaces(rho)) == 2)
        if theta[i] == 0:
            P[i, i] = 1.0
            continue
        P[i, i] = p
        share = (1.0 - p) / theta[i]
        for (other, rho) in K.down_adjacent(sigma):
            P[i, K.index(other)] += share
    residual = None
    if not free:
        eps = np.array([signs[s] for s in simps], dtype=float)
        lap = down_laplacian(K, N, WeightFunction.normalized(K)).array
        lap_oriented = lap * np.outer(eps, eps)
        target = np.eye(n) - (2.0 * (1.0 - p) / (N + 1.0)) * lap_oriented
        residual = float(np.max(np.abs(P - target)))
    labels = simplex_labels(K, N)
    space = WalkStateSpace("top", N, labels)
    return GraphTypeWalk(
        OperatorMatrix(labels, labels, P), space, res.assignment, p, theta, residual
    )


@dataclass
class StationaryResult:
    distribution: np.ndarray  # spectral projection of the start
    power_iterate: np.ndarray
    agreement: float
    iterations: int


def stationary_distribution(
    M: OperatorMatrix, start: np.ndarray, balance: np.ndarray | None = None
) -> StationaryResult:
    """Limit of a reversible walk from a start distribution.

    Computed twice: by power iteration to a 1e-12 step change, and as the
    spectral projection onto the eigenvalue-one eigenspace. Without `balance`
    the matrix must be symmetric (the closed graph-type case); `balance`
    supplies positive detailed-balance weights that symmetrize
    D^{1/2} M D^{-1/2} otherwise. A smallest eigenvalue at -1 means the chain
    is periodic and has no limit.
    """
    A = M.array
    n = A.shape[0]
    if balance is None:
        root = np.ones(n)
    else:
        balance = np.asarray(balance, dtype=float)
        if balance.shape != (n,) or balance.min() <= 0:
            raise ValueError("balance weights must be positive, one per state")
        root = np.sqrt(balance)
    S = (A * root[:, None]) / root[None, :]
    if float(np.max(np.abs(S - S.T))) > 1e-10:
        raise ValueError("walk matrix is not reversible for the given weights")
    start = np.asarray(start, dtype=float)
    vals, vecs = np.linalg.eigh((S + S.T) / 2.0)
    if vals[0] <= -1.0 + 1e-10:
        raise ValueError(
            "walk is periodic (eigenvalue -1): no stationary limit from a point start"
        )
    ones_mask = np.abs(vals - 1.0) < 1e-9
    V = vecs[:, ones_mask]
    # marginals evolve by A^T = D^{-1/2} S D^{1/2} applied on the left
    projection = (V @ (V.T @ (start / root))) * root
    x = start.copy()
    iterations = 0
    while True:
        iterations += 1
        if iterations > 200_000:
            raise RuntimeError("power iteration failed to settle in 200000 steps")
        nxt = A.T @ x
        done = float(np.max(np.abs(nxt - x))) <= 1e-12
        x = nxt
        if done:
            break
    agreement = float(np.max(np.abs(x - projection)))
    return StationaryResult(projection, x, agreement, iterations)


def graph_type_convergence_rate(
    K: SimplicialComplex, p: float, steps: int = 40, start_index: int = 0
) -> ConvergenceResult:
    """Convergence of the graph-type walk from a point start: total-variation
    and Euclidean distances to the stationary limit, fitted ratio against the
    down-Laplacian gap bound, and the operator-norm identity deviation.
    """
    walk = graph_type_down_walk(K, p)
    A = walk.matrix.array
    n = A.shape[0]
    start = np.zeros(n)
    start[start_index] = 1.0
    stat = stationary_distribution(walk.matrix, start)
    target = stat.distribution
    dists = np.empty(steps + 1)
    tv = np.empty(steps + 1)
    x = start.copy()
    for t in range(steps + 1):
        dists[t] = float(np.linalg.norm(x - target))
        tv[t] = 0.5 * float(np.sum(np.abs(x - target)))
        x = A.T @ x
    N = K.dim
    w = WeightFunction.normalized(K)
    lam = smallest_nonzero(spectrum(down_laplacian(K, N, w), w.diagonal(N)))
    bound = None
    opdev = None
    warning = None
    if p == 1.0:
        warning = "laziness 1 freezes the walk; no convergence"
    if lam is not None:
        rate = 1.0 - (2.0 * (1.0 - p) / (N + 1.0)) * lam
        bound = rate
        # operator-norm identity: || M^t - P || should equal rate^t
        vals, vecs = np.linalg.eigh((A + A.T) / 2.0)
        ones_mask = np.abs(vals - 1.0) < 1e-9
        V = vecs[:, ones_mask]
        proj = V @ V.T
        Mt = np.eye(n)
        opdev = 0.0
        for t in range(min(steps, 25) + 1):
            nrm = float(np.linalg.norm(Mt - proj, 2))
            opdev = max(opdev, abs(nrm - rate ** t))
            Mt = Mt @ A
    return ConvergenceResult(
        dists,
        _max_successive_ratio(dists),
        bound,
        tv_distances=tv,
        opnorm_deviation=opdev,
        warning=warning,
    )


def stationary_independence(
    K: SimplicialComplex, p: float, allow_free_faces: bool = False
) -> tuple[float, np.ndarray]:
    """Largest pairwise deviation between stationary limits over all point
    starts of the graph-type walk, together with the stacked limits.
    """
    walk = graph_type_down_walk(K, p, allow_free_faces)
    balance = np.where(walk.theta > 0, walk.theta, 1.0) if allow_free_faces else None
    n = walk.matrix.shape[0]
    limits = np.empty((n, n))
    for i in range(n):
        e = np.zeros(n)
        e[i] = 1.0
        limits[i] = stationary_distribution(walk.matrix, e, balance).distribution
    dev = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            dev = max(dev, float(np.max(np.abs(limits[i] - limits[j]))))
    return dev, limits


# ---------------------------------------------------------------------------
# homology readout from walk limits


def up_limit_matrix(K: SimplicialComplex) -> OperatorMatrix:
    """Columns are the up expectation-process limits from every canonical
    start (reversed starts give the negated columns).
    """
    d = K.dim - 1
    w = WeightFunction.normalized(K)
    wd = w.diagonal(d)
    Q = spectrum(up_laplacian(K, d, w), wd).kernel_basis()
    limits = wd[:, None] * (Q @ Q.T)
    labels = simplex_labels(K, d)
    return OperatorMatrix(labels, labels, limits)


def down_limit_matrix(K: SimplicialComplex, d: int) -> OperatorMatrix:
    """Columns are the down expectation-process limits from every canonical
    start, computed with constant-one weights.
    """
    Q = spectrum(down_laplacian(K, d, WeightFunction.ones(K))).kernel_basis()
    labels = simplex_labels(K, d)
    return OperatorMatrix(labels, labels, Q @ Q.T)


def projected_limit_span(K: SimplicialComplex, direction: str, d: int | None = None) -> int:
    """Dimension of the span of the walk limits after projecting out the
    non-harmonic directions; this recovers the Betti number of the walk's
    dimension on the complexes where the walk families are defined.

    For the up walk the limits are projected onto the kernel of the down
    Laplacian (normalized weights); for the down walk onto the kernel of the
    up Laplacian (constant-one weights). Rank is counted by singular values
    above 1e-8.
    """
    if direction == "up":
        d = K.dim - 1
        M = up_limit_matrix(K).array
        if d == 0:
            proj = M
        else:
            w = WeightFunction.normalized(K)
            wd = w.diagonal(d)
            Q = spectrum(down_laplacian(K, d, w), wd).kernel_basis()
            proj = Q @ (Q.T @ (wd[:, None] * M))
    elif direction == "down":
        if d is None:
            raise ValueError("down direction needs a dimension")
        M = down_limit_matrix(K, d).array
        Q = spectrum(up_laplacian(K, d, WeightFunction.ones(K))).kernel_basis()
        proj = Q @ (Q.T @ M)
    else:
        raise ValueError("direction must be 'up' or 'down'")
    svals = np.linalg.svd(proj, compute_uv=False)
    return int(np.sum(svals > 1e-8))


def exactness_residuals(K: SimplicialComplex, direction: str, d: int | None = None) -> np.ndarray:
    """Distance of each canonical start's walk limit from the subspace the
    limits fall into when the matching homology vanishes: coboundaries of
    lower cochains for the up walk, adjoint coboundaries of higher cochains
    for the down walk.
    """
    if direction == "up":
        d = K.dim - 1
        M = up_limit_matrix(K).array
        img = coboundary_matrix(K, d - 1).array.astype(float) if d >= 1 else None
    elif direction == "down":
        if d is None:
            raise ValueError("down direction needs a dimension")
        M = down_limit_matrix(K, d).array
        w = WeightFunction.ones(K)
        img = adjoint_coboundary_matrix(K, d, w).array if d < K.dim else None
    else:
        raise ValueError("direction must be 'up' or 'down'")
    if img is None:
        return np.linalg.norm(M, axis=0)
    coeff, *_ = np.linalg.lstsq(img, M, rcond=None)
    return np.linalg.norm(M - img @ coeff, axis=0)
