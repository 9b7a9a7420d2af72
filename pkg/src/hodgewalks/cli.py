"""Command-line front end.

Every command loads a complex (bundled name or facet-file path), runs one
analysis, and emits a report as text, JSON, or CSV. Output is deterministic
for fixed inputs and seed. Exit status: 0 on success, 1 on precondition or
domain failures (with a diagnostic), 2 on usage errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import sys

import numpy as np

from . import corpus, facet_io
from .chains import simplex_labels
from .complexes import OrientedSimplex, Simplex, SimplicialComplex, WeightFunction, weight_by_kind
from .hodge import (
    KERNEL_RTOL,
    betti,
    down_laplacian,
    essential_gap,
    full_laplacian,
    spectral_gap,
    spectrum,
    up_laplacian,
)
from .montecarlo import run_monte_carlo
from .orientation import extend_closing_boundary, free_faces, is_disorientable, is_orientable
from .reports import Report, checked, complex_summary
from .signed_graphs import (
    down_signed_graph,
    is_antibalanced,
    is_balanced,
    signed_laplacian,
    up_signed_graph,
    verify_down_relation,
    verify_up_relation,
)
from .walks import (
    FreeFacesError,
    NotOrientableError,
    down_convergence_rate,
    down_propagation_matrix,
    down_walk_matrix,
    exactness_residuals,
    expectation_process_down,
    expectation_process_up,
    graph_type_convergence_rate,
    graph_type_down_walk,
    stationary_distribution,
    stationary_independence,
    up_convergence_rate,
    up_transition_operator,
    up_walk_matrix,
)

IDENTITY_TOL = 1e-12


class UsageError(Exception):
    pass


def _add_common(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--complex", required=True, metavar="NAME|PATH",
                    help="bundled complex name or facet file path")
    sp.add_argument("--dim", type=int, default=None)
    sp.add_argument("-p", "--laziness", type=float, default=0.5)
    sp.add_argument("--steps", type=int, default=50)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--chains", type=int, default=100_000)
    sp.add_argument("--weights", choices=["one", "normalized", "recip-deg"],
                    default="normalized")
    sp.add_argument("--format", choices=["json", "csv", "text"], default="text")
    sp.add_argument("--start", default=None, metavar="LABEL",
                    help="simplex label like 1,2 or oriented like -1,2")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hodgewalks",
        description="Spectral and random-walk analysis of simplicial complexes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, desc in [
        ("summary", "simplex counts, purity, components"),
        ("betti", "homology ranks by two independent routes"),
        ("spectrum", "Laplacian eigenvalues"),
        ("gaps", "spectral gap and essential gap at codimension one"),
        ("signed", "signed adjacency graph, balance and antibalance"),
        ("orientable", "compatible-orientation verdict"),
        ("disorientable", "anticompatible-orientation verdict"),
        ("walk-up", "oriented codimension-one walk and expectation process"),
        ("walk-down", "absorbing oriented walk and expectation process"),
        ("walk-graph", "top-simplex walk, stationary distribution"),
        ("converge", "distance-to-limit decay against the spectral bound"),
        ("montecarlo", "simulated marginals against exact matrix powers"),
        ("verify-identities", "all operator identities on one complex"),
    ]:
        sp = sub.add_parser(name, help=desc)
        _add_common(sp)
        if name == "spectrum":
            sp.add_argument("--kind", choices=["up", "down", "full"], default="full")
        if name == "signed":
            sp.add_argument("--direction", choices=["up", "down"], default="down")
        if name in ("converge", "montecarlo"):
            sp.add_argument("--walk", choices=["up", "down", "graph"], required=True)
        if name == "walk-graph":
            sp.add_argument("--close-boundary", action="store_true",
                            help="cone off free faces before walking")
    return parser


def load_complex(spec_str: str) -> tuple[SimplicialComplex, str]:
    if spec_str in corpus.names():
        return corpus.load(spec_str), spec_str
    try:
        return facet_io.load(spec_str), spec_str
    except FileNotFoundError:
        known = ", ".join(corpus.names())
        raise ValueError(
            f"{spec_str!r} is neither a bundled complex ({known}) nor a readable file"
        ) from None


def parse_start(label: str, d: int) -> OrientedSimplex:
    sign = 1
    body = label
    if label and label[0] in "+-":
        sign = 1 if label[0] == "+" else -1
        body = label[1:]
    try:
        verts = tuple(sorted(int(t) for t in body.split(",")))
    except ValueError:
        raise ValueError(f"cannot parse start label {label!r}") from None
    s = Simplex(verts)
    if s.dim != d:
        raise ValueError(f"start {label!r} has dimension {s.dim}, walk needs {d}")
    return OrientedSimplex(s, sign)


def _weights(K: SimplicialComplex, kind: str) -> WeightFunction:
    return weight_by_kind(K, kind)


# ---------------------------------------------------------------------------
# command implementations, each returning (Report, exit_code)


def cmd_summary(K, name, args):
    return Report(complex=complex_summary(K, name)), 0


def cmd_betti(K, name, args):
    w = _weights(K, args.weights)
    values = [betti(K, d, w) for d in range(K.dim + 1)]
    rep = Report(
        complex=complex_summary(K, name),
        betti={"values": values, "weights": args.weights, "tolerance": 1e-8},
    )
    return rep, 0


def cmd_spectrum(K, name, args):
    w = _weights(K, args.weights)
    dims = [args.dim] if args.dim is not None else list(range(K.dim + 1))
    table = {}
    for d in dims:
        if not 0 <= d <= K.dim:
            raise ValueError(f"dimension {d} out of range 0..{K.dim}")
        if args.kind == "up":
            L = up_laplacian(K, d, w)
        elif args.kind == "down":
            if d == 0:
                raise ValueError("down Laplacian is undefined at dimension 0")
            L = down_laplacian(K, d, w)
        else:
            L = full_laplacian(K, d, w)
        dec = spectrum(L, w.diagonal(d))
        table[str(d)] = {
            "eigenvalues": dec.eigenvalues,
            "kernel_dim": dec.kernel_dim,
            "kernel_tolerance": dec.tolerance,
        }
    rep = Report(
        complex=complex_summary(K, name),
        spectra={"kind": args.kind, "weights": args.weights, "dims": table},
    )
    return rep, 0


def cmd_gaps(K, name, args):
    w = _weights(K, args.weights)
    lam = spectral_gap(K, w)
    lam_ess = essential_gap(K, w)
    rep = Report(
        complex=complex_summary(K, name),
        spectra={
            "weights": args.weights,
            "dim": K.dim - 1,
            "spectral_gap": lam,
            "essential_gap": lam_ess,
            "kernel_tolerance": KERNEL_RTOL,
        },
    )
    return rep, 0


def _balance_section(G):
    bal = is_balanced(G)
    anti = is_antibalanced(G)
    section = {
        "vertices": [v.label() for v in G.vertices],
        "edges": [[G.vertices[i].label(), G.vertices[j].label(), s] for i, j, s in G.edges],
        "balanced": bal.balanced,
        "antibalanced": anti.balanced,
    }
    if bal.balanced:
        section["switching"] = sorted(G.vertices[i].label() for i in bal.switching.flipped)
    else:
        section["negative_cycle"] = [G.vertices[i].label() for i in bal.negative_cycle]
    if G.edges and all(d > 0 for d in G.degrees()):
        vals = np.linalg.eigvalsh(_signed_sym(G))
        section["signed_laplacian_range"] = checked([float(vals[0]), float(vals[-1])], 1e-10)
    return section


def _signed_sym(G):
    L = signed_laplacian(G).array
    deg = np.array([d for d in G.degrees()], dtype=float)
    root = np.sqrt(deg)
    return (L * root[:, None]) / root[None, :]


def cmd_signed(K, name, args):
    if args.direction == "up":
        d = args.dim if args.dim is not None else K.dim - 1
        G = up_signed_graph(K, d)
    else:
        d = args.dim if args.dim is not None else K.dim
        G = down_signed_graph(K, d)
    section = {"direction": args.direction, "dim": d, **_balance_section(G)}
    rep = Report(complex=complex_summary(K, name), signed=section)
    return rep, 0


def cmd_orientable(K, name, args):
    res = is_orientable(K)
    section: dict = {"orientable": res.verdict}
    if res.verdict:
        section["orientation"] = {
            s.label(): sign for s, sign in sorted(res.assignment.signs.items())
        }
    else:
        section["negative_cycle"] = [s.label() for s in res.certificate]
    rep = Report(complex=complex_summary(K, name), orientable=section)
    return rep, 0


def cmd_disorientable(K, name, args):
    res = is_disorientable(K)
    section: dict = {"disorientable": res.verdict}
    if res.verdict:
        section["orientation"] = {
            s.label(): sign for s, sign in sorted(res.assignment.signs.items())
        }
    else:
        section["negative_cycle"] = [s.label() for s in res.certificate]
    rep = Report(complex=complex_summary(K, name), orientable=section)
    return rep, 0


def cmd_walk_up(K, name, args):
    p = args.laziness
    d = K.dim - 1
    start = parse_start(args.start, d) if args.start else OrientedSimplex(K.simplices(d)[0], 1)
    A, residual = up_transition_operator(K, p)
    proc = expectation_process_up(K, start, p, args.steps)
    P, space = up_walk_matrix(K, p)
    warnings = [proc.warning] if proc.warning else []
    section = {
        "family": "up",
        "dim": d,
        "laziness": p,
        "states": space.labels,
        "identity_residual": checked(residual, IDENTITY_TOL),
        "scale": proc.scale,
        "start": proc.start,
        "limit": {lab: v for lab, v in zip(proc.labels, proc.limit)},
        "iterate_gap": checked(proc.iterate_gap, 1e-8),
        "exactness_residuals": {
            lab: v for lab, v in zip(simplex_labels(K, d), exactness_residuals(K, "up"))
        },
    }
    rep = Report(complex=complex_summary(K, name), walks=section, warnings=warnings)
    return rep, 0


def cmd_walk_down(K, name, args):
    p = args.laziness
    d = args.dim if args.dim is not None else 1
    start = parse_start(args.start, d) if args.start else OrientedSimplex(K.simplices(d)[0], 1)
    B, residual = down_propagation_matrix(K, d, p)
    proc = expectation_process_down(K, start, d, p, args.steps)
    P, space = down_walk_matrix(K, d, p)
    marg = np.zeros(space.size)
    marg[space.labels.index(("+" if start.sign > 0 else "-") + start.simplex.label())] = 1.0
    for _ in range(args.steps):
        marg = marg @ P.array
    warnings = [proc.warning] if proc.warning else []
    section = {
        "family": "down",
        "dim": d,
        "laziness": p,
        "states": space.labels,
        "identity_residual": checked(residual, IDENTITY_TOL),
        "scale": proc.scale,
        "start": proc.start,
        "limit": {lab: v for lab, v in zip(proc.labels, proc.limit)},
        "iterate_gap": checked(proc.iterate_gap, 1e-8),
        "death_mass": float(marg[-1]),
        "exactness_residuals": {
            lab: v
            for lab, v in zip(simplex_labels(K, d), exactness_residuals(K, "down", d))
        },
    }
    rep = Report(complex=complex_summary(K, name), walks=section, warnings=warnings)
    return rep, 0


def cmd_walk_graph(K, name, args):
    p = args.laziness
    warnings: list[str] = []
    extended = False
    original_labels = None
    if args.close_boundary and free_faces(K):
        original_labels = [s.label() for s in K.simplices(K.dim)]
        K = extend_closing_boundary(K)
        extended = True
        warnings.append("free faces coned off; walking on the extended complex")
    walk = graph_type_down_walk(K, p, allow_free_faces=extended)
    balance = np.where(walk.theta > 0, walk.theta, 1.0) if extended else None
    labels = walk.matrix.rows
    n = len(labels)
    if args.start:
        target = parse_start(args.start, K.dim).simplex.label()
        try:
            start_index = labels.index(target)
        except ValueError:
            raise ValueError(f"start {target!r} is not a top simplex") from None
    else:
        start_index = 0
    start_vec = np.zeros(n)
    start_vec[start_index] = 1.0
    stat = stationary_distribution(walk.matrix, start_vec, balance)
    dev, _ = stationary_independence(K, p, allow_free_faces=extended)
    section = {
        "family": "graph",
        "dim": K.dim,
        "laziness": p,
        "states": list(labels),
        "orientation": {s.label(): sign for s, sign in sorted(walk.orientation.signs.items())},
        "identity_residual": None
        if walk.identity_residual is None
        else checked(walk.identity_residual, IDENTITY_TOL),
        "start": labels[start_index],
        "stationary": {lab: v for lab, v in zip(labels, stat.distribution)},
        "power_vs_projection": checked(stat.agreement, 1e-8),
        "start_independence": checked(dev, 1e-8),
    }
    if extended:
        keep = [i for i, lab in enumerate(labels) if lab in original_labels]
        restricted = stat.distribution[keep]
        mass = float(restricted.sum())
        section["unrestricted"] = section.pop("stationary")
        section["restricted"] = {
            "mass": mass,
            "marginals": {labels[i]: float(v) for i, v in zip(keep, restricted)},
            "renormalized": {
                labels[i]: float(v / mass) if mass > 0 else None
                for i, v in zip(keep, restricted)
            },
        }
    rep = Report(complex=complex_summary(K, name), walks=section, warnings=warnings)
    return rep, 0


def cmd_converge(K, name, args):
    p = args.laziness
    if args.walk == "up":
        start = (
            parse_start(args.start, K.dim - 1)
            if args.start
            else OrientedSimplex(K.simplices(K.dim - 1)[0], 1)
        )
        res = up_convergence_rate(K, p, args.steps, start)
    elif args.walk == "down":
        d = args.dim if args.dim is not None else 1
        start = (
            parse_start(args.start, d) if args.start else OrientedSimplex(K.simplices(d)[0], 1)
        )
        res = down_convergence_rate(K, d, p, args.steps, start)
    else:
        res = graph_type_convergence_rate(K, p, args.steps)
    warnings = [res.warning] if res.warning else []
    section = {
        "family": args.walk,
        "laziness": p,
        "distances": res.distances,
        "measured_rate": res.measured_rate,
        "bound_rate": res.bound_rate,
        "rate_ok": None
        if res.bound_rate is None
        else bool(res.measured_rate <= res.bound_rate + 1e-6),
        "tolerance": 1e-6,
    }
    if res.tv_distances is not None:
        section["tv_distances"] = res.tv_distances
    if res.opnorm_deviation is not None:
        section["opnorm_identity_deviation"] = checked(res.opnorm_deviation, 1e-8)
    rep = Report(complex=complex_summary(K, name), walks=section, warnings=warnings)
    return rep, 0


def cmd_montecarlo(K, name, args):
    p = args.laziness
    if args.walk == "up":
        P, space = up_walk_matrix(K, p)
        d = K.dim - 1
    elif args.walk == "down":
        d = args.dim if args.dim is not None else 1
        P, space = down_walk_matrix(K, d, p)
    else:
        walk = graph_type_down_walk(K, p)
        P, space = walk.matrix, walk.space
    if args.start:
        if args.walk == "graph":
            idx = space.labels.index(parse_start(args.start, K.dim).simplex.label())
        elif space.kind == "vertices":
            idx = space.labels.index(parse_start(args.start, 0).simplex.label())
        else:
            s = parse_start(args.start, space.dim)
            idx = space.labels.index(("+" if s.sign > 0 else "-") + s.simplex.label())
    else:
        idx = 0
    res = run_monte_carlo(P, idx, args.steps, seed=args.seed, chains=args.chains)
    section = {
        "family": args.walk,
        "laziness": p,
        "steps": args.steps,
        "chains": args.chains,
        "seed": args.seed,
        "start": space.labels[idx],
        "max_abs_deviation": checked(res.max_abs_deviation, res.sigma_bound),
        "within_bound": res.within_bound,
        "empirical": {lab: v for lab, v in zip(space.labels, res.empirical[-1])},
        "exact": {lab: v for lab, v in zip(space.labels, res.exact[-1])},
    }
    rep = Report(complex=complex_summary(K, name), walks=section)
    return rep, 0


def cmd_verify_identities(K, name, args):
    p = args.laziness
    rows: dict[str, dict] = {}
    ok = True

    def record(label: str, residual: float, tol: float = IDENTITY_TOL):
        nonlocal ok
        rows[label] = {"residual": residual, "tolerance": tol, "ok": bool(residual <= tol)}
        ok = ok and residual <= tol

    if K.is_pure() and K.dim >= 1:
        _, res = up_transition_operator(K, p)
        record("up_walk_affine_identity", res)
    for d in range(1, K.dim + 1):
        if max(len(K.cofaces(r)) for r in K.simplices(d - 1)) >= 2:
            _, res = down_propagation_matrix(K, d, p)
            record(f"down_propagation_affine_identity_d{d}", res)
    for d in range(0, K.dim):
        if all(f.dim == d + 1 for f in K.facets()):
            record(f"up_signed_relation_d{d}", verify_up_relation(K, d))
    if K.dim >= 1 and all(
        len(K.cofaces(r)) == 2 for r in K.simplices(K.dim - 1)
    ):
        record("down_signed_relation_top", verify_down_relation(K))
        if is_orientable(K).verdict:
            walk = graph_type_down_walk(K, p)
            record("graph_walk_affine_identity", float(walk.identity_residual))
    rep = Report(
        complex=complex_summary(K, name),
        walks={"laziness": p, "identities": rows, "all_ok": ok},
    )
    return rep, 0 if ok else 1


COMMANDS = {
    "summary": cmd_summary,
    "betti": cmd_betti,
    "spectrum": cmd_spectrum,
    "gaps": cmd_gaps,
    "signed": cmd_signed,
    "orientable": cmd_orientable,
    "disorientable": cmd_disorientable,
    "walk-up": cmd_walk_up,
    "walk-down": cmd_walk_down,
    "walk-graph": cmd_walk_graph,
    "converge": cmd_converge,
    "montecarlo": cmd_montecarlo,
    "verify-identities": cmd_verify_identities,
}


def _csv_output(command: str, rep: Report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    doc = rep.to_dict()
    if command == "converge":
        walks = doc["walks"]
        writer.writerow(["t", "distance", "bound"])
        bound = walks["bound_rate"]
        for t, dist in enumerate(walks["distances"]):
            writer.writerow([t, repr(dist), "" if bound is None else repr(bound ** t)])
    elif command == "betti":
        writer.writerow(["dim", "betti"])
        for d, v in enumerate(doc["betti"]["values"]):
            writer.writerow([d, v])
    elif command == "spectrum":
        writer.writerow(["dim", "index", "eigenvalue"])
        for d, info in doc["spectra"]["dims"].items():
            for i, v in enumerate(info["eigenvalues"]):
                writer.writerow([d, i, repr(v)])
    else:
        raise UsageError(f"csv output is not defined for {command!r}")
    return buf.getvalue()


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        K, name = load_complex(args.complex)
        rep, code = COMMANDS[args.command](K, name, args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotOrientableError as exc:
        rep = Report(
            complex={"name": args.complex},
            orientable={
                "orientable": False,
                "negative_cycle": [s.label() for s in exc.certificate],
            },
            warnings=[str(exc)],
        )
        out = rep.to_json() if args.format == "json" else rep.to_text()
        sys.stdout.write(out)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError, FileNotFoundError, FreeFacesError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        sys.stdout.write(rep.to_json())
    elif args.format == "csv":
        try:
            sys.stdout.write(_csv_output(args.command, rep))
        except UsageError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(rep.to_text())
    return code


if __name__ == "__main__":
    sys.exit(main())
