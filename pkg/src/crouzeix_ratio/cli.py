"""Command-line drivers.

Every subcommand writes its results under ``--out`` and exits with 0 only
when all of its in-run checks pass (1 on a failed check, 2 on bad input).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import io
from .errors import CrouzeixError
from .experiments import report
from .matcore import op_norm
from .numrange import build_range
from .ratio import ratio_lb_poly
from .structure import boundary_split, similarity_construction


def _floats(s):
    return [float(x) for x in s.split(",") if x.strip()]


def _ints(s):
    return [int(x) for x in s.split(",") if x.strip()]


def _parent(path):
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    return path


# -- subcommands ----------------------------------------------------------------


def cmd_range(args):
    a = io.load_matrix(args.matrix)
    r = build_range(a, args.grid)
    rows = [[t, h, z.real, z.imag] for t, h, z in zip(r.thetas, r.support, r.boundary_pts)]
    report.write_csv(_parent(args.out), ["theta", "support", "re", "im"], rows)
    if args.svg:
        report.plot_range(_parent(args.svg), r, np.linalg.eigvals(a))
    return True


def cmd_ratio(args):
    a = io.load_matrix(args.matrix)
    est = ratio_lb_poly(a, args.degree, args.grid, args.restarts, args.seed)
    report.write_json(_parent(args.out), est.to_dict())
    if args.svg:
        report.plot_range(_parent(args.svg), build_range(a, args.grid), np.linalg.eigvals(a), est.witness)
    return True


def cmd_split(args):
    a = io.load_matrix(args.matrix)
    s = boundary_split(a, args.tol, args.grid)
    out = s.to_dict()
    nrm = max(op_norm(a), 1e-300)
    out["reconstruction_residual"] = op_norm(s.reconstruct() - a)
    out["norm"] = nrm
    ok = out["coupling_residual"] <= args.tol * nrm and out["reconstruction_residual"] <= 1e-9 * nrm
    out["passed"] = ok
    report.write_json(_parent(args.out), out)
    return ok


def cmd_stability(args):
    t = io.load_matrix(args.t)
    t_n = io.load_matrix(args.tn)
    u, v = io.load_contours(args.contours)
    sim = similarity_construction(t, t_n, u, v)
    out = sim.to_dict()
    ok = (out["idempotency"] <= 1e-8 and out["cross"] <= 1e-8
          and out["off_block_residual"] <= 1e-8 * max(op_norm(t_n), 1e-300))
    out["passed"] = ok
    report.write_json(_parent(args.out), out)
    return ok


def cmd_discontinuity(args):
    from .experiments.discontinuity import DiscontinuityConfig, discontinuity_demo

    cfg = DiscontinuityConfig(degree=args.degree, grid=args.grid, restarts=args.restarts, seed=args.seed)
    rep = discontinuity_demo(_floats(args.alphas), cfg)
    report.emit_report({"discontinuity": rep}, args.out)
    report.plot_alpha_sweep(Path(args.out) / "alpha_sweep.svg", rep)
    return rep.passed


def cmd_probe(args):
    from .experiments.probes import ProbeConfig, semicontinuity_probe

    a = io.load_matrix(args.matrix)
    cfg = ProbeConfig(degree=args.degree, grid=args.grid, restarts=args.restarts)
    rep = semicontinuity_probe(a, _ints(args.ns), args.seed, cfg)
    report.emit_report({"probe": rep}, args.out)
    return rep.passed


def cmd_capacity(args):
    from .experiments.capacity import RegionK, fekete_capacity

    est = fekete_capacity(RegionK(), _ints(args.points), args.samples)
    lo, hi = est.capacity_bounds
    # d_n approximates c(K) from above: every value stays below diam(K) = 2,
    # only the final one has to land inside the sandwich bounds
    ok = est.monotone() and all(d <= 2.0 for _, d in est.history) and lo <= est.d_n <= hi
    report.emit_report({"capacity": est, "passed": ok}, args.out)
    report.plot_fekete(Path(args.out) / "fekete_K.svg", est)
    return ok


def cmd_induction(args):
    from .experiments.induction import InductionConfig, induction_sweep

    rep = induction_sweep(InductionConfig(n_list=_ints(args.ns), seed=args.seed))
    report.emit_report({"induction": rep}, args.out)
    return rep.passed


# -- parser -------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="crouzeix-ratio", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("range", help="numerical range polygons")
    s.add_argument("--matrix", required=True)
    s.add_argument("--grid", type=int, default=1024)
    s.add_argument("--out", required=True, help="CSV path")
    s.add_argument("--svg")
    s.set_defaults(func=cmd_range)

    s = sub.add_parser("ratio", help="certified lower bound on the Crouzeix ratio")
    s.add_argument("--matrix", required=True)
    s.add_argument("--degree", type=int, default=8)
    s.add_argument("--grid", type=int, default=1024)
    s.add_argument("--restarts", type=int, default=32)
    s.add_argument("--seed", type=int, default=7)
    s.add_argument("--out", required=True, help="JSON path")
    s.add_argument("--svg")
    s.set_defaults(func=cmd_ratio)

    s = sub.add_parser("split", help="boundary-eigenvalue block splitting")
    s.add_argument("--matrix", required=True)
    s.add_argument("--tol", type=float, default=1e-8)
    s.add_argument("--grid", type=int, default=1024)
    s.add_argument("--out", required=True, help="JSON path")
    s.set_defaults(func=cmd_split)

    s = sub.add_parser("stability", help="similarity from Riesz projections")
    s.add_argument("--t", required=True)
    s.add_argument("--tn", required=True)
    s.add_argument("--contours", required=True)
    s.add_argument("--out", required=True, help="JSON path")
    s.set_defaults(func=cmd_stability)

    def common(s, degree=8, restarts=8):
        s.add_argument("--degree", type=int, default=degree)
        s.add_argument("--grid", type=int, default=1024)
        s.add_argument("--restarts", type=int, default=restarts)
        s.add_argument("--out", required=True, help="output directory")

    s = sub.add_parser("demo-discontinuity", help="ratio jump at the self-adjoint A_0")
    s.add_argument("--alphas", default="1,0.5,0.25,0.125")
    s.add_argument("--seed", type=int, default=7)
    common(s)
    s.set_defaults(func=cmd_discontinuity)

    s = sub.add_parser("probe-semicontinuity", help="estimates along A + E/n")
    s.add_argument("--matrix", required=True)
    s.add_argument("--ns", default="10,100,1000")
    s.add_argument("--seed", type=int, default=7)
    common(s, restarts=16)
    s.set_defaults(func=cmd_probe)

    s = sub.add_parser("capacity", help="Fekete estimate of the capacity of K")
    s.add_argument("--points", default="8,16,32,64")
    s.add_argument("--samples", type=int, default=512, help="boundary samples per piece")
    s.add_argument("--out", required=True, help="output directory")
    s.set_defaults(func=cmd_capacity)

    s = sub.add_parser("induction-sweep", help="bound chain on perturbations of [1] + J")
    s.add_argument("--ns", default="10,100,1000")
    s.add_argument("--seed", type=int, default=7)
    s.add_argument("--out", required=True, help="output directory")
    s.set_defaults(func=cmd_induction)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        ok = args.func(args)
    except AssertionError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    except (CrouzeixError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not ok:
        print("check failed; see the report", file=sys.stderr)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
