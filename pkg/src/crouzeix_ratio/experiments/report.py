"""Report emission: sorted-key JSON, CSV series and SVG plots.

All outputs are byte-reproducible: floats go through ``repr``, JSON keys
are sorted and the SVG writer uses a fixed hash salt with no date stamp.
"""

from __future__ import annotations

import csv
import json
import os
from pathlib import Path

import numpy as np

from ..errors import ReportIOError

SVG_SALT = "crouzeix-ratio"


def _plain(obj):
    """Convert numpy scalars, arrays and complex values to JSON-ready objects."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        obj = float(obj)
    if isinstance(obj, float) and not np.isfinite(obj):
        return None
    return obj


def dumps(obj) -> str:
    return json.dumps(_plain(obj), sort_keys=True, indent=2) + "\n"


def _ensure_dir(path):
    path = Path(path)
    try:
        path.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise ReportIOError(f"cannot create output directory {path}: {exc}") from exc
    if not os.access(path, os.W_OK):
        raise ReportIOError(f"output directory {path} is not writable")
    return path


def write_json(path, obj):
    try:
        Path(path).write_text(dumps(obj))
    except OSError as exc:
        raise ReportIOError(f"cannot write {path}: {exc}") from exc


def write_csv(path, header, rows):
    try:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(header)
            for row in rows:
                w.writerow(["" if v is None else repr(float(v)) if isinstance(v, (float, np.floating)) else v
                            for v in row])
    except OSError as exc:
        raise ReportIOError(f"cannot write {path}: {exc}") from exc


# -- plots ----------------------------------------------------------------------


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    plt.rcParams["svg.hashsalt"] = SVG_SALT
    plt.rcParams["svg.fonttype"] = "none"
    return plt


def _save_svg(fig, path):
    plt = _pyplot()
    try:
        fig.savefig(path, format="svg", metadata={"Date": None})
    except OSError as exc:
        raise ReportIOError(f"cannot write {path}: {exc}") from exc
    finally:
        plt.close(fig)


def _closed(poly):
    poly = np.asarray(poly, dtype=complex)
    return np.append(poly, poly[:1])


def plot_range(path, r, eigenvalues=(), witness=None):
    """Inner and outer polygons of W(A), eigenvalues, and ``|p|`` along the boundary."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(5, 5))
    outer = _closed(r.outer_polygon)
    inner = _closed(r.inner_polygon)
    ax.plot(outer.real, outer.imag, color="0.6", lw=1, gid="outer_polygon")
    ax.plot(inner.real, inner.imag, color="k", lw=1, gid="inner_polygon")
    if witness is not None:
        b = r.boundary_pts
        mod = np.abs(witness(b))
        sc = ax.scatter(b.real, b.imag, c=mod, s=6, cmap="viridis", gid="witness_modulus")
        fig.colorbar(sc, ax=ax, label="|p| on boundary")
    ev = np.asarray(eigenvalues, dtype=complex)
    if ev.size:
        ax.plot(ev.real, ev.imag, "rx", gid="eigenvalues")
    ax.set_aspect("equal")
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    _save_svg(fig, path)


def plot_alpha_sweep(path, report):
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.semilogx(report.alphas, report.psi_candidate, "o-", label="tanh witness", gid="psi_candidate")
    if any(np.isfinite(report.psi_poly)):
        ax.semilogx(report.alphas, report.psi_poly, "s--", label="polynomial search", gid="psi_poly")
    ax.axhline(np.pi / 2, color="0.5", lw=0.8, ls=":", gid="half_pi")
    ax.axhline(report.psi_a0, color="r", lw=0.8, gid="psi_a0")
    ax.set_xlabel("alpha")
    ax.set_ylabel("ratio lower bound")
    ax.legend(loc="lower right")
    _save_svg(fig, path)


def plot_fekete(path, estimate):
    """Fekete points over the three semi-disks of K."""
    plt = _pyplot()
    from matplotlib.patches import Wedge

    fig, ax = plt.subplots(figsize=(5, 5))
    for gid, (c, rad, t0, t1) in {
        "semidisk_left": ((0, 0), 1.0, 90, 270),
        "semidisk_upper": ((0, 0.5), 0.5, -90, 90),
        "semidisk_lower": ((0, -0.5), 0.5, -90, 90),
    }.items():
        w = Wedge(c, rad, t0, t1, fill=False, ec="k", lw=1)
        w.set_gid(gid)
        ax.add_patch(w)
    pts = np.asarray(estimate.fekete_pts)
    ax.plot(pts.real, pts.imag, "o", ms=3, color="tab:blue", gid="fekete_points")
    ax.set_xlim(-1.1, 0.6)
    ax.set_ylim(-1.1, 1.1)
    ax.set_aspect("equal")
    ax.set_title(f"n = {estimate.n_points}, d_n = {estimate.d_n:.4f}")
    _save_svg(fig, path)


# -- entry point ------------------------------------------------------------------


def emit_report(results: dict, out_dir, name="report") -> dict:
    """Write ``<name>.json`` plus one CSV per table exposed by the results.

    ``results`` maps labels to report objects (anything with ``to_dict``)
    or plain JSON-ready values. Objects with ``tables()`` contribute CSV
    files named after each table. Returns a mapping of written paths.
    """
    out = _ensure_dir(out_dir)
    payload = {}
    paths = {}
    for key in sorted(results):
        val = results[key]
        payload[key] = val.to_dict() if hasattr(val, "to_dict") else val
        if hasattr(val, "tables"):
            for tname, (header, rows) in sorted(val.tables().items()):
                p = out / f"{tname}.csv"
                write_csv(p, header, rows)
                paths[tname] = str(p)
    p = out / f"{name}.json"
    write_json(p, payload)
    paths[name] = str(p)
    return paths
