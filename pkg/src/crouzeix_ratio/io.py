"""JSON formats for matrices and contour pairs.

Matrix: ``{"n": int, "re": [[...]], "im": [[...]]}``, row-major, both n x n.
Contours: ``{"u": {"center": [re, im], "radius": r, "nodes": k}, "v": {...}}``.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import InputError, ReportIOError
from .structure import Contour


def _load(path):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise ReportIOError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from exc


def matrix_from_dict(d) -> np.ndarray:
    if not isinstance(d, dict) or not {"n", "re", "im"} <= set(d):
        raise InputError('matrix JSON needs keys "n", "re" and "im"')
    n = d["n"]
    if not isinstance(n, int) or n < 1:
        raise InputError(f'"n" must be a positive integer, got {n!r}')
    parts = []
    for key in ("re", "im"):
        rows = d[key]
        if not isinstance(rows, list) or len(rows) != n:
            got = len(rows) if isinstance(rows, list) else type(rows).__name__
            raise InputError(f'"{key}" must have {n} rows, got {got}')
        for i, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != n:
                got = len(row) if isinstance(row, list) else type(row).__name__
                raise InputError(f'"{key}" row {i} must have {n} entries, got {got}')
        try:
            parts.append(np.array(rows, dtype=float))
        except (TypeError, ValueError) as exc:
            raise InputError(f'"{key}" entries must be real numbers') from exc
    return parts[0] + 1j * parts[1]


def matrix_to_dict(a) -> dict:
    a = np.asarray(a, dtype=complex)
    return {"n": int(a.shape[0]), "re": a.real.tolist(), "im": a.imag.tolist()}


def load_matrix(path) -> np.ndarray:
    return matrix_from_dict(_load(path))


def save_matrix(path, a):
    try:
        Path(path).write_text(json.dumps(matrix_to_dict(a), sort_keys=True) + "\n")
    except OSError as exc:
        raise ReportIOError(f"cannot write {path}: {exc}") from exc


def contour_from_dict(d) -> Contour:
    try:
        re, im = d["center"]
        return Contour(complex(re, im), float(d["radius"]), int(d.get("nodes", 64)))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError('contour needs "center": [re, im] and "radius"') from exc


def load_contours(path):
    d = _load(path)
    if not isinstance(d, dict) or not {"u", "v"} <= set(d):
        raise InputError('contour JSON needs keys "u" and "v"')
    return contour_from_dict(d["u"]), contour_from_dict(d["v"])
