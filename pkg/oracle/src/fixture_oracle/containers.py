"""Dense-matrix JSON container shared with the main package."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

SCHEMA_VERSION = 1


def matrix_to_json(m: np.ndarray) -> dict:
    m = np.asarray(m, dtype=float)
    out = {"n": m.shape[0], "weights": [float(x) for x in m.ravel(order="C")]}
    if m.shape[1] != m.shape[0]:
        out["cols"] = m.shape[1]
    return out


def matrix_from_json(d: dict) -> np.ndarray:
    n = int(d["n"])
    cols = int(d.get("cols", n))
    return np.asarray(d["weights"], dtype=float).reshape((n, cols), order="C")


def dump_json(obj, path=None) -> str:
    text = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def load_json(path):
    return json.loads(Path(path).read_text(encoding="utf-8"))
