"""JSON interchange for complex matrices: row-major ``[re, im]`` pairs."""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np


def matrix_to_json(m) -> list[list[float]]:
    m = np.asarray(m, dtype=np.complex128)
    return [[float(z.real), float(z.imag)] for z in m.ravel()]


def matrix_from_json(pairs, dim: int | None = None) -> np.ndarray:
    flat = np.array([complex(re, im) for re, im in pairs], dtype=np.complex128)
    if dim is None:
        dim = int(round(len(flat) ** 0.5))
    if dim * dim != len(flat):
        raise ValueError(f"{len(flat)} entries do not form a {dim} x {dim} matrix")
    return flat.reshape(dim, dim)


def dumps(payload) -> str:
    # json renders floats with repr, the shortest round-tripping decimal
    return json.dumps(payload, indent=1, ensure_ascii=False, allow_nan=False)


def load_matrix_file(path) -> tuple[np.ndarray, dict]:
    """Read a matrix written by ``build``; returns the matrix and the full record."""
    record = json.loads(Path(path).read_text(encoding="utf-8"))
    return matrix_from_json(record["matrix"], record.get("dim")), record
