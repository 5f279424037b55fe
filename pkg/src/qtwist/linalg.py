"""Dense complex matrix kernel on multi-leg tensor spaces.

Legs are numbered from 1, as in the usual ``R_{13}`` subscript notation.
A permutation of ``m`` legs is a tuple ``perm`` with ``perm[k - 1]`` the
position that leg ``k`` is moved to.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

DEFAULT_TOL = 1e-9
DEFAULT_CLUSTER_TOL = 1e-7
MAX_DIM = 4096


class SingularMatrixError(ValueError):
    """Raised when a matrix is too ill-conditioned to invert."""

    def __init__(self, condition: float):
        super().__init__(f"matrix is numerically singular (condition estimate {condition:.3e})")
        self.condition = condition


@dataclass(frozen=True)
class LegSpace:
    num_legs: int
    leg_dim: int

    def __post_init__(self):
        if self.num_legs < 0 or self.leg_dim < 1:
            raise ValueError(f"invalid leg space {self.num_legs} x {self.leg_dim}")

    @property
    def dim(self) -> int:
        return self.leg_dim**self.num_legs


def as_cmatrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def kron(a, b) -> np.ndarray:
    """Kronecker product; composite row index is ``a_row * b.rows + b_row``."""
    return np.kron(as_cmatrix(a), as_cmatrix(b))


def frob(a) -> float:
    return float(np.linalg.norm(a))


def rel_diff(a, b) -> float:
    """Scale-free distance ``||a - b||_F / max(1, ||a||_F)``."""
    a = np.asarray(a)
    return frob(a - b) / max(1.0, frob(a))


def approx_equal(a, b, tol: float = DEFAULT_TOL) -> bool:
    a, b = np.asarray(a), np.asarray(b)
    return a.shape == b.shape and rel_diff(a, b) <= tol


def check_perm(perm: Sequence[int], m: int | None = None) -> tuple[int, ...]:
    perm = tuple(int(p) for p in perm)
    if m is None:
        m = len(perm)
    if len(perm) != m or sorted(perm) != list(range(1, m + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{m}")
    return perm


def compose_perm(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """Mapping composition ``p o q`` (``q`` applied first)."""
    return tuple(p[k - 1] for k in q)


def invert_perm(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for k, pk in enumerate(p, start=1):
        inv[pk - 1] = k
    return tuple(inv)


def perm_indices(perm: Sequence[int], space: LegSpace) -> np.ndarray:
    """Index map ``idx`` of the permutation operator: ``P[idx[i], i] = 1``."""
    perm = check_perm(perm, space.num_legs)
    m, n = space.num_legs, space.leg_dim
    grid = np.arange(space.dim).reshape((n,) * m) if m else np.arange(1)
    # output leg perm[k] carries input leg k
    axes = invert_perm(perm)
    moved = np.transpose(grid, [a - 1 for a in axes]) if m else grid
    idx = np.empty(space.dim, dtype=np.intp)
    idx[moved.ravel()] = np.arange(space.dim)
    return idx


def perm_matrix(perm: Sequence[int], space: LegSpace) -> np.ndarray:
    idx = perm_indices(perm, space)
    p = np.zeros((space.dim, space.dim), dtype=np.complex128)
    p[idx, np.arange(space.dim)] = 1.0
    return p


def conjugate_by_perm(a, perm: Sequence[int], space: LegSpace) -> np.ndarray:
    """``P a P^{-1}`` without forming ``P``."""
    a = as_cmatrix(a)
    idx = perm_indices(perm, space)
    out = np.empty_like(a)
    out[np.ix_(idx, idx)] = a
    return out


def _check_legs(op: np.ndarray, legs: Sequence[int], space: LegSpace) -> tuple[int, ...]:
    legs = tuple(int(l) for l in legs)
    if len(set(legs)) != len(legs):
        raise ValueError(f"duplicate legs in {legs}")
    if any(l < 1 or l > space.num_legs for l in legs):
        raise ValueError(f"legs {legs} out of range 1..{space.num_legs}")
    size = space.leg_dim ** len(legs)
    if op.shape != (size, size):
        raise ValueError(f"operator of shape {op.shape} does not act on {len(legs)} legs of dim {space.leg_dim}")
    return legs


def apply_on_legs(op, legs: Sequence[int], space: LegSpace, x) -> np.ndarray:
    """Left-multiply ``x`` (dim x k) by ``op`` acting on ``legs``, identity elsewhere."""
    op = np.asarray(op, dtype=np.complex128)
    legs = _check_legs(op, legs, space)
    x = np.asarray(x, dtype=np.complex128)
    m, n, k = space.num_legs, space.leg_dim, len(legs)
    if not legs:
        return op[0, 0] * x
    t = x.reshape((n,) * m + (-1,))
    opt = op.reshape((n,) * (2 * k))
    t = np.tensordot(opt, t, axes=(list(range(k, 2 * k)), [l - 1 for l in legs]))
    # contracted result has the op's output legs first; move them back into place
    rest = [a for a in range(m) if a + 1 not in legs]
    order = [l - 1 for l in legs] + rest + [m]
    t = np.moveaxis(t, range(m + 1), order)
    return t.reshape(space.dim, -1)


def embed(op, legs: Sequence[int], space: LegSpace) -> np.ndarray:
    """Operator ``op`` acting on the listed legs in the listed order."""
    return apply_on_legs(op, legs, space, np.eye(space.dim, dtype=np.complex128))


def inverse(a, max_condition: float = 1e12) -> np.ndarray:
    a = as_cmatrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"cannot invert non-square matrix of shape {a.shape}")
    cond = np.linalg.cond(a)
    if not np.isfinite(cond) or cond > max_condition:
        raise SingularMatrixError(float(cond))
    return np.linalg.inv(a)


def cluster_values(values: Sequence[complex], cluster_tol: float = DEFAULT_CLUSTER_TOL) -> list[tuple[complex, int]]:
    """Group nearby complex numbers; returns (mean, count) sorted by (re, im) descending."""
    order = sorted(values, key=lambda z: (-z.real, -z.imag))
    clusters: list[list[complex]] = []
    for z in order:
        for c in clusters:
            if abs(z - np.mean(c)) <= cluster_tol:
                c.append(z)
                break
        else:
            clusters.append([z])
    out = [(complex(np.mean(c)), len(c)) for c in clusters]
    out.sort(key=lambda t: (t[0].real, t[0].imag), reverse=True)
    return out


def spectrum(a, cluster_tol: float = DEFAULT_CLUSTER_TOL) -> list[tuple[complex, int]]:
    """Eigenvalue multiset of a general complex matrix, clustered."""
    a = as_cmatrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"spectrum of non-square matrix {a.shape}")
    if a.shape[0] > MAX_DIM:
        raise ValueError(f"matrix dimension {a.shape[0]} exceeds {MAX_DIM}")
    vals = np.linalg.eigvals(a)
    if not np.all(np.isfinite(vals)):
        raise np.linalg.LinAlgError("eigenvalue iteration produced non-finite values")
    return cluster_values(list(vals), cluster_tol)


def orthonormal_range(p, rank_tol: float = 1e-10) -> np.ndarray:
    """Orthonormal basis of the column space of ``p``.

    Columns are taken greedily by largest remaining norm (leftmost on ties)
    and each basis vector is rotated so its first nonzero entry is real
    positive, which makes the result reproducible.
    """
    p = as_cmatrix(p)
    work = p.copy()
    basis: list[np.ndarray] = []
    while len(basis) < min(p.shape):
        norms = np.linalg.norm(work, axis=0)
        j = int(np.argmax(norms))
        if norms[j] <= rank_tol:
            break
        v = work[:, j] / norms[j]
        for b in basis:  # second Gram-Schmidt pass
            v = v - b * np.vdot(b, v)
        v = v / np.linalg.norm(v)
        lead = np.flatnonzero(np.abs(v) > 1e-12)[0]
        v = v * (abs(v[lead]) / v[lead])
        basis.append(v)
        work = work - np.outer(v, v.conj() @ work)
    if not basis:
        return np.zeros((p.shape[0], 0), dtype=np.complex128)
    return np.column_stack(basis)


def permute_rows(a, perm: Sequence[int], space: LegSpace) -> np.ndarray:
    """``P a`` without forming ``P``."""
    a = as_cmatrix(a)
    out = np.empty_like(a)
    out[perm_indices(perm, space)] = a
    return out
