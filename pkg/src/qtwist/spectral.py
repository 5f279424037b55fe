"""Spectra of ``Rhat = P R``, Clebsch-Gordan blocks and the Wess-Zumino verdict."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import (
    DEFAULT_CLUSTER_TOL,
    LegSpace,
    as_cmatrix,
    cluster_values,
    kron,
    orthonormal_range,
    permute_rows,
    spectrum,
)
from .twist import group_swap
from .uqsl2 import QTriData, flip

DEFAULT_REALITY_TOL = 1e-8


def rhat(m, group_size: int, leg_dim: int = 2) -> np.ndarray:
    """Compose ``m`` with the swap of its two groups of ``group_size`` legs."""
    m = as_cmatrix(m)
    space = LegSpace(2 * group_size, leg_dim)
    if m.shape != (space.dim, space.dim):
        raise ValueError(f"matrix of shape {m.shape} does not act on 2 x {group_size} legs of dim {leg_dim}")
    return permute_rows(m, group_swap(group_size), space) if group_size else m


@dataclass(frozen=True)
class SpectralReport:
    eigenvalues: tuple[tuple[complex, int], ...]
    negative_real_distinct: int
    all_real: bool
    wz_feasible: bool

    @property
    def dim(self) -> int:
        return sum(m for _, m in self.eigenvalues)

    @property
    def negative_eigenvalues(self) -> list[tuple[complex, int]]:
        return [(z, m) for z, m in self.eigenvalues if z.real < 0 and z.imag == 0]

    def to_dict(self) -> dict:
        return {
            "eigenvalues": [{"re": z.real, "im": z.imag, "mult": m} for z, m in self.eigenvalues],
            "negative_real_distinct": self.negative_real_distinct,
            "all_real": self.all_real,
            "wz_feasible": self.wz_feasible,
        }


def _report_from_clusters(clusters, reality_tol: float) -> SpectralReport:
    vals = []
    for z, m in clusters:
        if abs(z.imag) < reality_tol:
            z = complex(z.real, 0.0)
        vals.append((z, m))
    all_real = all(z.imag == 0 for z, _ in vals)
    negatives = sum(1 for z, _ in vals if z.imag == 0 and z.real < -reality_tol)
    return SpectralReport(tuple(vals), negatives, all_real, all_real and negatives == 1)


def spectral_report(
    m, cluster_tol: float = DEFAULT_CLUSTER_TOL, reality_tol: float = DEFAULT_REALITY_TOL
) -> SpectralReport:
    """Clustered spectrum of ``m`` and the Wess-Zumino feasibility verdict.

    Negative eigenvalues are counted as distinct clustered values: a
    covariant calculus needs an all-real spectrum with exactly one negative
    value, which then belongs to the antisymmetriser.
    """
    return _report_from_clusters(spectrum(m, cluster_tol), reality_tol)


def spectra_agree(a: SpectralReport, b: SpectralReport, tol: float = 1e-8) -> bool:
    """Compare two clustered spectra as multisets."""
    if len(a.eigenvalues) != len(b.eigenvalues):
        return False
    return all(
        ma == mb and abs(za - zb) <= tol
        for (za, ma), (zb, mb) in zip(a.eigenvalues, b.eigenvalues)
    )


def squared_spectrum(report: SpectralReport, cluster_tol: float = DEFAULT_CLUSTER_TOL) -> list[tuple[complex, int]]:
    """Elementwise squares of a clustered spectrum, re-clustered."""
    expanded = [z * z for z, m in report.eigenvalues for _ in range(m)]
    return cluster_values(expanded, cluster_tol)


@dataclass(frozen=True, eq=False)
class CGIsometries:
    v_sym: np.ndarray  # 4 x 3, the [3] inside [2] x [2]
    v_anti: np.ndarray  # 4 x 1, the [1]

    @property
    def basis(self) -> np.ndarray:
        return np.hstack([self.v_sym, self.v_anti])


def hecke_projectors(data: QTriData) -> tuple[np.ndarray, np.ndarray]:
    """Projectors onto the ``q`` and ``-1/q`` eigenspaces of the fundamental ``Rhat``."""
    q = data.q
    if abs(q + 1 / q) < 1e-12:
        raise ValueError(f"degenerate q = {q}: q + 1/q vanishes")
    rh = flip(data.n) @ data.r_fund
    if data.normalization == "sl2":
        rh = rh * q**0.5
    i4 = np.eye(4)
    return (rh + i4 / q) / (q + 1 / q), (q * i4 - rh) / (q + 1 / q)


def cg_isometries(data: QTriData) -> CGIsometries:
    if data.n != 2:
        raise ValueError("Clebsch-Gordan isometries are only implemented for sl(2)")
    p_sym, p_anti = hecke_projectors(data)
    return CGIsometries(orthonormal_range(p_sym), orthonormal_range(p_anti))


_BLOCKS = {"33": ((0, 1, 2), (0, 1, 2)), "31": ((0, 1, 2), (3,)), "13": ((3,), (0, 1, 2)), "11": ((3,), (3,))}


@dataclass(frozen=True, eq=False)
class BlockDecomposition:
    blocks: dict[str, np.ndarray]
    off_block: float
    transformed: np.ndarray

    @property
    def scale(self) -> complex:
        """The scalar by which the R-matrix acts on ``[1] (x) [1]``."""
        return complex(self.blocks["11"][0, 0])

    def normalized(self) -> dict[str, np.ndarray]:
        return {k: b / self.scale for k, b in self.blocks.items()}


def block_decompose(m16, iso: CGIsometries) -> BlockDecomposition:
    """Rewrite a 16 x 16 matrix on ``([2] x [2]) (x) ([2] x [2])`` in the irreducible basis."""
    m16 = as_cmatrix(m16)
    if m16.shape != (16, 16):
        raise ValueError(f"expected a 16 x 16 matrix, got {m16.shape}")
    u = kron(iso.basis, iso.basis)
    t = u.conj().T @ m16 @ u
    mask = np.ones((16, 16), dtype=bool)
    blocks = {}
    for name, (left, right) in _BLOCKS.items():
        idx = [4 * a + b for a in left for b in right]
        blocks[name] = t[np.ix_(idx, idx)]
        mask[np.ix_(idx, idx)] = False
    off = float(np.max(np.abs(t[mask])))
    return BlockDecomposition(blocks, off, t)
