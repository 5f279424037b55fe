"""Quasitriangular data of U_q sl(2) at the level of the fundamental representation.

Conventions (all checked at construction):

* ``E = e12``, ``F = e21``, ``K = diag(q, 1/q)``
* ``Delta(E) = E (x) 1 + K (x) E``, ``Delta(F) = F (x) K^-1 + 1 (x) F``,
  ``Delta(K) = K (x) K``
* the fundamental R-matrix is Hecke normalised, ``(PR - q)(PR + 1/q) = 0``.

Hecke normalisation is the U_q gl(2) choice: the Cartan part of the universal
R-matrix is ``q ** (N1 (x) N1 + N2 (x) N2)`` where ``N1, N2`` count the two
basis vectors. With ``normalization="sl2"`` the Cartan part is
``q ** (H (x) H / 2)`` instead and every R-matrix is a factor ``q ** -1/2``
smaller on the fundamental pair.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .linalg import LegSpace, embed, frob, inverse, kron, perm_matrix

# Coproducts as formal sums of (left, right) labels.
COPRODUCTS: dict[str, tuple[tuple[str, str], ...]] = {
    "1": (("1", "1"),),
    "E": (("E", "1"), ("K", "E")),
    "F": (("F", "Kinv"), ("1", "F")),
    "K": (("K", "K"),),
    "Kinv": (("Kinv", "Kinv"),),
}
GENERATORS = ("E", "F", "K")
NORMALIZATIONS = ("hecke", "sl2")


@dataclass(frozen=True)
class Rep:
    """Matrices of E, F, K and the two weight counts on some representation."""

    E: np.ndarray
    F: np.ndarray
    K: np.ndarray
    N1: np.ndarray  # diagonal of the weight operators
    N2: np.ndarray

    @property
    def dim(self) -> int:
        return self.E.shape[0]


@dataclass(frozen=True, eq=False)
class QTriData:
    q: complex
    r_fund: np.ndarray
    fund: dict[str, np.ndarray]
    r_inv: np.ndarray
    fund: dict[str, np.ndarray]
    normalization: str = "hecke"
    coproducts: dict = field(default_factory=lambda: dict(COPRODUCTS))
    n: int = 2

    @property
    def is_real(self) -> bool:
        return isinstance(self.q, float) and self.q > 0


def _qnum(q: complex, n: int) -> complex:
    return sum(q ** (n - 1 - 2 * k) for k in range(n))


def _qfactorial(q: complex, n: int) -> complex:
    out = 1.0
    for k in range(1, n + 1):
        out *= _qnum(q, k)
    return out


def fundamental_rep(q: complex) -> Rep:
    return Rep(
        E=np.array([[0, 1], [0, 0]], dtype=np.complex128),
        F=np.array([[0, 0], [1, 0]], dtype=np.complex128),
        K=np.diag([q, 1 / q]).astype(np.complex128),
        N1=np.array([1.0, 0.0]),
        N2=np.array([0.0, 1.0]),
    )


def trivial_rep() -> Rep:
    z = np.zeros((1, 1), dtype=np.complex128)
    return Rep(E=z, F=z, K=np.ones((1, 1), dtype=np.complex128), N1=np.zeros(1), N2=np.zeros(1))


def tensor_rep(a: Rep, b: Rep) -> Rep:
    """Representation ``a x b`` defined through the coproduct."""
    ia, ib = np.eye(a.dim), np.eye(b.dim)
    return Rep(
        E=kron(a.E, ib) + kron(a.K, b.E),
        F=kron(a.F, np.linalg.inv(b.K)) + kron(ia, b.F),
        K=kron(a.K, b.K),
        N1=np.add.outer(a.N1, b.N1).ravel(),
        N2=np.add.outer(a.N2, b.N2).ravel(),
    )


def contracted_rep(q: complex, width: int) -> Rep:
    """The ``width``-fold contracted power of the fundamental (trivial for 0)."""
    rep = trivial_rep()
    for _ in range(width):
        rep = tensor_rep(rep, fundamental_rep(q))
    return rep


def universal_r(q: complex, a: Rep, b: Rep, normalization: str = "hecke") -> np.ndarray:
    """The universal R-matrix paired with representations ``a`` and ``b``.

    ``R = q**cartan * sum_k q**(k(k-1)/2) (q - 1/q)**k / [k]! F**k (x) E**k``;
    the series terminates because E and F are nilpotent.
    """
    if normalization == "hecke":
        w = np.outer(a.N1, b.N1) + np.outer(a.N2, b.N2)
    elif normalization == "sl2":
        w = np.outer(a.N1 - a.N2, b.N1 - b.N2) / 2
    else:
        raise ValueError(f"unknown normalization {normalization!r}")
    cartan = np.diag((np.complex128(q) ** w).ravel())
    series = np.zeros((a.dim * b.dim,) * 2, dtype=np.complex128)
    fk, ek = np.eye(a.dim), np.eye(b.dim)
    for k in range(max(a.dim, b.dim)):
        c = q ** (k * (k - 1) / 2) * (q - 1 / q) ** k / _qfactorial(q, k)
        series += c * kron(fk, ek)
        fk, ek = fk @ a.F, ek @ b.E
    return cartan @ series


def standard_data(q: complex, normalization: str = "hecke", allow_complex: bool = False) -> QTriData:
    """Fundamental U_q sl(2) data; ``q = 1`` is the classical limit."""
    q = complex(q)
    if q == 0:
        raise ValueError("q must be nonzero")
    if q.imag != 0 or q.real < 0:
        if not allow_complex:
            raise ValueError(f"q = {q} is not a positive real; pass allow_complex=True")
    else:
        q = q.real
    fund = fundamental_rep(q)
    r = universal_r(q, fund, fund, normalization)
    mats = {"1": np.eye(2, dtype=np.complex128), "E": fund.E, "F": fund.F, "K": fund.K, "Kinv": np.linalg.inv(fund.K)}
    data = QTriData(q=q, r_fund=r, r_inv=inverse(r), fund=mats, normalization=normalization)
    failed = [name for name, res in catalog_checks(data).items() if res > 1e-12]
    if failed:
        raise ArithmeticError(f"catalog invariants violated: {failed}")
    return data


def coproduct_rep(data: QTriData, label: str, m: int, bracketing: str = "left") -> np.ndarray:
    """Matrix of the (m-1)-fold coproduct of ``label`` on ``m`` fundamental legs.

    ``bracketing="left"`` iterates ``(Delta^(m-2) (x) id) o Delta``;
    ``"right"`` iterates ``(id (x) Delta^(m-2)) o Delta``.
    """
    if label not in data.coproducts:
        raise ValueError(f"unknown generator {label!r}")
    if m < 1:
        raise ValueError("m must be at least 1")
    if bracketing not in ("left", "right"):
        raise ValueError(f"unknown bracketing {bracketing!r}")
    return _coproduct_rep(data, label, m, bracketing)


def _coproduct_rep(data, label, m, bracketing):
    if m == 1:
        return data.fund[label]
    out = 0
    for left, right in data.coproducts[label]:
        if bracketing == "left":
            out = out + kron(_coproduct_rep(data, left, m - 1, bracketing), data.fund[right])
        else:
            out = out + kron(data.fund[left], _coproduct_rep(data, right, m - 1, bracketing))
    return out


def flip(n: int = 2) -> np.ndarray:
    return perm_matrix((2, 1), LegSpace(2, n))


def hecke_residual(data: QTriData) -> float:
    q = data.q
    rh = flip() @ data.r_fund
    i4 = np.eye(4)
    if data.normalization == "sl2":
        rh = rh * q**0.5
    return frob((rh - q * i4) @ (rh + i4 / q))


def ybe_residual(r: np.ndarray, n: int = 2) -> float:
    sp = LegSpace(3, n)
    r12, r13, r23 = (embed(r, legs, sp) for legs in ((1, 2), (1, 3), (2, 3)))
    lhs = r12 @ r13 @ r23
    return frob(lhs - r23 @ r13 @ r12) / max(1.0, frob(lhs))


def reality_residual(data: QTriData) -> float:
    """``conj(R^T) = R_21``, meaningful for real q."""
    p = flip()
    return frob(data.r_fund.conj().T - p @ data.r_fund @ p)


def relations_residual(data: QTriData) -> float:
    q = data.q
    e, f, k = data.fund["E"], data.fund["F"], data.fund["K"]
    kinv = np.linalg.inv(k)
    res = max(frob(k @ e @ kinv - q**2 * e), frob(k @ f @ kinv - f / q**2))
    if abs(q - 1) >= 1e-8:
        res = max(res, frob(e @ f - f @ e - (k - kinv) / (q - 1 / q)))
    return res


def intertwining_residual(data: QTriData) -> float:
    """``R Delta(h) R^-1 = Delta^op(h)`` for every generator."""
    p = flip()
    rinv = data.r_inv
    return max(
        frob(data.r_fund @ coproduct_rep(data, h, 2) @ rinv - p @ coproduct_rep(data, h, 2) @ p)
        for h in GENERATORS
    )


def catalog_checks(data: QTriData) -> dict[str, float]:
    out = {
        "catalog.ybe": ybe_residual(data.r_fund),
        "catalog.hecke": hecke_residual(data),
        "catalog.relations": relations_residual(data),
        "catalog.intertwining": intertwining_residual(data),
    }
    if data.is_real:
        out["catalog.reality"] = reality_residual(data)
    return out
