"""Representation-level checks of the twisted tensor power construction.

Every check returns a :class:`CheckResult`; failures are data, nothing here
raises on a failed identity. All identities are verified on tensor powers of
the fundamental representation only.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .linalg import LegSpace, MAX_DIM, apply_on_legs, conjugate_by_perm, embed, frob, inverse, rel_diff
from .rword import evaluate, expand_slots
from .spectral import SpectralReport, rhat, spectral_report
from .twist import (
    FLIPINV,
    STD,
    TwistConfig,
    build_boldR,
    build_F,
    build_v,
    paired_matrix,
    shuffle_perm,
)
from .uqsl2 import GENERATORS, QTriData, catalog_checks, contracted_rep, coproduct_rep, universal_r

DEFAULT_TOLERANCES = {
    "ybe": 1e-9,
    "hexagons": 1e-9,
    "diagonal": 1e-9,
    "star_v": 1e-10,
    "ell": 1e-10,
    "catalog": 1e-12,
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    tolerance: float
    details: str = ""
    skipped: bool = False

    @property
    def passed(self) -> bool:
        return not self.skipped and self.residual <= self.tolerance

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "skipped": self.skipped,
            "residual": None if self.skipped else self.residual,
            "tolerance": self.tolerance,
            "details": self.details,
        }


def skipped(name: str, tolerance: float, reason: str) -> CheckResult:
    return CheckResult(name, math.nan, tolerance, f"not applicable: {reason}", skipped=True)


def _super_leg_dim(size: int, leg_dim: int) -> int:
    d = math.isqrt(size)
    if d * d != size:
        raise ValueError(f"matrix size {size} is not a square")
    k = round(math.log(d, leg_dim)) if d > 1 else 0
    if leg_dim**k != d:
        raise ValueError(f"super-leg dimension {d} is not a power of {leg_dim}")
    return d


def ybe_residual(m, leg_dim: int = 2) -> float:
    """Relative Frobenius residual of ``M12 M13 M23 = M23 M13 M12``."""
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    d = _super_leg_dim(m.shape[0], leg_dim)
    space = LegSpace(3, d)
    if space.dim > MAX_DIM:
        raise ValueError(f"Yang-Baxter check needs a {space.dim}-dimensional space, limit is {MAX_DIM}")
    eye = np.eye(space.dim, dtype=np.complex128)
    lhs = apply_on_legs(m, (1, 2), space, apply_on_legs(m, (1, 3), space, apply_on_legs(m, (2, 3), space, eye)))
    rhs = apply_on_legs(m, (2, 3), space, apply_on_legs(m, (1, 3), space, apply_on_legs(m, (1, 2), space, eye)))
    return rel_diff(lhs, rhs)


def check_ybe(m, leg_dim: int = 2, tol: float = DEFAULT_TOLERANCES["ybe"], name: str = "ybe") -> CheckResult:
    m = np.asarray(m)
    return CheckResult(name, ybe_residual(m, leg_dim), tol, f"{m.shape[0]}x{m.shape[0]} matrix")


def twisted_coproduct_side(config: TwistConfig, data: QTriData, which: int, twisted: bool = True) -> np.ndarray:
    """Twisted coproduct applied to one slot group of the twisted R-matrix.

    ``which=1`` splits the first group (``(Delta (x) id) R``), ``which=2`` the
    second. Each R-factor touching a split slot is paired directly with the
    two-fold contracted representation through the universal R-matrix, so
    this does not rely on the word expansion rules. The result lives on
    ``3s`` legs grouped as three super-legs of ``s`` legs each. With
    ``twisted=False`` the untwisted coproduct is used instead.
    """
    s, q = config.s, data.q
    space = LegSpace(3 * s, data.n)
    if space.dim > MAX_DIM:
        raise ValueError(f"hexagon check for s={s} exceeds the {MAX_DIM} size limit")

    # split slot k of the chosen group into its two copies: first copy stays in
    # its own super-leg, second copy lands s legs further on
    def legs(slot: int) -> tuple[int, ...]:
        if which == 1:
            return (slot, s + slot) if slot <= s else (slot + s,)
        return (slot,) if slot <= s else (slot, slot + s)

    reps = {1: contracted_rep(q, 1), 2: contracted_rep(q, 2)}
    out = np.eye(space.dim, dtype=np.complex128)
    for f in reversed(build_boldR(config).factors):
        la, lb = legs(f.left), legs(f.right)
        m = universal_r(q, reps[len(la)], reps[len(lb)], data.normalization)
        out = apply_on_legs(m if f.sign > 0 else inverse(m), la + lb, space, out)
    if not twisted:
        return out
    # the leg assignment above already realises the shuffle; only F remains
    twist_legs = tuple(range(1, 2 * s + 1)) if which == 1 else tuple(range(s + 1, 3 * s + 1))
    f_mat = embed(evaluate(build_F(config), data), twist_legs, space)
    return f_mat @ out @ inverse(f_mat)


def check_hexagons(config: TwistConfig, data: QTriData, tol: float = DEFAULT_TOLERANCES["hexagons"]) -> CheckResult:
    """Both hexagon identities of the twisted R-matrix on three super-legs."""
    name = f"hexagons[{config}]"
    if 3 * config.s * math.log2(data.n) > 12:
        return skipped(name, tol, f"s={config.s} needs more than 12 legs")
    r = evaluate(build_boldR(config), data)
    sup = LegSpace(3, data.n**config.s)
    r12, r13, r23 = (embed(r, legs, sup) for legs in ((1, 2), (1, 3), (2, 3)))
    res1 = rel_diff(r13 @ r23, twisted_coproduct_side(config, data, 1))
    res2 = rel_diff(r13 @ r12, twisted_coproduct_side(config, data, 2))
    return CheckResult(name, max(res1, res2), tol, f"(D x id)R = R13 R23: {res1:.3e}; (id x D)R = R13 R12: {res2:.3e}")


def diagonal_residual(config: TwistConfig, data: QTriData, label: str) -> float:
    """``F . shuffle(Delta^(2s-1) h) . F^-1 = Delta^(2s-1) h`` for one generator."""
    s = config.s
    target = coproduct_rep(data, label, 2 * s)
    shuffled = conjugate_by_perm(target, shuffle_perm(s), LegSpace(2 * s, data.n))
    f_mat = evaluate(build_F(config), data)
    return rel_diff(target, f_mat @ shuffled @ inverse(f_mat))


def check_diagonal(
    config: TwistConfig,
    data: QTriData,
    generators: Sequence[str] = GENERATORS,
    tol: float = DEFAULT_TOLERANCES["diagonal"],
) -> CheckResult:
    """The image of the iterated coproduct is closed under the twisted coproduct."""
    name = f"diagonal[{config}]"
    if 2 * config.s * math.log2(data.n) > 12:
        return skipped(name, tol, f"s={config.s} needs more than 12 legs")
    res = {h: diagonal_residual(config, data, h) for h in generators}
    details = "; ".join(f"{h}: {r:.3e}" for h, r in res.items())
    return CheckResult(name, max(res.values()), tol, details)


def reversal(s: int) -> tuple[int, ...]:
    return tuple(range(s, 0, -1))


def check_star_v(config: TwistConfig, data: QTriData, tol: float = DEFAULT_TOLERANCES["star_v"]) -> CheckResult:
    """``iota(v^*) = v`` with ``*`` the conjugate transpose and ``iota`` the leg reversal."""
    name = f"star_v[{config}]"
    if not data.is_real:
        return skipped(name, tol, f"q = {data.q} is not a positive real")
    v = evaluate(build_v(config), data)
    flipped = conjugate_by_perm(v.conj().T, reversal(config.s), LegSpace(config.s, data.n))
    return CheckResult(name, rel_diff(v, flipped), tol, f"v has {len(build_v(config))} factors")


def ell_index(config: TwistConfig, i: int) -> int:
    """Which ``l^(j)`` the generator matrix ``L^{+(i)}`` equals."""
    own = config.diag[i - 1] is not config.twist
    return config.s - i + int(own)


def predicted_ell(config: TwistConfig, data: QTriData, j: int) -> np.ndarray:
    """``l^(j)`` on ``s`` legs plus the auxiliary leg ``s+1``.

    ``l+`` on leg ``k`` is ``R_{k,aux}`` and ``l-`` is ``R^-1_{aux,k}``; their
    tensor product multiplies in the auxiliary index, leftmost factor first.
    With the twist ``R`` the first ``s-j`` legs carry ``l+``, with ``R^-1_21``
    they carry ``l-``.
    """
    s = config.s
    space, aux = LegSpace(s + 1, data.n), s + 1
    out = np.eye(space.dim, dtype=np.complex128)
    for k in range(s, 0, -1):
        head = k <= s - j
        plus = head if config.twist is STD else not head
        if plus:
            out = apply_on_legs(data.r_fund, (k, aux), space, out)
        else:
            out = apply_on_legs(data.r_inv, (aux, k), space, out)
    return out


def check_ell_factorization(
    config: TwistConfig, data: QTriData, i: int, tol: float = DEFAULT_TOLERANCES["ell"]
) -> CheckResult:
    """``L^{+(i)}``, the twisted R-matrix paired with ``u^(i)``, against ``l^(j)``."""
    s = config.s
    if not 1 <= i <= s:
        raise ValueError(f"slot index {i} out of range 1..{s}")
    name = f"ell[{config}, i={i}]"
    profile = (1,) * s + tuple(1 if k == i else 0 for k in range(1, s + 1))
    m = evaluate(expand_slots(build_boldR(config), profile), data)
    j = ell_index(config, i)
    return CheckResult(name, rel_diff(predicted_ell(config, data, j), m), tol, f"matches l^({j})")


@dataclass
class Report:
    checks: list[CheckResult]
    spectral: SpectralReport | None = None
    meta: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if not c.skipped)

    def to_dict(self) -> dict:
        return {
            **self.meta,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "spectral": None if self.spectral is None else self.spectral.to_dict(),
        }


def run_report(
    config: TwistConfig,
    data: QTriData,
    widths: Sequence[int] | None = None,
    widths2: Sequence[int] | None = None,
    tol: float | None = None,
) -> Report:
    """Run every applicable check for a configuration and contraction pattern.

    ``widths`` defaults to one fundamental per slot. ``tol`` overrides the
    per-check tolerances.
    """
    tols = {k: (v if tol is None else tol) for k, v in DEFAULT_TOLERANCES.items()}
    s = config.s
    widths = (1,) * s if widths is None else tuple(widths)
    widths2 = widths if widths2 is None else tuple(widths2)
    checks = [CheckResult(name, res, tols["catalog"]) for name, res in catalog_checks(data).items()]

    r = evaluate(build_boldR(config), data)
    if 3 * s <= 12:
        checks.append(check_ybe(r, data.n, tols["ybe"], name=f"ybe[{config}]"))
    legs = sum(widths)
    m = paired_matrix(config, data, widths, widths2)
    if widths != (1,) * s or widths2 != widths:
        name = f"ybe[{config}, widths={widths}]"
        if widths2 != widths:
            checks.append(skipped(name, tols["ybe"], "the two groups carry different representations"))
        elif 3 * legs > 12:
            checks.append(skipped(name, tols["ybe"], f"{3 * legs} legs exceed the size limit"))
        else:
            checks.append(check_ybe(m, data.n, tols["ybe"], name=name))
    checks.append(check_hexagons(config, data, tols["hexagons"]))
    checks.append(check_diagonal(config, data, tol=tols["diagonal"]))
    checks.append(check_star_v(config, data, tols["star_v"]))
    checks.extend(check_ell_factorization(config, data, i, tols["ell"]) for i in range(1, s + 1))
    checks.sort(key=lambda c: c.name)

    spec = None
    if widths2 == widths:
        spec = spectral_report(rhat(m, legs, data.n))
    return Report(checks, spec, {"config": str(config), "q": data.q, "widths": list(widths)})
