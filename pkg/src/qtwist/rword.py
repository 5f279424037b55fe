"""Formal products of elementary R-matrix factors on numbered slots.

A word ``R[4,1]^-1 R[1,3]`` stands for the ordered product
``R^-1_{41} R_{13}``; the leftmost factor is leftmost in the product.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .linalg import LegSpace, MAX_DIM, apply_on_legs, check_perm
from .uqsl2 import QTriData


@dataclass(frozen=True)
class RFactor:
    sign: int
    left: int
    right: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.left == self.right:
            raise ValueError(f"factor acts twice on slot {self.left}")

    def __str__(self) -> str:
        return f"R[{self.left},{self.right}]" + ("^-1" if self.sign < 0 else "")


@dataclass(frozen=True)
class RWord:
    num_slots: int
    factors: tuple[RFactor, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        for f in self.factors:
            if not (1 <= f.left <= self.num_slots and 1 <= f.right <= self.num_slots):
                raise ValueError(f"factor {f} outside slots 1..{self.num_slots}")

    def __len__(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        return " ".join(map(str, self.factors)) if self.factors else "1"

    def __matmul__(self, other: RWord) -> RWord:
        return compose(self, other)


def word(num_slots: int, *factors: tuple[int, int, int]) -> RWord:
    """Shorthand: ``word(4, (-1, 4, 1), (1, 1, 3))``."""
    return RWord(num_slots, tuple(RFactor(*f) for f in factors))


_FACTOR_RE = re.compile(r"R\[(\d+),(\d+)\](\^-1)?")


def parse_word(text: str, num_slots: int | None = None) -> RWord:
    """Inverse of ``str(RWord)``; ``num_slots`` defaults to the largest slot seen."""
    text = text.strip()
    factors = []
    if text != "1":
        for tok in text.split():
            m = _FACTOR_RE.fullmatch(tok)
            if not m:
                raise ValueError(f"bad factor {tok!r} in word {text!r}")
            factors.append(RFactor(-1 if m.group(3) else 1, int(m.group(1)), int(m.group(2))))
    if num_slots is None:
        num_slots = max((max(f.left, f.right) for f in factors), default=1)
    return RWord(num_slots, tuple(factors))


def compose(a: RWord, b: RWord) -> RWord:
    if a.num_slots != b.num_slots:
        raise ValueError(f"cannot compose words on {a.num_slots} and {b.num_slots} slots")
    return RWord(a.num_slots, a.factors + b.factors)


def invert(a: RWord) -> RWord:
    return RWord(a.num_slots, tuple(RFactor(-f.sign, f.left, f.right) for f in reversed(a.factors)))


def relabel(a: RWord, perm: Sequence[int]) -> RWord:
    """Send slot ``k`` to ``perm[k - 1]`` in every factor."""
    perm = check_perm(perm, a.num_slots)
    return RWord(a.num_slots, tuple(RFactor(f.sign, perm[f.left - 1], perm[f.right - 1]) for f in a.factors))


def _expand_factor(f: RFactor, left_legs: Sequence[int], right_legs: Sequence[int]) -> list[RFactor]:
    # (Delta (x) id)R = R13 R23 and (id (x) Delta)R = R13 R12 iterated:
    # left legs ascending, right legs descending
    out = [RFactor(1, a, b) for a in left_legs for b in reversed(right_legs)]
    if f.sign < 0:
        out = [RFactor(-1, g.left, g.right) for g in reversed(out)]
    return out


def slot_legs(profile: Sequence[int]) -> list[tuple[int, ...]]:
    """Consecutive leg ranges occupied by each slot of ``profile``."""
    out, start = [], 1
    for w in profile:
        if w < 0:
            raise ValueError(f"negative slot width in {tuple(profile)}")
        out.append(tuple(range(start, start + w)))
        start += w
    return out


def expand_slots(a: RWord, profile: Sequence[int]) -> RWord:
    """Rewrite a word over slots of the given widths as a word over fundamental legs.

    A slot of width ``k`` stands for the ``k``-fold contracted product and a
    slot of width 0 for the trivial representation (every factor touching it
    is dropped).
    """
    profile = tuple(int(w) for w in profile)
    if len(profile) != a.num_slots:
        raise ValueError(f"profile of length {len(profile)} for a word on {a.num_slots} slots")
    if all(w == 1 for w in profile):
        return a
    legs = slot_legs(profile)
    factors: list[RFactor] = []
    for f in a.factors:
        factors.extend(_expand_factor(f, legs[f.left - 1], legs[f.right - 1]))
    return RWord(sum(profile), tuple(factors))


def evaluate(a: RWord, data: QTriData, num_legs: int | None = None) -> np.ndarray:
    """Matrix of the word with every slot carrying the fundamental representation."""
    num_legs = a.num_slots if num_legs is None else num_legs
    space = LegSpace(num_legs, data.n)
    if space.dim > MAX_DIM:
        raise ValueError(f"{num_legs} legs of dimension {data.n} exceed the {MAX_DIM} size limit")
    out = np.eye(space.dim, dtype=np.complex128)
    # apply right to left so the leftmost factor ends up leftmost
    for f in reversed(a.factors):
        out = apply_on_legs(data.r_fund if f.sign > 0 else data.r_inv, (f.left, f.right), space, out)
    return out
