"""Twisted tensor powers of the R-matrix as words on 2s slots.

Slots ``1..s`` form the first group and ``s+1..2s`` the second. The twisted
R-matrix is ``F_21 Rbar F^-1`` where ``Rbar`` pairs slot ``i`` with ``s+i``
and the twist ``F`` is a product of R-factors between the two groups.
"""
from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .linalg import compose_perm
from .rword import RFactor, RWord, compose, evaluate, expand_slots, invert, relabel
from .uqsl2 import QTriData


class SignChoice(enum.Enum):
    STD = "+"  # R_ab
    FLIPINV = "-"  # R^-1_ba

    def factor(self, a: int, b: int) -> RFactor:
        return RFactor(1, a, b) if self is SignChoice.STD else RFactor(-1, b, a)

    @classmethod
    def parse(cls, char: str) -> SignChoice:
        char = {"−": "-"}.get(char, char)
        try:
            return cls(char)
        except ValueError:
            raise ValueError(f"sign choice must be '+' or '-', got {char!r}") from None


STD, FLIPINV = SignChoice.STD, SignChoice.FLIPINV


@dataclass(frozen=True)
class TwistConfig:
    s: int
    diag: tuple[SignChoice, ...]
    twist: SignChoice = STD

    def __post_init__(self):
        object.__setattr__(self, "diag", tuple(self.diag))
        if self.s < 1:
            raise ValueError(f"s must be positive, got {self.s}")
        if len(self.diag) != self.s:
            raise ValueError(f"need {self.s} diagonal sign choices, got {len(self.diag)}")

    def __str__(self) -> str:
        return f"s={self.s} diag={''.join(c.value for c in self.diag)} twist={self.twist.value}"

    @classmethod
    def from_signs(cls, diag: str, twist: str = "+") -> TwistConfig:
        choices = tuple(SignChoice.parse(c) for c in diag)
        return cls(len(choices), choices, SignChoice.parse(twist))

    @classmethod
    def parse(cls, text: str) -> TwistConfig:
        """Read the ``s=2 diag=+- twist=-`` form."""
        fields = dict(re.findall(r"(\w+)=(\S+)", text))
        if "diag" not in fields:
            raise ValueError(f"config {text!r} has no diag= field")
        cfg = cls.from_signs(fields["diag"], fields.get("twist", "+"))
        if "s" in fields and int(fields["s"]) != cfg.s:
            raise ValueError(f"s={fields['s']} disagrees with diag={fields['diag']}")
        return cfg

    @classmethod
    def standard(cls, s: int) -> TwistConfig:
        return cls(s, (STD,) * s, STD)


def all_configs(s: int) -> list[TwistConfig]:
    """The 2**(s+1) configurations, diag in lexicographic '+' < '-' order, then twist."""
    return [
        TwistConfig(s, diag, tw)
        for diag in itertools.product((STD, FLIPINV), repeat=s)
        for tw in (STD, FLIPINV)
    ]


def transposition(k: int, m: int) -> tuple[int, ...]:
    p = list(range(1, m + 1))
    p[k - 1], p[k] = k + 1, k
    return tuple(p)


def shuffle_perm(s: int) -> tuple[int, ...]:
    """Reorders interleaved legs ``(1_1, 2_1, 1_2, 2_2, ...)`` into grouped ones.

    Composition of adjacent transpositions ``tau_{s-i+2j}``, ``j = 0..i``
    inside, ``i = 0..s-2`` outside, leftmost map applied last.
    """
    m = 2 * s
    out = tuple(range(1, m + 1))
    for i in range(s - 1):
        block = tuple(range(1, m + 1))
        for j in range(i + 1):
            block = compose_perm(block, transposition(s - i + 2 * j, m))
        out = compose_perm(out, block)
    return out


def group_swap(s: int) -> tuple[int, ...]:
    return tuple(range(s + 1, 2 * s + 1)) + tuple(range(1, s + 1))


def build_barR(config: TwistConfig) -> RWord:
    s = config.s
    return RWord(2 * s, tuple(c.factor(i, s + i) for i, c in enumerate(config.diag, start=1)))


def build_F(config: TwistConfig) -> RWord:
    s = config.s
    factors = [
        config.twist.factor(s + j, s - i + j)
        for i in range(1, s)
        for j in range(1, i + 1)
    ]
    return RWord(2 * s, tuple(factors))


def build_boldR(config: TwistConfig) -> RWord:
    f = build_F(config)
    return compose(relabel(f, group_swap(config.s)), compose(build_barR(config), invert(f)))


def build_v(config: TwistConfig) -> RWord:
    s = config.s
    factors = [config.twist.factor(i, j) for i in range(1, s) for j in range(i + 1, s + 1)]
    return invert(RWord(s, tuple(factors)))


def paired_word(config: TwistConfig, widths: Sequence[int], widths2: Sequence[int] | None = None) -> RWord:
    """The twisted R-matrix with its two slot groups carrying contraction patterns.

    ``widths[k]`` is the number of fundamentals contracted into slot ``k + 1``
    of the first group; the second group uses ``widths2`` (default: the same).
    """
    widths = tuple(widths)
    widths2 = widths if widths2 is None else tuple(widths2)
    if len(widths) != config.s or len(widths2) != config.s:
        raise ValueError(f"contraction patterns {widths}, {widths2} do not have s={config.s} groups")
    return expand_slots(build_boldR(config), widths + widths2)


def paired_matrix(
    config: TwistConfig, data: QTriData, widths: Sequence[int], widths2: Sequence[int] | None = None
) -> np.ndarray:
    w = paired_word(config, widths, widths2)
    return evaluate(w, data, w.num_slots)
