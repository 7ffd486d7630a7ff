"""Classify a prime by residue mod 8 and produce its minimal all-positive
square representation.

p = 2 and p = 1, 5 (mod 8) need two squares, p = 3 (mod 8) three, and
p = 7 (mod 8) four. Zero parts cannot occur: a zero part would shorten the
representation and contradict the residue class, which is asserted anyway.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core_arith import RandomSource, _check_nat, is_prime
from .errors import SearchExhausted
from .four_squares import four_squares
from .three_squares import three_squares
from .two_squares import prime_two_squares


class ResidueClass(enum.Enum):
    TWO = "two"
    ONE_MOD8 = "one_mod8"
    THREE_MOD8 = "three_mod8"
    FIVE_MOD8 = "five_mod8"
    SEVEN_MOD8 = "seven_mod8"


@dataclass(frozen=True)
class PrimeClassification:
    p: int
    residue_class: ResidueClass
    parts: tuple[int, ...]

    def __post_init__(self):
        if any(v < 1 for v in self.parts):
            raise ValueError("all parts must be >= 1")
        if sum(v * v for v in self.parts) != self.p:
            raise ValueError("squares do not sum to p")


def classify(p: int, rng: RandomSource) -> PrimeClassification:
    """Minimal positive-square representation of the prime p, by p mod 8."""
    _check_nat(p, "p")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return PrimeClassification(2, ResidueClass.TWO, (1, 1))
    m = p % 8
    if m in (1, 5):
        rep2 = prime_two_squares(p, rng)
        cls = ResidueClass.ONE_MOD8 if m == 1 else ResidueClass.FIVE_MOD8
        parts: tuple[int, ...] = rep2.parts
    elif m == 3:
        # a zero part would make p a sum of two squares, impossible for
        # p = 3 (mod 4), so no retry is needed
        cls = ResidueClass.THREE_MOD8
        parts = three_squares(p, rng).parts
    else:
        # likewise a zero part would make p a sum of three squares, excluded
        # for p = 7 (mod 8)
        cls = ResidueClass.SEVEN_MOD8
        parts = four_squares(p, rng).parts
    if parts[0] == 0:
        raise SearchExhausted(f"zero part in minimal representation of {p}")
    return PrimeClassification(p, cls, parts)
