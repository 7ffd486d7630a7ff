"""Randomized four-square decomposition, the 2s-square extension, and r4.

Every nonnegative integer splits into four squares. The randomized path draws
pairs (x, y) with parities chosen so that N - x^2 - y^2 = 1 (mod 4) and tests
that difference for primality; a hit is finished with the prime two-square
split. The number of draws consumed is recorded on the result so callers can
study the growth of the trial count.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core_arith import RandomSource, _check_nat, divisor_class_sums, is_prime, isqrt, strip_four_power
from .errors import SearchExhausted
from .two_squares import prime_two_squares, two_squares_any

_BRUTE_THRESHOLD = 10**4
_BRUTE_GUARD = 10**7


@dataclass(frozen=True)
class FourSquareRep:
    """Canonical x^2 + y^2 + z^2 + w^2 = target, plus the random draw count."""

    x: int
    y: int
    z: int
    w: int
    target: int
    trials: int = 0

    def __post_init__(self):
        if not 0 <= self.x <= self.y <= self.z <= self.w:
            raise ValueError("need 0 <= x <= y <= z <= w")
        if self.x**2 + self.y**2 + self.z**2 + self.w**2 != self.target:
            raise ValueError("squares do not sum to target")
        if self.trials < 0:
            raise ValueError("trials must be >= 0")

    @property
    def parts(self) -> tuple[int, int, int, int]:
        return (self.x, self.y, self.z, self.w)


@dataclass(frozen=True)
class MultiSquareRep:
    """2s nondecreasing roots whose squares sum to target."""

    parts: tuple[int, ...]
    target: int

    def __post_init__(self):
        if len(self.parts) < 2 or len(self.parts) % 2:
            raise ValueError("parts length must be even and >= 2")
        if any(a > b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be nondecreasing")
        if sum(v * v for v in self.parts) != self.target:
            raise ValueError("squares do not sum to target")


def _brute_four(n: int) -> tuple[int, int, int, int]:
    """Lexicographically least quadruple; always exists."""
    for a in range(isqrt(n // 4) + 1):
        r1 = n - a * a
        for b in range(a, isqrt(r1 // 3) + 1):
            r2 = r1 - b * b
            for c in range(b, isqrt(r2 // 2) + 1):
                d2 = r2 - c * c
                d = isqrt(d2)
                if d * d == d2:
                    return a, b, c, d
    raise SearchExhausted(f"no quadruple for {n}")  # unreachable


def _draw_even(root: int, rng: RandomSource) -> int:
    return 2 * rng.uniform_below(root // 2 + 1)


def _draw_odd(root: int, rng: RandomSource) -> int:
    return 2 * rng.uniform_below((root + 1) // 2) + 1


def four_squares(N: int, rng: RandomSource) -> FourSquareRep:
    """Decompose any N >= 0 as a sum of four squares (canonical order).

    Factors of 4 are stripped up front (halving the roots is exact), small N
    goes through the exhaustive search with trials = 0, everything else
    through the randomized prime completion with an iteration cap and an
    exhaustive fallback.
    """
    _check_nat(N, "N")
    if N == 0:
        return FourSquareRep(0, 0, 0, 0, 0, 0)
    r, q = strip_four_power(N)
    if r:
        inner = four_squares(q, rng)
        s = 1 << r
        return FourSquareRep(
            s * inner.x, s * inner.y, s * inner.z, s * inner.w, N, inner.trials
        )
    if N < _BRUTE_THRESHOLD:
        a, b, c, d = _brute_four(N)
        return FourSquareRep(a, b, c, d, N, 0)

    root = isqrt(N)
    mod = N & 3  # 1, 2 or 3 after stripping fours
    trials = 0
    cap = 200 * N.bit_length()
    while trials < cap:
        trials += 1
        if mod == 1:
            x, y = _draw_even(root, rng), _draw_even(root, rng)
        elif mod == 2:
            x, y = _draw_odd(root, rng), _draw_even(root, rng)
        else:
            x, y = _draw_odd(root, rng), _draw_odd(root, rng)
        diff = N - x * x - y * y
        if diff < 0:
            continue
        # diff = 1 (mod 4) by the parity forcing above
        s = isqrt(diff)
        if s * s == diff:
            z, w = 0, s
        elif is_prime(diff):
            rep = prime_two_squares(diff, rng)
            z, w = rep.x, rep.y
        else:
            continue
        a, b, c, d = sorted((x, y, z, w))
        return FourSquareRep(a, b, c, d, N, trials)

    if N > _BRUTE_GUARD:
        raise SearchExhausted(
            f"randomized search for {N} hit its cap of {cap} draws and the "
            "input is too large for the exhaustive fallback"
        )
    a, b, c, d = _brute_four(N)
    return FourSquareRep(a, b, c, d, N, trials)


def two_s_squares(N: int, s: int, rng: RandomSource) -> MultiSquareRep:
    """Write N as a sum of 2s squares.

    s >= 2 always succeeds: a four-square representation is padded with
    zeros. s = 1 delegates to the two-square decomposition and raises
    GirardViolation when N is not representable.
    """
    _check_nat(N, "N")
    if s < 1:
        raise ValueError("s must be >= 1")
    if s == 1:
        rep2 = two_squares_any(N, rng)
        return MultiSquareRep((rep2.x, rep2.y), N)
    rep = four_squares(N, rng)
    parts = (0,) * (2 * s - 4) + rep.parts
    return MultiSquareRep(tuple(sorted(parts)), N)


def r4(N: int) -> int:
    """Number of ordered signed quadruples with square sum N:
    8 * (sum of divisors of N not divisible by 4)."""
    _check_nat(N, "N")
    if N == 0:
        raise ValueError("N must be >= 1")
    _, _, total = divisor_class_sums(N)
    return 8 * total
