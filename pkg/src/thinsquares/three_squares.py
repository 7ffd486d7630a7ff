"""Three-square eligibility and a randomized constructive decomposition.

An integer has a three-square representation iff it is not of the form
4^r(8s+7). The constructive path strips powers of 4, then draws random first
legs x until the remainder is a prime = 1 (mod 4) (or twice one, in the
residue-3 case) and splits that prime into two squares. Small inputs are
decomposed exhaustively and memoized, which keeps bulk callers cheap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core_arith import RandomSource, _check_nat, is_prime, isqrt, strip_four_power
from .errors import IneligibleForm, SearchExhausted
from .two_squares import prime_two_squares

_BRUTE_THRESHOLD = 10**4
_BRUTE_GUARD = 10**7

_small_cache: dict[int, tuple[int, int, int]] = {}


@dataclass(frozen=True)
class ThreeSquareRep:
    """Canonical x^2 + y^2 + z^2 = target with x <= y <= z."""

    x: int
    y: int
    z: int
    target: int

    def __post_init__(self):
        if not 0 <= self.x <= self.y <= self.z:
            raise ValueError("need 0 <= x <= y <= z")
        if self.x * self.x + self.y * self.y + self.z * self.z != self.target:
            raise ValueError("x^2 + y^2 + z^2 != target")

    @property
    def parts(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)


def eligible(n: int) -> bool:
    """True iff n is a sum of three squares, i.e. not of the form 4^r(8s+7)."""
    _check_nat(n)
    if n == 0:
        return True
    _, q = strip_four_power(n)
    return q % 8 != 7


def _brute_three(n: int) -> tuple[int, int, int] | None:
    """Lexicographically least triple, or None when n is ineligible."""
    for a in range(isqrt(n // 3) + 1):
        r1 = n - a * a
        for b in range(a, isqrt(r1 // 2) + 1):
            c2 = r1 - b * b
            c = isqrt(c2)
            if c * c == c2:
                return a, b, c
    return None


def _cached_brute(n: int) -> tuple[int, int, int]:
    hit = _small_cache.get(n)
    if hit is None:
        found = _brute_three(n)
        if found is None:  # callers check eligibility first
            raise SearchExhausted(f"exhaustive search found no triple for {n}")
        _small_cache[n] = hit = found
    return hit


def _complete_two(diff: int, halved: bool, rng: RandomSource) -> tuple[int, int] | None:
    """Try to write diff as a sum of two squares along the fast paths only."""
    if halved:
        half = diff // 2  # diff = 2 (mod 8) by parity forcing
        if half == 1:
            return 1, 1
        if half % 4 == 1 and is_prime(half):
            rep = prime_two_squares(half, rng)
            return rep.y + rep.x, rep.y - rep.x  # 2(a^2+b^2) = (a+b)^2 + (a-b)^2
        return None
    if diff <= 2:
        return ((0, 0), (0, 1), (1, 1))[diff]
    s = isqrt(diff)
    if s * s == diff:
        return 0, s
    if diff % 4 == 1 and is_prime(diff):
        rep = prime_two_squares(diff, rng)
        return rep.x, rep.y
    return None


def _randomized_three(q: int, rng: RandomSource, max_draws: int) -> tuple[int, int, int] | None:
    """Random first-leg search for eligible q with q % 4 != 0."""
    root = isqrt(q)
    halved = q % 8 == 3  # seek q - x^2 = 2p instead of p
    want_odd = halved or q % 2 == 0
    if want_odd:
        choices = (root + 1) // 2
        lowbit = 1
    else:
        choices = root // 2 + 1
        lowbit = 0
    for _ in range(max_draws):
        x = 2 * rng.uniform_below(choices) + lowbit
        rest = _complete_two(q - x * x, halved, rng)
        if rest is not None:
            a, b = rest
            return tuple(sorted((x, a, b)))  # type: ignore[return-value]
    return None


def three_squares(n: int, rng: RandomSource) -> ThreeSquareRep:
    """Decompose an eligible n as x^2 + y^2 + z^2 (canonical order).

    Raises IneligibleForm for n = 4^r(8s+7). SearchExhausted is only possible
    for very large stubborn inputs where the exhaustive fallback is out of
    reach; it does not occur at audit scales.
    """
    _check_nat(n)
    if not eligible(n):
        raise IneligibleForm(f"{n} = 4^r(8s+7) is not a sum of three squares")
    if n < _BRUTE_THRESHOLD:
        x, y, z = _cached_brute(n)
        return ThreeSquareRep(x, y, z, n)
    r, q = strip_four_power(n)
    scale = 1 << r
    if q < _BRUTE_THRESHOLD:
        parts = _cached_brute(q)
    else:
        parts = _randomized_three(q, rng, 200 * q.bit_length())
        if parts is None:
            if q > _BRUTE_GUARD:
                raise SearchExhausted(
                    f"randomized search for {n} hit its cap and {q} is too large "
                    "for the exhaustive fallback"
                )
            parts = _brute_three(q)
            if parts is None:
                raise SearchExhausted(f"exhaustive search found no triple for {q}")
    return ThreeSquareRep(scale * parts[0], scale * parts[1], scale * parts[2], n)
