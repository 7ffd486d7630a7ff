"""Integer primitives every other module consumes.

Values are plain Python ints (arbitrary magnitude). All functions here are
pure; :class:`RandomSource` instances are single-caller streams.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

_MASK64 = (1 << 64) - 1


def _check_nat(n: int, name: str = "n") -> None:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"{name} must be nonnegative, got {n}")


def _mix64(v: int) -> int:
    """splitmix64 finalizer; used to derive seeds, not as a stream."""
    v = (v + 0x9E3779B97F4A7C15) & _MASK64
    z = ((v ^ (v >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def isqrt(n: int) -> int:
    """Largest r with r*r <= n."""
    _check_nat(n)
    return math.isqrt(n)


def icbrt(n: int) -> int:
    """Largest r with r**3 <= n."""
    _check_nat(n)
    if n < 2:
        return n
    r = 1 << ((n.bit_length() + 2) // 3)
    while True:
        nxt = (2 * r + n // (r * r)) // 3
        if nxt >= r:
            break
        r = nxt
    while r * r * r > n:
        r -= 1
    while (r + 1) ** 3 <= n:
        r += 1
    return r


# Deterministic Miller-Rabin witness tiers; each base set is exact below its
# limit, and the final 12-prime set is exact for the whole 64-bit range.
_TRIAL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_TIERS = (
    (2_047, (2,)),
    (1_373_653, (2, 3)),
    (9_080_191, (31, 73)),
    (25_326_001, (2, 3, 5)),
    (3_215_031_751, (2, 3, 5, 7)),
    (3_474_749_660_383, (2, 3, 5, 7, 11, 13)),
    (341_550_071_728_321, (2, 3, 5, 7, 11, 13, 17)),
    (1 << 64, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
)


def _mr_composite(a: int, d: int, s: int, n: int) -> bool:
    """True when base a witnesses that n is composite."""
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    """Primality test: exact for n < 2**64, error below 2**-128 beyond.

    Beyond 64 bits the 64 round bases are drawn from a PRNG seeded from n
    itself, so results stay reproducible call to call.
    """
    _check_nat(n)
    if n < 2:
        return False
    for p in _TRIAL_PRIMES:
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        return True
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    if n < 1 << 64:
        for limit, bases in _MR_TIERS:
            if n < limit:
                break
        return not any(_mr_composite(a, d, s, n) for a in bases)
    rnd = random.Random(_mix64(n & _MASK64) ^ (n >> 64))
    return not any(
        _mr_composite(rnd.randrange(2, n - 1), d, s, n) for _ in range(64)
    )


@dataclass(frozen=True)
class Factorization:
    """(prime, exponent) pairs sorted by prime; product reconstructs the input."""

    pairs: tuple[tuple[int, int], ...]

    def value(self) -> int:
        out = 1
        for p, e in self.pairs:
            out *= p**e
        return out

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


_TRIAL_LIMIT = 10**6
_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)  # gaps between integers coprime to 30, from 7


def _brent_rho(n: int) -> int:
    """Nontrivial factor of an odd composite n, Brent cycle detection.

    Polynomial offsets are tried in a fixed order so factorizations are
    reproducible.
    """
    for c in range(1, 100):
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"failed to split {n}")


def _split(n: int, counts: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        counts[n] = counts.get(n, 0) + 1
        return
    d = _brent_rho(n)
    _split(d, counts)
    _split(n // d, counts)


def factorize(n: int) -> Factorization:
    """Factor n >= 1: trial division to 10**6, then Pollard rho on the rest."""
    _check_nat(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    counts: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    d, i = 7, 0
    while d <= _TRIAL_LIMIT and d * d <= n:
        while n % d == 0:
            counts[d] = counts.get(d, 0) + 1
            n //= d
        d += _WHEEL[i]
        i = (i + 1) & 7
    if n > 1:
        if d * d > n:  # survived trial division up to sqrt(n), hence prime
            counts[n] = counts.get(n, 0) + 1
        else:
            _split(n, counts)
    return Factorization(tuple(sorted(counts.items())))


def strip_four_power(n: int) -> tuple[int, int]:
    """Write n = 4**r * q with q % 4 != 0; returns (r, q)."""
    _check_nat(n)
    if n == 0:
        raise ValueError("n must be >= 1")
    r = 0
    while n & 3 == 0:
        n >>= 2
        r += 1
    return r, n


def divisor_class_sums(n: int) -> tuple[int, int, int]:
    """(#divisors = 1 mod 4, #divisors = 3 mod 4, sum of divisors not divisible by 4)."""
    _check_nat(n)
    if n == 0:
        raise ValueError("n must be >= 1")
    divs = [1]
    for p, e in factorize(n):
        powers = []
        pk = 1
        for _ in range(e):
            pk *= p
            powers.append(pk)
        divs += [d * q for d in divs for q in powers]
    count1 = count3 = total = 0
    for d in divs:
        m = d & 3
        if m == 1:
            count1 += 1
        elif m == 3:
            count3 += 1
        if m:
            total += d
    return count1, count3, total


class RandomSource:
    """Deterministic random stream identified by a 64-bit seed.

    Every randomized operation in the package takes one of these explicitly;
    there is no ambient global state, so a run is reproducible from its seed.
    Instances are single-caller: concurrent workers should each hold their own
    source, e.g. via :meth:`spawn`.
    """

    __slots__ = ("seed", "_rng")

    def __init__(self, seed: int = 0):
        if isinstance(seed, bool) or not isinstance(seed, int):
            raise TypeError("seed must be an int")
        if not 0 <= seed <= _MASK64:
            raise ValueError("seed must fit in 64 unsigned bits")
        self.seed = seed
        self._rng = random.Random(seed)

    def uniform_below(self, bound: int) -> int:
        """Uniform integer in [0, bound); bound must be positive."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self._rng.randrange(bound)

    def spawn(self, index: int) -> "RandomSource":
        """Independent child stream, deterministic in (seed, index)."""
        _check_nat(index, "index")
        return RandomSource(_mix64(self.seed ^ _mix64(index & _MASK64)))

    def __repr__(self) -> str:
        return f"RandomSource(seed={self.seed})"
