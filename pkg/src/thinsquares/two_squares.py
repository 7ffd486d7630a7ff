"""Sums of two squares.

Covers the full two-square toolkit: the even-exponent representability
criterion, prime decomposition through the truncated Euclidean remainder
sequence (Brillhart's simplification of Hermite-Smith), Cornacchia's
generalization x^2 + d*y^2 = p, composite decomposition through the product
identity, and the divisor-class count r2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core_arith import RandomSource, _check_nat, divisor_class_sums, factorize, is_prime, isqrt
from .errors import GirardViolation, NotRepresentable, SearchExhausted


@dataclass(frozen=True)
class TwoSquareRep:
    """Canonical x^2 + y^2 = target with x <= y."""

    x: int
    y: int
    target: int

    def __post_init__(self):
        if not 0 <= self.x <= self.y:
            raise ValueError("need 0 <= x <= y")
        if self.x * self.x + self.y * self.y != self.target:
            raise ValueError("x^2 + y^2 != target")

    @property
    def parts(self) -> tuple[int, int]:
        return (self.x, self.y)


def sqrt_neg_one_mod_p(p: int, rng: RandomSource) -> int:
    """Square root of -1 modulo a prime p = 1 (mod 4).

    Draws random bases b and computes b^((p-1)/4); the draw succeeds exactly
    when b is a quadratic nonresidue, so two draws are expected.
    """
    _check_nat(p, "p")
    if p % 4 != 1 or not is_prime(p):
        raise ValueError(f"p must be a prime = 1 (mod 4), got {p}")
    exp = (p - 1) // 4
    for _ in range(512):
        b = 1 + rng.uniform_below(p - 1)
        u = pow(b, exp, p)
        if u * u % p == p - 1:
            return u
    raise SearchExhausted(f"no square root of -1 mod {p} found in 512 draws")


def prime_two_squares(p: int, rng: RandomSource) -> TwoSquareRep:
    """Decompose a prime p = 2 or p = 1 (mod 4) as x^2 + y^2.

    The Euclidean remainder sequence on (p, u) with u^2 = -1 (mod p) is run
    until the first remainder at or below sqrt(p); that remainder and the
    next one are the two legs.
    """
    _check_nat(p, "p")
    if p == 2:
        return TwoSquareRep(1, 1, 2)
    if p % 4 != 1 or not is_prime(p):
        raise GirardViolation(f"{p} is not 2 or a prime = 1 (mod 4)")
    u = sqrt_neg_one_mod_p(p, rng)
    a, b = p, u
    while b * b > p:
        a, b = b, a % b
    x, y = b, a % b
    if x * x + y * y != p:  # cannot happen for prime p; guards the contract
        raise SearchExhausted(f"remainder sequence failed for {p}")
    if x > y:
        x, y = y, x
    return TwoSquareRep(x, y, p)


def _sqrt_mod_p(a: int, p: int, rng: RandomSource) -> int | None:
    """Tonelli-Shanks: r with r^2 = a (mod p), or None for a nonresidue."""
    a %= p
    if a == 0:
        return 0
    if p == 2:
        return a
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    while True:  # random nonresidue; half of all residues qualify
        z = 2 + rng.uniform_below(p - 2)
        if pow(z, (p - 1) // 2, p) == p - 1:
            break
    m, c = s, pow(z, q, p)
    t, r = pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def cornacchia(d: int, p: int, rng: RandomSource) -> tuple[int, int]:
    """Solve x^2 + d*y^2 = p for prime p and 1 <= d < p.

    Runs the remainder sequence from the larger square root of -d mod p down
    to sqrt(p); the representation exists iff the leftover (p - x^2)/d is a
    perfect square.
    """
    _check_nat(d, "d")
    _check_nat(p, "p")
    if not 1 <= d < p:
        raise ValueError("need 1 <= d < p")
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    r0 = _sqrt_mod_p(-d % p, p, rng)
    if r0 is None:
        raise NotRepresentable(f"-{d} is not a square mod {p}")
    if r0 < p - r0:
        r0 = p - r0
    a, b = p, r0
    limit = isqrt(p)
    while b > limit:
        a, b = b, a % b
    rem = p - b * b
    if rem % d != 0:
        raise NotRepresentable(f"{p} has no representation x^2 + {d}*y^2")
    c = rem // d
    y = isqrt(c)
    if y * y != c or y == 0:
        raise NotRepresentable(f"{p} has no representation x^2 + {d}*y^2")
    return b, y


def is_sum_two_squares(n: int) -> bool:
    """True iff every prime = 3 (mod 4) divides n to an even power (0 included)."""
    _check_nat(n)
    if n == 0:
        return True
    return all(e % 2 == 0 for p, e in factorize(n) if p % 4 == 3)


def two_squares_any(n: int, rng: RandomSource) -> TwoSquareRep:
    """Decompose any representable n as x^2 + y^2, minimizing x.

    Factors n, splits each prime = 1 (mod 4) once, and expands both sign
    choices of the product identity

        (a^2+b^2)(c^2+d^2) = (ac-bd)^2 + (ad+bc)^2 = (ac+bd)^2 + (ad-bc)^2

    per prime instance, which enumerates every essentially different
    representation; the square part from primes = 3 (mod 4) scales the result.
    """
    _check_nat(n)
    if n == 0:
        return TwoSquareRep(0, 0, 0)
    scale = 1
    reps = {(0, 1)}  # canonical reps of the processed part; 1 = 0^2 + 1^2
    for p, e in factorize(n):
        if p % 4 == 3:
            if e % 2:
                raise GirardViolation(
                    f"{n} has prime divisor {p} = 4a+3 to an odd power"
                )
            scale *= p ** (e // 2)
            continue
        if p == 2:
            pa, pb = 1, 1
        else:
            rep = prime_two_squares(p, rng)
            pa, pb = rep.x, rep.y
        for _ in range(e):
            nxt = set()
            for c, dd in reps:
                for u, v in ((pa * c - pb * dd, pa * dd + pb * c), (pa * c + pb * dd, pa * dd - pb * c)):
                    u, v = abs(u), abs(v)
                    nxt.add((u, v) if u <= v else (v, u))
            reps = nxt
    x, y = min(reps)
    return TwoSquareRep(scale * x, scale * y, n)


def r2(n: int) -> int:
    """Number of ordered signed pairs (a, b) with a^2 + b^2 = n: 4*(d1 - d3)."""
    _check_nat(n)
    if n == 0:
        raise ValueError("n must be >= 1")
    count1, count3, _ = divisor_class_sums(n)
    return 4 * (count1 - count3)
