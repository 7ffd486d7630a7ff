"""Brute-force reference implementations.

Ground truth for the constructive and formula-based modules. Everything here
is deliberately simple enough to audit by eye and guarded to desk scale;
InputTooLarge fires rather than letting a caller start an unbounded
enumeration.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from functools import lru_cache

from .core_arith import _check_nat, icbrt, isqrt
from .errors import InputTooLarge, NoPositiveRep

# per power k: (max arity, max n)
_REP_GUARDS = {2: (4, 10**6), 3: (7, 10**5)}
_SIGNED_GUARDS = {2: 10**4, 4: 5000}
_MIN_POSITIVE_GUARD = 10**5


@dataclass(frozen=True)
class RepSet:
    """All canonical representations of n as s k-th powers."""

    n: int
    s: int
    k: int
    canonical_tuples: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.canonical_tuples)

    def __contains__(self, item) -> bool:
        return tuple(item) in self.canonical_tuples


def _iroot(n: int, k: int) -> int:
    return isqrt(n) if k == 2 else icbrt(n)


def _nested(n: int, s: int, lo: int, k: int) -> list[tuple[int, ...]]:
    """All nondecreasing s-tuples with elements >= lo and k-power sum n."""
    if s == 1:
        r = _iroot(n, k)
        return [(r,)] if r >= lo and r**k == n else []
    out = []
    for a in range(lo, _iroot(n // s, k) + 1):
        ak = a**k
        for rest in _nested(n - ak, s - 1, a, k):
            out.append((a,) + rest)
    return out


def _bounded_tuples(limit: int, s: int, lo: int, k: int):
    """Yield (tuple, power sum) for nondecreasing s-tuples with sum <= limit."""
    if s == 0:
        yield (), 0
        return
    a = lo
    while s * a**k <= limit:
        ak = a**k
        for rest, v in _bounded_tuples(limit - ak, s - 1, a, k):
            yield (a,) + rest, v + ak
        a += 1


def _meet_in_middle(n: int, s: int, k: int) -> list[tuple[int, ...]]:
    """Split s into halves and join left tuples against a right-half table."""
    sl = s // 2
    sr = s - sl
    right: dict[int, list[tuple[int, ...]]] = {}
    for t, v in _bounded_tuples(n, sr, 0, k):
        right.setdefault(v, []).append(t)
    for lst in right.values():
        lst.sort()
    out = []
    for t, v in _bounded_tuples(n, sl, 0, k):
        matches = right.get(n - v)
        if not matches:
            continue
        i = bisect.bisect_left(matches, (t[-1],))
        for rt in matches[i:]:
            out.append(t + rt)
    return out


def brute_reps(n: int, s: int, k: int) -> RepSet:
    """Exhaustive canonical enumeration of n as s k-th powers."""
    _check_nat(n)
    if k not in _REP_GUARDS:
        raise ValueError(f"unsupported power k={k}; only 2 and 3")
    if s < 1:
        raise ValueError("s must be >= 1")
    max_s, max_n = _REP_GUARDS[k]
    if s > max_s or n > max_n:
        raise InputTooLarge(f"brute_reps guard: k={k} allows s <= {max_s}, n <= {max_n}")
    if s >= 4:
        tuples = _meet_in_middle(n, s, k)
    else:
        tuples = _nested(n, s, 0, k)
    return RepSet(n, s, k, tuple(sorted(tuples)))


def _signed_pairs(n: int) -> int:
    """Ordered signed pairs (a, b) in Z^2 with a^2 + b^2 = n, by direct scan."""
    count = 0
    for a in range(isqrt(n) + 1):
        b2 = n - a * a
        b = isqrt(b2)
        if b * b == b2:
            count += (1 if a == 0 else 2) * (1 if b == 0 else 2)
    return count


@lru_cache(maxsize=2)
def _pair_count_table(limit: int) -> tuple[int, ...]:
    return tuple(_signed_pairs(v) for v in range(limit + 1))


def brute_signed_count(n: int, s: int) -> int:
    """Ordered signed s-tuples over Z^s whose squares sum to n.

    s = 2 scans the lattice directly; s = 4 convolves the precomputed pair
    counts (a two-square sum table), which keeps full-range audits fast.
    """
    _check_nat(n)
    if s not in _SIGNED_GUARDS:
        raise ValueError(f"unsupported arity s={s}; only 2 and 4")
    if n > _SIGNED_GUARDS[s]:
        raise InputTooLarge(f"brute_signed_count guard: s={s} allows n <= {_SIGNED_GUARDS[s]}")
    if s == 2:
        return _signed_pairs(n)
    table = _pair_count_table(_SIGNED_GUARDS[4])
    return sum(table[j] * table[n - j] for j in range(n + 1))


def min_nonzero_squares(n: int) -> int:
    """Smallest count of strictly positive squares summing to n."""
    _check_nat(n)
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > _MIN_POSITIVE_GUARD:
        raise InputTooLarge(f"min_nonzero_squares guard: n <= {_MIN_POSITIVE_GUARD}")
    r = isqrt(n)
    if r * r == n:
        return 1
    for a in range(1, isqrt(n // 2) + 1):
        b2 = n - a * a
        b = isqrt(b2)
        if b * b == b2:
            return 2
    for a in range(1, isqrt(n // 3) + 1):
        r1 = n - a * a
        for b in range(a, isqrt(r1 // 2) + 1):
            c2 = r1 - b * b
            c = isqrt(c2)
            if c * c == c2:
                return 3
    for a in range(1, isqrt(n // 4) + 1):
        r1 = n - a * a
        for b in range(a, isqrt(r1 // 3) + 1):
            r2 = r1 - b * b
            for c in range(b, isqrt(r2 // 2) + 1):
                d2 = r2 - c * c
                d = isqrt(d2)
                if d * d == d2 and d >= 1:
                    return 4
    raise NoPositiveRep(f"{n} is not a sum of at most four positive squares")
