"""Thin square bases and the greedy shift decomposition.

A basis is a pair of square sets controlled by a cutoff x and scale constants
c0, c1 >= 1:

    small set   A1 = { q^2 <= c0 * sqrt(x) }
    large set   A2 = { q^2 <= c1 * x : q >= c0^(1/2) * x^(1/4) }

Every n <= x is written n = a1 + a2 + a3 + a4 by subtracting the square of
(isqrt(n) - t) for the smallest shift t that leaves a three-square eligible
remainder; the remainder is at most about 2(t+1)*sqrt(n), so its three parts
land in A1 while the subtracted square lands in A2. When the shifted base
falls below A2's lower cutoff (small n), the same split still works with all
four parts in A1, recorded as the fallback path.

All boundary comparisons clear denominators and compare integers exactly;
no floating point touches membership decisions. A2 is held as a base range
and only materialized on demand, so audits at large x stay cheap.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .core_arith import RandomSource, _check_nat, icbrt, isqrt
from .errors import NoDecompositionFound, PartOutOfBasis, ShiftExhausted
from .three_squares import ThreeSquareRep, eligible, three_squares

DEFAULT_T_MAX = 4

PATH_GREEDY = "greedy"
PATH_SMALL_N = "small_n_fallback"


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int) and not isinstance(v, bool):
        return Fraction(v)
    raise TypeError(f"expected int or Fraction, got {type(v).__name__}")


@dataclass(frozen=True)
class BasisParams:
    """Construction parameters: cutoff x, scales c0 and c1, shift bound t_max."""

    x: int
    c0: Fraction
    c1: Fraction
    t_max: int

    def __post_init__(self):
        _check_nat(self.x, "x")
        if self.x < 1:
            raise ValueError("x must be >= 1")
        object.__setattr__(self, "c0", _as_fraction(self.c0))
        object.__setattr__(self, "c1", _as_fraction(self.c1))
        if self.c0 < 1 or self.c1 < 1:
            raise ValueError("c0 and c1 must be >= 1")
        if not isinstance(self.t_max, int) or self.t_max < 1:
            raise ValueError("t_max must be a positive integer")


def default_params(x: int, t_max: int = DEFAULT_T_MAX, c1=Fraction(1)) -> BasisParams:
    """Standard parameters: c0 = 2*(t_max + 1) + 1.

    That choice dominates the worst-case remainder 2*(t+1)*sqrt(n) + (t+1)^2,
    so every remainder part fits in the small set.
    """
    return BasisParams(x=x, c0=Fraction(2 * (t_max + 1) + 1), c1=c1, t_max=t_max)


@lru_cache(maxsize=512)
def _bounds(params: BasisParams) -> tuple[int, int, int]:
    """(a1 max base, a2 lowest base, a2 highest base), exact integer boundaries.

    A1 membership is q^4 * den(c0)^2 <= num(c0)^2 * x, i.e. q^2 <= c0*sqrt(x);
    A2's lower bound is the same comparison reversed, its upper bound is
    q^2 <= c1 * x.
    """
    x = params.x
    n0, d0 = params.c0.numerator, params.c0.denominator
    lhs = n0 * n0 * x
    dd = d0 * d0
    q = isqrt(isqrt(lhs // dd))
    while (q + 1) ** 4 * dd <= lhs:
        q += 1
    while q > 0 and q**4 * dd > lhs:
        q -= 1
    a1_hi = q
    a2_lo = a1_hi if a1_hi**4 * dd == lhs else a1_hi + 1
    n1, d1 = params.c1.numerator, params.c1.denominator
    rhs = n1 * x
    h = isqrt(rhs // d1)
    while (h + 1) ** 2 * d1 <= rhs:
        h += 1
    while h > 0 and h * h * d1 > rhs:
        h -= 1
    return a1_hi, a2_lo, h


@dataclass(frozen=True)
class ThinBasis:
    """Built basis: parameters plus the three base bounds.

    A1 is the squares of 0..a1_max_base; A2 the squares of
    a2_base_lo..a2_base_hi. A2 can hold ~sqrt(x) elements, so it is kept as a
    range and materialized only when a caller asks.
    """

    params: BasisParams
    a1_max_base: int
    a2_base_lo: int
    a2_base_hi: int

    def a1_bases(self) -> range:
        return range(self.a1_max_base + 1)

    def a2_bases(self) -> range:
        return range(self.a2_base_lo, self.a2_base_hi + 1)

    def a1_squares(self) -> list[int]:
        return [q * q for q in self.a1_bases()]

    def a2_squares(self) -> list[int]:
        """Materializes the large set; at big x this is ~sqrt(x) entries."""
        return [q * q for q in self.a2_bases()]

    def in_a1(self, value: int) -> bool:
        if value < 0:
            return False
        q = isqrt(value)
        return q * q == value and q <= self.a1_max_base

    def in_a2(self, value: int) -> bool:
        if value < 0:
            return False
        q = isqrt(value)
        return q * q == value and self.a2_base_lo <= q <= self.a2_base_hi

    def elements(self) -> Iterator[int]:
        """The union A1 | A2 in increasing order, deduplicated."""
        for q in self.a1_bases():
            yield q * q
        for q in range(max(self.a2_base_lo, self.a1_max_base + 1), self.a2_base_hi + 1):
            yield q * q

    def to_dict(self) -> dict:
        p = self.params
        return {
            "x": p.x,
            "c0_num": p.c0.numerator,
            "c0_den": p.c0.denominator,
            "c1_num": p.c1.numerator,
            "c1_den": p.c1.denominator,
            "t_max": p.t_max,
            "a1_bases": list(self.a1_bases()),
            "a2_base_lo": self.a2_base_lo,
            "a2_base_hi": self.a2_base_hi,
        }


def build(params: BasisParams) -> ThinBasis:
    """Resolve the exact base bounds for params."""
    a1_hi, a2_lo, a2_hi = _bounds(params)
    return ThinBasis(params, a1_hi, a2_lo, a2_hi)


def save_basis(basis: ThinBasis, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(basis.to_dict(), fh, indent=1)
        fh.write("\n")


def load_basis(path) -> ThinBasis:
    """Load a serialized basis and re-derive the bounds as a consistency check."""
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    params = BasisParams(
        x=doc["x"],
        c0=Fraction(doc["c0_num"], doc["c0_den"]),
        c1=Fraction(doc["c1_num"], doc["c1_den"]),
        t_max=doc["t_max"],
    )
    basis = build(params)
    if (
        doc["a1_bases"] != list(basis.a1_bases())
        or doc["a2_base_lo"] != basis.a2_base_lo
        or doc["a2_base_hi"] != basis.a2_base_hi
    ):
        raise ValueError(f"basis file {path} is inconsistent with its parameters")
    return basis


def cardinality(basis: ThinBasis) -> tuple[int, int, int]:
    """(#A1, #A2, #(A1 | A2)); the union dedups the boundary overlap."""
    n1 = basis.a1_max_base + 1
    n2 = max(0, basis.a2_base_hi - basis.a2_base_lo + 1)
    overlap = max(0, min(basis.a1_max_base, basis.a2_base_hi) - basis.a2_base_lo + 1)
    return n1, n2, n1 + n2 - overlap


@dataclass(frozen=True)
class GreedyTrace:
    """Record of one greedy decomposition: n = a4 + m with a4 = base^2,
    base = isqrt(n) - t, and m split into three squares."""

    n: int
    t: int
    base: int
    a4: int
    m: int
    three_rep: ThreeSquareRep
    path: str

    @property
    def roots(self) -> tuple[int, int, int, int]:
        r = self.three_rep
        return tuple(sorted((r.x, r.y, r.z, self.base)))  # type: ignore[return-value]

    @property
    def squares(self) -> tuple[int, int, int, int]:
        r = self.three_rep
        return (r.x * r.x, r.y * r.y, r.z * r.z, self.a4)


def greedy_decompose(n: int, params: BasisParams, rng: RandomSource) -> GreedyTrace:
    """Decompose n <= params.x over the basis.

    Takes the smallest shift t in [0, t_max] for which
    m = n - (isqrt(n) - t)^2 is three-square eligible, splits m, and checks
    each part against its set. The greedy path requires the shifted base to
    sit in A2; when it falls below A2's lower cutoff (which happens exactly
    for small n) the decomposition is recorded on the fallback path and all
    four parts must sit in A1 instead.
    """
    _check_nat(n)
    if n > params.x:
        raise ValueError(f"n = {n} exceeds the basis cutoff x = {params.x}")
    a1_hi, a2_lo, a2_hi = _bounds(params)
    b = isqrt(n)
    t = -1
    base = m = 0
    for t_try in range(min(params.t_max, b) + 1):
        base = b - t_try
        m = n - base * base
        if eligible(m):
            t = t_try
            break
    if t < 0:
        raise ShiftExhausted(
            f"no shift t <= {params.t_max} leaves a three-square eligible "
            f"remainder for n = {n}"
        )
    rep = three_squares(m, rng)
    if base >= a2_lo:
        path = PATH_GREEDY
        if base > a2_hi:
            raise PartOutOfBasis(
                f"base {base} of n = {n} exceeds the large-set bound {a2_hi}"
            )
        small_parts = (rep.x, rep.y, rep.z)
    else:
        path = PATH_SMALL_N
        small_parts = (rep.x, rep.y, rep.z, base)
    for part in small_parts:
        if part > a1_hi:
            raise PartOutOfBasis(
                f"part {part}^2 of n = {n} exceeds the small-set bound "
                f"{a1_hi}^2 (c0 too small for t_max = {params.t_max})"
            )
    return GreedyTrace(n, t, base, base * base, m, rep, path)


def verify_trace(trace: GreedyTrace, basis: ThinBasis) -> bool:
    """Recheck a trace against a basis built from the same parameters:
    arithmetic identities, the shift bound, and per-part set membership."""
    rep = trace.three_rep
    if not 0 <= rep.x <= rep.y <= rep.z:
        return False
    if rep.x**2 + rep.y**2 + rep.z**2 != rep.target or rep.target != trace.m:
        return False
    if trace.base < 0 or trace.base * trace.base != trace.a4:
        return False
    if trace.a4 + trace.m != trace.n:
        return False
    if trace.n > basis.params.x:
        return False
    if not 0 <= trace.t <= basis.params.t_max:
        return False
    if trace.base != isqrt(trace.n) - trace.t:
        return False
    if trace.path == PATH_GREEDY:
        if not basis.a2_base_lo <= trace.base <= basis.a2_base_hi:
            return False
    elif trace.path == PATH_SMALL_N:
        if trace.base > basis.a1_max_base:
            return False
    else:
        return False
    return all(q <= basis.a1_max_base for q in (rep.x, rep.y, rep.z))


# ---------------------------------------------------------------------------
# Order-seven cube analogue.
#
# Same greedy idea one power up: subtract the cube of (icbrt(n) - t) and
# split the remainder into six cubes by meeting two three-cube sums in the
# middle. Unlike squares, small inputs legitimately fail (23 needs nine
# cubes); failure is an outcome to report, not an internal error.

_CUBE_T_MAX = 4

_cube3_bound = -1
_cube3_values: list[int] = []
_cube3_rep: dict[int, tuple[int, int, int]] = {}


def _ensure_cube3(bound: int) -> None:
    """Grow the three-cube sum table to cover values up to bound."""
    global _cube3_bound, _cube3_values, _cube3_rep
    if bound <= _cube3_bound:
        return
    bound = max(bound, 2 * _cube3_bound, 4096)
    table: dict[int, tuple[int, int, int]] = {}
    for a in range(icbrt(bound // 3) + 1):
        a3 = a * a * a
        for b in range(a, icbrt((bound - a3) // 2) + 1):
            ab = a3 + b * b * b
            for c in range(b, icbrt(bound - ab) + 1):
                v = ab + c * c * c
                if v not in table:  # enumeration order is lexicographic
                    table[v] = (a, b, c)
    _cube3_rep = table
    _cube3_values = sorted(table)
    _cube3_bound = bound


def _six_cubes(r: int) -> tuple[int, ...] | None:
    """r as a sum of six cubes via two three-cube halves, or None."""
    _ensure_cube3(r)
    rep = _cube3_rep
    for s in _cube3_values:
        if s > r:
            break
        other = rep.get(r - s)
        if other is not None:
            return rep[s] + other
    return None


def cube_greedy7(n: int, rng: RandomSource) -> tuple[int, ...]:
    """Seven nondecreasing cube roots whose cubes sum to n.

    Greedy shift on the leading cube plus a meet-in-the-middle six-cube
    search on the remainder. Raises NoDecompositionFound when every shift
    fails; below a modest threshold that is a legitimate outcome.
    """
    _check_nat(n)
    c = icbrt(n)
    for t in range(min(_CUBE_T_MAX, c) + 1):
        base = c - t
        rest = _six_cubes(n - base**3)
        if rest is not None:
            return tuple(sorted(rest + (base,)))
    raise NoDecompositionFound(f"{n} resisted the greedy seven-cube split")
