"""Boxes of exponent tuples and their shadow combinatorics.

The box for dims (d1, ..., dm) is {0..d1-1} x ... x {0..dm-1}, with
d1 <= ... <= dm.  Lexicographic comparisons treat the leftmost coordinate
as most significant, so descending lex order coincides with descending
order of the mixed-radix value

    value(a) = sum_i a_i * prod(dims[i+1:])

and 1-based descending ranks are r = n - value(a).

The shadow of a subset S is every box tuple that dominates some element
of S coordinatewise.  Shadows are computed by a full scan of the box:
at desk scale this is cheap, obviously correct, and doubles as the
oracle against the closed-form segment sizes.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import BudgetExceededError, DegreeRangeError, RankRangeError

DEFAULT_BUDGET = 10_000_000

ExpTuple = tuple


@dataclass(frozen=True)
class GridShape:
    """Ascending dimension vector (d1, ..., dm) of an exponent box."""

    dims: tuple

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if not dims:
            raise ValueError("at least one dimension required")
        if any(d < 1 for d in dims):
            raise ValueError(f"dimensions must be >= 1, got {dims}")
        if any(a > b for a, b in zip(dims, dims[1:])):
            raise ValueError(f"dimensions must be ascending, got {dims}")
        object.__setattr__(self, "dims", dims)

    @classmethod
    def parse(cls, text: str) -> GridShape:
        """Parse "d1xd2x...xdm", e.g. "2x3x3"."""
        try:
            dims = tuple(int(part) for part in text.strip().split("x"))
        except ValueError:
            raise ValueError(f"bad grid spec {text!r}, expected d1xd2x...xdm") from None
        return cls(dims)

    def __str__(self):
        return "x".join(str(d) for d in self.dims)

    @property
    def m(self) -> int:
        return len(self.dims)

    @property
    def n(self) -> int:
        return math.prod(self.dims)

    @property
    def k(self) -> int:
        return sum(d - 1 for d in self.dims)

    @property
    def place_values(self) -> tuple:
        """(prod dims[i+1:] for each i); leftmost coordinate weighs most."""
        pv = []
        acc = 1
        for d in reversed(self.dims):
            pv.append(acc)
            acc *= d
        return tuple(reversed(pv))

    def contains(self, t) -> bool:
        return len(t) == self.m and all(0 <= x < d for x, d in zip(t, self.dims))


def degree(t) -> int:
    """Total degree of an exponent tuple: the sum of its coordinates."""
    return sum(t)


def parse_tuple(text: str) -> tuple:
    """Parse a comma-joined exponent tuple, e.g. "1,2"."""
    try:
        return tuple(int(part) for part in text.strip().split(","))
    except ValueError:
        raise ValueError(f"bad tuple {text!r}, expected comma-joined integers") from None


def format_tuple(t) -> str:
    return ",".join(str(x) for x in t)


def _check_deg(shape, u):
    if not 0 <= u <= shape.k:
        raise DegreeRangeError(f"degree {u} outside [0, {shape.k}] for {shape}")


def all_tuples(shape: GridShape, descending: bool = False) -> list:
    """Every box tuple in ascending (or descending) lex order."""
    ts = list(itertools.product(*(range(d) for d in shape.dims)))
    return ts[::-1] if descending else ts


def tuples_deg_eq(shape: GridShape, u: int, descending: bool = False) -> list:
    _check_deg(shape, u)
    return [t for t in all_tuples(shape, descending) if sum(t) == u]


def tuples_deg_le(shape: GridShape, u: int, descending: bool = False) -> list:
    _check_deg(shape, u)
    return [t for t in all_tuples(shape, descending) if sum(t) <= u]


def tuples_deg_ge(shape: GridShape, u: int, descending: bool = False) -> list:
    _check_deg(shape, u)
    return [t for t in all_tuples(shape, descending) if sum(t) >= u]


def level_counts(shape: GridShape) -> tuple:
    """Number of box tuples of each total degree 0..k (by convolution)."""
    counts = [1]
    for d in shape.dims:
        nxt = [0] * (len(counts) + d - 1)
        for i, c in enumerate(counts):
            for j in range(d):
                nxt[i + j] += c
        counts = nxt
    return tuple(counts)


def count_deg_le(shape: GridShape, u: int) -> int:
    _check_deg(shape, u)
    return sum(level_counts(shape)[: u + 1])


def count_deg_ge(shape: GridShape, u: int) -> int:
    _check_deg(shape, u)
    return sum(level_counts(shape)[u:])


def mixed_radix_value(shape: GridShape, t) -> int:
    """Order-preserving integer form sum(t_i * place_value_i)."""
    return sum(x * pv for x, pv in zip(t, shape.place_values))


def complement(shape: GridShape, t) -> tuple:
    """Coordinatewise reflection (d_i - 1 - t_i); reverses lex order."""
    return tuple(d - 1 - x for x, d in zip(t, shape.dims))


def tuple_at_rank_desc(shape: GridShape, r: int) -> tuple:
    """The r-th box tuple (1-based) in descending lex order, in O(m).

    Extracts the mixed-radix digits of n - r; no enumeration involved.
    """
    if not 1 <= r <= shape.n:
        raise RankRangeError(f"rank {r} outside [1, {shape.n}] for {shape}")
    v = shape.n - r
    digits = []
    for pv in shape.place_values:
        digits.append(v // pv)
        v %= pv
    return tuple(digits)


def rank_desc(shape: GridShape, t) -> int:
    """1-based position of t in descending lex order; inverse of unrank."""
    if not shape.contains(t):
        raise ValueError(f"{t} outside box {shape}")
    return shape.n - mixed_radix_value(shape, t)


def rth_of_deg_le(shape: GridShape, d: int, r: int) -> tuple:
    """The r-th tuple of degree <= d in descending lex order.

    Walks descending ranks and skips tuples over the degree bound.
    """
    _check_deg(shape, d)
    if not 1 <= r <= count_deg_le(shape, d):
        raise RankRangeError(
            f"rank {r} outside [1, {count_deg_le(shape, d)}] for degree <= {d}")
    seen = 0
    for pos in range(1, shape.n + 1):
        t = tuple_at_rank_desc(shape, pos)
        if sum(t) <= d:
            seen += 1
            if seen == r:
                return t
    raise AssertionError("unreachable")


def rth_of_deg_ge(shape: GridShape, u: int, r: int) -> tuple:
    """The r-th tuple of degree >= u in ascending lex order.

    Coordinatewise reflection maps the descending degree-<= segment onto
    the ascending degree->= one, so this reuses rth_of_deg_le.
    """
    _check_deg(shape, u)
    if not 1 <= r <= count_deg_ge(shape, u):
        raise RankRangeError(
            f"rank {r} outside [1, {count_deg_ge(shape, u)}] for degree >= {u}")
    return complement(shape, rth_of_deg_le(shape, shape.k - u, r))


def lex_segment(shape: GridShape, d: int, r: int) -> list:
    """First r tuples of degree <= d in descending lex order."""
    _check_deg(shape, d)
    if not 1 <= r <= count_deg_le(shape, d):
        raise RankRangeError(
            f"rank {r} outside [1, {count_deg_le(shape, d)}] for degree <= {d}")
    out = []
    for pos in range(1, shape.n + 1):
        t = tuple_at_rank_desc(shape, pos)
        if sum(t) <= d:
            out.append(t)
            if len(out) == r:
                return out
    raise AssertionError("unreachable")


def lex_segment_level(shape: GridShape, u: int, r: int) -> list:
    """First r tuples of degree exactly u in descending lex order."""
    level = tuples_deg_eq(shape, u, descending=True)
    if not 0 <= r <= len(level):
        raise RankRangeError(f"rank {r} outside [0, {len(level)}] for level {u}")
    return level[:r]


def _dominates(t, s) -> bool:
    return all(x >= y for x, y in zip(t, s))


def shadow(shape: GridShape, pts) -> set:
    """All box tuples dominating some element of pts coordinatewise."""
    pts = set(pts)
    for s in pts:
        if not shape.contains(s):
            raise ValueError(f"{s} outside box {shape}")
    if not pts:
        return set()
    return {t for t in all_tuples(shape) if any(_dominates(t, s) for s in pts)}


def shadow_level(shape: GridShape, pts, v: int) -> set:
    """Shadow restricted to total degree exactly v."""
    _check_deg(shape, v)
    return {t for t in shadow(shape, pts) if sum(t) == v}


def lex_segment_shadow_size(shape: GridShape, d: int, r: int) -> int:
    """Size of the shadow of the first r tuples of degree <= d, closed form.

    The shadow of that segment is exactly the set of tuples lex-above its
    last element a_r, so its size is the descending rank of a_r within the
    whole box: n - sum(a_{r,i} * place_value_i).
    """
    a = rth_of_deg_le(shape, d, r)
    return shape.n - mixed_radix_value(shape, a)


@dataclass(frozen=True)
class InclusionReport:
    """Outcome of a set-inclusion check, with a witness when it fails."""

    holds: bool
    counterexample: tuple | None
    lhs: tuple
    rhs: tuple


def check_clements_lindstrom(shape: GridShape, u: int, pts) -> InclusionReport:
    """Harness for shadow compression on one level.

    For S inside level u, compares the next-level shadow of the lex
    segment L(S) against the lex segment of the next-level shadow of S;
    the inclusion is a theorem, so a counterexample means a bug.
    """
    if not 0 <= u < shape.k:
        raise DegreeRangeError(f"level {u} outside [0, {shape.k}) for {shape}")
    pts = set(pts)
    for s in pts:
        if not (shape.contains(s) and sum(s) == u):
            raise ValueError(f"{s} is not a level-{u} tuple of {shape}")
    segment = lex_segment_level(shape, u, len(pts))
    lhs = shadow_level(shape, segment, u + 1)
    rhs = set(lex_segment_level(shape, u + 1, len(shadow_level(shape, pts, u + 1))))
    extra = sorted(lhs - rhs)
    return InclusionReport(
        holds=not extra,
        counterexample=extra[0] if extra else None,
        lhs=tuple(sorted(lhs)),
        rhs=tuple(sorted(rhs)),
    )


def min_shadow_size(shape: GridShape, v: int, r: int) -> int:
    """Shadow size of the first r tuples of degree <= v (the minimizer)."""
    return len(shadow(shape, lex_segment(shape, v, r)))


def brute_min_shadow(shape: GridShape, v: int, r: int,
                     budget: int = DEFAULT_BUDGET) -> int:
    """Minimum shadow size over every r-subset of degree <= v (oracle)."""
    pool = tuples_deg_le(shape, v, descending=True)
    if not 1 <= r <= len(pool):
        raise RankRangeError(f"rank {r} outside [1, {len(pool)}] for degree <= {v}")
    if math.comb(len(pool), r) > budget:
        raise BudgetExceededError(
            f"{math.comb(len(pool), r)} subsets exceed budget {budget}")
    return min(len(shadow(shape, subset))
               for subset in itertools.combinations(pool, r))
