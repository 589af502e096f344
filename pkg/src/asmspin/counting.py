"""Exact enumeration and counting of higher spin alternating sign matrices.

The counting engine is a cell-by-cell transfer ("broken profile") dynamic
program.  Cells are processed in row-major order; the state consists of n
vertical-edge values (columns already passed in the current row carry the
new value, the rest still carry the previous row's value) together with the
horizontal carry, giving at most (r+1)^(n+1) states.  All arithmetic is
exact: the DP runs on int64 arrays while a conservative bound proves no
overflow is possible and is promoted to Python integers beyond that point.

Interior ("relative interior") counting uses the strict form of the
defining inequalities: for the signed family the internal prefix sums and
internal vertical edges are confined to [1, r-1]; for semimagic squares
every entry must be positive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

import numpy as np

from .core import AsmMatrix, VertexType, enumerate_vertex_types
from .errors import BadShape, CapExceeded, MissingWeight, ResourceLimit

DEFAULT_MAX_STATES = 10**8

# Promote the DP arrays to Python integers before any int64 value could
# exceed 2^62 (each new value is a sum of at most r+1 old values, possibly
# scaled by a weight).
_INT64_CAP = 2**62

FAMILIES = ("asm", "sms")
REGIONS = ("closed", "interior")


@dataclass(frozen=True)
class CountQuery:
    n: int
    r: int
    family: str = "asm"
    region: str = "closed"

    def __post_init__(self):
        if self.n < 1:
            raise BadShape(f"n must be positive, got {self.n}")
        if self.r < 0:
            raise BadShape(f"r must be nonnegative, got {self.r}")
        if self.family not in FAMILIES:
            raise BadShape(f"family must be one of {FAMILIES}")
        if self.region not in REGIONS:
            raise BadShape(f"region must be one of {REGIONS}")


def state_space_size(n: int, r: int) -> int:
    """Number of DP states used to count at parameters (n, r)."""
    return (r + 1) ** (n + 1)


def _check_states(n: int, r: int, max_states: int | None) -> int:
    bound = DEFAULT_MAX_STATES if max_states is None else max_states
    states = state_space_size(n, r)
    if states > bound:
        raise ResourceLimit(states, bound)
    return bound


def _maybe_promote(dp: np.ndarray, factor: int) -> np.ndarray:
    """Switch to Python-int arithmetic before int64 could overflow."""
    if dp.dtype == object:
        return dp
    peak = int(np.abs(dp).max())
    if peak > _INT64_CAP // max(factor, 1):
        return dp.astype(object)
    return dp


def _bounds(n: int, r: int, asm_interior: bool):
    """Per-row vertical-value bounds and per-column carry bounds."""

    def w_bounds(i: int) -> tuple[int, int]:
        if i == n:
            return (r, r)
        if asm_interior:
            return (1, r - 1)
        return (0, r)

    def carry_bounds(j: int) -> tuple[int, int]:
        if j == n:
            return (r, r)
        if asm_interior:
            return (1, r - 1)
        return (0, r)

    return w_bounds, carry_bounds


def _sweep_count(n: int, r: int, family: str, region: str, max_states: int | None) -> int:
    _check_states(n, r, max_states)
    m = r + 1
    sms = family == "sms"
    interior = region == "interior"
    asm_interior = interior and not sms
    entry_min = (1 if interior else 0) if sms else None
    w_bounds, carry_bounds = _bounds(n, r, asm_interior)

    dp = np.zeros((m,) * (n + 1), dtype=np.int64)
    dp[(0,) * (n + 1)] = 1
    for i in range(1, n + 1):
        w_lo, w_hi = w_bounds(i)
        for j in range(1, n + 1):
            dp = _maybe_promote(dp, m)
            c_lo, c_hi = carry_bounds(j)
            new = np.zeros_like(dp)
            view = np.moveaxis(dp, (j - 1, n), (0, 1))
            nview = np.moveaxis(new, (j - 1, n), (0, 1))
            if entry_min is None:
                # new[w, c'] = S(c' - w) with S(d) the sum over the carry
                # diagonal c - u = d; the entry w - u is unconstrained.
                diag = {}
                for d in range(-r, r + 1):
                    lo, hi = max(0, -d), min(r, r - d)
                    if lo > hi:
                        continue
                    acc = view[lo, lo + d]
                    for u in range(lo + 1, hi + 1):
                        acc = acc + view[u, u + d]
                    diag[d] = acc
                for w in range(w_lo, w_hi + 1):
                    for cp in range(c_lo, c_hi + 1):
                        d = cp - w
                        if d in diag:
                            nview[w, cp] = diag[d]
            else:
                # nonnegative (or positive) entries: running prefix along
                # each diagonal admits only u <= w - entry_min.
                for d in range(-r, r + 1):
                    acc = None
                    for w in range(r + 1):
                        u = w - entry_min
                        if 0 <= u <= r and 0 <= u + d <= r:
                            term = view[u, u + d]
                            acc = term if acc is None else acc + term
                        if acc is not None and w_lo <= w <= w_hi and c_lo <= w + d <= c_hi:
                            nview[w, w + d] = acc
            dp = new
        # row completed with carry r; the next row starts with carry 0
        shifted = np.zeros_like(dp)
        shifted[..., 0] = dp[..., r]
        dp = shifted
    return int(dp[(r,) * n + (0,)])


def count(query, r: int | None = None, family: str = "asm", region: str = "closed",
          *, max_states: int | None = None) -> int:
    """Exact cardinality for a CountQuery (or plain (n, r, ...) arguments)."""
    if isinstance(query, CountQuery):
        q = query
    else:
        if r is None:
            raise BadShape("count needs either a CountQuery or (n, r)")
        q = CountQuery(query, r, family, region)
    return _sweep_count(q.n, q.r, q.family, q.region, max_states)


def count_asm_formula_n1(n: int) -> int:
    """Product formula for the line-sum-1 count: prod (3i+1)!/(n+i)!."""
    if n < 1:
        raise BadShape(f"n must be positive, got {n}")
    num = 1
    den = 1
    for i in range(n):
        num *= math.factorial(3 * i + 1)
        den *= math.factorial(n + i)
    assert num % den == 0
    return num // den


def _next_rows(prev: tuple[int, ...], n: int, r: int, w_lo: int, w_hi: int,
               c_lo: int, c_hi: int, entry_min: int | None) -> Iterator[tuple[int, ...]]:
    """Valid successor V-rows of prev, in ascending lexicographic order."""
    lo = [w_lo] * n
    hi = [w_hi] * n
    if entry_min is not None:
        lo = [max(w_lo, prev[k] + entry_min) for k in range(n)]
    # suffix bounds on the total remaining carry change
    suf_lo = [0] * (n + 1)
    suf_hi = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        suf_lo[k] = suf_lo[k + 1] + lo[k] - prev[k]
        suf_hi[k] = suf_hi[k + 1] + hi[k] - prev[k]
    row = [0] * n

    def rec(j: int, carry: int) -> Iterator[tuple[int, ...]]:
        if j == n:
            yield tuple(row)
            return
        for q in range(lo[j], hi[j] + 1):
            c = carry + q - prev[j]
            if j == n - 1:
                if c != r:
                    continue
            elif not c_lo <= c <= c_hi:
                continue
            if not c + suf_lo[j + 1] <= r <= c + suf_hi[j + 1]:
                continue
            row[j] = q
            yield from rec(j + 1, c)

    yield from rec(0, 0)


def enumerate_asm(n: int, r: int, family: str = "asm", region: str = "closed",
                  cap: int | None = 10**6) -> Iterator[AsmMatrix]:
    """Stream the members of the requested family, each exactly once.

    Matrices are emitted in the row-major lexicographic order of their
    vertical edge matrix rows.  Raises CapExceeded as soon as the stream
    would outgrow cap.
    """
    q = CountQuery(n, r, family, region)
    sms = q.family == "sms"
    interior = q.region == "interior"
    asm_interior = interior and not sms
    entry_min = (1 if interior else 0) if sms else None
    w_bounds, carry_bounds = _bounds(n, r, asm_interior)
    c_lo, c_hi = (1, r - 1) if asm_interior else (0, r)

    produced = 0
    a_rows: list[tuple[int, ...]] = []

    def rec(i: int, prev: tuple[int, ...]) -> Iterator[AsmMatrix]:
        nonlocal produced
        if i > n:
            produced += 1
            if cap is not None and produced > cap:
                raise CapExceeded(cap)
            yield AsmMatrix(n, r, tuple(a_rows))
            return
        w_lo, w_hi = w_bounds(i)
        for row in _next_rows(prev, n, r, w_lo, w_hi, c_lo, c_hi, entry_min):
            a_rows.append(tuple(row[k] - prev[k] for k in range(n)))
            yield from rec(i + 1, row)
            a_rows.pop()

    yield from rec(1, (0,) * n)


def uniform_weights(r: int) -> dict[tuple[int, int, int, int], int]:
    """Weight 1 on every vertex type; specializes the sum to plain counting."""
    return {vt.as_tuple(): 1 for vt in enumerate_vertex_types(r)}


def semimagic_weights(r: int) -> dict[tuple[int, int, int, int], int]:
    """Indicator of h <= h'; specializes the sum to semimagic counting."""
    return {vt.as_tuple(): int(vt.is_semimagic) for vt in enumerate_vertex_types(r)}


def _weight_key(key):
    if isinstance(key, VertexType):
        return key.as_tuple()
    return tuple(key)


def partition_function(n: int, r: int, weights: Mapping, z_assignment=None,
                       *, max_states: int | None = None) -> Fraction:
    """Weighted sum over all edge matrix pairs of per-vertex weight products.

    weights maps vertex types (h, v, h', v') to exact rationals; with
    z_assignment (an n x n grid of labels) the lookup key becomes
    (z_label, vertex_type), so inhomogeneous weightings are expressible.
    Computed by the same profile DP as count, with weight multiplication in
    place of unit increments; rational weights are cleared to integers
    through their common denominator, keeping every step exact.
    """
    if n < 1 or r < 0:
        raise BadShape("need n >= 1 and r >= 0")
    _check_states(n, r, max_states)
    m = r + 1

    grid = None
    if z_assignment is not None:
        grid = [list(row) for row in z_assignment]
        if len(grid) != n or any(len(row) != n for row in grid):
            raise BadShape(f"z_assignment must be {n}x{n}")

    table: dict = {}
    for key, value in weights.items():
        k = _weight_key(key)
        table[k] = Fraction(value)

    types = [vt.as_tuple() for vt in enumerate_vertex_types(r)]
    required = (
        [(z, t) for z in sorted({x for row in grid for x in row}, key=repr) for t in types]
        if grid is not None
        else types
    )
    for key in required:
        if key not in table:
            raise MissingWeight(key)

    denom_lcm = 1
    for key in required:
        denom_lcm = math.lcm(denom_lcm, table[key].denominator)
    int_table = {key: int(table[key] * denom_lcm) for key in required}
    wmax = max((abs(w) for w in int_table.values()), default=1) or 1

    dp = np.zeros((m,) * (n + 1), dtype=np.int64)
    dp[(0,) * (n + 1)] = 1
    for i in range(1, n + 1):
        w_lo, w_hi = (r, r) if i == n else (0, r)
        for j in range(1, n + 1):
            dp = _maybe_promote(dp, m * wmax)
            c_lo, c_hi = (r, r) if j == n else (0, r)
            new = np.zeros_like(dp)
            view = np.moveaxis(dp, (j - 1, n), (0, 1))
            nview = np.moveaxis(new, (j - 1, n), (0, 1))
            z = grid[i - 1][j - 1] if grid is not None else None
            for w in range(w_lo, w_hi + 1):
                for cp in range(c_lo, c_hi + 1):
                    d = cp - w
                    acc = None
                    for u in range(max(0, -d), min(r, r - d) + 1):
                        c = u + d
                        t = (c, w, cp, u)
                        wt = int_table[t if z is None else (z, t)]
                        if wt == 0:
                            continue
                        term = view[u, c] if wt == 1 else view[u, c] * wt
                        acc = term if acc is None else acc + term
                    if acc is not None:
                        nview[w, cp] = acc
            dp = new
        shifted = np.zeros_like(dp)
        shifted[..., 0] = dp[..., r]
        dp = shifted
    value = int(dp[(r,) * n + (0,)])
    return Fraction(value, denom_lcm ** (n * n))
