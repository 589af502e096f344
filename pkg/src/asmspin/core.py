"""Domain types for the six matrix-shaped representations.

All indices in the public accessors are 1-based, matching the usual
conventions for these objects; boundary rows and columns of the edge,
complementary-edge and corner-sum matrices are stored explicitly.  Every
constructor validates the full set of defining conditions, so holding a
typed value is a proof that its invariants hold.  Instances are immutable.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass

from .errors import (
    BadBoundary,
    BadConservation,
    BadEntryRange,
    BadInterlacing,
    BadLineSum,
    BadMonotone,
    BadMultiplicity,
    BadShape,
    NegativePartialSum,
)

# Scaling happens in the line sum and the matrix size, never in entry
# magnitude, so both are capped to keep validation arithmetic trivial.
MAX_N = 1000
MAX_R = 10**6

Grid = tuple[tuple[int, ...], ...]


def _as_grid(raw, rows: int, cols: int, what: str) -> Grid:
    """Coerce a rows*cols array-like of integers to a tuple grid."""
    try:
        grid = tuple(tuple(operator.index(x) for x in row) for row in raw)
    except TypeError as exc:
        raise BadShape(f"{what} must be an array of integers") from exc
    if len(grid) != rows or any(len(row) != cols for row in grid):
        raise BadShape(f"{what} must be {rows}x{cols}")
    return grid


def _check_params(n: int, r: int) -> None:
    n = operator.index(n)
    r = operator.index(r)
    if n < 1 or n > MAX_N:
        raise BadShape(f"size n={n} outside [1, {MAX_N}]")
    if r < 0 or r > MAX_R:
        raise BadShape(f"line sum r={r} outside [0, {MAX_R}]")


@dataclass(frozen=True)
class AsmMatrix:
    """n x n integer matrix with all line sums r and prefix sums in [0, r].

    Prefix row and column sums lying in [0, r] is equivalent to all partial
    sums from both ends of every line being nonnegative; consequently every
    entry lies in [-r, r] and boundary entries in [0, r].
    """

    n: int
    r: int
    entries: Grid

    def __post_init__(self):
        _check_params(self.n, self.r)
        object.__setattr__(
            self, "entries", _as_grid(self.entries, self.n, self.n, "entries")
        )
        n, r = self.n, self.r
        for i in range(n):
            acc = 0
            for j in range(n):
                acc += self.entries[i][j]
                if acc < 0:
                    raise NegativePartialSum("row", i + 1, "left", j + 1, acc)
                if acc > r and j < n - 1:
                    # suffix from the right end would be acc - r < 0
                    raise NegativePartialSum(
                        "row", i + 1, "right", n - j - 1, r - acc
                    )
            if acc != r:
                raise BadLineSum("row", i + 1, acc, r)
        for j in range(n):
            acc = 0
            for i in range(n):
                acc += self.entries[i][j]
                if acc < 0:
                    raise NegativePartialSum("col", j + 1, "top", i + 1, acc)
                if acc > r and i < n - 1:
                    raise NegativePartialSum(
                        "col", j + 1, "bottom", n - i - 1, r - acc
                    )
            if acc != r:
                raise BadLineSum("col", j + 1, acc, r)

    def entry(self, i: int, j: int) -> int:
        """Entry A_ij, 1-based."""
        return self.entries[i - 1][j - 1]

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class EdgeMatrixPair:
    """Horizontal/vertical edge matrices of a spin-r/2 vertex configuration.

    H is n x (n+1) with columns indexed 0..n, V is (n+1) x n with rows
    indexed 0..n.  Boundary: H_i0 = V_0j = 0 and H_in = V_nj = r
    (domain-wall conditions); at each lattice point,
    H_{i,j-1} + V_ij = V_{i-1,j} + H_ij.
    """

    n: int
    r: int
    H: Grid
    V: Grid

    def __post_init__(self):
        _check_params(self.n, self.r)
        n, r = self.n, self.r
        object.__setattr__(self, "H", _as_grid(self.H, n, n + 1, "H"))
        object.__setattr__(self, "V", _as_grid(self.V, n + 1, n, "V"))
        for grid, name in ((self.H, "H"), (self.V, "V")):
            for row in grid:
                for x in row:
                    if not 0 <= x <= r:
                        raise BadEntryRange(f"{name} entry {x} outside [0, {r}]")
        for i in range(1, n + 1):
            if self.h(i, 0) != 0 or self.h(i, n) != r:
                raise BadBoundary(f"row {i} of H must start at 0 and end at {r}")
        for j in range(1, n + 1):
            if self.v(0, j) != 0 or self.v(n, j) != r:
                raise BadBoundary(f"col {j} of V must start at 0 and end at {r}")
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if self.h(i, j - 1) + self.v(i, j) != self.v(i - 1, j) + self.h(i, j):
                    raise BadConservation(
                        f"conservation fails at lattice point ({i}, {j})"
                    )
        total = n * (n + 1) * r // 2
        if sum(self.h(i, j) for i in range(1, n + 1) for j in range(1, n + 1)) != total:
            raise BadConservation("H entries do not sum to n(n+1)r/2")
        if sum(self.v(i, j) for i in range(1, n + 1) for j in range(1, n + 1)) != total:
            raise BadConservation("V entries do not sum to n(n+1)r/2")

    def h(self, i: int, j: int) -> int:
        """H_ij with i in [1, n], j in [0, n]."""
        return self.H[i - 1][j]

    def v(self, i: int, j: int) -> int:
        """V_ij with i in [0, n], j in [1, n]."""
        return self.V[i][j - 1]

    def vertex_type(self, i: int, j: int) -> VertexType:
        """Vertex type (h, v, h', v') at lattice point (i, j)."""
        return VertexType(
            self.r,
            self.h(i, j - 1),
            self.v(i, j),
            self.h(i, j),
            self.v(i - 1, j),
        )


@dataclass(frozen=True)
class CornerSumMatrix:
    """(n+1) x (n+1) matrix of rectangular partial sums of an AsmMatrix."""

    n: int
    r: int
    C: Grid

    def __post_init__(self):
        _check_params(self.n, self.r)
        n, r = self.n, self.r
        object.__setattr__(self, "C", _as_grid(self.C, n + 1, n + 1, "C"))
        for k in range(n + 1):
            if self.c(0, k) != 0 or self.c(k, 0) != 0:
                raise BadBoundary(f"row/column 0 of C must be zero (index {k})")
            if self.c(k, n) != k * r or self.c(n, k) != k * r:
                raise BadBoundary(f"C boundary at index {k} must equal {k}*r")
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                dh = self.c(i, j) - self.c(i, j - 1)
                dv = self.c(i, j) - self.c(i - 1, j)
                if not 0 <= dh <= r:
                    raise BadMonotone(
                        f"C({i},{j}) - C({i},{j - 1}) = {dh} outside [0, {r}]"
                    )
                if not 0 <= dv <= r:
                    raise BadMonotone(
                        f"C({i},{j}) - C({i - 1},{j}) = {dv} outside [0, {r}]"
                    )

    def c(self, i: int, j: int) -> int:
        """C_ij with i, j in [0, n]."""
        return self.C[i][j]


@dataclass(frozen=True)
class MonotoneTriangle:
    """Triangular array whose row i is a weakly increasing word of length i*r.

    Letters come from [1, n], each letter appears at most r times per row,
    and consecutive rows interlace: M_{i+1,j} <= M_ij <= M_{i+1,j+r}.
    """

    n: int
    r: int
    rows: Grid

    def __post_init__(self):
        _check_params(self.n, self.r)
        n, r = self.n, self.r
        try:
            rows = tuple(tuple(operator.index(x) for x in row) for row in self.rows)
        except TypeError as exc:
            raise BadShape("rows must be sequences of integers") from exc
        object.__setattr__(self, "rows", rows)
        if len(rows) != n:
            raise BadShape(f"expected {n} rows, got {len(rows)}")
        for i, row in enumerate(rows, start=1):
            if len(row) != i * r:
                raise BadShape(f"row {i} must have length {i * r}, got {len(row)}")
            for x in row:
                if not 1 <= x <= n:
                    raise BadEntryRange(f"row {i} entry {x} outside [1, {n}]")
            if any(row[k] > row[k + 1] for k in range(len(row) - 1)):
                raise BadMonotone(f"row {i} is not weakly increasing")
            for letter in set(row):
                if row.count(letter) > r:
                    raise BadMultiplicity(
                        f"letter {letter} appears more than {r} times in row {i}"
                    )
        for i in range(1, n):
            upper, lower = rows[i - 1], rows[i]
            for j in range(i * r):
                if not (lower[j] <= upper[j] <= lower[j + r]):
                    raise BadInterlacing(
                        f"interlacing fails between rows {i} and {i + 1} "
                        f"at position {j + 1}"
                    )
        if n >= 1:
            expected_last = tuple(v for v in range(1, n + 1) for _ in range(r))
            if rows[-1] != expected_last:
                raise BadMonotone(
                    f"row {n} must list each letter of [1, {n}] exactly {r} times"
                )

    def row(self, i: int) -> tuple[int, ...]:
        """Row i, 1-based."""
        return self.rows[i - 1]


@dataclass(frozen=True)
class ComplementaryEdgePair:
    """Parity-twisted complement of an edge matrix pair.

    Around every lattice point the four incident values sum to 2r, and the
    boundary alternates between 0 and r along each side.
    """

    n: int
    r: int
    Hbar: Grid
    Vbar: Grid

    def __post_init__(self):
        _check_params(self.n, self.r)
        n, r = self.n, self.r
        object.__setattr__(self, "Hbar", _as_grid(self.Hbar, n, n + 1, "Hbar"))
        object.__setattr__(self, "Vbar", _as_grid(self.Vbar, n + 1, n, "Vbar"))
        for grid, name in ((self.Hbar, "Hbar"), (self.Vbar, "Vbar")):
            for row in grid:
                for x in row:
                    if not 0 <= x <= r:
                        raise BadEntryRange(f"{name} entry {x} outside [0, {r}]")
        for k in range(1, n // 2 + 2):
            if 2 * k - 1 <= n:
                i = 2 * k - 1
                if self.hbar(i, 0) != 0:
                    raise BadBoundary(f"Hbar({i},0) must be 0")
                if self.hbar(n - i + 1, n) != 0:
                    raise BadBoundary(f"Hbar({n - i + 1},{n}) must be 0")
                if self.vbar(0, i) != r:
                    raise BadBoundary(f"Vbar(0,{i}) must be {r}")
                if self.vbar(n, n - i + 1) != r:
                    raise BadBoundary(f"Vbar({n},{n - i + 1}) must be {r}")
            if 2 * k <= n:
                i = 2 * k
                if self.hbar(i, 0) != r:
                    raise BadBoundary(f"Hbar({i},0) must be {r}")
                if self.hbar(n - i + 1, n) != r:
                    raise BadBoundary(f"Hbar({n - i + 1},{n}) must be {r}")
                if self.vbar(0, i) != 0:
                    raise BadBoundary(f"Vbar(0,{i}) must be 0")
                if self.vbar(n, n - i + 1) != 0:
                    raise BadBoundary(f"Vbar({n},{n - i + 1}) must be 0")
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                s = (
                    self.vbar(i - 1, j)
                    + self.hbar(i, j - 1)
                    + self.vbar(i, j)
                    + self.hbar(i, j)
                )
                if s != 2 * r:
                    raise BadConservation(
                        f"values around lattice point ({i}, {j}) sum to {s}, "
                        f"expected {2 * r}"
                    )

    def hbar(self, i: int, j: int) -> int:
        return self.Hbar[i - 1][j]

    def vbar(self, i: int, j: int) -> int:
        return self.Vbar[i][j - 1]

    def complementary_type(self, i: int, j: int) -> tuple[int, int, int, int]:
        """Quadruple (left, bottom, right, top) around lattice point (i, j)."""
        return (
            self.hbar(i, j - 1),
            self.vbar(i, j),
            self.hbar(i, j),
            self.vbar(i - 1, j),
        )


@dataclass(frozen=True)
class VertexType:
    """Edge values (h, v, h', v') around one lattice point, h + v = h' + v'.

    h/v are the left/bottom values, h'/v' the right/top values.  The
    semimagic subset is h <= h'.
    """

    r: int
    h: int
    v: int
    hp: int
    vp: int

    def __post_init__(self):
        _check_params(1, self.r)
        for x in (self.h, self.v, self.hp, self.vp):
            if not 0 <= x <= self.r:
                raise BadEntryRange(f"vertex value {x} outside [0, {self.r}]")
        if self.h + self.v != self.hp + self.vp:
            raise BadConservation(
                f"vertex type ({self.h},{self.v},{self.hp},{self.vp}) "
                "violates h + v = h' + v'"
            )

    @property
    def is_semimagic(self) -> bool:
        return self.h <= self.hp

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.h, self.v, self.hp, self.vp)


def validate_asm(raw, r: int) -> AsmMatrix:
    """Validate a square integer array as a line-sum-r matrix.

    Raises BadLineSum or NegativePartialSum pinpointing the first violated
    condition.
    """
    rows = list(raw)
    n = len(rows)
    return AsmMatrix(n, r, rows)


def validate_edge_pair(raw, n: int, r: int) -> EdgeMatrixPair:
    h_raw, v_raw = raw
    return EdgeMatrixPair(n, r, h_raw, v_raw)


def validate_corner_sum(raw, n: int, r: int) -> CornerSumMatrix:
    return CornerSumMatrix(n, r, raw)


def validate_monotone_triangle(raw, n: int, r: int) -> MonotoneTriangle:
    return MonotoneTriangle(n, r, raw)


def validate_complementary_pair(raw, n: int, r: int) -> ComplementaryEdgePair:
    hbar_raw, vbar_raw = raw
    return ComplementaryEdgePair(n, r, hbar_raw, vbar_raw)


def is_semimagic(a: AsmMatrix) -> bool:
    """True iff every entry is nonnegative."""
    return all(x >= 0 for row in a.entries for x in row)


def enumerate_vertex_types(r: int, semimagic_only: bool = False) -> list[VertexType]:
    """All vertex types with values in [0, r], in (h, v, h') lexicographic order.

    The list has (r+1)(2r^2+4r+3)/3 elements, or (r+1)(r+2)(2r+3)/6 when
    restricted to the semimagic subset h <= h'.
    """
    _check_params(1, r)
    out = []
    for h in range(r + 1):
        for v in range(r + 1):
            for hp in range(r + 1):
                vp = h + v - hp
                if not 0 <= vp <= r:
                    continue
                if semimagic_only and h > hp:
                    continue
                out.append(VertexType(r, h, v, hp, vp))
    return out
