"""Membership and constructive vertex decomposition for the matrix polytopes.

Points live in exact rational arithmetic throughout; the split step's
minima and the strict decrease of the non-integer entry count are brittle
under any rounding, so no floats appear anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bijections import edge_to_asm
from .core import AsmMatrix, EdgeMatrixPair
from .errors import BadShape, NoCycle, NotAMember

RatGrid = tuple[tuple[Fraction, ...], ...]


def _as_fraction_grid(raw, rows: int, cols: int, what: str) -> RatGrid:
    try:
        grid = tuple(tuple(Fraction(x) for x in row) for row in raw)
    except (TypeError, ValueError) as exc:
        raise BadShape(f"{what} must be an array of rationals") from exc
    if len(grid) != rows or any(len(row) != cols for row in grid):
        raise BadShape(f"{what} must be {rows}x{cols}")
    return grid


@dataclass(frozen=True)
class PolytopePoint:
    """n x n rational matrix; membership in the polytopes is a separate check."""

    n: int
    entries: RatGrid

    def __post_init__(self):
        if self.n < 1:
            raise BadShape(f"n must be positive, got {self.n}")
        object.__setattr__(
            self, "entries", _as_fraction_grid(self.entries, self.n, self.n, "entries")
        )

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i - 1][j - 1]


@dataclass(frozen=True)
class EdgePoint:
    """Rational horizontal/vertical edge values, shapes as in EdgeMatrixPair."""

    n: int
    h: RatGrid
    v: RatGrid

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise BadShape(f"n must be positive, got {n}")
        object.__setattr__(self, "h", _as_fraction_grid(self.h, n, n + 1, "h"))
        object.__setattr__(self, "v", _as_fraction_grid(self.v, n + 1, n, "v"))

    def h_at(self, i: int, j: int) -> Fraction:
        return self.h[i - 1][j]

    def v_at(self, i: int, j: int) -> Fraction:
        return self.v[i][j - 1]

    def noninteger_count(self) -> int:
        bad = sum(1 for row in self.h for x in row if x.denominator != 1)
        bad += sum(1 for row in self.v for x in row if x.denominator != 1)
        return bad


@dataclass(frozen=True)
class MembershipResult:
    ok: bool
    witness: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _check_point_membership(entries: RatGrid, n: int, nonnegative: bool) -> MembershipResult:
    for i in range(n):
        acc = Fraction(0)
        for j in range(n):
            x = entries[i][j]
            if nonnegative and x < 0:
                return MembershipResult(False, f"entry ({i + 1},{j + 1}) = {x} < 0")
            acc += x
            if not nonnegative:
                if acc < 0:
                    return MembershipResult(
                        False, f"row {i + 1} prefix sum at {j + 1} is {acc} < 0"
                    )
                if acc > 1 and j < n - 1:
                    return MembershipResult(
                        False, f"row {i + 1} prefix sum at {j + 1} is {acc} > 1"
                    )
        if acc != 1:
            return MembershipResult(False, f"row {i + 1} sum is {acc} != 1")
    for j in range(n):
        acc = Fraction(0)
        for i in range(n):
            acc += entries[i][j]
            if not nonnegative:
                if acc < 0:
                    return MembershipResult(
                        False, f"col {j + 1} prefix sum at {i + 1} is {acc} < 0"
                    )
                if acc > 1 and i < n - 1:
                    return MembershipResult(
                        False, f"col {j + 1} prefix sum at {i + 1} is {acc} > 1"
                    )
        if acc != 1:
            return MembershipResult(False, f"col {j + 1} sum is {acc} != 1")
    return MembershipResult(True)


def _check_edge_membership(e: EdgePoint) -> MembershipResult:
    n = e.n
    for grid, name in ((e.h, "h"), (e.v, "v")):
        for row in grid:
            for x in row:
                if not 0 <= x <= 1:
                    return MembershipResult(False, f"{name} entry {x} outside [0, 1]")
    for i in range(1, n + 1):
        if e.h_at(i, 0) != 0 or e.h_at(i, n) != 1:
            return MembershipResult(False, f"h boundary violated in row {i}")
    for j in range(1, n + 1):
        if e.v_at(0, j) != 0 or e.v_at(n, j) != 1:
            return MembershipResult(False, f"v boundary violated in col {j}")
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if e.h_at(i, j - 1) + e.v_at(i, j) != e.v_at(i - 1, j) + e.h_at(i, j):
                return MembershipResult(False, f"conservation fails at ({i}, {j})")
    return MembershipResult(True)


def membership(x, which: str = "A") -> MembershipResult:
    """Exact halfspace membership test with a first-violation witness.

    which = "A" (prefix sums in [0,1]), "B" (doubly stochastic) or
    "E" (edge polytope; x must then be an EdgePoint or an (h, v) pair).
    """
    if which == "E":
        e = x if isinstance(x, EdgePoint) else EdgePoint(len(x[0]), x[0], x[1])
        return _check_edge_membership(e)
    if which not in ("A", "B"):
        raise BadShape("which must be 'A', 'B' or 'E'")
    p = x if isinstance(x, PolytopePoint) else PolytopePoint(len(list(x)), x)
    return _check_point_membership(p.entries, p.n, nonnegative=(which == "B"))


def point_to_edge(x: PolytopePoint) -> EdgePoint:
    """Prefix-sum map; affine isomorphism onto the edge polytope."""
    n = x.n
    h = []
    for i in range(n):
        acc = Fraction(0)
        row = [Fraction(0)]
        for j in range(n):
            acc += x.entries[i][j]
            row.append(acc)
        h.append(row)
    v = [[Fraction(0)] * n]
    for i in range(n):
        v.append([v[i][j] + x.entries[i][j] for j in range(n)])
    return EdgePoint(n, h, v)


def edge_to_point(e: EdgePoint) -> PolytopePoint:
    n = e.n
    entries = [
        [e.h_at(i, j) - e.h_at(i, j - 1) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    return PolytopePoint(n, entries)


@dataclass(frozen=True)
class NonIntegerCycle:
    """A closed cycle of internal edges holding strictly fractional values.

    Horizontal edge (i, j) joins lattice points (i, j) and (i, j+1);
    vertical edge (i, j) joins (i, j) and (i+1, j).  The plus sets hold
    edges the oriented cycle traverses rightward/upward, the minus sets
    leftward/downward.
    """

    h_plus: frozenset[tuple[int, int]]
    h_minus: frozenset[tuple[int, int]]
    v_plus: frozenset[tuple[int, int]]
    v_minus: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "h_plus", frozenset(self.h_plus))
        object.__setattr__(self, "h_minus", frozenset(self.h_minus))
        object.__setattr__(self, "v_plus", frozenset(self.v_plus))
        object.__setattr__(self, "v_minus", frozenset(self.v_minus))
        if self.h_plus & self.h_minus or self.v_plus & self.v_minus:
            raise BadShape("an edge cannot carry both orientations")
        # the directed edges must close up: at every lattice point,
        # in-degree equals out-degree
        deg: dict[tuple[int, int], int] = {}

        def arc(frm, to):
            deg[frm] = deg.get(frm, 0) + 1
            deg[to] = deg.get(to, 0) - 1

        for (i, j) in self.h_plus:
            arc((i, j), (i, j + 1))
        for (i, j) in self.h_minus:
            arc((i, j + 1), (i, j))
        for (i, j) in self.v_plus:
            arc((i + 1, j), (i, j))
        for (i, j) in self.v_minus:
            arc((i, j), (i + 1, j))
        if not deg:
            raise BadShape("cycle is empty")
        if any(d != 0 for d in deg.values()):
            raise BadShape("marked edges do not form a closed cycle")

    def edges(self):
        for (i, j) in sorted(self.h_plus):
            yield ("h", i, j, +1)
        for (i, j) in sorted(self.h_minus):
            yield ("h", i, j, -1)
        for (i, j) in sorted(self.v_plus):
            yield ("v", i, j, +1)
        for (i, j) in sorted(self.v_minus):
            yield ("v", i, j, -1)


def _internal_nonintegers(e: EdgePoint):
    n = e.n
    out = []
    for i in range(1, n + 1):
        for j in range(1, n):
            if e.h_at(i, j).denominator != 1:
                out.append(("h", i, j))
    for i in range(1, n):
        for j in range(1, n + 1):
            if e.v_at(i, j).denominator != 1:
                out.append(("v", i, j))
    return out


def _edge_endpoints(kind, i, j):
    if kind == "h":
        return (i, j), (i, j + 1)
    return (i, j), (i + 1, j)


def find_noninteger_cycle(e: EdgePoint) -> NonIntegerCycle:
    """Deterministic cycle of non-integer internal edges.

    Walks from the lowest-indexed fractional edge, always leaving through
    the lowest-indexed fractional edge other than the arriving one (the
    conservation law guarantees an exit), until a lattice point repeats;
    the enclosed loop is then oriented anticlockwise.
    """
    pool = _internal_nonintegers(e)
    if not pool:
        raise NoCycle("edge point has no non-integer entries")
    incident: dict[tuple[int, int], list[tuple[str, int, int]]] = {}
    for kind, i, j in pool:
        for pt in _edge_endpoints(kind, i, j):
            incident.setdefault(pt, []).append((kind, i, j))
    for lst in incident.values():
        lst.sort()

    start_edge = pool[0]
    a, b = _edge_endpoints(*start_edge)
    path_points = [a, b]
    path_edges = [start_edge]
    seen = {a: 0, b: 1}
    while True:
        here = path_points[-1]
        options = [edge for edge in incident[here] if edge != path_edges[-1]]
        edge = options[0]
        p, q = _edge_endpoints(*edge)
        nxt = q if p == here else p
        path_edges.append(edge)
        if nxt in seen:
            k = seen[nxt]
            cycle_points = path_points[k:] + [nxt]
            cycle_edges = path_edges[k:]
            break
        path_points.append(nxt)
        seen[nxt] = len(path_points) - 1

    # orient anticlockwise (shoelace with y pointing up, i.e. against rows)
    area2 = 0
    for t in range(len(cycle_points) - 1):
        (i1, j1), (i2, j2) = cycle_points[t], cycle_points[t + 1]
        area2 += j1 * (-i2) - j2 * (-i1)
    if area2 < 0:
        cycle_points.reverse()
        cycle_edges.reverse()

    h_plus, h_minus, v_plus, v_minus = set(), set(), set(), set()
    for t in range(len(cycle_points) - 1):
        (i1, j1), (i2, j2) = cycle_points[t], cycle_points[t + 1]
        if i1 == i2:
            if j2 == j1 + 1:
                h_plus.add((i1, j1))
            else:
                h_minus.add((i1, j2))
        else:
            if i2 == i1 - 1:
                v_plus.add((i2, j1))
            else:
                v_minus.add((i1, j1))
    return NonIntegerCycle(
        frozenset(h_plus), frozenset(h_minus), frozenset(v_plus), frozenset(v_minus)
    )


def _shift(e: EdgePoint, cycle: NonIntegerCycle, t: Fraction) -> EdgePoint:
    h = [list(row) for row in e.h]
    v = [list(row) for row in e.v]
    for (i, j) in cycle.h_plus:
        h[i - 1][j] += t
    for (i, j) in cycle.h_minus:
        h[i - 1][j] -= t
    for (i, j) in cycle.v_plus:
        v[i][j - 1] += t
    for (i, j) in cycle.v_minus:
        v[i][j - 1] -= t
    return EdgePoint(e.n, h, v)


def split_point(e: EdgePoint, cycle: NonIntegerCycle):
    """Split e along the cycle into members e_minus, e_plus of the polytope.

    mu_minus/mu_plus are the largest opposite shifts keeping every cycle
    edge inside [0, 1]; e equals the convex combination
    mu_plus/(mu_minus+mu_plus) * e_minus + mu_minus/(mu_minus+mu_plus) * e_plus,
    and both parts have strictly fewer non-integer entries than e.
    """
    down = []  # caps for shifting against the orientation
    up = []  # caps for shifting with the orientation
    for kind, i, j, sign in cycle.edges():
        val = e.h_at(i, j) if kind == "h" else e.v_at(i, j)
        if sign > 0:
            down.append(val)
            up.append(1 - val)
        else:
            down.append(1 - val)
            up.append(val)
    mu_minus = min(down)
    mu_plus = min(up)
    e_minus = _shift(e, cycle, -mu_minus)
    e_plus = _shift(e, cycle, mu_plus)
    return e_minus, e_plus, mu_minus, mu_plus


def _integral_leaf(e: EdgePoint) -> AsmMatrix:
    n = e.n
    pair = EdgeMatrixPair(
        n,
        1,
        [[int(x) for x in row] for row in e.h],
        [[int(x) for x in row] for row in e.v],
    )
    return edge_to_asm(pair)


@dataclass(frozen=True)
class ConvexDecomposition:
    """Positive rational weights on standard alternating sign matrices.

    Weights sum to one; the weighted sum of the matrices reconstructs the
    decomposed point exactly.  Terms are sorted by matrix entries and
    like terms are merged, so equal decompositions compare equal.
    """

    terms: tuple[tuple[Fraction, AsmMatrix], ...]

    def __post_init__(self):
        if not self.terms:
            raise BadShape("decomposition needs at least one term")
        if any(lam <= 0 for lam, _ in self.terms):
            raise BadShape("weights must be positive")
        if sum(lam for lam, _ in self.terms) != 1:
            raise BadShape("weights must sum to 1")
        if any(a.r != 1 for _, a in self.terms):
            raise BadShape("leaves must be standard (line sum 1) matrices")

    def weighted_sum(self) -> PolytopePoint:
        n = self.terms[0][1].n
        acc = [[Fraction(0)] * n for _ in range(n)]
        for lam, a in self.terms:
            for i in range(n):
                for j in range(n):
                    acc[i][j] += lam * a.entries[i][j]
        return PolytopePoint(n, acc)


def decompose(x: PolytopePoint) -> ConvexDecomposition:
    """Write x as an exact convex combination of standard matrices.

    Recursively splits along non-integer cycles; the non-integer entry
    count strictly decreases on both parts of every split, which bounds
    the recursion and is re-checked at every step.
    """
    result = membership(x, "A")
    if not result:
        raise NotAMember(result.witness)
    weights: dict[tuple, Fraction] = {}
    leaves: dict[tuple, AsmMatrix] = {}
    stack = [(Fraction(1), point_to_edge(x))]
    while stack:
        lam, e = stack.pop()
        nu = e.noninteger_count()
        if nu == 0:
            a = _integral_leaf(e)
            weights[a.entries] = weights.get(a.entries, Fraction(0)) + lam
            leaves[a.entries] = a
            continue
        cycle = find_noninteger_cycle(e)
        e_minus, e_plus, mu_minus, mu_plus = split_point(e, cycle)
        if e_minus.noninteger_count() >= nu or e_plus.noninteger_count() >= nu:
            raise AssertionError("split did not reduce the non-integer count")
        total = mu_minus + mu_plus
        stack.append((lam * mu_plus / total, e_minus))
        stack.append((lam * mu_minus / total, e_plus))
    terms = tuple(
        (weights[key], leaves[key]) for key in sorted(weights)
    )
    dec = ConvexDecomposition(terms)
    if dec.weighted_sum().entries != x.entries:
        raise AssertionError("decomposition does not reconstruct the input")
    return dec
