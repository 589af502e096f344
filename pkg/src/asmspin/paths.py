"""Osculating lattice path families and fully packed loop expansion counts.

A family consists of n*r directed paths on the square lattice (matrix
coordinates, row 1 at top): r paths per column i enter at (n+1, i) moving
up and leave row i moving right through (i, n+1), stepping only up or
right, never crossing, with at most r paths per edge.

Path identity when several segments share an edge is fixed by a canonical
lane convention: horizontal lanes are numbered from the top, vertical
lanes from the left, and the per-vertex linking pairs lanes in order
within each of its (at most three) turn bundles.  This makes the map from
edge matrices to families deterministic and exactly invertible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import ComplementaryEdgePair, EdgeMatrixPair
from .errors import BadQuadruple, BadShape, InvalidFamily, ValidationError

Point = tuple[int, int]
Path = tuple[Point, ...]


def _bundles(h_in: int, v_in: int, h_out: int, v_out: int) -> tuple[int, int, int, int]:
    """Segment counts (left->top, left->right, bottom->top, bottom->right).

    The non-crossing requirement forbids the two through bundles from
    coexisting, which forces the counts shown here.
    """
    if h_out >= v_in:
        # all bottom segments bounce right; surplus passes straight through
        return v_out, h_out - v_in, 0, v_in
    return h_in, 0, v_in - h_out, h_out


@dataclass(frozen=True)
class PathFamily:
    n: int
    r: int
    paths: tuple[Path, ...]

    def __post_init__(self):
        n, r = self.n, self.r
        if n < 1 or r < 0:
            raise BadShape("need n >= 1 and r >= 0")
        paths = tuple(tuple((int(i), int(j)) for (i, j) in p) for p in self.paths)
        object.__setattr__(self, "paths", paths)
        if len(paths) != n * r:
            raise BadShape(f"expected {n * r} paths, got {len(paths)}")
        starts = [0] * (n + 1)
        ends = [0] * (n + 1)
        for p in paths:
            if len(p) < 2:
                raise BadShape("each path needs at least two points")
            for a, b in zip(p, p[1:]):
                step = (b[0] - a[0], b[1] - a[1])
                if step not in ((-1, 0), (0, 1)):
                    raise BadShape(f"illegal step {a} -> {b}")
            (si, sj), (ei, ej) = p[0], p[-1]
            if not (1 <= sj <= n and si == n + 1 and p[1] == (n, sj)):
                raise BadShape(f"path must enter upward at the bottom, got {p[0]}")
            if not (1 <= ei <= n and ej == n + 1 and p[-2] == (ei, n)):
                raise BadShape(f"path must leave rightward at the right, got {p[-1]}")
            if ei != sj:
                raise BadShape(
                    f"path entering at column {sj} must leave through row {sj}, "
                    f"got row {ei}"
                )
            starts[sj] += 1
            ends[ei] += 1
        for i in range(1, n + 1):
            if starts[i] != r or ends[i] != r:
                raise BadShape(
                    f"column/row {i} must carry exactly {r} path ends"
                )
        h, v = self.edge_multiplicities()
        if any(x > r for row in h for x in row) or any(x > r for row in v for x in row):
            raise BadShape(f"an edge carries more than {r} path segments")

    def edge_multiplicities(self):
        """(H, V) occupation grids, indexed like an EdgeMatrixPair."""
        n = self.n
        h = [[0] * (n + 1) for _ in range(n)]
        v = [[0] * n for _ in range(n + 1)]
        for p in self.paths:
            for a, b in zip(p, p[1:]):
                if b[1] == a[1] + 1:
                    h[a[0] - 1][a[1]] += 1
                else:
                    v[b[0]][a[1] - 1] += 1
        return h, v


def edge_to_paths(e: EdgeMatrixPair) -> PathFamily:
    """Canonical path family realizing the edge multiplicities of e."""
    n, r = e.n, e.r
    paths = []
    for batch in range(1, n + 1):
        for lane in range(r):
            pts = [(n + 1, batch)]
            side, lane_now, i, j = "B", lane, n, batch
            while True:
                pts.append((i, j))
                lt, lr, bt, br = _bundles(
                    e.h(i, j - 1), e.v(i, j), e.h(i, j), e.v(i - 1, j)
                )
                if side == "B":
                    if lane_now < bt:
                        out, lane_out = "T", lt + lane_now
                    else:
                        out, lane_out = "R", lr + (lane_now - bt)
                else:
                    if lane_now < lt:
                        out, lane_out = "T", lane_now
                    else:
                        out, lane_out = "R", lane_now - lt
                if out == "T":
                    side, lane_now, i = "B", lane_out, i - 1
                else:
                    if j == n:
                        pts.append((i, n + 1))
                        break
                    side, lane_now, j = "L", lane_out, j + 1
            paths.append(tuple(pts))
    return PathFamily(n, r, tuple(paths))


def paths_to_edge(p: PathFamily) -> EdgeMatrixPair:
    """Edge multiplicities of the family; inverse of edge_to_paths."""
    h, v = p.edge_multiplicities()
    try:
        return EdgeMatrixPair(p.n, p.r, h, v)
    except ValidationError as exc:
        raise InvalidFamily(f"multiplicities violate the edge conditions: {exc}") from exc


def is_canonical(p: PathFamily) -> bool:
    """True iff p equals the canonical relinking of its own multiplicities."""
    return sorted(edge_to_paths(paths_to_edge(p)).paths) == sorted(p.paths)


@dataclass(frozen=True)
class VertexLinking:
    """Non-crossing perfect pairing of the 2r segment slots at one point.

    Slots are numbered cyclically block by block: left edge bottom-to-top,
    bottom edge left-to-right, right edge bottom-to-top, top edge
    left-to-right.  No pair may join two slots of the same block.
    """

    r: int
    blocks: tuple[int, int, int, int]
    pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        r = self.r
        blocks = tuple(self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if sum(blocks) != 2 * r or any(not 0 <= b <= r for b in blocks):
            raise BadQuadruple(f"block sizes {blocks} incompatible with r={r}")
        pairs = frozenset(tuple(sorted(p)) for p in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        slots = sorted(s for p in pairs for s in p)
        if slots != list(range(2 * r)):
            raise BadShape("pairs must form a perfect matching of the slots")
        bounds = []
        acc = 0
        for b in blocks:
            bounds.append((acc, acc + b))
            acc += b

        def block_of(s):
            for k, (lo, hi) in enumerate(bounds):
                if lo <= s < hi:
                    return k
            raise AssertionError

        for a, b in pairs:
            if block_of(a) == block_of(b):
                raise BadShape(f"pair ({a}, {b}) joins two slots of one block")
        for a, b in pairs:
            for c, d in pairs:
                if a < c < b < d:
                    raise BadShape(f"pairs ({a},{b}) and ({c},{d}) cross")


def _interval_matchings(labels, i: int, j: int) -> list[list[tuple[int, int]]]:
    """All non-crossing differently-labeled matchings of slots i..j-1.

    Pairing slot i with slot k confines the slots strictly between them,
    so the recursion only ever sees contiguous intervals.
    """
    if i >= j:
        return [[]]
    out = []
    for k in range(i + 1, j, 2):
        if labels[k] == labels[i]:
            continue
        for inner in _interval_matchings(labels, i + 1, k):
            for outer in _interval_matchings(labels, k + 1, j):
                out.append([(i, k)] + inner + outer)
    return out


def enumerate_vertex_linkings(hb: int, vb: int, hbp: int, vbp: int, r: int) -> list[VertexLinking]:
    """Exhaustive list of all valid linkings at one vertex."""
    _check_quadruple(hb, vb, hbp, vbp, r)
    labels = (0,) * hb + (1,) * vb + (2,) * hbp + (3,) * vbp
    return [
        VertexLinking(r, (hb, vb, hbp, vbp), frozenset(pairs))
        for pairs in _interval_matchings(labels, 0, 2 * r)
    ]


def _check_quadruple(hb: int, vb: int, hbp: int, vbp: int, r: int) -> None:
    vals = (hb, vb, hbp, vbp)
    if any(not 0 <= x <= r for x in vals):
        raise BadQuadruple(f"{vals} has a value outside [0, {r}]")
    if sum(vals) != 2 * r:
        raise BadQuadruple(f"{vals} sums to {sum(vals)}, expected {2 * r}")


def count_vertex_linkings(hb: int, vb: int, hbp: int, vbp: int, r: int) -> int:
    """Number of non-crossing pairings with no intra-block pair.

    Catalan-style recursion on the pairing of the first slot; the circular
    arrangement may be cut anywhere, so an interval recursion suffices.
    """
    _check_quadruple(hb, vb, hbp, vbp, r)
    labels = (0,) * hb + (1,) * vb + (2,) * hbp + (3,) * vbp

    @lru_cache(maxsize=None)
    def f(i: int, j: int) -> int:
        if i >= j:
            return 1
        total = 0
        for k in range(i + 1, j, 2):
            if labels[k] != labels[i]:
                total += f(i + 1, k) * f(k + 1, j)
        return total

    result = f(0, 2 * r)
    f.cache_clear()
    return result


def count_fpl_expansions(x: ComplementaryEdgePair) -> int:
    """Number of fully packed loop configurations realizing x.

    The loop configuration is determined by x together with one linking
    choice per lattice point, so the count is the product of the
    per-vertex linking counts.
    """
    total = 1
    for i in range(1, x.n + 1):
        for j in range(1, x.n + 1):
            hb, vb, hbp, vbp = x.complementary_type(i, j)
            total *= count_vertex_linkings(hb, vb, hbp, vbp, x.r)
    return total
