"""Explicit bijections among the matrix-shaped representations.

Every map is a pure O(n^2) function; outputs are built through the
validating constructors, so each forward map certifies its own result.
"""

from __future__ import annotations

from .core import (
    AsmMatrix,
    ComplementaryEdgePair,
    CornerSumMatrix,
    EdgeMatrixPair,
    MonotoneTriangle,
)
from .errors import InconsistentPair


def asm_to_edge(a: AsmMatrix) -> EdgeMatrixPair:
    """Column-sum matrix H and row-sum matrix V of a."""
    n = a.n
    h = []
    for i in range(n):
        acc = 0
        row = [0]
        for j in range(n):
            acc += a.entries[i][j]
            row.append(acc)
        h.append(row)
    v = [[0] * n]
    for i in range(n):
        v.append([v[i][j] + a.entries[i][j] for j in range(n)])
    return EdgeMatrixPair(n, a.r, h, v)


def edge_to_asm(e: EdgeMatrixPair) -> AsmMatrix:
    """Inverse of asm_to_edge: A_ij = H_ij - H_{i,j-1} = V_ij - V_{i-1,j}."""
    n = e.n
    entries = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            dh = e.h(i, j) - e.h(i, j - 1)
            dv = e.v(i, j) - e.v(i - 1, j)
            if dh != dv:
                raise InconsistentPair(
                    f"difference formulas disagree at ({i}, {j}): {dh} != {dv}"
                )
            row.append(dh)
        entries.append(row)
    return AsmMatrix(n, e.r, entries)


def asm_to_corner(a: AsmMatrix) -> CornerSumMatrix:
    """Rectangular partial sums C_ij = sum of the top-left i x j block."""
    n = a.n
    c = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            c[i][j] = (
                a.entries[i - 1][j - 1] + c[i - 1][j] + c[i][j - 1] - c[i - 1][j - 1]
            )
    return CornerSumMatrix(n, a.r, c)


def corner_to_asm(c: CornerSumMatrix) -> AsmMatrix:
    """Second difference A_ij = C_ij - C_{i,j-1} - C_{i-1,j} + C_{i-1,j-1}."""
    n = c.n
    entries = [
        [
            c.c(i, j) - c.c(i, j - 1) - c.c(i - 1, j) + c.c(i - 1, j - 1)
            for j in range(1, n + 1)
        ]
        for i in range(1, n + 1)
    ]
    return AsmMatrix(n, c.r, entries)


def edge_to_corner(e: EdgeMatrixPair) -> CornerSumMatrix:
    """C_ij as the column prefix sum of H (equals the row prefix sum of V)."""
    n = e.n
    c = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(n + 1):
            c[i][j] = c[i - 1][j] + e.h(i, j)
    return CornerSumMatrix(n, e.r, c)


def corner_to_edge(c: CornerSumMatrix) -> EdgeMatrixPair:
    """H_ij = C_ij - C_{i-1,j}, V_ij = C_ij - C_{i,j-1}."""
    n = c.n
    h = [[c.c(i, j) - c.c(i - 1, j) for j in range(n + 1)] for i in range(1, n + 1)]
    v = [[c.c(i, j) - c.c(i, j - 1) for j in range(1, n + 1)] for i in range(n + 1)]
    return EdgeMatrixPair(n, c.r, h, v)


def edge_to_triangle(e: EdgeMatrixPair) -> MonotoneTriangle:
    """Row i lists the letter j with multiplicity V_ij, weakly increasing."""
    n = e.n
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            row.extend([j] * e.v(i, j))
        rows.append(row)
    return MonotoneTriangle(n, e.r, rows)


def triangle_to_edge(t: MonotoneTriangle) -> EdgeMatrixPair:
    """V_ij is the number of occurrences of j in row i; H follows by rows."""
    n = t.n
    v = [[0] * n]
    for i in range(1, n + 1):
        counts = [0] * n
        for letter in t.row(i):
            counts[letter - 1] += 1
        v.append(counts)
    h = []
    for i in range(1, n + 1):
        row = [0]
        acc = 0
        for j in range(n):
            acc += v[i][j] - v[i - 1][j]
            row.append(acc)
        h.append(row)
    return EdgeMatrixPair(n, t.r, h, v)


def _complement_grids(n, r, hgrid, vgrid):
    # H entries flip on even i+j, V entries on odd i+j (1-based lattice labels).
    h = [
        [hgrid[i - 1][j] if (i + j) % 2 == 1 else r - hgrid[i - 1][j] for j in range(n + 1)]
        for i in range(1, n + 1)
    ]
    v = [
        [r - vgrid[i][j - 1] if (i + j) % 2 == 1 else vgrid[i][j - 1] for j in range(1, n + 1)]
        for i in range(n + 1)
    ]
    return h, v


def edge_to_complementary(e: EdgeMatrixPair) -> ComplementaryEdgePair:
    hbar, vbar = _complement_grids(e.n, e.r, e.H, e.V)
    return ComplementaryEdgePair(e.n, e.r, hbar, vbar)


def complementary_to_edge(x: ComplementaryEdgePair) -> EdgeMatrixPair:
    """Applies the same parity complementation again, recovering the pair."""
    h, v = _complement_grids(x.n, x.r, x.Hbar, x.Vbar)
    return EdgeMatrixPair(x.n, x.r, h, v)


def asm_to_corner_via_edge(a: AsmMatrix) -> CornerSumMatrix:
    """Composition edge_to_corner . asm_to_edge; must agree with asm_to_corner."""
    return edge_to_corner(asm_to_edge(a))
