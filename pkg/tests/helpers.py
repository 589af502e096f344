"""Independent brute-force oracles used to pin expected values.

Everything here works straight from the defining conditions, without the
package's validators, DP or recursions, so agreement is a genuine
cross-check rather than a tautology.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product


def line_sum_rows(n: int, r: int, lo: int, hi: int):
    """All length-n integer rows with entries in [lo, hi] summing to r."""
    rows = []

    def rec(prefix, total):
        if len(prefix) == n:
            if total == r:
                rows.append(tuple(prefix))
            return
        remaining = n - len(prefix) - 1
        for x in range(lo, hi + 1):
            t = total + x
            if t + remaining * hi < r or t + remaining * lo > r:
                continue
            rec(prefix + [x], t)

    rec([], 0)
    return rows


def satisfies_defining_conditions(mat, r: int, strict: bool = False) -> bool:
    """Check the raw definition: line sums r, both-end partials >= 0 (or >= 1)."""
    n = len(mat)
    bound = 1 if strict else 0
    for row in mat:
        if sum(row) != r:
            return False
    for j in range(n):
        if sum(mat[i][j] for i in range(n)) != r:
            return False
    for i in range(n):
        for j in range(n - 1):
            if sum(mat[i][: j + 1]) < bound:
                return False
            if sum(mat[i][j + 1:]) < bound:
                return False
    for j in range(n):
        for i in range(n - 1):
            if sum(mat[k][j] for k in range(i + 1)) < bound:
                return False
            if sum(mat[k][j] for k in range(i + 1, n)) < bound:
                return False
    return True


def brute_family(n: int, r: int, sms: bool = False, strict: bool = False):
    """Exhaustive family members straight from the definition."""
    lo = 0 if sms else -r
    if sms and strict:
        lo = 1
    rows = line_sum_rows(n, r, lo, r)
    out = []
    for combo in product(rows, repeat=n):
        if sms:
            ok = all(
                sum(combo[i][j] for i in range(n)) == r for j in range(n)
            )
            if sms and strict:
                ok = ok and all(x >= 1 for row in combo for x in row)
        else:
            ok = satisfies_defining_conditions(
                [list(row) for row in combo], r, strict=strict
            )
        if ok:
            out.append(tuple(combo))
    return out


def crossing(a, b, c, d) -> bool:
    """True iff chords (a,b) and (c,d) on a cycle of labeled points cross."""
    a, b = sorted((a, b))
    c, d = sorted((c, d))
    return (a < c < b < d) or (c < a < d < b)


def brute_noncrossing_matchings(labels):
    """All non-crossing perfect matchings pairing differently labeled slots."""
    slots = list(range(len(labels)))

    def rec(free):
        if not free:
            return [[]]
        first = free[0]
        out = []
        for other in free[1:]:
            if labels[first] == labels[other]:
                continue
            rest = [s for s in free if s not in (first, other)]
            for sub in rec(rest):
                cand = [(first, other)] + sub
                if not any(
                    crossing(*cand[0], *p) for p in sub
                ):
                    out.append(cand)
        return out

    return rec(slots)


def brute_cem(n: int, r: int):
    """Complementary pairs (Hbar, Vbar) by direct backtracking on entries."""

    def boundary_h0(i):
        return 0 if i % 2 == 1 else r

    def boundary_hn(i):
        # row n - 2k + 2 gets 0, row n - 2k + 1 gets r
        return 0 if (n - i) % 2 == 0 else r

    def boundary_v0(j):
        return r if j % 2 == 1 else 0

    def boundary_vn(j):
        return r if (n - j) % 2 == 0 else 0

    results = []
    hbar = [[None] * (n + 1) for _ in range(n + 1)]  # 1-based rows
    vbar = [[None] * (n + 1) for _ in range(n + 2)]
    for i in range(1, n + 1):
        hbar[i][0] = boundary_h0(i)
    for j in range(1, n + 1):
        vbar[0][j] = boundary_v0(j)

    cells = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]

    def rec(idx):
        if idx == len(cells):
            results.append(
                (
                    tuple(tuple(hbar[i][j] for j in range(n + 1)) for i in range(1, n + 1)),
                    tuple(tuple(vbar[i][j] for j in range(1, n + 1)) for i in range(n + 1)),
                )
            )
            return
        i, j = cells[idx]
        choices = [boundary_vn(j)] if i == n else range(r + 1)
        for v in choices:
            h = 2 * r - vbar[i - 1][j] - hbar[i][j - 1] - v
            if not 0 <= h <= r:
                continue
            if j == n and h != boundary_hn(i):
                continue
            vbar[i][j] = v
            hbar[i][j] = h
            rec(idx + 1)
            vbar[i][j] = None
            hbar[i][j] = None

    rec(0)
    return results


def random_convex_point(rng, vertices, k: int):
    """Exact random convex combination of k of the given 0/1/-1 matrices."""
    chosen = [vertices[rng.randrange(len(vertices))] for _ in range(k)]
    weights = [rng.randint(1, 9) for _ in range(k)]
    total = sum(weights)
    n = len(chosen[0])
    acc = [[Fraction(0)] * n for _ in range(n)]
    for w, mat in zip(weights, chosen):
        for i in range(n):
            for j in range(n):
                acc[i][j] += Fraction(w, total) * mat[i][j]
    return acc
