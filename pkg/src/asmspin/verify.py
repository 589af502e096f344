"""Named verification suites driven by the CLI.

Each suite runs a bundle of checks against independently pinned reference
values and returns one result per check, so mismatches are reported with
expected/actual pairs rather than a bare failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import bijections, counting, ehrhart, paths, polytope, size3
from .core import AsmMatrix, enumerate_vertex_types

# Reference cardinalities for n in [1, 6], r in [0, 4].
REFERENCE_COUNTS = {
    1: (1, 1, 1, 1, 1),
    2: (1, 2, 3, 4, 5),
    3: (1, 7, 26, 70, 155),
    4: (1, 42, 628, 5102, 28005),
    5: (1, 429, 41784, 1507128, 28226084),
    6: (1, 7436, 7517457, 1749710096, 152363972022),
}

# The worked 5 x 5, line-sum-2 example and its companion representations.
EXAMPLE_ASM = (
    (0, 1, 1, 0, 0),
    (1, -1, 0, 2, 0),
    (0, 1, 1, -2, 2),
    (1, 0, 0, 1, 0),
    (0, 1, 0, 1, 0),
)
EXAMPLE_H = (
    (0, 0, 1, 2, 2, 2),
    (0, 1, 0, 0, 2, 2),
    (0, 0, 1, 2, 0, 2),
    (0, 1, 1, 1, 2, 2),
    (0, 0, 1, 1, 2, 2),
)
EXAMPLE_V = (
    (0, 0, 0, 0, 0),
    (0, 1, 1, 0, 0),
    (1, 0, 1, 2, 0),
    (1, 1, 2, 0, 2),
    (2, 1, 2, 1, 2),
    (2, 2, 2, 2, 2),
)
EXAMPLE_C = (
    (0, 0, 0, 0, 0, 0),
    (0, 0, 1, 2, 2, 2),
    (0, 1, 1, 2, 4, 4),
    (0, 1, 2, 4, 4, 6),
    (0, 2, 3, 5, 6, 8),
    (0, 2, 4, 6, 8, 10),
)
EXAMPLE_MT = (
    (2, 3),
    (1, 3, 4, 4),
    (1, 2, 3, 3, 5, 5),
    (1, 1, 2, 3, 3, 4, 5, 5),
    (1, 1, 2, 2, 3, 3, 4, 4, 5, 5),
)
EXAMPLE_HBAR = (
    (0, 2, 1, 0, 2, 0),
    (2, 1, 2, 0, 0, 2),
    (0, 2, 1, 0, 0, 0),
    (2, 1, 1, 1, 0, 2),
    (0, 2, 1, 1, 2, 0),
)
EXAMPLE_VBAR = (
    (2, 0, 2, 0, 2),
    (0, 1, 1, 2, 0),
    (1, 0, 1, 2, 2),
    (1, 1, 2, 2, 2),
    (0, 1, 0, 1, 0),
    (2, 0, 2, 0, 2),
)

BINOMIAL_VECTORS = {
    (1, "asm"): {0: 1},
    (2, "asm"): {1: 1},
    (3, "asm"): {2: 1, 3: 2, 4: 1},
    (4, "asm"): {3: 3, 4: 80, 5: 415, 6: 592, 7: 253, 8: 32, 9: 1},
    (5, "asm"): {
        4: 70, 5: 14468, 6: 521651, 7: 6002192, 8: 28233565, 9: 61083124,
        10: 64066830, 11: 32866092, 12: 7998192, 13: 854464, 14: 34627,
        15: 412, 16: 1,
    },
    (3, "sms"): {2: 1, 3: 1, 4: 1},
}

# Worked membership example for the n = 4 polytope, with the cycle and
# shifts used in its first split.
EXAMPLE_POINT = (
    ("3/10", "0", "3/5", "1/10"),
    ("1/5", "1/2", "-3/5", "9/10"),
    ("1/2", "-1/2", "1", "0"),
    ("0", "1", "0", "0"),
)
EXAMPLE_CYCLE = {
    "h_plus": {(2, 2), (2, 3), (3, 1)},
    "h_minus": {(1, 1), (1, 2), (1, 3)},
    "v_plus": {(1, 4), (2, 2)},
    "v_minus": {(1, 1), (2, 1)},
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    expected: str
    actual: str


def _check(name, expected, actual) -> CheckResult:
    return CheckResult(name, expected == actual, repr(expected), repr(actual))


def suite_table1(max_states=None) -> list[CheckResult]:
    out = []
    for n, row in REFERENCE_COUNTS.items():
        for r, expected in enumerate(row):
            actual = counting.count(n, r, max_states=max_states)
            out.append(_check(f"count(n={n}, r={r})", expected, actual))
    return out


def example_matrix() -> AsmMatrix:
    return AsmMatrix(5, 2, EXAMPLE_ASM)


def suite_running_example(max_states=None) -> list[CheckResult]:
    out = []
    a = example_matrix()
    e = bijections.asm_to_edge(a)
    out.append(_check("edge pair H", EXAMPLE_H, e.H))
    out.append(_check("edge pair V", EXAMPLE_V, e.V))
    out.append(_check("asm round trip", a.entries, bijections.edge_to_asm(e).entries))
    c = bijections.asm_to_corner(a)
    out.append(_check("corner sums", EXAMPLE_C, c.C))
    out.append(
        _check("corner via edges", EXAMPLE_C, bijections.edge_to_corner(e).C)
    )
    out.append(
        _check("corner round trip", a.entries, bijections.corner_to_asm(c).entries)
    )
    t = bijections.edge_to_triangle(e)
    out.append(_check("monotone triangle", EXAMPLE_MT, t.rows))
    out.append(_check("triangle round trip", e, bijections.triangle_to_edge(t)))
    x = bijections.edge_to_complementary(e)
    out.append(_check("complementary Hbar", EXAMPLE_HBAR, x.Hbar))
    out.append(_check("complementary Vbar", EXAMPLE_VBAR, x.Vbar))
    out.append(
        _check("complementary round trip", e, bijections.complementary_to_edge(x))
    )
    fam = paths.edge_to_paths(e)
    out.append(_check("path count", 10, len(fam.paths)))
    out.append(_check("paths round trip", e, paths.paths_to_edge(fam)))
    out.append(_check("loop expansions", 2, paths.count_fpl_expansions(x)))
    return out


def suite_ehrhart(n: int = 4, family: str = "asm", max_states=None) -> list[CheckResult]:
    out = []
    poly = ehrhart.interpolate(n, family, max_states=max_states)
    key = (n, family)
    if key in BINOMIAL_VECTORS:
        out.append(
            _check(
                f"binomial vector ({family}, n={n})",
                BINOMIAL_VECTORS[key],
                poly.binomial_support(),
            )
        )
    for r in range(3):
        out.append(
            _check(
                f"value at r={r}",
                counting.count(n, r, family, max_states=max_states),
                poly.evaluate(r),
            )
        )
    report = ehrhart.reciprocity_report(poly)
    if family == "sms":
        out.append(_check("palindromic coefficients", True, report.palindromic))
    return out


def suite_size3(r: int = 4, max_states=None) -> list[CheckResult]:
    out = []
    for rr in range(r + 1):
        comps = size3.enumerate_compositions(rr, "Cprime")
        out.append(
            _check(
                f"|C'({rr})| closed form",
                size3.composition_count(rr, "Cprime"),
                len(comps),
            )
        )
        out.append(
            _check(
                f"|C'({rr})| vs count",
                counting.count(3, rr, max_states=max_states),
                len(comps),
            )
        )
        images = {size3.theta_prime(a).entries for a in comps}
        out.append(_check(f"theta' injective at r={rr}", len(comps), len(images)))
        round_trips = all(
            size3.theta_prime_inverse(size3.theta_prime(a)) == a for a in comps
        )
        out.append(_check(f"theta' round trip at r={rr}", True, round_trips))
    out.append(
        _check(
            "closed forms vs reference row",
            REFERENCE_COUNTS[3],
            tuple(size3.count_closed_form_3(rr) for rr in range(5)),
        )
    )
    return out


def suite_polytope(max_states=None) -> list[CheckResult]:
    out = []
    x = polytope.PolytopePoint(4, EXAMPLE_POINT)
    out.append(_check("example in A4", True, bool(polytope.membership(x, "A"))))
    out.append(_check("example not in B4", False, bool(polytope.membership(x, "B"))))
    e = polytope.point_to_edge(x)
    cycle = polytope.NonIntegerCycle(
        frozenset(EXAMPLE_CYCLE["h_plus"]),
        frozenset(EXAMPLE_CYCLE["h_minus"]),
        frozenset(EXAMPLE_CYCLE["v_plus"]),
        frozenset(EXAMPLE_CYCLE["v_minus"]),
    )
    e_minus, e_plus, mu_minus, mu_plus = polytope.split_point(e, cycle)
    out.append(_check("mu_minus", Fraction(1, 10), mu_minus))
    out.append(_check("mu_plus", Fraction(3, 10), mu_plus))
    out.append(_check("split part in E4", True, bool(polytope.membership(e_minus, "E"))))
    dec = polytope.decompose(x)
    out.append(_check("reconstruction", x.entries, dec.weighted_sum().entries))
    out.append(_check("weights sum to 1", Fraction(1), sum(l for l, _ in dec.terms)))
    return out


def suite_vertex_types(r_max: int = 20) -> list[CheckResult]:
    out = []
    for r in range(r_max + 1):
        full = len(enumerate_vertex_types(r))
        semi = len(enumerate_vertex_types(r, semimagic_only=True))
        out.append(
            _check(f"|V({r})|", (r + 1) * (2 * r * r + 4 * r + 3) // 3, full)
        )
        out.append(
            _check(f"|V_S({r})|", (r + 1) * (r + 2) * (2 * r + 3) // 6, semi)
        )
    return out


SUITES = {
    "table1": suite_table1,
    "running-example": suite_running_example,
    "ehrhart": suite_ehrhart,
    "size3": suite_size3,
    "polytope": suite_polytope,
    "vertex-types": suite_vertex_types,
}
