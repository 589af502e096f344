from fractions import Fraction

import pytest

from asmspin.bijections import asm_to_edge
from asmspin.core import enumerate_vertex_types
from asmspin.counting import (
    CountQuery,
    count,
    count_asm_formula_n1,
    enumerate_asm,
    partition_function,
    semimagic_weights,
    uniform_weights,
)
from asmspin.errors import BadShape, CapExceeded, MissingWeight, ResourceLimit
from asmspin.verify import REFERENCE_COUNTS

from helpers import brute_family


def test_reference_counts():
    for n, row in REFERENCE_COUNTS.items():
        for r, expected in enumerate(row):
            assert count(n, r) == expected


def test_product_formula_matches_count():
    values = [count_asm_formula_n1(n) for n in range(1, 7)]
    assert values == [1, 2, 7, 42, 429, 7436]
    for n in range(1, 7):
        assert count(n, 1) == values[n - 1]


def test_count_agrees_with_enumeration():
    for family in ("asm", "sms"):
        for region in ("closed", "interior"):
            for n in range(1, 5):
                for r in range(5):
                    q = CountQuery(n, r, family, region)
                    expected = count(q)
                    if expected > 10**5:
                        continue
                    got = sum(1 for _ in enumerate_asm(n, r, family, region))
                    assert got == expected, (n, r, family, region)


def test_enumeration_against_definition():
    for n, r in ((2, 2), (3, 2), (3, 3)):
        assert {a.entries for a in enumerate_asm(n, r)} == set(brute_family(n, r))
        assert {a.entries for a in enumerate_asm(n, r, "sms")} == set(
            brute_family(n, r, sms=True)
        )


def test_interior_counts_small():
    # brute force over the definition with strict partial sums
    assert count(3, 3, "asm", "interior") == len(brute_family(3, 3, strict=True))
    assert count(3, 3, "asm", "interior") == 1
    assert count(3, 4, "asm", "interior") == len(brute_family(3, 4, strict=True))
    assert count(4, 5, "asm", "interior") == 110
    assert len(list(enumerate_asm(4, 5, "asm", "interior"))) == 110


def test_interior_empty_below_size():
    for n in range(2, 7):
        for r in range(min(n, 5)):
            assert count(n, r, "asm", "interior") == 0
    assert list(enumerate_asm(3, 2, "asm", "interior")) == []


def test_sms_interior_is_positive_entries():
    assert count(4, 4, "sms", "interior") == 1
    # shifting by the all-ones matrix is a bijection with the closed family
    for r in range(4, 8):
        assert count(4, r, "sms", "interior") == count(4, r - 4, "sms")
    assert {a.entries for a in enumerate_asm(3, 4, "sms", "interior")} == set(
        brute_family(3, 4, sms=True, strict=True)
    )


def test_sms_row_counts():
    for n in range(1, 5):
        assert count(n, 1, "sms") == count_asm_formula_n1(1) * {
            1: 1, 2: 2, 3: 6, 4: 24,
        }[n]
    assert count(3, 2, "sms") == 21
    assert count(4, 2, "sms") == 282


def test_enumeration_order_is_lexicographic_in_v_rows():
    def v_key(a):
        return tuple(x for row in asm_to_edge(a).V for x in row)

    stream = [v_key(a) for a in enumerate_asm(3, 2)]
    assert stream == sorted(stream)
    assert len(set(stream)) == len(stream)


def test_cap_exceeded():
    gen = enumerate_asm(4, 2, cap=10)
    with pytest.raises(CapExceeded):
        list(gen)


def test_resource_limit():
    with pytest.raises(ResourceLimit):
        count(6, 4, max_states=100)
    with pytest.raises(ResourceLimit):
        partition_function(6, 4, uniform_weights(4), max_states=100)


def test_symmetry_classes_preserve_counts():
    """Row reversal, column reversal and transpose map each family onto
    itself."""
    for n, r in ((3, 2), (4, 2)):
        family = {a.entries for a in enumerate_asm(n, r)}
        for op in (
            lambda m: tuple(reversed(m)),
            lambda m: tuple(tuple(reversed(row)) for row in m),
            lambda m: tuple(zip(*m)),
        ):
            assert {op(m) for m in family} == family


def test_large_parameters_match_closed_form():
    from asmspin.size3 import count_closed_form_3

    assert count(3, 60) == count_closed_form_3(60)
    assert count(2, 300) == 301


def test_huge_weights_promote_exactly():
    # weights far beyond int64 force the object-dtype path; the result must
    # scale the plain count exactly
    scale = 10**30
    weights = {k: scale for k in uniform_weights(2)}
    assert partition_function(3, 2, weights) == 26 * scale**9


def test_partition_function_unit_and_indicator():
    for n in range(1, 5):
        for r in range(4):
            assert partition_function(n, r, uniform_weights(r)) == count(n, r)
            assert partition_function(n, r, semimagic_weights(r)) == count(n, r, "sms")


def test_partition_function_brute_force_em21():
    """Weighted sums over the two n=2, r=1 configurations, checked against
    direct evaluation of the product of weights."""

    def brute(weight_fn):
        total = 0
        for a in enumerate_asm(2, 1):
            e = asm_to_edge(a)
            prod = 1
            for i in (1, 2):
                for j in (1, 2):
                    prod *= weight_fn(e.vertex_type(i, j).as_tuple())
            total += prod
        return total

    cases = [
        lambda t: 1 if t[3] == t[1] else 0,  # v' == v
        lambda t: 1 if t[1] == t[2] else 0,  # v == h'
        lambda t: 1,
        lambda t: 2 if t[0] != t[2] else 3,
    ]
    for fn in cases:
        weights = {vt.as_tuple(): fn(vt.as_tuple()) for vt in enumerate_vertex_types(1)}
        assert partition_function(2, 1, weights) == brute(fn)


def test_partition_function_rational_weights():
    weights = {
        vt.as_tuple(): Fraction(1, 3) if vt.h == vt.hp else Fraction(2, 5)
        for vt in enumerate_vertex_types(1)
    }

    def brute(n):
        total = Fraction(0)
        for a in enumerate_asm(n, 1):
            e = asm_to_edge(a)
            prod = Fraction(1)
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    t = e.vertex_type(i, j)
                    prod *= Fraction(1, 3) if t.h == t.hp else Fraction(2, 5)
            total += prod
        return total

    for n in (2, 3):
        assert partition_function(n, 1, weights) == brute(n)


def test_partition_function_site_dependent():
    weights = {}
    for z in ("a", "b"):
        for vt in enumerate_vertex_types(1):
            weights[(z, vt.as_tuple())] = 1 if z == "a" else 2
    grid = [["a", "b"], ["b", "a"]]
    # every configuration picks up weight 2 at the two "b" sites
    assert partition_function(2, 1, weights, z_assignment=grid) == 4 * count(2, 1)


def test_missing_weight():
    weights = uniform_weights(2)
    weights.pop((0, 0, 0, 0))
    with pytest.raises(MissingWeight):
        partition_function(2, 2, weights)


def test_count_query_validation():
    with pytest.raises(BadShape):
        CountQuery(0, 1)
    with pytest.raises(BadShape):
        CountQuery(2, -1)
    with pytest.raises(BadShape):
        CountQuery(2, 1, "magic")
