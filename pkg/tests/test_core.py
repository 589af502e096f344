import random

import pytest

from asmspin.core import (
    AsmMatrix,
    enumerate_vertex_types,
    is_semimagic,
    validate_asm,
    validate_complementary_pair,
    validate_corner_sum,
    validate_edge_pair,
    validate_monotone_triangle,
)
from asmspin.counting import enumerate_asm
from asmspin.errors import (
    BadBoundary,
    BadLineSum,
    BadShape,
    NegativePartialSum,
    ValidationError,
)
from asmspin.verify import (
    EXAMPLE_ASM,
    EXAMPLE_C,
    EXAMPLE_H,
    EXAMPLE_HBAR,
    EXAMPLE_MT,
    EXAMPLE_V,
    EXAMPLE_VBAR,
)

from helpers import brute_family, line_sum_rows, satisfies_defining_conditions


def test_running_example_accepted():
    a = validate_asm(EXAMPLE_ASM, 2)
    assert a.n == 5 and a.r == 2
    assert a.entry(2, 4) == 2
    assert not is_semimagic(a)


def test_zero_matrix_accepted_for_every_size():
    for n in (1, 2, 5):
        a = validate_asm([[0] * n for _ in range(n)], 0)
        assert is_semimagic(a)


def test_bad_line_sum_reported():
    with pytest.raises(BadLineSum) as info:
        validate_asm([[1, 1], [1, 1]], 1)
    assert info.value.axis == "row"
    assert info.value.index == 1
    assert info.value.actual == 2


def test_negative_partial_sum_reported():
    with pytest.raises(NegativePartialSum) as info:
        validate_asm([[-1, 2], [2, -1]], 1)
    assert info.value.axis == "row"
    assert info.value.index == 1
    assert info.value.end == "left"


def test_right_end_partial_sum_detected():
    # row prefix exceeding r means the right-end partial sum is negative
    with pytest.raises(NegativePartialSum) as info:
        validate_asm([[2, 1, -1, 0], [0, 0, 1, 1], [0, 1, 1, 0], [0, 0, 1, 1]], 2)
    assert info.value.end == "right"
    assert info.value.axis == "row"


def test_non_square_rejected():
    with pytest.raises(BadShape):
        validate_asm([[1, 0], [0, 1], [0, 0]], 1)


def test_size_guards():
    with pytest.raises(BadShape):
        AsmMatrix(0, 1, [])
    with pytest.raises(BadShape):
        AsmMatrix(1, 10**6 + 1, [[10**6 + 1]])


def test_permutation_matrices_semimagic():
    for a in enumerate_asm(3, 1, "sms"):
        assert is_semimagic(a)
        assert sorted(x for row in a.entries for x in row) == [0] * 6 + [1] * 3


def test_two_by_two_family_explicit():
    for r in range(4):
        for i in range(r + 1):
            a = validate_asm([[i, r - i], [r - i, i]], r)
            assert is_semimagic(a)


@pytest.mark.parametrize("n,r", [(1, 0), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2)])
def test_validator_matches_definition_exhaustively(n, r):
    """validate_asm accepts exactly the matrices satisfying the definition."""
    accepted = {a.entries for a in enumerate_asm(n, r)}
    expected = set(brute_family(n, r))
    assert accepted == expected
    rows = line_sum_rows(n, r, -r, r)
    from itertools import product

    for combo in product(rows, repeat=n):
        mat = [list(row) for row in combo]
        good = satisfies_defining_conditions(mat, r)
        if good:
            validate_asm(mat, r)
        else:
            with pytest.raises(ValidationError):
                validate_asm(mat, r)


def test_row_sum_violations_rejected():
    rng = random.Random(7)
    for _ in range(200):
        n, r = 3, 2
        mat = [[rng.randint(-r, r) for _ in range(n)] for _ in range(n)]
        if satisfies_defining_conditions(mat, r):
            continue
        with pytest.raises(ValidationError):
            validate_asm(mat, r)


def test_entry_bounds_consequence():
    """Accepted matrices never hold an entry outside [-r, r], nor a boundary
    entry outside [0, r]."""
    for n, r in ((3, 2), (4, 1), (2, 3)):
        for a in enumerate_asm(n, r):
            for i in range(n):
                for j in range(n):
                    assert -r <= a.entries[i][j] <= r
                    if i in (0, n - 1) or j in (0, n - 1):
                        assert 0 <= a.entries[i][j] <= r


def test_prefix_sums_within_window():
    for a in enumerate_asm(4, 2):
        for i in range(4):
            acc = 0
            for j in range(3):
                acc += a.entries[i][j]
                assert 0 <= acc <= 2


def test_edge_pair_validators():
    validate_edge_pair((EXAMPLE_H, EXAMPLE_V), 5, 2)
    bad_h = [list(row) for row in EXAMPLE_H]
    bad_h[0][0] = 1
    with pytest.raises(BadBoundary):
        validate_edge_pair((bad_h, EXAMPLE_V), 5, 2)


def test_corner_and_triangle_and_complement_validators():
    validate_corner_sum(EXAMPLE_C, 5, 2)
    validate_monotone_triangle(EXAMPLE_MT, 5, 2)
    validate_complementary_pair((EXAMPLE_HBAR, EXAMPLE_VBAR), 5, 2)
    bad_c = [list(row) for row in EXAMPLE_C]
    bad_c[5][5] = 11
    with pytest.raises(ValidationError):
        validate_corner_sum(bad_c, 5, 2)
    bad_mt = [list(row) for row in EXAMPLE_MT]
    bad_mt[0] = [3, 2]
    with pytest.raises(ValidationError):
        validate_monotone_triangle(bad_mt, 5, 2)


def test_vertex_type_counts_match_closed_forms():
    for r in range(21):
        full = enumerate_vertex_types(r)
        semi = enumerate_vertex_types(r, semimagic_only=True)
        assert len(full) == (r + 1) * (2 * r * r + 4 * r + 3) // 3
        assert len(semi) == (r + 1) * (r + 2) * (2 * r + 3) // 6
        assert len(set(v.as_tuple() for v in full)) == len(full)
        assert all(v.h + v.v == v.hp + v.vp for v in full)
        assert all(v.h <= v.hp for v in semi)


def test_vertex_type_small_counts():
    assert len(enumerate_vertex_types(1)) == 6
    assert len(enumerate_vertex_types(2)) == 19
    assert len(enumerate_vertex_types(2, semimagic_only=True)) == 14


def test_types_are_immutable_and_hashable():
    a = validate_asm(EXAMPLE_ASM, 2)
    with pytest.raises(AttributeError):
        a.n = 7
    assert hash(a) == hash(validate_asm(EXAMPLE_ASM, 2))
