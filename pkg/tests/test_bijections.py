import random

from asmspin.bijections import (
    asm_to_corner,
    asm_to_edge,
    complementary_to_edge,
    corner_to_asm,
    corner_to_edge,
    edge_to_asm,
    edge_to_complementary,
    edge_to_corner,
    edge_to_triangle,
    triangle_to_edge,
)
from asmspin.core import AsmMatrix, validate_asm
from asmspin.counting import enumerate_asm
from asmspin.verify import (
    EXAMPLE_ASM,
    EXAMPLE_C,
    EXAMPLE_H,
    EXAMPLE_HBAR,
    EXAMPLE_MT,
    EXAMPLE_V,
    EXAMPLE_VBAR,
    example_matrix,
)


def test_running_example_edge_pair():
    e = asm_to_edge(example_matrix())
    assert e.H == EXAMPLE_H
    assert e.V == EXAMPLE_V
    assert edge_to_asm(e).entries == EXAMPLE_ASM


def test_identity_matrix_step_functions():
    a = validate_asm([[1 if i == j else 0 for j in range(4)] for i in range(4)], 1)
    e = asm_to_edge(a)
    for i in range(1, 5):
        assert [e.h(i, j) for j in range(5)] == [0] * i + [1] * (5 - i)


def test_zero_matrix_edges():
    e = asm_to_edge(validate_asm([[0, 0], [0, 0]], 0))
    assert all(x == 0 for row in e.H for x in row)
    assert all(x == 0 for row in e.V for x in row)


def test_one_by_one():
    for r in range(4):
        a = validate_asm([[r]], r)
        e = asm_to_edge(a)
        assert e.H == ((0, r),)
        assert e.V == ((0,), (r,))
        c = asm_to_corner(a)
        assert c.C == ((0, 0), (0, r))


def test_running_example_corner_and_triangle_and_complement():
    a = example_matrix()
    e = asm_to_edge(a)
    assert asm_to_corner(a).C == EXAMPLE_C
    assert edge_to_corner(e).C == EXAMPLE_C
    assert edge_to_triangle(e).rows == EXAMPLE_MT
    x = edge_to_complementary(e)
    assert x.Hbar == EXAMPLE_HBAR
    assert x.Vbar == EXAMPLE_VBAR


def _families_for_roundtrip():
    # |family| <= 10^4 covers (3,2), (3,3) and (4,2)
    for n, r in ((3, 2), (3, 3), (4, 2), (2, 3), (3, 1)):
        yield n, r, list(enumerate_asm(n, r))


def test_round_trips_exhaustive():
    for n, r, family in _families_for_roundtrip():
        seen_triangles = set()
        for a in family:
            e = asm_to_edge(a)
            assert edge_to_asm(e).entries == a.entries
            c = asm_to_corner(a)
            assert corner_to_asm(c).entries == a.entries
            assert corner_to_edge(c) == e
            t = edge_to_triangle(e)
            assert triangle_to_edge(t) == e
            seen_triangles.add(t.rows)
            x = edge_to_complementary(e)
            assert complementary_to_edge(x) == e
        # triangle map is injective, so cardinality is preserved
        assert len(seen_triangles) == len(family)


def test_asm32_round_trip_has_26_cases():
    family = list(enumerate_asm(3, 2))
    assert len(family) == 26
    for a in family:
        assert edge_to_asm(asm_to_edge(a)).entries == a.entries


def test_asm23_round_trip_has_4_cases():
    family = list(enumerate_asm(2, 3))
    assert len(family) == 4
    for a in family:
        assert corner_to_asm(asm_to_corner(a)).entries == a.entries


def test_commutation_corner_via_edge():
    for a in enumerate_asm(3, 1):
        assert edge_to_corner(asm_to_edge(a)) == asm_to_corner(a)
        assert corner_to_asm(edge_to_corner(asm_to_edge(a))).entries == a.entries


def test_complement_double_application_on_random_em42():
    rng = random.Random(42)
    family = list(enumerate_asm(4, 2))
    for _ in range(100):
        a = family[rng.randrange(len(family))]
        e = asm_to_edge(a)
        assert complementary_to_edge(edge_to_complementary(e)) == e


def test_triangle_rows_for_identity():
    a = validate_asm([[1 if i == j else 0 for j in range(3)] for i in range(3)], 1)
    t = edge_to_triangle(asm_to_edge(a))
    assert t.rows == ((1,), (1, 2), (1, 2, 3))


def test_forward_maps_validate_outputs():
    """Constructors re-check every invariant, so surviving construction is
    the certificate; spot-check a couple of fields anyway."""
    for a in enumerate_asm(3, 3):
        e = asm_to_edge(a)
        assert e.h(1, 0) == 0 and e.v(3, 1) == 3
        x = edge_to_complementary(e)
        total = x.vbar(0, 1) + x.hbar(1, 0) + x.vbar(1, 1) + x.hbar(1, 1)
        assert total == 2 * 3


def test_corner_zero_matrix():
    a = AsmMatrix(3, 0, [[0] * 3] * 3)
    assert asm_to_corner(a).C == tuple((0,) * 4 for _ in range(4))
