from fractions import Fraction
from itertools import product

import pytest

from weilzeta.ff_zeta import (
    CurveSpec,
    FiniteField,
    ProjectiveSpace,
    SingularCurveError,
    SizeBoundExceeded,
    ZetaRational,
    count_points,
    curve_class_number,
    expected_counts,
    functional_equation_holds,
    hasse_bound_holds,
    is_prime,
    make_field,
    prime_power,
    special_value_s0,
    verify_ff,
    zeta_curve,
    zeta_pn,
)


# ---------------------------------------------------------------------------
# independent oracles

def poly_divides(d, f, p):
    """Does monic d divide f over F_p? Plain long division."""
    r = [c % p for c in f]
    while len(r) >= len(d) and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(d):
            break
        c = r[-1]
        shift = len(r) - len(d)
        for i, di in enumerate(d):
            r[shift + i] = (r[shift + i] - c * di) % p
    return not any(r)


def irreducible_oracle(f, p):
    """Monic f is irreducible iff no monic divisor of degree 1..deg-1."""
    k = len(f) - 1
    for deg in range(1, k):
        for tail in product(range(p), repeat=deg):
            d = list(tail) + [1]
            if poly_divides(d, f, p):
                return False
    return True


def affine_count_oracle(f, p):
    """Count {(x, y) in F_p^2 : y^2 = f(x)} by direct enumeration."""
    total = 0
    for x in range(p):
        fx = sum(c * x**i for i, c in enumerate(f)) % p
        total += sum(1 for y in range(p) if (y * y - fx) % p == 0)
    return total


# ---------------------------------------------------------------------------
# fields

def test_is_prime_and_prime_power():
    assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    assert prime_power(7) == (7, 1)
    for bad in (1, 6, 12, 100):
        with pytest.raises(ValueError):
            prime_power(bad)


def test_make_field_minimal_modulus():
    assert make_field(2, 2).modulus == (1, 1, 1)  # x^2 + x + 1
    assert make_field(3, 2).modulus == (1, 0, 1)  # x^2 + 1
    assert make_field(5, 1).modulus == (0, 1)


def test_make_field_modulus_is_lex_minimal_irreducible():
    for p, k in ((2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2)):
        field = make_field(p, k)
        mod = list(field.modulus)
        assert mod[-1] == 1 and len(mod) == k + 1
        assert irreducible_oracle(mod, p)
        # nothing lexicographically smaller (constant term first) works
        idx = sum(c * p**j for j, c in enumerate(mod[:-1]))
        for smaller in range(idx):
            cand = [(smaller // p**j) % p for j in range(k)] + [1]
            assert not irreducible_oracle(cand, p)


def test_make_field_caching_and_bounds():
    assert make_field(3, 2) is make_field(3, 2)
    with pytest.raises(SizeBoundExceeded):
        make_field(2, 21)
    with pytest.raises(ValueError):
        make_field(4, 1)
    with pytest.raises(ValueError):
        make_field(3, 0)


def test_field_multiplication_against_modular_arithmetic():
    # F_9 = F_3[x]/(x^2+1): (a+bx)(c+dx) = (ac-bd) + (ad+bc)x
    field = make_field(3, 2)
    els = field.elements()
    import numpy as np

    a = np.repeat(els, 9, axis=0)
    b = np.tile(els, (9, 1))
    prod_arr = field.mul(a, b)
    for (a0, a1), (b0, b1), (c0, c1) in zip(a, b, prod_arr):
        assert c0 == (a0 * b0 - a1 * b1) % 3
        assert c1 == (a0 * b1 + a1 * b0) % 3


def test_sqrt_counts_sum():
    # sum over v of #{y : y^2 = v} = q, and 0 has exactly one root
    for p, k in ((3, 1), (3, 2), (5, 1), (7, 2)):
        field = make_field(p, k)
        counts = field.sqrt_counts()
        assert int(counts.sum()) == field.q
        assert counts[0] == 1
        assert set(counts.tolist()) <= {0, 1, 2}


# ---------------------------------------------------------------------------
# point counts

def test_count_points_projective_space():
    assert count_points(ProjectiveSpace(4, 1)) == 5
    assert count_points(ProjectiveSpace(2, 2)) == 7
    assert count_points(ProjectiveSpace(3, 0), m=5) == 1
    assert count_points(ProjectiveSpace(2, 2), m=2) == 1 + 4 + 16


def test_count_points_curve_against_oracle():
    curves = [
        CurveSpec(3, (0, 1, 0, 1)),       # y^2 = x^3 + x
        CurveSpec(5, (0, -1, 0, 1)),      # y^2 = x^3 - x
        CurveSpec(7, (1, 1, 0, 1)),       # y^2 = x^3 + x + 1
        CurveSpec(5, (1, 1, 0, 0, 0, 1)), # y^2 = x^5 + x + 1
        CurveSpec(11, (2, 3, 0, 1)),
    ]
    for c in curves:
        assert count_points(c, 1) == affine_count_oracle(c.f, c.p) + 1


def test_count_points_extension_consistency():
    # N_m computed by the field machinery must match the zeta prediction
    c = CurveSpec(3, (0, 1, 0, 1))
    zeta = zeta_curve(c)
    assert expected_counts(zeta, 6) == [count_points(c, m) for m in range(1, 7)]


def test_count_points_size_bound():
    with pytest.raises(SizeBoundExceeded):
        count_points(CurveSpec(3, (0, 1, 0, 1)), m=13)
    with pytest.raises(ValueError):
        count_points(ProjectiveSpace(2, 1), m=0)


# ---------------------------------------------------------------------------
# curve specs

def test_curve_spec_properties():
    c = CurveSpec(5, (0, -1, 0, 1))
    assert c.genus == 1 and c.kind == "elliptic" and c.q == 5
    c = CurveSpec(5, (1, 1, 0, 0, 0, 1))
    assert c.genus == 2 and c.kind == "hyperelliptic"


def test_curve_spec_rejects_singular():
    with pytest.raises(SingularCurveError):
        CurveSpec(5, (0, 0, 0, 1))  # y^2 = x^3, cusp
    with pytest.raises(SingularCurveError):
        CurveSpec(7, (2, -3, 0, 1))  # (x-1)^2 (x+2)


def test_curve_spec_rejects_bad_degree_and_char():
    with pytest.raises(ValueError):
        CurveSpec(2, (1, 1, 0, 1))
    with pytest.raises(ValueError):
        CurveSpec(5, (1, 1, 0, 0, 1))  # degree 4
    # leading coefficient divisible by p drops the degree
    with pytest.raises(ValueError):
        CurveSpec(5, (1, 1, 0, 0, 0, 5))


# ---------------------------------------------------------------------------
# zeta functions

def test_zeta_pn_structure():
    zeta = zeta_pn(3, 2)
    assert zeta.numerator_factors == ()
    assert zeta.denominator_factors == ((1, -1), (1, -3), (1, -9))
    assert expected_counts(zeta, 3) == [13, 91, 757]


def test_zeta_curve_known_elliptic():
    # y^2 = x^3 + x over F_3: N_1 = 4, P(t) = 1 + 3t^2 (a_1 = 0)
    zeta = zeta_curve(CurveSpec(3, (0, 1, 0, 1)))
    assert zeta.numerator_factors == ((1, 0, 3),)
    # y^2 = x^3 - x over F_5: N_1 = 8, P(t) = 1 + 2t + 5t^2
    zeta = zeta_curve(CurveSpec(5, (0, -1, 0, 1)))
    assert zeta.numerator_factors == ((1, 2, 5),)
    assert curve_class_number(zeta) == 8


def test_zeta_curve_functional_equation_and_hasse():
    for c in (
        CurveSpec(3, (0, 1, 0, 1)),
        CurveSpec(5, (0, -1, 0, 1)),
        CurveSpec(3, (1, 0, 1, 0, 0, 1)),
        CurveSpec(7, (1, 2, 0, 0, 0, 1)),
        CurveSpec(5, (1, 0, 1, 0, 0, 0, 0, 1)),  # genus 3
    ):
        zeta = zeta_curve(c)
        (p_coeffs,) = zeta.numerator_factors
        assert len(p_coeffs) == 2 * c.genus + 1
        assert functional_equation_holds(zeta, c.genus)
        assert hasse_bound_holds(c, count_points(c, 1))
        assert curve_class_number(zeta) >= 1


def test_zeta_factors_validated():
    with pytest.raises(ValueError):
        ZetaRational(((0, 1),), (), 2)


# ---------------------------------------------------------------------------
# special values at s=0

def test_special_value_point():
    sv = special_value_s0(zeta_pn(5, 0))
    assert sv.ord == -1
    assert sv.mantissa == 1
    assert sv.log_base == 5 and sv.log_exponent == -1


def test_special_value_p2():
    # P^2 over F_q: simple pole, |c| = 1 / ((q-1)(q^2-1))
    for q in (2, 3, 4, 5):
        sv = special_value_s0(zeta_pn(q, 2))
        assert sv.ord == -1
        assert abs(sv.mantissa) == Fraction(1, (q - 1) * (q**2 - 1))


def test_special_value_elliptic():
    # |c| (q - 1) = P(1)
    c = CurveSpec(5, (0, -1, 0, 1))
    sv = special_value_s0(zeta_curve(c))
    assert sv.ord == -1
    assert abs(sv.mantissa) * 4 == 8


def test_verify_ff_projective_spaces():
    for q in (2, 3, 4, 5, 7, 8, 9):
        for n in range(0, 4):
            v = verify_ff(ProjectiveSpace(q, n))
            assert v.ok, v.checks


def test_verify_ff_curves():
    for c in (
        CurveSpec(3, (0, 1, 0, 1)),
        CurveSpec(5, (0, -1, 0, 1)),
        CurveSpec(7, (1, 1, 0, 1)),
        CurveSpec(3, (1, 0, 1, 0, 0, 1)),
        CurveSpec(11, (1, 2, 0, 0, 0, 1)),
    ):
        v = verify_ff(c)
        assert v.ok, v.checks
        assert v.special_value.ord == -1


def test_verify_ff_deterministic():
    a = verify_ff(CurveSpec(5, (0, -1, 0, 1)))
    b = verify_ff(CurveSpec(5, (0, -1, 0, 1)))
    assert a.zeta == b.zeta and a.special_value == b.special_value
