import math
from math import gcd, isqrt

import pytest

from weilzeta.number_field import (
    InvariantsError,
    NumberFieldInvariants,
    RATIONALS,
    class_number_imaginary,
    class_number_real,
    fundamental_discriminant,
    fundamental_unit_real,
    is_fundamental,
    parse_invariants,
    quad_invariants,
    squarefree_part,
    unit_norm,
)


def fundamental_range(lo, hi):
    return [d for d in range(lo, hi) if d not in (0, 1) and is_fundamental(d)]


def reduce_form(a, b, c):
    """Independent reduction oracle for definite forms (a > 0)."""
    while True:
        if not (-a < b <= a):
            b_shift = b % (2 * a)
            if b_shift > a:
                b_shift -= 2 * a
            c = (b_shift * b_shift - (b * b - 4 * a * c)) // (4 * a)
            b = b_shift
        if c < a:
            a, b, c = c, -b, a
            continue
        if a == c and b < 0:
            b = -b
        if -a < b <= a and a <= c and not (a == c and b < 0):
            return a, b, c


def brute_force_h_imaginary(D):
    """Reduce every primitive form with small coefficients, count the
    distinct reduced forms."""
    bound = isqrt(-D) + 2
    reduced = set()
    for a in range(1, 3 * bound):
        for b in range(-2 * bound, 2 * bound + 1):
            if (b * b - D) % (4 * a):
                continue
            c = (b * b - D) // (4 * a)
            if c <= 0 or gcd(gcd(a, abs(b)), c) != 1:
                continue
            reduced.add(reduce_form(a, b, c))
    return len(reduced)


def test_fundamental_discriminant_examples():
    assert fundamental_discriminant(-1) == -4
    assert fundamental_discriminant(5) == 5
    assert fundamental_discriminant(12) == 12
    assert fundamental_discriminant(7) == 28
    assert fundamental_discriminant(50) == 8


def test_fundamental_discriminant_rejects():
    for bad in (0, 1, 4, 9, 16):
        with pytest.raises(InvariantsError):
            fundamental_discriminant(bad)


def test_squarefree_part():
    assert squarefree_part(12) == 3
    assert squarefree_part(-8) == -2
    assert squarefree_part(30) == 30


def test_class_number_imaginary_examples():
    assert class_number_imaginary(-4) == 1
    assert class_number_imaginary(-23) == 3
    assert class_number_imaginary(-3) == 1


def test_class_number_imaginary_known_values():
    known = {-7: 1, -8: 1, -11: 1, -15: 2, -20: 2, -47: 5, -84: 4, -163: 1}
    for d, h in known.items():
        assert class_number_imaginary(d) == h


def test_class_number_imaginary_vs_brute_force():
    for d in fundamental_range(-200, 0):
        assert class_number_imaginary(d) == brute_force_h_imaginary(d) >= 1


def test_class_number_imaginary_rejects():
    with pytest.raises(InvariantsError):
        class_number_imaginary(5)
    with pytest.raises(InvariantsError):
        class_number_imaginary(-12)  # -12 = 4*(-3), -3 = 1 mod 4: not fundamental


def test_fundamental_unit_examples():
    (x, y), reg = fundamental_unit_real(5)
    assert (x, y) == (1, 1)
    assert math.isclose(reg, math.log((1 + math.sqrt(5)) / 2), rel_tol=1e-13)
    (x, y), reg = fundamental_unit_real(8)
    assert (x, y) == (2, 1)
    assert math.isclose(reg, math.log(1 + math.sqrt(2)), rel_tol=1e-13)
    (x, y), _ = fundamental_unit_real(13)
    assert (x, y) == (3, 1)


def test_fundamental_unit_pell_and_minimality():
    for d in fundamental_range(2, 200):
        (x, y), reg = fundamental_unit_real(d)
        assert x * x - d * y * y in (4, -4)
        assert reg > 0
        # exhaustive: no unit with smaller y (and none with smaller x at the same y)
        for yy in range(1, y):
            for sign in (4, -4):
                val = d * yy * yy + sign
                assert val < 0 or isqrt(val) ** 2 != val
        if x * x - d * y * y == 4:
            assert d * y * y - 4 < 0 or isqrt(d * y * y - 4) ** 2 != d * y * y - 4


def test_class_number_real_known_values():
    known = {5: 1, 8: 1, 12: 1, 13: 1, 40: 2, 60: 2, 65: 2, 85: 2, 229: 3}
    for d, h in known.items():
        assert class_number_real(d) == h


def test_unit_norm():
    assert unit_norm(5) == -1
    assert unit_norm(12) == 1
    assert unit_norm(40) == -1


def test_quad_invariants():
    inv = quad_invariants(-4)
    assert (inv.r1, inv.r2, inv.h, inv.R, inv.w) == (0, 1, 1, 1.0, 4)
    inv = quad_invariants(1)
    assert (inv.r1, inv.r2, inv.h, inv.R, inv.w) == (1, 0, 1, 1.0, 2)
    inv = quad_invariants(5)
    assert (inv.r1, inv.r2, inv.h, inv.w) == (2, 0, 1, 2)
    assert math.isclose(inv.R, math.log((1 + math.sqrt(5)) / 2), rel_tol=1e-13)
    assert quad_invariants(-3).w == 6


def test_quad_invariants_positive():
    for d in fundamental_range(-200, 200):
        inv = quad_invariants(d)
        value = inv.w * inv.h * inv.R
        assert value > 0 and math.isfinite(value)


def test_parse_invariants_roundtrip():
    inv = parse_invariants("r1=0\nr2=1\nh=1\nR=1\nw=6\ndisc=-3")
    assert inv == quad_invariants(-3)


def test_parse_invariants_comments_and_blank_lines():
    inv = parse_invariants("# header\nr1=1\nr2=2\n\nh=3\nR=0.5  # regulator\nw=2\n")
    assert (inv.r1, inv.r2, inv.h, inv.R, inv.w) == (1, 2, 3, 0.5, 2)


def test_parse_invariants_errors():
    with pytest.raises(InvariantsError, match="h"):
        parse_invariants("r1=0\nr2=1\nR=1\nw=6")
    with pytest.raises(InvariantsError, match="root-of-unity"):
        parse_invariants("r1=0\nr2=1\nh=1\nR=1\nw=0")
    with pytest.raises(InvariantsError, match="line 2"):
        parse_invariants("r1=0\nr2=yes\nh=1\nR=1\nw=2")
    with pytest.raises(InvariantsError, match="line 1"):
        parse_invariants("nonsense")


def test_load_invariants(tmp_path):
    path = tmp_path / "field.txt"
    path.write_text("r1=0\nr2=1\nh=1\nR=1\nw=4\ndisc=-4\n")
    from weilzeta.number_field import load_invariants

    assert load_invariants(path) == quad_invariants(-4)


def test_invariants_type_checks():
    with pytest.raises(InvariantsError):
        NumberFieldInvariants(0, 0, 1, 1.0, 2)  # r1 + r2 < 1
    with pytest.raises(InvariantsError):
        NumberFieldInvariants(1, 0, 1, 0.0, 2)  # R must be positive
    assert RATIONALS.unit_rank == 0
