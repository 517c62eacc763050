# Exact zeta functions of hyperelliptic curves over prime fields.
#
# For a curve y^2 = f(x) over F_p the zeta function is the rational
# function P(t) / ((1-t)(1-pt)) with P of degree twice the genus.  The
# package reconstructs P from the first g point counts, completes it by
# the functional equation, and then checks everything it did not use:
# counts over larger extensions, the Hasse bound, and the special value
# identity |zeta*(0)| (q-1) = P(1) relating the leading coefficient at
# s=0 to the divisor class number.

from weilzeta import (
    CurveSpec,
    count_points,
    curve_class_number,
    special_value_s0,
    verify_ff,
    zeta_curve,
)
from weilzeta.ff_zeta import expected_counts

# An elliptic curve over F_5.  Counting points over F_5 and F_25 by
# brute force is instant; the interesting part is that N_1 alone pins
# down the whole zeta function.

curve = CurveSpec(5, (0, -1, 0, 1))  # y^2 = x^3 - x
print("curve:", curve, "genus", curve.genus)
print("N_1..N_4:", [count_points(curve, m) for m in range(1, 5)])

zeta = zeta_curve(curve)
(p_coeffs,) = zeta.numerator_factors
print("P(t) coefficients:", p_coeffs)
print("counts reproduced from Z(t):", expected_counts(zeta, 4))
print("class number P(1):", curve_class_number(zeta))

sv = special_value_s0(zeta)
print("ord at s=0:", sv.ord, " zeta*(0) =", sv.mantissa, "* ln(5)^", sv.log_exponent)
print("|c| (q-1) =", abs(sv.mantissa) * 4, " (must equal P(1))")

# A genus 2 curve.  Here two counts are needed and the functional
# equation fills in the top half of P.  verify_ff bundles all checks.

quintic = CurveSpec(7, (1, 2, 0, 0, 0, 1))  # y^2 = x^5 + 2x + 1
result = verify_ff(quintic)
print("\ncurve:", result.variety)
for name, ok in result.checks:
    print(f"  {'ok ' if ok else 'BAD'} {name}")
print("verified:", result.ok)

# The same machinery scales over a panel of curves; every check is an
# exact integer identity, so there is nothing to tune.

print("\n  p  f (ascending coeffs)      genus  P(1)  ok")
for p in (3, 5, 7, 11):
    for f in ((2, 1, 0, 1), (1, 0, 1, 0, 0, 1)):
        try:
            c = CurveSpec(p, f)
        except ValueError:
            continue
        r = verify_ff(c)
        print(f"{p:>3}  {str(c.f):<24} {c.genus:>4} "
              f"{curve_class_number(r.zeta):>6}  {r.ok}")
