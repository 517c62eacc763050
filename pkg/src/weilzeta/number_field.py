"""Arithmetic invariants (r1, r2, h, R, w, disc) of quadratic fields.

Quadratic fields are computed from first principles: class numbers by
enumerating reduced binary quadratic forms (imaginary case) or cycles of
reduced indefinite forms (real case), the fundamental unit by the
continued-fraction expansion of the standard generator of the maximal
order.  Higher-degree fields enter only through user-supplied invariant
files; nothing here does ideal arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import gcd, isqrt


class InvariantsError(ValueError):
    """Bad input to an invariants computation or an invariants file."""


@dataclass(frozen=True)
class NumberFieldInvariants:
    r1: int
    r2: int
    h: int
    R: float
    w: int
    disc: int = 0

    def __post_init__(self):
        if self.r1 < 0 or self.r2 < 0 or self.r1 + self.r2 < 1:
            raise InvariantsError("need r1, r2 >= 0 with r1 + r2 >= 1")
        if self.h < 1:
            raise InvariantsError("class number must be >= 1")
        if self.w < 1:
            raise InvariantsError("root-of-unity count must be >= 1")
        if not (self.R > 0 and math.isfinite(self.R)):
            raise InvariantsError("regulator must be a positive finite real")

    @property
    def unit_rank(self):
        return self.r1 + self.r2 - 1


RATIONALS = NumberFieldInvariants(r1=1, r2=0, h=1, R=1.0, w=2, disc=1)


def squarefree_part(d: int) -> int:
    """Largest squarefree m with d = m * (square)."""
    if d == 0:
        raise InvariantsError("0 has no squarefree part")
    m = d
    f = 2
    while f * f <= abs(m):
        while m % (f * f) == 0:
            m //= f * f
        f += 1
    return m


def fundamental_discriminant(d: int) -> int:
    """Discriminant of Q(sqrt(d)): the squarefree part m, or 4m, whichever
    is 0 or 1 mod 4."""
    if d in (0, 1):
        raise InvariantsError(f"d={d} does not define a quadratic field")
    if d > 1 and isqrt(d) ** 2 == d:
        raise InvariantsError(f"d={d} is a perfect square")
    m = squarefree_part(d)
    return m if m % 4 == 1 else 4 * m


def is_fundamental(D: int) -> bool:
    if D == 1:
        return True  # convention for Q
    if D % 4 == 1:
        return squarefree_part(D) == D
    if D % 4 == 0:
        m = D // 4
        return squarefree_part(m) == m and m % 4 in (2, 3)
    return False


def class_number_imaginary(D: int) -> int:
    """Count reduced primitive forms (a,b,c) of discriminant D < 0."""
    if D >= 0:
        raise InvariantsError("imaginary class number needs D < 0")
    if not is_fundamental(D):
        raise InvariantsError(f"D={D} is not a fundamental discriminant")
    count = 0
    a = 1
    while 3 * a * a <= -D:  # reduced forms force a <= sqrt(|D|/3)
        for b in range(-a + 1, a + 1):
            if (b * b - D) % (4 * a):
                continue
            c = (b * b - D) // (4 * a)
            if c < a:
                continue
            if b < 0 and (abs(b) == a or a == c):
                continue
            if gcd(gcd(a, abs(b)), c) != 1:
                continue
            count += 1
        a += 1
    return count


def _floor_quad(p: int, s: int, q: int) -> int:
    # floor((p + sqrt(N)) / q) given s = isqrt(N), N not a square
    if q > 0:
        return (p + s) // q
    return -((p + s) // (-q)) - 1


def fundamental_unit_real(D: int, max_steps: int = 100_000):
    """Smallest unit (x + y*sqrt(D))/2 > 1 with x^2 - D y^2 = +-4.

    Found via the continued-fraction expansion of the standard generator
    of the maximal order (sqrt(D/4) or (1+sqrt(D))/2): the first return of
    a (P,Q) state gives the period, and the corresponding convergent
    matrix stabilizes the generator, so its bottom row is the unit.
    Returns ((x, y), regulator).
    """
    if D <= 0:
        raise InvariantsError("need D > 0")
    if not is_fundamental(D):
        raise InvariantsError(f"D={D} is not a fundamental discriminant")
    if D % 4 == 0:
        n, p0, q0 = D // 4, 0, 1
    else:
        n, p0, q0 = D, 1, 2
    s = isqrt(n)

    seen = {}
    p, q = p0, q0
    # convergent matrix M = [[p_k, p_{k-1}], [q_k, q_{k-1}]]
    m = (1, 0, 0, 1)
    mats = []
    for k in range(max_steps):
        if (p, q) in seen:
            j = seen[(p, q)]
            mj = mats[j]
            mk = m
            # A = M_{k-1} * M_{j-1}^(-1); det M_{j-1} = +-1
            det = mj[0] * mj[3] - mj[1] * mj[2]
            inv = (mj[3] * det, -mj[1] * det, -mj[2] * det, mj[0] * det)
            gamma = mk[2] * inv[0] + mk[3] * inv[2]
            delta = mk[2] * inv[1] + mk[3] * inv[3]
            if D % 4 == 0:
                x, y = abs(2 * delta), abs(gamma)
            else:
                x, y = abs(gamma + 2 * delta), abs(gamma)
            if y == 0 or x * x - D * y * y not in (4, -4):
                raise InvariantsError(f"unit search failed for D={D}")
            reg = math.log((x + y * math.sqrt(D)) / 2)
            return (x, y), reg
        seen[(p, q)] = k
        mats.append(m)
        a = _floor_quad(p, s, q)
        m = (a * m[0] + m[1], m[0], a * m[2] + m[3], m[2])
        p = a * q - p
        q = (n - p * p) // q
        if q == 0:
            raise InvariantsError("square discriminant slipped through")
    raise InvariantsError(f"period bound exceeded for D={D}")


def unit_norm(D: int) -> int:
    """Norm (+1 or -1) of the fundamental unit of the real field of
    discriminant D."""
    (x, y), _ = fundamental_unit_real(D)
    return (x * x - D * y * y) // 4


def _reduced_indefinite_forms(D: int):
    """All reduced primitive indefinite forms of discriminant D > 0:
    0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b."""
    s = isqrt(D)
    forms = []
    for b in range(1, s + 1):
        if (b * b - D) % 4:
            continue
        ac = (b * b - D) // 4  # negative
        for a_abs in range(1, abs(ac) + 1):
            if ac % a_abs:
                continue
            # sqrt(D) - b < 2|a|  <=>  D < (2|a| + b)^2  (sqrt irrational)
            if D >= (2 * a_abs + b) ** 2:
                continue
            # 2|a| < sqrt(D) + b  <=>  2|a| - b < sqrt(D)
            if 2 * a_abs - b > 0 and (2 * a_abs - b) ** 2 >= D:
                continue
            for a in (a_abs, -a_abs):
                c = ac // a
                if gcd(gcd(abs(a), b), abs(c)) == 1:
                    forms.append((a, b, c))
    return forms


def _rho(form, D: int, s: int):
    """Reduction/neighbor step on reduced indefinite forms."""
    _, b, c = form
    two_c = 2 * abs(c)
    # unique r = -b (mod 2|c|) in (sqrt(D) - 2|c|, sqrt(D)]
    r = (-b) % two_c
    r += ((s - r) // two_c) * two_c
    c2 = (r * r - D) // (4 * c)
    return (c, r, c2)


def class_number_real(D: int) -> int:
    """Class number of the real quadratic field of discriminant D > 0:
    count rho-cycles of reduced indefinite forms (the narrow class
    number), halved when the fundamental unit has norm +1."""
    if D <= 0 or not is_fundamental(D):
        raise InvariantsError(f"D={D} is not a fundamental discriminant > 0")
    s = isqrt(D)
    forms = _reduced_indefinite_forms(D)
    remaining = set(forms)
    cycles = 0
    while remaining:
        start = next(iter(remaining))
        f = start
        while True:
            remaining.discard(f)
            f = _rho(f, D, s)
            if f == start:
                break
        cycles += 1
    if unit_norm(D) == -1:
        return cycles
    if cycles % 2:
        raise InvariantsError(f"odd narrow class number with norm +1 unit, D={D}")
    return cycles // 2


def quad_invariants(D: int) -> NumberFieldInvariants:
    """Invariants of the quadratic field of fundamental discriminant D
    (D = 1 gives Q itself)."""
    if D == 1:
        return RATIONALS
    if not is_fundamental(D):
        raise InvariantsError(f"D={D} is not a fundamental discriminant")
    if D < 0:
        w = {-3: 6, -4: 4}.get(D, 2)
        return NumberFieldInvariants(
            r1=0, r2=1, h=class_number_imaginary(D), R=1.0, w=w, disc=D
        )
    _, reg = fundamental_unit_real(D)
    return NumberFieldInvariants(
        r1=2, r2=0, h=class_number_real(D), R=reg, w=2, disc=D
    )


_INT_KEYS = ("r1", "r2", "h", "w")
_REQUIRED = ("r1", "r2", "h", "R", "w")


def parse_invariants(text: str) -> NumberFieldInvariants:
    """Parse key=value invariant lines ('#' comments allowed)."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InvariantsError(f"line {lineno}: expected key=value, got {raw!r}")
        key, _, val = line.partition("=")
        key, val = key.strip(), val.strip()
        if key not in (*_REQUIRED, "disc"):
            raise InvariantsError(f"line {lineno}: unknown key {key!r}")
        try:
            values[key] = int(val) if key != "R" else float(val)
        except ValueError:
            raise InvariantsError(
                f"line {lineno}: cannot parse value for {key!r}: {val!r}"
            ) from None
    missing = [k for k in _REQUIRED if k not in values]
    if missing:
        raise InvariantsError(f"missing required key(s): {', '.join(missing)}")
    return NumberFieldInvariants(
        r1=values["r1"], r2=values["r2"], h=values["h"],
        R=values["R"], w=values["w"], disc=values.get("disc", 0),
    )


def load_invariants(path) -> NumberFieldInvariants:
    """Load NumberFieldInvariants from a key=value text file."""
    with open(path, encoding="utf-8") as fh:
        return parse_invariants(fh.read())
