"""Weil-etale cohomology tables for the proven verification cases.

Number rings: H^0 = Z, H^1 = 0, H^2 an extension of Hom(units, Z) by the
dual of the class group, H^3 the dual of the roots of unity.  The
compact-support variant differs only in low degrees, through the long
exact sequence against the archimedean fiber Z^(r1+r2) with the diagonal
map in degree 0.

Projective spaces over a number ring extend the same pattern with
K-theory of the base (2-torsion neglected throughout); K-group torsion is
not computed here and stays explicitly "unknown" unless supplied.

Projective spaces over F_q get the table whose Euler characteristics
reproduce the exact zeta special value (the zeta side is the oracle).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .fgab import FgAb, GradedTable, Z, extend
from .lfunc import SpecialValue
from .motivic_rank import borel_dim
from .number_field import NumberFieldInvariants

MOD2_CAVEAT = "mod 2-torsion"
UNKNOWN_TORSION_CAVEAT = "k-torsion unknown"


@dataclass(frozen=True)
class ThetaComplexReport:
    """Real-coefficient complex (H^*_{W,c} tensor R, cup theta)."""

    degrees: tuple  # ((i, dim_i), ...)
    acyclic: bool
    determinant_factor: float

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * d for i, d in self.degrees)


def numberring_table(inv: NumberFieldInvariants) -> GradedTable:
    """H^i_W(Spec O_F bar, Z): Z, 0, extension of Hom(O_F^x, Z) by
    Cl(F)^D, mu_F^D."""
    h2 = extend(FgAb(0, inv.h), FgAb(inv.unit_rank, 1))
    return GradedTable({0: Z, 2: h2, 3: FgAb(0, inv.w)}, dim=1)


def numberring_compact_table(inv: NumberFieldInvariants) -> GradedTable:
    """Compact-support table from the long exact sequence against
    R Gamma(X_infty) = Z^(r1+r2) in degree 0: the diagonal Z -> Z^(r1+r2)
    is injective with free cokernel of rank r1+r2-1."""
    h2 = extend(FgAb(0, inv.h), FgAb(inv.unit_rank, 1))
    return GradedTable(
        {1: FgAb(inv.unit_rank, 1), 2: h2, 3: FgAb(0, inv.w)}, dim=1
    )


def numberring_special_value(inv: NumberFieldInvariants) -> SpecialValue:
    """Cohomological prediction: ord = r1+r2-1 and zeta_F^*(0) = -hR/w."""
    return SpecialValue(ord=inv.unit_rank, value=-inv.h * inv.R / inv.w)


def theta_acyclicity(inv: NumberFieldInvariants) -> ThetaComplexReport:
    """The theta-complex of a number ring is the identity map between two
    copies of R^(r1+r2-1); its determinant carries the regulator."""
    u = inv.unit_rank
    return ThetaComplexReport(
        degrees=((1, u), (2, u)),
        acyclic=True,
        determinant_factor=inv.R if u > 0 else 1.0,
    )


def pn_of_table(
    inv: NumberFieldInvariants, n: int, k_torsion: dict | None = None
) -> GradedTable:
    """H^i_W table of P^n over O_F, 2-torsion neglected.

    Degree 2j+2 is an extension of Hom(K_{2j+1}(O_F), Z) by the dual of
    the K_{2j}-torsion; degree 2j+3 is the dual of the K_{2j+1}-torsion.
    ``k_torsion`` maps K-group index m to its (torsion) order: m = 2j for
    |K_{2j}| and m = 2j+1 for |K_{2j+1,tors}|, for 1 <= j <= n.  The j=0
    orders are the class number and root-of-unity count from ``inv``.
    Missing orders are flagged unknown rather than silently 1.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    k_torsion = dict(k_torsion or {})
    bad = [m for m in k_torsion if not 2 <= m <= 2 * n + 1]
    if bad:
        raise ValueError(f"k-torsion indices out of range for n={n}: {bad}")
    k_torsion[0] = inv.h
    k_torsion[1] = inv.w

    entries = {0: Z}
    for j in range(n + 1):
        even = k_torsion.get(2 * j)
        odd = k_torsion.get(2 * j + 1)
        sub = FgAb(0, even, None, True) if even else FgAb(0, 1, None, False)
        entries[2 * j + 2] = extend(sub, FgAb(borel_dim(inv, j + 1), 1))
        entries[2 * j + 3] = (
            FgAb(0, odd, None, True) if odd else FgAb(0, 1, None, False)
        )
    table = GradedTable(entries, dim=n + 1, caveats=(MOD2_CAVEAT,))
    if table.has_unknown_torsion():
        table.caveats = (MOD2_CAVEAT, UNKNOWN_TORSION_CAVEAT)
    return table


def pn_fq_table(q: int, n: int) -> GradedTable:
    """H^i_W table of P^n over F_q (compact support = plain in char p):
    Z in degrees 0 and 1, torsion of order q^j - 1 in degree 2j+1 for
    1 <= j <= n.  Verified against the exact zeta side."""
    if q < 2:
        raise ValueError("q must be a prime power >= 2")
    if n < 0:
        raise ValueError("n must be >= 0")
    entries = {0: Z, 1: Z}
    for j in range(1, n + 1):
        entries[2 * j + 1] = FgAb(0, q**j - 1)
    return GradedTable(entries, dim=n)
