"""Rank side of the vanishing-order prediction for number rings and
projective spaces over them.

Motivic cohomology dimensions are table-driven via Borel's theorem:
dim H^1(O_F, Q(r)) = rank K_{2r-1}(O_F), which is r1+r2-1 for r=1, r2 for
even r, and r1+r2 for odd r >= 3.  All other degrees vanish (class groups
are finite).  Projective spaces reduce to the base ring degree by degree
through the projective bundle decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from .number_field import NumberFieldInvariants

SchemeKind = Literal["NumberRing", "PnOverNumberRing", "PnOverFq", "Curve"]


@dataclass(frozen=True)
class SchemeDescriptor:
    kind: SchemeKind
    inv: Optional[NumberFieldInvariants] = None
    n: Optional[int] = None
    q: Optional[int] = None

    @property
    def dim(self) -> int:
        if self.kind == "NumberRing":
            return 1
        if self.kind == "PnOverNumberRing":
            return self.n + 1
        if self.kind == "PnOverFq":
            return self.n
        return 1  # Curve


def borel_dim(inv: NumberFieldInvariants, r: int) -> int:
    """rank K_{2r-1}(O_F) = dim H^1(O_F, Q(r)), r >= 1 (Borel)."""
    if r < 1:
        raise ValueError("borel_dim needs r >= 1")
    if r == 1:
        return inv.r1 + inv.r2 - 1  # unit rank
    return inv.r2 if r % 2 == 0 else inv.r1 + inv.r2


def zeta_order_at(inv: NumberFieldInvariants, j: int) -> int:
    """Vanishing order of zeta_F at s = -j (j >= 0), from the functional
    equation; equals borel_dim(inv, j+1)."""
    if j < 0:
        raise ValueError("zeta_order_at needs j >= 0")
    if j == 0:
        return inv.r1 + inv.r2 - 1
    return inv.r2 if j % 2 == 1 else inv.r1 + inv.r2


def soule_rank(scheme: SchemeDescriptor) -> int:
    """Alternating sum over j of (-1)^(j+1) dim H^j(X, Q(d)), d = dim X.

    For P^n over O_F the dimensions decompose through the projective
    bundle into base-ring groups H^(j-2k)(O_F, Q(n+1-k)); only the
    degree-1 groups survive, so the sum is a sum of Borel ranks.
    """
    if scheme.kind == "NumberRing":
        return borel_dim(scheme.inv, 1)
    if scheme.kind == "PnOverNumberRing":
        return sum(borel_dim(scheme.inv, r) for r in range(1, scheme.n + 2))
    raise ValueError(f"soule_rank unsupported for kind {scheme.kind}")


def pn_of_order(inv: NumberFieldInvariants, n: int) -> int:
    """Vanishing order of zeta(P^n_{O_F}) at s=0 via the factorization
    into shifted Dedekind zeta functions: sum of zeta_order_at(inv, j)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum(zeta_order_at(inv, j) for j in range(n + 1))
