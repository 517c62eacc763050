"""Exact algebra of finitely generated abelian groups.

Groups are recorded as (free rank, torsion order, optional invariant
factors).  Torsion of groups assembled from short exact sequences is kept
as an order only: the extension class is in general not determined, but
the order is, and orders are all the downstream formulas need.

Also provides Smith normal form over Z (arbitrary precision, no modular
shortcuts; the matrices that show up here are tiny) and the two Euler
characteristics of bounded graded tables that drive the rank side and the
torsion side of the special-value predictions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix, entries row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length does not match rows*cols")
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(e for r in rows for e in r))

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def to_rows(self):
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        a, b = self.to_rows(), other.to_rows()
        out = [
            [sum(a[i][k] * b[k][j] for k in range(self.cols)) for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return IntMatrix.from_rows(out) if self.rows else IntMatrix(0, other.cols, ())

    def determinant(self):
        """Fraction-free Bareiss elimination; exact."""
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = self.to_rows()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def diagonal(self):
        return [self[i, i] for i in range(min(self.rows, self.cols))]


def _swap_rows(a, i, j):
    a[i], a[j] = a[j], a[i]


def _swap_cols(a, i, j):
    for row in a:
        row[i], row[j] = row[j], row[i]


def smith_normal_form(M: IntMatrix):
    """Return (U, D, V) with U*M*V = D, U and V unimodular, D diagonal
    with d_1 | d_2 | ... and nonnegative diagonal entries."""
    r, c = M.rows, M.cols
    a = M.to_rows()
    u = IntMatrix.identity(r).to_rows()
    v = IntMatrix.identity(c).to_rows()

    def row_op(i, j, q):
        # row_i -= q * row_j
        for k in range(c):
            a[i][k] -= q * a[j][k]
        for k in range(r):
            u[i][k] -= q * u[j][k]

    def col_op(i, j, q):
        # col_i -= q * col_j
        for row in a:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    t = 0
    while t < min(r, c):
        # smallest nonzero pivot in the trailing submatrix
        pivot = None
        for i in range(t, r):
            for j in range(t, c):
                if a[i][j] != 0 and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != t:
            _swap_rows(a, t, pivot[0])
            _swap_rows(u, t, pivot[0])
        if pivot[1] != t:
            _swap_cols(a, t, pivot[1])
            _swap_cols(v, t, pivot[1])

        while True:
            dirty = False
            for i in range(t + 1, r):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    row_op(i, t, q)
                    if a[i][t] != 0:
                        # remainder became the smaller pivot
                        _swap_rows(a, t, i)
                        _swap_rows(u, t, i)
                        dirty = True
            for j in range(t + 1, c):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    col_op(j, t, q)
                    if a[t][j] != 0:
                        _swap_cols(a, t, j)
                        _swap_cols(v, t, j)
                        dirty = True
            if dirty:
                continue
            # enforce divisibility of the remaining block by the pivot
            offender = None
            for i in range(t + 1, r):
                for j in range(t + 1, c):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_op(t, offender, -1)  # add offending row to pivot row

        if a[t][t] < 0:
            row_op(t, t, 2)  # negate row t
        t += 1

    return (
        IntMatrix.from_rows(u) if r else IntMatrix(0, 0, ()),
        IntMatrix.from_rows(a) if r else IntMatrix(0, c, ()),
        IntMatrix.from_rows(v) if c else IntMatrix(0, 0, ()),
    )


def invariant_factors(M: IntMatrix):
    """Nontrivial invariant factors d_1 | d_2 | ... of coker(M)."""
    _, d, _ = smith_normal_form(M)
    return [x for x in d.diagonal() if x not in (0, 1)]


@dataclass(frozen=True)
class FgAb:
    """Finitely generated abelian group: Z^rank + torsion of given order.

    ``factors`` (when known) are the invariant factors of the torsion
    part.  ``torsion_known`` is False for entries whose torsion order the
    caller could not supply (reported as order 1 with a caveat).
    """

    rank: int
    torsion_order: int = 1
    factors: tuple | None = None
    torsion_known: bool = True

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be >= 0")
        if self.torsion_order < 1:
            raise ValueError("torsion order must be >= 1")
        if self.factors is not None:
            fac = tuple(int(f) for f in self.factors)
            if prod(fac) != self.torsion_order:
                raise ValueError("factors do not multiply to torsion_order")
            if any(fac[i + 1] % fac[i] for i in range(len(fac) - 1)):
                raise ValueError("factors violate divisibility chain")
            object.__setattr__(self, "factors", fac)

    @property
    def is_trivial(self):
        # an entry with unknown torsion is not known to be zero
        return self.rank == 0 and self.torsion_order == 1 and self.torsion_known

    def __str__(self):
        parts = []
        if self.rank:
            parts.append(f"Z^{self.rank}" if self.rank > 1 else "Z")
        if self.torsion_order > 1:
            if self.factors:
                parts.extend(f"Z/{f}" for f in self.factors)
            else:
                parts.append(f"(order {self.torsion_order})")
        if not self.torsion_known:
            parts.append("(torsion unknown)")
        return " + ".join(parts) if parts else "0"


ZERO = FgAb(0, 1)
Z = FgAb(1, 1)


def cokernel(M: IntMatrix) -> FgAb:
    """Z^rows / (column space of M), via Smith normal form."""
    _, d, _ = smith_normal_form(M)
    diag = d.diagonal()
    nonzero = [x for x in diag if x != 0]
    factors = tuple(x for x in nonzero if x != 1)
    return FgAb(M.rows - len(nonzero), prod(factors) if factors else 1,
                factors if factors else None)


def extend(sub: FgAb, quot: FgAb) -> FgAb:
    """Middle term of a short exact sequence 0 -> sub -> B -> quot -> 0.

    Rank and torsion order of B are forced; the invariant factors are not
    (the extension class is unknown), so no factors are attached.
    """
    return FgAb(
        sub.rank + quot.rank,
        sub.torsion_order * quot.torsion_order,
        None,
        sub.torsion_known and quot.torsion_known,
    )


@dataclass
class GradedTable:
    """Sparse degree -> FgAb table for a cohomology complex of a scheme of
    dimension ``dim``.  Absent degrees are the zero group."""

    entries: dict
    dim: int
    caveats: tuple = ()

    def __post_init__(self):
        self.entries = {int(i): g for i, g in self.entries.items() if not g.is_trivial}

    @property
    def delta(self):
        return 2 * self.dim + 2

    def __getitem__(self, i):
        return self.entries.get(i, ZERO)

    def degrees(self):
        return sorted(self.entries)

    def has_unknown_torsion(self):
        return any(not g.torsion_known for g in self.entries.values())


def rank_weighted_euler(table: GradedTable) -> int:
    """Sum of (-1)^i * i * rank over all degrees."""
    return sum((-1) ** i * i * g.rank for i, g in table.entries.items())


def torsion_euler(table: GradedTable) -> Fraction:
    """Alternating product of torsion orders, prod tors_i^((-1)^i)."""
    out = Fraction(1)
    for i, g in table.entries.items():
        out *= Fraction(g.torsion_order) ** ((-1) ** i)
    return out
