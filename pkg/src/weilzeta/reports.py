"""Verification reports and their JSON wire format.

Special values mix a rational mantissa with transcendental factors
(powers of ln p per prime, and a real residual such as a regulator).
Reports keep the three parts separate and only collapse to a float for
display, so exact cases are compared exactly and never through rounded
floats.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .lfunc import SpecialValue

PASS = "PASS"
FAIL = "FAIL"
RANK_ONLY = "RANK_ONLY"
UNSUPPORTED = "UNSUPPORTED"

EXIT_CODES = {PASS: 0, RANK_ONLY: 0, FAIL: 2, UNSUPPORTED: 3}


@dataclass(frozen=True)
class SymbolicValue:
    """mantissa * prod_p (ln p)^e_p * real_factor."""

    mantissa: Fraction
    log_exponents: dict = field(default_factory=dict)
    real_factor: float = 1.0

    def numeric(self) -> float:
        out = float(self.mantissa) * self.real_factor
        for p, e in self.log_exponents.items():
            out *= math.log(p) ** e
        return out

    def __truediv__(self, other: "SymbolicValue") -> "SymbolicValue":
        exps = dict(self.log_exponents)
        for p, e in other.log_exponents.items():
            exps[p] = exps.get(p, 0) - e
        return SymbolicValue(
            self.mantissa / other.mantissa,
            {p: e for p, e in exps.items() if e},
            self.real_factor / other.real_factor,
        )

    def __eq__(self, other):
        if not isinstance(other, SymbolicValue):
            return NotImplemented
        return (
            self.mantissa == other.mantissa
            and {p: e for p, e in self.log_exponents.items() if e}
            == {p: e for p, e in other.log_exponents.items() if e}
            and self.real_factor == other.real_factor
        )

    @classmethod
    def from_special_value(cls, sv: SpecialValue) -> "SymbolicValue":
        if sv.is_exact:
            from .ff_zeta import prime_power

            p, k = prime_power(sv.log_base)
            mantissa = sv.mantissa * Fraction(k) ** sv.log_exponent
            exps = {p: sv.log_exponent} if sv.log_exponent else {}
            return cls(mantissa, exps, 1.0)
        return cls(Fraction(1), {}, sv.value)

    def to_json(self) -> dict:
        return {
            "mantissa": str(self.mantissa),
            "log_exponents": {str(p): e for p, e in self.log_exponents.items()},
            "real_factor": self.real_factor,
            "numeric": self.numeric(),
        }

    @classmethod
    def from_json(cls, obj) -> "SymbolicValue":
        return cls(
            Fraction(obj["mantissa"]),
            {int(p): e for p, e in obj["log_exponents"].items()},
            obj["real_factor"],
        )


def serialize_table(table) -> dict:
    return {
        "dim": table.dim,
        "delta": table.delta,
        "entries": {
            str(i): {
                "rank": g.rank,
                "torsion_order": str(g.torsion_order),
                "torsion_known": g.torsion_known,
            }
            for i, g in sorted(table.entries.items())
        },
        "caveats": list(table.caveats),
    }


@dataclass
class VerificationReport:
    object: str
    invariants: dict
    weil_table: dict | None
    rank_predicted: int | None
    ord_computed: int | None
    special_value_predicted: SymbolicValue | None
    special_value_computed: SymbolicValue | None
    verdict: str
    tolerances: dict = field(default_factory=dict)
    caveats: list = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.verdict]


_KEY_ORDER = (
    "object", "invariants", "weil_table", "rank_predicted", "ord_computed",
    "special_value_predicted", "special_value_computed", "verdict",
    "tolerances", "caveats",
)


def emit_report(report: VerificationReport, as_json: bool = False) -> str:
    if as_json:
        payload = {}
        for key in _KEY_ORDER:
            value = getattr(report, key)
            if isinstance(value, SymbolicValue):
                value = value.to_json()
            payload[key] = value
        return json.dumps(payload, indent=2)

    lines = [f"object:            {report.object}"]
    if report.invariants:
        inv = ", ".join(f"{k}={v}" for k, v in report.invariants.items())
        lines.append(f"invariants:        {inv}")
    if report.weil_table:
        lines.append("weil table:")
        for i, g in report.weil_table["entries"].items():
            known = "" if g["torsion_known"] else "  (torsion unknown)"
            lines.append(
                f"  H^{i}: rank {g['rank']}, torsion order {g['torsion_order']}{known}"
            )
    if report.rank_predicted is not None:
        lines.append(f"rank predicted:    {report.rank_predicted}")
    if report.ord_computed is not None:
        lines.append(f"ord computed:      {report.ord_computed}")
    for label, sv in (
        ("value predicted", report.special_value_predicted),
        ("value computed", report.special_value_computed),
    ):
        if sv is not None:
            parts = [str(sv.mantissa)]
            parts += [f"(ln {p})^{e}" for p, e in sorted(sv.log_exponents.items())]
            if sv.real_factor != 1.0:
                parts.append(f"{sv.real_factor!r}")
            lines.append(f"{label + ':':<19}{' * '.join(parts)} = {sv.numeric()!r}")
    if report.tolerances:
        tol = ", ".join(f"{k}={v}" for k, v in report.tolerances.items())
        lines.append(f"tolerances:        {tol}")
    if report.caveats:
        lines.append(f"caveats:           {'; '.join(report.caveats)}")
    lines.append(f"verdict:           {report.verdict}")
    return "\n".join(lines)


def parse_report(text: str) -> VerificationReport:
    """Inverse of emit_report(..., as_json=True)."""
    obj = json.loads(text)
    for key in ("special_value_predicted", "special_value_computed"):
        if obj.get(key) is not None:
            obj[key] = SymbolicValue.from_json(obj[key])
    return VerificationReport(**{k: obj[k] for k in _KEY_ORDER})


def load_report(path) -> VerificationReport:
    with open(path, encoding="utf-8") as fh:
        return parse_report(fh.read())
