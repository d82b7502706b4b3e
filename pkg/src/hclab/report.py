"""Line-oriented report records and their JSON/CSV serialization.

Both formats round-trip losslessly: achieved_valuation serializes as an
integer or the string "inf", params as a JSON object (embedded as a quoted
JSON string in CSV cells), lhs as "num/den".
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction

FIELDS = (
    "theorem_id",
    "p",
    "params",
    "status",
    "required_exponent",
    "achieved_valuation",
    "tier",
    "pass",
    "lhs",
    "elapsed_ms",
)


@dataclass(frozen=True)
class ReportRecord:
    theorem_id: str
    p: int
    params: dict
    status: str = "ok"  # "ok" or "skipped-hypothesis"
    required_exponent: int | None = None
    achieved_valuation: int | float | None = None
    tier: int | None = None
    passed: bool | None = None
    lhs: str | None = None
    elapsed_ms: float | None = None

    @staticmethod
    def from_verdict(verdict, elapsed_ms: float) -> "ReportRecord":
        return ReportRecord(
            theorem_id=verdict.case.theorem_id,
            p=verdict.case.p,
            params=dict(verdict.case.params),
            status="ok",
            required_exponent=verdict.required_exponent,
            achieved_valuation=verdict.achieved_valuation,
            tier=verdict.tier,
            passed=verdict.passed,
            lhs=f"{verdict.lhs.numerator}/{verdict.lhs.denominator}",
            elapsed_ms=round(elapsed_ms, 3),
        )

    @staticmethod
    def skipped(theorem_id: str, p: int, params: dict, reason: str) -> "ReportRecord":
        return ReportRecord(
            theorem_id=theorem_id, p=p, params=params, status="skipped-hypothesis"
        )

    def sort_key(self):
        return (self.theorem_id, self.p, tuple(sorted(self.params.items())))

    def to_dict(self) -> dict:
        val = self.achieved_valuation
        if val is not None and math.isinf(val):
            val = "inf"
        return {
            "theorem_id": self.theorem_id,
            "p": self.p,
            "params": self.params,
            "status": self.status,
            "required_exponent": self.required_exponent,
            "achieved_valuation": val,
            "tier": self.tier,
            "pass": self.passed,
            "lhs": self.lhs,
            "elapsed_ms": self.elapsed_ms,
        }

    @staticmethod
    def from_dict(d: dict) -> "ReportRecord":
        val = d["achieved_valuation"]
        if val == "inf":
            val = math.inf
        return ReportRecord(
            theorem_id=d["theorem_id"],
            p=d["p"],
            params=d["params"],
            status=d["status"],
            required_exponent=d["required_exponent"],
            achieved_valuation=val,
            tier=d["tier"],
            passed=d["pass"],
            lhs=d["lhs"],
            elapsed_ms=d["elapsed_ms"],
        )

    def lhs_fraction(self) -> Fraction:
        num, den = self.lhs.split("/")
        return Fraction(int(num), int(den))


def emit(records, fmt: str) -> str:
    """Serialize records: JSON lines or CSV with a header row."""
    if fmt == "json":
        return "".join(json.dumps(r.to_dict()) + "\n" for r in records)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, quoting=csv.QUOTE_ALL, lineterminator="\n")
        writer.writerow(FIELDS)
        for r in records:
            d = r.to_dict()
            row = []
            for f in FIELDS:
                v = d[f]
                if f == "params":
                    v = json.dumps(v, sort_keys=True)
                elif v is None:
                    v = ""
                elif isinstance(v, bool):
                    v = str(v).lower()
                row.append(v)
            writer.writerow(row)
        return buf.getvalue()
    raise ValueError(f"unknown format {fmt!r}")


def parse(text: str, fmt: str) -> list[ReportRecord]:
    """Inverse of emit."""
    if fmt == "json":
        return [ReportRecord.from_dict(json.loads(line)) for line in text.splitlines()]
    if fmt == "csv":
        rows = list(csv.reader(io.StringIO(text)))
        out = []
        for row in rows[1:]:
            d = dict(zip(rows[0], row))
            out.append(
                ReportRecord(
                    theorem_id=d["theorem_id"],
                    p=int(d["p"]),
                    params=json.loads(d["params"]),
                    status=d["status"],
                    required_exponent=int(d["required_exponent"])
                    if d["required_exponent"]
                    else None,
                    achieved_valuation=(
                        math.inf
                        if d["achieved_valuation"] == "inf"
                        else int(d["achieved_valuation"])
                        if d["achieved_valuation"]
                        else None
                    ),
                    tier=int(d["tier"]) if d["tier"] else None,
                    passed={"true": True, "false": False, "": None}[d["pass"]],
                    lhs=d["lhs"] or None,
                    elapsed_ms=float(d["elapsed_ms"]) if d["elapsed_ms"] else None,
                )
            )
        return out
    raise ValueError(f"unknown format {fmt!r}")
