"""Certificate records and their JSON / CSV encodings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

SCHEMA = 1

STRATEGIES = (
    "k1-odd",
    "k1-div4",
    "k1-div4plus2",
    "p+b",
    "b+p",
    "oddG",
    "beta-family",
    "alphabeta",
    "r0-printed",
    "minimal",
)


def encode(value: Any) -> Any:
    """JSON-safe form: fractions become ``"p/q"`` strings, integral ones plain ints."""
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    return value


def decode_rational(value) -> Fraction | None:
    if value is None:
        return None
    return Fraction(value)


@dataclass
class Condition:
    name: str
    lhs: Any
    rhs: Any
    relation: str = "=="

    def holds(self) -> bool:
        if self.relation == "==":
            return self.lhs == self.rhs
        if self.relation == ">=":
            return self.lhs >= self.rhs
        if self.relation == "divides":
            return self.rhs % self.lhs == 0
        if self.relation == "integral":
            return Fraction(self.lhs).denominator == 1
        if self.relation == "certified":
            # rhs names the rule or sub-certificate; the solver only records ones it checked
            return self.rhs is not None
        raise ValueError(f"unknown relation {self.relation!r}")

    def to_json(self) -> dict:
        return {"name": self.name, "lhs": encode(self.lhs), "rhs": encode(self.rhs), "relation": self.relation}


@dataclass(frozen=True)
class DegreeFamily:
    base: int
    step: int
    r_max: int

    def degrees(self) -> list[int]:
        return [self.base + r * self.step for r in range(self.r_max + 1)]

    def to_json(self) -> dict:
        return {"base": self.base, "step": self.step, "r_max": self.r_max}


@dataclass(frozen=True)
class LiftParameters:
    e: tuple[int, ...]
    e_plus: int | None = None
    d: int | None = None
    m: int | None = None

    def to_json(self) -> dict:
        out = {"e": list(self.e), "e_plus": self.e_plus}
        if self.d is not None:
            out["d"] = self.d
            out["m"] = self.m
        return out


@dataclass
class BalancedCertificate:
    k: int
    n: int
    strategy: str
    lift: LiftParameters
    conditions: list[Condition]
    slopes: dict[str, Any] = field(default_factory=dict)
    degree: int | None = None
    family: DegreeFamily | None = None
    partition: tuple[int, ...] | None = None
    cycle: tuple[int, int] | None = None
    reading: str | None = None
    flags: list[str] = field(default_factory=list)
    sub_certificates: list["BalancedCertificate"] = field(default_factory=list)

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}")
        failed = [c.name for c in self.conditions if not c.holds()]
        if failed:
            raise ValueError(f"certificate conditions fail: {failed}")

    def degrees(self) -> list[int]:
        if self.family is not None:
            return self.family.degrees()
        return [self.degree]

    def sort_key(self):
        return (
            self.k,
            self.n,
            self.strategy,
            self.reading or "",
            self.partition or (),
            self.cycle or (),
            self.lift.e,
            self.lift.e_plus or 0,
            self.degree or 0,
        )

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "strategy": self.strategy,
            "reading": self.reading,
            "partition": list(self.partition) if self.partition is not None else None,
            "cycle": {"alpha": self.cycle[0], "beta": self.cycle[1]} if self.cycle else None,
            "lift": self.lift.to_json(),
            "slopes": encode(self.slopes),
            "conditions": [c.to_json() for c in self.conditions],
            "degree": self.degree,
            "family": self.family.to_json() if self.family else None,
            "flags": list(self.flags),
            "sub_certificates": [c.to_json() for c in self.sub_certificates],
        }


CSV_FIELDS = (
    "k",
    "n",
    "strategy",
    "reading",
    "partition",
    "cycle",
    "lift",
    "slopes",
    "conditions",
    "degree",
    "family",
    "flags",
    "sub_certificates",
)


def certificates_to_csv(records: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow({key: json.dumps(rec[key], sort_keys=True) for key in CSV_FIELDS})
    return buf.getvalue()


def certificates_from_csv(text: str) -> list[dict]:
    return [{key: json.loads(row[key]) for key in CSV_FIELDS} for row in csv.DictReader(io.StringIO(text))]
