"""Verification records and canonical JSON rendering."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable


@dataclass(frozen=True)
class Check:
    name: str
    lhs: Any
    rhs: Any
    residual: float
    tolerance: float
    passed: bool

    def as_dict(self) -> dict:
        return {"name": self.name, "residual": self.residual, "pass": self.passed}


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, lhs, rhs, tolerance: float = 0.0, *, relative: bool = False) -> Check:
        """Record one comparison.  Exact operands with zero tolerance demand equality."""
        if isinstance(lhs, (int, Fraction)) and isinstance(rhs, (int, Fraction)):
            diff = abs(Fraction(lhs) - Fraction(rhs))
            residual = float(diff)
            if relative and rhs != 0:
                residual = float(diff / abs(Fraction(rhs)))
            passed = diff == 0 if tolerance == 0 else residual <= tolerance
        else:
            a, b = float(lhs), float(rhs)
            residual = abs(a - b)
            if relative and b != 0:
                residual /= abs(b)
            passed = math.isfinite(residual) and residual <= tolerance
        check = Check(name, lhs, rhs, residual, tolerance, passed)
        self.checks.append(check)
        return check

    def record(self, name: str, ok: bool, residual: float = 0.0) -> Check:
        """Record a boolean outcome that has no numeric comparison."""
        check = Check(name, None, None, residual, 0.0, bool(ok))
        self.checks.append(check)
        return check

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def worst_residual(self) -> float:
        return max((c.residual for c in self.checks), default=0.0)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __len__(self) -> int:
        return len(self.checks)


def merge(reports: Iterable[VerificationReport]) -> VerificationReport:
    out = VerificationReport()
    for r in reports:
        out.extend(r)
    return out


def _encode(obj: Any, indent: int, level: int) -> str:
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError(f"cannot serialize non-finite float {obj!r}")
        text = format(obj, ".17g")
        # keep a float looking like a float so parsing restores the type
        return text if any(c in text for c in ".en") else text + ".0"
    if isinstance(obj, Fraction):
        return json.dumps(str(obj))
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            f"{pad}{json.dumps(str(k), ensure_ascii=False)}: {_encode(obj[k], indent, level + 1)}"
            for k in sorted(obj, key=str)
        ]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + _encode(v, indent, level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if hasattr(obj, "item"):  # numpy scalars
        return _encode(obj.item(), indent, level)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def canonical_json(obj: Any, indent: int = 2) -> str:
    """Deterministic JSON: sorted keys, floats at 17 significant digits,
    exact rationals as ``"p/q"`` strings."""
    return _encode(obj, indent, 0) + "\n"
