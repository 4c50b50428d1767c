"""Structured pass/fail reports for verification operations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .errors import VerificationFailure


@dataclass(frozen=True)
class Mismatch:
    """First-failure witness: where two computations disagree and their values."""

    location: str
    expected: str
    actual: str


@dataclass
class CheckReport:
    """Outcome of one verification check."""

    name: str
    passed: bool
    witness: Mismatch | None = None
    notes: dict[str, Any] = field(default_factory=dict)
    failure: type[VerificationFailure] = VerificationFailure

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        text = f"{self.name}: {status}"
        if self.witness is not None:
            w = self.witness
            text += f" at {w.location} (expected {w.expected}, got {w.actual})"
        return text

    def require(self) -> CheckReport:
        """Return self if passed, raise the report's failure type otherwise."""
        if not self.passed:
            raise self.failure(self)
        return self

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "witness": None
            if self.witness is None
            else {
                "location": self.witness.location,
                "expected": self.witness.expected,
                "actual": self.witness.actual,
            },
            "notes": {k: _plain(v) for k, v in sorted(self.notes.items())},
        }


def _plain(value: Any) -> Any:
    """Make note values JSON-friendly (polynomials become strings)."""
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return str(value)


def passed(name: str, **notes: Any) -> CheckReport:
    return CheckReport(name=name, passed=True, notes=dict(notes))


def failed(name: str, location: str, expected: object, actual: object, **notes: Any) -> CheckReport:
    return CheckReport(
        name=name,
        passed=False,
        witness=Mismatch(location=location, expected=str(expected), actual=str(actual)),
        notes=dict(notes),
    )


def compare_sequences(
    name: str,
    expected: list[Any] | tuple[Any, ...],
    actual: list[Any] | tuple[Any, ...],
    label: str = "degree",
    offset: int = 0,
    **notes: Any,
) -> CheckReport:
    """Compare two equal-length sequences, reporting the first differing index."""
    if len(expected) != len(actual):
        return failed(name, "length", len(expected), len(actual), **notes)
    for i, (e, a) in enumerate(zip(expected, actual)):
        if e != a:
            return failed(name, f"{label} {i + offset}", e, a, **notes)
    return passed(name, **notes)
