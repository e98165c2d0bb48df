"""Structured validation reports shared by every checker and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    passed: bool
    witness: object = None

    def to_json(self):
        out = {"name": self.name, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = _plain(self.witness)
        return out


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, name, passed, witness=None):
        self.checks.append(Check(name, bool(passed), witness))
        return passed

    def note(self, text):
        self.notes.append(text)

    def extend(self, other, prefix=""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.witness))
        self.notes.extend(other.notes)

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_json(self):
        return {
            "title": self.title,
            "verdict": "pass" if self.ok else "fail",
            "checks": [c.to_json() for c in self.checks],
            "notes": list(self.notes),
        }


def _plain(x):
    """Coerce witnesses into JSON-friendly values."""
    from fractions import Fraction

    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return repr(x)
