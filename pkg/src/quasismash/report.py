"""Verification reports: labeled pass/fail checks with witnesses."""
from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Check:
    label: str
    passed: bool
    witness: tuple | None = None
    detail: str = ""
    info: bool = False  # informational: never affects the verdict

    def line(self):
        mark = "info" if self.info else ("ok" if self.passed else "FAIL")
        s = f"  [{mark:>4}] {self.label}"
        if self.detail:
            s += f": {self.detail}"
        if self.witness is not None and not self.passed:
            s += f"  witness={self.witness}"
        return s


@dataclass
class Report:
    subject: str
    checks: list = field(default_factory=list)
    partial: bool = False

    @property
    def ok(self):
        return all(c.passed for c in self.checks if not c.info)

    def add(self, check: Check):
        self.checks.append(check)
        return check

    def extend(self, other: "Report", prefix=""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.label, c.passed, c.witness, c.detail, c.info))
        self.partial = self.partial or other.partial
        return self

    def __getitem__(self, label):
        for c in self.checks:
            if c.label == label:
                return c
        raise KeyError(label)

    def __contains__(self, label):
        return any(c.label == label for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed and not c.info]

    def text(self):
        verdict = "PASS" if self.ok else "FAIL"
        if self.ok and self.partial:
            verdict = "PARTIAL"
        lines = [f"{self.subject}: {verdict}"]
        lines += [c.line() for c in self.checks]
        return "\n".join(lines)

    def to_dict(self):
        return {
            "subject": self.subject,
            "ok": self.ok,
            "partial": self.partial,
            "checks": [
                {"label": c.label, "passed": c.passed, "info": c.info,
                 "witness": list(c.witness) if c.witness is not None else None,
                 "detail": c.detail}
                for c in self.checks
            ],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, default=str)


def compare(label, lhs, rhs, n_inputs=0, labels=None, detail=""):
    """Exact comparison of two tensors over the same axes.

    The witness is the lexicographically first input tuple on which they
    differ (the whole index when there are no inputs), shown through
    ``labels`` (one label list per axis) when given.
    """
    if lhs.shape != rhs.shape:
        return Check(label, False, None, f"shape {lhs.shape} vs {rhs.shape}")
    if lhs.data == rhs.data:
        return Check(label, True, detail=detail)
    keys = set(lhs.data) | set(rhs.data)
    bad = sorted(k for k in keys if lhs.data.get(k, 0) != rhs.data.get(k, 0))
    k = bad[0][:n_inputs] if n_inputs else bad[0]
    return Check(label, False, _named(k, labels), detail)


def _named(k, labels):
    if labels is None:
        return tuple(k)
    return tuple(labels[i][j] if i < len(labels) else j for i, j in enumerate(k))


def all_of(label, checks, detail=""):
    """Merge sub-checks; the first failure supplies the witness."""
    for c in checks:
        if not c.passed and not c.info:
            return Check(label, False, c.witness, c.detail or detail)
    return Check(label, True, detail=detail)
