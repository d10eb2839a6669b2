"""Structured pass/fail reports for the verification operations."""

from __future__ import annotations


class Check:
    """One named check with an optional counterexample description."""

    def __init__(self, name: str, passed: bool, detail: str | None = None):
        self.name = name
        self.passed = bool(passed)
        self.detail = detail

    def __repr__(self):
        status = "PASS" if self.passed else "FAIL"
        tail = f" ({self.detail})" if self.detail else ""
        return f"{status} {self.name}{tail}"


class VerificationReport:
    """An ordered list of checks; passes iff every check passes.

    Failures are data, not exceptions: callers inspect `.passed` or
    `.failures` and decide what to do.
    """

    def __init__(self, title: str = ""):
        self.title = title
        self.checks: list[Check] = []

    def add(self, name: str, passed: bool, detail: str | None = None) -> bool:
        self.checks.append(Check(name, passed, detail))
        return passed

    def merge(self, other: "VerificationReport", prefix: str = ""):
        for c in other.checks:
            self.add(prefix + c.name, c.passed, c.detail)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def first_failure(self) -> Check | None:
        return self.failures[0] if self.failures else None

    def __str__(self):
        head = self.title or "report"
        lines = [f"{head}: {'PASS' if self.passed else 'FAIL'}"]
        lines += [f"  {c!r}" for c in self.checks]
        return "\n".join(lines)

    __repr__ = __str__
