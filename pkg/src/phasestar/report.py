"""Structured pass/fail reports for identity verification.

Verification functions return reports instead of asserting, so callers (the
CLI, tests, library users) decide how to react.  A report keeps the ordered
list of checked identities with both sides rendered.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    lhs: str
    rhs: str
    passed: bool


@dataclass
class Report:
    title: str
    checks: list[IdentityCheck] = field(default_factory=list)
    summary: dict[str, str] = field(default_factory=dict)

    def add(self, name: str, lhs, rhs) -> bool:
        """Record the comparison of two already-computed values."""
        passed = lhs == rhs
        self.checks.append(
            IdentityCheck(name=name, lhs=repr(lhs), rhs=repr(rhs), passed=passed)
        )
        return passed

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> IdentityCheck | None:
        return next((c for c in self.checks if not c.passed), None)

    def extend(self, other: "Report") -> "Report":
        self.checks.extend(other.checks)
        return self

    def identities_json(self) -> list[dict]:
        return [
            {"name": c.name, "pass": c.passed, "lhs": c.lhs, "rhs": c.rhs}
            for c in self.checks
        ]

    def to_text(self) -> str:
        lines = [self.title]
        for key, value in self.summary.items():
            lines.append(f"  {key} = {value}")
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"  [{status}] {c.name}")
            if not c.passed:
                lines.append(f"         lhs: {c.lhs}")
                lines.append(f"         rhs: {c.rhs}")
        verdict = "all identities pass" if self.all_passed else "identity failures present"
        lines.append(f"  => {verdict}")
        return "\n".join(lines)
