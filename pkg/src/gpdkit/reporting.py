"""Violation reports returned by the exhaustive validators.

Validators never raise on a broken law; they collect every violation with a
witness so that perturbation tests can count what was caught.
"""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    law: str
    witness: str

    def __str__(self):
        return f"{self.law}: {self.witness}"


@dataclass
class LawReport:
    """Outcome of sweeping a family of laws over a finite structure."""

    subject: str
    checks: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def count(self, n: int = 1):
        self.checks += n

    def fail(self, law: str, witness: str):
        self.violations.append(Violation(law, witness))

    def merge(self, other: "LawReport"):
        self.checks += other.checks
        self.violations.extend(other.violations)

    def summary(self) -> str:
        state = "ok" if self.ok else f"{len(self.violations)} violation(s)"
        return f"{self.subject}: {self.checks} checks, {state}"

    def __str__(self):
        lines = [self.summary()]
        lines.extend(f"  {v}" for v in self.violations[:20])
        if len(self.violations) > 20:
            lines.append(f"  ... and {len(self.violations) - 20} more")
        return "\n".join(lines)
