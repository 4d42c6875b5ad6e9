"""Command reports and the two output formats.

The machine format is line-oriented ``KEY value`` text under a ``FORMAT 1``
header, closing with ``RESULT ok|fail``; it never includes wall time, so a
rerun with the same seed is byte-identical.  The text format is for humans
and honors VK_COLOR=1 for a colored verdict.
"""

import os
from dataclasses import dataclass, field


@dataclass
class Report:
    command: str
    status: str = "ok"  # ok | fail
    counts: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    payload: list = field(default_factory=list)  # pretty text lines
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status == "ok"

    def fail(self, witness: str):
        self.status = "fail"
        self.witnesses.append(witness)

    def merge_laws(self, law_report):
        """Absorb a validator's LawReport."""
        self.counts["checks"] = self.counts.get("checks", 0) + law_report.checks
        self.counts["violations"] = self.counts.get("violations", 0) + len(
            law_report.violations
        )
        for v in law_report.violations:
            self.fail(str(v))


def _color_enabled() -> bool:
    return os.environ.get("VK_COLOR", "0") == "1"


def emit(report: Report, fmt: str = "text") -> str:
    if fmt == "machine":
        lines = ["FORMAT 1", f"COMMAND {report.command}"]
        for k, v in report.counts.items():
            lines.append(f"COUNT {k} {v}")
        for line in report.payload:
            lines.append(f"DATA {line}")
        for w in report.witnesses:
            lines.append(f"WITNESS {w}")
        lines.append(f"RESULT {report.status}")
        return "\n".join(lines) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [f"command: {report.command}"]
    for k, v in report.counts.items():
        lines.append(f"{k}: {v}")
    lines.extend(report.payload)
    for w in report.witnesses:
        lines.append(f"witness: {w}")
    verdict = report.status
    if _color_enabled():
        code = "32" if report.ok else "31"
        verdict = f"\x1b[{code}m{verdict}\x1b[0m"
    lines.append(f"result: {verdict}")
    lines.append(f"time: {report.wall_time:.3f}s")
    return "\n".join(lines) + "\n"
