"""Check rows and report serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

__all__ = ["Check", "Report", "check", "emit_report"]

STATUSES = ("pass", "fail", "unknown")


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    expected: str
    observed: str
    paper_ref: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "expected": self.expected,
            "observed": self.observed,
            "paper_ref": self.paper_ref,
        }


def check(name: str, ok: bool | None, expected, observed, ref: str = "") -> Check:
    """Build a row; ``ok=None`` means the test was inconclusive."""
    status = "unknown" if ok is None else ("pass" if ok else "fail")
    return Check(name, status, str(expected), str(observed), ref)


@dataclass
class Report:
    target: str
    checks: list[Check] = field(default_factory=list)
    seed: int = 0
    tolerances: dict = field(default_factory=dict)

    def extend(self, rows) -> None:
        self.checks.extend(rows)

    def ok(self, allow_unknown: bool = False) -> bool:
        good = ("pass", "unknown") if allow_unknown else ("pass",)
        return all(c.status in good for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "target": self.target,
            "checks": [c.as_dict() for c in self.checks],
            "seed": self.seed,
            "tolerances": dict(self.tolerances),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        rows = [(c.name, c.status, c.expected, c.observed) for c in self.checks]
        heads = ("check", "status", "expected", "observed")
        widths = [max([len(h)] + [len(r[i]) for r in rows]) for i, h in enumerate(heads)]

        def line(r):
            cells = [r[i].ljust(widths[i]) for i in range(3)] + [r[3]]
            return "  ".join(cells).rstrip()

        out = [f"# target: {self.target}  seed: {self.seed}"]
        if self.tolerances:
            out.append("# tolerances: " + ", ".join(f"{k}={v}" for k, v in self.tolerances.items()))
        out.append(line(heads))
        out.append(line(tuple("-" * w for w in widths[:3]) + ("-" * 8,)))
        out.extend(line(r) for r in rows)
        n_pass = sum(c.passed for c in self.checks)
        out.append(f"# {n_pass}/{len(self.checks)} checks passed")
        return "\n".join(out) + "\n"


def emit_report(report: Report, format: str = "text") -> str:
    if format == "json":
        return report.to_json()
    if format == "text":
        return report.to_text()
    raise ValueError(f"unknown format {format!r}")
