"""Pass/fail bookkeeping shared by the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    key: str
    ok: bool
    detail: str = ""


@dataclass
class Report:
    name: str
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, key, ok, detail=""):
        self.checks.append(Check(str(key), bool(ok), str(detail)))
        return bool(ok)

    def note(self, text):
        """Informational line that does not affect ``passed``."""
        self.notes.append(str(text))

    def extend(self, other, prefix=""):
        for chk in other.checks:
            self.checks.append(Check(prefix + chk.key, chk.ok, chk.detail))
        self.notes.extend(prefix + n for n in other.notes)
        return self

    @property
    def passed(self):
        return all(c.ok for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.ok]

    def to_json(self):
        checks = sorted(self.checks, key=lambda c: c.key)
        return {
            "suite": self.name,
            "passed": self.passed,
            "total": len(checks),
            "failed": sum(1 for c in checks if not c.ok),
            "checks": [{"key": c.key, "ok": c.ok, **({"detail": c.detail} if c.detail else {})}
                       for c in checks],
            "notes": sorted(self.notes),
        }

    def summary(self):
        return "%s: %d/%d passed" % (self.name, len(self.checks) - len(self.failures),
                                     len(self.checks))
