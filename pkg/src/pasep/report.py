"""Small result record shared by the verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckReport:
    """Outcome of one verification: a name, a verdict, and any violations."""

    name: str
    ok: bool
    violations: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok

    def summary(self) -> str:
        head = f"{'PASS' if self.ok else 'FAIL'} {self.name}"
        if self.violations:
            head += " [" + "; ".join(self.violations[:5])
            if len(self.violations) > 5:
                head += f"; ... {len(self.violations) - 5} more"
            head += "]"
        return head


__all__ = ["CheckReport"]
