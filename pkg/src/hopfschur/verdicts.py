from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    """One pass/fail verdict with an optional counterexample locator."""

    name: str
    passed: bool
    counterexample: object = None
    anchor: str = ""
    detail: str = ""

    def to_json(self) -> dict:
        d = {"name": self.name, "passed": bool(self.passed)}
        if self.anchor:
            d["anchor"] = self.anchor
        if self.counterexample is not None:
            ce = self.counterexample
            d["counterexample"] = list(ce) if isinstance(ce, tuple) else ce
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class Report:
    """An ordered list of checks; passes iff every check passes."""

    checks: list = field(default_factory=list)

    def add(self, name, passed, counterexample=None, anchor="", detail="") -> Check:
        c = Check(name, bool(passed), counterexample, anchor, detail)
        self.checks.append(c)
        return c

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.counterexample, c.anchor, c.detail))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.passed

    def __getitem__(self, name) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> list:
        return [c.to_json() for c in self.checks]
