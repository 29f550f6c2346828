"""Pass/fail reports produced by the axiom and property suites.

Failures are data, not exceptions: every law yields a LawResult with an
optional witness so callers (tests, the CLI `check` command) can render
one line per law and pick an exit code.
"""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class LawResult:
    law: str
    passed: bool
    witness: str = ""

    def line(self) -> str:
        if self.passed:
            return f"PASS  {self.law}"
        return f"FAIL  {self.law}: {self.witness}"


@dataclass
class CheckReport:
    subject: str
    results: list = field(default_factory=list)

    def record(self, law: str, passed: bool, witness: str = "") -> None:
        self.results.append(LawResult(law, passed, witness))

    def check(self, law: str, condition: bool, witness: str = "") -> None:
        self.record(law, bool(condition), "" if condition else witness)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list:
        return [r for r in self.results if not r.passed]

    def lines(self) -> list:
        return [f"== {self.subject}"] + [r.line() for r in self.results]

    def merged(self, other: "CheckReport") -> "CheckReport":
        out = CheckReport(self.subject)
        out.results = list(self.results) + list(other.results)
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines())
