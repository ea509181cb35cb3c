"""
Pydantic schemas for run configuration and verification reports

These models describe what a command was asked to do and what it found,
and render reports in the text and records output formats.
"""

from enum import Enum
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class TableKind(str, Enum):
    """Character tables that can be generated"""

    PHI = "phi"
    PSI = "psi"


class OutputFormat(str, Enum):
    """Report output formats"""

    TEXT = "text"
    RECORDS = "records"


class CommandName(str, Enum):
    """Command-line sub-commands"""

    CHARTABLE = "chartable"
    PRESENTATION = "presentation"
    DUALITY = "duality"
    VERIFY_ALL = "verify-all"


def format_eps(eps: Optional[Sequence[int]]) -> Optional[str]:
    """Render an eigenspace label as "(0,1)"."""
    if eps is None:
        return None
    return "(" + ",".join(str(e) for e in eps) + ")"


class RunConfig(BaseModel):
    """Validated options of one command-line invocation"""

    model_config = ConfigDict(validate_assignment=True, extra="forbid")

    command: CommandName = Field(..., description="Sub-command to run")
    k: int = Field(
        ...,
        ge=0,
        description="Tensor power / algebra size; an upper limit for verify-all",
    )
    n: int = Field(
        default=1, ge=0, description="Rank of q(n); an upper limit for verify-all"
    )
    kind: TableKind = Field(default=TableKind.PHI, description="Character table kind")
    points: int = Field(
        default=3, ge=1, le=16, description="Number of prime-coordinate points"
    )
    seed: int = Field(default=20250731, description="Seed for randomized checks")
    cache_dir: Path = Field(
        default=Path(".spinduality_cache"), description="Character table cache"
    )
    output_format: OutputFormat = Field(
        default=OutputFormat.TEXT, description="Report output format"
    )
    force: bool = Field(default=False, description="Bypass the resource guard")
    fail_fast: bool = Field(default=False, description="Stop at the first failure")

    @model_validator(mode="after")
    def validate_sizes(self):
        """k >= 1 everywhere except verify-all; n >= 1 for duality"""
        if self.command is not CommandName.VERIFY_ALL and self.k < 1:
            raise ValueError(f"{self.command.value} needs k >= 1, got {self.k}")
        if self.command is CommandName.DUALITY and self.n < 1:
            raise ValueError(f"duality needs n >= 1, got {self.n}")
        return self


class CheckResult(BaseModel):
    """Outcome of one verification check"""

    model_config = ConfigDict(extra="forbid")

    name: str = Field(..., description="Check name", examples=["tau^2=1"])
    k: int = Field(..., ge=0, description="Algebra size")
    n: Optional[int] = Field(default=None, description="Rank of q(n), if any")
    eps: Optional[str] = Field(default=None, description="Eigenspace label")
    passed: bool = Field(..., description="Whether the check passed")
    detail: str = Field(default="", description="Values behind the verdict")

    def line(self) -> str:
        fields = [f"CHECK {self.name}"]
        if self.n is not None:
            fields.append(f"n={self.n}")
        fields.append(f"k={self.k}")
        if self.eps is not None:
            fields.append(f"eps={self.eps}")
        fields.append("PASS" if self.passed else "FAIL")
        if self.detail:
            fields.append(self.detail)
        return " ".join(fields)

    def sort_key(self) -> Tuple:
        return (self.k, self.n or 0, self.name, self.eps or "")


class VerificationReport(BaseModel):
    """Aggregated checks of one command"""

    model_config = ConfigDict(extra="forbid")

    command: CommandName = Field(..., description="Command that produced the report")
    seed: int = Field(..., description="Seed used by randomized checks")
    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.checks)

    @property
    def passed(self) -> int:
        return sum(1 for check in self.checks if check.passed)

    @property
    def failed(self) -> int:
        return self.total - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def extend(self, checks: Sequence[CheckResult]) -> None:
        self.checks.extend(checks)

    def sorted_checks(self) -> List[CheckResult]:
        return sorted(self.checks, key=CheckResult.sort_key)

    def summary_line(self) -> str:
        return (
            f"SUMMARY checks={self.total} passed={self.passed} failed={self.failed}"
        )

    def to_text(self) -> str:
        lines = [f"# spinduality {self.command.value} seed={self.seed}"]
        if not self.checks:
            lines.append("0 checks")
        lines.extend(check.line() for check in self.sorted_checks())
        lines.append(self.summary_line())
        return "\n".join(lines)

    def to_records(self) -> str:
        payload = {
            "command": self.command.value,
            "seed": self.seed,
            "total": self.total,
            "passed": self.passed,
            "failed": self.failed,
            "checks": [check.model_dump() for check in self.sorted_checks()],
        }
        return ReportRecords.model_validate(payload).model_dump_json(indent=2)


class ReportRecords(BaseModel):
    """Machine-readable form of a report"""

    model_config = ConfigDict(extra="forbid")

    command: str
    seed: int
    total: int
    passed: int
    failed: int
    checks: List[CheckResult]


def make_check(
    name: str,
    k: int,
    passed: bool,
    detail: str = "",
    n: Optional[int] = None,
    eps: Optional[Sequence[int]] = None,
) -> CheckResult:
    """Build a CheckResult, formatting the eigenspace label."""
    return CheckResult(
        name=name, k=k, n=n, eps=format_eps(eps), passed=bool(passed), detail=detail
    )
