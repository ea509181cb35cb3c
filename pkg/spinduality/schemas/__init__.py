# Schemas package
from spinduality.schemas.report_schemas import (
    CheckResult,
    CommandName,
    OutputFormat,
    RunConfig,
    TableKind,
    VerificationReport,
    format_eps,
    make_check,
)

__all__ = [
    "CheckResult",
    "CommandName",
    "OutputFormat",
    "RunConfig",
    "TableKind",
    "VerificationReport",
    "format_eps",
    "make_check",
]
