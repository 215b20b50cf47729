"""Validation report schemas."""
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

RecordStatus = Literal["match", "flagged-discrepancy", "mismatch"]


class ValidationRecord(BaseModel):
    """One recomputed quantity set against its reference."""

    model_config = ConfigDict(frozen=True)

    id: str = Field(..., description="Stable instance id; reports are sorted by it")
    graph: str
    k: int
    n: int
    quantity: str
    method: str
    value: str
    reference: str
    reference_source: str
    status: RecordStatus
    explanation: str = ""

    @model_validator(mode="after")
    def flagged_needs_explanation(self) -> "ValidationRecord":
        if self.status == "flagged-discrepancy" and not self.explanation:
            raise ValueError(f"Flagged record {self.id} carries no explanation")
        return self


class ValidationSummary(BaseModel):
    total: int
    match: int
    flagged: int
    mismatch: int


class ValidationReport(BaseModel):
    suite: Literal["tables", "oracle"]
    records: list[ValidationRecord]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def summary(self) -> ValidationSummary:
        statuses = [r.status for r in self.records]
        return ValidationSummary(
            total=len(statuses),
            match=statuses.count("match"),
            flagged=statuses.count("flagged-discrepancy"),
            mismatch=statuses.count("mismatch"),
        )

    @property
    def passed(self) -> bool:
        return self.summary.mismatch == 0
