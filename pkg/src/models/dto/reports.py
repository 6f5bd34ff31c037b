from typing import Any

from pydantic import BaseModel, Field, model_validator


class RunConfigDTO(BaseModel):
    """
    Validated run configuration shared by every subcommand.
    """

    n: int = Field(..., ge=1)
    m: int = Field(..., ge=1)
    trials: int = Field(..., ge=1)
    seed: int = Field(..., ge=0, lt=2 ** 64)
    tol: float = Field(..., gt=0)
    max_degree: int = Field(..., ge=0)
    output: str | None = Field(default=None)


class CheckRecordDTO(BaseModel):
    """
    One named check: its residual or verdict, the tolerance margin and the outcome.

    A skipped check ran into a size cap; it counts as passed and says why in ``detail``.
    """

    name: str
    passed: bool
    residual: float | None = Field(default=None)
    margin: float | None = Field(default=None)
    verdict: bool | None = Field(default=None)
    detail: str | None = Field(default=None)
    skipped: bool = Field(default=False)


class ReportDTO(BaseModel):
    """
    Report of a verification run; ``passed`` holds iff every record passed.
    """

    command: str
    config: RunConfigDTO
    records: list[CheckRecordDTO] = Field(default_factory=list)
    passed: bool = Field(default=True)
    wall_time: float | None = Field(default=None)
    payload: dict[str, Any] | None = Field(default=None)

    @model_validator(mode="after")
    def _sync_pass_flag(self) -> "ReportDTO":
        self.passed = all(record.passed for record in self.records)
        return self
