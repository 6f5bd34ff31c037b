from pydantic import BaseModel, Field


class GenerationReportDTO(BaseModel):
    """
    Outcome of comparing the span of generator products with the invariant dimension.
    """

    rep: str = Field(...)
    n: int
    m: int
    d: int
    R: int
    molien_dim: int
    span_dim: int
    verdict: bool
    minimal_r: int | None = Field(default=None)


class JacobianReportDTO(BaseModel):
    """
    Jacobian-to-formula ratio statistics, plus the exact constant when computed.
    """

    n: int
    m: int
    trials: int
    constant_estimate: tuple[float, float]
    relative_spread: float
    exact_constant: str | None = Field(default=None)
    exact_verdict: bool | None = Field(default=None)


class VanishingReportDTO(BaseModel):
    """
    Outcome of matching the Jacobian's zero locus with the non-generic locus.
    """

    n: int
    m: int
    checked: int
    inconsistent: list[str] = Field(default_factory=list)
    verdict: bool
