from dataclasses import dataclass
from fractions import Fraction

from src.models.dto.exact import GenerationReportDTO, JacobianReportDTO, VanishingReportDTO


@dataclass(frozen=True, slots=True)
class GenerationReport:
    """
    Span of generator products at one degree against the Molien dimension.
    """

    rep: str
    n: int
    m: int
    d: int
    R: int
    molien_dim: int
    span_dim: int
    minimal_r: int | None = None

    @property
    def verdict(self) -> bool:
        return self.span_dim == self.molien_dim

    def to_dto(self) -> GenerationReportDTO:
        return GenerationReportDTO(
            rep=self.rep,
            n=self.n,
            m=self.m,
            d=self.d,
            R=self.R,
            molien_dim=self.molien_dim,
            span_dim=self.span_dim,
            verdict=self.verdict,
            minimal_r=self.minimal_r,
        )


@dataclass(frozen=True, slots=True)
class JacobianReport:
    """
    Ratio of the Jacobian determinant to (z_1...z_n)^(m-1)·∏(z_i^m - z_j^m).
    """

    n: int
    m: int
    trials: int
    constant_estimate: complex
    relative_spread: float
    exact_constant: Fraction | None = None
    exact_verdict: bool | None = None

    def to_dto(self) -> JacobianReportDTO:
        return JacobianReportDTO(
            n=self.n,
            m=self.m,
            trials=self.trials,
            constant_estimate=(self.constant_estimate.real, self.constant_estimate.imag),
            relative_spread=self.relative_spread,
            exact_constant=str(self.exact_constant) if self.exact_constant is not None else None,
            exact_verdict=self.exact_verdict,
        )


@dataclass(frozen=True, slots=True)
class VanishingSample:
    label: str
    generic: bool
    vanishes: bool
    relative_jacobian: float

    @property
    def consistent(self) -> bool:
        return self.generic != self.vanishes


@dataclass(frozen=True, slots=True)
class VanishingReport:
    """
    Agreement between "Jacobian vanishes" and "point is not generic" over sampled and planted points.
    """

    n: int
    m: int
    samples: tuple[VanishingSample, ...]

    @property
    def verdict(self) -> bool:
        return all(sample.consistent for sample in self.samples)

    def to_dto(self) -> VanishingReportDTO:
        return VanishingReportDTO(
            n=self.n,
            m=self.m,
            checked=len(self.samples),
            inconsistent=[sample.label for sample in self.samples if not sample.consistent],
            verdict=self.verdict,
        )
