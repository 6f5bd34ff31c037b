from fractions import Fraction

from pydantic import BaseModel, Field, field_serializer


class WreathElementDTO(BaseModel):
    """
    External representation of (sigma, a): 1-based images of sigma and phase exponents.
    """

    n: int = Field(..., ge=1)
    m: int = Field(..., ge=1)
    sigma: list[int] = Field(...)
    a: list[int] = Field(...)


class MolienSeriesDTO(BaseModel):
    """
    Series coefficients as exact rationals, written as strings such as "1" or "3/2".
    """

    n: int
    m: int
    rep: str
    variables: int = Field(default=1)
    coefficients: list[Fraction] = Field(...)
    bigraded: list[list[Fraction]] | None = Field(default=None)

    @field_serializer("coefficients")
    def _serialize_coefficients(self, values: list[Fraction]) -> list[str]:
        return [str(value) for value in values]

    @field_serializer("bigraded")
    def _serialize_bigraded(self, rows: list[list[Fraction]] | None) -> list[list[str]] | None:
        if rows is None:
            return None
        return [[str(value) for value in row] for row in rows]
