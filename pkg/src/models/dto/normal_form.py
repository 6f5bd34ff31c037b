from pydantic import BaseModel, Field

from src.models.dto.matrices import MatrixDTO


class CanonicalLDTO(BaseModel):
    """
    Canonical L_n representative of a generic orbit with its conjugating gauge.
    """

    z: list[tuple[float, float]] = Field(...)
    witness: list[MatrixDTO] = Field(...)
    warnings: list[str] = Field(default_factory=list)


class Z1NormalFormDTO(BaseModel):
    """
    Normal form (d, e) of a point of Z_1.
    """

    d: tuple[float, float] = Field(...)
    e: tuple[float, float] = Field(...)


class CanonicalPairDTO(BaseModel):
    """
    Canonical (z, z') representative of a point on the saturation of L_n x L_n.
    """

    z: list[tuple[float, float]] = Field(...)
    zp: list[tuple[float, float]] = Field(...)
