from pydantic import BaseModel, Field, model_validator

from src.models.dto.matrices import MatrixDTO


class RepPointDTO(BaseModel):
    """
    External representation of a point of R_n (``y`` absent) or of T*R_n.
    """

    m: int = Field(..., ge=1)
    n: int = Field(..., ge=1)
    x: list[MatrixDTO] = Field(...)
    y: list[MatrixDTO] | None = Field(default=None)

    @model_validator(mode="after")
    def _check_components(self) -> "RepPointDTO":
        for name, matrices in (("x", self.x), ("y", self.y)):
            if matrices is None:
                continue
            if len(matrices) != self.m:
                raise ValueError(f"Expected {self.m} {name}-matrices, got {len(matrices)}.")
            if any(matrix.n != self.n for matrix in matrices):
                raise ValueError(f"All {name}-matrices must be {self.n}x{self.n}.")
        return self

    @property
    def is_double(self) -> bool:
        return self.y is not None
