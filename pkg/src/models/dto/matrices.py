import numpy as np
from pydantic import BaseModel, Field, model_validator


class MatrixDTO(BaseModel):
    """
    Row-major complex matrix: ``entries`` holds n² [re, im] pairs.
    """

    n: int = Field(..., ge=1)
    entries: list[tuple[float, float]] = Field(...)

    @model_validator(mode="after")
    def _check_entry_count(self) -> "MatrixDTO":
        if len(self.entries) != self.n * self.n:
            raise ValueError(f"Expected {self.n * self.n} entries, got {len(self.entries)}.")
        return self

    @classmethod
    def from_array(cls, matrix: np.ndarray) -> "MatrixDTO":
        flat = np.asarray(matrix, dtype=np.complex128).reshape(-1)
        return cls(n=matrix.shape[0], entries=[(float(value.real), float(value.imag)) for value in flat])

    def to_array(self) -> np.ndarray:
        values = np.array([complex(re, im) for re, im in self.entries], dtype=np.complex128)
        return values.reshape(self.n, self.n)


def scalars_to_pairs(values: np.ndarray) -> list[tuple[float, float]]:
    return [(float(value.real), float(value.imag)) for value in np.asarray(values, dtype=np.complex128)]
