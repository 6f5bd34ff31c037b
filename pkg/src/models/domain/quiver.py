from dataclasses import dataclass

import numpy as np

from src.core.exceptions import InvalidInputError
from src.linalg import SquareMatrix, as_square_matrix, frobenius_norm, identity, mat_mul
from src.models.dto.matrices import MatrixDTO, scalars_to_pairs
from src.models.dto.quiver import RepPointDTO


def _freeze_vector(values) -> np.ndarray:
    vector = np.array(values, dtype=np.complex128).reshape(-1)
    if not np.all(np.isfinite(vector)):
        raise InvalidInputError("Coordinates must be finite.")
    vector.flags.writeable = False
    return vector


def _freeze_matrices(matrices, shape: "QuiverShape", name: str) -> tuple[SquareMatrix, ...]:
    frozen = tuple(as_square_matrix(matrix) for matrix in matrices)
    if len(frozen) != shape.m:
        raise InvalidInputError(f"Expected {shape.m} {name}-matrices, got {len(frozen)}.")
    if any(matrix.shape[0] != shape.n for matrix in frozen):
        raise InvalidInputError(f"All {name}-matrices must be {shape.n}x{shape.n}.")
    return frozen


@dataclass(frozen=True, slots=True)
class QuiverShape:
    """
    Cyclic quiver with ``m`` vertices and dimension ``n`` at every vertex.

    Vertices live in Z/m (0-based here); arrow x_i goes i -> i+1 and y_i goes i+1 -> i.
    """

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise InvalidInputError(f"Quiver shape needs m, n >= 1, got m={self.m}, n={self.n}.")

    def vertex(self, index: int) -> int:
        return index % self.m


@dataclass(frozen=True, slots=True)
class RepPoint:
    """
    Element (x_1, ..., x_m) of R_n = Rep(Q, nδ).
    """

    shape: QuiverShape
    x: tuple[SquareMatrix, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", _freeze_matrices(self.x, self.shape, "x"))

    @classmethod
    def from_matrices(cls, x) -> "RepPoint":
        matrices = [as_square_matrix(matrix) for matrix in x]
        if not matrices:
            raise InvalidInputError("A representation needs at least one matrix.")
        return cls(shape=QuiverShape(m=len(matrices), n=matrices[0].shape[0]), x=tuple(matrices))

    @classmethod
    def from_dto(cls, dto: RepPointDTO) -> "RepPoint":
        return cls(shape=QuiverShape(m=dto.m, n=dto.n), x=tuple(matrix.to_array() for matrix in dto.x))

    def scale(self) -> float:
        return max(frobenius_norm(matrix) for matrix in self.x)

    def to_dto(self) -> RepPointDTO:
        return RepPointDTO(
            m=self.shape.m,
            n=self.shape.n,
            x=[MatrixDTO.from_array(matrix) for matrix in self.x],
        )


@dataclass(frozen=True, slots=True)
class DoubleRepPoint:
    """
    Element (x_1, ..., x_m, y_1, ..., y_m) of T*R_n = Rep(Q̄, nδ).
    """

    shape: QuiverShape
    x: tuple[SquareMatrix, ...]
    y: tuple[SquareMatrix, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", _freeze_matrices(self.x, self.shape, "x"))
        object.__setattr__(self, "y", _freeze_matrices(self.y, self.shape, "y"))

    @classmethod
    def from_matrices(cls, x, y) -> "DoubleRepPoint":
        matrices = [as_square_matrix(matrix) for matrix in x]
        if not matrices:
            raise InvalidInputError("A representation needs at least one matrix.")
        return cls(shape=QuiverShape(m=len(matrices), n=matrices[0].shape[0]), x=tuple(matrices), y=tuple(y))

    @classmethod
    def from_dto(cls, dto: RepPointDTO) -> "DoubleRepPoint":
        if dto.y is None:
            raise InvalidInputError("Double representation needs y-matrices.")
        return cls(
            shape=QuiverShape(m=dto.m, n=dto.n),
            x=tuple(matrix.to_array() for matrix in dto.x),
            y=tuple(matrix.to_array() for matrix in dto.y),
        )

    @property
    def x_part(self) -> RepPoint:
        return RepPoint(shape=self.shape, x=self.x)

    def scale(self) -> float:
        return max(frobenius_norm(matrix) for matrix in self.x + self.y)

    def to_dto(self) -> RepPointDTO:
        return RepPointDTO(
            m=self.shape.m,
            n=self.shape.n,
            x=[MatrixDTO.from_array(matrix) for matrix in self.x],
            y=[MatrixDTO.from_array(matrix) for matrix in self.y],
        )


@dataclass(frozen=True, slots=True)
class GaugeElement:
    """
    Element (g_1, ..., g_m) of G_n = GL_n x ... x GL_n.

    Invertibility is checked when the element acts.
    """

    shape: QuiverShape
    g: tuple[SquareMatrix, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "g", _freeze_matrices(self.g, self.shape, "g"))

    @classmethod
    def identity(cls, shape: QuiverShape) -> "GaugeElement":
        return cls(shape=shape, g=tuple(identity(shape.n) for _ in range(shape.m)))

    def compose(self, other: "GaugeElement") -> "GaugeElement":
        """
        Componentwise product (self·other)_i = self_i·other_i.

        With this product act(other, act(self, p)) = act(self·other, p).

        :param other: right factor
        :return: product gauge element
        """

        if other.shape != self.shape:
            raise InvalidInputError("Gauge elements of different shapes cannot be composed.")
        return GaugeElement(shape=self.shape, g=tuple(mat_mul(a, b) for a, b in zip(self.g, other.g)))

    def to_dto(self) -> list[MatrixDTO]:
        return [MatrixDTO.from_array(matrix) for matrix in self.g]


@dataclass(frozen=True, slots=True)
class LPoint:
    """
    Point of L_n: the coordinates z of (diag(z), ..., diag(z)).
    """

    z: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "z", _freeze_vector(self.z))

    @property
    def n(self) -> int:
        return self.z.size

    def to_pairs(self) -> list[tuple[float, float]]:
        return scalars_to_pairs(self.z)


@dataclass(frozen=True, slots=True)
class LLPoint:
    """
    Point of L_n x L_n: the x-coordinates z and the y-coordinates z'.
    """

    z: np.ndarray
    zp: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "z", _freeze_vector(self.z))
        object.__setattr__(self, "zp", _freeze_vector(self.zp))
        if self.z.size != self.zp.size:
            raise InvalidInputError("z and z' must have the same length.")

    @property
    def n(self) -> int:
        return self.z.size
