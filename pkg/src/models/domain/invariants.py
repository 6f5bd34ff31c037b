from dataclasses import dataclass

from src.core.exceptions import InvalidInputError, PathClosureError
from src.models.dto.invariants import CharPolyDescriptorDTO, TraceWordDescriptorDTO


@dataclass(frozen=True, slots=True)
class CharPolyInvariant:
    """
    The coefficient of t^(n-k) in det(t·I - x_m...x_1).
    """

    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise InvalidInputError(f"Characteristic polynomial index must be >= 1, got {self.k}.")

    def to_dto(self) -> CharPolyDescriptorDTO:
        return CharPolyDescriptorDTO(k=self.k)


@dataclass(frozen=True, slots=True)
class TraceWord:
    """
    Closed path at the first vertex with ``r`` x-steps followed by ``s`` y-steps.
    """

    r: int
    s: int
    m: int

    def __post_init__(self) -> None:
        if self.r < 0 or self.s < 0 or self.r + self.s < 1 or self.m < 1:
            raise InvalidInputError(f"Trace word needs r, s >= 0, r + s >= 1 and m >= 1, got {self}.")
        if (self.r - self.s) % self.m:
            raise PathClosureError(f"r={self.r} and s={self.s} differ by a non-multiple of m={self.m}.")

    @property
    def degree(self) -> int:
        return self.r + self.s

    @property
    def j(self) -> int:
        return self.r % self.m

    def to_dto(self) -> TraceWordDescriptorDTO:
        return TraceWordDescriptorDTO(r=self.r, s=self.s)


@dataclass(frozen=True, slots=True)
class Arrow:
    """
    One arrow of the doubled cyclic quiver; ``index`` is 0-based.

    x_i runs from vertex i to i+1, y_i from vertex i+1 to i.
    """

    kind: str
    index: int

    def tail(self, m: int) -> int:
        return self.index if self.kind == "x" else (self.index + 1) % m

    def head(self, m: int) -> int:
        return (self.index + 1) % m if self.kind == "x" else self.index
