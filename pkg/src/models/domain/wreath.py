from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from src.core.exceptions import InvalidInputError
from src.models.dto.wreath import MolienSeriesDTO, WreathElementDTO


class Representation:
    """
    Names of the two linear representations of W_n in play.
    """

    L = "L"
    LL = "LL"

    @classmethod
    def validate(cls, rep: str) -> str:
        if rep not in (cls.L, cls.LL):
            raise InvalidInputError(f"Unknown representation '{rep}', expected 'L' or 'LL'.")
        return rep


@dataclass(frozen=True, slots=True)
class WreathElement:
    """
    Element (sigma, a) of W_n = S_n ⋉ (Z/m)^n.

    ``sigma`` is stored 0-based (sigma[j] is the image of j) and ``a`` holds
    the exponents of ζ_j = ω^{a_j} with ω = exp(2πi/m).
    """

    n: int
    m: int
    sigma: tuple[int, ...]
    a: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1 or self.m < 1:
            raise InvalidInputError("Wreath element needs n, m >= 1.")
        if sorted(self.sigma) != list(range(self.n)):
            raise InvalidInputError(f"sigma={self.sigma} is not a permutation of {self.n} letters.")
        if len(self.a) != self.n:
            raise InvalidInputError(f"Expected {self.n} phase exponents, got {len(self.a)}.")
        object.__setattr__(self, "sigma", tuple(int(image) for image in self.sigma))
        object.__setattr__(self, "a", tuple(int(exponent) % self.m for exponent in self.a))

    @classmethod
    def identity(cls, n: int, m: int) -> "WreathElement":
        return cls(n=n, m=m, sigma=tuple(range(n)), a=(0,) * n)

    @classmethod
    def from_dto(cls, dto: WreathElementDTO) -> "WreathElement":
        return cls(n=dto.n, m=dto.m, sigma=tuple(image - 1 for image in dto.sigma), a=tuple(dto.a))

    def to_dto(self) -> WreathElementDTO:
        return WreathElementDTO(n=self.n, m=self.m, sigma=[image + 1 for image in self.sigma], a=list(self.a))


@dataclass(frozen=True, slots=True)
class MonomialAction:
    """
    A group element's linear action read off as a substitution.

    Coordinate j of the image is ω^{phase[j]} times coordinate ``source[j]``
    of the original; ``matrix`` is the same map as a complex matrix.
    """

    m: int
    source: tuple[int, ...]
    phase: tuple[int, ...]
    matrix: np.ndarray


@dataclass(frozen=True, slots=True)
class MolienSeries:
    """
    Hilbert series coefficients of an invariant ring, exact, up to a maximum degree.
    """

    n: int
    m: int
    rep: str
    coefficients: tuple[Fraction, ...]
    bigraded: tuple[tuple[Fraction, ...], ...] | None = None

    @property
    def variables(self) -> int:
        return 1 if self.bigraded is None else 2

    @property
    def max_degree(self) -> int:
        return len(self.coefficients) - 1

    def to_dto(self) -> MolienSeriesDTO:
        return MolienSeriesDTO(
            n=self.n,
            m=self.m,
            rep=self.rep,
            variables=self.variables,
            coefficients=list(self.coefficients),
            bigraded=[list(row) for row in self.bigraded] if self.bigraded is not None else None,
        )
