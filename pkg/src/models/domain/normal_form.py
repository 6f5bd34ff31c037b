from dataclasses import dataclass, field

import numpy as np

from src.models.domain.quiver import GaugeElement
from src.models.dto.matrices import scalars_to_pairs
from src.models.dto.normal_form import CanonicalLDTO, CanonicalPairDTO, Z1NormalFormDTO


@dataclass(frozen=True, slots=True)
class CanonicalL:
    """
    Canonical point of L_n in the orbit of a generic point, and the gauge that reaches it.
    """

    z: np.ndarray
    witness: GaugeElement
    warnings: tuple[str, ...] = field(default=())

    def to_dto(self) -> CanonicalLDTO:
        return CanonicalLDTO(z=scalars_to_pairs(self.z), witness=self.witness.to_dto(), warnings=list(self.warnings))


@dataclass(frozen=True, slots=True)
class Z1NormalForm:
    """
    Common x-value ``d`` and common y-value ``e`` of the normal form of a point of Z_1.
    """

    d: complex
    e: complex

    def to_dto(self) -> Z1NormalFormDTO:
        return Z1NormalFormDTO(d=(self.d.real, self.d.imag), e=(self.e.real, self.e.imag))


@dataclass(frozen=True, slots=True)
class CanonicalPair:
    """
    Canonical (z, z') for a point of the saturation of L_n x L_n.
    """

    z: np.ndarray
    zp: np.ndarray

    def distance(self, other: "CanonicalPair") -> float:
        return float(max(np.max(np.abs(self.z - other.z)), np.max(np.abs(self.zp - other.zp))))

    def to_dto(self) -> CanonicalPairDTO:
        return CanonicalPairDTO(z=scalars_to_pairs(self.z), zp=scalars_to_pairs(self.zp))
