from src.config import settings
from src.core.exceptions import NonDiagonalResidue
from src.models.domain.quiver import DoubleRepPoint, RepPoint
from src.models.dto.quiver import RepPointDTO
from src.models.dto.reports import CheckRecordDTO, RunConfigDTO
from src.normal_form import canonicalize_double, to_canonical_L, z1_normal_form
from src.services.base import BaseVerificationService
from src.services.chevalley_service import witness_residual
from src.utils.logger import logger


class NormalFormService(BaseVerificationService):
    """
    Normal form of a single point read from JSON.

    A point of R_n gets its canonical L_n form with witness; a double point
    gets (d, e) when n = 1 and its canonical (z, z') otherwise. A double point
    off the saturation of L_n x L_n is reported with ``on_saturation`` false.
    """

    COMMAND = "normal-form"

    def __init__(self, point: RepPointDTO, config: RunConfigDTO, include_timing: bool = True) -> None:
        super().__init__(config=config, include_timing=include_timing)
        self._point = point

    def discover_checks(self) -> list[str]:
        if not self._point.is_double:
            return ["canonical-L"]
        return ["z1-normal-form"] if self._point.n == 1 else ["canonical-pair"]

    def run_check(self, check: str) -> list[CheckRecordDTO]:
        if check == "canonical-L":
            point = RepPoint.from_dto(self._point)
            canonical = to_canonical_L(point)
            for warning in canonical.warnings:
                logger.warning(warning)
            self.set_payload("canonical_L", canonical.to_dto().model_dump())
            residual = witness_residual(point, canonical)
            return [self.bound_record("witness", residual, settings.tolerances.witness * self.tolerance_factor)]

        point = DoubleRepPoint.from_dto(self._point)
        if check == "z1-normal-form":
            self.set_payload("z1_normal_form", z1_normal_form(point).to_dto().model_dump())
            return [self.verdict_record(check, True)]

        try:
            pair = canonicalize_double(point)
        except NonDiagonalResidue as e:
            logger.warning(f"Point is not on the saturation of L_n x L_n: {e.detail}")
            self.set_payload("on_saturation", False)
            self.set_payload("canonical_pair", None)
            return [CheckRecordDTO(name=check, passed=True, verdict=False, detail=f"NonDiagonalResidue: {e.detail}")]

        self.set_payload("on_saturation", True)
        self.set_payload("canonical_pair", pair.to_dto().model_dump())
        return [self.verdict_record(check, True)]
