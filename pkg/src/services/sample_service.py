from src.models.domain.quiver import QuiverShape
from src.models.dto.matrices import scalars_to_pairs
from src.models.dto.reports import CheckRecordDTO
from src.quiver import random_double_rep, random_rep, random_saturation_sample
from src.services.base import BaseVerificationService
from src.wreath import random_wreath_element


class SampleKind:
    REP = "rep"
    DOUBLE = "double"
    SATURATION = "saturation"
    WREATH = "wreath"

    ALL = (REP, DOUBLE, SATURATION, WREATH)


class SampleService(BaseVerificationService):
    """
    Seeded random samples as JSON: points of R_n, of T*R_n or of the saturation of L_n x L_n,
    and elements of W_n.
    """

    COMMAND = "sample"

    def __init__(self, *args, kind: str = SampleKind.SATURATION, **kwargs) -> None:
        super().__init__(*args, **kwargs)
        self._kind = kind

    def discover_checks(self) -> list[str]:
        return [self._kind]

    def run_check(self, check: str) -> list[CheckRecordDTO]:
        shape = QuiverShape(m=self.config.m, n=self.config.n)
        points = []

        for trial in range(self.config.trials):
            rng = self.rng(trial)
            if check == SampleKind.REP:
                points.append({"point": random_rep(shape, rng).to_dto().model_dump(exclude_none=True)})
            elif check == SampleKind.DOUBLE:
                points.append({"point": random_double_rep(shape, rng).to_dto().model_dump()})
            elif check == SampleKind.WREATH:
                points.append({"element": random_wreath_element(shape.n, shape.m, rng).to_dto().model_dump()})
            else:
                sample = random_saturation_sample(shape, rng)
                points.append({
                    "point": sample.point.to_dto().model_dump(),
                    "planted": {"z": scalars_to_pairs(sample.planted.z), "zp": scalars_to_pairs(sample.planted.zp)},
                })

        self.set_payload("points", points)
        return [self.verdict_record("sampled", True, detail=f"count={len(points)}")]
