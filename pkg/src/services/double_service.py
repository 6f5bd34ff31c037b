import numpy as np

from src.config import settings
from src.core.exceptions import ChevalleyError
from src.exact import generation_check, jacobian_vanishing_check
from src.invariants import diagram_check, double_fingerprint, phi_identity_check, trace_word_panel
from src.models.domain.quiver import QuiverShape
from src.models.domain.wreath import Representation
from src.models.dto.invariants import invariant_descriptors
from src.models.dto.reports import CheckRecordDTO
from src.normal_form import branch_cut_distance, canonicalize_double, canonicalize_LL, z1_normal_form
from src.quiver import (
    act_gauge_double,
    embed_LL,
    is_generic,
    max_moment_residual,
    moment_scale,
    random_gauge,
    random_LL_point,
    random_saturation_sample,
    random_Z1_points,
    random_Z_point,
)
from src.services.base import BaseVerificationService
from src.services.chevalley_service import wreath_sample
from src.utils.logger import logger
from src.utils.seeding import derive_seed
from src.wreath import act_on_LL


class DoubleService(BaseVerificationService):
    """
    Verification suite for restriction from Z_n to L_n x L_n.
    """

    COMMAND = "verify-double"
    SKIP_TOO_LARGE = True
    RECOVERY_RATE: float = 0.99
    VANISHING_TRIALS: int = 10
    DIAGRAM_WORDS: tuple[tuple[int, int], ...] = ((2, 2), (4, 2), (3, 1), (1, 1), (2, 0))

    def __init__(self, *args, **kwargs) -> None:
        super().__init__(*args, **kwargs)
        self._shape = QuiverShape(m=self.config.m, n=self.config.n)

    def discover_checks(self) -> list[str]:
        return [
            "phi-identity",
            "moment-residual",
            "trace-invariance",
            "plant-and-recover",
            "z1-normal-form",
            "diagram",
            "generation",
            "stability",
            "jacobian-vanishing",
        ]

    def run_check(self, check: str) -> list[CheckRecordDTO]:
        handlers = {
            "phi-identity": self._phi_identity,
            "moment-residual": self._moment_residual,
            "trace-invariance": self._trace_invariance,
            "plant-and-recover": self._plant_and_recover,
            "z1-normal-form": self._z1_normal_form,
            "diagram": self._diagram,
            "generation": self._generation,
            "stability": self._stability,
            "jacobian-vanishing": self._jacobian_vanishing,
        }
        return handlers[check]()

    def _phi_identity(self) -> list[CheckRecordDTO]:
        words = trace_word_panel(self.config.m, self.config.max_degree)
        self.set_payload("trace_words", invariant_descriptors.dump_python([word.to_dto() for word in words]))
        worst = 0.0
        for trial in range(self.config.trials):
            point = random_LL_point(self.config.n, self.rng(trial))
            for word in words:
                worst = max(worst, phi_identity_check(point, self.config.m, word.r, word.s).relative)
        return [self.bound_record("phi-identity", worst, self.config.tol, detail=f"words={len(words)}")]

    def _moment_residual(self) -> list[CheckRecordDTO]:
        worst = 0.0
        for trial in range(self.config.trials):
            point = random_Z_point(self._shape, self.rng(trial))
            worst = max(worst, max_moment_residual(point) / moment_scale(point))
        return [self.bound_record("moment-residual", worst, settings.tolerances.moment * self.tolerance_factor)]

    def _trace_invariance(self) -> list[CheckRecordDTO]:
        worst = 0.0
        for trial in range(self.config.trials):
            rng = self.rng(trial)
            point = random_Z_point(self._shape, rng)
            fingerprint = double_fingerprint(point)
            moved = act_gauge_double(random_gauge(self._shape, rng), point)
            scale = max(1.0, float(np.max(np.abs(fingerprint))))
            worst = max(worst, float(np.max(np.abs(double_fingerprint(moved) - fingerprint))) / scale)
        return [self.bound_record("trace-invariance", worst, settings.tolerances.orbit * self.tolerance_factor)]

    def _plant_and_recover(self) -> list[CheckRecordDTO]:
        bound = settings.tolerances.orbit * self.tolerance_factor
        attempted, recovered, skipped, worst = 0, 0, 0, 0.0

        for trial in range(self.config.trials):
            sample = random_saturation_sample(self._shape, self.rng(trial))
            if not is_generic(sample.point.x_part).generic:
                skipped += 1
                continue

            expected = canonicalize_LL(sample.planted, self.config.m)
            if branch_cut_distance(expected.z ** self.config.m) < settings.tolerances.branch_margin:
                skipped += 1
                continue

            attempted += 1
            try:
                recovered_pair = canonicalize_double(sample.point)
            except ChevalleyError as e:
                logger.debug(f"Trial {trial} not recovered: {e.detail}")
                continue

            scale = max(1.0, float(np.max(np.abs(expected.z))), float(np.max(np.abs(expected.zp))))
            distance = recovered_pair.distance(expected) / scale
            worst = max(worst, distance)
            if distance <= bound:
                recovered += 1

        rate = recovered / attempted if attempted else 1.0
        return [
            self.verdict_record(
                "plant-and-recover",
                rate >= self.RECOVERY_RATE,
                detail=f"recovered={recovered}/{attempted}, skipped={skipped}, worst={worst:.3e}",
            )
        ]

    def _z1_normal_form(self) -> list[CheckRecordDTO]:
        failures = 0
        for trial in range(self.config.trials):
            for point in random_Z1_points(1, self.config.m, self.rng(trial)):
                try:
                    z1_normal_form(point)
                except ChevalleyError as e:
                    logger.debug(f"Z_1 normal form failed on trial {trial}: {e.detail}")
                    failures += 1
        return [self.verdict_record("z1-normal-form", failures == 0, detail=f"failures={failures}")]

    def _diagram(self) -> list[CheckRecordDTO]:
        words = [
            word for word in trace_word_panel(self.config.m, max(r + s for r, s in self.DIAGRAM_WORDS))
            if (word.r, word.s) in self.DIAGRAM_WORDS
        ]
        worst = 0.0
        for trial in range(self.config.trials):
            scalars = random_Z1_points(self.config.n, self.config.m, self.rng(trial))
            for word in words:
                worst = max(worst, diagram_check(scalars, word).relative)
        return [self.bound_record("diagram", worst, self.config.tol, detail=f"words={len(words)}")]

    def _generation(self) -> list[CheckRecordDTO]:
        records = []
        top = min(self.config.max_degree, settings.run.generation_degree)
        for degree in range(1, top + 1):
            report = generation_check(self.config.n, self.config.m, degree, rep=Representation.LL)
            records.append(self.verdict_record(
                f"generation-LL-d{degree}",
                report.verdict,
                detail=f"span_dim={report.span_dim}, molien_dim={report.molien_dim}",
            ))
        return records

    def _stability(self) -> list[CheckRecordDTO]:
        gauge_violations = 0
        for trial in range(self.config.trials):
            rng = self.rng(trial)
            point = random_Z_point(self._shape, rng)
            if not is_generic(point.x_part).generic:
                continue
            moved = act_gauge_double(random_gauge(self._shape, rng), point)
            if not is_generic(moved.x_part).generic:
                gauge_violations += 1

        rng = self.rng(self.config.trials)
        base = random_LL_point(self.config.n, rng)
        wreath_violations = 0
        if is_generic(embed_LL(base, self.config.m).x_part).generic:
            for element in wreath_sample(self.config.n, self.config.m, rng):
                moved = embed_LL(act_on_LL(element, base), self.config.m)
                if not is_generic(moved.x_part).generic:
                    wreath_violations += 1
        else:
            logger.warning("Stability base point is not generic; wreath stability left unchecked")

        return [
            self.verdict_record("gauge-stability", gauge_violations == 0, detail=f"violations={gauge_violations}"),
            self.verdict_record("wreath-stability", wreath_violations == 0, detail=f"violations={wreath_violations}"),
        ]

    def _jacobian_vanishing(self) -> list[CheckRecordDTO]:
        trials = min(self.config.trials, self.VANISHING_TRIALS)
        report = jacobian_vanishing_check(self.config.n, self.config.m, trials, derive_seed(self.config.seed, 0))
        inconsistent = [sample.label for sample in report.samples if not sample.consistent]
        return [self.verdict_record("jacobian-vanishing", report.verdict,
                                    detail=f"checked={len(report.samples)}, inconsistent={inconsistent}")]
