from src.exact import jacobian_check
from src.exact.jacobian import EXACT_MAX_N
from src.models.dto.reports import CheckRecordDTO
from src.services.base import BaseVerificationService
from src.utils.seeding import derive_seed


class JacobianService(BaseVerificationService):
    """
    Jacobian of L_n -> L_n/W_n against (z_1...z_n)^(m-1)·∏(z_i^m - z_j^m).
    """

    COMMAND = "jacobian"
    SPREAD_BOUND: float = 1e-6

    def discover_checks(self) -> list[str]:
        return ["jacobian"]

    def run_check(self, check: str) -> list[CheckRecordDTO]:
        trials = max(self.config.trials, 2)
        report = jacobian_check(self.config.n, self.config.m, trials, derive_seed(self.config.seed, self._stream))
        self.set_payload("jacobian", report.to_dto().model_dump())

        records = [self.bound_record("relative-spread", report.relative_spread, self.SPREAD_BOUND * self.tolerance_factor)]
        if self.config.n <= EXACT_MAX_N:
            records.append(self.verdict_record(
                "exact-proportionality",
                bool(report.exact_verdict),
                detail=f"constant={report.exact_constant}",
            ))
        return records
