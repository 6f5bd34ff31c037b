from src.exact import generation_check
from src.models.domain.wreath import Representation
from src.models.dto.reports import CheckRecordDTO
from src.services.base import BaseVerificationService


class GenerationService(BaseVerificationService):
    """
    Exact generation checks at every degree up to max_degree, for both representations.
    """

    COMMAND = "generation"

    def discover_checks(self) -> list[str]:
        return [Representation.L, Representation.LL]

    def run_check(self, check: str) -> list[CheckRecordDTO]:
        reports = [
            generation_check(self.config.n, self.config.m, degree, rep=check,
                             search_minimal=check == Representation.LL)
            for degree in range(self.config.max_degree + 1)
        ]
        self.set_payload(check, [report.to_dto().model_dump() for report in reports])

        return [
            self.verdict_record(
                f"generation-{check}-d{report.d}",
                report.verdict,
                detail=f"span_dim={report.span_dim}, molien_dim={report.molien_dim}, minimal_r={report.minimal_r}",
            )
            for report in reports
        ]
