from fractions import Fraction

from src.exact import molien_closed_form_L
from src.models.domain.wreath import Representation
from src.models.dto.reports import CheckRecordDTO
from src.services.base import BaseVerificationService
from src.wreath import molien, molien_bigraded, wreath_enumerate


class MolienService(BaseVerificationService):
    """
    Molien series of W_n on L_n and on L_n ⊕ L_n, compared with their closed and bigraded forms.
    """

    COMMAND = "molien"

    def discover_checks(self) -> list[str]:
        return ["molien-L", "molien-LL"]

    def run_check(self, check: str) -> list[CheckRecordDTO]:
        n, m, degree = self.config.n, self.config.m, self.config.max_degree
        elements = wreath_enumerate(n, m)

        if check == "molien-L":
            series = molien(elements, Representation.L, degree)
            self.set_payload("L", series.to_dto().model_dump(mode="json"))
            closed = molien_closed_form_L(n, m, degree)
            return [self.verdict_record("closed-form-L", series.coefficients == closed.coefficients)]

        series = molien(elements, Representation.LL, degree)
        bigraded = molien_bigraded(elements, degree)
        self.set_payload("LL", series.to_dto().model_dump(mode="json"))
        self.set_payload("LL_bigraded", bigraded.to_dto().model_dump(mode="json"))

        records = [self.verdict_record("bigraded-sums-LL", series.coefficients == bigraded.coefficients)]
        if n == 1:
            stray = [
                (a, b) for a, row in enumerate(bigraded.bigraded) for b, value in enumerate(row)
                if a + b <= degree and (a - b) % m != 0 and value != Fraction(0)
            ]
            records.append(self.verdict_record("bigraded-congruence", not stray, detail=f"stray={stray}"))
        return records
