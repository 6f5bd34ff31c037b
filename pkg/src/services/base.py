import time
from abc import ABC, abstractmethod
from typing import Any

import numpy as np

from src.config import settings
from src.core.exceptions import ChevalleyError, InvalidInputError, TooLarge
from src.models.dto.reports import CheckRecordDTO, ReportDTO, RunConfigDTO
from src.utils.logger import logger
from src.utils.seeding import derive_seed, make_rng


class BaseVerificationService(ABC):
    """
    Base verification suite with a discover/run lifecycle.

    Subclasses name their checks and evaluate one check at a time; the base
    class drives the loop, isolates failures per check and assembles the
    report. Every trial draws from a generator seeded by (seed, check, trial)
    so results never depend on execution order.
    """

    COMMAND: str = ""
    SKIP_TOO_LARGE: bool = False

    def __init__(self, config: RunConfigDTO, include_timing: bool = True) -> None:
        self._config = config
        self._include_timing = include_timing
        self._service_name = self.__class__.__name__
        self._stream = 0
        self._payload: dict[str, Any] | None = None

    @property
    def config(self) -> RunConfigDTO:
        return self._config

    @property
    def tolerance_factor(self) -> float:
        """
        Scale applied to every reference tolerance; 1 at the default run tolerance.

        :return: ratio of the configured tolerance to the default one
        """

        return self._config.tol / settings.run.tol

    def rng(self, trial: int) -> np.random.Generator:
        """
        Generator of one trial within the current check.

        :param trial: zero-based trial index
        :return: seeded generator
        """

        return make_rng(derive_seed(derive_seed(self._config.seed, self._stream), trial))

    def run(self) -> ReportDTO:
        """
        Execute every check and return the report.

        :return: report whose pass flag holds iff every record passed
        """

        logger.info(f"[{self._service_name}] Starting verification run (n={self._config.n}, m={self._config.m})")
        started = time.perf_counter()

        checks = self.discover_checks()
        logger.info(f"[{self._service_name}] Discovered {len(checks)} checks")

        records: list[CheckRecordDTO] = []
        for idx, check in enumerate(checks, start=1):
            logger.info(f"[{self._service_name}] Running check {idx}/{len(checks)}: {check}")
            self._stream = idx

            try:
                produced = self.run_check(check=check)
                records.extend(produced)
                failed = [record.name for record in produced if not record.passed]
                if failed:
                    logger.warning(f"[{self._service_name}] Check '{check}' failed: {', '.join(failed)}")
            except TooLarge as e:
                if not self.SKIP_TOO_LARGE:
                    raise
                logger.warning(f"[{self._service_name}] Check '{check}' skipped: {e.detail}")
                records.append(CheckRecordDTO(name=check, passed=True, skipped=True, detail=f"TooLarge: {e.detail}"))
            except InvalidInputError:
                raise
            except ChevalleyError as e:
                logger.error(f"[{self._service_name}] Check '{check}' raised {type(e).__name__}: {e.detail}")
                records.append(CheckRecordDTO(name=check, passed=False, detail=f"{type(e).__name__}: {e.detail}"))

        report = ReportDTO(
            command=self.COMMAND,
            config=self._config,
            records=records,
            wall_time=time.perf_counter() - started if self._include_timing else None,
            payload=self._payload,
        )

        passed = sum(record.passed for record in records)
        logger.info(f"[{self._service_name}] Verification completed: {passed}/{len(records)} records passed")

        return report

    @abstractmethod
    def discover_checks(self) -> list[str]:
        """
        Names of the checks this suite runs, in order.

        :return: list of check names
        """

    @abstractmethod
    def run_check(self, check: str) -> list[CheckRecordDTO]:
        """
        Evaluate a single check.

        :param check: check name from ``discover_checks``
        :return: records produced by the check
        """

    def set_payload(self, key: str, value: Any) -> None:
        if self._payload is None:
            self._payload = {}
        self._payload[key] = value

    @staticmethod
    def bound_record(name: str, residual: float, bound: float, detail: str | None = None) -> CheckRecordDTO:
        """
        Record for "residual ≤ bound" with margin bound - residual.

        :param name: record name
        :param residual: measured worst residual
        :param bound: allowed residual
        :param detail: optional free text
        :return: check record
        """

        return CheckRecordDTO(
            name=name,
            passed=bool(residual <= bound),
            residual=float(residual),
            margin=float(bound - residual),
            detail=detail,
        )

    @staticmethod
    def verdict_record(name: str, verdict: bool, detail: str | None = None) -> CheckRecordDTO:
        return CheckRecordDTO(name=name, passed=bool(verdict), verdict=bool(verdict), detail=detail)
