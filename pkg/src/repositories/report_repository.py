from pathlib import Path

from src.models.dto.quiver import RepPointDTO
from src.models.dto.reports import ReportDTO
from src.utils.logger import logger


class ReportRepository:
    """
    File-system persistence for input points and verification reports.

    :return: repository instance
    """

    def load_point(self, path: str | Path) -> RepPointDTO:
        """
        Read and validate a RepPoint / DoubleRepPoint JSON document.

        :param path: input file
        :return: validated point
        """

        source = Path(path)
        logger.debug(f"Loading point from {source}")
        return RepPointDTO.model_validate_json(source.read_text(encoding="utf-8"))

    def save_point(self, point: RepPointDTO, path: str | Path) -> Path:
        target = Path(path)
        target.write_text(point.model_dump_json(indent=2, exclude_none=True), encoding="utf-8")
        return target

    @staticmethod
    def render(report: ReportDTO) -> str:
        """
        Serialize a report to JSON; identical reports render to identical bytes.

        :param report: report to serialize
        :return: JSON text
        """

        return report.model_dump_json(indent=2)

    def save_report(self, report: ReportDTO, path: str | Path) -> Path:
        """
        Write a report as JSON.

        :param report: report to persist
        :param path: output file
        :return: written path
        """

        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(self.render(report), encoding="utf-8")
        logger.info(f"Report written to {target}")
        return target
