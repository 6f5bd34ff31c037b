from src.models.dto.quiver import RepPointDTO
from src.models.dto.reports import RunConfigDTO
from src.repositories.report_repository import ReportRepository
from src.services.base import BaseVerificationService
from src.services.chevalley_service import ChevalleyService
from src.services.double_service import DoubleService
from src.services.generation_service import GenerationService
from src.services.jacobian_service import JacobianService
from src.services.molien_service import MolienService
from src.services.normal_form_service import NormalFormService
from src.services.sample_service import SampleService

SUITES: dict[str, type[BaseVerificationService]] = {
    ChevalleyService.COMMAND: ChevalleyService,
    DoubleService.COMMAND: DoubleService,
    MolienService.COMMAND: MolienService,
    GenerationService.COMMAND: GenerationService,
    JacobianService.COMMAND: JacobianService,
}


def get_report_repository() -> ReportRepository:
    """
    Provide the report repository.

    :return: report repository instance
    """

    return ReportRepository()


def get_suite(command: str, config: RunConfigDTO, include_timing: bool = True) -> BaseVerificationService:
    """
    Provide the verification suite behind a subcommand.

    :param command: subcommand name
    :param config: validated run configuration
    :param include_timing: record wall time in the report
    :return: configured suite
    """

    return SUITES[command](config=config, include_timing=include_timing)


def get_normal_form_service(point: RepPointDTO, config: RunConfigDTO, include_timing: bool = True) -> NormalFormService:
    return NormalFormService(point=point, config=config, include_timing=include_timing)


def get_sample_service(config: RunConfigDTO, kind: str, include_timing: bool = True) -> SampleService:
    return SampleService(config=config, kind=kind, include_timing=include_timing)
