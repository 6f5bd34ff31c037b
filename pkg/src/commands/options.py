from collections.abc import Callable

import click
from pydantic import ValidationError

from src.config import settings
from src.core.dependencies.services import get_report_repository
from src.core.exceptions import ChevalleyError
from src.core.exceptions.base import INPUT_ERROR_EXIT_CODE, VERIFICATION_FAILURE_EXIT_CODE
from src.models.dto.reports import RunConfigDTO
from src.services.base import BaseVerificationService
from src.utils.logger import logger


def run_options(command: Callable) -> Callable:
    """
    Attach the shared run-configuration flags to a subcommand.

    :param command: click command callback
    :return: decorated callback
    """

    decorators = [
        click.option("--n", "n", type=int, default=2, show_default=True, help="Dimension at every vertex."),
        click.option("--m", "m", type=int, default=2, show_default=True, help="Number of vertices of the cycle."),
        click.option("--trials", type=int, default=settings.run.trials, show_default=True),
        click.option("--seed", type=int, default=settings.run.seed, show_default=True),
        click.option("--tol", type=float, default=settings.run.tol, show_default=True),
        click.option("--max-degree", type=int, default=settings.run.max_degree, show_default=True),
        click.option("--json-out", type=click.Path(dir_okay=False), default=None, help="Also write the report here."),
        click.option("--no-timing", is_flag=True, default=False, help="Omit wall time for byte-identical reports."),
    ]
    for decorator in reversed(decorators):
        command = decorator(command)
    return command


def build_config(n: int, m: int, trials: int, seed: int, tol: float, max_degree: int,
                 json_out: str | None) -> RunConfigDTO:
    return RunConfigDTO(n=n, m=m, trials=trials, seed=seed, tol=tol, max_degree=max_degree, output=json_out)


def execute(factory: Callable[[], BaseVerificationService], json_out: str | None) -> None:
    """
    Run a suite, print its report to stdout and exit with the contract code.

    0 when every record passed, 1 on a failed record or computational error,
    2 on invalid input.

    :param factory: builds the suite; input validation happens inside it
    :param json_out: optional report path
    """

    ctx = click.get_current_context()

    try:
        report = factory().run()
    except ValidationError as e:
        logger.error(f"Invalid input: {e.error_count()} validation error(s): {e.errors()[0]['msg']}")
        ctx.exit(INPUT_ERROR_EXIT_CODE)
    except OSError as e:
        logger.error(f"Cannot read input: {e}")
        ctx.exit(INPUT_ERROR_EXIT_CODE)
    except ChevalleyError as e:
        logger.error(f"{type(e).__name__}: {e.detail}")
        ctx.exit(e.exit_code)

    repository = get_report_repository()
    click.echo(repository.render(report))
    if json_out:
        repository.save_report(report, json_out)

    ctx.exit(0 if report.passed else VERIFICATION_FAILURE_EXIT_CODE)
