import click

from src.commands.options import build_config, execute, run_options
from src.config import settings
from src.core.dependencies.services import get_normal_form_service, get_report_repository, get_sample_service
from src.models.dto.reports import RunConfigDTO
from src.services.sample_service import SampleKind


@click.command(name="normal-form", help="Normal form of a point read from JSON.")
@click.option("--input", "input_path", type=click.Path(dir_okay=False), required=True, help="RepPoint JSON file.")
@click.option("--tol", type=float, default=settings.run.tol, show_default=True)
@click.option("--json-out", type=click.Path(dir_okay=False), default=None)
@click.option("--no-timing", is_flag=True, default=False)
def normal_form_command(input_path: str, tol: float, json_out: str | None, no_timing: bool) -> None:
    def factory():
        point = get_report_repository().load_point(input_path)
        config = RunConfigDTO(n=point.n, m=point.m, trials=1, seed=settings.run.seed, tol=tol,
                              max_degree=settings.run.max_degree, output=json_out)
        return get_normal_form_service(point, config, include_timing=not no_timing)

    execute(factory, json_out)


@click.command(name="sample", help="Seeded random points as JSON.")
@click.option("--kind", type=click.Choice(SampleKind.ALL), default=SampleKind.SATURATION, show_default=True)
@run_options
def sample_command(kind, n, m, trials, seed, tol, max_degree, json_out, no_timing) -> None:
    execute(
        lambda: get_sample_service(build_config(n, m, trials, seed, tol, max_degree, json_out), kind,
                                   include_timing=not no_timing),
        json_out,
    )
