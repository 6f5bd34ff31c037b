import click

from src.commands import COMMANDS
from src.config import settings
from src.utils.logger import logger


@click.group(help="Numerical and exact verification toolkit for the cyclic quiver restriction theorems.")
@click.option("--log-level", type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
              default=settings.logging.level, show_default=True)
def cli(log_level: str) -> None:
    """
    Command group entry point.

    :param log_level: minimum severity written to stderr
    """

    logger.set_level(log_level)


for command in COMMANDS:
    cli.add_command(command)


if __name__ == "__main__":
    cli()
