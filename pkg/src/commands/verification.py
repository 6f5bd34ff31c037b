import click

from src.commands.options import build_config, execute, run_options
from src.core.dependencies.services import get_suite
from src.services.chevalley_service import ChevalleyService
from src.services.double_service import DoubleService
from src.services.generation_service import GenerationService
from src.services.jacobian_service import JacobianService
from src.services.molien_service import MolienService


def _suite_command(name: str, summary: str) -> click.Command:
    @click.command(name=name, help=summary)
    @run_options
    def command(n, m, trials, seed, tol, max_degree, json_out, no_timing) -> None:
        execute(
            lambda: get_suite(name, build_config(n, m, trials, seed, tol, max_degree, json_out),
                              include_timing=not no_timing),
            json_out,
        )

    return command


verify_chevalley = _suite_command(
    ChevalleyService.COMMAND,
    "Verify restriction of invariants from R_n to L_n.",
)
verify_double = _suite_command(
    DoubleService.COMMAND,
    "Verify restriction of invariants from Z_n to L_n x L_n.",
)
molien_command = _suite_command(
    MolienService.COMMAND,
    "Molien series of W_n on L_n and L_n ⊕ L_n as exact rationals.",
)
generation_command = _suite_command(
    GenerationService.COMMAND,
    "Exact generation checks of the invariant rings up to --max-degree.",
)
jacobian_command = _suite_command(
    JacobianService.COMMAND,
    "Jacobian of L_n -> L_n/W_n against its product formula.",
)
