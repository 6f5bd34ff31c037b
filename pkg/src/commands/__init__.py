from src.commands.points import normal_form_command, sample_command
from src.commands.verification import (
    generation_command,
    jacobian_command,
    molien_command,
    verify_chevalley,
    verify_double,
)

COMMANDS = (
    verify_chevalley,
    verify_double,
    normal_form_command,
    molien_command,
    generation_command,
    jacobian_command,
    sample_command,
)

__all__ = ["COMMANDS"]
