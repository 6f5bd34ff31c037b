from src.invariants.evaluators import (
    charpoly_fingerprint,
    double_fingerprint,
    elementary_symmetric,
    eval_charpoly_invariant,
    eval_e_zm,
    eval_p_rs,
    eval_trace_word,
    evaluate_path,
    trace_word_arrows,
    trace_word_panel,
)
from src.invariants.restriction import (
    IdentityCheck,
    diagram_check,
    phi_identity_check,
    restrict_to_product,
    rho_identity_check,
)

__all__ = [
    "IdentityCheck",
    "charpoly_fingerprint",
    "diagram_check",
    "double_fingerprint",
    "elementary_symmetric",
    "eval_charpoly_invariant",
    "eval_e_zm",
    "eval_p_rs",
    "eval_trace_word",
    "evaluate_path",
    "phi_identity_check",
    "restrict_to_product",
    "rho_identity_check",
    "trace_word_arrows",
    "trace_word_panel",
]
