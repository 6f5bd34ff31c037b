from src.quiver.actions import (
    act_gauge,
    act_gauge_double,
    cycle_product,
    in_moment_zero_set,
    max_moment_residual,
    moment_residual,
    moment_scale,
)
from src.quiver.embeddings import diagonal_extraction, embed_L, embed_LL
from src.quiver.genericity import GenericityReport, is_generic
from src.quiver.sampling import (
    SaturationSample,
    random_double_rep,
    random_gauge,
    random_L_point,
    random_LL_point,
    random_rep,
    random_saturation_sample,
    random_Z1_points,
    random_Z_point,
)

__all__ = [
    "GenericityReport",
    "SaturationSample",
    "act_gauge",
    "act_gauge_double",
    "cycle_product",
    "diagonal_extraction",
    "embed_L",
    "embed_LL",
    "in_moment_zero_set",
    "is_generic",
    "max_moment_residual",
    "moment_residual",
    "moment_scale",
    "random_L_point",
    "random_LL_point",
    "random_Z1_points",
    "random_Z_point",
    "random_double_rep",
    "random_gauge",
    "random_rep",
    "random_saturation_sample",
]
