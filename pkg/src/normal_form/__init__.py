from src.normal_form.double import canonicalize_double, canonicalize_LL, z1_gauge, z1_normal_form
from src.normal_form.roots import branch_cut_distance, canonical_order, principal_root, principal_roots
from src.normal_form.single import (
    canonical_L_of_point,
    diagonalize_generic,
    orbit_equal,
    r1_orbit_equal,
    r1_orbit_witness,
    to_canonical_L,
)

__all__ = [
    "branch_cut_distance",
    "canonical_L_of_point",
    "canonical_order",
    "canonicalize_LL",
    "canonicalize_double",
    "diagonalize_generic",
    "orbit_equal",
    "principal_root",
    "principal_roots",
    "r1_orbit_equal",
    "r1_orbit_witness",
    "to_canonical_L",
    "z1_gauge",
    "z1_normal_form",
]
