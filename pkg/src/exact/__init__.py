from src.exact.closed_form import molien_closed_form_L
from src.exact.cyclo import CycloScalar, cyclotomic_coefficients
from src.exact.generation import (
    elementary_generator,
    generation_check,
    generators,
    molien_dimension,
    power_sum_generator,
    products_of_degree,
)
from src.exact.jacobian import (
    exact_constant,
    exact_jacobian,
    jacobian_check,
    jacobian_formula,
    jacobian_matrix,
    jacobian_vanishing_check,
)
from src.exact.multipoly import MultiPoly, monomial_exponents, variables_for
from src.exact.reynolds import bareiss_rank, group_actions, invariant_dim_bruteforce, polynomial_rank, reynolds

__all__ = [
    "CycloScalar",
    "MultiPoly",
    "bareiss_rank",
    "cyclotomic_coefficients",
    "elementary_generator",
    "exact_constant",
    "exact_jacobian",
    "generation_check",
    "generators",
    "group_actions",
    "invariant_dim_bruteforce",
    "jacobian_check",
    "jacobian_formula",
    "jacobian_matrix",
    "jacobian_vanishing_check",
    "molien_closed_form_L",
    "molien_dimension",
    "monomial_exponents",
    "polynomial_rank",
    "power_sum_generator",
    "products_of_degree",
    "reynolds",
    "variables_for",
]
