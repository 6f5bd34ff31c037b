from src.wreath.embedding import act_on_L, act_on_LL, monomial_action, permutation_matrix, to_gauge
from src.wreath.group import (
    group_order,
    random_wreath_element,
    root_of_unity,
    wreath_compose,
    wreath_enumerate,
    wreath_inverse,
)
from src.wreath.molien import molien, molien_bigraded

__all__ = [
    "act_on_L",
    "act_on_LL",
    "group_order",
    "molien",
    "molien_bigraded",
    "monomial_action",
    "permutation_matrix",
    "random_wreath_element",
    "root_of_unity",
    "to_gauge",
    "wreath_compose",
    "wreath_enumerate",
    "wreath_inverse",
]
