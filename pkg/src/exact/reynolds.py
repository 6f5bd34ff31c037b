import math
from collections.abc import Sequence

from src.config import settings
from src.core.exceptions import InvalidInputError, TooLarge
from src.exact.cyclo import CycloScalar
from src.exact.multipoly import MultiPoly, monomial_exponents, variables_for
from src.models.domain.wreath import MonomialAction, Representation
from src.utils.logger import logger
from src.wreath import group_order, monomial_action, wreath_enumerate


def group_actions(n: int, m: int, rep: str) -> list[MonomialAction]:
    """
    Monomial substitutions of every element of W_n on L or L ⊕ L.

    :param n: number of letters
    :param m: order of the cyclic factor
    :param rep: "L" or "LL"
    :return: one action per group element, in enumeration order
    """

    Representation.validate(rep)
    cap = settings.limits.reynolds_group_cap
    if group_order(n, m) > cap:
        raise TooLarge(f"|W_{n}| = {group_order(n, m)} for m={m} exceeds the symmetrization cap {cap}.")
    return [monomial_action(element, rep) for element in wreath_enumerate(n, m, cap=cap)]


def reynolds(p: MultiPoly, n: int, m: int, rep: str, actions: Sequence[MonomialAction] | None = None) -> MultiPoly:
    """
    Project onto W_n-invariants: (1/|W_n|)·Σ_w w·p.

    :param p: polynomial in the variables of ``variables_for(n, rep)``
    :param n: number of letters
    :param m: order of the cyclic factor
    :param rep: "L" or "LL"
    :param actions: precomputed ``group_actions(n, m, rep)``
    :return: invariant polynomial
    """

    if p.variables != variables_for(n, rep) or p.m != m:
        raise InvalidInputError(f"Polynomial ring does not match W_{n} (m={m}) acting on {rep}.")

    substitutions = group_actions(n, m, rep) if actions is None else actions
    total = MultiPoly.zero(m, p.variables)
    for action in substitutions:
        total = total + p.substitute(action)
    return total / len(substitutions)


def _swap(rows: list[list[CycloScalar]], i: int, j: int) -> None:
    rows[i], rows[j] = rows[j], rows[i]


def bareiss_rank(rows: Sequence[Sequence[CycloScalar]]) -> int:
    """
    Exact rank by fraction-free (Bareiss) elimination.

    Row i below the pivot row k becomes (p·row_i - a_ik·row_k)/p_prev, where p
    is the current pivot and p_prev the previous one; pivots are taken as the
    first nonzero entry in column order, so the result is deterministic.

    :param rows: matrix over ℚ(ω)
    :return: rank
    """

    matrix = [list(row) for row in rows if any(not entry.is_zero() for entry in row)]
    if not matrix:
        return 0

    columns = len(matrix[0])
    m = matrix[0][0].m
    previous_inverse = CycloScalar.one(m)
    rank = 0

    for column in range(columns):
        pivot_row = next((i for i in range(rank, len(matrix)) if not matrix[i][column].is_zero()), None)
        if pivot_row is None:
            continue
        _swap(matrix, rank, pivot_row)
        pivot = matrix[rank][column]

        for i in range(rank + 1, len(matrix)):
            factor = matrix[i][column]
            for j in range(column + 1, columns):
                matrix[i][j] = (matrix[i][j] * pivot - factor * matrix[rank][j]) * previous_inverse
            matrix[i][column] = CycloScalar.zero(m)

        previous_inverse = pivot.inverse()
        rank += 1
        if rank == len(matrix):
            break

    return rank


def polynomial_rank(polynomials: Sequence[MultiPoly], degree: int) -> int:
    """
    Dimension of the span of homogeneous polynomials of one degree.

    :param polynomials: polynomials of total degree ``degree`` (or zero)
    :param degree: common degree
    :return: exact rank
    """

    distinct = list(dict.fromkeys(p for p in polynomials if not p.is_zero()))
    if not distinct:
        return 0

    basis = {exponents: index for index, exponents in enumerate(monomial_exponents(distinct[0].nvars, degree))}
    return bareiss_rank([p.coefficient_vector(basis) for p in distinct])


def check_monomial_count(count: int, degree: int) -> int:
    total = math.comb(count + degree - 1, degree)
    if total > settings.limits.monomial_cap:
        raise TooLarge(f"{total} monomials of degree {degree} exceed the cap {settings.limits.monomial_cap}.")
    return total


def invariant_dim_bruteforce(n: int, m: int, rep: str, d: int) -> int:
    """
    Dimension of the degree-d invariants, as the rank of the symmetrized monomials.

    :param n: number of letters
    :param m: order of the cyclic factor
    :param rep: "L" or "LL"
    :param d: degree
    :return: exact dimension
    """

    variables = variables_for(n, rep)
    check_monomial_count(len(variables), d)
    actions = group_actions(n, m, rep)

    images = [
        reynolds(MultiPoly.monomial(m, variables, exponents), n, m, rep, actions=actions)
        for exponents in monomial_exponents(len(variables), d)
    ]
    dimension = polynomial_rank(images, d)
    logger.debug(f"Brute-force invariant dimension for W_{n} (m={m}) on {rep} at degree {d}: {dimension}")
    return dimension
