import itertools

from src.config import settings
from src.core.exceptions import InvalidInputError, ReconstructionFailure, SpanExceedsInvariants, TooLarge
from src.exact.multipoly import MultiPoly, variables_for
from src.exact.reynolds import check_monomial_count, polynomial_rank
from src.models.domain.exact import GenerationReport
from src.models.domain.wreath import Representation
from src.utils.logger import logger
from src.wreath import molien, wreath_enumerate

Generator = tuple[int, MultiPoly]


def power_sum_generator(n: int, m: int, r: int, s: int) -> MultiPoly:
    """
    p_{r,s} = Σ_i z_i^r·z'_i^s as an exact polynomial on L ⊕ L.

    :param n: number of coordinates per factor
    :param m: order of the cyclic factor
    :param r: power of z
    :param s: power of z'
    :return: polynomial
    """

    variables = variables_for(n, Representation.LL)
    total = MultiPoly.zero(m, variables)
    for i in range(n):
        exponents = [0] * (2 * n)
        exponents[i], exponents[n + i] = r, s
        total = total + MultiPoly.monomial(m, variables, tuple(exponents))
    return total


def elementary_generator(n: int, m: int, k: int) -> MultiPoly:
    """
    e_k(z_1^m, ..., z_n^m) as an exact polynomial on L.

    :param n: number of coordinates
    :param m: number of vertices
    :param k: index, 1 ≤ k ≤ n
    :return: polynomial of degree m·k
    """

    variables = variables_for(n, Representation.L)
    total = MultiPoly.zero(m, variables)
    for subset in itertools.combinations(range(n), k):
        exponents = [0] * n
        for index in subset:
            exponents[index] = m
        total = total + MultiPoly.monomial(m, variables, tuple(exponents))
    return total


def generators(n: int, m: int, rep: str, cutoff: int) -> list[Generator]:
    """
    Candidate generators of degree at most ``cutoff``, each with its degree.

    LL uses p_{r,s} with r ≡ s (mod m) and 1 ≤ r + s; L uses e_k(z^m).

    :param n: number of coordinates per factor
    :param m: order of the cyclic factor
    :param rep: "L" or "LL"
    :param cutoff: maximal generator degree R
    :return: (degree, polynomial) pairs in increasing degree
    """

    if Representation.validate(rep) == Representation.L:
        return [(m * k, elementary_generator(n, m, k)) for k in range(1, n + 1) if m * k <= cutoff]

    return [
        (total, power_sum_generator(n, m, r, total - r))
        for total in range(1, cutoff + 1)
        for r in range(total, -1, -1)
        if (r - (total - r)) % m == 0
    ]


def products_of_degree(pool: list[Generator], degree: int, variables: tuple[str, ...], m: int) -> list[MultiPoly]:
    """
    All products of generators (with repetition) of total degree exactly ``degree``.

    :param pool: generators with their degrees
    :param degree: target degree
    :param variables: ring variables
    :param m: order of the cyclic factor
    :return: products, one per multiset of generators
    """

    products: list[MultiPoly] = []
    cap = settings.limits.monomial_cap

    def extend(start: int, remaining: int, current: MultiPoly) -> None:
        if remaining == 0:
            products.append(current)
            if len(products) > cap:
                raise TooLarge(f"More than {cap} generator products at degree {degree}.")
            return
        for index in range(start, len(pool)):
            size, polynomial = pool[index]
            if size <= remaining:
                extend(index, remaining - size, current * polynomial)

    extend(0, degree, MultiPoly.constant(m, variables, 1))
    return products


def molien_dimension(n: int, m: int, rep: str, d: int) -> int:
    coefficient = molien(wreath_enumerate(n, m), rep, d).coefficients[d]
    if coefficient.denominator != 1:
        raise ReconstructionFailure(f"Molien coefficient {coefficient} at degree {d} is not an integer.")
    return int(coefficient)


def span_dimension(n: int, m: int, rep: str, d: int, cutoff: int) -> int:
    variables = variables_for(n, rep)
    return polynomial_rank(products_of_degree(generators(n, m, rep, cutoff), d, variables, m), d)


def generation_check(n: int, m: int, d: int, R: int | None = None, rep: str = Representation.LL,
                     search_minimal: bool = False) -> GenerationReport:
    """
    Compare the span of generator products at degree d with the invariant dimension.

    :param n: number of coordinates per factor
    :param m: order of the cyclic factor
    :param d: degree
    :param R: generator degree cutoff, defaults to d
    :param rep: "LL" for p_{r,s}, "L" for e_k(z^m)
    :param search_minimal: also report the smallest cutoff with a full span
    :return: report with verdict span_dim == molien_dim
    """

    Representation.validate(rep)
    if n < 1 or m < 1 or d < 0:
        raise InvalidInputError(f"Generation check needs n, m >= 1 and d >= 0, got {n}, {m}, {d}.")

    cutoff = d if R is None else R
    check_monomial_count(len(variables_for(n, rep)), d)
    molien_dim = molien_dimension(n, m, rep, d)
    span_dim = span_dimension(n, m, rep, d, cutoff)

    if span_dim > molien_dim:
        raise SpanExceedsInvariants(f"span_dim {span_dim} > molien_dim {molien_dim} for n={n}, m={m}, d={d}.")

    minimal_r = None
    if search_minimal and span_dim == molien_dim:
        minimal_r = next(
            (candidate for candidate in range(0, cutoff + 1)
             if span_dimension(n, m, rep, d, candidate) == molien_dim),
            cutoff,
        )

    logger.debug(f"Generation check {rep} n={n} m={m} d={d} R={cutoff}: span {span_dim} / molien {molien_dim}")
    return GenerationReport(rep=rep, n=n, m=m, d=d, R=cutoff, molien_dim=molien_dim, span_dim=span_dim,
                            minimal_r=minimal_r)
