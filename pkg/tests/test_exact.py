from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st

from src.config import settings
from src.core.exceptions import InvalidInputError, TooLarge
from src.exact import (
    CycloScalar,
    MultiPoly,
    bareiss_rank,
    cyclotomic_coefficients,
    elementary_generator,
    exact_constant,
    exact_jacobian,
    generation_check,
    generators,
    group_actions,
    invariant_dim_bruteforce,
    jacobian_check,
    jacobian_formula,
    jacobian_matrix,
    jacobian_vanishing_check,
    molien_closed_form_L,
    molien_dimension,
    monomial_exponents,
    polynomial_rank,
    power_sum_generator,
    products_of_degree,
    reynolds,
    variables_for,
)
from src.linalg import mat_det
from src.models.domain.quiver import LLPoint
from src.models.domain.wreath import WreathElement
from src.wreath import act_on_LL, molien, monomial_action, wreath_enumerate


@st.composite
def cyclo_pairs(draw):
    m = draw(st.integers(min_value=1, max_value=9))
    coefficients = st.lists(st.integers(min_value=-6, max_value=6), min_size=0, max_size=m + 2)
    return CycloScalar(m, draw(coefficients)), CycloScalar(m, draw(coefficients)), CycloScalar(m, draw(coefficients))


@pytest.mark.parametrize(
    "m, expected",
    [
        (1, (-1, 1)),
        (2, (1, 1)),
        (3, (1, 1, 1)),
        (4, (1, 0, 1)),
        (6, (1, -1, 1)),
    ],
)
def test_cyclotomic_coefficients(m, expected):
    assert cyclotomic_coefficients(m) == expected


def test_cyclotomic_rejects_zero_order():
    with pytest.raises(InvalidInputError):
        cyclotomic_coefficients(0)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6, 8, 12])
def test_omega_is_a_primitive_root(m):
    omega = CycloScalar.omega_power(m, 1)
    assert omega ** m == CycloScalar.one(m)
    assert CycloScalar.omega_power(m, m + 2) == omega ** 2
    if m >= 2:
        assert sum((CycloScalar.omega_power(m, k) for k in range(m)), CycloScalar.zero(m)).is_zero()


@given(cyclo_pairs())
def test_field_axioms(triple):
    a, b, c = triple
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == 0


@hypothesis_settings(max_examples=50, deadline=None)
@given(cyclo_pairs())
def test_inverse(triple):
    a, _, _ = triple
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == 1
        assert (a / a) == CycloScalar.one(a.m)


@given(cyclo_pairs())
def test_to_complex_is_a_ring_map(triple):
    a, b, _ = triple
    assert (a * b).to_complex() == pytest.approx(a.to_complex() * b.to_complex(), abs=1e-6)
    assert (a + b).to_complex() == pytest.approx(a.to_complex() + b.to_complex(), abs=1e-9)


def test_rational_helpers():
    value = CycloScalar.rational(5, Fraction(3, 4))
    assert value.is_rational()
    assert value.as_rational() == Fraction(3, 4)
    assert (value * 4) == 3
    with pytest.raises(InvalidInputError):
        CycloScalar.omega_power(5, 1).as_rational()
    with pytest.raises(InvalidInputError):
        CycloScalar.one(3) + CycloScalar.one(4)


def test_variables_and_exponents():
    assert variables_for(2, "L") == ("z1", "z2")
    assert variables_for(2, "LL") == ("z1", "z2", "z'1", "z'2")
    assert monomial_exponents(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert len(monomial_exponents(4, 3)) == 20


def test_multipoly_arithmetic():
    variables = variables_for(2, "L")
    x = MultiPoly.variable(3, variables, 0)
    y = MultiPoly.variable(3, variables, 1)

    square = (x + y) ** 2
    assert square.coefficient((1, 1)) == 2
    assert square.is_homogeneous()
    assert square.degree() == 2
    assert [exponents for exponents, _ in square.sorted_terms()] == [(2, 0), (1, 1), (0, 2)]
    assert (square - x * x - y * y) / 2 == x * y
    assert (x - x).is_zero()
    assert not (x + 1).is_homogeneous()
    assert repr(x * x + y) == "z1^2 + z2"


def test_multipoly_derivative_and_evaluation():
    variables = variables_for(2, "L")
    x = MultiPoly.variable(2, variables, 0)
    y = MultiPoly.variable(2, variables, 1)
    p = x ** 3 * y + 5 * y

    assert p.derivative(0) == 3 * x ** 2 * y
    assert p.derivative(1) == x ** 3 + 5
    assert p.evaluate([2.0, 3.0]) == pytest.approx(39.0)


def test_multipoly_rejects_other_rings():
    x = MultiPoly.variable(2, variables_for(1, "L"), 0)
    y = MultiPoly.variable(3, variables_for(1, "L"), 0)
    with pytest.raises(InvalidInputError):
        x + y


def test_substitution_follows_the_action():
    w = WreathElement(n=2, m=4, sigma=(1, 0), a=(1, 0))
    action = monomial_action(w, "L")
    variables = variables_for(2, "L")
    p = MultiPoly.monomial(4, variables, (2, 1))

    point = np.array([0.3 + 0.2j, -1.1 + 0.4j])
    assert p.substitute(action).evaluate(point) == pytest.approx(p.evaluate(action.matrix @ point))


@pytest.mark.parametrize("n, m", [(1, 2), (2, 2), (2, 3)])
def test_power_sums_are_fixed_by_symmetrization(n, m):
    generator = power_sum_generator(n, m, m, 0)
    assert reynolds(generator, n, m, "LL") == generator
    mixed = power_sum_generator(n, m, 1, 1)
    assert reynolds(mixed, n, m, "LL") == mixed


def test_unmatched_power_sum_is_not_invariant_for_m2():
    p10 = power_sum_generator(1, 2, 1, 0)
    symmetrized = reynolds(p10, 1, 2, "LL")
    assert symmetrized != p10
    assert symmetrized.is_zero()

    point = LLPoint(z=(0.7 - 0.3j,), zp=(1.2 + 0.5j,))
    moved = act_on_LL(WreathElement(n=1, m=2, sigma=(0,), a=(1,)), point)
    value = p10.evaluate(np.concatenate([point.z, point.zp]))
    assert p10.evaluate(np.concatenate([moved.z, moved.zp])) == pytest.approx(-value)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_symmetrization_kills_linear_terms(m):
    z1 = MultiPoly.variable(m, variables_for(2, "L"), 0)
    assert reynolds(z1, 2, m, "L").is_zero()


def test_symmetrization_is_idempotent():
    variables = variables_for(2, "LL")
    p = MultiPoly.monomial(3, variables, (2, 0, 1, 0)) + MultiPoly.monomial(3, variables, (1, 1, 0, 1))
    once = reynolds(p, 2, 3, "LL")
    assert reynolds(once, 2, 3, "LL") == once


def test_symmetrization_rejects_wrong_ring():
    p = MultiPoly.variable(2, variables_for(2, "L"), 0)
    with pytest.raises(InvalidInputError):
        reynolds(p, 2, 2, "LL")


def test_group_actions_cap(monkeypatch):
    monkeypatch.setattr(settings.limits, "reynolds_group_cap", 10)
    with pytest.raises(TooLarge):
        group_actions(3, 2, "L")


def test_bareiss_rank():
    m = 3
    one, omega = CycloScalar.one(m), CycloScalar.omega_power(m, 1)
    assert bareiss_rank([[one, one * 2], [one * 2, one * 4]]) == 1
    assert bareiss_rank([[one, omega], [omega, omega * omega]]) == 1
    assert bareiss_rank([[one, omega], [omega, one]]) == 2
    assert bareiss_rank([[CycloScalar.zero(m)] * 2]) == 0


def test_polynomial_rank_ignores_duplicates():
    variables = variables_for(1, "LL")
    p = MultiPoly.monomial(2, variables, (2, 0))
    q = MultiPoly.monomial(2, variables, (1, 1))
    assert polynomial_rank([p, p, q, p + q, MultiPoly.zero(2, variables)], 2) == 2


@pytest.mark.parametrize(
    "n, m, rep, d, expected",
    [
        (1, 2, "L", 2, 1),
        (1, 2, "LL", 2, 3),
        (1, 2, "L", 1, 0),
        (1, 1, "LL", 3, 4),
        (2, 2, "L", 4, 2),
    ],
)
def test_invariant_dimension_examples(n, m, rep, d, expected):
    assert invariant_dim_bruteforce(n, m, rep, d) == expected


@pytest.mark.parametrize("n, m, rep", [(2, 2, "LL"), (2, 3, "L"), (1, 3, "LL")])
def test_bruteforce_dimensions_match_molien(n, m, rep):
    series = molien(wreath_enumerate(n, m), rep, 6)
    for d in range(7):
        assert invariant_dim_bruteforce(n, m, rep, d) == series.coefficients[d]


def test_molien_closed_form():
    assert molien_closed_form_L(1, 2, 4).coefficients == (1, 0, 1, 0, 1)
    assert molien_closed_form_L(2, 1, 4).coefficients == (1, 1, 2, 2, 3)
    with pytest.raises(InvalidInputError):
        molien_closed_form_L(0, 2, 4)


def test_generators():
    pool = generators(1, 2, "LL", 2)
    assert [degree for degree, _ in pool] == [2, 2, 2]
    assert [degree for degree, _ in generators(3, 2, "L", 5)] == [2, 4]
    assert elementary_generator(2, 2, 2) == MultiPoly.monomial(2, variables_for(2, "L"), (2, 2))


def test_products_of_degree():
    pool = generators(1, 2, "LL", 2)
    products = products_of_degree(pool, 4, variables_for(1, "LL"), 2)
    assert len(products) == 6
    assert all(product.degree() == 4 for product in products)


@pytest.mark.parametrize("n, m, d", [(1, 3, 2), (2, 3, 1), (2, 4, 3)])
def test_generation_below_first_invariant_degree(n, m, d):
    report = generation_check(n, m, d, rep="L")
    assert report.molien_dim == 0
    assert report.span_dim == 0
    assert report.verdict


def test_generation_scalar_example():
    report = generation_check(1, 2, 2, R=2, rep="LL")
    assert (report.span_dim, report.molien_dim) == (3, 3)
    assert report.verdict


@pytest.mark.parametrize("n, m", [(1, 2), (1, 3), (2, 2)])
def test_double_generators_span_every_degree(n, m):
    for d in range(7):
        report = generation_check(n, m, d, rep="LL")
        assert report.verdict, (n, m, d, report.span_dim, report.molien_dim)


@pytest.mark.slow
@pytest.mark.parametrize("n, m", [(n, m) for n in (1, 2, 3) for m in (1, 2, 3)])
def test_elementary_generators_span_every_degree(n, m):
    for d in range(13):
        report = generation_check(n, m, d, rep="L")
        assert report.verdict, (n, m, d, report.span_dim, report.molien_dim)


@pytest.mark.slow
def test_generation_two_by_two():
    report = generation_check(2, 2, 4, R=4, rep="LL", search_minimal=True)
    assert report.verdict
    assert report.molien_dim == molien_dimension(2, 2, "LL", 4)
    assert report.minimal_r is not None and report.minimal_r <= 4


def test_generation_with_too_small_cutoff():
    report = generation_check(2, 2, 4, R=2, rep="LL")
    assert report.span_dim < report.molien_dim
    assert not report.verdict


def test_generation_rejects_bad_degree():
    with pytest.raises(InvalidInputError):
        generation_check(1, 2, -1)


def test_jacobian_matrix_matches_formula(rng):
    z = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    ratio = mat_det(jacobian_matrix(z, 2)) / jacobian_formula(z, 2)
    assert ratio == pytest.approx(8.0, rel=1e-8)


@pytest.mark.parametrize("n, m", [(1, 1), (1, 3), (2, 1), (2, 2), (2, 3), (3, 2)])
def test_exact_constant(n, m):
    assert exact_constant(n, m) == m ** n


def test_exact_jacobian_scalar():
    variables = variables_for(1, "L")
    assert exact_jacobian(1, 4) == MultiPoly.monomial(4, variables, (3,), 4)


def test_exact_constant_size_limit():
    with pytest.raises(InvalidInputError):
        exact_constant(4, 2)


def test_jacobian_check_scalar():
    report = jacobian_check(1, 3, 5, 42)
    assert report.constant_estimate == pytest.approx(3.0)
    assert report.relative_spread < 1e-12
    assert report.exact_constant == 3
    assert report.exact_verdict


def test_jacobian_check_numeric_only():
    report = jacobian_check(4, 2, 4, 7)
    assert report.constant_estimate == pytest.approx(16.0, rel=1e-8)
    assert report.relative_spread < 1e-6
    assert report.exact_verdict is None


def test_jacobian_check_needs_two_trials():
    with pytest.raises(InvalidInputError):
        jacobian_check(1, 2, 1, 0)


@pytest.mark.parametrize("n, m", [(1, 1), (1, 3), (2, 2), (3, 2), (2, 1)])
def test_jacobian_vanishes_off_generic_locus(n, m):
    report = jacobian_vanishing_check(n, m, 5, 42)
    assert report.verdict
    assert report.to_dto().inconsistent == []
