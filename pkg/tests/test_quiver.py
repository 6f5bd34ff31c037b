import numpy as np
import pytest

from src.core.exceptions import InvalidInputError, SingularMatrix
from src.linalg import condition_estimate, frobenius_norm
from src.models.domain.quiver import DoubleRepPoint, GaugeElement, LLPoint, LPoint, QuiverShape, RepPoint
from src.quiver import (
    act_gauge,
    act_gauge_double,
    cycle_product,
    diagonal_extraction,
    embed_L,
    embed_LL,
    in_moment_zero_set,
    is_generic,
    max_moment_residual,
    moment_residual,
    random_double_rep,
    random_gauge,
    random_L_point,
    random_rep,
    random_saturation_sample,
    random_Z1_points,
)


def _scalar_gauge(*values) -> GaugeElement:
    return GaugeElement(shape=QuiverShape(m=len(values), n=1), g=tuple([[value]] for value in values))


def test_quiver_shape_rejects_empty():
    with pytest.raises(InvalidInputError):
        QuiverShape(m=0, n=1)


def test_rep_point_from_matrices_infers_shape():
    point = RepPoint.from_matrices([np.eye(2), 2 * np.eye(2), 3 * np.eye(2)])
    assert point.shape == QuiverShape(m=3, n=2)


def test_rep_point_rejects_wrong_sizes():
    with pytest.raises(InvalidInputError):
        RepPoint(shape=QuiverShape(m=2, n=2), x=(np.eye(2), np.eye(3)))


def test_act_gauge_scalar_example():
    point = RepPoint.from_matrices([[[2.0]], [[3.0]]])
    gauged = act_gauge(_scalar_gauge(2.0, 5.0), point)

    assert gauged.x[0][0, 0] == pytest.approx(0.8)
    assert gauged.x[1][0, 0] == pytest.approx(7.5)
    assert cycle_product(gauged)[0, 0] == pytest.approx(6.0)


def test_act_gauge_double_scalar_example():
    point = DoubleRepPoint.from_matrices([[[2.0]], [[3.0]]], [[[1.0]], [[4.0]]])
    gauged = act_gauge_double(_scalar_gauge(2.0, 5.0), point)

    assert gauged.y[0][0, 0] == pytest.approx(1.0 * 5.0 / 2.0)
    assert gauged.y[1][0, 0] == pytest.approx(4.0 * 2.0 / 5.0)


def test_act_gauge_rejects_singular_component():
    point = RepPoint.from_matrices([[[1.0]], [[1.0]]])
    with pytest.raises(SingularMatrix):
        act_gauge(_scalar_gauge(0.0, 1.0), point)


def test_act_gauge_rejects_shape_mismatch(rng):
    point = random_rep(QuiverShape(m=2, n=2), rng)
    with pytest.raises(InvalidInputError):
        act_gauge(GaugeElement.identity(QuiverShape(m=3, n=2)), point)


def test_identity_gauge_acts_trivially(shape, rng):
    point = random_double_rep(shape, rng)
    gauged = act_gauge_double(GaugeElement.identity(shape), point)
    for before, after in zip(point.x + point.y, gauged.x + gauged.y):
        assert np.allclose(before, after, atol=1e-14)


def test_action_composition_law(shape, rng):
    point = random_double_rep(shape, rng)
    g = random_gauge(shape, rng)
    h = random_gauge(shape, rng)

    twice = act_gauge_double(g, act_gauge_double(h, point))
    once = act_gauge_double(h.compose(g), point)
    for left, right in zip(twice.x + twice.y, once.x + once.y):
        assert np.allclose(left, right, atol=1e-8 * max(1.0, frobenius_norm(left)))


def test_cycle_product_order():
    point = RepPoint.from_matrices([[[2.0]], [[3.0]], [[5.0]]])
    assert cycle_product(point)[0, 0] == pytest.approx(30.0)

    a = np.array([[1.0, 1.0], [0.0, 1.0]])
    b = np.array([[1.0, 0.0], [1.0, 1.0]])
    assert np.allclose(cycle_product(RepPoint.from_matrices([a, b])), b @ a)


def test_cycle_product_conjugated_by_gauge(shape, rng):
    point = random_rep(shape, rng)
    g = random_gauge(shape, rng)
    before = cycle_product(point)
    after = cycle_product(act_gauge(g, point))
    expected = np.linalg.inv(g.g[0]) @ before @ g.g[0]
    assert np.allclose(after, expected, atol=1e-8 * max(1.0, frobenius_norm(before)))


def test_embedded_pairs_satisfy_moment_equations(shape, rng):
    l = LLPoint(z=rng.standard_normal(shape.n), zp=rng.standard_normal(shape.n))
    point = embed_LL(l, shape.m)
    assert all(frobenius_norm(residual) == 0.0 for residual in moment_residual(point))
    assert in_moment_zero_set(point)


def test_random_double_rep_is_off_moment_set():
    point = random_double_rep(QuiverShape(m=2, n=2), 11)
    assert max_moment_residual(point) > 1e-3
    assert not in_moment_zero_set(point)


def test_saturation_sample_lies_on_moment_set(shape, rng):
    sample = random_saturation_sample(shape, rng)
    assert in_moment_zero_set(sample.point, tol=1e-8)


def test_moment_set_is_gauge_stable(shape, rng):
    l = LLPoint(z=rng.standard_normal(shape.n), zp=rng.standard_normal(shape.n))
    gauged = act_gauge_double(random_gauge(shape, rng), embed_LL(l, shape.m))
    assert in_moment_zero_set(gauged, tol=1e-8)


@pytest.mark.parametrize(
    "z, generic",
    [
        ((1.0, 2.0), True),
        ((1.0, 1.0), False),
        ((0.0, 1.0), False),
        ((1.0, -1.0), True),
    ],
)
def test_is_generic_examples(z, generic):
    report = is_generic(embed_L(LPoint(z=z), 1))
    assert bool(report) is generic


def test_is_generic_depends_on_powers():
    assert not is_generic(embed_L(LPoint(z=(1.0, -1.0)), 2))
    assert is_generic(embed_L(LPoint(z=(1.0, 1j)), 3))


def test_is_generic_zero_product():
    report = is_generic(RepPoint.from_matrices([np.zeros((2, 2)), np.eye(2)]))
    assert not report
    assert report.min_modulus == 0.0


def test_near_degenerate_flag():
    report = is_generic(embed_L(LPoint(z=(1.0, 1.0 + 3e-6)), 1))
    assert report.generic
    assert report.near_degenerate


@pytest.mark.parametrize("shape", [QuiverShape(m=2, n=2), QuiverShape(m=4, n=3)])
def test_genericity_survives_gauges_with_tolerance_slack(shape):
    for seed in range(100):
        point = random_rep(shape, seed)
        moved = act_gauge(random_gauge(shape, seed + 10_000), point)
        if is_generic(point, tol=1e-5):
            assert is_generic(moved, tol=1e-7), seed
        if not is_generic(point, tol=1e-7):
            assert not is_generic(moved, tol=1e-5), seed


@pytest.mark.parametrize("m", [1, 2, 4])
def test_non_genericity_survives_gauges(m):
    point = embed_L(LPoint(z=(0.0, 1.5, -0.7)), m)
    shape = QuiverShape(m=m, n=3)
    for seed in range(20):
        assert not is_generic(act_gauge(random_gauge(shape, seed), point), tol=1e-5), seed


@pytest.mark.parametrize("n, m", [(1, 1), (2, 2), (3, 2), (2, 4), (4, 4)])
def test_random_points_are_almost_always_generic(n, m):
    shape = QuiverShape(m=m, n=n)
    generic = sum(bool(is_generic(random_rep(shape, seed))) for seed in range(100))
    assert generic >= 99


def test_diagonal_extraction():
    diagonal, deviation = diagonal_extraction((np.diag([1.0, 2.0]), np.diag([1.0, 2.0])))
    assert np.allclose(diagonal, [1.0, 2.0])
    assert deviation == 0.0

    _, deviation = diagonal_extraction((np.diag([1.0, 2.0]), np.array([[1.0, 0.5], [0.0, 2.0]])))
    assert deviation == pytest.approx(0.5)


def test_embed_L_components():
    point = embed_L(LPoint(z=(1.0, 2.0)), 3)
    assert point.shape == QuiverShape(m=3, n=2)
    assert all(np.array_equal(matrix, np.diag([1.0, 2.0])) for matrix in point.x)


def test_sampling_is_deterministic(shape):
    first = random_rep(shape, 7)
    second = random_rep(shape, 7)
    assert all(np.array_equal(a, b) for a, b in zip(first.x, second.x))
    assert not np.array_equal(random_L_point(3, 7).z, random_L_point(3, 8).z)


def test_random_gauge_is_well_conditioned(shape, rng):
    gauge = random_gauge(shape, rng)
    assert all(condition_estimate(component) < 1e6 for component in gauge.g)


def test_random_Z1_points():
    points = random_Z1_points(4, 3, 5)
    assert len(points) == 4
    assert all(point.shape == QuiverShape(m=3, n=1) for point in points)
    assert all(in_moment_zero_set(point, tol=1e-8) for point in points)
