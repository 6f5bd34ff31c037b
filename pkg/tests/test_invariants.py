import numpy as np
import pytest

from src.core.exceptions import InvalidInputError, PathClosureError, ResidualTooLarge
from src.models.domain.invariants import Arrow, TraceWord
from src.models.domain.quiver import DoubleRepPoint, LLPoint, LPoint, QuiverShape
from src.invariants import (
    charpoly_fingerprint,
    diagram_check,
    double_fingerprint,
    eval_charpoly_invariant,
    eval_e_zm,
    eval_p_rs,
    eval_trace_word,
    evaluate_path,
    phi_identity_check,
    restrict_to_product,
    rho_identity_check,
    trace_word_arrows,
    trace_word_panel,
)
from src.quiver import act_gauge, act_gauge_double, embed_L, random_gauge, random_rep, random_saturation_sample, random_Z1_points


def _scalar_double(x, y) -> DoubleRepPoint:
    return DoubleRepPoint.from_matrices([[[value]] for value in x], [[[value]] for value in y])


@pytest.mark.parametrize("n", [1, 2, 3])
def test_charpoly_invariant_all_ones(n):
    point = embed_L(LPoint(z=np.ones(n)), 2)
    assert eval_charpoly_invariant(n, point) == pytest.approx((-1) ** n)


def test_charpoly_invariant_scalar():
    point = _scalar_double([2.0, 3.0, 5.0], [1.0, 1.0, 1.0]).x_part
    assert eval_charpoly_invariant(1, point) == pytest.approx(-30.0)


def test_charpoly_invariant_index_out_of_range():
    with pytest.raises(InvalidInputError):
        eval_charpoly_invariant(3, embed_L(LPoint(z=(1.0, 2.0)), 1))
    with pytest.raises(InvalidInputError):
        eval_charpoly_invariant(0, embed_L(LPoint(z=(1.0, 2.0)), 1))


def test_charpoly_fingerprint_is_gauge_invariant(shape, rng):
    point = random_rep(shape, rng)
    before = charpoly_fingerprint(point)
    after = charpoly_fingerprint(act_gauge(random_gauge(shape, rng), point))
    assert np.allclose(before, after, rtol=1e-7, atol=1e-7)


def test_trace_word_validation():
    with pytest.raises(PathClosureError):
        TraceWord(r=1, s=0, m=2)
    with pytest.raises(InvalidInputError):
        TraceWord(r=0, s=0, m=2)
    assert TraceWord(r=3, s=1, m=2).j == 1


def test_trace_word_arrows_form_a_closed_path():
    arrows = trace_word_arrows(TraceWord(r=3, s=1, m=2))
    assert arrows == [
        Arrow(kind="x", index=0),
        Arrow(kind="x", index=1),
        Arrow(kind="x", index=0),
        Arrow(kind="y", index=0),
    ]


def test_evaluate_path_rejects_open_paths():
    point = _scalar_double([1.0, 1.0], [1.0, 1.0])
    with pytest.raises(PathClosureError):
        evaluate_path([Arrow(kind="x", index=1)], point)
    with pytest.raises(PathClosureError):
        evaluate_path([Arrow(kind="x", index=0)], point)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_full_loop_on_scalar_point(m, rng):
    x = rng.standard_normal(m)
    y = rng.standard_normal(m)
    value = eval_trace_word(TraceWord(r=m, s=m, m=m), _scalar_double(x, y))
    assert value == pytest.approx(np.prod(x) * np.prod(y))


def test_trace_word_rejects_other_quiver():
    point = _scalar_double([1.0, 1.0], [1.0, 1.0])
    with pytest.raises(InvalidInputError):
        eval_trace_word(TraceWord(r=3, s=0, m=3), point)


def test_trace_word_panel_small():
    panel = trace_word_panel(2, 2)
    assert [(word.r, word.s) for word in panel] == [(0, 2), (1, 1), (2, 0)]
    assert all((word.r - word.s) % 3 == 0 for word in trace_word_panel(3))


def test_double_fingerprint_is_gauge_invariant(shape, rng):
    sample = random_saturation_sample(shape, rng)
    before = double_fingerprint(sample.point, 6)
    after = double_fingerprint(act_gauge_double(random_gauge(shape, rng), sample.point), 6)
    assert np.allclose(before, after, rtol=1e-7, atol=1e-7)


def test_elementary_symmetric_of_powers():
    assert eval_e_zm(1, LPoint(z=(1.0, 2.0)), 2) == pytest.approx(5.0)
    assert eval_e_zm(2, LPoint(z=(1.0, 2.0)), 2) == pytest.approx(4.0)
    with pytest.raises(InvalidInputError):
        eval_e_zm(3, LPoint(z=(1.0, 2.0)), 2)


def test_power_sums():
    l = LLPoint(z=(1.0, 2.0, 3.0), zp=(0.0, 0.0, 0.0))
    assert eval_p_rs(0, 0, l) == pytest.approx(3.0)
    assert eval_p_rs(2, 1, l) == 0
    assert eval_p_rs(2, 0, l) == pytest.approx(14.0)
    with pytest.raises(InvalidInputError):
        eval_p_rs(-1, 0, l)


@pytest.mark.parametrize(
    "z, m, k",
    [
        ((3.0,), 2, 1),
        ((1.0, 2.0), 1, 2),
        ((1.0, 2.0), 1, 1),
    ],
)
def test_rho_identity_examples(z, m, k):
    check = rho_identity_check(LPoint(z=z), m, k)
    assert check.residual == pytest.approx(0.0, abs=1e-12)
    assert check.holds(1e-12)


def test_rho_identity_random(shape, rng):
    l = LPoint(z=rng.standard_normal(shape.n) + 1j * rng.standard_normal(shape.n))
    for k in range(1, shape.n + 1):
        assert rho_identity_check(l, shape.m, k).holds(1e-9)


def test_phi_identity_scalar():
    check = phi_identity_check(LLPoint(z=(1.5,), zp=(0.5,)), 2, 2, 0)
    assert check.residual == pytest.approx(0.0, abs=1e-12)


def test_phi_identity_random(shape, rng):
    l = LLPoint(z=rng.standard_normal(shape.n), zp=rng.standard_normal(shape.n))
    for word in trace_word_panel(shape.m, 2 * shape.m + 2):
        assert phi_identity_check(l, shape.m, word.r, word.s).holds(1e-9)


def test_restrict_single_input_is_identity():
    point = random_Z1_points(1, 2, 3)[0]
    assembled = restrict_to_product([point])
    for before, after in zip(point.x + point.y, assembled.x + assembled.y):
        assert np.allclose(before, after)


def test_restrict_copies_give_scalar_matrices():
    point = random_Z1_points(1, 3, 4)[0]
    assembled = restrict_to_product([point, point])
    assert assembled.shape == QuiverShape(m=3, n=2)
    for matrix in assembled.x + assembled.y:
        assert np.allclose(matrix, matrix[0, 0] * np.eye(2))


def test_restrict_rejects_bad_inputs():
    with pytest.raises(InvalidInputError):
        restrict_to_product([])
    with pytest.raises(ResidualTooLarge):
        restrict_to_product([_scalar_double([1.0, 2.0], [1.0, 1.0])])
    with pytest.raises(InvalidInputError):
        restrict_to_product(random_Z1_points(1, 2, 3) + random_Z1_points(1, 3, 3))


def test_diagram_scalar_case():
    points = random_Z1_points(1, 2, 8)
    for word in trace_word_panel(2, 6):
        assert diagram_check(points, word).residual == pytest.approx(0.0, abs=1e-12)


def test_diagram_equal_points():
    point = random_Z1_points(1, 2, 9)[0]
    word = TraceWord(r=2, s=2, m=2)
    check = diagram_check([point, point, point], word)
    assert check.residual <= 1e-12 * check.scale
    assert eval_trace_word(word, restrict_to_product([point] * 3)) == pytest.approx(3 * eval_trace_word(word, point))


def test_diagram_random_points():
    points = random_Z1_points(3, 2, 10)
    check = diagram_check(points, TraceWord(r=2, s=2, m=2))
    assert check.residual < 1e-10 * check.scale
