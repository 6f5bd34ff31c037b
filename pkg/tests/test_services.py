import json

import pytest

from src.config import settings
from src.core.dependencies.services import SUITES, get_normal_form_service, get_sample_service, get_suite
from src.core.exceptions import ConvergenceFailure, InvalidInputError, TooLarge
from src.models.domain.quiver import DoubleRepPoint, LLPoint, LPoint, QuiverShape
from src.models.domain.wreath import WreathElement
from src.models.dto.invariants import invariant_descriptors
from src.models.dto.quiver import RepPointDTO
from src.models.dto.reports import RunConfigDTO
from src.models.dto.wreath import WreathElementDTO
from src.quiver import embed_L, embed_LL, in_moment_zero_set
from src.repositories.report_repository import ReportRepository
from src.services.base import BaseVerificationService
from src.services.sample_service import SampleKind
from src.wreath import wreath_compose, wreath_inverse


def _config(n: int = 1, m: int = 2, trials: int = 5, seed: int = 42, tol: float = 1e-9, max_degree: int = 6) -> RunConfigDTO:
    return RunConfigDTO(n=n, m=m, trials=trials, seed=seed, tol=tol, max_degree=max_degree)


class _FlakySuite(BaseVerificationService):
    COMMAND = "flaky"

    def discover_checks(self) -> list[str]:
        return ["ok", "broken", "bad-input"]

    def run_check(self, check: str):
        if check == "ok":
            return [self.verdict_record("ok", True)]
        if check == "broken":
            raise ConvergenceFailure("no convergence")
        raise InvalidInputError("rejected")


class _TwoChecks(BaseVerificationService):
    COMMAND = "two"

    def discover_checks(self) -> list[str]:
        return ["first", "second"]

    def run_check(self, check: str):
        return [self.bound_record(check, float(self.rng(0).random()), 1.0)]


def test_invalid_input_aborts_the_run():
    suite = _FlakySuite(_config())
    with pytest.raises(InvalidInputError):
        suite.run()


def test_failing_check_becomes_a_record():
    class Suite(_FlakySuite):
        def discover_checks(self) -> list[str]:
            return ["ok", "broken"]

    report = Suite(_config()).run()
    assert [record.name for record in report.records] == ["ok", "broken"]
    assert not report.records[1].passed
    assert "ConvergenceFailure" in report.records[1].detail
    assert not report.passed


def test_check_streams_are_independent():
    report = _TwoChecks(_config(), include_timing=False).run()
    first, second = report.records
    assert first.residual != second.residual
    assert report.wall_time is None
    assert report.passed


def test_bound_record_margin():
    record = BaseVerificationService.bound_record("r", 0.25, 1.0)
    assert record.passed
    assert record.margin == pytest.approx(0.75)
    assert not BaseVerificationService.bound_record("r", 2.0, 1.0).passed


def test_tolerance_factor_scales_with_tol():
    assert _TwoChecks(_config(tol=1e-9)).tolerance_factor == pytest.approx(1.0)
    assert _TwoChecks(_config(tol=1e-6)).tolerance_factor == pytest.approx(1e3)


def test_suites_are_registered():
    assert set(SUITES) == {"verify-chevalley", "verify-double", "molien", "generation", "jacobian"}


def test_chevalley_suite_passes_in_rank_one():
    report = get_suite("verify-chevalley", _config(n=1, m=1, trials=10), include_timing=False).run()
    assert report.passed, [record for record in report.records if not record.passed]
    assert report.payload["molien_L"][:3] == ["1", "1", "1"]
    assert report.payload["invariants"] == [{"type": "charpoly", "k": 1}]


def test_chevalley_suite_passes_for_two_by_two():
    report = get_suite("verify-chevalley", _config(n=2, m=2, trials=8, seed=7), include_timing=False).run()
    assert report.passed, [record for record in report.records if not record.passed]
    names = {record.name for record in report.records}
    assert {"rho-identity", "orbit-invariance", "charpoly-invariance", "separation", "hilbert-series"} <= names


def test_chevalley_suite_fails_at_impossible_tolerance():
    report = get_suite("verify-chevalley", _config(n=2, m=2, trials=3, tol=1e-30), include_timing=False).run()
    assert not report.passed


def test_double_suite_passes():
    report = get_suite("verify-double", _config(n=1, m=2, trials=10), include_timing=False).run()
    assert report.passed, [record for record in report.records if not record.passed]
    assert any(record.name.startswith("generation-LL-d") for record in report.records)
    names = {record.name for record in report.records}
    assert {"gauge-stability", "wreath-stability", "jacobian-vanishing"} <= names

    words = invariant_descriptors.validate_python(report.payload["trace_words"])
    assert [(word.r, word.s) for word in words[:3]] == [(0, 2), (1, 1), (2, 0)]
    assert all(word.type == "traceword" and (word.r - word.s) % 2 == 0 for word in words)


def test_double_suite_skips_generation_over_the_group_cap(monkeypatch):
    monkeypatch.setattr(settings.limits, "group_enumeration_cap", 2)
    report = get_suite("verify-double", _config(n=1, m=4, trials=3, max_degree=4), include_timing=False).run()
    assert report.passed, [record for record in report.records if not record.passed]
    skipped = [record.name for record in report.records if record.skipped]
    assert skipped == ["generation"]


def test_molien_suite_rejects_groups_over_the_cap(monkeypatch):
    monkeypatch.setattr(settings.limits, "group_enumeration_cap", 2)
    with pytest.raises(TooLarge):
        get_suite("molien", _config(n=1, m=4, max_degree=2), include_timing=False).run()


def test_double_suite_passes_for_two_by_two():
    report = get_suite("verify-double", _config(n=2, m=2, trials=6, seed=7, max_degree=4), include_timing=False).run()
    assert report.passed, [record for record in report.records if not record.passed]


def test_molien_suite_payload():
    report = get_suite("molien", _config(n=1, m=2, max_degree=3)).run()
    assert report.passed
    assert report.payload["L"]["coefficients"] == ["1", "0", "1", "0"]
    assert report.payload["LL"]["coefficients"] == ["1", "0", "3", "0"]
    assert any(record.name == "bigraded-congruence" for record in report.records)


def test_generation_suite():
    report = get_suite("generation", _config(n=1, m=2, max_degree=4)).run()
    assert report.passed
    assert [entry["d"] for entry in report.payload["LL"]] == [0, 1, 2, 3, 4]


def test_jacobian_suite():
    report = get_suite("jacobian", _config(n=1, m=3, trials=4)).run()
    assert report.passed
    assert report.payload["jacobian"]["exact_constant"] == "3"
    assert report.payload["jacobian"]["constant_estimate"][0] == pytest.approx(3.0)


def test_normal_form_service_on_rep_point():
    point = embed_L(LPoint(z=(1.0, 2.0)), 2).to_dto()
    config = RunConfigDTO(n=2, m=2, trials=1, seed=0, tol=1e-9, max_degree=0)
    report = get_normal_form_service(point, config).run()

    assert report.passed
    z = report.payload["canonical_L"]["z"]
    assert [pair[0] for pair in z] == pytest.approx([1.0, 2.0])


def test_normal_form_service_on_scalar_double_point():
    point = DoubleRepPoint.from_matrices([[[2.0]], [[2.0]]], [[[3.0]], [[3.0]]]).to_dto()
    config = RunConfigDTO(n=1, m=2, trials=1, seed=0, tol=1e-9, max_degree=0)
    report = get_normal_form_service(point, config).run()

    assert report.payload["z1_normal_form"]["d"][0] == pytest.approx(2.0)
    assert report.payload["z1_normal_form"]["e"][0] == pytest.approx(3.0)


def _off_saturation_point() -> DoubleRepPoint:
    x = [[1.0, 0.0], [0.0, 1.0 + 2e-6]]
    y = [[1.0, 3e-5], [0.0, 1.0]]
    return DoubleRepPoint.from_matrices([x], [y])


def test_normal_form_service_reports_points_off_the_saturation():
    point = _off_saturation_point()
    assert in_moment_zero_set(point)

    config = RunConfigDTO(n=2, m=1, trials=1, seed=0, tol=1e-9, max_degree=0)
    report = get_normal_form_service(point.to_dto(), config).run()

    assert report.passed
    assert report.payload["on_saturation"] is False
    assert report.payload["canonical_pair"] is None
    assert report.records[0].verdict is False
    assert report.records[0].detail.startswith("NonDiagonalResidue")


def test_normal_form_service_on_double_point():
    point = embed_LL(LLPoint(z=(2.0, 1.0), zp=(5.0, 7.0)), 2).to_dto()
    config = RunConfigDTO(n=2, m=2, trials=1, seed=0, tol=1e-9, max_degree=0)
    report = get_normal_form_service(point, config).run()

    assert report.payload["on_saturation"] is True
    pair = report.payload["canonical_pair"]
    assert [value[0] for value in pair["z"]] == pytest.approx([1.0, 2.0])
    assert [value[0] for value in pair["zp"]] == pytest.approx([7.0, 5.0])


def test_normal_form_service_records_non_generic_input():
    point = embed_L(LPoint(z=(1.0, 1.0)), 2).to_dto()
    config = RunConfigDTO(n=2, m=2, trials=1, seed=0, tol=1e-9, max_degree=0)
    report = get_normal_form_service(point, config).run()
    assert not report.passed
    assert "NotGeneric" in report.records[0].detail


@pytest.mark.parametrize("kind", [SampleKind.REP, SampleKind.DOUBLE, SampleKind.SATURATION])
def test_sample_service(kind):
    report = get_sample_service(_config(n=2, m=3, trials=3), kind, include_timing=False).run()
    points = report.payload["points"]
    assert len(points) == 3

    parsed = [RepPointDTO.model_validate(entry["point"]) for entry in points]
    assert all(point.is_double == (kind != SampleKind.REP) for point in parsed)
    if kind == SampleKind.SATURATION:
        assert all(in_moment_zero_set(DoubleRepPoint.from_dto(point), tol=1e-8) for point in parsed)
        assert len(points[0]["planted"]["z"]) == 2


def test_sample_service_emits_wreath_elements():
    report = get_sample_service(_config(n=3, m=4, trials=6), SampleKind.WREATH, include_timing=False).run()
    entries = [WreathElementDTO.model_validate(entry["element"]) for entry in report.payload["points"]]
    assert len(entries) == 6
    for dto in entries:
        assert sorted(dto.sigma) == [1, 2, 3]
        assert all(0 <= a < 4 for a in dto.a)
        element = WreathElement.from_dto(dto)
        assert element.to_dto() == dto
        assert wreath_compose(element, wreath_inverse(element)) == WreathElement.identity(3, 4)


def test_reports_are_reproducible():
    first = get_suite("verify-double", _config(trials=4), include_timing=False).run()
    second = get_suite("verify-double", _config(trials=4), include_timing=False).run()
    assert ReportRepository.render(first) == ReportRepository.render(second)


def test_repository_round_trip(tmp_path):
    repository = ReportRepository()
    point = embed_L(LPoint(z=(1.0, 2.0)), 3).to_dto()
    path = repository.save_point(point, tmp_path / "point.json")
    assert repository.load_point(path) == point

    report = get_suite("molien", _config(max_degree=2), include_timing=False).run()
    written = repository.save_report(report, tmp_path / "out" / "report.json")
    assert json.loads(written.read_text(encoding="utf-8"))["command"] == "molien"


def test_shape_of_sampled_points():
    report = get_sample_service(_config(n=3, m=1, trials=1), SampleKind.REP).run()
    point = RepPointDTO.model_validate(report.payload["points"][0]["point"])
    assert QuiverShape(m=point.m, n=point.n) == QuiverShape(m=1, n=3)
