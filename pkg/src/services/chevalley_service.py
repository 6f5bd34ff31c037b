import numpy as np

from src.config import settings
from src.exact import jacobian_vanishing_check, molien_closed_form_L
from src.invariants import charpoly_fingerprint, rho_identity_check
from src.linalg import diag_matrix, frobenius_norm
from src.models.domain.invariants import CharPolyInvariant
from src.models.domain.normal_form import CanonicalL
from src.models.domain.quiver import QuiverShape, RepPoint
from src.models.domain.wreath import Representation, WreathElement
from src.models.dto.invariants import invariant_descriptors
from src.models.dto.reports import CheckRecordDTO
from src.normal_form import branch_cut_distance, to_canonical_L
from src.quiver import act_gauge, embed_L, is_generic, random_gauge, random_L_point, random_rep
from src.services.base import BaseVerificationService
from src.utils.logger import logger
from src.utils.seeding import derive_seed
from src.wreath import act_on_L, group_order, molien, random_wreath_element, wreath_enumerate


def witness_residual(p: RepPoint, canonical: CanonicalL) -> float:
    """
    Relative distance of the gauged point from embed_L(z).

    :param p: original point
    :param canonical: its canonical form
    :return: max_i ‖(w·p)_i - diag(z)‖_F / max(1, ‖diag(z)‖_F)
    """

    target = diag_matrix(canonical.z)
    gauged = act_gauge(canonical.witness, p)
    return max(frobenius_norm(matrix - target) for matrix in gauged.x) / max(1.0, frobenius_norm(target))


def wreath_sample(n: int, m: int, rng: np.random.Generator) -> list[WreathElement]:
    """
    The whole group when it is small enough, otherwise uniformly drawn elements.
    """

    if group_order(n, m) <= min(settings.limits.stability_group_cap, settings.limits.group_enumeration_cap):
        return wreath_enumerate(n, m)
    return [random_wreath_element(n, m, rng) for _ in range(settings.limits.stability_group_cap)]


class ChevalleyService(BaseVerificationService):
    """
    Verification suite for restriction from R_n to L_n.

    Covers the ρ-identity, normal forms with witnesses and their orbit
    invariance, separation of orbits by char-poly invariants, the Hilbert
    series comparison, stability of the generic loci and the zero locus of
    the Jacobian of L_n -> L_n/W_n.
    """

    COMMAND = "verify-chevalley"
    SKIP_TOO_LARGE = True
    GAUGES_PER_POINT: int = 10
    SEPARATION_GAP: float = 1e-4
    SEPARATION_SIGNAL: float = 1e-6
    VANISHING_TRIALS: int = 10

    def __init__(self, *args, **kwargs) -> None:
        super().__init__(*args, **kwargs)
        self._shape = QuiverShape(m=self.config.m, n=self.config.n)

    def discover_checks(self) -> list[str]:
        return [
            "rho-identity",
            "witness-soundness",
            "orbit-invariance",
            "separation",
            "hilbert-series",
            "stability",
            "jacobian-vanishing",
        ]

    def run_check(self, check: str) -> list[CheckRecordDTO]:
        handlers = {
            "rho-identity": self._rho_identity,
            "witness-soundness": self._witness_soundness,
            "orbit-invariance": self._orbit_invariance,
            "separation": self._separation,
            "hilbert-series": self._hilbert_series,
            "stability": self._stability,
            "jacobian-vanishing": self._jacobian_vanishing,
        }
        return handlers[check]()

    def _generic_point(self, rng: np.random.Generator) -> RepPoint | None:
        point = random_rep(self._shape, rng)
        return point if is_generic(point).generic else None

    def _rho_identity(self) -> list[CheckRecordDTO]:
        worst = 0.0
        for trial in range(self.config.trials):
            point = random_L_point(self.config.n, self.rng(trial))
            for k in range(1, self.config.n + 1):
                worst = max(worst, rho_identity_check(point, self.config.m, k).relative)
        return [self.bound_record("rho-identity", worst, self.config.tol)]

    def _witness_soundness(self) -> list[CheckRecordDTO]:
        worst, skipped = 0.0, 0
        for trial in range(self.config.trials):
            point = self._generic_point(self.rng(trial))
            if point is None:
                skipped += 1
                continue
            worst = max(worst, witness_residual(point, to_canonical_L(point)))

        bound = settings.tolerances.witness * self.tolerance_factor
        return [self.bound_record("witness-soundness", worst, bound, detail=f"skipped={skipped}")]

    def _orbit_invariance(self) -> list[CheckRecordDTO]:
        worst_form, worst_invariant, skipped = 0.0, 0.0, 0
        m = self.config.m
        self.set_payload(
            "invariants",
            invariant_descriptors.dump_python([CharPolyInvariant(k=k).to_dto() for k in range(1, self.config.n + 1)]),
        )

        for trial in range(self.config.trials):
            rng = self.rng(trial)
            point = self._generic_point(rng)
            if point is None:
                skipped += 1
                continue

            reference = to_canonical_L(point).z
            if branch_cut_distance(reference ** m) < settings.tolerances.branch_margin:
                skipped += 1
                continue

            fingerprint = charpoly_fingerprint(point)
            form_scale = max(1.0, float(np.max(np.abs(reference))))
            invariant_scale = max(1.0, float(np.max(np.abs(fingerprint))))

            for _ in range(self.GAUGES_PER_POINT):
                moved = act_gauge(random_gauge(self._shape, rng), point)
                worst_form = max(worst_form, float(np.max(np.abs(to_canonical_L(moved).z - reference))) / form_scale)
                worst_invariant = max(
                    worst_invariant,
                    float(np.max(np.abs(charpoly_fingerprint(moved) - fingerprint))) / invariant_scale,
                )

        bound = settings.tolerances.orbit * self.tolerance_factor
        return [
            self.bound_record("orbit-invariance", worst_form, bound, detail=f"skipped={skipped}"),
            self.bound_record("charpoly-invariance", worst_invariant, bound),
        ]

    def _separation(self) -> list[CheckRecordDTO]:
        forms, fingerprints = [], []
        for trial in range(min(self.config.trials, settings.limits.separation_points)):
            point = self._generic_point(self.rng(trial))
            if point is not None:
                forms.append(to_canonical_L(point).z)
                fingerprints.append(charpoly_fingerprint(point))

        violations, pairs = 0, 0
        for i in range(len(forms)):
            for j in range(i + 1, len(forms)):
                if float(np.max(np.abs(forms[i] - forms[j]))) <= self.SEPARATION_GAP:
                    continue
                pairs += 1
                scale = max(1.0, float(np.max(np.abs(fingerprints[i]))), float(np.max(np.abs(fingerprints[j]))))
                if float(np.max(np.abs(fingerprints[i] - fingerprints[j]))) <= self.SEPARATION_SIGNAL * scale:
                    violations += 1

        return [self.verdict_record("separation", violations == 0, detail=f"pairs={pairs}, violations={violations}")]

    def _hilbert_series(self) -> list[CheckRecordDTO]:
        n, m, degree = self.config.n, self.config.m, self.config.max_degree
        group_series = molien(wreath_enumerate(n, m), Representation.L, degree)
        closed = molien_closed_form_L(n, m, degree)
        self.set_payload("molien_L", [str(c) for c in group_series.coefficients])
        return [self.verdict_record("hilbert-series", group_series.coefficients == closed.coefficients)]

    def _stability(self) -> list[CheckRecordDTO]:
        gauge_violations = 0
        for trial in range(self.config.trials):
            rng = self.rng(trial)
            point = self._generic_point(rng)
            if point is not None and not is_generic(act_gauge(random_gauge(self._shape, rng), point)).generic:
                gauge_violations += 1

        rng = self.rng(self.config.trials)
        base = random_L_point(self.config.n, rng)
        wreath_violations = 0
        if is_generic(embed_L(base, self.config.m)).generic:
            for element in wreath_sample(self.config.n, self.config.m, rng):
                if not is_generic(embed_L(act_on_L(element, base), self.config.m)).generic:
                    wreath_violations += 1
        else:
            logger.warning("Stability base point is not generic; wreath stability left unchecked")

        return [
            self.verdict_record("gauge-stability", gauge_violations == 0, detail=f"violations={gauge_violations}"),
            self.verdict_record("wreath-stability", wreath_violations == 0, detail=f"violations={wreath_violations}"),
        ]

    def _jacobian_vanishing(self) -> list[CheckRecordDTO]:
        trials = min(self.config.trials, self.VANISHING_TRIALS)
        report = jacobian_vanishing_check(self.config.n, self.config.m, trials, derive_seed(self.config.seed, 0))
        inconsistent = [sample.label for sample in report.samples if not sample.consistent]
        return [self.verdict_record("jacobian-vanishing", report.verdict,
                                    detail=f"checked={len(report.samples)}, inconsistent={inconsistent}")]
