from dataclasses import dataclass

import numpy as np

from src.config import settings
from src.core.exceptions import SamplingFailure
from src.linalg import condition_estimate
from src.models.domain.quiver import DoubleRepPoint, GaugeElement, LLPoint, LPoint, QuiverShape, RepPoint
from src.quiver.actions import act_gauge_double
from src.quiver.embeddings import embed_LL
from src.utils.logger import logger
from src.utils.seeding import make_rng

Seed = int | np.random.Generator


@dataclass(frozen=True, slots=True)
class SaturationSample:
    """
    A sampled point of the G_n-saturation of L_n x L_n with its planted data.
    """

    point: DoubleRepPoint
    planted: LLPoint
    gauge: GaugeElement


def complex_gaussian(rng: np.random.Generator, size) -> np.ndarray:
    """
    Standard complex Gaussian entries: real parts drawn first, then imaginary parts.

    :param rng: generator
    :param size: output shape
    :return: array with E|w|² = 1
    """

    real = rng.standard_normal(size)
    imag = rng.standard_normal(size)
    return (real + 1j * imag) / np.sqrt(2.0)


def random_rep(shape: QuiverShape, seed: Seed) -> RepPoint:
    rng = make_rng(seed)
    return RepPoint(shape=shape, x=tuple(complex_gaussian(rng, (shape.n, shape.n)) for _ in range(shape.m)))


def random_double_rep(shape: QuiverShape, seed: Seed) -> DoubleRepPoint:
    rng = make_rng(seed)
    x = tuple(complex_gaussian(rng, (shape.n, shape.n)) for _ in range(shape.m))
    y = tuple(complex_gaussian(rng, (shape.n, shape.n)) for _ in range(shape.m))
    return DoubleRepPoint(shape=shape, x=x, y=y)


def random_gauge(shape: QuiverShape, seed: Seed) -> GaugeElement:
    """
    Gaussian gauge element, resampled until every component has condition estimate below the cap.

    :param shape: quiver shape
    :param seed: integer seed or generator
    :return: well-conditioned gauge element
    """

    rng = make_rng(seed)
    cap = settings.limits.gauge_condition_cap

    for attempt in range(settings.limits.sampling_attempts):
        components = tuple(complex_gaussian(rng, (shape.n, shape.n)) for _ in range(shape.m))
        if all(condition_estimate(component) < cap for component in components):
            return GaugeElement(shape=shape, g=components)
        logger.debug(f"Rejected ill-conditioned gauge sample (attempt {attempt + 1})")

    raise SamplingFailure(
        f"No gauge element with condition below {cap:.1e} in {settings.limits.sampling_attempts} attempts."
    )


def random_L_point(n: int, seed: Seed) -> LPoint:
    return LPoint(z=complex_gaussian(make_rng(seed), n))


def random_LL_point(n: int, seed: Seed) -> LLPoint:
    rng = make_rng(seed)
    z = complex_gaussian(rng, n)
    zp = complex_gaussian(rng, n)
    return LLPoint(z=z, zp=zp)


def random_saturation_sample(shape: QuiverShape, seed: Seed) -> SaturationSample:
    """
    Draw an LL-point, then a gauge, from one generator, and gauge the embedded point.

    :param shape: quiver shape
    :param seed: integer seed or generator
    :return: sampled point of Z_n with the planted LL-point and gauge
    """

    rng = make_rng(seed)
    planted = random_LL_point(shape.n, rng)
    gauge = random_gauge(shape, rng)
    point = act_gauge_double(gauge, embed_LL(planted, shape.m))
    return SaturationSample(point=point, planted=planted, gauge=gauge)


def random_Z_point(shape: QuiverShape, seed: Seed) -> DoubleRepPoint:
    return random_saturation_sample(shape, seed).point


def random_Z1_points(count: int, m: int, seed: Seed) -> list[DoubleRepPoint]:
    """
    Independent scalar points of Z_1 from the saturation of L_1 x L_1.

    :param count: number of points
    :param m: number of vertices
    :param seed: integer seed or generator
    :return: list of n = 1 double points
    """

    rng = make_rng(seed)
    shape = QuiverShape(m=m, n=1)
    return [random_Z_point(shape, rng) for _ in range(count)]
