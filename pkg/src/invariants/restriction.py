from dataclasses import dataclass

import numpy as np

from src.config import settings
from src.core.exceptions import InvalidInputError, ResidualTooLarge
from src.models.domain.invariants import TraceWord
from src.models.domain.quiver import DoubleRepPoint, LLPoint, LPoint, QuiverShape
from src.invariants.evaluators import (
    elementary_symmetric,
    eval_charpoly_invariant,
    eval_e_zm,
    eval_p_rs,
    eval_trace_word,
)
from src.quiver import embed_L, embed_LL, max_moment_residual, moment_scale


@dataclass(frozen=True, slots=True)
class IdentityCheck:
    """
    Absolute residual of an identity and the magnitude it is measured against.
    """

    residual: float
    scale: float

    @property
    def relative(self) -> float:
        return self.residual / self.scale

    def holds(self, tol: float) -> bool:
        return self.residual <= tol * self.scale


def rho_identity_check(l: LPoint, m: int, k: int) -> IdentityCheck:
    """
    |coefficient of t^(n-k) in det(tI - x_m...x_1) at embed_L(z) - (-1)^k·e_k(z^m)|.

    :param l: point of L_n
    :param m: number of vertices
    :param k: index 1 <= k <= n
    :return: residual with scale max(1, e_k(|z|^m))
    """

    invariant = eval_charpoly_invariant(k, embed_L(l, m))
    expected = (-1) ** k * eval_e_zm(k, l, m)
    scale = max(1.0, float(elementary_symmetric(np.abs(l.z) ** m)[k].real))
    return IdentityCheck(residual=abs(invariant - expected), scale=scale)


def phi_identity_check(l: LLPoint, m: int, r: int, s: int) -> IdentityCheck:
    """
    |trace word (r, s) at embed_LL(l) - p_{r,s}(l)|.

    :param l: point of L_n x L_n
    :param m: number of vertices
    :param r: x-steps
    :param s: y-steps, r ≡ s (mod m)
    :return: residual with scale max(1, Σ|z|^r·|z'|^s)
    """

    word = TraceWord(r=r, s=s, m=m)
    value = eval_trace_word(word, embed_LL(l, m))
    expected = eval_p_rs(r, s, l)
    scale = max(1.0, float(np.sum(np.abs(l.z) ** r * np.abs(l.zp) ** s)))
    return IdentityCheck(residual=abs(value - expected), scale=scale)


def restrict_to_product(points: list[DoubleRepPoint], shape: QuiverShape | None = None) -> DoubleRepPoint:
    """
    Assemble n points of Z_1 into the diagonal point of Z_n they define.

    The scalars of the k-th input become the (k, k) entries of all 2m matrices.

    :param points: scalar double points sharing m
    :param shape: expected output shape, checked when given
    :return: diagonal point of Z_n
    """

    if not points:
        raise InvalidInputError("Need at least one point of Z_1.")

    m = points[0].shape.m
    for index, point in enumerate(points):
        if point.shape != QuiverShape(m=m, n=1):
            raise InvalidInputError(f"Input {index} has shape {point.shape}, expected m={m}, n=1.")
        residual = max_moment_residual(point)
        if residual > settings.tolerances.moment * moment_scale(point):
            raise ResidualTooLarge(f"Input {index} has moment residual {residual:.3e}.")

    target = QuiverShape(m=m, n=len(points))
    if shape is not None and shape != target:
        raise InvalidInputError(f"Assembled shape {target} differs from requested {shape}.")

    def assemble(component: str, vertex: int) -> np.ndarray:
        return np.diag([getattr(point, component)[vertex][0, 0] for point in points])

    return DoubleRepPoint(
        shape=target,
        x=tuple(assemble("x", vertex) for vertex in range(m)),
        y=tuple(assemble("y", vertex) for vertex in range(m)),
    )


def diagram_check(scalars: list[DoubleRepPoint], word: TraceWord) -> IdentityCheck:
    """
    Trace word on the assembled diagonal point versus the sum of its values on the factors.

    :param scalars: n points of Z_1
    :param word: trace word
    :return: residual with scale max(1, Σ|value_k|)
    """

    assembled = restrict_to_product(scalars)
    pieces = [eval_trace_word(word, point) for point in scalars]
    value = eval_trace_word(word, assembled)
    scale = max(1.0, float(sum(abs(piece) for piece in pieces)))
    return IdentityCheck(residual=abs(value - sum(pieces)), scale=scale)
