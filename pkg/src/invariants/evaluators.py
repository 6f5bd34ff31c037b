import numpy as np

from src.core.exceptions import InvalidInputError, PathClosureError
from src.linalg import charpoly, identity, mat_mul, trace
from src.models.domain.invariants import Arrow, CharPolyInvariant, TraceWord
from src.models.domain.quiver import DoubleRepPoint, LLPoint, LPoint, RepPoint
from src.quiver import cycle_product


def elementary_symmetric(values: np.ndarray) -> np.ndarray:
    """
    e_0, ..., e_n of the given values, read off ∏(1 + v_i·t).

    :param values: complex vector
    :return: vector of length n + 1
    """

    coefficients = np.zeros(values.size + 1, dtype=np.complex128)
    coefficients[0] = 1.0
    for value in values:
        coefficients[1:] = coefficients[1:] + value * coefficients[:-1]
    return coefficients


def eval_charpoly_invariant(k: int | CharPolyInvariant, p: RepPoint) -> complex:
    """
    Coefficient of t^(n-k) in det(t·I - x_m...x_1), equal to (-1)^k·e_k of the eigenvalues.

    :param k: index 1 <= k <= n
    :param p: point of R_n
    :return: invariant value
    """

    invariant = k if isinstance(k, CharPolyInvariant) else CharPolyInvariant(k=k)
    n = p.shape.n
    if invariant.k > n:
        raise InvalidInputError(f"Characteristic polynomial index {invariant.k} exceeds n={n}.")
    return complex(charpoly(cycle_product(p)).coefficients[n - invariant.k])


def charpoly_fingerprint(p: RepPoint) -> np.ndarray:
    return np.array([eval_charpoly_invariant(k, p) for k in range(1, p.shape.n + 1)], dtype=np.complex128)


def trace_word_arrows(word: TraceWord) -> list[Arrow]:
    """
    Arrows of Tr(y_1...y_j · x_j...x_1) in the order they are applied, right to left.

    The x-block applies x_1, x_2, ... ascending cyclically; the y-block starts
    at y_j (y_m when j = 0) and descends cyclically, ending with y_1.

    :param word: trace word
    :return: arrow sequence, 0-based indices
    """

    m = word.m
    x_steps = [Arrow(kind="x", index=step % m) for step in range(word.r)]
    y_steps = [Arrow(kind="y", index=(word.j - 1 - step) % m) for step in range(word.s)]
    return x_steps + y_steps


def evaluate_path(arrows: list[Arrow], p: DoubleRepPoint) -> complex:
    """
    Trace of the product along a path that starts and ends at the first vertex.

    Every arrow must leave the vertex the path is currently at.

    :param arrows: arrows in application order
    :param p: point of T*R_n
    :return: trace of the path product
    """

    m = p.shape.m
    vertex = 0
    product = identity(p.shape.n)

    for step, arrow in enumerate(arrows):
        if arrow.tail(m) != vertex:
            raise PathClosureError(
                f"Step {step}: {arrow.kind}_{arrow.index + 1} leaves vertex {arrow.tail(m) + 1}, "
                f"path is at vertex {vertex + 1}."
            )
        matrix = p.x[arrow.index] if arrow.kind == "x" else p.y[arrow.index]
        product = mat_mul(matrix, product)
        vertex = arrow.head(m)

    if vertex != 0:
        raise PathClosureError(f"Path ends at vertex {vertex + 1}, not at vertex 1.")

    return complex(trace(product))


def eval_trace_word(w: TraceWord, p: DoubleRepPoint) -> complex:
    if w.m != p.shape.m:
        raise InvalidInputError(f"Word for m={w.m} evaluated on a quiver with m={p.shape.m}.")
    return evaluate_path(trace_word_arrows(w), p)


def trace_word_panel(m: int, max_degree: int | None = None) -> list[TraceWord]:
    """
    All trace words with r + s <= max_degree, ordered by degree then r.

    :param m: number of vertices
    :param max_degree: degree bound, defaults to 2m + 2
    :return: list of words
    """

    bound = 2 * m + 2 if max_degree is None else max_degree
    return [
        TraceWord(r=r, s=degree - r, m=m)
        for degree in range(1, bound + 1)
        for r in range(degree + 1)
        if (2 * r - degree) % m == 0
    ]


def double_fingerprint(p: DoubleRepPoint, max_degree: int | None = None) -> np.ndarray:
    panel = trace_word_panel(p.shape.m, max_degree)
    return np.array([eval_trace_word(word, p) for word in panel], dtype=np.complex128)


def eval_e_zm(k: int, l: LPoint, m: int) -> complex:
    """
    e_k(z_1^m, ..., z_n^m).

    :param k: index 1 <= k <= n
    :param l: point of L_n
    :param m: exponent
    :return: value
    """

    if not 1 <= k <= l.n:
        raise InvalidInputError(f"Elementary symmetric index must satisfy 1 <= k <= {l.n}, got {k}.")
    return complex(elementary_symmetric(l.z ** m)[k])


def eval_p_rs(r: int, s: int, l: LLPoint) -> complex:
    """
    p_{r,s} = z_1^r·z'_1^s + ... + z_n^r·z'_n^s.

    :param r: power of z
    :param s: power of z'
    :param l: point of L_n x L_n
    :return: value
    """

    if r < 0 or s < 0:
        raise InvalidInputError(f"Powers must be nonnegative, got r={r}, s={s}.")
    return complex(np.sum(l.z ** r * l.zp ** s))
