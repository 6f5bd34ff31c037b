import itertools
import math

import numpy as np

from src.config import settings
from src.core.exceptions import InvalidInputError, TooLarge
from src.models.domain.wreath import WreathElement
from src.utils.seeding import make_rng


def root_of_unity(m: int, exponent: int = 1) -> complex:
    """
    ω^exponent for the fixed primitive root ω = exp(2πi/m).

    :param m: order
    :param exponent: power of ω
    :return: complex value
    """

    return complex(np.exp(2j * np.pi * (exponent % m) / m))


def group_order(n: int, m: int) -> int:
    return math.factorial(n) * m ** n


def _check_compatible(u: WreathElement, v: WreathElement) -> None:
    if (u.n, u.m) != (v.n, v.m):
        raise InvalidInputError(f"Cannot combine elements of W_{u.n} (m={u.m}) and W_{v.n} (m={v.m}).")


def wreath_compose(u: WreathElement, v: WreathElement) -> WreathElement:
    """
    Product u·v in W_n.

    With permutation matrices P_σ e_j = e_{σ(j)}, P_u·D_u^k·P_v·D_v^k equals
    P_{σ_u σ_v}·D^k where D has exponents a_u[σ_v(j)] + a_v[j]; this is the
    rule used, so ``to_gauge(u·v) = to_gauge(u)·to_gauge(v)`` componentwise.

    :param u: left factor
    :param v: right factor
    :return: product element
    """

    _check_compatible(u, v)
    sigma = tuple(u.sigma[v.sigma[j]] for j in range(u.n))
    a = tuple((u.a[v.sigma[j]] + v.a[j]) % u.m for j in range(u.n))
    return WreathElement(n=u.n, m=u.m, sigma=sigma, a=a)


def wreath_inverse(u: WreathElement) -> WreathElement:
    inverse_sigma = [0] * u.n
    for j, image in enumerate(u.sigma):
        inverse_sigma[image] = j
    a = tuple((-u.a[inverse_sigma[j]]) % u.m for j in range(u.n))
    return WreathElement(n=u.n, m=u.m, sigma=tuple(inverse_sigma), a=a)


def wreath_enumerate(n: int, m: int, cap: int | None = None) -> list[WreathElement]:
    """
    All n!·m^n elements, permutations in lexicographic order, then phases.

    :param n: number of letters
    :param m: order of the cyclic factor
    :param cap: size cap, defaults to the configured enumeration cap
    :return: list of distinct group elements
    """

    limit = settings.limits.group_enumeration_cap if cap is None else cap
    order = group_order(n, m)
    if order > limit:
        raise TooLarge(f"|W_{n}| = {order} for m={m} exceeds the cap {limit}.")

    return [
        WreathElement(n=n, m=m, sigma=sigma, a=a)
        for sigma in itertools.permutations(range(n))
        for a in itertools.product(range(m), repeat=n)
    ]


def random_wreath_element(n: int, m: int, seed: int | np.random.Generator) -> WreathElement:
    rng = make_rng(seed)
    return WreathElement(n=n, m=m, sigma=tuple(int(i) for i in rng.permutation(n)),
                         a=tuple(int(a) for a in rng.integers(0, m, size=n)))
