import numpy as np

_MASK = (1 << 64) - 1
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(state: int) -> int:
    """
    One splitmix64 output for the given 64-bit state.

    :param state: unsigned 64-bit integer
    :return: mixed unsigned 64-bit integer
    """

    z = (state + _GOLDEN_GAMMA) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def derive_seed(seed: int, index: int) -> int:
    """
    Seed of trial ``index``: the (index+1)-th output of the splitmix64 stream started at ``seed``.

    Depends only on (seed, index), never on execution order.

    :param seed: run seed
    :param index: zero-based trial index
    :return: per-trial 64-bit seed
    """

    return splitmix64((seed + index * _GOLDEN_GAMMA) & _MASK)


def make_rng(seed: int | np.random.Generator) -> np.random.Generator:
    """
    PCG64 generator for an integer seed; generators pass through unchanged.

    :param seed: integer seed or an existing generator
    :return: numpy generator
    """

    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.PCG64(seed & _MASK))
