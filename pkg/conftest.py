import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.models.domain.quiver import QuiverShape  # noqa: E402


@pytest.fixture
def rng() -> np.random.Generator:
    """
    Seeded generator shared by randomized tests.

    :return: numpy generator
    """

    return np.random.default_rng(20240611)


@pytest.fixture(params=[(1, 1), (1, 3), (2, 2), (3, 2), (2, 3)], ids=lambda shape: f"m{shape[0]}-n{shape[1]}")
def shape(request) -> QuiverShape:
    m, n = request.param
    return QuiverShape(m=m, n=n)
