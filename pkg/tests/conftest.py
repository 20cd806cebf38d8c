import numpy as np
import pytest

from rp2quant.manifold import build_quadrature


@pytest.fixture(scope="session")
def grid8():
    return build_quadrature(8)


@pytest.fixture(scope="session")
def grid9():
    return build_quadrature(9)


@pytest.fixture()
def rng():
    return np.random.default_rng(20240817)
