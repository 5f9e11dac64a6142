import numpy as np
import pytest

from hamburn.hamming import Vertex


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


def V(*symbols, q):
    return Vertex(tuple(symbols), q)
