import numpy as np
import pytest

from rotinv import PointCloud


def random_cloud(rng, n=20, weighted=True):
    xs = rng.uniform(-1.0, 1.0, n)
    ys = rng.uniform(-1.0, 1.0, n)
    ws = rng.uniform(0.5, 2.0, n) if weighted else np.ones(n)
    return PointCloud(xs, ys, ws)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
