import random

import pytest

from boxrig.geom import validate
from boxrig.lab import gen_two_diagonals, gen_uniform


@pytest.fixture
def chain3():
    return validate([(1, 1), (2, 2), (3, 3)])


@pytest.fixture
def antichain3():
    return validate([(1, 3), (2, 2), (3, 1)])


def small_uniform(n, seed):
    """Uniform instance on a small coordinate range (keeps grids tight)."""
    rng = random.Random(seed)
    xs = rng.sample(range(4 * n), n)
    ys = rng.sample(range(4 * n), n)
    return validate(list(zip(xs, ys)))


def two_diagonals(m):
    return gen_two_diagonals(m).ps


def uniform(n, seed):
    return gen_uniform(n, seed).ps
