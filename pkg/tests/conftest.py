import numpy as np
import pytest

from jordanalg.random_gen import GenConfig, trial_elements
from jordanalg.shapes import (
    albert_shape,
    chm_shape,
    oherm_shape,
    qhm_shape,
    rsm_shape,
    spin_shape,
)

FIVE_KINDS = [rsm_shape(5), chm_shape(5), qhm_shape(5), albert_shape(), spin_shape(5)]
MATRIX_SHAPES = [rsm_shape(5), chm_shape(5), qhm_shape(5), albert_shape(), oherm_shape(4)]


def draw_triple(shape, seed=0, trial=0):
    """One (x, y, z) triple from the same substream scheme the suites use."""
    kwargs = {"spin_n": shape.n} if shape.kind == "spin" else {"d": shape.d}
    cfg = GenConfig(seed=seed, n_columns=3, **kwargs)
    v = trial_elements(shape, cfg, trial)
    return v[0], v[1], v[2]


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
