"""Seeded random element generation.

The stream is fully pinned down so golden files are portable:

* Bit source: numpy's Philox counter-based generator keyed with the
  2-word key ``[seed, substream]`` (both uint64).  Substream 0 serves
  direct generation; verification suites use substream = trial index so
  trial k is reproducible regardless of how many trials run.
* Uniforms: each raw 64-bit word w maps to (w >> 11) * 2^-53 + 2^-54,
  an open-interval (0, 1) double.
* Normals: Box-Muller on consecutive uniform pairs; an output block of
  m values consumes 2*ceil(m/2) raw words, pairs (u1, u2) taken from
  even/odd positions, z = sqrt(-2 ln u1) * (cos, sin)(2 pi u2), cosine
  value first.  Packed blocks fill column by column.

``rounded_normal_2dp`` rounds each draw to 2 decimals, giving displays
the look of hand-entered data; identities hold either way.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .elements import JordanVector
from .errors import ConfigError
from .shapes import (
    AlgebraShape,
    albert_shape,
    chm_shape,
    oherm_shape,
    qhm_shape,
    rsm_shape,
    spin_shape,
)

__all__ = [
    "GenConfig",
    "random_albert",
    "random_chm",
    "random_elements",
    "random_oherm",
    "random_qhm",
    "random_rsm",
    "random_spin",
    "trial_elements",
]

DISTRIBUTIONS = ("standard_normal", "rounded_normal_2dp")


@dataclass(frozen=True)
class GenConfig:
    """Generation parameters; defaults give 3 columns of d=5 / n=5 draws."""

    seed: int = 0
    n_columns: int = 3
    d: int = 5
    spin_n: int = 5
    distribution: str = "standard_normal"
    round_display: bool = False

    def __post_init__(self):
        if not 0 <= int(self.seed) < 2**64:
            raise ConfigError("seed must fit in 64 unsigned bits")
        if self.n_columns < 1:
            raise ConfigError("n_columns must be >= 1")
        if self.d < 1:
            raise ConfigError("d must be >= 1")
        if self.spin_n < 1:
            raise ConfigError("spin_n must be >= 1")
        if self.distribution not in DISTRIBUTIONS:
            raise ConfigError(
                f"distribution must be one of {DISTRIBUTIONS}, got {self.distribution!r}"
            )


def _raw_words(seed: int, substream: int, count: int) -> np.ndarray:
    key = np.array([seed, substream], dtype=np.uint64)
    bits = np.random.Generator(np.random.Philox(key=key))
    return bits.integers(0, 2**64, size=count, dtype=np.uint64, endpoint=False)


def _normals(seed: int, substream: int, count: int) -> np.ndarray:
    """Box-Muller normals with the documented word consumption order."""
    pairs = (count + 1) // 2
    raw = _raw_words(seed, substream, 2 * pairs)
    u = (raw >> np.uint64(11)).astype(np.float64) * 2.0**-53 + 2.0**-54
    u1, u2 = u[0::2], u[1::2]
    radius = np.sqrt(-2.0 * np.log(u1))
    angle = 2.0 * np.pi * u2
    out = np.empty(2 * pairs)
    out[0::2] = radius * np.cos(angle)
    out[1::2] = radius * np.sin(angle)
    return out[:count]


def _check_consistent(shape: AlgebraShape, cfg: GenConfig):
    if shape.kind == "spin":
        if shape.n != cfg.spin_n:
            raise ConfigError(f"cfg.spin_n={cfg.spin_n} but shape has n={shape.n}")
    elif shape.d != cfg.d:
        raise ConfigError(f"cfg.d={cfg.d} but shape has d={shape.d}")


def _draw(shape: AlgebraShape, cfg: GenConfig, substream: int) -> JordanVector:
    count = shape.packed_length * cfg.n_columns
    values = _normals(int(cfg.seed), substream, count)
    if cfg.distribution == "rounded_normal_2dp":
        values = np.round(values, 2)
    data = values.reshape(shape.packed_length, cfg.n_columns, order="F")
    return JordanVector(shape, data)


def random_elements(shape: AlgebraShape, cfg: GenConfig) -> JordanVector:
    """n_columns independent elements, deterministic under (seed, shape, cfg)."""
    _check_consistent(shape, cfg)
    return _draw(shape, cfg, substream=0)


def trial_elements(shape: AlgebraShape, cfg: GenConfig, trial: int) -> JordanVector:
    """Per-trial substream draw: trial k sees the same data at any trial count."""
    if trial < 0:
        raise ConfigError("trial index must be >= 0")
    _check_consistent(shape, cfg)
    return _draw(shape, cfg, substream=trial)


def _cfg(seed, n, distribution, **kw) -> GenConfig:
    return GenConfig(seed=seed, n_columns=n, distribution=distribution, **kw)


def random_rsm(n=3, d=5, seed=0, distribution="standard_normal") -> JordanVector:
    return random_elements(rsm_shape(d), _cfg(seed, n, distribution, d=d))


def random_chm(n=3, d=5, seed=0, distribution="standard_normal") -> JordanVector:
    return random_elements(chm_shape(d), _cfg(seed, n, distribution, d=d))


def random_qhm(n=3, d=5, seed=0, distribution="standard_normal") -> JordanVector:
    return random_elements(qhm_shape(d), _cfg(seed, n, distribution, d=d))


def random_albert(n=3, seed=0, distribution="standard_normal") -> JordanVector:
    return random_elements(albert_shape(), _cfg(seed, n, distribution, d=3))


def random_oherm(n=3, d=4, seed=0, distribution="standard_normal") -> JordanVector:
    return random_elements(oherm_shape(d), _cfg(seed, n, distribution, d=d))


def random_spin(n=3, spin_n=5, weights=None, seed=0, distribution="standard_normal") -> JordanVector:
    return random_elements(
        spin_shape(spin_n, weights), _cfg(seed, n, distribution, spin_n=spin_n)
    )
