"""Scalar image and volume containers.

Grid convention used throughout the library: pixel (i, j) sits at real
coordinates x = i (column), y = j (row), origin at the image corner.
Arrays are indexed ``data[y, x]`` for 2D and ``data[z, y, x]`` for 3D,
so the fastest-varying axis of the flat buffer is x.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def _as_readonly_float(arr, ndim: int) -> np.ndarray:
    a = np.array(arr, dtype=np.float64, copy=True)
    if a.ndim != ndim:
        raise ValueError(f"expected a {ndim}-d array, got shape {a.shape}")
    if min(a.shape) < 3:
        raise ValueError(f"every dimension must be >= 3, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("image intensities must be finite (no NaN/Inf)")
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class Image2D:
    """Grayscale image, intensities nominally in [0, 1], shape (height, width)."""

    data: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "data", _as_readonly_float(self.data, 2))

    @property
    def width(self) -> int:
        return self.data.shape[1]

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape


@dataclass(frozen=True)
class Image3D:
    """Scalar volume, shape (nz, ny, nx); flat buffer is x-fastest."""

    data: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "data", _as_readonly_float(self.data, 3))

    @property
    def nx(self) -> int:
        return self.data.shape[2]

    @property
    def ny(self) -> int:
        return self.data.shape[1]

    @property
    def nz(self) -> int:
        return self.data.shape[0]

    @property
    def shape(self) -> tuple[int, int, int]:
        return self.data.shape
