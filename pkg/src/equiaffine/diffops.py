"""Finite-difference derivatives on pixel grids (spacing h = 1).

All stencils are central differences, exact on sampled polynomials of
total degree <= 2. Values in the one-pixel border ring are not computed
(left at 0); use ``interior_mask`` to exclude them. No one-sided border
stencils are used: the invariant formulas downstream are nonlinear in the
derivatives, and bad border values would contaminate them silently.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import ndimage

from .image import Image2D, Image3D


def interior_mask(shape, margin: int = 1) -> np.ndarray:
    """Boolean mask that is True away from the outermost ``margin`` ring."""
    mask = np.zeros(shape, dtype=bool)
    sl = tuple(slice(margin, n - margin) for n in shape)
    mask[sl] = True
    return mask


def _data(img) -> np.ndarray:
    return img.data if isinstance(img, (Image2D, Image3D)) else np.asarray(img, dtype=np.float64)


def _central(u: np.ndarray, axis: int) -> np.ndarray:
    out = np.zeros_like(u)
    lo = [slice(1, -1)] * u.ndim
    hi = [slice(1, -1)] * u.ndim
    mid = [slice(1, -1)] * u.ndim
    lo[axis] = slice(None, -2)
    hi[axis] = slice(2, None)
    out[tuple(mid)] = 0.5 * (u[tuple(hi)] - u[tuple(lo)])[_inner_rest(u.ndim, axis)]
    return out


def _inner_rest(ndim: int, axis: int):
    # after slicing `axis`, restrict the remaining axes to their interiors
    sl = [slice(1, -1)] * ndim
    sl[axis] = slice(None)
    return tuple(sl)


def _second(u: np.ndarray, axis: int) -> np.ndarray:
    out = np.zeros_like(u)
    lo = [slice(None)] * u.ndim
    hi = [slice(None)] * u.ndim
    ce = [slice(None)] * u.ndim
    lo[axis] = slice(None, -2)
    hi[axis] = slice(2, None)
    ce[axis] = slice(1, -1)
    inner = (u[tuple(hi)] - 2.0 * u[tuple(ce)] + u[tuple(lo)])[_inner_rest(u.ndim, axis)]
    out[tuple(slice(1, -1) for _ in range(u.ndim))] = inner
    return out


def _cross(u: np.ndarray, axis_a: int, axis_b: int) -> np.ndarray:
    out = np.zeros_like(u)

    def sh(da, db):
        sl = [slice(1, -1)] * u.ndim
        sl[axis_a] = slice(1 + da, u.shape[axis_a] - 1 + da)
        sl[axis_b] = slice(1 + db, u.shape[axis_b] - 1 + db)
        return u[tuple(sl)]

    inner = 0.25 * (sh(1, 1) - sh(1, -1) - sh(-1, 1) + sh(-1, -1))
    out[tuple(slice(1, -1) for _ in range(u.ndim))] = inner
    return out


# axis layout: 2D arrays are (y, x); 3D arrays are (z, y, x)

def dx(img) -> np.ndarray:
    u = _data(img)
    return _central(u, u.ndim - 1)


def dy(img) -> np.ndarray:
    u = _data(img)
    return _central(u, u.ndim - 2)


def dz(vol) -> np.ndarray:
    u = _data(vol)
    return _central(u, 0)


def dxx(img) -> np.ndarray:
    u = _data(img)
    return _second(u, u.ndim - 1)


def dyy(img) -> np.ndarray:
    u = _data(img)
    return _second(u, u.ndim - 2)


def dzz(vol) -> np.ndarray:
    u = _data(vol)
    return _second(u, 0)


def dxy(img) -> np.ndarray:
    u = _data(img)
    return _cross(u, u.ndim - 2, u.ndim - 1)


def dxz(vol) -> np.ndarray:
    return _cross(_data(vol), 0, 2)


def dyz(vol) -> np.ndarray:
    return _cross(_data(vol), 0, 1)


def gradient2d(img):
    """(u_x, u_y), border ring invalid."""
    u = _data(img)
    return _central(u, 1), _central(u, 0)


def hessian2d(img):
    """(u_xx, u_xy, u_yy), border ring invalid."""
    u = _data(img)
    return _second(u, 1), _cross(u, 0, 1), _second(u, 0)


def gradient3d(vol):
    u = _data(vol)
    return _central(u, 2), _central(u, 1), _central(u, 0)


def hessian3d(vol):
    """(u_xx, u_xy, u_xz, u_yy, u_yz, u_zz), border ring invalid."""
    u = _data(vol)
    return (_second(u, 2), _cross(u, 1, 2), _cross(u, 0, 2),
            _second(u, 1), _cross(u, 0, 1), _second(u, 0))


def gaussian_kernel1d(sigma: float) -> np.ndarray:
    """Sampled Gaussian truncated at 3*sigma and renormalized to sum 1."""
    radius = max(1, math.ceil(3.0 * sigma))
    xs = np.arange(-radius, radius + 1, dtype=np.float64)
    k = np.exp(-0.5 * (xs / sigma) ** 2)
    return k / k.sum()


def gaussian_smooth(img, sigma: float):
    """Separable Gaussian smoothing with replicate boundaries; sigma = 0 is
    the identity. Preserves constants exactly (kernel sums to 1)."""
    if sigma < 0:
        raise ValueError("sigma must be >= 0")
    u = _data(img)
    if sigma == 0:
        return img if isinstance(img, (Image2D, Image3D)) else u.copy()
    k = gaussian_kernel1d(sigma)
    out = u.copy()
    for axis in range(u.ndim):
        out = ndimage.convolve1d(out, k, axis=axis, mode="nearest")
    if isinstance(img, Image2D):
        return Image2D(out)
    if isinstance(img, Image3D):
        return Image3D(out)
    return out
