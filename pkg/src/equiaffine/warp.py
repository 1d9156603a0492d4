"""Image resampling: Catmull-Rom bicubic sampling and inverse-mapped warps.

Warping never invents content: output pixels whose preimage falls outside
the source domain are reported through an explicit validity mask instead
of being zero-filled into the image proper.
"""

from __future__ import annotations

import numpy as np
from scipy import ndimage

from .image import Image2D, Image3D
from .transform import Affine2, invert


def _catmull_rom_weights(t: np.ndarray):
    """Weights for samples at offsets -1, 0, 1, 2; t in [0, 1)."""
    t2 = t * t
    t3 = t2 * t
    w0 = -0.5 * t3 + t2 - 0.5 * t
    w1 = 1.5 * t3 - 2.5 * t2 + 1.0
    w2 = -1.5 * t3 + 2.0 * t2 + 0.5 * t
    w3 = 0.5 * t3 - 0.5 * t2
    return w0, w1, w2, w3


def _bilinear(data: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    h, w = data.shape
    x0 = np.clip(np.floor(x).astype(np.intp), 0, w - 2)
    y0 = np.clip(np.floor(y).astype(np.intp), 0, h - 2)
    fx = x - x0
    fy = y - y0
    v00 = data[y0, x0]
    v01 = data[y0, x0 + 1]
    v10 = data[y0 + 1, x0]
    v11 = data[y0 + 1, x0 + 1]
    return (v00 * (1 - fx) * (1 - fy) + v01 * fx * (1 - fy)
            + v10 * (1 - fx) * fy + v11 * fx * fy)


def _bicubic(data: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    # Valid for 1 <= x <= w-2, 1 <= y <= h-2. Gather indices are clipped;
    # the clip only ever fires where the corresponding weight is zero.
    h, w = data.shape
    x0 = np.floor(x).astype(np.intp)
    y0 = np.floor(y).astype(np.intp)
    wx = _catmull_rom_weights(x - x0)
    wy = _catmull_rom_weights(y - y0)
    out = np.zeros_like(x, dtype=np.float64)
    for j, wyj in enumerate(wy):
        yi = np.clip(y0 + (j - 1), 0, h - 1)
        row = np.zeros_like(out)
        for i, wxi in enumerate(wx):
            xi = np.clip(x0 + (i - 1), 0, w - 1)
            row += wxi * data[yi, xi]
        out += wyj * row
    return out


def sample_bicubic(img: Image2D, x, y):
    """Catmull-Rom bicubic sample of img at real coordinates (x, y).

    Exact on sampled polynomials up to total degree 2. Degrades to bilinear
    within 1 pixel of the border. Coordinates must lie inside
    [0, width-1] x [0, height-1]; anything outside raises ValueError.
    Accepts scalars or broadcastable arrays.
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    scalar = x.ndim == 0 and y.ndim == 0
    x, y = np.broadcast_arrays(x, y)
    data = img.data
    h, w = data.shape
    if np.any(x < 0) or np.any(x > w - 1) or np.any(y < 0) or np.any(y > h - 1):
        raise ValueError("sample coordinates outside the image domain")
    out = np.empty(x.shape, dtype=np.float64)
    cubic = (x >= 1) & (x <= w - 2) & (y >= 1) & (y <= h - 2)
    if np.any(cubic):
        out[cubic] = _bicubic(data, x[cubic], y[cubic])
    edge = ~cubic
    if np.any(edge):
        out[edge] = _bilinear(data, x[edge], y[edge])
    return float(out) if scalar else out


def warp_image(img: Image2D, g: Affine2) -> tuple[Image2D, np.ndarray]:
    """Inverse-mapped warp: output(p) = img(g^{-1} p).

    Returns (warped, mask) where mask is True at pixels whose preimage lies
    inside the source domain; pixels outside are filled with 0 and must be
    excluded from any error metric via the mask.
    """
    ginv = invert(g)
    h, w = img.shape
    xs, ys = np.meshgrid(np.arange(w, dtype=np.float64),
                         np.arange(h, dtype=np.float64))
    src = ginv.apply(np.stack([xs, ys], axis=-1))
    sx, sy = src[..., 0], src[..., 1]
    mask = (sx >= 0) & (sx <= w - 1) & (sy >= 0) & (sy <= h - 1)
    out = np.zeros((h, w), dtype=np.float64)
    out[mask] = sample_bicubic(img, sx[mask], sy[mask])
    return Image2D(out), mask


def warp_volume(vol: Image3D, m: np.ndarray, t: np.ndarray) -> tuple[Image3D, np.ndarray]:
    """Inverse-mapped warp of a volume by p -> m @ p + t with p = (x, y, z).

    Cubic-spline resampling via scipy; same masking convention as
    warp_image. Used by the synthetic-warp harness for 3D invariance checks.
    """
    m = np.asarray(m, dtype=np.float64).reshape(3, 3)
    t = np.asarray(t, dtype=np.float64).reshape(3)
    minv = np.linalg.inv(m)
    nz, ny, nx = vol.shape
    zs, ys, xs = np.meshgrid(np.arange(nz), np.arange(ny), np.arange(nx), indexing="ij")
    p = np.stack([xs, ys, zs], axis=-1).astype(np.float64) - t
    src = p @ minv.T
    sx, sy, sz = src[..., 0], src[..., 1], src[..., 2]
    mask = ((sx >= 0) & (sx <= nx - 1) & (sy >= 0) & (sy <= ny - 1)
            & (sz >= 0) & (sz <= nz - 1))
    out = ndimage.map_coordinates(vol.data, [sz.ravel(), sy.ravel(), sx.ravel()],
                                  order=3, mode="nearest").reshape(vol.shape)
    out[~mask] = 0.0
    return Image3D(out), mask
