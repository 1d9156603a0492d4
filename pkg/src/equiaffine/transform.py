"""Planar affine maps p -> m @ p + t, and the unimodular (det = 1) subgroup.

``EquiAffine2`` is the area-preserving group element; ``Affine2`` is the
unconstrained-determinant variant produced by least-squares / RANSAC fits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

UNIMODULAR_TOL = 1e-9


@dataclass(frozen=True)
class Affine2:
    """Invertible affine map of the plane: 2x2 matrix ``m`` plus translation ``t``."""

    m: np.ndarray
    t: np.ndarray

    def __post_init__(self):
        m = np.array(self.m, dtype=np.float64, copy=True).reshape(2, 2)
        t = np.array(self.t, dtype=np.float64, copy=True).reshape(2)
        if abs(float(np.linalg.det(m))) < 1e-12:
            raise ValueError("affine matrix must be invertible")
        m.flags.writeable = False
        t.flags.writeable = False
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "t", t)

    @property
    def det(self) -> float:
        return float(np.linalg.det(self.m))

    def apply(self, points: np.ndarray) -> np.ndarray:
        """Map points of shape (..., 2); returns the same shape."""
        p = np.asarray(points, dtype=np.float64)
        return p @ self.m.T + self.t

    def to_dict(self) -> dict:
        return {"m": self.m.tolist(), "t": self.t.tolist()}

    @classmethod
    def from_dict(cls, d: dict):
        return cls(np.array(d["m"]), np.array(d["t"]))


@dataclass(frozen=True)
class EquiAffine2(Affine2):
    """Affine2 constrained to det(m) = 1 (the area-preserving group)."""

    def __post_init__(self):
        super().__post_init__()
        if abs(self.det - 1.0) > UNIMODULAR_TOL:
            raise ValueError(f"equi-affine matrix must have det 1, got {self.det!r}")


def identity() -> EquiAffine2:
    return EquiAffine2(np.eye(2), np.zeros(2))


def compose(g1: Affine2, g2: Affine2):
    """Composition acting left-to-right on points: (g1 . g2)(p) = g1(g2(p))."""
    m = g1.m @ g2.m
    t = g1.m @ g2.t + g1.t
    cls = EquiAffine2 if isinstance(g1, EquiAffine2) and isinstance(g2, EquiAffine2) else Affine2
    return cls(m, t)


def invert(g: Affine2):
    """Closed-form inverse; for the unimodular case the adjugate
    [[d, -b], [-c, a]] is the exact matrix inverse."""
    if isinstance(g, EquiAffine2):
        a, b = g.m[0]
        c, d = g.m[1]
        minv = np.array([[d, -b], [-c, a]])
    else:
        minv = np.linalg.inv(g.m)
    cls = EquiAffine2 if isinstance(g, EquiAffine2) else Affine2
    return cls(minv, -minv @ g.t)


def rotation(theta: float) -> EquiAffine2:
    c, s = np.cos(theta), np.sin(theta)
    return EquiAffine2(np.array([[c, -s], [s, c]]), np.zeros(2))


def random_equiaffine(seed: int, max_anisotropy: float = 2.0,
                      max_rotation: float = np.pi, max_translation: float = 0.0) -> EquiAffine2:
    """Seeded random unimodular map g = R(th1) diag(s, 1/s) R(th2) + t.

    s is uniform on [1, max_anisotropy], each angle uniform on
    [-max_rotation, max_rotation], each translation component uniform on
    [-max_translation, max_translation]. det = 1 by construction.
    """
    if max_anisotropy < 1.0:
        raise ValueError("max_anisotropy must be >= 1")
    rng = np.random.default_rng(seed)
    s = rng.uniform(1.0, max_anisotropy)
    th1 = rng.uniform(-max_rotation, max_rotation)
    th2 = rng.uniform(-max_rotation, max_rotation)
    t = rng.uniform(-max_translation, max_translation, size=2)
    m = rotation(th1).m @ np.diag([s, 1.0 / s]) @ rotation(th2).m
    return EquiAffine2(m, t)


def center_conjugate(g: Affine2, width: int, height: int):
    """Conjugate g by the translation to the image center, so the linear part
    pivots about the center instead of the corner origin. Returns the full
    conjugated map T_c . g . T_{-c}."""
    c = np.array([(width - 1) / 2.0, (height - 1) / 2.0])
    t = g.t + c - g.m @ c
    cls = EquiAffine2 if isinstance(g, EquiAffine2) else Affine2
    return cls(g.m, t)
