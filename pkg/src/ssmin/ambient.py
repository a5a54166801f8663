"""Ambient 3-space geometry: two metrics and three connections.

Everything is expressed in the global frame X1, X2, X3.  The inner product is
either Euclidean (+,+,+) or Lorentzian diag(+1, +1, -1).  Both semi-symmetric
connections add a torsion correction built from the fixed generator X3 to the
flat directional derivative D_X W:

    metric kind:      D_X W + <W, X3> X - <X, W> X3
    non-metric kind:  D_X W + <W, X3> X

The Levi-Civita connection of either metric has all frame derivatives zero, so
it adds nothing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum


class Signature(Enum):
    EUCLIDEAN = "euclidean"
    LORENTZIAN = "lorentzian"


class ConnectionKind(Enum):
    LEVI_CIVITA = "levi-civita"
    SEMI_SYMMETRIC_METRIC = "semi-symmetric-metric"
    SEMI_SYMMETRIC_NON_METRIC = "semi-symmetric-non-metric"


@dataclass(frozen=True)
class Vec3:
    """Coefficients of a vector in the global frame X1, X2, X3."""

    c1: float
    c2: float
    c3: float

    def __add__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.c1 + other.c1, self.c2 + other.c2, self.c3 + other.c3)

    def __sub__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.c1 - other.c1, self.c2 - other.c2, self.c3 - other.c3)

    def __neg__(self) -> "Vec3":
        return Vec3(-self.c1, -self.c2, -self.c3)

    def __mul__(self, s: float) -> "Vec3":
        return Vec3(self.c1 * s, self.c2 * s, self.c3 * s)

    __rmul__ = __mul__

    def is_finite(self) -> bool:
        return (
            math.isfinite(self.c1)
            and math.isfinite(self.c2)
            and math.isfinite(self.c3)
        )


ZERO = Vec3(0.0, 0.0, 0.0)
X1 = Vec3(1.0, 0.0, 0.0)
X2 = Vec3(0.0, 1.0, 0.0)
X3 = Vec3(0.0, 0.0, 1.0)
BASIS = (X1, X2, X3)


@dataclass(frozen=True)
class AmbientSpace:
    """Metric signature plus connection kind; the torsion generator is X3."""

    signature: Signature
    connection: ConnectionKind

    def with_connection(self, kind: ConnectionKind) -> "AmbientSpace":
        return replace(self, connection=kind)


def metric_inner(sig: Signature, a: Vec3, b: Vec3) -> float:
    """Ambient inner product of two frame-coefficient vectors."""
    planar = a.c1 * b.c1 + a.c2 * b.c2
    if sig is Signature.EUCLIDEAN:
        return planar + a.c3 * b.c3
    return planar - a.c3 * b.c3


def covariant_derivative(space: AmbientSpace, x: Vec3, w: Vec3, dw_along_x: Vec3) -> Vec3:
    """Covariant derivative of W along X given the flat derivative D_X W.

    The correction depends only on the pointwise values of X and W, so the
    same formula serves constant frame fields and surface tangent fields.
    """
    kind = space.connection
    if kind is ConnectionKind.LEVI_CIVITA:
        return dw_along_x
    out = dw_along_x + x * metric_inner(space.signature, w, X3)
    if kind is ConnectionKind.SEMI_SYMMETRIC_METRIC:
        out = out - X3 * metric_inner(space.signature, x, w)
    return out


def torsion(space: AmbientSpace, x: Vec3, y: Vec3) -> Vec3:
    """Torsion T(X, Y) for constant-coefficient fields.

    Both semi-symmetric kinds share <Y, X3> X - <X, X3> Y; the Levi-Civita
    connection is torsion free.
    """
    if space.connection is ConnectionKind.LEVI_CIVITA:
        return ZERO
    sig = space.signature
    return x * metric_inner(sig, y, X3) - y * metric_inner(sig, x, X3)
