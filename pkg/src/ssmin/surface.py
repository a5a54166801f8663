"""Translation-surface frames, first fundamental form, and unit normals.

A translation surface sums two one-variable profiles f(u) + g(v) and places the
sum in one of three coordinate slots:

    Type I:   (u, v, f + g)
    Type II:  (u, f + g, v)
    Type III: (f + g, u, v)

In Minkowski space only spacelike points are admitted: EG - F^2 > 0 with the
Lorentzian ambient metric, equivalently the squared normalizer of the unit
normal is positive.  Normal orientations follow fixed per-type sign patterns;
they are never re-oriented.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .ambient import AmbientSpace, Signature, Vec3, ZERO, metric_inner
from .errors import DegenerateSurface
from .jets import Jet2, Profile

# EG - F^2 below this is treated as degenerate (downstream divides by it).
DEGENERACY_MARGIN = 1e-10


class TranslationType(Enum):
    I = "I"
    II = "II"
    III = "III"


@dataclass(frozen=True)
class TranslationSurface:
    ttype: TranslationType
    f: Profile
    g: Profile
    space: AmbientSpace


@dataclass(frozen=True)
class FirstFundamental:
    E: float
    F: float
    G: float

    @property
    def det(self) -> float:
        return self.E * self.G - self.F * self.F


@dataclass(frozen=True)
class FramePoint:
    """Tangent vectors, flat second partials, and the unit normal at a point."""

    ttype: TranslationType
    Fu: Vec3
    Fv: Vec3
    dFu_du: Vec3
    dFu_dv: Vec3
    dFv_du: Vec3
    dFv_dv: Vec3
    N: Vec3
    normalizer: float


def _tangents(ttype: TranslationType, f1: float, g1: float) -> tuple[Vec3, Vec3]:
    if ttype is TranslationType.I:
        return Vec3(1.0, 0.0, f1), Vec3(0.0, 1.0, g1)
    if ttype is TranslationType.II:
        return Vec3(1.0, f1, 0.0), Vec3(0.0, g1, 1.0)
    return Vec3(f1, 1.0, 0.0), Vec3(g1, 0.0, 1.0)


def _second_partials(ttype: TranslationType, f2: float, g2: float) -> tuple[Vec3, Vec3]:
    if ttype is TranslationType.I:
        return Vec3(0.0, 0.0, f2), Vec3(0.0, 0.0, g2)
    if ttype is TranslationType.II:
        return Vec3(0.0, f2, 0.0), Vec3(0.0, g2, 0.0)
    return Vec3(f2, 0.0, 0.0), Vec3(g2, 0.0, 0.0)


def _normal_direction(ttype: TranslationType, sig: Signature, f1: float, g1: float) -> Vec3:
    """Unnormalized normal with the fixed per-type orientation.

    The Lorentzian direction flips the X3 coefficient relative to the
    Euclidean one, so the normal of a spacelike surface stays timelike.
    """
    euclidean = sig is Signature.EUCLIDEAN
    if ttype is TranslationType.I:
        return Vec3(-f1, -g1, 1.0 if euclidean else -1.0)
    if ttype is TranslationType.II:
        return Vec3(f1, -1.0, g1 if euclidean else -g1)
    return Vec3(1.0, -f1, -g1 if euclidean else g1)


def _fundamental(sig: Signature, Fu: Vec3, Fv: Vec3) -> FirstFundamental:
    return FirstFundamental(
        metric_inner(sig, Fu, Fu),
        metric_inner(sig, Fu, Fv),
        metric_inner(sig, Fv, Fv),
    )


def frame_from_jets(ttype: TranslationType, space: AmbientSpace,
                    fj: Jet2, gj: Jet2) -> FramePoint:
    """Frame built directly from profile jets; raises on degenerate points."""
    sig = space.signature
    Fu, Fv = _tangents(ttype, fj.d1, gj.d1)
    first = _fundamental(sig, Fu, Fv)
    det = first.det
    if det < DEGENERACY_MARGIN:
        reason = "degenerate" if sig is Signature.EUCLIDEAN else "degenerate or not spacelike"
        raise DegenerateSurface(
            f"{reason}: EG - F^2 = {det!r} at f'={fj.d1!r}, g'={gj.d1!r}"
        )
    duu, dvv = _second_partials(ttype, fj.d2, gj.d2)
    normalizer = math.sqrt(det)
    n = _normal_direction(ttype, sig, fj.d1, gj.d1) * (1.0 / normalizer)
    return FramePoint(ttype, Fu, Fv, duu, ZERO, ZERO, dvv, n, normalizer)


def frame(surface: TranslationSurface, u: float, v: float) -> FramePoint:
    return frame_from_jets(surface.ttype, surface.space, surface.f.at(u), surface.g.at(v))


def first_fundamental_from_jets(ttype: TranslationType, space: AmbientSpace,
                                fj: Jet2, gj: Jet2) -> FirstFundamental:
    Fu, Fv = _tangents(ttype, fj.d1, gj.d1)
    first = _fundamental(space.signature, Fu, Fv)
    if first.det < DEGENERACY_MARGIN:
        raise DegenerateSurface(f"EG - F^2 = {first.det!r}")
    return first


def first_fundamental(surface: TranslationSurface, u: float, v: float) -> FirstFundamental:
    return first_fundamental_from_jets(
        surface.ttype, surface.space, surface.f.at(u), surface.g.at(v)
    )


def immersion(surface: TranslationSurface, u: float, v: float) -> Vec3:
    """Ambient coordinates of the surface point at (u, v)."""
    h = surface.f.at(u).v + surface.g.at(v).v
    if surface.ttype is TranslationType.I:
        return Vec3(u, v, h)
    if surface.ttype is TranslationType.II:
        return Vec3(u, h, v)
    return Vec3(h, u, v)
