"""Second fundamental form and mean curvature with respect to a connection.

The Gauss formula reads the second fundamental form off as the normal
component of the ambient covariant derivative of tangent fields:

    sigma_ij = < nabla_{E_i} E_j , N >

with E_1, E_2 the coordinate tangents of the translation surface.  The mean
curvature is

    H = [G*s11 - F*s12 - F*s21 + E*s22] / (2 (EG - F^2))

applied verbatim in both signatures; the numerator is reported alongside H so
minimality checks never divide by a small EG - F^2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ambient import AmbientSpace, ConnectionKind, covariant_derivative, metric_inner
from .jets import Jet2
from .surface import (
    FirstFundamental,
    FramePoint,
    TranslationSurface,
    TranslationType,
    _fundamental,
    frame_from_jets,
)


@dataclass(frozen=True)
class SigmaMatrix:
    s11: float
    s12: float
    s21: float
    s22: float


@dataclass(frozen=True)
class CurvatureReport:
    sigma: SigmaMatrix
    H: float
    numerator: float
    first: FirstFundamental


def sigma_from_frame(space: AmbientSpace, kind: ConnectionKind, fr: FramePoint) -> SigmaMatrix:
    """Project the four covariant derivatives of the frame onto the normal."""
    conn = space.with_connection(kind)
    sig = space.signature
    n11 = covariant_derivative(conn, fr.Fu, fr.Fu, fr.dFu_du)
    n12 = covariant_derivative(conn, fr.Fu, fr.Fv, fr.dFv_du)
    n21 = covariant_derivative(conn, fr.Fv, fr.Fu, fr.dFu_dv)
    n22 = covariant_derivative(conn, fr.Fv, fr.Fv, fr.dFv_dv)
    return SigmaMatrix(
        metric_inner(sig, n11, fr.N),
        metric_inner(sig, n12, fr.N),
        metric_inner(sig, n21, fr.N),
        metric_inner(sig, n22, fr.N),
    )


def second_form_from_jets(ttype: TranslationType, space: AmbientSpace,
                          kind: ConnectionKind, fj: Jet2, gj: Jet2) -> SigmaMatrix:
    fr = frame_from_jets(ttype, space, fj, gj)
    return sigma_from_frame(space, kind, fr)


def second_form(surface: TranslationSurface, kind: ConnectionKind,
                u: float, v: float) -> SigmaMatrix:
    return second_form_from_jets(
        surface.ttype, surface.space, kind, surface.f.at(u), surface.g.at(v)
    )


def mean_curvature_from_jets(ttype: TranslationType, space: AmbientSpace,
                             kind: ConnectionKind, fj: Jet2, gj: Jet2) -> CurvatureReport:
    fr = frame_from_jets(ttype, space, fj, gj)
    sm = sigma_from_frame(space, kind, fr)
    first = _fundamental(space.signature, fr.Fu, fr.Fv)
    numerator = (
        first.G * sm.s11 - first.F * sm.s12 - first.F * sm.s21 + first.E * sm.s22
    )
    return CurvatureReport(sm, numerator / (2.0 * first.det), numerator, first)


def mean_curvature(surface: TranslationSurface, kind: ConnectionKind,
                   u: float, v: float) -> CurvatureReport:
    return mean_curvature_from_jets(
        surface.ttype, surface.space, kind, surface.f.at(u), surface.g.at(v)
    )
