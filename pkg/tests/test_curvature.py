"""Second fundamental form and mean curvature, checked against the printed
per-case covariant-derivative tables."""

import math

import pytest

from ssmin.ambient import (
    AmbientSpace,
    ConnectionKind,
    Signature,
    Vec3,
    covariant_derivative,
    metric_inner,
)
from ssmin.catalog import FamilyId, build, make_family
from ssmin.curvature import (
    mean_curvature,
    mean_curvature_from_jets,
    second_form,
    second_form_from_jets,
)
from ssmin.jets import Jet2, affine_profile
from ssmin.sampling import SplitMix64
from ssmin.surface import TranslationSurface, TranslationType, frame_from_jets

E = Signature.EUCLIDEAN
L = Signature.LORENTZIAN
LC = ConnectionKind.LEVI_CIVITA
SSM = ConnectionKind.SEMI_SYMMETRIC_METRIC
SSNM = ConnectionKind.SEMI_SYMMETRIC_NON_METRIC
TYPES = (TranslationType.I, TranslationType.II, TranslationType.III)

ZERO_JET = Jet2(0.0, 0.0, 0.0)


def _plane(sig=E):
    return TranslationSurface(TranslationType.I, affine_profile(0, 0),
                              affine_profile(0, 0), AmbientSpace(sig, SSM))


def test_plane_sigma_metric_connection():
    sm = second_form(_plane(), SSM, 0.1, 0.2)
    assert (sm.s11, sm.s12, sm.s21, sm.s22) == (-1.0, 0.0, 0.0, -1.0)


def test_plane_mean_curvatures():
    rep = mean_curvature(_plane(), SSM, 0.0, 0.0)
    assert rep.numerator == -2.0
    assert rep.H == -1.0
    rep = mean_curvature(_plane(), SSNM, 0.0, 0.0)
    assert rep.H == 0.0


def test_scherk_profile_pair_is_minimal_for_non_metric():
    surface = build(make_family(FamilyId.F2_51, c=1.0)).surface
    rep = mean_curvature(surface, SSNM, 0.2, 0.3)
    assert abs(rep.numerator) <= 1e-10


def test_non_metric_type_i_mixed_sigma_vanishes():
    rng = SplitMix64(5)
    for _ in range(100):
        fj = Jet2(0.0, rng.uniform(-2, 2), rng.uniform(-3, 3))
        gj = Jet2(0.0, rng.uniform(-2, 2), rng.uniform(-3, 3))
        sm = second_form_from_jets(TranslationType.I, AmbientSpace(E, SSNM), SSNM, fj, gj)
        assert abs(sm.s12) <= 1e-15 and abs(sm.s21) <= 1e-15


# Printed covariant-derivative tables for the surface frames, as functions of
# the profile jets.  Rows: nabla_Fu Fu, nabla_Fu Fv, nabla_Fv Fu, nabla_Fv Fv.
def _t_e_m_i(f1, f2, g1, g2):
    return (Vec3(f1, 0, f2 - 1), Vec3(g1, 0, 0), Vec3(0, f1, 0), Vec3(0, g1, g2 - 1))


def _t_e_m_ii(f1, f2, g1, g2):
    return (Vec3(0, f2, -(f1 * f1 + 1)), Vec3(1, f1, -f1 * g1),
            Vec3(0, 0, -f1 * g1), Vec3(0, g1 + g2, -g1 * g1))


def _t_e_m_iii(f1, f2, g1, g2):
    return (Vec3(f2, 0, -(f1 * f1 + 1)), Vec3(f1, 1, -f1 * g1),
            Vec3(0, 0, -f1 * g1), Vec3(g1 + g2, 0, -g1 * g1))


def _t_e_nm_i(f1, f2, g1, g2):
    return (Vec3(f1, 0, f2 + f1 * f1), Vec3(g1, 0, f1 * g1),
            Vec3(0, f1, f1 * g1), Vec3(0, g1, g1 * g1 + g2))


def _t_l_m_i(f1, f2, g1, g2):
    return (Vec3(-f1, 0, f2 - 1), Vec3(-g1, 0, 0), Vec3(0, -f1, 0),
            Vec3(0, -g1, g2 - 1))


def _t_l_m_ii(f1, f2, g1, g2):
    return (Vec3(0, f2, -(f1 * f1 + 1)), Vec3(-1, -f1, -f1 * g1),
            Vec3(0, 0, -f1 * g1), Vec3(0, -g1 + g2, -g1 * g1))


def _t_l_nm_i(f1, f2, g1, g2):
    return (Vec3(-f1, 0, f2 - f1 * f1), Vec3(-g1, 0, -f1 * g1),
            Vec3(0, -f1, -f1 * g1), Vec3(0, -g1, -g1 * g1 + g2))


def _t_l_nm_ii(f1, f2, g1, g2):
    return (Vec3(0, f2, 0), Vec3(-1, -f1, 0), Vec3(0, 0, 0),
            Vec3(0, -g1 + g2, -1))


SURFACE_TABLES = [
    (TranslationType.I, E, SSM, _t_e_m_i),
    (TranslationType.II, E, SSM, _t_e_m_ii),
    (TranslationType.III, E, SSM, _t_e_m_iii),
    (TranslationType.I, E, SSNM, _t_e_nm_i),
    (TranslationType.I, L, SSM, _t_l_m_i),
    (TranslationType.II, L, SSM, _t_l_m_ii),
    (TranslationType.I, L, SSNM, _t_l_nm_i),
    (TranslationType.II, L, SSNM, _t_l_nm_ii),
]


@pytest.mark.parametrize("ttype,sig,kind,table", SURFACE_TABLES,
                         ids=lambda x: getattr(x, "value", getattr(x, "__name__", str(x))))
def test_printed_surface_connection_tables(ttype, sig, kind, table):
    rng = SplitMix64(31)
    space = AmbientSpace(sig, kind)
    for _ in range(100):
        if sig is E:
            f1, g1 = rng.uniform(-2, 2), rng.uniform(-2, 2)
        elif ttype is TranslationType.I:
            f1, g1 = rng.uniform(-0.7, 0.7), rng.uniform(-0.55, 0.55)
        else:
            f1 = rng.uniform(-1, 1)
            g1 = math.copysign(math.sqrt(1.0 + f1 * f1) + rng.uniform(0.05, 1.5),
                               rng.uniform(-1, 1))
        f2, g2 = rng.uniform(-3, 3), rng.uniform(-3, 3)
        fr = frame_from_jets(ttype, space, Jet2(0, f1, f2), Jet2(0, g1, g2))
        got = (
            covariant_derivative(space, fr.Fu, fr.Fu, fr.dFu_du),
            covariant_derivative(space, fr.Fu, fr.Fv, fr.dFv_du),
            covariant_derivative(space, fr.Fv, fr.Fu, fr.dFu_dv),
            covariant_derivative(space, fr.Fv, fr.Fv, fr.dFv_dv),
        )
        for got_vec, want_vec in zip(got, table(f1, f2, g1, g2)):
            diff = got_vec - want_vec
            assert max(abs(diff.c1), abs(diff.c2), abs(diff.c3)) <= 1e-12


def _admissible_sample(rng, sig, ttype):
    while True:
        if sig is E:
            f1, g1 = rng.uniform(-2.5, 2.5), rng.uniform(-2.5, 2.5)
            return f1, g1
        if ttype is TranslationType.I:
            f1, g1 = rng.uniform(-1.2, 1.2), rng.uniform(-1.2, 1.2)
            if 1.0 - f1 * f1 - g1 * g1 >= 1e-3:
                return f1, g1
        else:
            f1, g1 = rng.uniform(-1.5, 1.5), rng.uniform(-2.6, 2.6)
            if g1 * g1 - f1 * f1 - 1.0 >= 1e-3:
                return f1, g1


def test_sigma_symmetry_and_non_metric_equals_levi_civita():
    rng = SplitMix64(99)
    combos = [(t, s, k) for t in TYPES for s in (E, L) for k in (LC, SSM, SSNM)]
    for i in range(1000):
        ttype, sig, kind = combos[i % len(combos)]
        space = AmbientSpace(sig, kind)
        f1, g1 = _admissible_sample(rng, sig, ttype)
        fj = Jet2(0, f1, rng.uniform(-3, 3))
        gj = Jet2(0, g1, rng.uniform(-3, 3))
        sm = second_form_from_jets(ttype, space, kind, fj, gj)
        assert abs(sm.s12 - sm.s21) <= 1e-12
        s_lc = second_form_from_jets(ttype, space, LC, fj, gj)
        s_nm = second_form_from_jets(ttype, space, SSNM, fj, gj)
        for a, b in ((s_lc.s11, s_nm.s11), (s_lc.s12, s_nm.s12),
                     (s_lc.s21, s_nm.s21), (s_lc.s22, s_nm.s22)):
            assert abs(a - b) <= 1e-12


def test_euclidean_metric_offset_identity():
    # H_metric - H_levi_civita = -<X3, N> pointwise
    rng = SplitMix64(123)
    space = AmbientSpace(E, SSM)
    for i in range(1000):
        ttype = TYPES[i % 3]
        fj = Jet2(0, rng.uniform(-2.5, 2.5), rng.uniform(-3, 3))
        gj = Jet2(0, rng.uniform(-2.5, 2.5), rng.uniform(-3, 3))
        h_metric = mean_curvature_from_jets(ttype, space, SSM, fj, gj).H
        h_flat = mean_curvature_from_jets(ttype, space, LC, fj, gj).H
        fr = frame_from_jets(ttype, space, fj, gj)
        offset = -metric_inner(E, Vec3(0, 0, 1), fr.N)
        assert abs((h_metric - h_flat) - offset) <= 1e-10
