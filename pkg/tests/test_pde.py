"""Closed-form residuals, the residual/numerator equivalence, and separation fits."""

import math

import pytest

from ssmin.ambient import AmbientSpace, ConnectionKind, Signature
from ssmin.catalog import FamilyId, build, make_family
from ssmin.curvature import mean_curvature_from_jets
from ssmin.errors import IllConditionedFit, UnknownCase
from ssmin.jets import Jet2, affine_profile
from ssmin.ode import integrate_profile_scalar
from ssmin.pde import (
    CaseId,
    case_for,
    equivalence_factor,
    equivalence_sweep,
    residual,
    separation_check,
)
from ssmin.sampling import SplitMix64
from ssmin.surface import TranslationType, frame_from_jets

ZERO_JET = Jet2(0.0, 0.0, 0.0)


def test_residual_examples():
    assert residual(CaseId.E_M_I, ZERO_JET, ZERO_JET) == -2.0
    assert residual(CaseId.E_NM_ALL, Jet2(0, 1.3, 0), Jet2(0, -0.4, 0)) == 0.0
    # tanh-profile pair: f''/(1-f'^2) = 1 pairs with -g''/(1-g'^2) = 1
    u, v = 0.4, -0.9
    fj = Jet2(0, math.tanh(u), 1.0 / math.cosh(u) ** 2)
    gj = Jet2(0, -math.tanh(v), -1.0 / math.cosh(v) ** 2)
    assert abs(residual(CaseId.L_NM_I, fj, gj)) <= 1e-15


def test_l_m_ii_iii_constant_profiles():
    # with f' = p, g' = q constant the residual reduces to 2q(q^2 - p^2 - 1)
    for p, q in [(1.0, math.sqrt(2.0)), (0.5, -math.sqrt(1.25)), (2.0, math.sqrt(5.0))]:
        r = residual(CaseId.L_M_II_III, Jet2(0, p, 0), Jet2(0, q, 0))
        assert abs(r) <= 1e-12
        assert abs(r - 2.0 * q * (q * q - p * p - 1.0)) <= 1e-12
    # q^2 - p^2 - 2 = 0 does NOT solve the equation: the residual is 2q
    p, q = 1.0, math.sqrt(3.0)
    r = residual(CaseId.L_M_II_III, Jet2(0, p, 0), Jet2(0, q, 0))
    assert abs(r - 2.0 * q) <= 1e-12


def test_unknown_case():
    with pytest.raises(UnknownCase):
        case_for(Signature.EUCLIDEAN, ConnectionKind.LEVI_CIVITA, TranslationType.I)
    assert case_for(Signature.LORENTZIAN, ConnectionKind.SEMI_SYMMETRIC_NON_METRIC,
                    TranslationType.III) is CaseId.L_NM_II_III


def test_equivalence_factor_examples():
    space = AmbientSpace(Signature.EUCLIDEAN, ConnectionKind.SEMI_SYMMETRIC_METRIC)
    fr = frame_from_jets(TranslationType.I, space, ZERO_JET, ZERO_JET)
    lam = equivalence_factor(CaseId.E_M_I, fr)
    assert lam == 1.0
    rep = mean_curvature_from_jets(TranslationType.I, space, space.connection,
                                   ZERO_JET, ZERO_JET)
    assert lam * rep.numerator == residual(CaseId.E_M_I, ZERO_JET, ZERO_JET) == -2.0

    nm = AmbientSpace(Signature.EUCLIDEAN, ConnectionKind.SEMI_SYMMETRIC_NON_METRIC)
    fj, gj = Jet2(0, 1, 2), Jet2(0, 1, -2)
    rep = mean_curvature_from_jets(TranslationType.I, nm, nm.connection, fj, gj)
    assert abs(residual(CaseId.E_NM_ALL, fj, gj)) <= 1e-15
    assert abs(rep.numerator) <= 1e-15

    with pytest.raises(UnknownCase):
        equivalence_factor(CaseId.E_M_II_III, fr)  # Type I frame, Type II/III case


@pytest.mark.parametrize("case", list(CaseId), ids=lambda c: c.value)
def test_equivalence_sweep_all_cases(case):
    rec = equivalence_sweep(case, 400, 2718)
    assert rec.max_rel_deviation <= 1e-10
    if case.value.startswith("L"):
        assert 0.0 < rec.acceptance_rate < 1.0
    else:
        assert rec.acceptance_rate == 1.0


def test_type_ii_iii_residual_coincidence():
    # the same jets seen through a Type II or Type III frame certify the same
    # closed-form residual once the signed equivalence factor is applied
    rng = SplitMix64(314)
    for case in (CaseId.E_M_II_III, CaseId.E_NM_ALL, CaseId.L_M_II_III,
                 CaseId.L_NM_II_III):
        sig = Signature.EUCLIDEAN if case.value.startswith("E") else Signature.LORENTZIAN
        kind = (ConnectionKind.SEMI_SYMMETRIC_METRIC if "_M_" in case.value
                else ConnectionKind.SEMI_SYMMETRIC_NON_METRIC)
        space = AmbientSpace(sig, kind)
        for _ in range(200):
            if sig is Signature.EUCLIDEAN:
                f1, g1 = rng.uniform(-2, 2), rng.uniform(-2, 2)
            else:
                f1 = rng.uniform(-1.2, 1.2)
                g1 = math.copysign(math.sqrt(1.0 + f1 * f1) + rng.uniform(0.05, 1.5),
                                   rng.uniform(-1, 1))
            fj = Jet2(0, f1, rng.uniform(-3, 3))
            gj = Jet2(0, g1, rng.uniform(-3, 3))
            values = []
            for ttype in (TranslationType.II, TranslationType.III):
                fr = frame_from_jets(ttype, space, fj, gj)
                rep = mean_curvature_from_jets(ttype, space, kind, fj, gj)
                values.append(equivalence_factor(case, fr) * rep.numerator)
            res = residual(case, fj, gj)
            assert abs(values[0] - values[1]) <= 1e-10 * (1.0 + abs(res))
            assert abs(values[0] - res) <= 1e-10 * (1.0 + abs(res))


def test_case4_contradiction_witnesses():
    rng = SplitMix64(8)
    for _ in range(500):
        f1, g1 = rng.uniform(-3, 3), rng.uniform(-3, 3)
        assert residual(CaseId.E_M_I, Jet2(0, f1, 0), Jet2(0, g1, 0)) <= -2.0
    for _ in range(500):
        while True:
            f1, g1 = rng.uniform(-1, 1), rng.uniform(-1, 1)
            if 1.0 - f1 * f1 - g1 * g1 > 1e-6:
                break
        r = residual(CaseId.L_M_I, Jet2(0, f1, 0), Jet2(0, g1, 0))
        assert abs(r - 2.0 * (1.0 - f1 * f1 - g1 * g1)) <= 1e-14
        assert r > 0.0


def test_separation_check_scherk_profile():
    # f'' = 2 f'^2 + 2 corresponds to (c0, c1) = (4, 2)
    f = build(make_family(FamilyId.F2_23, c3=0.0)).surface.f
    g = affine_profile(0.0, 0.0)
    u_samples = [0.05 * k for k in range(1, 11)]
    fit = separation_check(CaseId.E_M_I, f, g, u_samples, [0.1, 0.2, 0.3])
    assert abs(fit.c0 - 4.0) <= 1e-10
    assert abs(fit.c1 - 2.0) <= 1e-10
    assert abs(fit.c2) <= 1e-10
    assert fit.deviation <= 1e-10


def test_separation_check_affine_is_ill_conditioned():
    f = affine_profile(2.0, 1.0)
    g = affine_profile(0.0, 0.0)
    with pytest.raises(IllConditionedFit):
        separation_check(CaseId.E_M_I, f, g, [0.1, 0.2, 0.3], [0.1, 0.2])


def test_separation_check_rk4_oracle():
    # g'' = -2 g'^2 + 3 sampled from an RK4 trajectory: (c0, c2) = (4, 3),
    # sharing c0 with the Scherk-side f'' = 2 f'^2 + 2.
    f = build(make_family(FamilyId.F2_23, c3=0.0)).surface.f
    g = integrate_profile_scalar(lambda h: -2.0 * h * h + 3.0, 0.0, 0.2,
                                 (0.0, 1.0), 1e-3)
    u_samples = [0.05 * k for k in range(1, 11)]
    v_samples = [0.1 * k for k in range(1, 10)]
    fit = separation_check(CaseId.E_M_I, f, g, u_samples, v_samples)
    assert abs(fit.c0 - 4.0) <= 1e-8
    assert abs(fit.c1 - 2.0) <= 1e-8
    assert abs(fit.c2 - 3.0) <= 1e-8


def test_separation_two_constant_cases():
    # F2_35 profile solves f'' = -(2c/(c^2+1)) f'^2 - 2c; with c = 1 the
    # separated fit gives c0 = -2, c1 = -2 and no c2
    f = build(make_family(FamilyId.F2_35, c0_tilde=1.0)).surface.f
    g = affine_profile(1.0, 0.0)
    fit = separation_check(CaseId.E_M_II_III, f, g, [0.05 * k for k in range(1, 11)], [])
    assert fit.c2 is None
    assert abs(fit.c0 + 2.0) <= 1e-9
    assert abs(fit.c1 + 2.0) <= 1e-9
    with pytest.raises(UnknownCase):
        separation_check(CaseId.E_NM_ALL, f, g, [0.1, 0.2, 0.3], [])
