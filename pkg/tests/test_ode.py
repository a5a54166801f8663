"""RK4 integration of the reduced equations and cross-checks against closed forms."""

import math

import pytest

from ssmin.catalog import (
    FamilyId,
    all_default_settings,
    build,
    make_family,
    ode_pointwise_max,
    ode_reference_runs,
)
from ssmin.errors import BlowUp, DomainMismatch, IllConditionedFit, InvalidStep
from ssmin.jets import Interval, affine_profile
from ssmin.ode import (
    OdeCase,
    OdeId,
    compare_profile,
    integrate,
    sampled_trajectory,
    substitution_check,
)

TAN_CASE = OdeCase.of(OdeId.O2_21, c3=0.0)
TANH_CASE = OdeCase.of(OdeId.O3_37F, c0=1.0)


def test_integrate_tan_example():
    traj = integrate(TAN_CASE, 0.0, (0.0, 0.6), 1e-4)
    assert abs(traj.end_value - math.tan(1.2)) <= 1e-8
    assert traj.method_order == 4
    times = traj.times
    assert all(t2 > t1 for t1, t2 in zip(times, times[1:]))


def test_integrate_tanh_example():
    traj = integrate(TANH_CASE, 0.0, (0.0, 1.0), 1e-4)
    assert abs(traj.end_value - math.tanh(1.0)) <= 1e-8


def test_equilibrium_is_constant():
    traj = integrate(TANH_CASE, 1.0, (0.0, 2.0), 1e-3)
    assert all(y == 1.0 for y in traj.values)


def test_blowup_past_the_pole():
    with pytest.raises(BlowUp) as err:
        integrate(TAN_CASE, 0.0, (0.0, 0.9), 1e-4)
    # tan(2u) blows up at u = pi/4
    assert err.value.t == pytest.approx(math.pi / 4.0, abs=1e-2)


def test_invalid_step():
    with pytest.raises(InvalidStep):
        integrate(TAN_CASE, 0.0, (0.0, 1.0), 0.0)
    with pytest.raises(InvalidStep):
        integrate(TAN_CASE, 0.0, (1.0, 0.0), 1e-3)


def test_substitution_check_examples():
    dev = substitution_check(OdeCase.of(OdeId.O2_36, c0_hat=1.0), 1.0, (0.0, 0.5))
    assert dev <= 1e-6
    dev = substitution_check(OdeCase.of(OdeId.O3_28, c0_hat=0.0), 0.5, (0.0, 1.0))
    assert dev <= 1e-6
    # a span that is not a step multiple must not corrupt the stencil
    dev = substitution_check(OdeCase.of(OdeId.O2_36, c0_hat=1.0), 1.0, (0.0, 0.47777))
    assert dev <= 1e-6
    # equilibrium of O3_28 at h = 1 keeps W constant: the fit is meaningless
    with pytest.raises(IllConditionedFit):
        substitution_check(OdeCase.of(OdeId.O3_28, c0_hat=0.0), 1.0, (0.0, 1.0))
    with pytest.raises(Exception):
        substitution_check(TAN_CASE, 1.0, (0.0, 1.0))


def test_compare_profile_matched_pair():
    f = build(make_family(FamilyId.F2_23, c3=0.0)).surface.f
    traj = integrate(TAN_CASE, f.at(0.0).d1, (0.0, 0.6), 1e-4)
    assert compare_profile(traj, f) <= 1e-7


def test_compare_profile_identical_is_zero():
    f = build(make_family(FamilyId.F2_23)).surface.f
    times = [0.05 * k for k in range(13)]
    traj = sampled_trajectory(f, times, 0.05)
    assert compare_profile(traj, f) == 0.0


def test_compare_profile_shifted_control():
    base = build(make_family(FamilyId.F2_23, a=0.0)).surface.f
    shifted = build(make_family(FamilyId.F2_23, a=0.1)).surface.f
    times = [0.05 * k for k in range(13)]
    traj = sampled_trajectory(base, times, 0.05)
    assert compare_profile(traj, shifted) > 1e-2


def test_compare_profile_domain_mismatch():
    profile = affine_profile(1.0, 0.0, domain=Interval(0.0, 0.5))
    traj = integrate(TANH_CASE, 0.0, (0.0, 0.7), 0.01)
    with pytest.raises(DomainMismatch):
        compare_profile(traj, profile)


@pytest.mark.parametrize("case,fid,span", [
    (TAN_CASE, FamilyId.F2_23, (0.0, 0.6)),
    (TANH_CASE, FamilyId.F3_38, (0.0, 1.0)),
], ids=["O2_21", "O3_37f"])
def test_order_four_convergence(case, fid, span):
    f = build(make_family(fid)).surface.f
    h0 = f.at(span[0]).d1
    errors = []
    for step in (0.02, 0.01, 0.005):
        traj = integrate(case, h0, span, step)
        errors.append(compare_profile(traj, f))
    # halving the step cuts the sup-norm gap at least 8x until the float floor
    assert errors[0] / errors[1] >= 8.0 or errors[1] < 1e-11
    assert errors[1] / errors[2] >= 8.0 or errors[2] < 1e-11


def test_every_catalog_profile_satisfies_its_reduced_ode():
    for fam in all_default_settings():
        assert ode_pointwise_max(fam, 200, 17) <= 1e-9, fam.family_id


def test_reference_runs_match_closed_forms():
    for rec in ode_reference_runs(step=1e-3):
        assert rec.max_abs_error <= 1e-6, rec
