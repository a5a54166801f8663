"""Classified minimal-surface families with admissible domains and verification.

Each family binds a pair of profiles (f, g) to a surface type, an ambient
space, and the minimality case whose residual it solves identically.  Domains
are computed constructively: the nearest singularity of each closed form is
solved for and the interval shrunk by a fixed margin; in Minkowski space the
admissible box additionally keeps EG - F^2 above a floor.

Several Minkowski families solve their minimality PDE while having an empty
spacelike region for every permitted parameter choice (their derivative bounds
contradict EG - F^2 > 0).  Building such a family raises EmptyDomain; its
verification falls back to the PDE residual sampled on the profiles' own
domains, which is the part of the classification that remains checkable.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Mapping

from .ambient import AmbientSpace, ConnectionKind, Signature
from .curvature import mean_curvature_from_jets
from .errors import DomainError, EmptyDomain, ParameterConstraintViolation
from .jets import (
    Interval,
    Jet2,
    Profile,
    QuadratureSpec,
    REAL_LINE,
    SINGULARITY_GUARD,
    affine_profile,
    log_abs_cos_profile,
    log_abs_exp_profile,
    profile_quadrature,
)
from .ode import OdeCase, OdeId
from .pde import CaseId, residual
from .sampling import SplitMix64
from .surface import TranslationSurface, TranslationType

# Admissible boxes keep this much distance (in u or v) from closed-form
# singularities, and keep EG - F^2 at or above the spacelike floor.
EDGE_MARGIN = 1e-3
SPACELIKE_FLOOR = 1e-4
SAMPLING_CAP = 3.0

# Catalog quadrature runs tighter than the default spec so finite-difference
# oracles on profile values stay well below their tolerances.
_QUAD_SPEC = QuadratureSpec(abs_tol=1e-12, max_depth=40)


class FamilyId(Enum):
    F2_23 = "F2_23"
    F2_24 = "F2_24"
    F2_35 = "F2_35"
    F2_39 = "F2_39"
    F2_40 = "F2_40"
    F2_50 = "F2_50"
    F2_51 = "F2_51"
    F3_10 = "F3_10"
    F3_12 = "F3_12"
    F3_13 = "F3_13"
    F3_14 = "F3_14"
    F3_25 = "F3_25"
    F3_27 = "F3_27"
    F3_30 = "F3_30"
    F3_31 = "F3_31"
    F3_36 = "F3_36"
    F3_38 = "F3_38"
    F3_41 = "F3_41"
    F3_43 = "F3_43"


class Branch(Enum):
    PLUS = "plus"
    MINUS = "minus"


@dataclass(frozen=True)
class SolutionFamily:
    family_id: FamilyId
    params: tuple[tuple[str, float], ...]
    branch: Branch = Branch.PLUS

    @property
    def param_dict(self) -> dict[str, float]:
        return dict(self.params)


def make_family(fid: FamilyId, branch: Branch | str = Branch.PLUS,
                **params: float) -> SolutionFamily:
    if isinstance(branch, str):
        branch = Branch(branch)
    merged = dict(_DEFAULTS[fid])
    for key, value in params.items():
        if key not in merged:
            raise ParameterConstraintViolation(
                f"{fid.value} has no parameter {key!r} (expected {sorted(merged)})"
            )
        merged[key] = float(value)
    return SolutionFamily(fid, tuple(sorted(merged.items())), branch)


@dataclass(frozen=True)
class AdmissibleDomain:
    u: Interval
    v: Interval
    exclusions: tuple[str, ...] = ()

    def sampling_box(self, cap: float = SAMPLING_CAP) -> tuple[Interval, Interval]:
        return self.u.clipped(cap), self.v.clipped(cap)


@dataclass(frozen=True)
class FamilyBuild:
    family: SolutionFamily
    surface: TranslationSurface
    case: CaseId
    domain: AdmissibleDomain
    quadrature_backed: bool
    ode_checks: tuple[tuple[OdeCase, str], ...]


@dataclass(frozen=True)
class _Assembly:
    family: SolutionFamily
    ttype: TranslationType
    space: AmbientSpace
    f: Profile
    g: Profile
    case: CaseId
    quadrature_backed: bool
    ode_checks: tuple[tuple[OdeCase, str], ...]
    admissible: AdmissibleDomain | None
    empty_reason: str | None


@dataclass(frozen=True)
class FamilyReport:
    family_id: str
    params: dict[str, float]
    branch: str
    n_samples: int
    mode: str  # "full" or "residual-only"
    max_abs_numerator: float | None
    max_abs_residual: float
    tolerance: float
    verdict: bool
    empty_reason: str | None
    elapsed_ms: float


_DEFAULTS: dict[FamilyId, dict[str, float]] = {
    FamilyId.F2_23: {"c3": 0.0, "a": 0.0, "c5": 0.0},
    FamilyId.F2_24: {"c3_bar": 0.0, "a1": 0.0, "c6": 0.0},
    FamilyId.F2_35: {"c0_tilde": 1.0, "a_tilde": 0.0, "b_tilde": 0.0},
    FamilyId.F2_39: {"c0_hat": 1.0, "a_hat": 2.0, "b_hat": 0.0},
    FamilyId.F2_40: {"c0_prime": 1.0, "b_prime": 0.0},
    FamilyId.F2_50: {"c0": 1.0, "c1": 2.0, "c2": 0.0},
    FamilyId.F2_51: {"c": 1.0, "c3": 0.0, "c4": 0.0, "c5": 0.0},
    FamilyId.F3_10: {"c": 1.5, "a": 0.0, "b_bar": 0.0},
    FamilyId.F3_12: {"c": 0.5, "c_tilde": -1.0, "b_tilde": 0.0},
    FamilyId.F3_13: {"c_hat": 1.5, "a1": 0.0, "b_bar1": 0.0},
    FamilyId.F3_14: {"c_hat": 0.5, "c_tilde1": -1.0, "b_tilde": 0.0},
    FamilyId.F3_25: {"c0_tilde": 0.5, "a_tilde": 0.0, "b_tilde": 0.0},
    FamilyId.F3_27: {"c0_tilde": 1.5, "c1": -1.0, "b_bar1": 0.0},
    FamilyId.F3_30: {"c0_hat": 1.0, "a_hat": -0.3, "b_hat": 0.0},
    FamilyId.F3_31: {"c0_prime": 1.0, "c1_prime": 0.0, "b_prime": 0.0},
    FamilyId.F3_36: {"c1": 0.3, "c2": 0.4, "c3": 0.0},
    FamilyId.F3_38: {"c0": 1.0, "c_hat": -1.0, "c_hat1": -1.0, "a": 0.0},
    FamilyId.F3_41: {"c1": 0.5, "c2": 2.0, "c3": 0.0},
    FamilyId.F3_43: {"c0_bar": 1.0, "c3": 1.0, "c4": 0.0, "b": 0.0},
}

PARAM_NAMES: dict[FamilyId, tuple[str, ...]] = {
    fid: tuple(sorted(defaults)) for fid, defaults in _DEFAULTS.items()
}

BRANCHED_FAMILIES = frozenset({FamilyId.F2_39, FamilyId.F3_30})

# Family ids grouped by the classification suite they belong to.
THEOREM_SUITES: dict[str, tuple[FamilyId, ...]] = {
    "2.2": (FamilyId.F2_23, FamilyId.F2_24),
    "2.3": (FamilyId.F2_35, FamilyId.F2_39, FamilyId.F2_40),
    "2.4": (FamilyId.F2_50, FamilyId.F2_51),
    "3.1": (FamilyId.F3_10, FamilyId.F3_12, FamilyId.F3_13, FamilyId.F3_14),
    "3.2": (FamilyId.F3_25, FamilyId.F3_27, FamilyId.F3_30, FamilyId.F3_31),
    "3.3": (FamilyId.F3_36, FamilyId.F3_38),
    "3.4": (FamilyId.F3_41, FamilyId.F3_43),
}


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ParameterConstraintViolation(message)


def _sorted_interval(a: float, b: float) -> Interval:
    return Interval(min(a, b), max(a, b))


def _cos_component(q: float, a: float) -> Interval:
    """Component of cos(q*u - a) != 0 around q*u - a = 0, no guard applied."""
    return _sorted_interval((a - math.pi / 2.0) / q, (a + math.pi / 2.0) / q)


# Derivative cap for admissible boxes of log|cos| profiles.  Past it the
# residual is a difference of terms ~ slope^4 and double rounding alone would
# exceed the closed-form verification tolerance.
SLOPE_CAP = 20.0


def _cos_admissible(k: float, q: float, a: float) -> Interval:
    """Admissible u box of k*ln|cos(q*u - a)|: away from the pole and |d1| <= cap."""
    theta_half = min(math.pi / 2.0 - abs(q) * EDGE_MARGIN,
                     math.atan(SLOPE_CAP / abs(k * q)))
    return _sorted_interval((a - theta_half) / q, (a + theta_half) / q)


_EUC_METRIC = AmbientSpace(Signature.EUCLIDEAN, ConnectionKind.SEMI_SYMMETRIC_METRIC)
_EUC_NONMETRIC = AmbientSpace(Signature.EUCLIDEAN, ConnectionKind.SEMI_SYMMETRIC_NON_METRIC)
_LOR_METRIC = AmbientSpace(Signature.LORENTZIAN, ConnectionKind.SEMI_SYMMETRIC_METRIC)
_LOR_NONMETRIC = AmbientSpace(Signature.LORENTZIAN, ConnectionKind.SEMI_SYMMETRIC_NON_METRIC)


def _build_f2_23(fam: SolutionFamily, p: Mapping[str, float]) -> _Assembly:
    scale = p["c3"] ** 2 + 1.0
    q = 2.0 / math.sqrt(scale)
    raw = _cos_component(q, p["a"])
    f = log_abs_cos_profile(-scale / 2.0, q, p["a"],
                            domain=raw.shrunk(SINGULARITY_GUARD), label="F2_23.f")
    g = affine_profile(p["c3"], p["c5"], label="F2_23.g")
    dom = AdmissibleDomain(_cos_admissible(-scale / 2.0, q, p["a"]), REAL_LINE,
                           (f"cos argument vanishes at u = {raw.lo:.6g} and {raw.hi:.6g}",))
    return _Assembly(fam, TranslationType.I, _EUC_METRIC, f, g, CaseId.E_M_I,
                     False, ((OdeCase.of(OdeId.O2_21, c3=p["c3"]), "f"),), dom, None)


def _build_f2_24(fam: SolutionFamily, p: Mapping[str, float]) -> _Assembly:
    scale = p["c3_bar"] ** 2 + 1.0
    q = 2.0 / math.sqrt(scale)
    raw = _cos_component(q, p["a1"])
    f = affine_profile(p["c3_bar"], p["c6"], label="F2_24.f")
    g = log_abs_cos_profile(-scale / 2.0, q, p["a1"],
                            domain=raw.shrunk(SINGULARITY_GUARD), label="F2_24.g")
    dom = AdmissibleDomain(REAL_LINE, _cos_admissible(-scale / 2.0, q, p["a1"]),
                           (f"cos argument vanishes at v = {raw.lo:.6g} and {raw.hi:.6g}",))
    return _Assembly(fam, TranslationType.I, _EUC_METRIC, f, g, CaseId.E_M_I,
                     False, ((OdeCase.of(OdeId.O2_21, c3=p["c3_bar"]), "g"),), dom, None)


def _build_f2_35(fam: SolutionFamily, p: Mapping[str, float]) -> _Assembly:
    c0t = p["c0_tilde"]
    _require(c0t != 0.0, "F2_35 requires c0_tilde != 0")
    scale = c0t * c0t + 1.0
    q = 2.0 * c0t / math.sqrt(scale)
    raw = _cos_component(q, p["a_tilde"])
    f = log_abs_cos_profile(scale / (2.0 * c0t), q, p["a_tilde"], p["b_tilde"],
                            domain=raw.shrunk(SINGULARITY_GUARD), label="F2_35.f")
    g = affine_profile(c0t, 0.0, label="F2_35.g")
    dom = AdmissibleDomain(_cos_admissible(scale / (2.0 * c0t), q, p["a_tilde"]),
                           REAL_LINE,
                           (f"cos argument vanishes at u = {raw.lo:.6g} and {raw.hi:.6g}",))
    return _Assembly(fam, TranslationType.II, _EUC_METRIC, f, g, CaseId.E_M_II_III,
                     False, ((OdeCase.of(OdeId.O2_33, c0_tilde=c0t), "f"),), dom, None)


def _quadrature_anchor(domain: Interval) -> float:
    if domain.contains(0.0):
        return 0.0
    if math.isfinite(domain.lo) and math.isfinite(domain.hi):
        return domain.midpoint
    if math.isfinite(domain.lo):
        return domain.lo + 1.0
    return domain.hi - 1.0


def _build_f2_39(fam: SolutionFamily, p: Mapping[str, float]) -> _Assembly:
    c0h, ah = p["c0_hat"], p["a_hat"]
    _require(ah > 0.0, "F2_39 requires a_hat > 0")
    kk = 1.0 / (c0h * c0h + 1.0)
    sign = 1.0 if fam.branch is Branch.PLUS else -1.0
    v_star = 0.25 * math.log(kk / ah)
    prof_lo = 0.25 * math.log((kk + 1e-9) / ah)

    def radicand(x: float) -> float:
        return ah * math.exp(4.0 * x) - kk

    def integrand(x: float) -> float:
        r = radicand(x)
        if r <= 0.0:
            raise DomainError(f"F2_39: radicand {r!r} nonpositive at v={x!r}")
        return sign / math.sqrt(r)

    def integrand_d1(x: float) -> float:
        r = radicand(x)
        if r <= 0.0:
            raise DomainError(f"F2_39: radicand {r!r} nonpositive at v={x!r}")
        return -sign * 2.0 * ah * math.exp(4.0 * x) * r ** -1.5

    domain = Interval(prof_lo, math.inf)
    g = profile_quadrature(integrand, integrand_d1, base=p["b_hat"], spec=_QUAD_SPEC,
                           domain=domain, base_point=_quadrature_anchor(domain),
                           label="F2_39.g")
    f = affine_profile(c0h, 0.0, label="F2_39.f")
    dom = AdmissibleDomain(REAL_LINE, Interval(v_star + EDGE_MARGIN, math.inf),
                           (f"radicand vanishes at v = {v_star:.6g}",))
    return _Assembly(fam, TranslationType.II, _EUC_METRIC, f, g, CaseId.E_M_II_III,
                     True, ((OdeCase.of(OdeId.O2_36, c0_hat=c0h), "g"),), dom, None)


def _build_f2_40(fam: SolutionFamily, p: Mapping[str, float]) -> _Assembly:
    f = affine_profile(p["c0_prime"], p["b_prime"], label="F2_40.f")
    g = affine_profile(0.0, 0.0, label="F2_40.g")
    return _Assembly(fam, TranslationType.II, _EUC_METRIC, f, g, CaseId.E_M_II_III,
                     False, (), AdmissibleDomain(REAL_LINE, REAL_LINE), None)


def _build_f2_50(fam: SolutionFamily, p: Mapping[str, float]) -> _Assembly:
    f = affine_profile(p["c0"], 0.0, label="F2_50.f")
    g = affine_profile(p["c1"], p["c2"], label="F2_50.g")
    return _Assembly(fam, TranslationType.I, _EUC_NONMETRIC, f, g, CaseId.E_NM_ALL,
                     False, (), AdmissibleDomain(REAL_LINE, REAL_LINE), None)


def _build_f2_51(fam: SolutionFamily, p: Mapping[str, float]) -> _Assembly:
    c = p["c"]
    _require(c != 0.0, "F2_51 requires c != 0")
    raw_u = _cos_component(c, p["c3"])
    raw_v = _cos_component(c, p["c4"])
    f = log_abs_cos_profile(1.0 / c, c, p["c3"],
                            domain=raw_u.shrunk(SINGULARITY_GUARD), label="F2_51.f")
    g = log_abs_cos_profile(-1.0 / c, c, p["c4"], p["c5"],
                            domain=raw_v.shrunk(SINGULARITY_GUARD), label="F2_51.g")
    dom = AdmissibleDomain(
        _cos_admissible(1.0 / c, c, p["c3"]), _cos_admissible(1.0 / c, c, p["c4"]),
        (f"cos argument vanishes at u = {raw_u.lo:.6g} and {raw_u.hi:.6g}",
         f"cos argument vanishes at v = {raw_v.lo:.6g} and {raw_v.hi:.6g}"),
    )
    return _Assembly(fam, TranslationType.I, _EUC_NONMETRIC, f, g, CaseId.E_NM_ALL,
                     False, (), dom, None)


def _build_f3_10(fam: SolutionFamily, p: Mapping[str, float]) -> _Assembly:
    c = p["c"]
    _require(c * c > 1.0, "F3_10 requires c^2 > 1")
    scale = c * c - 1.0
    q = 2.0 / math.sqrt(scale)
    raw = _cos_component(q, p["a"])
    f = log_abs_cos_profile(-scale / 2.0, q, p["a"],
                            domain=raw.shrunk(SINGULARITY_GUARD), label="F3_10.f")
    g = affine_profile(c, p["b_bar"], label="F3_10.g")
    reason = f"no spacelike points: 1 - f'^2 - g'^2 <= 1 - c^2 = {1.0 - c * c:.6g} < 0"
    return _Assembly(fam, TranslationType.I, _LOR_METRIC, f, g, CaseId.L_M_I,
                     False, ((OdeCase.of(OdeId.O3_8, c=c), "f"),), None, reason)


def _tanh_ratio_integrands(s: float, coeff: float, rate: float):
    """f' = s (1 + coeff*e^(rate*x)) / (1 - coeff*e^(rate*x)) and its derivative."""

    def integrand(x: float) -> float:
        t = coeff * math.exp(rate * x)
        den = 1.0 - t
        if abs(den) < 1e-12:
            raise DomainError(f"ratio denominator vanishes at x={x!r}")
        return s * (1.0 + t) / den

    def integrand_d1(x: float) -> float:
        t = coeff * math.exp(rate * x)
        den = 1.0 - t
        if abs(den) < 1e-12:
            raise DomainError(f"ratio denominator vanishes at x={x!r}")
        return 2.0 * s * rate * t / (den * den)

    return integrand, integrand_d1


def _ratio_domain(coeff: float, rate: float) -> Interval:
    """Component of 1 - coeff*e^(rate*x) != 0, preferring the one containing 0."""
    if coeff <= 0.0:
        return REAL_LINE
    x_star = -math.log(coeff) / rate
    if x_star > 0.0:
        return Interval(-math.inf, x_star - SINGULARITY_GUARD)
    if x_star < 0.0:
        return Interval(x_star + SINGULARITY_GUARD, math.inf)
    return Interval(SINGULARITY_GUARD, math.inf)


def _build_f3_12(fam: SolutionFamily, p: Mapping[str, float]) -> _Assembly:
    c, ct = p["c"], p["c_tilde"]
    _require(c * c < 1.0, "F3_12 requires c^2 < 1")
    _require(ct != 0.0, "F3_12 requires c_tilde != 0")
    s = math.sqrt(1.0 - c * c)
    rate = -4.0 / s
    integrand, integrand_d1 = _tanh_ratio_integrands(s, ct, rate)
    domain = _ratio_domain(ct, rate)
    f = profile_quadrature(integrand, integrand_d1, base=0.0, spec=_QUAD_SPEC,
                           domain=domain, base_point=_quadrature_anchor(domain),
                           label="F3_12.f")
    g = affine_profile(c, p["b_tilde"], label="F3_12.g")
    checks = ((OdeCase.of(OdeId.O3_8, c=c), "f"),)
    if ct > 0.0:
        reason = "no spacelike points: f'^2 > 1 - c^2 everywhere for c_tilde > 0"
        return _Assembly(fam, TranslationType.I, _LOR_METRIC, f, g, CaseId.L_M_I,
                         True, checks, None, reason)
    if 100.0 * s <= 1.02:
        reason = f"spacelike margin below floor: 1 - c^2 = {s * s:.3g}"
        return _Assembly(fam, TranslationType.I, _LOR_METRIC, f, g, CaseId.L_M_I,
                         True, checks, None, reason)
    # f' = s*tanh(2u/s - ln|ct|/2); keep s^2 sech^2 >= floor
    y_max = math.acosh(100.0 * s)
    shift = 0.5 * math.log(-ct)
    u_interval = _sorted_interval(0.5 * s * (-y_max + shift), 0.5 * s * (y_max + shift))
    dom = AdmissibleDomain(u_interval, REAL_LINE,
                           ("EG - F^2 decays to 0 as |u| grows",))
    return _Assembly(fam, TranslationType.I, _LOR_METRIC, f, g, CaseId.L_M_I,
                     True, checks, dom, None)


def _build_f3_13(fam: SolutionFamily, p: Mapping[str, float]) -> _Assembly:
    ch = p["c_hat"]
    _require(ch * ch > 1.0, "F3_13 requires c_hat^2 > 1")
    scale = ch * ch - 1.0
    q = 2.0 / math.sqrt(scale)
    raw = _cos_component(q, p["a1"])
    f = affine_profile(ch, p["b_bar1"], label="F3_13.f")
    g = log_abs_cos_profile(-scale / 2.0, q, p["a1"],
                            domain=raw.shrunk(SINGULARITY_GUARD), label="F3_13.g")
    reason = f"no spacelike points: 1 - f'^2 - g'^2 <= 1 - c_hat^2 = {1.0 - ch * ch:.6g} < 0"
    return _Assembly(fam, TranslationType.I, _LOR_METRIC, f, g, CaseId.L_M_I,
                     False, ((OdeCase.of(OdeId.O3_8, c=ch), "g"),), None, reason)


def _build_f3_14(fam: SolutionFamily, p: Mapping[str, float]) -> _Assembly:
    ch, ct1 = p["c_hat"], p["c_tilde1"]
    _require(ch * ch < 1.0, "F3_14 requires c_hat^2 < 1")
    _require(ct1 != 0.0, "F3_14 requires c_tilde1 != 0")
    s = math.sqrt(1.0 - ch * ch)
    rate = -4.0 / s
    integrand, integrand_d1 = _tanh_ratio_integrands(s, ct1, rate)
    domain = _ratio_domain(ct1, rate)
    g = profile_quadrature(integrand, integrand_d1, base=p["b_tilde"], spec=_QUAD_SPEC,
                           domain=domain, base_point=_quadrature_anchor(domain),
                           label="F3_14.g")
    f = affine_profile(ch, 0.0, label="F3_14.f")
    checks = ((OdeCase.of(OdeId.O3_8, c=ch), "g"),)
    if ct1 > 0.0:
        reason = "no spacelike points: g'^2 > 1 - c_hat^2 everywhere for c_tilde1 > 0"
        return _Assembly(fam, TranslationType.I, _LOR_METRIC, f, g, CaseId.L_M_I,
                         True, checks, None, reason)
    if 100.0 * s <= 1.02:
        reason = f"spacelike margin below floor: 1 - c_hat^2 = {s * s:.3g}"
        return _Assembly(fam, TranslationType.I, _LOR_METRIC, f, g, CaseId.L_M_I,
                         True, checks, None, reason)
    y_max = math.acosh(100.0 * s)
    shift = 0.5 * math.log(-ct1)
    v_interval = _sorted_interval(0.5 * s * (-y_max + shift), 0.5 * s * (y_max + shift))
    dom = AdmissibleDomain(REAL_LINE, v_interval,
                           ("EG - F^2 decays to 0 as |v| grows",))
    return _Assembly(fam, TranslationType.I, _LOR_METRIC, f, g, CaseId.L_M_I,
                     True, checks, dom, None)


def _build_f3_25(fam: SolutionFamily, p: Mapping[str, float]) -> _Assembly:
    c0t = p["c0_tilde"]
    _require(c0t != 0.0 and c0t * c0t < 1.0, "F3_25 requires 0 < c0_tilde^2 < 1")
    s = math.sqrt(1.0 - c0t * c0t)
    q = 2.0 * c0t / s
    raw = _cos_component(q, p["a_tilde"])
    f = log_abs_cos_profile((1.0 - c0t * c0t) / (2.0 * c0t), q, p["a_tilde"], p["b_tilde"],
                            domain=raw.shrunk(SINGULARITY_GUARD), label="F3_25.f")
    g = affine_profile(c0t, 0.0, label="F3_25.g")
    reason = (f"no spacelike points: g'^2 - f'^2 - 1 <= c0_tilde^2 - 1 = "
              f"{c0t * c0t - 1.0:.6g} < 0")
    return _Assembly(fam, TranslationType.II, _LOR_METRIC, f, g, CaseId.L_M_II_III,
                     False, ((OdeCase.of(OdeId.O3_23, c0_tilde=c0t), "f"),), None, reason)


def _build_f3_27(fam: SolutionFamily, p: Mapping[str, float]) -> _Assembly:
    c0t, c1 = p["c0_tilde"], p["c1"]
    _require(c0t * c0t > 1.0, "F3_27 requires c0_tilde^2 > 1")
    _require(c1 != 0.0, "F3_27 requires c1 != 0")
    s = math.sqrt(c0t * c0t - 1.0)
    rate = 4.0 * c0t / s
    integrand, integrand_d1 = _tanh_ratio_integrands(s, c1, rate)
    domain = _ratio_domain(c1, rate)
    f = profile_quadrature(integrand, integrand_d1, base=0.0, spec=_QUAD_SPEC,
                           domain=domain, base_point=_quadrature_anchor(domain),
                           label="F3_27.f")
    g = affine_profile(c0t, p["b_bar1"], label="F3_27.g")
    checks = ((OdeCase.of(OdeId.O3_23, c0_tilde=c0t), "f"),)
    if c1 > 0.0:
        reason = "no spacelike points: f'^2 > c0_tilde^2 - 1 everywhere for c1 > 0"
        return _Assembly(fam, TranslationType.II, _LOR_METRIC, f, g, CaseId.L_M_II_III,
                         True, checks, None, reason)
    if 100.0 * s <= 1.02:
        reason = f"spacelike margin below floor: c0_tilde^2 - 1 = {s * s:.3g}"
        return _Assembly(fam, TranslationType.II, _LOR_METRIC, f, g, CaseId.L_M_II_III,
                         True, checks, None, reason)
    # f' = s*tanh(y) with y = -(rate*u + ln|c1|)/2
    y_max = math.acosh(100.0 * s)
    shift = math.log(-c1)
    u_interval = _sorted_interval(-(2.0 * y_max + shift) / rate,
                                  (2.0 * y_max - shift) / rate)
    dom = AdmissibleDomain(u_interval, REAL_LINE,
                           ("EG - F^2 decays to 0 as |u| grows",))
    return _Assembly(fam, TranslationType.II, _LOR_METRIC, f, g, CaseId.L_M_II_III,
                     True, checks, dom, None)


def _build_f3_30(fam: SolutionFamily, p: Mapping[str, float]) -> _Assembly:
    c0h, ah = p["c0_hat"], p["a_hat"]
    _require(ah != 0.0, "F3_30 requires a_hat != 0")
    kk = 1.0 / (c0h * c0h + 1.0)
    sign = 1.0 if fam.branch is Branch.PLUS else -1.0

    def radicand(x: float) -> float:
        return ah * math.exp(-4.0 * x) + kk

    def integrand(x: float) -> float:
        r = radicand(x)
        if r <= 0.0:
            raise DomainError(f"F3_30: radicand {r!r} nonpositive at v={x!r}")
        return sign / math.sqrt(r)

    def integrand_d1(x: float) -> float:
        r = radicand(x)
        if r <= 0.0:
            raise DomainError(f"F3_30: radicand {r!r} nonpositive at v={x!r}")
        return sign * 2.0 * ah * math.exp(-4.0 * x) * r ** -1.5

    checks = ((OdeCase.of(OdeId.O3_28, c0_hat=c0h), "g"),)
    f = affine_profile(c0h, 0.0, label="F3_30.f")
    if ah > 0.0:
        g = profile_quadrature(integrand, integrand_d1, base=p["b_hat"], spec=_QUAD_SPEC,
                               domain=REAL_LINE, base_point=0.0, label="F3_30.g")
        reason = "no spacelike points: g'^2 < 1 + c0_hat^2 everywhere for a_hat > 0"
        return _Assembly(fam, TranslationType.II, _LOR_METRIC, f, g, CaseId.L_M_II_III,
                         True, checks, None, reason)
    v_star = 0.25 * math.log(-ah / kk)
    prof_lo = -0.25 * math.log((kk - 1e-9) / -ah)
    v_hi = 0.25 * math.log(-ah / (SPACELIKE_FLOOR * kk * kk))
    domain = Interval(prof_lo, math.inf)
    g = profile_quadrature(integrand, integrand_d1, base=p["b_hat"], spec=_QUAD_SPEC,
                           domain=domain, base_point=_quadrature_anchor(domain),
                           label="F3_30.g")
    dom = AdmissibleDomain(REAL_LINE, Interval(v_star + EDGE_MARGIN, v_hi),
                           (f"radicand vanishes at v = {v_star:.6g}",
                            "EG - F^2 decays to 0 as v grows"))
    return _Assembly(fam, TranslationType.II, _LOR_METRIC, f, g, CaseId.L_M_II_III,
                     True, checks, dom, None)


def _build_f3_31(fam: SolutionFamily, p: Mapping[str, float]) -> _Assembly:
    c0p, c1p = p["c0_prime"], p["c1_prime"]
    _require(c1p == 0.0 or abs(c1p * c1p - c0p * c0p - 2.0) < 1e-9,
             "F3_31 requires c1_prime = 0 or c1_prime^2 - c0_prime^2 - 2 = 0")
    f = affine_profile(c0p, p["b_prime"], label="F3_31.f")
    g = affine_profile(c1p, 0.0, label="F3_31.g")
    beta_sq = c1p * c1p - c0p * c0p - 1.0
    if beta_sq >= SPACELIKE_FLOOR:
        dom = AdmissibleDomain(REAL_LINE, REAL_LINE)
        return _Assembly(fam, TranslationType.II, _LOR_METRIC, f, g,
                         CaseId.L_M_II_III, False, (), dom, None)
    reason = f"no spacelike points: g'^2 - f'^2 - 1 = {beta_sq:.6g} <= 0"
    return _Assembly(fam, TranslationType.II, _LOR_METRIC, f, g,
                     CaseId.L_M_II_III, False, (), None, reason)


def _build_f3_36(fam: SolutionFamily, p: Mapping[str, float]) -> _Assembly:
    c1, c2 = p["c1"], p["c2"]
    f = affine_profile(c1, 0.0, label="F3_36.f")
    g = affine_profile(c2, p["c3"], label="F3_36.g")
    alpha_sq = 1.0 - c1 * c1 - c2 * c2
    if alpha_sq >= SPACELIKE_FLOOR:
        dom = AdmissibleDomain(REAL_LINE, REAL_LINE)
        return _Assembly(fam, TranslationType.I, _LOR_NONMETRIC, f, g,
                         CaseId.L_NM_I, False, (), dom, None)
    reason = f"no spacelike points: 1 - f'^2 - g'^2 = {alpha_sq:.6g} <= 0"
    return _Assembly(fam, TranslationType.I, _LOR_NONMETRIC, f, g,
                     CaseId.L_NM_I, False, (), None, reason)


def _build_f3_38(fam: SolutionFamily, p: Mapping[str, float]) -> _Assembly:
    c0, ch, ch1 = p["c0"], p["c_hat"], p["c_hat1"]
    _require(c0 != 0.0, "F3_38 requires c0 != 0")
    _require(ch != 0.0 and ch1 != 0.0, "F3_38 requires c_hat, c_hat1 != 0")
    f = log_abs_exp_profile(1.0 / c0, c0, 1.0, -ch, p["a"], label="F3_38.f")
    g = log_abs_exp_profile(-1.0 / c0, c0, -ch1, 1.0, 0.0, label="F3_38.g")
    checks = ((OdeCase.of(OdeId.O3_37F, c0=c0), "f"),
              (OdeCase.of(OdeId.O3_37G, c0=c0), "g"))
    if ch > 0.0:
        reason = "no spacelike points: 1 - f'^2 < 0 everywhere for c_hat > 0"
        return _Assembly(fam, TranslationType.I, _LOR_NONMETRIC, f, g,
                         CaseId.L_NM_I, False, checks, None, reason)
    if ch1 > 0.0:
        reason = "no spacelike points: 1 - g'^2 < 0 everywhere for c_hat1 > 0"
        return _Assembly(fam, TranslationType.I, _LOR_NONMETRIC, f, g,
                         CaseId.L_NM_I, False, checks, None, reason)
    # f' = tanh(c0*u - ln|ch|/2), g' = -tanh(c0*v + ln|ch1|/2); boxes with
    # |f'|, |g'| <= 0.7 keep 1 - f'^2 - g'^2 >= 0.02.
    reach = math.atanh(0.7)
    fu_center = 0.5 * math.log(-ch) / c0
    gv_center = -0.5 * math.log(-ch1) / c0
    u_interval = _sorted_interval(fu_center - reach / c0, fu_center + reach / c0)
    v_interval = _sorted_interval(gv_center - reach / c0, gv_center + reach / c0)
    dom = AdmissibleDomain(u_interval, v_interval,
                           ("box keeps |f'|, |g'| <= 0.7 so the spacelike bound holds jointly",))
    return _Assembly(fam, TranslationType.I, _LOR_NONMETRIC, f, g,
                     CaseId.L_NM_I, False, checks, dom, None)


def _build_f3_41(fam: SolutionFamily, p: Mapping[str, float]) -> _Assembly:
    c1, c2 = p["c1"], p["c2"]
    f = affine_profile(c1, p["c3"], label="F3_41.f")
    g = affine_profile(c2, 0.0, label="F3_41.g")
    beta_sq = c2 * c2 - c1 * c1 - 1.0
    if beta_sq >= SPACELIKE_FLOOR:
        dom = AdmissibleDomain(REAL_LINE, REAL_LINE)
        return _Assembly(fam, TranslationType.II, _LOR_NONMETRIC, f, g,
                         CaseId.L_NM_II_III, False, (), dom, None)
    reason = f"no spacelike points: g'^2 - f'^2 - 1 = {beta_sq:.6g} <= 0"
    return _Assembly(fam, TranslationType.II, _LOR_NONMETRIC, f, g,
                     CaseId.L_NM_II_III, False, (), None, reason)


def _build_f3_43(fam: SolutionFamily, p: Mapping[str, float]) -> _Assembly:
    c0b, c3 = p["c0_bar"], p["c3"]
    _require(c0b != 0.0, "F3_43 requires c0_bar != 0")
    _require(c3 != 0.0, "F3_43 requires c3 != 0")
    raw_u = _cos_component(c0b, -p["c4"])
    f = log_abs_cos_profile(-1.0 / c0b, c0b, -p["c4"],
                            domain=raw_u.shrunk(SINGULARITY_GUARD), label="F3_43.f")
    checks = ((OdeCase.of(OdeId.O3_42F, c0_bar=c0b), "f"),
              (OdeCase.of(OdeId.O3_42G, c0_bar=c0b), "g"))
    if c3 < 0.0:
        g = log_abs_exp_profile(1.0 / c0b, c0b, 1.0, -c3, p["b"], label="F3_43.g")
        reason = "no spacelike points: g'^2 < 1 <= 1 + f'^2 everywhere for c3 < 0"
        return _Assembly(fam, TranslationType.II, _LOR_NONMETRIC, f, g,
                         CaseId.L_NM_II_III, False, checks, None, reason)
    # g' = (A + c3)/(A - c3) with A = e^(2*c0b*v); stay on the A > c3 side where
    # g' > 1, between the singularity and the point where g'^2 = 2 + 0.02.
    v_star = 0.5 * math.log(c3) / c0b
    g_domain = (Interval(v_star + SINGULARITY_GUARD, math.inf) if c0b > 0.0
                else Interval(-math.inf, v_star - SINGULARITY_GUARD))
    g = log_abs_exp_profile(1.0 / c0b, c0b, 1.0, -c3, p["b"],
                            domain=g_domain, label="F3_43.g")
    rho = math.sqrt(2.0 + 0.02)
    v_far = 0.5 * math.log(c3 * (rho + 1.0) / (rho - 1.0)) / c0b
    if v_star < v_far:
        v_interval = Interval(v_star + EDGE_MARGIN, v_far)
    else:
        v_interval = Interval(v_far, v_star - EDGE_MARGIN)
    # |f'| <= 1 on the u box, so g'^2 - f'^2 - 1 >= rho^2 - 2 = 0.02 there.
    quarter = _sorted_interval((-math.pi / 4.0 - p["c4"]) / c0b,
                               (math.pi / 4.0 - p["c4"]) / c0b)
    dom = AdmissibleDomain(
        quarter, v_interval,
        (f"cos argument vanishes at u = {raw_u.lo:.6g} and {raw_u.hi:.6g}",
         f"g' blows up at v = {v_star:.6g}"),
    )
    return _Assembly(fam, TranslationType.II, _LOR_NONMETRIC, f, g,
                     CaseId.L_NM_II_III, False, checks, dom, None)


_BUILDERS: dict[FamilyId, Callable[[SolutionFamily, Mapping[str, float]], _Assembly]] = {
    FamilyId.F2_23: _build_f2_23,
    FamilyId.F2_24: _build_f2_24,
    FamilyId.F2_35: _build_f2_35,
    FamilyId.F2_39: _build_f2_39,
    FamilyId.F2_40: _build_f2_40,
    FamilyId.F2_50: _build_f2_50,
    FamilyId.F2_51: _build_f2_51,
    FamilyId.F3_10: _build_f3_10,
    FamilyId.F3_12: _build_f3_12,
    FamilyId.F3_13: _build_f3_13,
    FamilyId.F3_14: _build_f3_14,
    FamilyId.F3_25: _build_f3_25,
    FamilyId.F3_27: _build_f3_27,
    FamilyId.F3_30: _build_f3_30,
    FamilyId.F3_31: _build_f3_31,
    FamilyId.F3_36: _build_f3_36,
    FamilyId.F3_38: _build_f3_38,
    FamilyId.F3_41: _build_f3_41,
    FamilyId.F3_43: _build_f3_43,
}


def _assemble(fam: SolutionFamily) -> _Assembly:
    params = dict(_DEFAULTS[fam.family_id])
    for key, value in fam.params:
        if key not in params:
            raise ParameterConstraintViolation(
                f"{fam.family_id.value} has no parameter {key!r}"
            )
        params[key] = value
    return _BUILDERS[fam.family_id](fam, params)


def build(fam: SolutionFamily) -> FamilyBuild:
    """Construct the surface of a family; EmptyDomain if it is never spacelike."""
    asm = _assemble(fam)
    if asm.admissible is None:
        raise EmptyDomain(f"{fam.family_id.value}: {asm.empty_reason}")
    surface = TranslationSurface(asm.ttype, asm.f, asm.g, asm.space)
    return FamilyBuild(fam, surface, asm.case, asm.admissible,
                       asm.quadrature_backed, asm.ode_checks)


def default_settings(fid: FamilyId) -> tuple[SolutionFamily, ...]:
    """Two representative parameter settings per family (both branches where present)."""
    return _DEFAULT_SETTINGS[fid]


def all_default_settings() -> tuple[SolutionFamily, ...]:
    return tuple(fam for fid in FamilyId for fam in _DEFAULT_SETTINGS[fid])


_DEFAULT_SETTINGS: dict[FamilyId, tuple[SolutionFamily, ...]] = {
    FamilyId.F2_23: (make_family(FamilyId.F2_23),
                     make_family(FamilyId.F2_23, c3=1.5, a=0.4, c5=2.0)),
    FamilyId.F2_24: (make_family(FamilyId.F2_24),
                     make_family(FamilyId.F2_24, c3_bar=-0.8, a1=-0.2, c6=1.0)),
    FamilyId.F2_35: (make_family(FamilyId.F2_35),
                     make_family(FamilyId.F2_35, c0_tilde=-2.0, a_tilde=0.3, b_tilde=-1.0)),
    FamilyId.F2_39: (make_family(FamilyId.F2_39, branch=Branch.PLUS),
                     make_family(FamilyId.F2_39, branch=Branch.MINUS,
                                 c0_hat=0.5, a_hat=1.5, b_hat=0.5)),
    FamilyId.F2_40: (make_family(FamilyId.F2_40),
                     make_family(FamilyId.F2_40, c0_prime=-2.0, b_prime=3.0)),
    FamilyId.F2_50: (make_family(FamilyId.F2_50),
                     make_family(FamilyId.F2_50, c0=-0.5, c1=0.25, c2=1.0)),
    FamilyId.F2_51: (make_family(FamilyId.F2_51),
                     make_family(FamilyId.F2_51, c=2.0, c3=0.2, c4=-0.3, c5=1.0)),
    FamilyId.F3_10: (make_family(FamilyId.F3_10),
                     make_family(FamilyId.F3_10, c=-2.0, a=0.5, b_bar=1.0)),
    FamilyId.F3_12: (make_family(FamilyId.F3_12),
                     make_family(FamilyId.F3_12, c=-0.6, c_tilde=-0.2, b_tilde=1.0)),
    FamilyId.F3_13: (make_family(FamilyId.F3_13),
                     make_family(FamilyId.F3_13, c_hat=-1.2, a1=0.3, b_bar1=-1.0)),
    FamilyId.F3_14: (make_family(FamilyId.F3_14),
                     make_family(FamilyId.F3_14, c_hat=0.0, c_tilde1=-2.0, b_tilde=0.5)),
    FamilyId.F3_25: (make_family(FamilyId.F3_25),
                     make_family(FamilyId.F3_25, c0_tilde=-0.7, a_tilde=0.1, b_tilde=0.5)),
    FamilyId.F3_27: (make_family(FamilyId.F3_27),
                     make_family(FamilyId.F3_27, c0_tilde=-2.0, c1=-0.5, b_bar1=1.0)),
    FamilyId.F3_30: (make_family(FamilyId.F3_30, branch=Branch.PLUS),
                     make_family(FamilyId.F3_30, branch=Branch.MINUS,
                                 c0_hat=0.0, a_hat=-0.5, b_hat=1.0)),
    FamilyId.F3_31: (make_family(FamilyId.F3_31),
                     make_family(FamilyId.F3_31, c0_prime=0.5, c1_prime=0.0, b_prime=2.0)),
    FamilyId.F3_36: (make_family(FamilyId.F3_36),
                     make_family(FamilyId.F3_36, c1=0.0, c2=0.0, c3=5.0)),
    FamilyId.F3_38: (make_family(FamilyId.F3_38),
                     make_family(FamilyId.F3_38, c0=2.0, c_hat=-0.5, c_hat1=-2.0, a=1.0)),
    FamilyId.F3_41: (make_family(FamilyId.F3_41),
                     make_family(FamilyId.F3_41, c1=0.0, c2=1.5, c3=-1.0)),
    FamilyId.F3_43: (make_family(FamilyId.F3_43),
                     make_family(FamilyId.F3_43, c0_bar=0.5, c3=2.0, c4=0.3, b=1.0)),
}


def family_tolerance(fam: SolutionFamily) -> float:
    """Verification tolerance: quadrature-backed families get the looser bound."""
    return 1e-6 if _assemble(fam).quadrature_backed else 1e-8


def perturb_profile(profile: Profile, eps: float) -> Profile:
    """Profile plus eps*u^2; the negative control for family verification."""

    def fn(u: float) -> Jet2:
        return profile.fn(u) + Jet2(eps * u * u, 2.0 * eps * u, 2.0 * eps)

    return Profile(fn, profile.domain, f"{profile.label}+{eps:g}u^2")


def _moderate_box(profile: Profile, max_slope: float = 2.0,
                  half_width: float = 2.0, step: float = 0.05) -> Interval:
    """Interval around a well-behaved point where |d1| stays moderate.

    Used for residual-only sampling of families whose spacelike region is
    empty and for finite-difference oracles: it keeps evaluations away from
    poles where cancellation or stencil truncation would swamp the check.
    """

    def slope_ok(u: float) -> bool:
        try:
            return abs(profile.at(u).d1) <= max_slope
        except DomainError:
            return False

    start = None
    clipped = profile.domain.clipped(SAMPLING_CAP)
    for candidate in [0.0, clipped.midpoint] + [
        clipped.lo + k * clipped.width / 40.0 for k in range(1, 40)
    ]:
        if profile.domain.contains(candidate) and slope_ok(candidate):
            start = candidate
            break
    if start is None:
        raise DomainError(f"{profile.label}: no moderate-slope point found")
    lo = hi = start
    while hi - start < half_width and slope_ok(hi + step):
        hi += step
    while start - lo < half_width and slope_ok(lo - step):
        lo -= step
    if hi - lo < step:
        lo, hi = start - 0.5 * step, start + 0.5 * step
    return Interval(lo, hi)


def _residual_box(asm: _Assembly) -> tuple[Interval, Interval]:
    if asm.admissible is not None:
        return asm.admissible.sampling_box()
    return _moderate_box(asm.f), _moderate_box(asm.g)


def verify_family(fam: SolutionFamily, n_samples: int = 200, rng_seed: int = 0,
                  tolerance: float | None = None) -> FamilyReport:
    """Sample the admissible box; report worst |numerator| and |residual|."""
    t0 = time.perf_counter()
    asm = _assemble(fam)
    if asm.admissible is None:
        raise EmptyDomain(f"{fam.family_id.value}: {asm.empty_reason}")
    tol = tolerance if tolerance is not None else (1e-6 if asm.quadrature_backed else 1e-8)
    box_u, box_v = asm.admissible.sampling_box()
    rng = SplitMix64(rng_seed)
    worst_num = 0.0
    worst_res = 0.0
    kind = asm.space.connection
    for _ in range(n_samples):
        u = rng.uniform(box_u.lo, box_u.hi)
        v = rng.uniform(box_v.lo, box_v.hi)
        fj, gj = asm.f.at(u), asm.g.at(v)
        report = mean_curvature_from_jets(asm.ttype, asm.space, kind, fj, gj)
        worst_num = max(worst_num, abs(report.numerator))
        worst_res = max(worst_res, abs(residual(asm.case, fj, gj)))
    elapsed = (time.perf_counter() - t0) * 1e3
    return FamilyReport(
        fam.family_id.value, fam.param_dict, fam.branch.value, n_samples, "full",
        worst_num, worst_res, tol, worst_num <= tol and worst_res <= tol, None, elapsed,
    )


def verify_residual(fam: SolutionFamily, n_samples: int = 200, rng_seed: int = 0,
                    tolerance: float | None = None, perturb: float = 0.0) -> FamilyReport:
    """Sample the PDE residual only; works for empty-domain families and controls."""
    t0 = time.perf_counter()
    asm = _assemble(fam)
    tol = tolerance if tolerance is not None else (1e-6 if asm.quadrature_backed else 1e-8)
    box_u, box_v = _residual_box(asm)
    f = perturb_profile(asm.f, perturb) if perturb else asm.f
    rng = SplitMix64(rng_seed)
    worst_res = 0.0
    for _ in range(n_samples):
        u = rng.uniform(box_u.lo, box_u.hi)
        v = rng.uniform(box_v.lo, box_v.hi)
        worst_res = max(worst_res, abs(residual(asm.case, f.at(u), asm.g.at(v))))
    elapsed = (time.perf_counter() - t0) * 1e3
    return FamilyReport(
        fam.family_id.value, fam.param_dict, fam.branch.value, n_samples,
        "residual-only", None, worst_res, tol, worst_res <= tol,
        asm.empty_reason, elapsed,
    )


def verify_auto(fam: SolutionFamily, n_samples: int = 200, rng_seed: int = 0,
                tolerance: float | None = None, perturb: float = 0.0) -> FamilyReport:
    """Full verification where the family has spacelike points, residual-only otherwise."""
    if perturb:
        return verify_residual(fam, n_samples, rng_seed, tolerance, perturb)
    asm = _assemble(fam)
    if asm.admissible is None:
        return verify_residual(fam, n_samples, rng_seed, tolerance)
    return verify_family(fam, n_samples, rng_seed, tolerance)


def ode_pointwise_max(fam: SolutionFamily, n_samples: int = 200, rng_seed: int = 0) -> float:
    """Worst |h' - phi(h)| over samples, for every reduced-ODE binding of the family."""
    asm = _assemble(fam)
    if not asm.ode_checks:
        return 0.0
    box_u, box_v = _residual_box(asm)
    worst = 0.0
    rng = SplitMix64(rng_seed)
    for case, which in asm.ode_checks:
        phi = case.rhs()
        profile = asm.f if which == "f" else asm.g
        box = box_u if which == "f" else box_v
        for _ in range(n_samples):
            jet = profile.at(rng.uniform(box.lo, box.hi))
            worst = max(worst, abs(jet.d2 - phi(jet.d1)))
    return worst


@dataclass(frozen=True)
class OdeComparisonRecord:
    ode_case: str
    family_id: str
    which: str
    t_span: tuple[float, float]
    step: float
    max_abs_error: float


def ode_reference_runs(step: float = 1e-3) -> tuple[OdeComparisonRecord, ...]:
    """RK4 trajectories of every reduced ODE against its closed-form profile."""
    from .ode import compare_profile, integrate

    runs: list[tuple[SolutionFamily, str, tuple[float, float]]] = [
        (make_family(FamilyId.F2_23), "f", (0.0, 0.6)),
        (make_family(FamilyId.F2_35), "f", (0.0, 0.4)),
        (make_family(FamilyId.F2_39), "g", (0.0, 1.0)),
        (make_family(FamilyId.F3_12), "f", (0.0, 1.0)),
        (make_family(FamilyId.F3_27), "f", (0.0, 0.8)),
        (make_family(FamilyId.F3_30), "g", (0.0, 1.0)),
        (make_family(FamilyId.F3_38), "f", (0.0, 1.0)),
        (make_family(FamilyId.F3_38), "g", (0.0, 1.0)),
        (make_family(FamilyId.F3_43), "f", (0.0, 0.6)),
        (make_family(FamilyId.F3_43), "g", (0.3, 1.5)),
    ]
    records = []
    for fam, which, span in runs:
        asm = _assemble(fam)
        profile = asm.f if which == "f" else asm.g
        case = next(c for c, w in asm.ode_checks if w == which)
        h0 = profile.at(span[0]).d1
        traj = integrate(case, h0, span, step)
        err = compare_profile(traj, profile)
        records.append(OdeComparisonRecord(case.kind.value, fam.family_id.value,
                                           which, span, step, err))
    return tuple(records)
