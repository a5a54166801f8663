"""Command-line verification driver.

Exit codes: 0 all checks passed, 1 usage or configuration error, 2 a
verification check failed.  Reports are deterministic for a fixed seed: all
sampling runs on splitmix64 streams and no timing data is serialized.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
from dataclasses import dataclass, field

from . import __version__
from .catalog import (
    BRANCHED_FAMILIES,
    FamilyId,
    FamilyReport,
    THEOREM_SUITES,
    all_default_settings,
    build,
    default_settings,
    make_family,
    ode_reference_runs,
    verify_auto,
)
from .errors import (
    DomainError,
    EmptyDomain,
    ParameterConstraintViolation,
    UnknownCase,
    VerifierError,
)
from .jets import Jet2
from .ode import OdeCase, OdeId, compare_profile, integrate
from .pde import CaseId, equivalence_sweep, residual
from .sampling import child_seed
from .surface import immersion


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits with code 2
        raise UsageError(message)


_PARAM_FLAGS = (
    "a", "a1", "a_hat", "a_tilde", "b", "b_bar", "b_bar1", "b_hat", "b_prime",
    "b_tilde", "c", "c0", "c0_bar", "c0_hat", "c0_prime", "c0_tilde", "c1",
    "c1_prime", "c2", "c3", "c3_bar", "c4", "c5", "c6", "c_hat", "c_hat1",
    "c_tilde", "c_tilde1",
)


@dataclass
class RunConfig:
    command: str
    family: str | None = None
    params: dict[str, float] = field(default_factory=dict)
    branch: str | None = None
    case: str | None = None
    fjet: list[float] | None = None
    gjet: list[float] | None = None
    all: bool = False
    samples: int = 200
    seed: int = 0
    tolerance: float | None = None
    perturb: float = 0.0
    nu: int = 64
    nv: int = 64
    u_range: list[float] | None = None
    v_range: list[float] | None = None
    step: float = 1e-3
    format: str = "json"
    output: str | None = None

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    def echo_dict(self) -> dict:
        """Config as serialized into reports: the output path itself is not
        part of the verification semantics, so identical runs stay
        byte-identical wherever they are written."""
        data = self.to_dict()
        data.pop("output")
        return data

    @staticmethod
    def from_dict(data: dict) -> "RunConfig":
        fields = {f.name for f in dataclasses.fields(RunConfig)}
        unknown = set(data) - fields
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        return RunConfig(**data)


def _build_parser() -> _Parser:
    parser = _Parser(prog="ssmin", description=__doc__)
    parser.add_argument("--version", action="version", version=f"ssmin {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=("json", "markdown")):
        p.add_argument("--config", default=None, help="JSON config file; overrides flags")
        p.add_argument("--format", choices=fmt, default=fmt[0])
        p.add_argument("--output", default=None)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--samples", type=int, default=200)

    p_res = sub.add_parser("residual", help="evaluate one closed-form minimality residual")
    common(p_res)
    p_res.add_argument("--case", required=False)
    p_res.add_argument("--fjet", default=None, help="f jet as v,d1,d2")
    p_res.add_argument("--gjet", default=None, help="g jet as v,d1,d2")

    p_ver = sub.add_parser("verify", help="verify classified solution families")
    common(p_ver)
    p_ver.add_argument("--family", default=None)
    p_ver.add_argument("--all", action="store_true")
    p_ver.add_argument("--branch", choices=("plus", "minus"), default=None)
    p_ver.add_argument("--tolerance", type=float, default=None)
    p_ver.add_argument("--perturb", type=float, default=0.0)
    for name in _PARAM_FLAGS:
        p_ver.add_argument(f"--{name.replace('_', '-')}", dest=f"param_{name}",
                           type=float, default=None)

    p_eq = sub.add_parser("equivalence", help="check residual vs mean-curvature numerator")
    common(p_eq)
    p_eq.add_argument("--case", default=None)
    p_eq.add_argument("--all", action="store_true")
    p_eq.add_argument("--tolerance", type=float, default=None)

    p_ode = sub.add_parser("ode-compare", help="RK4 trajectories against closed forms")
    common(p_ode)
    p_ode.add_argument("--step", type=float, default=1e-3)
    p_ode.add_argument("--tolerance", type=float, default=None)

    p_mesh = sub.add_parser("mesh", help="export a surface mesh")
    common(p_mesh, fmt=("obj", "csv"))
    p_mesh.add_argument("--family", required=False)
    p_mesh.add_argument("--branch", choices=("plus", "minus"), default=None)
    p_mesh.add_argument("--nu", type=int, default=64)
    p_mesh.add_argument("--nv", type=int, default=64)
    p_mesh.add_argument("--u-range", default=None, help="lo:hi")
    p_mesh.add_argument("--v-range", default=None, help="lo:hi")
    for name in _PARAM_FLAGS:
        p_mesh.add_argument(f"--{name.replace('_', '-')}", dest=f"param_{name}",
                            type=float, default=None)

    p_rep = sub.add_parser("report", help="full verification report")
    common(p_rep)
    p_rep.add_argument("--all", action="store_true")
    p_rep.add_argument("--step", type=float, default=1e-3)
    p_rep.add_argument("--perturb", type=float, default=0.0)
    return parser


def _parse_range(text: str | None) -> list[float] | None:
    if text is None:
        return None
    try:
        lo, hi = (float(part) for part in text.split(":"))
    except ValueError:
        raise UsageError(f"range must be lo:hi, got {text!r}") from None
    if not lo < hi:
        raise UsageError(f"range must be increasing, got {text!r}")
    return [lo, hi]


def _parse_jet(text: str | None) -> list[float] | None:
    if text is None:
        return None
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"jet must be v,d1,d2, got {text!r}")
    return [float(part) for part in parts]


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    params = {
        name: getattr(args, f"param_{name}")
        for name in _PARAM_FLAGS
        if getattr(args, f"param_{name}", None) is not None
    }
    cfg = RunConfig(
        command=args.command,
        family=getattr(args, "family", None),
        params=params,
        branch=getattr(args, "branch", None),
        case=getattr(args, "case", None),
        fjet=_parse_jet(getattr(args, "fjet", None)),
        gjet=_parse_jet(getattr(args, "gjet", None)),
        all=getattr(args, "all", False),
        samples=args.samples,
        seed=args.seed,
        tolerance=getattr(args, "tolerance", None),
        perturb=getattr(args, "perturb", 0.0),
        nu=getattr(args, "nu", 64),
        nv=getattr(args, "nv", 64),
        u_range=_parse_range(getattr(args, "u_range", None)),
        v_range=_parse_range(getattr(args, "v_range", None)),
        step=getattr(args, "step", 1e-3),
        format=args.format,
        output=args.output,
    )
    if args.config is not None:
        try:
            with open(args.config, "r", encoding="utf-8") as fh:
                override = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config!r}: {exc}") from None
        merged = cfg.to_dict()
        merged.update(override)
        cfg = RunConfig.from_dict(merged)
    return cfg


def _family_id(name: str | None) -> FamilyId:
    if name is None:
        raise UsageError("--family is required (or use --all)")
    try:
        return FamilyId(name)
    except ValueError:
        raise UsageError(
            f"unknown family {name!r}; known: {', '.join(f.value for f in FamilyId)}"
        ) from None


def _case_id(name: str | None) -> CaseId:
    if name is None:
        raise UsageError("--case is required (or use --all)")
    try:
        return CaseId(name)
    except ValueError:
        raise UsageError(
            f"unknown case {name!r}; known: {', '.join(c.value for c in CaseId)}"
        ) from None


def _family_from_config(cfg: RunConfig):
    fid = _family_id(cfg.family)
    branch = cfg.branch or "plus"
    if cfg.branch is not None and fid not in BRANCHED_FAMILIES:
        raise UsageError(f"{fid.value} has no +- branch")
    return make_family(fid, branch=branch, **cfg.params)


def _report_record(rep: FamilyReport, theorem: str | None = None) -> dict:
    record = {
        "family_id": rep.family_id,
        "branch": rep.branch,
        "params": rep.params,
        "n_samples": rep.n_samples,
        "mode": rep.mode,
        "max_abs_numerator": rep.max_abs_numerator,
        "max_abs_residual": rep.max_abs_residual,
        "tolerance": rep.tolerance,
        "verdict": "pass" if rep.verdict else "fail",
        "empty_reason": rep.empty_reason,
    }
    if theorem is not None:
        record = {"theorem": theorem, **record}
    return record


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _emit_payload(payload: dict, cfg: RunConfig, markdown_renderer=None) -> None:
    if cfg.format == "markdown" and markdown_renderer is not None:
        _emit(markdown_renderer(payload), cfg)
    else:
        _emit(json.dumps(payload, indent=2) + "\n", cfg)


def cmd_residual(cfg: RunConfig) -> int:
    case = _case_id(cfg.case)
    if cfg.fjet is None or cfg.gjet is None:
        raise UsageError("residual needs --fjet and --gjet as v,d1,d2")
    value = residual(case, Jet2(*cfg.fjet), Jet2(*cfg.gjet))
    payload = {
        "version": __version__,
        "command": "residual",
        "case": case.value,
        "fjet": cfg.fjet,
        "gjet": cfg.gjet,
        "residual": value,
    }
    _emit_payload(payload, cfg)
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    if cfg.all:
        if cfg.params:
            raise UsageError("--all does not take family parameters")
        families = list(all_default_settings())
    else:
        families = [_family_from_config(cfg)]
    records = []
    ok = True
    for index, fam in enumerate(families):
        rep = verify_auto(fam, cfg.samples, child_seed(cfg.seed, index),
                          cfg.tolerance, cfg.perturb)
        ok = ok and rep.verdict
        records.append(_report_record(rep))
    payload = {
        "version": __version__,
        "command": "verify",
        "config": cfg.echo_dict(),
        "records": records,
        "summary": _family_summary(records),
    }
    _emit_payload(payload, cfg, _render_verify_markdown)
    return 0 if ok else 2


def _family_summary(records: list[dict]) -> dict:
    n_pass = sum(1 for r in records if r["verdict"] == "pass")
    return {"n_records": len(records), "n_pass": n_pass,
            "n_fail": len(records) - n_pass, "all_pass": n_pass == len(records)}


def cmd_equivalence(cfg: RunConfig) -> int:
    cases = list(CaseId) if cfg.all else [_case_id(cfg.case)]
    tol = cfg.tolerance if cfg.tolerance is not None else 1e-10
    n = cfg.samples if cfg.samples != 200 else 1000
    records = []
    ok = True
    for index, case in enumerate(cases):
        rec = equivalence_sweep(case, n, child_seed(cfg.seed, index))
        verdict = rec.max_rel_deviation <= tol
        ok = ok and verdict
        records.append({
            "case": case.value,
            "n_samples": rec.n_samples,
            "attempts": rec.attempts,
            "acceptance_rate": rec.acceptance_rate,
            "max_rel_deviation": rec.max_rel_deviation,
            "tolerance": tol,
            "verdict": "pass" if verdict else "fail",
        })
    payload = {
        "version": __version__,
        "command": "equivalence",
        "config": cfg.echo_dict(),
        "records": records,
        "summary": _family_summary(records),
    }
    _emit_payload(payload, cfg, _render_equivalence_markdown)
    return 0 if ok else 2


_ORDER_PROBES = (
    (OdeCase.of(OdeId.O2_21, c3=0.0), FamilyId.F2_23, "f", (0.0, 0.6)),
    (OdeCase.of(OdeId.O3_37F, c0=1.0), FamilyId.F3_38, "f", (0.0, 1.0)),
)


def _convergence_orders(coarse: float = 0.02) -> list[dict]:
    from .catalog import _assemble  # intra-package helper

    out = []
    for case, fid, which, span in _ORDER_PROBES:
        asm = _assemble(make_family(fid))
        profile = asm.f if which == "f" else asm.g
        h0 = profile.at(span[0]).d1
        errs = []
        for step in (coarse, coarse / 2.0):
            traj = integrate(case, h0, span, step)
            errs.append(compare_profile(traj, profile))
        order = math.log2(errs[0] / errs[1]) if errs[1] > 0.0 else float("inf")
        out.append({"ode_case": case.kind.value, "coarse_step": coarse,
                    "coarse_error": errs[0], "fine_error": errs[1],
                    "observed_order": order})
    return out


def cmd_ode_compare(cfg: RunConfig) -> int:
    tol = cfg.tolerance if cfg.tolerance is not None else 1e-6
    records = []
    ok = True
    for rec in ode_reference_runs(cfg.step):
        verdict = rec.max_abs_error <= tol
        ok = ok and verdict
        records.append({
            "ode_case": rec.ode_case,
            "family_id": rec.family_id,
            "profile": rec.which,
            "t_span": list(rec.t_span),
            "step": rec.step,
            "max_abs_error": rec.max_abs_error,
            "tolerance": tol,
            "verdict": "pass" if verdict else "fail",
        })
    orders = _convergence_orders()
    ok = ok and all(o["observed_order"] >= 3.8 for o in orders)
    payload = {
        "version": __version__,
        "command": "ode-compare",
        "config": cfg.echo_dict(),
        "records": records,
        "convergence": orders,
        "summary": _family_summary(records),
    }
    _emit_payload(payload, cfg, _render_ode_markdown)
    return 0 if ok else 2


def _grid(lo: float, hi: float, n: int) -> list[float]:
    if n < 2:
        raise UsageError("grid needs at least 2 points per axis")
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def cmd_mesh(cfg: RunConfig) -> int:
    fam = _family_from_config(cfg)
    built = build(fam)  # EmptyDomain propagates as a usage-level failure
    box_u, box_v = built.domain.sampling_box()
    if cfg.u_range is not None:
        lo, hi = cfg.u_range
        if not (built.domain.u.contains(lo) and built.domain.u.contains(hi)):
            raise EmptyDomain(
                f"u range [{lo:g}, {hi:g}] leaves the admissible domain; "
                f"suggested clipped range [{box_u.lo:.6g}, {box_u.hi:.6g}]"
            )
        box_u = type(box_u)(lo, hi)
    if cfg.v_range is not None:
        lo, hi = cfg.v_range
        if not (built.domain.v.contains(lo) and built.domain.v.contains(hi)):
            raise EmptyDomain(
                f"v range [{lo:g}, {hi:g}] leaves the admissible domain; "
                f"suggested clipped range [{box_v.lo:.6g}, {box_v.hi:.6g}]"
            )
        box_v = type(box_v)(lo, hi)

    us = _grid(box_u.lo, box_u.hi, cfg.nu)
    vs = _grid(box_v.lo, box_v.hi, cfg.nv)
    lines = []
    if cfg.format == "csv":
        lines.append("u,v,x,y,z")
        for u in us:
            for v in vs:
                pt = immersion(built.surface, u, v)
                lines.append(f"{u:.17g},{v:.17g},{pt.c1:.17g},{pt.c2:.17g},{pt.c3:.17g}")
    else:
        for u in us:
            for v in vs:
                pt = immersion(built.surface, u, v)
                lines.append(f"v {pt.c1:.17g} {pt.c2:.17g} {pt.c3:.17g}")
        for i in range(cfg.nu - 1):
            for j in range(cfg.nv - 1):
                base = i * cfg.nv + j + 1
                lines.append(f"f {base} {base + 1} {base + cfg.nv + 1} {base + cfg.nv}")
    _emit("\n".join(lines) + "\n", cfg)
    return 0


def cmd_report(cfg: RunConfig) -> int:
    family_records = []
    index = 0
    for theorem, fids in THEOREM_SUITES.items():
        for fid in fids:
            for fam in default_settings(fid):
                rep = verify_auto(fam, cfg.samples, child_seed(cfg.seed, index),
                                  cfg.tolerance, cfg.perturb)
                family_records.append(_report_record(rep, theorem))
                index += 1
    eq_records = []
    for offset, case in enumerate(CaseId):
        rec = equivalence_sweep(case, max(cfg.samples, 500), child_seed(cfg.seed, 1000 + offset))
        verdict = rec.max_rel_deviation <= 1e-10
        eq_records.append({
            "case": case.value,
            "n_samples": rec.n_samples,
            "acceptance_rate": rec.acceptance_rate,
            "max_rel_deviation": rec.max_rel_deviation,
            "verdict": "pass" if verdict else "fail",
        })
    ode_records = []
    for rec in ode_reference_runs(cfg.step):
        ode_records.append({
            "ode_case": rec.ode_case,
            "family_id": rec.family_id,
            "profile": rec.which,
            "max_abs_error": rec.max_abs_error,
            "verdict": "pass" if rec.max_abs_error <= 1e-6 else "fail",
        })
    all_pass = (
        all(r["verdict"] == "pass" for r in family_records)
        and all(r["verdict"] == "pass" for r in eq_records)
        and all(r["verdict"] == "pass" for r in ode_records)
    )
    payload = {
        "version": __version__,
        "command": "report",
        "config": cfg.echo_dict(),
        "records": family_records,
        "equivalence": eq_records,
        "ode": ode_records,
        "summary": {
            "families": _family_summary(family_records),
            "equivalence": _family_summary(eq_records),
            "ode": _family_summary(ode_records),
            "all_pass": all_pass,
        },
    }
    _emit_payload(payload, cfg, _render_report_markdown)
    return 0 if all_pass else 2


def _fmt_params(params: dict[str, float]) -> str:
    return ", ".join(f"{k}={v:.6g}" for k, v in sorted(params.items()))


def _fmt_float(x: float | None) -> str:
    return "-" if x is None else f"{x:.3e}"


def _family_table(records: list[dict]) -> list[str]:
    lines = [
        "| family | branch | params | mode | max abs numerator | max abs residual | verdict |",
        "|---|---|---|---|---|---|---|",
    ]
    for r in records:
        lines.append(
            f"| {r['family_id']} | {r['branch']} | {_fmt_params(r['params'])} "
            f"| {r['mode']} | {_fmt_float(r['max_abs_numerator'])} "
            f"| {_fmt_float(r['max_abs_residual'])} | {r['verdict']} |"
        )
    return lines


def _render_verify_markdown(payload: dict) -> str:
    lines = [f"# ssmin verify (v{payload['version']})", ""]
    lines += _family_table(payload["records"])
    summary = payload["summary"]
    lines += ["", f"**{summary['n_pass']}/{summary['n_records']} records pass.**", ""]
    return "\n".join(lines)


def _render_equivalence_markdown(payload: dict) -> str:
    lines = [
        f"# ssmin equivalence (v{payload['version']})",
        "",
        "| case | samples | acceptance | max rel deviation | verdict |",
        "|---|---|---|---|---|",
    ]
    for r in payload["records"]:
        lines.append(
            f"| {r['case']} | {r['n_samples']} | {r['acceptance_rate']:.3f} "
            f"| {_fmt_float(r['max_rel_deviation'])} | {r['verdict']} |"
        )
    return "\n".join(lines + [""])


def _render_ode_markdown(payload: dict) -> str:
    lines = [
        f"# ssmin ode-compare (v{payload['version']})",
        "",
        "| ode case | family | profile | max abs error | verdict |",
        "|---|---|---|---|---|",
    ]
    for r in payload["records"]:
        lines.append(
            f"| {r['ode_case']} | {r['family_id']} | {r['profile']} "
            f"| {_fmt_float(r['max_abs_error'])} | {r['verdict']} |"
        )
    lines += ["", "| ode case | coarse error | fine error | observed order |", "|---|---|---|---|"]
    for o in payload["convergence"]:
        lines.append(
            f"| {o['ode_case']} | {_fmt_float(o['coarse_error'])} "
            f"| {_fmt_float(o['fine_error'])} | {o['observed_order']:.2f} |"
        )
    return "\n".join(lines + [""])


def _render_report_markdown(payload: dict) -> str:
    lines = [f"# ssmin verification report (v{payload['version']})", ""]
    seed = payload["config"]["seed"]
    lines += [f"- seed: {seed}", f"- samples per family: {payload['config']['samples']}", ""]
    for theorem in THEOREM_SUITES:
        rows = [r for r in payload["records"] if r["theorem"] == theorem]
        lines.append(f"## Theorem {theorem}")
        lines.append("")
        lines += _family_table(rows)
        lines.append("")
    lines.append("## Minimality equivalence sweeps")
    lines.append("")
    lines += [
        "| case | samples | acceptance | max rel deviation | verdict |",
        "|---|---|---|---|---|",
    ]
    for r in payload["equivalence"]:
        lines.append(
            f"| {r['case']} | {r['n_samples']} | {r['acceptance_rate']:.3f} "
            f"| {_fmt_float(r['max_rel_deviation'])} | {r['verdict']} |"
        )
    lines.append("")
    lines.append("## Reduced-ODE cross-checks")
    lines.append("")
    lines += [
        "| ode case | family | profile | max abs error | verdict |",
        "|---|---|---|---|---|",
    ]
    for r in payload["ode"]:
        lines.append(
            f"| {r['ode_case']} | {r['family_id']} | {r['profile']} "
            f"| {_fmt_float(r['max_abs_error'])} | {r['verdict']} |"
        )
    lines.append("")
    lines.append("## Summary")
    lines.append("")
    verdict = "PASS" if payload["summary"]["all_pass"] else "FAIL"
    fam_summary = payload["summary"]["families"]
    lines.append(f"- families: {fam_summary['n_pass']}/{fam_summary['n_records']} pass")
    eq_summary = payload["summary"]["equivalence"]
    lines.append(f"- equivalence: {eq_summary['n_pass']}/{eq_summary['n_records']} pass")
    ode_summary = payload["summary"]["ode"]
    lines.append(f"- ode: {ode_summary['n_pass']}/{ode_summary['n_records']} pass")
    lines.append(f"- overall: {verdict}")
    return "\n".join(lines + [""])


_COMMANDS = {
    "residual": cmd_residual,
    "verify": cmd_verify,
    "equivalence": cmd_equivalence,
    "ode-compare": cmd_ode_compare,
    "mesh": cmd_mesh,
    "report": cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _config_from_args(args)
        return _COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"ssmin: error: {exc}", file=sys.stderr)
        return 1
    except (ParameterConstraintViolation, UnknownCase, EmptyDomain, DomainError) as exc:
        print(f"ssmin: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except VerifierError as exc:
        print(f"ssmin: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"ssmin: io error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
