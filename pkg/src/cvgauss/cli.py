"""Command-line front end.

Subcommands: ``info`` (state report), ``fidelity`` (closed form, optionally
checked against the Fock oracle), ``entangle`` (separability and degree of
entanglement), ``teleport`` (output state and fidelity), ``sweep`` (figure
CSVs), ``validate`` (oracle-vs-closed-form check suite).

Exit codes: 0 success, 2 input/validation error, 3 tolerance breach in
``validate``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import fock, teleport, validate
from .entanglement import degree_e0, peres_simon_separable, separability_threshold_rs
from .errors import (
    DimensionMismatch,
    DisplacedResource,
    DomainError,
    UnphysicalState,
)
from .fidelity import fidelity_one_mode, fidelity_two_mode_sts
from .nonclassicality import degree_q0, is_classical, nonclassicality_threshold
from .states import (
    DstsParams,
    TwoModeStsParams,
    cf_to_cov,
    cf_to_dsts,
    dsts_to_cf,
    local_invariants,
    parse_state,
    state_to_dict,
    sts_to_cf2,
    sts_to_cov2,
)

_INPUT_ERRORS = (
    DomainError,
    UnphysicalState,
    DisplacedResource,
    DimensionMismatch,
    OSError,
)


@dataclass
class SweepConfig:
    """Grid sizes and overrides for the sweep and validate commands."""

    points: int = 99
    outdir: Path = Path(".")
    dim: int | None = None
    tol: float | None = None

    def __post_init__(self):
        if self.points < 2:
            raise DomainError(f"grid size must be >= 2, got {self.points}")
        if self.dim is not None and self.dim < 1:
            raise DomainError(f"truncation override must be >= 1, got {self.dim}")
        if self.tol is not None and not (self.tol > 0.0):
            raise DomainError(f"tolerance override must be > 0, got {self.tol}")


def _load_state(path: str):
    return parse_state(Path(path).read_text())


def _fmt(x: float) -> str:
    return f"{x + 0.0:.12g}"  # the +0.0 folds negative zero into 0


def _fmt_c(z: complex) -> str:
    return f"{z.real + 0.0:.12g}{z.imag + 0.0:+.12g}j"


def _print_dsts_info(p: DstsParams) -> None:
    g = dsts_to_cf(p)
    v = cf_to_cov(g)
    rc = nonclassicality_threshold(p.nbar)
    print("kind: dsts")
    print(f"nbar = {_fmt(p.nbar)}  r = {_fmt(p.r)}  phi = {_fmt(p.phi)}  "
          f"alpha = {_fmt_c(p.alpha)}")
    print(f"cf coefficients: a = {_fmt(g.a)}  b = {_fmt_c(g.b)}  c = {_fmt_c(g.c)}")
    print(f"covariance matrix: [[{_fmt(v.qq)}, {_fmt(v.qp)}], [{_fmt(v.qp)}, {_fmt(v.pp)}]]")
    print(f"det V = {_fmt(v.det())}")
    print(f"nonclassicality threshold r_c = {_fmt(rc)}")
    verdict = "classical" if is_classical(p) else "nonclassical"
    print(f"verdict: {verdict}  (Q0 = {_fmt(degree_q0(p))})")


def _print_sts2_info(p: TwoModeStsParams) -> None:
    t = sts_to_cf2(p)
    m = sts_to_cov2(p)
    inv = local_invariants(m)
    rs = separability_threshold_rs(p.nbar1, p.nbar2)
    print("kind: sts2")
    print(f"nbar1 = {_fmt(p.nbar1)}  nbar2 = {_fmt(p.nbar2)}  r = {_fmt(p.r)}  phi = {_fmt(p.phi)}")
    print(f"cf coefficients: a1 = {_fmt(t.mode1.a)}  a2 = {_fmt(t.mode2.a)}  "
          f"g = {_fmt_c(t.g)}")
    print("local invariants:")
    print(f"  det V1 = {_fmt(inv.det_v1)}")
    print(f"  det V2 = {_fmt(inv.det_v2)}")
    print(f"  det C  = {_fmt(inv.det_c)}")
    print(f"  det V  = {_fmt(inv.det_v)}")
    print(f"separability threshold r_s = {_fmt(rs)}")
    verdict = "separable" if peres_simon_separable(m) else "entangled"
    print(f"verdict: {verdict}  (E0 = {_fmt(degree_e0(p))})")


def _cmd_info(args) -> int:
    state = _load_state(args.state)
    if isinstance(state, DstsParams):
        _print_dsts_info(state)
    else:
        _print_sts2_info(state)
    return 0


def _cmd_fidelity(args) -> int:
    s1 = _load_state(args.state)
    s2 = _load_state(args.state2)
    if isinstance(s1, DstsParams) and isinstance(s2, DstsParams):
        value = fidelity_one_mode(dsts_to_cf(s1), dsts_to_cf(s2))
        oracle = None
        if args.oracle:
            dim = args.dim
            oracle = fock.uhlmann_fidelity_numeric(fock.dsts_dm(s1, dim), fock.dsts_dm(s2, dim))
    elif isinstance(s1, TwoModeStsParams) and isinstance(s2, TwoModeStsParams):
        value = fidelity_two_mode_sts(s1, s2)
        oracle = None
        if args.oracle:
            dim = min(args.dim, 64) if args.dim else None
            oracle = fock.uhlmann_fidelity_numeric(fock.sts2_dm(s1, dim), fock.sts2_dm(s2, dim))
    else:
        raise DomainError("fidelity requires two states of the same kind")
    print(f"fidelity = {_fmt(value)}")
    if oracle is not None:
        print(f"oracle   = {_fmt(oracle)}")
        print(f"delta    = {_fmt(abs(value - oracle))}")
    return 0


def _cmd_entangle(args) -> int:
    state = _load_state(args.state)
    if not isinstance(state, TwoModeStsParams):
        raise DomainError("entangle requires an sts2 state descriptor")
    rs = separability_threshold_rs(state.nbar1, state.nbar2)
    verdict = "separable" if peres_simon_separable(sts_to_cov2(state)) else "entangled"
    print(f"r_s = {_fmt(rs)}")
    print(f"verdict: {verdict}")
    print(f"E0 = {_fmt(degree_e0(state))}")
    return 0


def _cmd_teleport(args) -> int:
    state = _load_state(args.state)
    if not isinstance(state, DstsParams):
        raise DomainError("teleport requires a dsts input state")
    out_cf = teleport.teleport_symmetric_sts(dsts_to_cf(state), args.nbar, args.r)
    out_state = cf_to_dsts(out_cf)
    fid = teleport.teleport_fidelity_from_states(state, args.nbar, args.r)
    print(json.dumps(state_to_dict(out_state)))
    print(f"fidelity = {_fmt(fid)}")
    return 0


def _parse_float_list(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise DomainError(f"invalid number list {text!r}") from exc


def _cmd_sweep(args) -> int:
    cfg = _load_config(args)
    if args.figure == "fig1":
        nbars = _parse_float_list(args.nbar_in) if args.nbar_in else list(teleport.FIG1_NBARS)
        grid = np.linspace(0.01, 0.99, cfg.points)
        sweep = teleport.sweep_fig1(args.r_in, nbars, grid)
        paths = teleport.write_fig1_csv(sweep, cfg.outdir)
    else:
        e0s = _parse_float_list(args.e0) if args.e0 else list(teleport.FIG2_E0S)
        grid = np.linspace(0.0, 0.99, cfg.points)
        sweep = teleport.sweep_fig2(e0s, grid)
        paths = teleport.write_fig2_csv(sweep, cfg.outdir)
    for path in paths:
        print(path)
    return 0


def _cmd_validate(args) -> int:
    cfg = _load_config(args)
    results = validate.run_suite(args.suite, oracle_dim=cfg.dim, oracle_tol=cfg.tol)
    print(validate.format_report(results, args.suite))
    return 0 if all(r.passed for r in results) else 3


def _load_config(args) -> SweepConfig:
    defaults: dict = {}
    config_path = getattr(args, "config", None)
    if config_path:
        try:
            defaults = json.loads(Path(config_path).read_text())
        except json.JSONDecodeError as exc:
            raise DomainError(f"invalid config file: {exc}") from exc
        if not isinstance(defaults, dict):
            raise DomainError("config file must hold a JSON object")
    points = getattr(args, "points", None)
    outdir = getattr(args, "out", None)
    return SweepConfig(
        points=points if points is not None else int(defaults.get("points", 99)),
        outdir=Path(outdir if outdir is not None else defaults.get("out", ".")),
        dim=getattr(args, "dim", None) or defaults.get("dim"),
        tol=getattr(args, "tol", None) or defaults.get("tol"),
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cvgauss",
        description="Gaussian-state toolkit: fidelity, nonclassicality, "
                    "entanglement, and CV teleportation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="report state parameters, CF, covariances, verdicts")
    p_info.add_argument("--state", required=True, help="state descriptor JSON file")
    p_info.set_defaults(func=_cmd_info)

    p_fid = sub.add_parser("fidelity", help="fidelity of two states of the same kind")
    p_fid.add_argument("--state", required=True, help="first state JSON file")
    p_fid.add_argument("--state2", required=True, help="second state JSON file")
    p_fid.add_argument("--oracle", action="store_true",
                       help="also compute the Fock-oracle value and the delta")
    p_fid.add_argument("--dim", type=int, default=None, help="oracle truncation override")
    p_fid.set_defaults(func=_cmd_fidelity)

    p_ent = sub.add_parser("entangle", help="separability threshold, verdict, and E0")
    p_ent.add_argument("--state", required=True, help="sts2 state JSON file")
    p_ent.set_defaults(func=_cmd_entangle)

    p_tel = sub.add_parser("teleport", help="teleport a one-mode state through a "
                                            "symmetric squeezed thermal resource")
    p_tel.add_argument("--state", required=True, help="dsts input state JSON file")
    p_tel.add_argument("--nbar", type=float, required=True, help="resource occupancy")
    p_tel.add_argument("--r", type=float, required=True, help="resource squeeze factor")
    p_tel.set_defaults(func=_cmd_teleport)

    p_sweep = sub.add_parser("sweep", help="write figure CSV files")
    p_sweep.add_argument("figure", choices=("fig1", "fig2"))
    p_sweep.add_argument("--out", default=None, help="output directory")
    p_sweep.add_argument("--points", type=int, default=None, help="grid size (>= 2)")
    p_sweep.add_argument("--r-in", dest="r_in", type=float, default=teleport.FIG1_R_IN,
                         help="input squeeze factor (fig1)")
    p_sweep.add_argument("--nbar-in", dest="nbar_in", default=None,
                         help="comma-separated input occupancies (fig1)")
    p_sweep.add_argument("--e0", default=None,
                         help="comma-separated resource entanglements (fig2)")
    p_sweep.add_argument("--config", default=None, help="optional JSON config file")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_val = sub.add_parser("validate", help="run the oracle-vs-closed-form check suite")
    p_val.add_argument("--suite", choices=("fast", "full"), default="fast")
    p_val.add_argument("--dim", type=int, default=None, help="oracle truncation override")
    p_val.add_argument("--tol", type=float, default=None, help="oracle tolerance override")
    p_val.add_argument("--config", default=None, help="optional JSON config file")
    p_val.set_defaults(func=_cmd_validate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
