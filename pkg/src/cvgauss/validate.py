"""Self-validation suite: oracle-vs-closed-form comparisons with per-check
deltas.  The fast suite runs in seconds; the full suite adds the two-mode
Fock oracle at dim 40 per mode."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import fock
from .entanglement import (
    closest_separable_numeric,
    degree_e0,
    peres_simon_separable,
    separability_threshold_rs,
)
from .fidelity import fidelity_one_mode, fidelity_two_mode_sts
from .nonclassicality import closest_classical_numeric, degree_q0
from .states import (
    DstsParams,
    TwoModeStsParams,
    cf_to_cov,
    cf_to_dsts,
    dsts_to_cf,
    eval_cf1,
    eval_cf1_cov,
    local_invariants,
    sts_to_cov2,
)
from .teleport import TeleportVariables, teleport_fidelity, teleport_with_noise


@dataclass
class CheckResult:
    name: str
    delta: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.delta <= self.tol


def _random_dsts(rng, nbar_max=2.0, r_max=1.0, alpha_max=1.0) -> DstsParams:
    return DstsParams(
        nbar=rng.uniform(0.0, nbar_max),
        r=rng.uniform(0.0, r_max),
        phi=rng.uniform(-math.pi, math.pi),
        alpha=complex(rng.uniform(-alpha_max, alpha_max), rng.uniform(-alpha_max, alpha_max)),
    )


def _random_sts(rng, nbar_max=0.6, r_max=1.0) -> TwoModeStsParams:
    return TwoModeStsParams(
        nbar1=rng.uniform(0.0, nbar_max),
        nbar2=rng.uniform(0.0, nbar_max),
        r=rng.uniform(0.0, r_max),
        phi=rng.uniform(-math.pi, math.pi),
    )


def _check_roundtrip(rng) -> float:
    worst = 0.0
    for _ in range(40):
        p = _random_dsts(rng, nbar_max=5.0, r_max=2.0)
        q = cf_to_dsts(dsts_to_cf(p))
        worst = max(worst, abs(q.nbar - p.nbar), abs(q.r - p.r),
                    abs(q.phi - p.phi), abs(q.alpha - p.alpha))
    return worst


def _check_cf_forms(rng) -> float:
    worst = 0.0
    for _ in range(10):
        g = dsts_to_cf(_random_dsts(rng))
        v = cf_to_cov(g)
        for _ in range(10):
            lam = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            worst = max(worst, abs(eval_cf1(g, lam) - eval_cf1_cov(v, lam, g.c)))
    return worst


def _check_sts_invariants(rng) -> float:
    worst = 0.0
    for _ in range(25):
        p = _random_sts(rng, nbar_max=2.0, r_max=1.5)
        inv = local_invariants(sts_to_cov2(p))
        ch2, sh2 = math.cosh(p.r) ** 2, math.sinh(p.r) ** 2
        n1 = (p.nbar1 + 0.5) * ch2 + (p.nbar2 + 0.5) * sh2
        n2 = (p.nbar2 + 0.5) * ch2 + (p.nbar1 + 0.5) * sh2
        g = (p.nbar1 + p.nbar2 + 1.0) * math.sinh(p.r) * math.cosh(p.r)
        worst = max(
            worst,
            abs(math.sqrt(inv.det_v1) - n1),
            abs(math.sqrt(inv.det_v2) - n2),
            abs(math.sqrt(-inv.det_c) - g),
            abs(math.sqrt(inv.det_v) - (p.nbar1 + 0.5) * (p.nbar2 + 0.5)),
        )
    return worst


def _check_heisenberg(rng) -> float:
    worst_violation = 0.0
    for _ in range(25):
        gap = sts_to_cov2(_random_sts(rng, nbar_max=2.0, r_max=1.5)).heisenberg_gap()
        worst_violation = max(worst_violation, -gap)
    return max(worst_violation, 0.0)


def _check_one_mode_oracle(rng, dim: int, pairs: int) -> float:
    worst = 0.0
    for _ in range(pairs):
        p1, p2 = _random_dsts(rng), _random_dsts(rng)
        closed = fidelity_one_mode(dsts_to_cf(p1), dsts_to_cf(p2))
        numeric = fock.uhlmann_fidelity_numeric(fock.dsts_dm(p1, dim), fock.dsts_dm(p2, dim))
        worst = max(worst, abs(closed - numeric))
    return worst


def _check_two_mode_oracle(rng, dim: int, pairs: int) -> float:
    worst = 0.0
    for _ in range(pairs):
        p1, p2 = _random_sts(rng), _random_sts(rng)
        closed = fidelity_two_mode_sts(p1, p2)
        numeric = fock.uhlmann_fidelity_numeric(fock.sts2_dm(p1, dim), fock.sts2_dm(p2, dim))
        worst = max(worst, abs(closed - numeric))
    return worst


def _check_teleport_paths(rng) -> float:
    worst = 0.0
    for r_in in np.linspace(0.0, 1.2, 5):
        for nbar_in in np.linspace(0.0, 2.0, 5):
            for z in np.linspace(0.1, 1.4, 5):
                closed = teleport_fidelity(
                    TeleportVariables(x=math.cosh(2 * r_in), y=nbar_in + 0.5, z=z))
                cf_in = dsts_to_cf(DstsParams(nbar=nbar_in, r=r_in, phi=0.4, alpha=0.3 + 0.2j))
                via_states = fidelity_one_mode(cf_in, teleport_with_noise(cf_in, z))
                worst = max(worst, abs(closed - via_states))
    return worst


def _check_coherent_row() -> float:
    worst = 0.0
    for z in np.linspace(0.05, 1.5, 30):
        f = teleport_fidelity(TeleportVariables(x=1.0, y=0.5, z=float(z)))
        worst = max(worst, abs(f - 1.0 / (1.0 + z)))
    return worst


def _bisect_threshold(nbar1: float, nbar2: float) -> float:
    def sep(r: float) -> bool:
        return peres_simon_separable(sts_to_cov2(TwoModeStsParams(nbar1, nbar2, r)))

    lo, hi = 0.0, 4.0
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if sep(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _check_separability_bisection(rng, samples: int) -> float:
    worst = 0.0
    for _ in range(samples):
        n1, n2 = rng.uniform(0.05, 3.0), rng.uniform(0.05, 3.0)
        worst = max(worst, abs(_bisect_threshold(n1, n2) - separability_threshold_rs(n1, n2)))
    return worst


def _check_q0_minimizer(rng, samples: int) -> float:
    worst = 0.0
    found = 0
    while found < samples:
        p = _random_dsts(rng, nbar_max=1.0, r_max=1.5, alpha_max=0.0)
        if degree_q0(p) <= 0.01:
            continue
        found += 1
        _, val = closest_classical_numeric(p)
        worst = max(worst, abs(val - degree_q0(p)))
    return worst


def _check_e0_minimizer(rng, samples: int) -> float:
    worst = 0.0
    found = 0
    while found < samples:
        p = _random_sts(rng, nbar_max=0.8, r_max=1.5)
        if degree_e0(p) <= 0.01:
            continue
        found += 1
        _, val = closest_separable_numeric(p)
        worst = max(worst, abs(val - degree_e0(p)))
    return worst


def _check_pure_trace_product(rng, dim: int, pairs: int) -> float:
    worst = 0.0
    for _ in range(pairs):
        p1 = DstsParams(0.0, rng.uniform(0, 0.8), rng.uniform(-math.pi, math.pi),
                        complex(rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7)))
        p2 = DstsParams(0.0, rng.uniform(0, 0.8), rng.uniform(-math.pi, math.pi),
                        complex(rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7)))
        closed = fidelity_one_mode(dsts_to_cf(p1), dsts_to_cf(p2))
        tr = fock.trace_product(fock.dsts_dm(p1, dim), fock.dsts_dm(p2, dim))
        worst = max(worst, abs(closed - tr))
    return worst


def _check_svs_entropy(dim: int) -> float:
    from .entanglement import entropy_of_entanglement_svs

    worst = 0.0
    for r in (0.5, 1.0, 1.5):
        closed = entropy_of_entanglement_svs(r)
        numeric = fock.von_neumann_entropy(fock.thermal_dm(math.sinh(r) ** 2, dim))
        worst = max(worst, abs(closed - numeric))
    return worst


def run_suite(suite: str = "fast", *, oracle_dim: int | None = None,
              oracle_tol: float | None = None) -> list[CheckResult]:
    """Run the requested suite and return one result per check."""
    if suite not in ("fast", "full"):
        raise ValueError(f"unknown suite {suite!r}; expected 'fast' or 'full'")
    rng = np.random.default_rng(20260809)
    one_dim = oracle_dim or 100
    tol = oracle_tol

    results = [
        CheckResult("dsts/cf round trip", _check_roundtrip(rng), 1e-12),
        CheckResult("cf coefficient vs covariance form", _check_cf_forms(rng), 1e-10),
        CheckResult("sts local invariants closed forms", _check_sts_invariants(rng), 1e-12),
        CheckResult("two-mode Heisenberg inequality", _check_heisenberg(rng), 1e-12),
        CheckResult("one-mode fidelity vs Fock oracle",
                    _check_one_mode_oracle(rng, one_dim, pairs=8), tol or 1e-6),
        CheckResult("teleport closed form vs input/output fidelity",
                    _check_teleport_paths(rng), 1e-10),
        CheckResult("coherent-input teleportation row", _check_coherent_row(), 1e-12),
        CheckResult("separability bisection vs closed threshold",
                    _check_separability_bisection(rng, samples=10), 1e-6),
        CheckResult("nonclassicality minimizer vs closed form",
                    _check_q0_minimizer(rng, samples=2), 1e-4),
        CheckResult("entanglement minimizer vs closed form",
                    _check_e0_minimizer(rng, samples=2), 1e-4),
    ]
    if suite == "full":
        two_dim = min(oracle_dim, 64) if oracle_dim else 40
        results += [
            CheckResult("two-mode fidelity vs Fock oracle",
                        _check_two_mode_oracle(rng, two_dim, pairs=3), tol or 1e-4),
            CheckResult("pure-state fidelity equals trace product",
                        _check_pure_trace_product(rng, one_dim, pairs=6), tol or 1e-8),
            CheckResult("squeezed-vacuum entropy vs Fock entropy",
                        _check_svs_entropy(200), tol or 1e-8),
        ]
    return results


def format_report(results: list[CheckResult], suite: str) -> str:
    lines = []
    width = max(len(r.name) for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{r.name:<{width}}  delta={r.delta:12.5e}  tol={r.tol:8.1e}  {status}")
    n_pass = sum(r.passed for r in results)
    lines.append(f"suite {suite}: {n_pass}/{len(results)} checks passed")
    return "\n".join(lines)
