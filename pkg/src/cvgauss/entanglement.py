"""Separability and entanglement of two-mode squeezed thermal states.

The partial-transposition criterion is both necessary and sufficient for
two-mode Gaussian states; in invariant form it reads

    det V - [det V1 + det V2 + 2 |det C|]/4 + 1/16 >= 0.

For a squeezed thermal state this reduces to r <= r_s with
cosh^2 r_s = (nbar1 + 1)(nbar2 + 1)/(nbar1 + nbar2 + 1).  The Bures degree
of entanglement past the threshold is E0 = 1 - sech(r - r_s).
"""

from __future__ import annotations

import math

from scipy.special import expit

from ._optim import multistart_nelder_mead
from .errors import DomainError, UnphysicalState
from .fidelity import fidelity_two_mode_sts
from .states import CovMat2, TwoModeStsParams, local_invariants

#: tolerance on the separability inequality itself
SEP_TOL = 1e-12


def separability_threshold_rs(nbar1: float, nbar2: float) -> float:
    """Squeeze factor at which the state crosses from separable to entangled."""
    if not (nbar1 >= 0.0 and nbar2 >= 0.0):
        raise DomainError("thermal occupancies must be >= 0")
    u = math.sqrt((nbar1 + 1.0) * (nbar2 + 1.0) / (nbar1 + nbar2 + 1.0))
    # arccosh with the argument clamped to >= 1 to absorb rounding at the boundary
    u = max(u, 1.0)
    return math.log(u + math.sqrt(u * u - 1.0))


def peres_simon_separable(m: CovMat2) -> bool:
    """Partial-transposition separability test in invariant form.

    Raises UnphysicalState when the covariance matrix violates the two-mode
    uncertainty inequality (signed det C) beyond tolerance.
    """
    inv = local_invariants(m)
    base = inv.det_v - 0.25 * (inv.det_v1 + inv.det_v2) + 0.0625
    phys_gap = base - 0.5 * inv.det_c
    scale = max(1.0, inv.det_v1 * inv.det_v2, abs(inv.det_v), inv.det_c * inv.det_c)
    if phys_gap < -1e-9 * scale:
        raise UnphysicalState(
            f"covariance matrix violates the uncertainty inequality by {phys_gap:.3g}"
        )
    sep_gap = base - 0.5 * abs(inv.det_c)
    return sep_gap >= -SEP_TOL


def degree_e0(p: TwoModeStsParams) -> float:
    """Bures degree of entanglement; 0 on the separable set, otherwise
    1 - sech(r - r_s).  Independent of phi."""
    gap = p.r - separability_threshold_rs(p.nbar1, p.nbar2)
    if gap <= 0.0:
        return 0.0
    return 1.0 - 1.0 / math.cosh(gap)


def closest_separable_numeric(p: TwoModeStsParams, *, n_starts: int = 8,
                              xatol: float = 1e-9, fatol: float = 1e-12):
    """Minimize 1 - sqrt(F) over separable squeezed thermal states.

    Same smooth reparametrization and multi-start scheme as the
    nonclassicality search: nbar'_j = t_j^2 and r' = r_s(nbar'_1, nbar'_2)
    times a logistic, so the whole unconstrained space maps onto the
    separable set.  Returns (closest separable state, minimum value).
    """
    rs = separability_threshold_rs(p.nbar1, p.nbar2)
    if p.r <= rs:
        return p, 0.0

    def unpack(t):
        m1 = t[0] * t[0]
        m2 = t[1] * t[1]
        rp = separability_threshold_rs(m1, m2) * expit(t[2])
        return TwoModeStsParams(nbar1=m1, nbar2=m2, r=rp, phi=t[3])

    def objective(t):
        return 1.0 - math.sqrt(fidelity_two_mode_sts(p, unpack(t)))

    starts = []
    for k in range(n_starts):
        d1 = 0.1 + 0.25 * (k % 2)
        d2 = 0.1 + 0.25 * ((k // 2) % 2)
        slope = 2.0 if k < 4 else 6.0
        starts.append([
            math.sqrt(p.nbar1 + d1),
            math.sqrt(p.nbar2 + d2),
            slope,
            p.phi,
        ])

    x_best, f_best = multistart_nelder_mead(objective, starts, xatol=xatol, fatol=fatol)
    return unpack(x_best), f_best


def entropy_of_entanglement_svs(r: float) -> float:
    """Entropy of entanglement of a two-mode squeezed vacuum: the common von
    Neumann entropy of its thermal reductions with occupancy sinh^2 r."""
    if not (r >= 0.0):
        raise DomainError(f"squeeze factor must be >= 0, got {r}")
    n = math.sinh(r) ** 2
    if n == 0.0:
        return 0.0
    return (n + 1.0) * math.log(n + 1.0) - n * math.log(n)
