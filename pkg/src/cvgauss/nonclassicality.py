"""Nonclassicality of one-mode Gaussian states.

A Gaussian state has a well-behaved P representation iff its squeeze factor
does not exceed the threshold r_c = (1/2) ln(2 nbar + 1).  Past the threshold
the degree of nonclassicality is measured by half the squared Bures distance
to the set of classical Gaussian states, which has the closed form
Q0 = 1 - sqrt(sech(r - r_c)).
"""

from __future__ import annotations

import math

from scipy.special import expit

from ._optim import multistart_nelder_mead
from .errors import DomainError
from .fidelity import fidelity_one_mode
from .states import DstsParams, dsts_to_cf


def nonclassicality_threshold(nbar: float) -> float:
    """Squeeze-factor threshold r_c = (1/2) ln(2 nbar + 1)."""
    if not (nbar >= 0.0):
        raise DomainError(f"nbar must be >= 0, got {nbar}")
    return 0.5 * math.log1p(2.0 * nbar)


def is_classical(p: DstsParams) -> bool:
    """True iff the state admits a P representation (r <= r_c)."""
    return p.r <= nonclassicality_threshold(p.nbar)


def degree_q0(p: DstsParams) -> float:
    """Bures degree of nonclassicality; 0 on the classical set, otherwise
    1 - sqrt(sech(r - r_c)).  Independent of phi and alpha."""
    gap = p.r - nonclassicality_threshold(p.nbar)
    if gap <= 0.0:
        return 0.0
    return 1.0 - math.sqrt(1.0 / math.cosh(gap))


def closest_classical_numeric(p: DstsParams, *, n_starts: int = 8,
                              xatol: float = 1e-9, fatol: float = 1e-12):
    """Minimize half the squared Bures distance over classical Gaussian states.

    Derivative-free multi-start search with the constraint set mapped
    smoothly onto unconstrained variables (nbar' = t^2, r' = r_c(nbar')
    times a logistic of t).  The search over alpha' is skipped when the input
    carries no displacement, since the fidelity is maximal at alpha' = alpha.

    Returns (closest classical state, minimum of 1 - sqrt(F)).
    """
    if is_classical(p):
        return p, 0.0
    target = dsts_to_cf(p)
    search_alpha = abs(p.alpha) > 0.0

    def unpack(t):
        nb = t[0] * t[0]
        rp = nonclassicality_threshold(nb) * expit(t[1])
        alpha = complex(t[3], t[4]) if search_alpha else p.alpha
        return DstsParams(nbar=nb, r=rp, phi=t[2], alpha=alpha)

    def objective(t):
        return 1.0 - math.sqrt(fidelity_one_mode(target, dsts_to_cf(unpack(t))))

    starts = []
    for k in range(n_starts):
        nb0 = p.nbar + 0.25 * (k + 1)
        slope = 2.0 if k % 2 == 0 else 6.0
        start = [math.sqrt(nb0), slope, p.phi]
        if search_alpha:
            start += [p.alpha.real, p.alpha.imag]
        starts.append(start)

    x_best, f_best = multistart_nelder_mead(objective, starts, xatol=xatol, fatol=fatol)
    return unpack(x_best), f_best
