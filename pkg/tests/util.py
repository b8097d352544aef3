"""Shared helpers for the test suite: seeded random state generators."""

import math

from cvgauss import DstsParams, TwoModeStsParams


def rand_dsts(rng, nbar_max=2.0, r_max=1.0, alpha_max=1.0):
    return DstsParams(
        nbar=rng.uniform(0.0, nbar_max),
        r=rng.uniform(0.0, r_max),
        phi=rng.uniform(-math.pi, math.pi),
        alpha=complex(rng.uniform(-alpha_max, alpha_max),
                      rng.uniform(-alpha_max, alpha_max)),
    )


def rand_sts(rng, nbar_max=0.6, r_max=1.0):
    return TwoModeStsParams(
        nbar1=rng.uniform(0.0, nbar_max),
        nbar2=rng.uniform(0.0, nbar_max),
        r=rng.uniform(0.0, r_max),
        phi=rng.uniform(-math.pi, math.pi),
    )
