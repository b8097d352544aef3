import math

import numpy as np
import pytest

from cvgauss import (
    DomainError,
    DstsParams,
    closest_classical_numeric,
    degree_q0,
    is_classical,
    nonclassicality_threshold,
)

# frozen via the numeric minimizer over the classical set (squeezed vacuum r=1)
Q0_SQUEEZED_VACUUM_R1 = 0.1949818178054079


def test_threshold_values():
    assert nonclassicality_threshold(0.0) == 0.0
    assert nonclassicality_threshold(0.5) == pytest.approx(0.5 * math.log(2.0), abs=1e-15)
    assert nonclassicality_threshold(5.0) == pytest.approx(0.5 * math.log(11.0), abs=1e-15)


def test_threshold_domain():
    with pytest.raises(DomainError):
        nonclassicality_threshold(-0.1)


def test_is_classical_cases():
    assert is_classical(DstsParams(nbar=0.3, r=0.0, alpha=1.0 + 0j))  # coherent-like
    assert not is_classical(DstsParams(nbar=0.0, r=0.1))
    assert is_classical(DstsParams(nbar=0.5, r=0.3))  # 0.3 < (ln 2)/2


def test_degree_vanishes_on_classical_set():
    rng = np.random.default_rng(307)
    for _ in range(20):
        nbar = rng.uniform(0.0, 3.0)
        r = rng.uniform(0.0, 1.0) * nonclassicality_threshold(nbar)
        assert degree_q0(DstsParams(nbar, r, rng.uniform(-3, 3), 0.3j)) == 0.0


def test_degree_squeezed_vacuum():
    assert degree_q0(DstsParams(0.0, 1.0)) == pytest.approx(Q0_SQUEEZED_VACUUM_R1, abs=1e-12)


def test_degree_continuous_at_threshold():
    nbar = 0.8
    rc = nonclassicality_threshold(nbar)
    assert degree_q0(DstsParams(nbar, rc)) == 0.0
    assert degree_q0(DstsParams(nbar, rc + 1e-9)) < 1e-12


def test_degree_independent_of_phase_and_displacement():
    base = degree_q0(DstsParams(0.2, 1.3))
    assert degree_q0(DstsParams(0.2, 1.3, 2.0, 1.5 - 0.5j)) == base
    assert degree_q0(DstsParams(0.2, 1.3, -0.7, 10.0 + 0j)) == base


def test_degree_monotone_in_squeeze_factor():
    for nbar in (0.0, 0.4, 2.0):
        rc = nonclassicality_threshold(nbar)
        rs = np.linspace(rc + 0.05, rc + 3.0, 25)
        qs = [degree_q0(DstsParams(nbar, float(r))) for r in rs]
        assert all(b > a for a, b in zip(qs, qs[1:]))


def test_degree_range_and_strong_squeezing_limit():
    rng = np.random.default_rng(311)
    for _ in range(30):
        q = degree_q0(DstsParams(rng.uniform(0, 3), rng.uniform(0, 3)))
        assert 0.0 <= q < 1.0
    assert degree_q0(DstsParams(0.0, 20.0)) > 0.99


def test_closest_classical_trivial_for_classical_input():
    p = DstsParams(0.6, 0.1, 0.9, 0.4 + 0.1j)
    state, value = closest_classical_numeric(p)
    assert state == p
    assert value == 0.0


def test_closest_classical_squeezed_vacuum():
    p = DstsParams(0.0, 1.0)
    state, value = closest_classical_numeric(p)
    assert value == pytest.approx(Q0_SQUEEZED_VACUUM_R1, abs=1e-4)
    # minimizer stays inside the classical set
    assert state.r <= nonclassicality_threshold(state.nbar) + 1e-9


def test_closest_classical_matches_closed_form_on_random_states():
    rng = np.random.default_rng(313)
    found = 0
    while found < 5:
        p = DstsParams(rng.uniform(0, 1), rng.uniform(0, 1.5), rng.uniform(-3, 3))
        if degree_q0(p) <= 0.01:
            continue
        found += 1
        _, value = closest_classical_numeric(p)
        assert abs(value - degree_q0(p)) < 1e-4


def test_closest_classical_aligns_squeeze_phase():
    for phi in (-2.0, 0.5, 2.8):
        p = DstsParams(0.1, 1.2, phi)
        state, _ = closest_classical_numeric(p)
        assert abs(math.remainder(state.phi - phi, 2 * math.pi)) < 1e-3


def test_closest_classical_with_displacement():
    p = DstsParams(0.05, 1.0, 0.3, 0.6 - 0.4j)
    state, value = closest_classical_numeric(p)
    assert abs(value - degree_q0(p)) < 1e-4
    # the optimum keeps the input displacement
    assert abs(state.alpha - p.alpha) < 1e-3
