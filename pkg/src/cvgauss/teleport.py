"""Characteristic-function model of continuous-variable teleportation.

The output of the protocol obeys chi_out(lam) = chi_in(lam) * chi_AB(conj(lam), lam)
for any displacement-free two-mode Gaussian resource, so the channel acts as a
linear update of the CF exponent coefficients.  With a symmetric squeezed
thermal resource (equal occupancies nbar, squeeze angle 0) the update adds
pure thermal noise:

    a_out = a_in + z,  b_out = b_in,  c_out = c_in,
    z = exp(-2 (r - r_s)),  r_s = separability threshold of the resource.

The input-output fidelity then has the closed form implemented by
:func:`teleport_fidelity` in the variables x = cosh 2 r_in, y = nbar_in + 1/2,
z; it depends on the resource only through z, i.e. only through the resource
entanglement E0 = (1 - sqrt z)^2/(1 + z).
"""

from __future__ import annotations

import math
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .entanglement import separability_threshold_rs
from .errors import DisplacedResource, DomainError
from .fidelity import _clamp_unit
from .nonclassicality import degree_q0
from .states import (
    DstsParams,
    OneModeGaussianCF,
    TwoModeGaussianCF,
    cf_to_dsts,
    dsts_to_cf,
)

#: default E0 sampling for figure sweeps; endpoints avoid the identity (z = 0)
#: and separable (z >= 1) boundaries unless explicitly requested
DEFAULT_E0_GRID = tuple(np.linspace(0.01, 0.99, 99))
DEFAULT_QIN_GRID = tuple(np.linspace(0.0, 0.99, 100))
FIG1_R_IN = 1.0
FIG1_NBARS = (0.0, 0.1, 0.5, 5.0)
FIG2_E0S = (1.0, 0.615, 0.425)


@dataclass(frozen=True)
class TeleportVariables:
    """Variables of the teleportation-fidelity formula.

    x = cosh(2 r_in) >= 1 and y = nbar_in + 1/2 >= 1/2 characterize the input;
    z = exp(-2 (r - r_s)) > 0 carries the resource.  z = 0 is admitted as the
    infinite-entanglement limit (needed by the sweep endpoints), z > 1 means a
    separable resource and is computed without further interpretation.
    """

    x: float
    y: float
    z: float

    def __post_init__(self):
        if not (self.x >= 1.0 - 1e-12):
            raise DomainError(f"x = cosh(2 r_in) must be >= 1, got {self.x}")
        if not (self.y >= 0.5 - 1e-12):
            raise DomainError(f"y = nbar_in + 1/2 must be >= 1/2, got {self.y}")
        if not (self.z >= 0.0):
            raise DomainError(f"z must be >= 0, got {self.z}")


def teleport_cf(input_cf: OneModeGaussianCF, resource: TwoModeGaussianCF) -> OneModeGaussianCF:
    """Teleport a one-mode Gaussian state through a displacement-free
    two-mode Gaussian resource.

    Substituting (lam1, lam2) = (conj(lam), lam) into the resource exponent
    adds a quadratic form to the input exponent, so the output coefficients
    are a linear update of the input ones.
    """
    if not resource.is_displacement_free():
        raise DisplacedResource("resource state must carry no displacement")
    m1, m2 = resource.mode1, resource.mode2
    a_out = input_cf.a + m1.a + m2.a + 1.0 - 2.0 * resource.g.real
    b_out = input_cf.b + np.conj(m1.b) + m2.b + 2.0 * np.conj(resource.f)
    return OneModeGaussianCF(a=a_out, b=b_out, c=input_cf.c)


def teleport_with_noise(input_cf: OneModeGaussianCF, z: float) -> OneModeGaussianCF:
    """Output of the protocol keyed directly by the added thermal noise z."""
    if not (z >= 0.0):
        raise DomainError(f"added noise z must be >= 0, got {z}")
    return OneModeGaussianCF(a=input_cf.a + z, b=input_cf.b, c=input_cf.c)


def teleport_symmetric_sts(input_cf: OneModeGaussianCF, nbar: float, r: float) -> OneModeGaussianCF:
    """Teleport through a symmetric squeezed thermal resource (occupancy nbar
    in both modes, squeeze factor r, angle 0).  The resource need not be
    entangled; r < r_s simply gives z > 1."""
    if not (nbar >= 0.0):
        raise DomainError(f"resource occupancy must be >= 0, got {nbar}")
    if not (r >= 0.0):
        raise DomainError(f"resource squeeze factor must be >= 0, got {r}")
    z = math.exp(-2.0 * (r - separability_threshold_rs(nbar, nbar)))
    return teleport_with_noise(input_cf, z)


def teleport_fidelity(v: TeleportVariables) -> float:
    """Closed-form input-output fidelity of the protocol."""
    y2 = v.y * v.y
    xyz = v.x * v.y * v.z
    delta = 4.0 * (y2 + xyz + 0.25 * v.z * v.z)
    lam = 4.0 * max(y2 - 0.25, 0.0) * (y2 - 0.25 + 2.0 * xyz + v.z * v.z)
    return _clamp_unit(1.0 / (math.sqrt(delta + lam) - math.sqrt(lam)))


def teleport_variables(input_state: DstsParams, nbar: float, r: float) -> TeleportVariables:
    """Map (input state, symmetric resource parameters) onto (x, y, z)."""
    if not (nbar >= 0.0 and r >= 0.0):
        raise DomainError("resource parameters must be >= 0")
    z = math.exp(-2.0 * (r - separability_threshold_rs(nbar, nbar)))
    return TeleportVariables(
        x=math.cosh(2.0 * input_state.r),
        y=input_state.nbar + 0.5,
        z=z,
    )


def teleport_fidelity_from_states(input_state: DstsParams, nbar: float, r: float) -> float:
    """Teleportation fidelity computed from physical parameters.

    Agrees with fidelity_one_mode(input CF, teleported CF): the displacement
    cancels because the channel preserves c.
    """
    return teleport_fidelity(teleport_variables(input_state, nbar, r))


def e0_from_z(z: float) -> float:
    """Resource entanglement (1 - sqrt z)^2 / (1 + z) for 0 < z < 1."""
    if not (0.0 < z < 1.0):
        raise DomainError(f"z must lie in (0, 1), got {z}")
    w = math.sqrt(z)
    return (1.0 - w) ** 2 / (1.0 + z)


def z_from_e0(e0: float) -> float:
    """Inverse of :func:`e0_from_z`, extended to the endpoints: E0 = 0 maps to
    z = 1 (separability boundary) and E0 = 1 to z = 0 (ideal EPR resource)."""
    if not (0.0 <= e0 <= 1.0):
        raise DomainError(f"E0 must lie in [0, 1], got {e0}")
    # rationalized form, stable at both endpoints
    w = (1.0 - e0) / (1.0 + math.sqrt(e0 * (2.0 - e0)))
    return w * w


# ---------------------------------------------------------------------------
# figure sweeps


def sweep_fig1(r_in: float = FIG1_R_IN,
               nbar_in_list: Sequence[float] = FIG1_NBARS,
               e0_grid: Iterable[float] = DEFAULT_E0_GRID) -> dict[float, list[tuple[float, float]]]:
    """Teleportation fidelity versus resource entanglement, one curve per
    input occupancy, all at the same input squeeze factor."""
    if not (r_in >= 0.0):
        raise DomainError(f"input squeeze factor must be >= 0, got {r_in}")
    x = math.cosh(2.0 * r_in)
    grid = [float(e) for e in e0_grid]
    out: dict[float, list[tuple[float, float]]] = {}
    for nbar_in in nbar_in_list:
        y = float(nbar_in) + 0.5
        rows = [(e0, teleport_fidelity(TeleportVariables(x=x, y=y, z=z_from_e0(e0))))
                for e0 in grid]
        out[float(nbar_in)] = rows
    return out


def sweep_fig2(e0_list: Sequence[float] = FIG2_E0S,
               qin_grid: Iterable[float] = DEFAULT_QIN_GRID) -> dict[float, list[tuple[float, float]]]:
    """Nonclassicality of the teleported state versus that of the input, for
    squeezed-vacuum inputs, one curve per resource entanglement."""
    grid = [float(q) for q in qin_grid]
    out: dict[float, list[tuple[float, float]]] = {}
    for e0 in e0_list:
        z = z_from_e0(float(e0))
        rows = []
        for q_in in grid:
            if not (0.0 <= q_in < 1.0):
                raise DomainError(f"Q_in must lie in [0, 1), got {q_in}")
            # invert Q = 1 - sqrt(sech r) for the squeezed-vacuum input
            sech = (1.0 - q_in) ** 2
            r_in = math.acosh(1.0 / sech) if q_in > 0.0 else 0.0
            state_in = DstsParams(nbar=0.0, r=r_in)
            if z == 0.0:
                # the channel is exactly the identity map; the direct degree
                # avoids round-tripping strongly squeezed inputs through the
                # cancellation-prone coefficient inversion
                q_out = degree_q0(state_in)
            else:
                out_cf = teleport_with_noise(dsts_to_cf(state_in), z)
                q_out = degree_q0(cf_to_dsts(out_cf))
            rows.append((q_in, q_out))
        out[float(e0)] = rows
    return out


def _write_atomic(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _csv_text(header: str, rows: Iterable[tuple[float, float]]) -> str:
    lines = [header]
    lines += [f"{u:.12g},{v:.12g}" for u, v in rows]
    return "\n".join(lines) + "\n"


def write_fig1_csv(sweep: dict[float, list[tuple[float, float]]], outdir) -> list[Path]:
    """One `e0,fidelity` file per input occupancy."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths = []
    for nbar_in, rows in sweep.items():
        path = outdir / f"fig1_nbar_{nbar_in:g}.csv"
        _write_atomic(path, _csv_text("e0,fidelity", rows))
        paths.append(path)
    return paths


def write_fig2_csv(sweep: dict[float, list[tuple[float, float]]], outdir) -> list[Path]:
    """One `q_in,q_out` file per resource entanglement."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths = []
    for e0, rows in sweep.items():
        path = outdir / f"fig2_e0_{e0:g}.csv"
        _write_atomic(path, _csv_text("q_in,q_out", rows))
        paths.append(path)
    return paths
