"""Stationary scattering on a layered profile via the transfer matrix.

Interior propagation uses the fundamental pair (cos qx, sin qx / q), which
is entire in q^2, so evanescent layers (q imaginary) and the q -> 0
degeneracy need no separate code path; one complex formula covers every
layer.  Exterior phase convention:

    x <= 0:  e^{ikx} + r e^{-ikx}
    x >= L:  t e^{ikx}            (so Phi(L) = t e^{ikL}, |Phi(L)|^2 = T)

The transfer matrix M relates exterior plane-wave coefficient pairs,
(A_right, B_right) = M (A_left, B_left), with det M = 1 for equal exterior
potentials; then t = 1/m22 and r = -m21/m22.  m22 is analytic in k away
from k = 0, and its zeros are exactly the transmission-amplitude poles.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, OverflowGuardError, QShutterError
from .model import PotentialProfile

__all__ = [
    "TransferMatrix",
    "StationaryField",
    "transfer_matrix",
    "solve_stationary",
    "transmission",
    "stationary_wave",
]

# |Im(q) * width| above this would push layer exponentials toward the
# double-precision ceiling; raise a diagnosable error instead
OVERFLOW_GUARD = 300.0


@dataclass(frozen=True)
class TransferMatrix:
    m11: complex
    m12: complex
    m21: complex
    m22: complex

    @property
    def determinant(self) -> complex:
        return self.m11 * self.m22 - self.m12 * self.m21

    @property
    def t(self) -> complex:
        """Transmission amplitude (det M = 1 identities fold into m22)."""
        return 1.0 / self.m22

    @property
    def r(self) -> complex:
        return -self.m21 / self.m22


@dataclass(frozen=True)
class StationaryField:
    """Phi(x, k) inside [0, L]: exterior amplitudes plus per-layer data.

    Layer j covers [edges[j], edges[j+1]] with local wave number q[j]; the
    coefficient pair (A_j, B_j) is (Phi, Phi') at the layer's left edge, so

        Phi(edges[j] + xi) = A_j cos(q_j xi) + B_j sin(q_j xi)/q_j .
    """

    k: complex
    r: complex
    t: complex
    edges: np.ndarray
    q: np.ndarray
    coefficients: tuple[tuple[complex, complex], ...]

    @property
    def total_length(self) -> float:
        return float(self.edges[-1])


def _layer_q(profile: PotentialProfile, k: complex) -> np.ndarray:
    """Local wave numbers q_j = sqrt(k^2 - V_j/(hbar^2/2m)), principal branch.

    The propagation formulas are even in q, so the branch is irrelevant;
    principal is used for determinism.
    """
    h22m = profile.constants.hbar2_over_2m
    v = np.array([l.height for l in profile.layers], dtype=complex)
    return np.sqrt(complex(k) ** 2 - v / h22m)


def _cos_sinc(z: complex) -> tuple[complex, complex]:
    """cos z and sin(z)/z, series fallback below |z| = 1e-6."""
    if abs(z) < 1e-6:
        z2 = z * z
        return 1.0 - z2 / 2.0, 1.0 - z2 / 6.0
    return np.cos(z), np.sin(z) / z


def _propagate(profile: PotentialProfile, k: complex):
    """Per-layer fundamental matrices; raises on guarded overflow."""
    q = _layer_q(profile, k)
    mats = []
    for j, layer in enumerate(profile.layers):
        z = q[j] * layer.width
        if abs(z.imag) > OVERFLOW_GUARD:
            raise OverflowGuardError(j, abs(z.imag))
        c, s = _cos_sinc(z)
        w_sinc = layer.width * s
        mats.append(np.array([[c, w_sinc], [-q[j] ** 2 * w_sinc, c]], dtype=complex))
    return q, mats


def transfer_matrix(profile: PotentialProfile, k: complex) -> TransferMatrix:
    """Exterior plane-wave transfer matrix at (possibly complex) k != 0."""
    k = complex(k)
    if k == 0:
        raise DomainError("k = 0: exterior plane waves undefined")
    _, mats = _propagate(profile, k)
    # P maps (psi, psi') at x=0 to x=L
    p = np.eye(2, dtype=complex)
    for m in mats:
        p = m @ p
    L = profile.total_length
    ekl = np.exp(1j * k * L)
    # basis change (A, B) -> (psi, psi') at x = 0 and its inverse at x = L
    c0 = np.array([[1.0, 1.0], [1j * k, -1j * k]], dtype=complex)
    cl_inv = np.array(
        [[0.5 / ekl, 1.0 / (2j * k * ekl)], [0.5 * ekl, -ekl / (2j * k)]],
        dtype=complex,
    )
    m = cl_inv @ p @ c0
    return TransferMatrix(m11=m[0, 0], m12=m[0, 1], m21=m[1, 0], m22=m[1, 1])


def solve_stationary(profile: PotentialProfile, k: complex) -> StationaryField:
    """Full interior solution Phi(x, k) for exterior incidence from the left."""
    tm = transfer_matrix(profile, k)
    k = complex(k)
    r, t = tm.r, tm.t
    q, mats = _propagate(profile, k)
    # (Phi, Phi') at x = 0 from the exterior convention
    vec = np.array([1.0 + r, 1j * k * (1.0 - r)], dtype=complex)
    coeffs = []
    for m in mats:
        coeffs.append((complex(vec[0]), complex(vec[1])))
        vec = m @ vec
    return StationaryField(
        k=k, r=r, t=t, edges=profile.edges, q=q, coefficients=tuple(coeffs)
    )


def transmission(profile: PotentialProfile, E: float) -> tuple[complex, float]:
    """(t, T = |t|^2) at real incidence energy E > 0 (eV)."""
    if not (np.isreal(E) and E > 0):
        raise DomainError(f"transmission needs real E > 0 eV, got {E}")
    from .model import wavenumber

    t = transfer_matrix(profile, wavenumber(float(E), profile)).t
    T = abs(t) ** 2
    if T > 1.0 + 1e-9:
        raise QShutterError(f"unitarity violated: T = {T}")
    return t, float(T)


def stationary_wave(field: StationaryField, x):
    """Phi(x, k) for x in [0, L]; accepts scalars or arrays."""
    x_arr = np.asarray(x, dtype=float)
    L = field.total_length
    if np.any(x_arr < 0.0) or np.any(x_arr > L):
        raise DomainError(f"x must lie in [0, {L}] nm")
    scalar = x_arr.ndim == 0
    x_arr = np.atleast_1d(x_arr)
    idx = np.clip(
        np.searchsorted(field.edges, x_arr, side="right") - 1,
        0,
        len(field.coefficients) - 1,
    )
    out = np.empty(x_arr.shape, dtype=complex)
    for i, (xi, j) in enumerate(zip(x_arr, idx)):
        a, b = field.coefficients[j]
        z = field.q[j] * (xi - field.edges[j])
        c, s = _cos_sinc(z)
        out[i] = a * c + b * (xi - field.edges[j]) * s
    return complex(out[0]) if scalar else out
