"""Resonant (Gamow) states u_n(x) and the expansion factors rho_n(x, k).

A resonant state solves the stationary equation at the complex pole wave
number k_n with purely outgoing boundary conditions,

    u'(0) = -i k_n u(0),      u'(L) = +i k_n u(L),

and is normalized by the resonant-state convention

    integral_0^L u_n^2 dx + i [u_n^2(0) + u_n^2(L)] / (2 k_n) = 1

(note: square, not modulus squared; the surface term regularizes the
divergent exterior of an outgoing solution).  This convention is what makes
the two-level truncation of the stationary wave quantitatively correct; the
truncation test in the suite doubles as its validation.

The expansion factor of the transient solution is

    rho_n(x, k) = 2 i k u_n(0) u_n(x) / (k^2 - k_n^2),

with third-quadrant partners k_{-n} = -k_n*, u_{-n} = u_n*.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PoleQualityError
from .model import PotentialProfile
from .poles import ResonancePole
from .scattering import _cos_sinc, _propagate

__all__ = ["ResonantMode", "solve_mode", "rho", "rho_mirror"]


@dataclass(frozen=True)
class ResonantMode:
    """Normalized u_n represented by per-layer (value, derivative) pairs.

    coefficients[j] = (u, u') at the left edge of layer j, so inside layer j

        u(edges[j] + xi) = A_j cos(q_j xi) + B_j sin(q_j xi)/q_j .
    """

    pole: ResonancePole
    edges: np.ndarray
    q: np.ndarray
    coefficients: tuple[tuple[complex, complex], ...]
    u0: complex
    uL: complex
    outgoing_residual: float
    normalization_residual: float

    def u(self, x):
        """u_n(x) for x in [0, L]; scalar or array."""
        x_arr = np.asarray(x, dtype=float)
        L = float(self.edges[-1])
        if np.any(x_arr < 0.0) or np.any(x_arr > L):
            raise DomainError(f"x must lie in [0, {L}] nm")
        scalar = x_arr.ndim == 0
        x_arr = np.atleast_1d(x_arr)
        idx = np.clip(
            np.searchsorted(self.edges, x_arr, side="right") - 1,
            0,
            len(self.coefficients) - 1,
        )
        out = np.empty(x_arr.shape, dtype=complex)
        for i, (xi, j) in enumerate(zip(x_arr, idx)):
            a, b = self.coefficients[j]
            d = xi - self.edges[j]
            c, s = _cos_sinc(self.q[j] * d)
            out[i] = a * c + b * d * s
        return complex(out[0]) if scalar else out


def _layer_integral(a: complex, b: complex, q: complex, w: float) -> complex:
    """integral_0^w (a cos(q xi) + b sin(q xi)/q)^2 d xi in closed form.

    With z = 2 q w, S = sin(z)/z, U = (1-S)/z^2, V = (1-cos z)/z^2:

        a^2 (w/2)(1+S) + 2 b^2 w^3 U + 2 a b w^2 V

    S, U, V are entire in z^2; series below |z| = 1e-5 avoids cancellation.
    """
    z = 2.0 * q * w
    if abs(z) < 1e-5:
        z2 = z * z
        s = 1.0 - z2 / 6.0 + z2 * z2 / 120.0
        u = 1.0 / 6.0 - z2 / 120.0 + z2 * z2 / 5040.0
        v = 0.5 - z2 / 24.0 + z2 * z2 / 720.0
    else:
        s = np.sin(z) / z
        u = (1.0 - s) / (z * z)
        v = (1.0 - np.cos(z)) / (z * z)
    return a * a * (w / 2.0) * (1.0 + s) + 2.0 * b * b * w**3 * u + 2.0 * a * b * w**2 * v


def _norm_square(
    coeffs: list[tuple[complex, complex]],
    q: np.ndarray,
    profile: PotentialProfile,
    u0: complex,
    uL: complex,
    k_n: complex,
) -> complex:
    total = 0.0 + 0.0j
    for j, layer in enumerate(profile.layers):
        a, b = coeffs[j]
        total += _layer_integral(a, b, q[j], layer.width)
    return total + 1j * (u0 * u0 + uL * uL) / (2.0 * k_n)


def solve_mode(
    profile: PotentialProfile, pole: ResonancePole, initial_scale: complex = 1.0
) -> ResonantMode:
    """Propagate, verify the outgoing exit condition, and normalize u_n.

    initial_scale multiplies the seed (u, u') = (1, -i k_n) at x = 0; the
    normalized mode is invariant under it up to a global sign, which is then
    fixed by arg u_n(0) in (-pi/2, pi/2].
    """
    k_n = pole.k
    q, mats = _propagate(profile, k_n)
    vec = np.array([1.0, -1j * k_n], dtype=complex) * complex(initial_scale)
    coeffs = []
    for m in mats:
        coeffs.append((complex(vec[0]), complex(vec[1])))
        vec = m @ vec
    uL, duL = complex(vec[0]), complex(vec[1])
    # outgoing exit condition u'(L) = +i k_n u(L); relative residual
    residual = abs(duL - 1j * k_n * uL) / (abs(duL) + abs(k_n * uL))
    if residual > 1e-6:
        raise PoleQualityError(
            f"pole n={pole.index}: outgoing residual {residual:.3e} at x = L; "
            f"pole likely unconverged"
        )
    u0 = coeffs[0][0]
    nsq = _norm_square(coeffs, q, profile, u0, uL, k_n)
    scale = 1.0 / np.sqrt(nsq)
    # sign convention: arg u(0) in (-pi/2, pi/2]
    u0_scaled = u0 * scale
    if u0_scaled.real < 0 or (u0_scaled.real == 0 and u0_scaled.imag < 0):
        scale = -scale
    coeffs = [(a * scale, b * scale) for a, b in coeffs]
    u0, uL = u0 * scale, uL * scale
    norm_residual = abs(_norm_square(coeffs, q, profile, u0, uL, k_n) - 1.0)
    return ResonantMode(
        pole=pole,
        edges=profile.edges,
        q=q,
        coefficients=tuple(coeffs),
        u0=u0,
        uL=uL,
        outgoing_residual=float(residual),
        normalization_residual=float(norm_residual),
    )


def rho(mode: ResonantMode, k: float, x):
    """rho_n(x, k) = 2 i k u_n(0) u_n(x) / (k^2 - k_n^2) for real k."""
    k = float(k)
    k_n = mode.pole.k
    return 2j * k * mode.u0 * mode.u(x) / (k * k - k_n * k_n)


def rho_mirror(mode: ResonantMode, k: float, x):
    """rho_{-n}(x, k): partner at k_{-n} = -k_n* with u_{-n} = u_n*."""
    k = float(k)
    k_mirror = -np.conj(mode.pole.k)
    u0 = np.conj(mode.u0)
    ux = np.conj(mode.u(x))
    return 2j * k * u0 * ux / (k * k - k_mirror * k_mirror)
