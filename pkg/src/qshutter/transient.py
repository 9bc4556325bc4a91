"""Time-dependent shutter solution inside the structure.

At t = 0 a shutter at x = 0 releases the cutoff standing wave

    Psi(x, k; 0) = e^{ikx} - e^{-ikx}   (x <= 0),      0   (x > 0).

For 0 <= x <= L the solution is the resonance expansion

    Psi = Phi_k M(y_k) - Phi_k* M(y_{-k})
          - sum_n [ rho_n M(y_{k_n}) + rho_{-n} M(y_{k_{-n}}) ]

with x-independent arguments y_s = e^{i 3pi/4} sqrt(hbar/2m) s sqrt(t) and
the sum over the retained fourth-quadrant poles and their third-quadrant
partners.  The partner terms are not optional: they carry the cancellation
that makes Psi vanish as t -> 0+ (the truncated sum leaves a residual at
the level of the dropped poles, ~1e-6 of T(E) for N = 4 on the structures
treated here).

On a free profile the expansion degenerates (no poles) and does not reduce
to the free propagation of the cutoff wave; psi_exact dispatches to the
closed-form free-shutter solution with the position-dependent argument in
that case.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .mfunc import m_function, y_values
from .model import PhysicalConstants, PotentialProfile, wavenumber
from .modes import ResonantMode, rho, rho_mirror, solve_mode
from .poles import find_poles
from .scattering import StationaryField, solve_stationary, stationary_wave

__all__ = [
    "METHOD_EXACT",
    "METHOD_TWO_LEVEL_M",
    "METHOD_TWO_LEVEL_CLOSED",
    "METHOD_EXPONENTIAL",
    "METHODS",
    "ShutterProblem",
    "make_problem",
    "TransientTrace",
    "psi_exact",
    "psi_doublet_M",
    "delta_term",
    "free_shutter_psi",
    "evolve_trace",
]

METHOD_EXACT = "exact-N"
METHOD_TWO_LEVEL_M = "two-level-M"
METHOD_TWO_LEVEL_CLOSED = "two-level-closed"
METHOD_EXPONENTIAL = "exponential"
METHODS = (
    METHOD_EXACT,
    METHOD_TWO_LEVEL_M,
    METHOD_TWO_LEVEL_CLOSED,
    METHOD_EXPONENTIAL,
)


@dataclass(frozen=True)
class ShutterProblem:
    """Profile + incidence energy + retained modes + stationary field."""

    profile: PotentialProfile
    E: float
    k: float
    modes: tuple[ResonantMode, ...]
    field: StationaryField

    @property
    def constants(self) -> PhysicalConstants:
        return self.profile.constants

    @property
    def L(self) -> float:
        return self.profile.total_length


def make_problem(
    profile: PotentialProfile, E: float, n_poles: int = 4
) -> ShutterProblem:
    """Assemble a ShutterProblem at real incidence energy E (eV).

    n_poles = 0 is allowed only for a free profile (no resonances exist to
    retain); otherwise at least one mode is required.
    """
    if not (E > 0):
        raise DomainError(f"incidence energy must be > 0 eV, got {E}")
    if n_poles == 0 or profile.is_free:
        if not profile.is_free:
            raise DomainError("n_poles = 0 is only valid for a free profile")
        modes: tuple[ResonantMode, ...] = ()
    else:
        poles = find_poles(profile, n_poles)
        modes = tuple(solve_mode(profile, p) for p in poles)
    k = wavenumber(E, profile).real
    field = solve_stationary(profile, k)
    return ShutterProblem(profile=profile, E=float(E), k=k, modes=modes, field=field)


def _check_xt(problem: ShutterProblem, x: float, t) -> np.ndarray:
    if x < 0 or x > problem.L:
        raise DomainError(f"x must lie in [0, {problem.L}] nm")
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr <= 0):
        raise DomainError("t must be > 0 ps (t = 0 is the initial condition)")
    return t_arr


def _psi_terms(problem: ShutterProblem, x: float, t, n_modes: int):
    """Shared evaluator: stationary terms plus the first n_modes pole pairs."""
    t_arr = _check_xt(problem, x, t)
    c = problem.constants
    k = problem.k
    phi = stationary_wave(problem.field, x)
    psi = phi * m_function(y_values(k, t_arr, c)) - np.conj(phi) * m_function(
        y_values(-k, t_arr, c)
    )
    for mode in problem.modes[:n_modes]:
        k_n = mode.pole.k
        psi = psi - rho(mode, k, x) * m_function(y_values(k_n, t_arr, c))
        psi = psi - rho_mirror(mode, k, x) * m_function(
            y_values(-np.conj(k_n), t_arr, c)
        )
    if np.asarray(t).ndim == 0:
        return complex(psi)
    return psi


def psi_exact(problem: ShutterProblem, x: float, t):
    """Psi(x, t) from the full retained pole set; vectorized over t.

    Free profiles dispatch to the closed-form free-shutter solution (the
    pole expansion is empty there and does not represent free propagation).
    """
    if len(problem.modes) == 0:
        if not problem.profile.is_free:
            raise DomainError("problem carries no modes for a non-free profile")
        _check_xt(problem, x, t)
        return free_shutter_psi(problem.k, x, t, problem.constants)
    return _psi_terms(problem, x, t, len(problem.modes))


def psi_doublet_M(problem: ShutterProblem, x: float, t):
    """The doublet-restricted M-function form: modes 1 and 2 only."""
    if len(problem.modes) < 2:
        raise DomainError("doublet form needs at least two modes")
    return _psi_terms(problem, x, t, 2)


def delta_term(problem: ShutterProblem, x: float, t):
    """Remainder Delta(x, t) of the two-level reduction.

    Delta = psi_doublet_M - sum_{n=1,2} rho_n [e^{y_k^2} - e^{y_{k_n}^2}];
    the bracket exponentials are the evolution phases e^{-iEt/hbar} and
    e^{-iE_n t/hbar}.  Delta is algebraically the collection of all
    M(y_{-k}) and M(y_{k_{-n}}) pieces, decaying as an inverse power of t;
    at small t it is O(1) and enforces the vanishing initial condition.
    """
    t_arr = _check_xt(problem, x, t)
    hbar = problem.constants.hbar_ev_ps
    phase_k = np.exp(-1j * problem.E * t_arr / hbar)
    kept = np.zeros_like(t_arr, dtype=complex)
    for mode in problem.modes[:2]:
        phase_n = np.exp(-1j * mode.pole.E * t_arr / hbar)
        kept = kept + rho(mode, problem.k, x) * (phase_k - phase_n)
    return psi_doublet_M(problem, x, t) - kept


def free_shutter_psi(k: float, x: float, t, constants: PhysicalConstants):
    """Closed-form free evolution of the cutoff standing wave, x >= 0.

    Psi = M(x, k, t) - M(x, -k, t) with the position-dependent argument

        M(x, s, t) = 1/2 e^{i x^2/(4 beta t)} w(i zeta_s),
        zeta_s     = e^{-i pi/4} (x - 2 beta s t) / sqrt(4 beta t),

    beta = hbar/2m in nm^2/ps.  Exponent-safe for all real x, t > 0.
    """
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr <= 0):
        raise DomainError("t must be > 0 ps")
    beta = constants.hbar_over_2m
    root = np.sqrt(4.0 * beta * t_arr)
    front = np.exp(1j * x * x / (4.0 * beta * t_arr))
    phase = np.exp(-1j * np.pi / 4.0)
    zeta_p = phase * (x - 2.0 * beta * k * t_arr) / root
    zeta_m = phase * (x + 2.0 * beta * k * t_arr) / root
    psi = front * (m_function(zeta_p) - m_function(zeta_m))
    if np.asarray(t).ndim == 0:
        return complex(psi)
    return psi


@dataclass(frozen=True)
class TransientTrace:
    """|Psi|^2 on a time grid at fixed position and incidence energy."""

    x: float
    E: float
    tau_1: float
    times: np.ndarray
    densities: dict[str, np.ndarray]

    @property
    def methods(self) -> tuple[str, ...]:
        return tuple(self.densities.keys())


def evolve_trace(
    problem: ShutterProblem,
    x: float,
    time_grid,
    methods=(METHOD_EXACT,),
) -> TransientTrace:
    """Densities for the requested method tags on a strictly increasing grid.

    t = 0 entries are served from the initial condition (density 0 inside
    [0, L]).  "exact-N" uses the problem's full mode list; the two-level
    tags use modes 1 and 2; "exponential" is the on-resonance envelope
    T(E) (1 - e^{-t/(2 hbar/Gamma_1)})^2, whose time constant is the
    amplitude decay time 2 hbar/Gamma_1 dictated by the closed two-level
    form at omega_hat_1 = 0.
    """
    times = np.asarray(time_grid, dtype=float)
    if times.ndim != 1 or len(times) < 1:
        raise DomainError("time grid must be a 1-D array")
    if np.any(times < 0) or np.any(np.diff(times) <= 0):
        raise DomainError("time grid must be strictly increasing and >= 0")
    for m in methods:
        if m not in METHODS:
            raise DomainError(f"unknown method tag '{m}'; valid: {METHODS}")
    positive = times > 0
    t_pos = times[positive]
    densities: dict[str, np.ndarray] = {}
    tau_1 = problem.modes[0].pole.tau if problem.modes else np.nan

    def assemble(values_pos: np.ndarray) -> np.ndarray:
        out = np.zeros_like(times)
        out[positive] = values_pos
        return out

    for method in methods:
        if method == METHOD_EXACT:
            d = np.abs(psi_exact(problem, x, t_pos)) ** 2
        elif method == METHOD_TWO_LEVEL_M:
            d = np.abs(psi_doublet_M(problem, x, t_pos)) ** 2
        elif method == METHOD_TWO_LEVEL_CLOSED:
            from .twolevel import density_two_level, frequencies

            if len(problem.modes) < 2:
                raise DomainError("two-level-closed needs at least two modes")
            freqs = frequencies(
                problem.E, problem.modes[0].pole, problem.modes[1].pole
            )
            d = density_two_level(
                problem.modes[0], problem.modes[1], freqs, x, problem.k, t_pos
            )
        elif method == METHOD_EXPONENTIAL:
            from .twolevel import density_resonant_exponential

            if len(problem.modes) < 1:
                raise DomainError("exponential envelope needs a mode")
            T = abs(problem.field.t) ** 2
            gamma_1 = problem.modes[0].pole.Gamma
            tau_amp = 2.0 * problem.constants.hbar_ev_ps / gamma_1
            d = density_resonant_exponential(T, tau_amp, t_pos)
        densities[method] = assemble(np.asarray(d, dtype=float))
    return TransientTrace(
        x=float(x), E=problem.E, tau_1=float(tau_1), times=times, densities=densities
    )
