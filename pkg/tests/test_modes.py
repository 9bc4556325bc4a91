"""Resonant states: outgoing conditions, normalization, and rho factors."""

import numpy as np
import pytest
from scipy.integrate import quad

from qshutter import (
    DomainError,
    rho,
    rho_mirror,
    solve_mode,
    solve_stationary,
    stationary_wave,
    wavenumber,
)


class TestSolveMode:
    def test_normalization_residual(self, triple_modes, double_modes):
        for m in triple_modes + double_modes:
            assert m.normalization_residual < 1e-10

    def test_outgoing_conditions(self, triple_modes):
        # left condition is the propagation seed; right is verified output
        for m in triple_modes:
            assert m.outgoing_residual < 1e-8
            k_n = m.pole.k
            a0, b0 = m.coefficients[0]
            assert abs(b0 + 1j * k_n * a0) < 1e-12 * abs(b0)

    def test_boundary_values_match_evaluator(self, triple_modes, triple_profile):
        L = triple_profile.total_length
        for m in triple_modes:
            assert abs(m.u(0.0) - m.u0) < 1e-12
            assert abs(m.u(L) - m.uL) < 1e-12

    def test_interface_continuity(self, triple_modes, triple_profile):
        for m in triple_modes:
            for j, layer in enumerate(triple_profile.layers[:-1]):
                a, b = m.coefficients[j]
                z = m.q[j] * layer.width
                value = a * np.cos(z) + b * layer.width * np.sin(z) / z
                deriv = -a * m.q[j] * np.sin(z) + b * np.cos(z)
                a_next, b_next = m.coefficients[j + 1]
                assert abs(value - a_next) < 1e-10 * max(abs(a_next), 1.0)
                assert abs(deriv - b_next) < 1e-10 * max(abs(b_next), 1.0)

    def test_closed_form_layer_integrals_match_quadrature(
        self, triple_modes, triple_profile
    ):
        # integral of u^2 over each layer, closed form vs adaptive quadrature
        m = triple_modes[0]
        for j, layer in enumerate(triple_profile.layers):
            lo, hi = triple_profile.edges[j], triple_profile.edges[j + 1]
            re = quad(lambda x: (m.u(x) ** 2).real, lo, hi, epsabs=1e-13)[0]
            im = quad(lambda x: (m.u(x) ** 2).imag, lo, hi, epsabs=1e-13)[0]
            a, b = m.coefficients[j]
            from qshutter.modes import _layer_integral

            closed = _layer_integral(a, b, m.q[j], layer.width)
            assert abs(closed - complex(re, im)) < 1e-9

    def test_normalization_invariant_under_initial_scale(
        self, triple_profile, triple_poles
    ):
        # any complex seed scale must land on the same normalized mode
        base = solve_mode(triple_profile, triple_poles[0])
        scaled = solve_mode(
            triple_profile, triple_poles[0], initial_scale=2.7 - 1.3j
        )
        L = triple_profile.total_length
        for x in (0.0, 0.3 * L, 0.77 * L, L):
            assert abs(base.u(x) - scaled.u(x)) < 1e-12 * max(abs(base.u(x)), 1.0)

    def test_sign_convention(self, triple_modes, double_modes):
        for m in triple_modes + double_modes:
            arg = np.angle(m.u0)
            assert -np.pi / 2 < arg <= np.pi / 2

    def test_x_outside_rejected(self, triple_modes, triple_profile):
        with pytest.raises(DomainError):
            triple_modes[0].u(triple_profile.total_length + 1.0)


class TestRho:
    def test_zero_at_k_zero(self, triple_modes):
        for m in triple_modes:
            assert rho(m, 0.0, 10.0) == 0.0
            assert rho_mirror(m, 0.0, 10.0) == 0.0

    def test_mirror_is_conjugation_identity(self, triple_modes, problem_ebar, rng):
        # rho_{-n}(x, k) = 2ik u_n(0)* u_n(x)* / (k^2 - k_n*^2)
        k = problem_ebar.k
        L = problem_ebar.L
        for m in triple_modes:
            for x in rng.uniform(0.0, L, size=5):
                direct = rho_mirror(m, k, x)
                expect = (
                    2j
                    * k
                    * np.conj(m.u0)
                    * np.conj(m.u(x))
                    / (k * k - np.conj(m.pole.k) ** 2)
                )
                assert abs(direct - expect) < 1e-12 * max(abs(expect), 1.0)

    def test_on_resonance_dominance(self, triple_profile, triple_modes):
        # |rho_1(L)|^2 carries nearly all of the near-unity resonant density
        k1 = wavenumber(triple_modes[0].pole.E_position, triple_profile).real
        L = triple_profile.total_length
        assert abs(rho(triple_modes[0], k1, L)) ** 2 >= 0.95

    def test_two_level_truncation_at_exit(self, triple_profile, triple_modes, ebar):
        # Phi(L, k) vs rho_1 + rho_2 at the doublet center: within 10%
        k = wavenumber(ebar, triple_profile).real
        L = triple_profile.total_length
        phi = stationary_wave(solve_stationary(triple_profile, k), L)
        two = rho(triple_modes[0], k, L) + rho(triple_modes[1], k, L)
        assert abs(phi - two) / abs(phi) < 0.10
        assert abs(two) ** 2 == pytest.approx(abs(phi) ** 2, rel=0.10)
