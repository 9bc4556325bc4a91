"""Transfer matrix, transmission, and the stationary wave."""

import numpy as np
import pytest

from conftest import T_DOUBLE_83740, T_TRIPLE_12949, T_TRIPLE_EBAR
from qshutter import (
    DomainError,
    OverflowGuardError,
    build_profile,
    solve_stationary,
    stationary_wave,
    transfer_matrix,
    transmission,
    wavenumber,
)


class TestTransferMatrix:
    def test_unit_determinant_real_k(self, triple_profile, double_profile, rng):
        # |det - 1| of the formed matrix floats at ~eps/T, so the 1e-10 bound
        # only binds where the structure is not opaque (|m22|^2 < 1e5)
        for profile in (triple_profile, double_profile):
            for E in rng.uniform(5e-3, 0.2, size=50):
                m = transfer_matrix(profile, wavenumber(E, profile))
                det = m.m11 * m.m22 - m.m12 * m.m21
                big = abs(m.m22) ** 2
                assert abs(det - 1.0) < (1e-10 if big < 1e5 else 1e-12 * big)

    def test_free_profile_is_pure_phase(self, free_profile):
        # under the exterior convention Phi = t e^{ikx} for x >= L, the free
        # profile has t = 1 exactly (Phi = e^{ikx} everywhere)
        k = 0.3
        m = transfer_matrix(free_profile, k)
        t = 1.0 / m.m22
        assert abs(t - 1.0) < 1e-12

    def test_k_zero_rejected(self, triple_profile):
        with pytest.raises(DomainError):
            transfer_matrix(triple_profile, 0.0)

    def test_overflow_guard_on_thick_evanescent_layer(self):
        # |Im q| * width beyond 300 must fail diagnosably, not return inf
        thick = build_profile([(5000.0, 1.0)], 0.067)
        with pytest.raises(OverflowGuardError) as err:
            transmission(thick, 1e-3)
        assert err.value.layer_index == 0


class TestTransmission:
    def test_free_profile_is_unity(self, free_profile):
        _, T = transmission(free_profile, 0.05)
        assert T == pytest.approx(1.0, abs=1e-12)

    def test_triple_barrier_doublet_center_pin(self, triple_profile, ebar):
        _, T = transmission(triple_profile, ebar)
        assert T == pytest.approx(T_TRIPLE_EBAR, abs=1e-8)

    def test_triple_barrier_at_12_949_meV(self, triple_profile):
        _, T = transmission(triple_profile, 12.949e-3)
        assert T == pytest.approx(T_TRIPLE_12949, abs=1e-8)

    def test_double_barrier_at_83_740_meV(self, double_profile):
        _, T = transmission(double_profile, 83.740e-3)
        assert T == pytest.approx(T_DOUBLE_83740, abs=1e-8)

    def test_on_resonance_transmission_near_unity(
        self, triple_profile, double_profile, triple_poles, double_poles
    ):
        # symmetric structures transmit fully at the T(E) peak; the peak sits
        # within Gamma_1 of the pole's real part but not exactly on it
        from scipy.optimize import minimize_scalar

        for profile, pole in (
            (triple_profile, triple_poles[0]),
            (double_profile, double_poles[0]),
        ):
            res = minimize_scalar(
                lambda E: -transmission(profile, E)[1],
                bounds=(pole.E_position - pole.Gamma, pole.E_position + pole.Gamma),
                method="bounded",
            )
            assert -res.fun >= 0.99
            assert abs(res.x - pole.E_position) < pole.Gamma

    def test_unitarity(self, triple_profile, double_profile, rng):
        for profile in (triple_profile, double_profile):
            for E in rng.uniform(1e-3, 0.2, size=200):
                k = wavenumber(E, profile)
                f = solve_stationary(profile, k)
                assert abs(abs(f.r) ** 2 + abs(f.t) ** 2 - 1.0) < 1e-10

    def test_layer_order_reversal(self, rng):
        fwd = build_profile([(3.0, 0.12), (10.0, 0.0), (5.0, 0.2)], 0.067)
        rev = build_profile([(5.0, 0.2), (10.0, 0.0), (3.0, 0.12)], 0.067)
        for E in rng.uniform(1e-3, 0.3, size=50):
            assert transmission(fwd, E)[1] == pytest.approx(
                transmission(rev, E)[1], abs=1e-10
            )

    def test_range(self, triple_profile, rng):
        for E in rng.uniform(1e-3, 0.3, size=100):
            _, T = transmission(triple_profile, E)
            assert 0.0 <= T <= 1.0 + 1e-9


class TestStationaryWave:
    def test_free_profile_plane_wave(self, free_profile):
        k = 0.25
        f = solve_stationary(free_profile, k)
        for x in (0.0, 0.31, 1.0):
            assert abs(stationary_wave(f, x) - np.exp(1j * k * x)) < 1e-12

    def test_exit_value_is_transmitted_wave(self, triple_profile, ebar):
        k = wavenumber(ebar, triple_profile).real
        f = solve_stationary(triple_profile, k)
        L = triple_profile.total_length
        assert abs(stationary_wave(f, L) - f.t * np.exp(1j * k * L)) < 1e-12
        assert abs(stationary_wave(f, L)) ** 2 == pytest.approx(
            transmission(triple_profile, ebar)[1], abs=1e-12
        )

    def test_interface_continuity(self, triple_profile, ebar):
        # evaluate (Phi, Phi') at each interface from the layer on its left
        # and compare with the next layer's stored start values
        k = wavenumber(ebar, triple_profile).real
        f = solve_stationary(triple_profile, k)
        for j, layer in enumerate(triple_profile.layers[:-1]):
            a, b = f.coefficients[j]
            q, w = f.q[j], layer.width
            z = q * w
            value_left = a * np.cos(z) + b * w * np.sin(z) / z
            deriv_left = -a * q * np.sin(z) + b * np.cos(z)
            a_next, b_next = f.coefficients[j + 1]
            assert abs(value_left - a_next) < 1e-10 * max(abs(a_next), 1.0)
            assert abs(deriv_left - b_next) < 1e-10 * max(abs(b_next), 1.0)

    def test_conjugation_symmetry(self, triple_profile, rng):
        # Phi(x, -k) = Phi(x, k)* for real k
        for E in rng.uniform(1e-3, 0.2, size=10):
            k = wavenumber(E, triple_profile).real
            f_plus = solve_stationary(triple_profile, k)
            f_minus = solve_stationary(triple_profile, -k)
            for x in rng.uniform(0.0, triple_profile.total_length, size=5):
                a = stationary_wave(f_minus, x)
                b = np.conj(stationary_wave(f_plus, x))
                assert abs(a - b) < 1e-10

    def test_x_outside_rejected(self, triple_profile, ebar):
        k = wavenumber(ebar, triple_profile).real
        f = solve_stationary(triple_profile, k)
        with pytest.raises(DomainError):
            stationary_wave(f, -0.1)
        with pytest.raises(DomainError):
            stationary_wave(f, triple_profile.total_length + 0.1)
