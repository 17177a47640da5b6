"""
Tests for the multipliers R, N, the Biot-Savart law and the commutator
identities.
"""

import numpy as np
import pytest

from model.exceptions import PreconditionError
from model.spectral.field import (
    Grid, SpectralField, derivative, forward_transform, inverse_transform,
    random_bandlimited, sample)
from model.spectral.multiplier import (
    IDENTITY, N_SYMBOL, R_SYMBOL, apply_helmholtz_power, apply_N, apply_R,
    biot_savart, check_divergence_free, commutator_identity_residual,
    commutator_R_advection, commutator_T_identity_residual, curl,
    derivative_symbol, divergence, helmholtz_symbol, l2, realness_defect)


def spectral(grid, func):
    return forward_transform(sample(grid, func))


def random_velocity_and_density(n=64, seed=0):
    grid = Grid(n)
    rng = np.random.default_rng(seed)
    omega = random_bandlimited(grid, n / 6, rng)
    rho = random_bandlimited(grid, n / 6, rng, mean_zero=False)
    u1, u2 = biot_savart(omega)
    return omega, u1, u2, rho


class TestSymbols:

    def test_R_on_single_mode(self):
        grid = Grid(32)
        rho = spectral(grid, lambda x1, x2: np.sin(2 * np.pi * x1))
        R_rho = inverse_transform(apply_R(rho))
        c = 2 * np.pi / (1 + 4 * np.pi ** 2)
        expected = sample(grid, lambda x1, x2: c * np.cos(2 * np.pi * x1))
        np.testing.assert_allclose(R_rho.samples, expected.samples,
                                   atol=1e-14)

    def test_R_kills_x2_modes(self):
        grid = Grid(32)
        rho = spectral(grid, lambda x1, x2: np.sin(2 * np.pi * x2))
        assert np.max(np.abs(apply_R(rho).coeffs)) < 1e-15

    def test_R_is_composition(self):
        grid = Grid(32)
        F = random_bandlimited(grid, 8, np.random.default_rng(2))
        composed = derivative(apply_helmholtz_power(F, -2), 1)
        np.testing.assert_array_equal(apply_R(F).coeffs, composed.coeffs)

    def test_symbol_object_matches_operator(self):
        grid = Grid(32)
        F = random_bandlimited(grid, 8, np.random.default_rng(2))
        np.testing.assert_allclose(R_SYMBOL(F).coeffs, apply_R(F).coeffs,
                                   rtol=1e-13, atol=1e-16)

    def test_N_is_minus_R(self):
        grid = Grid(32)
        F = random_bandlimited(grid, 8, np.random.default_rng(4))
        np.testing.assert_array_equal(apply_N(F).coeffs, -apply_R(F).coeffs)
        np.testing.assert_allclose(N_SYMBOL(F).coeffs, -apply_R(F).coeffs,
                                   rtol=1e-13, atol=1e-16)

    @pytest.mark.parametrize("symbol", [
        R_SYMBOL, N_SYMBOL, derivative_symbol(1), derivative_symbol(2),
        helmholtz_symbol(-1), IDENTITY])
    def test_realness(self, symbol):
        grid = Grid(16)
        assert symbol.preserves_realness(grid)
        F = random_bandlimited(grid, 7.9, np.random.default_rng(0))
        assert realness_defect(symbol, F) < 1e-12

    def test_helmholtz_zero_power_is_identity(self):
        grid = Grid(16)
        F = random_bandlimited(grid, 5, np.random.default_rng(0))
        np.testing.assert_allclose(apply_helmholtz_power(F, 0).coeffs,
                                   F.coeffs)


class TestBiotSavart:

    def test_shear(self):
        grid = Grid(32)
        omega = spectral(grid, lambda x1, x2: np.sin(2 * np.pi * x1))
        u1, u2 = biot_savart(omega)
        expected = sample(grid, lambda x1, x2:
                          -np.cos(2 * np.pi * x1) / (2 * np.pi))
        assert np.max(np.abs(u1.coeffs)) < 1e-15
        np.testing.assert_allclose(inverse_transform(u2).samples,
                                   expected.samples, atol=1e-14)

    def test_divergence_free_and_curl(self):
        omega, u1, u2, _ = random_velocity_and_density(32)
        assert l2(divergence(u1, u2)) < 1e-12
        assert l2(curl(u1, u2) - omega) < 1e-12 * l2(omega)

    def test_zero(self):
        u1, u2 = biot_savart(SpectralField.zeros(Grid(16)))
        assert l2(u1) == 0 and l2(u2) == 0

    def test_mean_rejected(self):
        grid = Grid(16)
        omega = spectral(grid, lambda x1, x2: 1 + np.sin(2 * np.pi * x1))
        with pytest.raises(PreconditionError):
            biot_savart(omega)


class TestCommutators:

    def test_identity_on_divergence_free_data(self):
        _, u1, u2, rho = random_velocity_and_density()
        assert commutator_identity_residual(u1, u2, rho) < 1e-10

    @pytest.mark.parametrize("T", [
        helmholtz_symbol(-1), IDENTITY, derivative_symbol(2)])
    def test_T_variant(self, T):
        _, u1, u2, rho = random_velocity_and_density()
        assert commutator_T_identity_residual(T, u1, u2, rho) < 1e-10

    def test_negative_control(self):
        grid = Grid(64)
        shear = spectral(grid, lambda x1, x2: np.sin(2 * np.pi * x1))
        zero = SpectralField.zeros(grid)
        residual = commutator_identity_residual(shear, zero, shear,
                                                check=False)
        assert residual > 1e-2

    def test_divergent_velocity_rejected(self):
        grid = Grid(64)
        shear = spectral(grid, lambda x1, x2: np.sin(2 * np.pi * x1))
        zero = SpectralField.zeros(grid)
        with pytest.raises(PreconditionError, match="divergence"):
            check_divergence_free(shear, zero)
        with pytest.raises(PreconditionError):
            commutator_R_advection(shear, zero, shear)

    def test_commutator_vanishes_for_constant_velocity_direction(self):
        # u = (0, u2(x1)) and rho = rho(x1): both terms vanish
        grid = Grid(32)
        u1 = SpectralField.zeros(grid)
        u2 = spectral(grid, lambda x1, x2: np.cos(2 * np.pi * x1))
        rho = spectral(grid, lambda x1, x2: np.sin(4 * np.pi * x1))
        c = commutator_R_advection(u1, u2, rho)
        assert np.max(np.abs(c.samples)) < 1e-14
