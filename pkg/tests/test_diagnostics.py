"""
Tests for norms, budgets, growth fits, the resolution monitor, the
inequality probes and the diagnostics record.
"""

import numpy as np
import pytest

from analysis.budgets import (
    energy_budget_residual, energy_rate_residual, enstrophy_budget_residual,
    enstrophy_rate_residual, gronwall_ratio, zeta_equation_residual)
from analysis.growth import GrowthFit, default_window, growth_fit
from analysis.norms import (
    grad_omega_profile, kinetic_energy, lp_norm, phi_p, psi_p, sobolev_norm,
    zeta)
from analysis.probes import (
    inequality_probe_gn, inequality_probe_nash, probe_maxima)
from analysis.record import (
    DiagnosticsRecord, evaluate, is_under_resolved, resolution_monitor)
from model.solver.forcing import (
    BOUSSINESQ, CURL_FORCED, NONE, ForcingSpec)
from model.solver.initial import initial_data
from model.solver.integrator import trajectory
from model.solver.state import SimState
from model.spectral.field import (
    Grid, PhysicalField, SpectralField, forward_transform, sample)
from model.spectral.multiplier import apply_R


def sine(grid, k1=1, k2=0):
    return sample(grid, lambda x1, x2: np.sin(2 * np.pi * (k1 * x1 + k2 * x2)))


def constant(grid, c):
    return sample(grid, lambda x1, x2: c + 0 * x1)


class TestNorms:

    def test_lp_of_constant(self):
        f = constant(Grid(16), -2.0)
        for p in (1, 2, 7.5, np.inf):
            assert lp_norm(f, p) == pytest.approx(2.0)

    def test_lp_of_sine(self):
        f = sine(Grid(32))
        assert lp_norm(f, 2) == pytest.approx(1 / np.sqrt(2))
        assert lp_norm(f, 4) == pytest.approx((3 / 8) ** 0.25)
        assert lp_norm(f, np.inf) == pytest.approx(1.0)

    def test_lp_large_values_do_not_overflow(self):
        f = constant(Grid(16), 1e200)
        assert lp_norm(f, 16) == pytest.approx(1e200)

    def test_lp_rejects_small_p(self):
        with pytest.raises(ValueError):
            lp_norm(constant(Grid(16), 1.0), 0.5)

    def test_lp_of_zero(self):
        assert lp_norm(np.zeros((4, 4)), 3) == 0.0

    def test_sobolev_single_mode(self):
        F = forward_transform(sine(Grid(32)))
        assert sobolev_norm(F, 0) == pytest.approx(np.sqrt(0.5))
        assert sobolev_norm(F, 1) == pytest.approx(
            np.sqrt(0.5 * (1 + 4 * np.pi ** 2)))
        assert sobolev_norm(SpectralField.zeros(Grid(16)), 2) == 0

    def test_phi_p(self):
        f = sine(Grid(32))
        assert phi_p(f, 2) == pytest.approx(0.5)
        assert phi_p(f, 4) == pytest.approx(3 / 8)
        with pytest.raises(ValueError):
            phi_p(f, 1)

    def test_zeta_is_omega_minus_R_rho(self):
        grid = Grid(32)
        rho = forward_transform(sine(grid))
        state = SimState(t=0.0, omega_hat=SpectralField.zeros(grid),
                         rho_hat=rho)
        np.testing.assert_array_equal(zeta(state).coeffs,
                                      -apply_R(rho).coeffs)

    def test_psi_p(self):
        z = forward_transform(sine(Grid(32)))
        assert psi_p(z, 2) == pytest.approx(2 * np.pi ** 2)

    def test_grad_omega_profile(self):
        omega = forward_transform(sine(Grid(32)))
        profile = grad_omega_profile(omega, (2, 4))
        assert profile[2] == pytest.approx(2 ** -1.5 * 2 * np.pi
                                           / np.sqrt(2))
        assert set(profile) == {2, 4}


class TestBudgets:

    def test_zeta_equation_second_order(self):
        state = initial_data("random-bandlimited", Grid(32), seed=1234)
        forcing = ForcingSpec(BOUSSINESQ)
        worst = []
        for dt in (1e-5, 5e-6):
            states = trajectory(state, forcing, dt, 2)
            worst.append(np.max(zeta_equation_residual(states)))
        assert worst[0] < 1e-4
        assert worst[0] / worst[1] > 3.5

    def test_zeta_equation_too_short(self):
        state = initial_data("random-bandlimited", Grid(16), seed=0)
        with pytest.raises(ValueError):
            zeta_equation_residual([state, state.at(0.1)])

    @pytest.mark.parametrize("forcing", [
        ForcingSpec(BOUSSINESQ), ForcingSpec(NONE),
        ForcingSpec(CURL_FORCED, lam=0.5)])
    def test_semi_discrete_balances(self, forcing):
        state = initial_data("random-bandlimited", Grid(32), seed=11)
        assert abs(energy_rate_residual(state, forcing)) < 1e-10
        assert abs(enstrophy_rate_residual(state, forcing)) < 1e-10

    def test_nonzero_mean_energy_balance(self):
        forcing = ForcingSpec(BOUSSINESQ, nonzero_mean=True)
        state = initial_data("random-bandlimited", Grid(32), seed=2,
                             rho_mean=0.4)
        state = trajectory(state, forcing, 1e-3, 3)[-1]
        assert state.u_mean[1] != 0
        assert abs(energy_rate_residual(state, forcing)) < 1e-10

    def test_energy_budget_taylor_green(self):
        state = initial_data("taylor-green", Grid(32))
        states = trajectory(state, ForcingSpec(BOUSSINESQ), 1e-5, 4)
        residual = energy_budget_residual(states, ForcingSpec(BOUSSINESQ))
        assert len(residual) == 3
        assert np.max(np.abs(residual)) < 1e-6

    def test_enstrophy_budget_decaying_mode(self):
        grid = Grid(32)
        h = 1e-6

        def mode(t):
            omega = sample(grid, lambda x1, x2: np.exp(-4 * np.pi ** 2 * t)
                           * np.sin(2 * np.pi * x1))
            return SimState(t=t, omega_hat=forward_transform(omega),
                            rho_hat=SpectralField.zeros(grid))

        states = [mode(t) for t in (0.01 - h, 0.01, 0.01 + h)]
        for p in (1, 2):
            residual = enstrophy_budget_residual(states, p, ForcingSpec(NONE))
            assert np.max(np.abs(residual)) < 1e-8

    def test_series_too_short(self):
        state = initial_data("taylor-green", Grid(16))
        with pytest.raises(ValueError, match="at least 3"):
            energy_budget_residual([state, state], ForcingSpec(NONE))

    def test_enstrophy_needs_integer_p(self):
        states = [initial_data("zero", Grid(16)).at(t) for t in (0, 1, 2)]
        with pytest.raises(ValueError):
            enstrophy_budget_residual(states, 1.5, ForcingSpec(NONE))

    def test_gronwall_ratio_bounded(self):
        state = initial_data("random-bandlimited", Grid(32), seed=4)
        states = trajectory(state, ForcingSpec(BOUSSINESQ), 1e-3, 10)
        ratio = gronwall_ratio(states)
        assert len(ratio) == 9
        assert np.max(ratio) < 2.02


class TestGrowthFit:

    T = np.linspace(0, 1, 101)

    def test_exponential(self):
        fit = growth_fit(self.T, 2 * np.exp(3 * self.T))
        assert fit.linear_slope == pytest.approx(3, abs=1e-9)
        assert abs(fit.quadratic_coeff) < 1e-8
        assert fit.r_squared == pytest.approx(1.0)
        assert fit.line().startswith("fit b=3.000000 q=")

    def test_gaussian(self):
        fit = growth_fit(self.T, np.exp(2 * self.T ** 2))
        assert fit.quadratic_coeff == pytest.approx(2, abs=1e-9)
        assert fit.variance_reduction > 0.99
        assert not fit.single_exponential

    def test_single_exponential(self):
        values = np.exp(3 * self.T + 0.01 * np.sin(40 * self.T))
        fit = growth_fit(self.T, values)
        assert fit.r_squared > 0.99
        assert fit.variance_reduction < 0.1
        assert fit.single_exponential

    def test_scaling_invariance(self):
        values = np.exp(np.sin(3 * self.T) + self.T)
        a = growth_fit(self.T, values)
        b = growth_fit(self.T, 1e5 * values)
        assert a.linear_slope == pytest.approx(b.linear_slope, rel=1e-9)
        assert a.quadratic_coeff == pytest.approx(b.quadratic_coeff, rel=1e-9)

    def test_default_window_skips_transient(self):
        assert default_window(self.T) == pytest.approx((0.1, 1.0))
        fit = growth_fit(self.T, np.exp(self.T))
        assert isinstance(fit, GrowthFit)
        assert 90 <= fit.n_samples <= 91

    def test_explicit_window(self):
        values = np.where(self.T < 0.5, 1.0, np.exp(4 * (self.T - 0.5)))
        fit = growth_fit(self.T, values, window=(0.5, 1.0))
        assert fit.linear_slope == pytest.approx(4, abs=1e-9)

    def test_constant_series(self):
        fit = growth_fit(self.T, np.full_like(self.T, 5.0))
        assert fit.linear_slope == pytest.approx(0, abs=1e-12)
        assert fit.r_squared == 1.0

    def test_too_few_samples(self):
        with pytest.raises(ValueError, match="at least"):
            growth_fit(self.T, np.exp(self.T), window=(0.0, 0.05))

    def test_non_positive_values(self):
        values = np.exp(self.T)
        values[50] = 0.0
        with pytest.raises(ValueError, match="offending t=0.5"):
            growth_fit(self.T, values)

    def test_empty_window(self):
        with pytest.raises(ValueError, match="empty window"):
            growth_fit(self.T, np.exp(self.T), window=(0.5, 0.5))


class TestResolutionMonitor:

    def test_low_mode(self):
        rho = forward_transform(sine(Grid(32), k1=3, k2=2))
        assert resolution_monitor(rho) == pytest.approx(0, abs=1e-25)
        assert not is_under_resolved(resolution_monitor(rho))

    def test_tail_mode(self):
        rho = forward_transform(sine(Grid(32), k1=1, k2=9))
        assert resolution_monitor(rho) == pytest.approx(1.0)
        assert is_under_resolved(resolution_monitor(rho))

    def test_mixed(self):
        grid = Grid(32)
        f = PhysicalField(grid, sine(grid).samples
                          + sine(grid, k1=12).samples)
        assert resolution_monitor(forward_transform(f)) \
            == pytest.approx(0.5)

    def test_zero(self):
        assert resolution_monitor(SpectralField.zeros(Grid(16))) == 0.0


class TestProbes:

    def test_constant_field(self):
        f = constant(Grid(32), 3.0)
        assert inequality_probe_nash(f) == pytest.approx(1.0)
        assert inequality_probe_gn(f, 4) == pytest.approx(1.0)

    def test_gn_p2(self):
        f = sine(Grid(64))
        assert inequality_probe_gn(f, 2) \
            == pytest.approx(1 / (1 + np.sqrt(2)))

    def test_zero_field(self):
        with pytest.raises(ValueError, match="nonzero"):
            inequality_probe_nash(constant(Grid(16), 0.0))

    def test_gn_rejects_small_p(self):
        with pytest.raises(ValueError):
            inequality_probe_gn(sine(Grid(16)), 1)

    def test_maxima_deterministic_and_bounded(self):
        grid = Grid(32)
        a = probe_maxima(grid, 10, 4, seed=0)
        b = probe_maxima(grid, 10, 4, seed=0)
        assert a == b
        nash, gn = a
        assert 0 < nash < np.inf
        assert set(gn) == {4, 8, 16}
        assert all(0 < v < np.inf for v in gn.values())


class TestRecord:

    def test_columns(self):
        columns = DiagnosticsRecord.columns((2, 4))
        assert columns[:6] == ["t", "l2_u", "h1_u", "h2_u", "l2_rho",
                               "h1_rho"]
        assert columns[6:9] == ["lp_omega_2", "lp_omega_4", "linf_omega"]
        assert "lp_grad_zeta_4" in columns
        assert "tail_fraction_rho" in columns and "dt_used" in columns
        assert len(columns) == len(set(columns))

    def test_evaluate_row(self):
        state = initial_data("random-bandlimited", Grid(32), seed=9)
        forcing = ForcingSpec(BOUSSINESQ)
        record = evaluate(state, forcing, p_list=(2, 4), dt_used=1e-3)
        row = record.as_row()
        assert list(row) == DiagnosticsRecord.columns((2, 4))
        assert row["t"] == 0.0 and row["dt_used"] == 1e-3
        assert row["l2_u"] == pytest.approx(np.sqrt(2 * kinetic_energy(state)))
        assert row["lp_omega_2"] <= row["lp_omega_4"] <= row["linf_omega"]
        assert row["l2_rho"] == pytest.approx(1.0)
        assert abs(row["energy_residual"]) < 1e-10
        assert row["tail_fraction_rho"] < 1e-20

    def test_evaluate_taylor_green(self):
        state = initial_data("taylor-green", Grid(32))
        row = evaluate(state, ForcingSpec(BOUSSINESQ), p_list=(2,)).as_row()
        # |u|_L2 of the Taylor-Green field is 1/sqrt(2)
        assert row["l2_u"] == pytest.approx(1 / np.sqrt(2))
        assert row["linf_omega"] == pytest.approx(4 * np.pi)
        assert row["l2_rho"] == 0
