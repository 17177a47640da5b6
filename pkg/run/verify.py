"""
Pass/fail property suites at desk-scale parameters.
"""

import logging
from dataclasses import dataclass

import numpy as np

from analysis.budgets import (
    energy_budget_residual, energy_rate_residual, enstrophy_budget_residual,
    enstrophy_rate_residual, gronwall_ratio, zeta_equation_residual, zeta_rhs)
from analysis.growth import growth_fit
from analysis.norms import lp_norm
from analysis.probes import (
    inequality_probe_gn, inequality_probe_nash, probe_maxima)
from model.oracle.exponent import beta_limit, beta_partial
from model.oracle.recursion import (
    RecursionParams, closed_form_gap, dominance_check, r_printed_form,
    r_sequence, time_shift_sum, uniform_bound_extract)
from model.oracle.riccati import riccati_settling, settling_closed_form
from model.solver.forcing import BOUSSINESQ, CURL_FORCED, NONE, ForcingSpec
from model.solver.initial import initial_data
from model.solver.integrator import explicit_rhs, step, trajectory
from model.solver.state import SimState
from model.spectral.field import (
    Grid, SpectralField, forward_transform, inverse_transform, sample)
from model.spectral.multiplier import (
    N_SYMBOL, R_SYMBOL, apply_R, biot_savart, commutator_identity_residual,
    commutator_T_identity_residual, curl, divergence, h1_vector,
    helmholtz_symbol, l2)

logger = logging.getLogger(__name__)

SUITES = ("operators", "budgets", "recursion", "nash-lemma", "all")

SEED = 1234
N_PARAM_DRAWS = 200
N_PROBE_FIELDS = 1000
# Halving dt divides a second-order residual by 4
ZETA_ORDER_RATIO = 3.5


@dataclass(frozen=True)
class Check:

    name: str
    value: float
    threshold: float
    passed: bool

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.value:.3e} " \
               f"(threshold {self.threshold:.3e})"


def below(name, value, threshold):
    return Check(name, float(value), threshold, bool(value < threshold))


def above(name, value, threshold):
    return Check(name, float(value), threshold, bool(value > threshold))


def holds(name, ok):
    return Check(name, 0.0 if ok else 1.0, 0.5, bool(ok))


def _random_pair(grid, seed):
    state = initial_data("random-bandlimited", grid, seed=seed)
    return state, biot_savart(state.omega_hat)


def operators_suite():

    grid = Grid(64)
    state, (u1, u2) = _random_pair(grid, SEED)
    rho = state.rho_hat

    checks = [
        below("commutator identity",
              commutator_identity_residual(u1, u2, rho), 1e-10),
        below("commutator identity, T = Lambda^-1",
              commutator_T_identity_residual(helmholtz_symbol(-1),
                                             u1, u2, rho), 1e-10),
    ]

    shear = forward_transform(
        sample(grid, lambda x1, x2: np.sin(2 * np.pi * x1)))
    zero = SpectralField.zeros(grid)
    checks.append(above("commutator negative control (div u != 0)",
                        commutator_identity_residual(shear, zero, shear,
                                                     check=False), 1e-2))

    checks += [
        holds("R preserves realness", R_SYMBOL.preserves_realness(grid)),
        holds("N preserves realness", N_SYMBOL.preserves_realness(grid)),
        below("Biot-Savart divergence",
              l2(divergence(u1, u2)) / h1_vector(u1, u2), 1e-12),
        below("Biot-Savart curl",
              l2(curl(u1, u2) - state.omega_hat) / l2(state.omega_hat),
              1e-12),
    ]

    forcing = ForcingSpec(BOUSSINESQ)
    domega, drho = explicit_rhs(state, forcing)
    dz = domega.with_coeffs(
        domega.coeffs - grid.kappa_sq * state.omega_hat.coeffs) \
        - apply_R(drho)
    rhs = zeta_rhs(state)
    checks.append(below("zeta equation, semi-discrete",
                        l2(dz - rhs) / l2(dz), 1e-10))
    return checks


def _taylor_green_states(grid, dt):
    state = initial_data("taylor-green", grid)
    return trajectory(state, ForcingSpec(BOUSSINESQ), dt, 2)


def _decaying_mode(grid, t):
    omega = sample(grid, lambda x1, x2: np.exp(-4 * np.pi ** 2 * t)
                   * np.sin(2 * np.pi * x1))
    return SimState(t=t, omega_hat=forward_transform(omega),
                    rho_hat=SpectralField.zeros(grid))


def zeta_residual_order(grid, seed, dt):
    """max zeta-equation residual at dt and dt/2 on a Boussinesq run"""

    state = initial_data("random-bandlimited", grid, seed=seed)
    forcing = ForcingSpec(BOUSSINESQ)
    out = []
    for h in (dt, dt / 2):
        states = trajectory(state, forcing, h, 2)
        out.append(np.max(zeta_equation_residual(states)))
    return out


def budgets_suite():

    grid = Grid(32)
    forcing = ForcingSpec(BOUSSINESQ)
    state, _ = _random_pair(grid, SEED)

    checks = [
        below("energy balance, semi-discrete",
              abs(energy_rate_residual(state, forcing)), 1e-10),
        below("enstrophy balance, semi-discrete",
              abs(enstrophy_rate_residual(state, forcing)), 1e-10),
        below("energy budget, Taylor-Green",
              np.max(np.abs(energy_budget_residual(
                  _taylor_green_states(grid, 1e-5), forcing))), 1e-6),
    ]

    h = 1e-6
    modes = [_decaying_mode(grid, t) for t in (0.01 - h, 0.01, 0.01 + h)]
    residual = enstrophy_budget_residual(modes, 2, ForcingSpec(NONE))
    checks.append(below("enstrophy budget p=2, decaying mode",
                        np.max(np.abs(residual)), 1e-8))

    coarse, fine = zeta_residual_order(grid, SEED, 1e-5)
    checks.append(below("zeta equation residual, n=32", coarse, 1e-4))
    checks.append(above("zeta equation residual ratio at dt/2, n=32 "
                        "(2nd order)", coarse / fine, ZETA_ORDER_RATIO))

    states = trajectory(state, forcing, 1e-3, 20)
    checks.append(below("density-gradient Gronwall ratio",
                        np.max(gronwall_ratio(states)), 2.02))
    return checks


def recursion_suite():

    rng = np.random.default_rng(SEED)
    draws = [RecursionParams.draw(rng) for _ in range(N_PARAM_DRAWS)]

    failures = sum(not dominance_check(p, 30)[0] for p in draws)
    gap = max(closed_form_gap(p, 60) for p in draws)
    extracts = [uniform_bound_extract(p, 30) for p in draws]
    slack = max(e.value - e.bound for e in extracts)

    example = RecursionParams(C0=1, C1=1, M=2, lam=0)
    printed_gap = max(abs(r_sequence(example, 2)[k]
                          - r_printed_form(example, k)) for k in (1, 2))

    checks = [
        below("dominance failures over random parameters", failures, 0.5),
        below("R_k recursion vs closed form (log / 2^k)", gap, 1e-9),
        below("log M_k / 2^k - log(2^mu C1 M)", slack, 1e-12),
        below("printed closed form, k <= 2", printed_gap, 1e-12),
        below("beta partial products",
              max(abs(beta_partial(1) - 1 / 2), abs(beta_partial(2) - 3 / 8),
                  abs(beta_partial(3) - 21 / 64)), 1e-15),
        below("beta limit vs 0.28878", abs(beta_limit(1e-10) - 0.28878),
              1e-5),
        below("time shift sum", abs(time_shift_sum(20, 1.0)
                                    - (1 - 2.0 ** -20)), 1e-15),
    ]

    worst = 0.0
    for ratio in (2, 10, 1e3, 1e6):
        exact = settling_closed_form(1.0, ratio)
        numeric = riccati_settling(1.0, ratio)
        scale = exact if exact > 0 else 1.0
        worst = max(worst, abs(numeric - exact) / scale)
    checks.append(below("Riccati settling vs coth", worst, 1e-6))

    times = [riccati_settling(a, 1e3 * a) for a in (1e-3, 1.0, 1e3)]
    checks.append(below("Riccati settling independent of a",
                        (max(times) - min(times)) / max(times), 1e-6))
    return checks


def nash_lemma_suite():

    grid = Grid(64)
    const = sample(grid, lambda x1, x2: 3.0 + 0 * x1)
    sine = sample(grid, lambda x1, x2: np.sin(2 * np.pi * x1))

    checks = [
        below("Nash probe, constant",
              abs(inequality_probe_nash(const) - 1), 1e-6),
        below("GN probe p=2",
              abs(inequality_probe_gn(sine, 2) - 1 / (1 + np.sqrt(2))),
              1e-12),
    ]

    coarse, fine = Grid(32), Grid(64)
    nash_c, gn_c = probe_maxima(coarse, N_PROBE_FIELDS, 4, SEED,
                                draw_grid=coarse)
    nash_f, gn_f = probe_maxima(fine, N_PROBE_FIELDS, 4, SEED,
                                draw_grid=coarse)
    checks.append(below("Nash probe max, n -> 2n",
                        abs(nash_f - nash_c) / nash_c, 0.05))
    for p in gn_c:
        checks.append(below(f"GN probe max p={p}, n -> 2n",
                            abs(gn_f[p] - gn_c[p]) / gn_c[p], 0.05))

    checks.append(below("forced vorticity plateau slope",
                        abs(forced_plateau_slope(Grid(32))), 0.01))
    return checks


def forced_plateau_slope(grid, t_end=2.0, dt=1e-2):
    """Fitted slope of log |omega|_Linf over the second half of a forced
    Navier-Stokes run from rest"""

    forcing = ForcingSpec(CURL_FORCED, amplitude=1.0, lam=0.5)
    state = initial_data("zero", grid)
    times, linf = [], []
    for _ in range(int(round(t_end / dt))):
        state = step(state, dt, forcing)
        times.append(state.t)
        linf.append(lp_norm(inverse_transform(state.omega_hat), np.inf))
    return growth_fit(times, linf, window=(t_end / 2, t_end)).linear_slope


SUITE_FUNCTIONS = {
    "operators": operators_suite,
    "budgets": budgets_suite,
    "recursion": recursion_suite,
    "nash-lemma": nash_lemma_suite,
}


def run_suite(name):

    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}, expected one of {SUITES}")

    names = list(SUITE_FUNCTIONS) if name == "all" else [name]
    checks = []
    for suite in names:
        logger.info(f"suite {suite}")
        for check in SUITE_FUNCTIONS[suite]():
            logger.info(check.line())
            checks.append(check)
    return checks
