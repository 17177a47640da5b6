import numpy as np

from model.solver.state import SimState
from model.spectral.field import (
    SpectralField, dealias, forward_transform, project_mean_zero,
    random_bandlimited, sample)

TAYLOR_GREEN = "taylor-green"
RHO_STRIPE = "rho-stripe"
RANDOM_BANDLIMITED = "random-bandlimited"
ZERO = "zero"

PRESETS = (TAYLOR_GREEN, RHO_STRIPE, RANDOM_BANDLIMITED, ZERO)


def _field(grid, func):
    return dealias(forward_transform(sample(grid, func)))


def initial_data(preset, grid, seed=0, amplitude=1.0, perturbation=0.1,
                 rho_mean=0.0, kmax=None):
    """
    Smooth, band-limited initial (omega, rho).

    * taylor-green: omega = 4 pi sin(2 pi x1) sin(2 pi x2), rho = 0;
    * rho-stripe: omega = 0, rho = sin(2 pi x2) + perturbation cos(2 pi x1);
      the bare stripe is hydrostatic, the perturbation starts the flow;
    * random-bandlimited: both fields random with |k| <= n/6, unit rms
      times ``amplitude``, deterministic in ``seed``;
    * zero: rest state.

    ``rho_mean`` is added to the density mean, which every preset leaves
    at zero.
    """

    if preset == TAYLOR_GREEN:
        omega = _field(grid, lambda x1, x2: 4 * np.pi * amplitude
                       * np.sin(2 * np.pi * x1) * np.sin(2 * np.pi * x2))
        rho = SpectralField.zeros(grid)

    elif preset == RHO_STRIPE:
        omega = SpectralField.zeros(grid)
        rho = _field(grid, lambda x1, x2: amplitude * (
            np.sin(2 * np.pi * x2) + perturbation * np.cos(2 * np.pi * x1)))

    elif preset == RANDOM_BANDLIMITED:
        rng = np.random.default_rng(seed)
        kmax = grid.n / 6 if kmax is None else kmax
        omega = random_bandlimited(grid, kmax, rng, amplitude=amplitude)
        rho = random_bandlimited(grid, kmax, rng, amplitude=amplitude)

    elif preset == ZERO:
        omega = SpectralField.zeros(grid)
        rho = SpectralField.zeros(grid)

    else:
        raise ValueError(f"preset {preset!r} not recognized, "
                         f"expected one of {PRESETS}")

    rho = project_mean_zero(rho)
    if rho_mean:
        coeffs = rho.coeffs.copy()
        coeffs[0, 0] = rho_mean
        rho = rho.with_coeffs(coeffs)

    return SimState(t=0.0, omega_hat=project_mean_zero(omega), rho_hat=rho)
