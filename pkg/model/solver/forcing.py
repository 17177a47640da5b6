import numpy as np

from analysis.norms import lp_norm
from model.spectral.field import (
    Grid, SpectralField, derivative, forward_transform, sample)

BOUSSINESQ = "boussinesq"
CURL_FORCED = "curl_forced"
NONE = "none"

VARIANTS = (BOUSSINESQ, CURL_FORCED, NONE)

# Exponents at which the L^p admissibility of a curl forcing is checked
ADMISSIBLE_P = (2, 4, 8, 16, 1024, np.inf)
ADMISSIBLE_GRID_N = 64


class ForcingSpec:
    """
    Source of the vorticity equation.

    * ``boussinesq``: buoyancy rho*e2, i.e. d1 rho in vorticity form;
    * ``curl_forced``: Navier-Stokes forced by f = (f1, f2), entering as
      div F with F = (f2, -f1);
    * ``none``: unforced Navier-Stokes.

    The default curl forcing is the travelling pair
    f(x, t) = M (sin(2 pi (x2 + c t)), sin(2 pi (x1 - c t))).
    """

    def __init__(self, variant=BOUSSINESQ, amplitude=1.0, lam=0.0,
                 speed=1.0, nonzero_mean=False):

        if variant not in VARIANTS:
            raise ValueError(f"forcing variant {variant!r} not recognized")
        if lam < 0:
            raise ValueError(f"forcing_lambda must be >= 0, got {lam}")

        self.variant = variant
        self.amplitude = amplitude
        self.lam = lam
        self.speed = speed
        self.nonzero_mean = nonzero_mean

        if variant == CURL_FORCED:
            self.check_admissible(Grid(ADMISSIBLE_GRID_N))

    def velocity_forcing(self, grid, t):
        """Physical components (f1, f2) of the curl forcing at time t"""

        M, c = self.amplitude, self.speed
        f1 = sample(grid, lambda x1, x2: M * np.sin(2 * np.pi * (x2 + c * t)))
        f2 = sample(grid, lambda x1, x2: M * np.sin(2 * np.pi * (x1 - c * t)))
        return f1, f2

    def lp_norm(self, grid, t, p):
        """Max over components of the L^p norms of f"""

        f1, f2 = self.velocity_forcing(grid, t)
        return max(lp_norm(f, p) for f in (f1, f2))

    def check_admissible(self, grid, times=(0.0, 0.125, 0.25)):

        for t in times:
            f1, f2 = self.velocity_forcing(grid, t)
            for f in (f1, f2):
                if abs(np.mean(f.samples)) > 1e-12 * max(self.amplitude, 1):
                    raise ValueError("curl forcing must be mean-free")
            for p in ADMISSIBLE_P:
                norm = self.lp_norm(grid, t, p)
                bound = p ** self.lam * abs(self.amplitude)
                if norm > bound * (1 + 1e-12):
                    raise ValueError(
                        f"forcing violates |f|_Lp <= p^lambda M at p={p}: "
                        f"{norm:.6e} > {bound:.6e}")

    def vorticity_source(self, state):
        """Source term of the vorticity equation, spectral"""

        grid = state.grid
        if self.variant == BOUSSINESQ:
            return derivative(state.rho_hat, 1)
        elif self.variant == CURL_FORCED:
            f1, f2 = self.velocity_forcing(grid, state.t)
            return derivative(forward_transform(f2), 1) \
                - derivative(forward_transform(f1), 2)
        return SpectralField.zeros(grid)

    def mean_acceleration(self, state):
        """d/dt of the mean velocity; the mean buoyancy acts only in the
        nonzero-mean variant"""

        if self.variant == BOUSSINESQ and self.nonzero_mean:
            return 0.0, state.rho_hat.mean
        return 0.0, 0.0

    def work(self, state, u1, u2):
        """Power of the forcing on the velocity, int f . u"""

        if self.variant == BOUSSINESQ:
            return np.sum(np.real(state.rho_hat.coeffs * np.conj(u2.coeffs)))
        elif self.variant == CURL_FORCED:
            f1, f2 = self.velocity_forcing(state.grid, state.t)
            F1, F2 = forward_transform(f1), forward_transform(f2)
            return np.sum(np.real(F1.coeffs * np.conj(u1.coeffs)
                                  + F2.coeffs * np.conj(u2.coeffs)))
        return 0.0

    def __repr__(self):
        return (f"ForcingSpec({self.variant}, M={self.amplitude}, "
                f"lambda={self.lam}, c={self.speed}, "
                f"nonzero_mean={self.nonzero_mean})")
