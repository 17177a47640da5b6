from dataclasses import dataclass, replace

from model.spectral.multiplier import biot_savart


@dataclass(frozen=True)
class SimState:
    """
    Prognostic variables of the vorticity form: time, spectral vorticity
    and spectral density. ``u_mean`` is the spatial mean of the velocity,
    zero unless the nonzero-mean variant is enabled.
    """

    t: float
    omega_hat: object
    rho_hat: object
    u_mean: tuple = (0.0, 0.0)

    @property
    def grid(self):
        return self.omega_hat.grid

    def advanced(self, omega_hat, rho_hat, tau, acceleration=(0.0, 0.0)):
        """Stage state at t + tau"""
        return SimState(
            t=self.t + tau,
            omega_hat=omega_hat,
            rho_hat=rho_hat,
            u_mean=(self.u_mean[0] + tau * acceleration[0],
                    self.u_mean[1] + tau * acceleration[1]))

    def at(self, t):
        return replace(self, t=t)


def velocity(state):
    """Spectral velocity (u1, u2), mean mode included"""

    u1, u2 = biot_savart(state.omega_hat)
    if state.u_mean == (0.0, 0.0):
        return u1, u2

    c1 = u1.coeffs.copy()
    c2 = u2.coeffs.copy()
    c1[0, 0] = state.u_mean[0]
    c2[0, 0] = state.u_mean[1]
    return u1.with_coeffs(c1), u2.with_coeffs(c2)
