"""
Integrating-factor RK4 for the vorticity-form Boussinesq system

    omega_t - lap omega + u . grad omega = source
    rho_t + u . grad rho = 0

Viscosity is 1 and diffusivity 0: the factor exp(-|kappa|^2 dt) acts on
omega only and is applied exactly per mode; advection is explicit and
dealiased.
"""

from dataclasses import dataclass

import numpy as np

from model.exceptions import BlowUpError, MalformedFieldError
from model.solver.state import velocity
from model.spectral.field import inverse_transform, project_mean_zero
from model.spectral.multiplier import advect

VELOCITY_FLOOR = 1e-12


@dataclass(frozen=True)
class StepPolicy:

    cfl: float = 0.4
    dt_max: float = 1e-2
    dt_min: float = 1e-8
    t_end: float = 1.0

    def __post_init__(self):
        if not 0 < self.cfl <= 1:
            raise ValueError(f"cfl must be in (0, 1], got {self.cfl}")
        if not 0 < self.dt_min <= self.dt_max:
            raise ValueError(
                f"need 0 < dt_min <= dt_max, got {self.dt_min}, {self.dt_max}")
        if self.t_end < 0:
            raise ValueError(f"t_end must be >= 0, got {self.t_end}")


def _tendency(state, forcing):

    try:
        u1, u2 = velocity(state)
        adv_omega = advect(u1, u2, state.omega_hat)
        adv_rho = advect(u1, u2, state.rho_hat)
        source = forcing.vorticity_source(state)
    except MalformedFieldError as e:
        raise BlowUpError(state.t, str(e)) from e

    # Transport conserves the means of omega and rho
    domega = -project_mean_zero(adv_omega).coeffs + source.coeffs
    drho = -project_mean_zero(adv_rho).coeffs

    if not (np.all(np.isfinite(domega)) and np.all(np.isfinite(drho))):
        raise BlowUpError(state.t)
    return domega, drho


def explicit_rhs(state, forcing):
    """Non-diffusive tendencies (d omega_hat, d rho_hat)"""

    domega, drho = _tendency(state, forcing)
    return (state.omega_hat.with_coeffs(domega),
            state.rho_hat.with_coeffs(drho))


def step(state, dt, forcing):

    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt}")

    half = np.exp(-state.grid.kappa_sq * dt / 2)
    full = half * half
    acc = forcing.mean_acceleration(state)

    w0 = state.omega_hat.coeffs
    r0 = state.rho_hat.coeffs

    def stage(w, r, tau):
        try:
            s = state.advanced(state.omega_hat.with_coeffs(w),
                               state.rho_hat.with_coeffs(r), tau, acc)
        except MalformedFieldError as e:
            raise BlowUpError(state.t + tau, str(e)) from e
        return _tendency(s, forcing)

    k1w, k1r = _tendency(state, forcing)
    k2w, k2r = stage(half * (w0 + dt / 2 * k1w), r0 + dt / 2 * k1r, dt / 2)
    k3w, k3r = stage(half * w0 + dt / 2 * k2w, r0 + dt / 2 * k2r, dt / 2)
    k4w, k4r = stage(full * w0 + dt * half * k3w, r0 + dt * k3r, dt)

    w = full * w0 + dt / 6 * (full * k1w + 2 * half * (k2w + k3w) + k4w)
    r = r0 + dt / 6 * (k1r + 2 * (k2r + k3r) + k4r)

    try:
        return state.advanced(state.omega_hat.with_coeffs(w),
                              state.rho_hat.with_coeffs(r), dt, acc)
    except MalformedFieldError as e:
        raise BlowUpError(state.t + dt, str(e)) from e


def max_speed(state):
    u1, u2 = velocity(state)
    s1 = inverse_transform(u1).samples
    s2 = inverse_transform(u2).samples
    return np.max(np.hypot(s1, s2))


def choose_dt(state, policy):

    dt = policy.cfl * state.grid.dx / max(max_speed(state), VELOCITY_FLOOR)
    dt = min(max(dt, policy.dt_min), policy.dt_max)
    return max(min(dt, policy.t_end - state.t), 0.0)


def trajectory(state, forcing, dt, n_steps, every=1):
    """States at steps 0, every, 2*every, ..., n_steps of a fixed-dt run"""

    states = [state]
    for i in range(1, n_steps + 1):
        state = step(state, dt, forcing)
        if i % every == 0:
            states.append(state)
    return states
