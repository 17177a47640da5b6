"""
Budget identities as residuals.

The series functions take consecutive SimStates and differentiate in time
with second-order central differences (``np.gradient``), so they measure
time-discretisation error plus any inconsistency of the spatial operators.
The ``*_rate_residual`` functions use the model tendency instead of a time
difference and only see the spatial (semi-discrete) part.

Each residual is normalised by the sum of the magnitudes of the terms it
balances.
"""

import numpy as np

from analysis.norms import dissipation, grad_u_linf, kinetic_energy, zeta
from model.solver.integrator import explicit_rhs
from model.solver.state import velocity
from model.spectral.field import gradient, inverse_transform
from model.spectral.multiplier import (
    N_SYMBOL, advect, apply_R, biot_savart, l2)

EPS = 1e-300
MIN_SERIES = 3


def _check_series(states):
    if len(states) < MIN_SERIES:
        raise ValueError(f"need at least {MIN_SERIES} consecutive states, "
                         f"got {len(states)}")
    return np.array([s.t for s in states])


def _time_derivative(values, times):
    return np.gradient(np.asarray(values), times, axis=0)[1:-1]


def energy_budget_residual(states, forcing):
    """
    d/dt 1/2 |u|^2 - (-|grad u|^2 + int f . u) along the series, f being
    rho e2 for the Boussinesq system
    """

    times = _check_series(states)
    energy = [kinetic_energy(s) for s in states]
    rate = _time_derivative(energy, times)

    inner = states[1:-1]
    diss = np.array([dissipation(s) for s in inner])
    work = np.array([forcing.work(s, *velocity(s)) for s in inner])
    return (rate + diss - work) / (diss + np.abs(work) + EPS)


def _omega_power_terms(state, forcing, p):
    """(1/2p) phi_2p, (2p-1) int omega^(2p-2)|grad omega|^2 and
    int source omega^(2p-1)"""

    w = inverse_transform(state.omega_hat).samples
    d1, d2 = gradient(state.omega_hat)
    grad_sq = inverse_transform(d1).samples ** 2 \
        + inverse_transform(d2).samples ** 2
    source = inverse_transform(forcing.vorticity_source(state)).samples

    functional = np.mean(w ** (2 * p)) / (2 * p)
    diss = (2 * p - 1) * np.mean(w ** (2 * p - 2) * grad_sq)
    pairing = np.mean(source * w ** (2 * p - 1))
    return functional, diss, pairing


def enstrophy_budget_residual(states, p, forcing):
    """
    (1/2p) d/dt phi_2p + (2p-1) int omega^(2p-2)|grad omega|^2
    - int source omega^(2p-1) along the series
    """

    if int(p) != p or p < 1:
        raise ValueError(f"p must be a positive integer, got {p}")
    p = int(p)

    times = _check_series(states)
    terms = np.array([_omega_power_terms(s, forcing, p) for s in states])
    rate = _time_derivative(terms[:, 0], times)
    diss = terms[1:-1, 1]
    pairing = terms[1:-1, 2]
    return (rate + diss - pairing) / (diss + np.abs(pairing) + EPS)


def zeta_rhs(state):
    """lap zeta - u.grad zeta + [R, u.grad] rho - N rho"""

    z = zeta(state)
    u1, u2 = velocity(state)
    lap = z.with_coeffs(-state.grid.kappa_sq * z.coeffs)
    commutator = apply_R(advect(u1, u2, state.rho_hat)) \
        - advect(u1, u2, apply_R(state.rho_hat))
    return lap - advect(u1, u2, z) + commutator - N_SYMBOL.apply(state.rho_hat)


def zeta_equation_residual(states):
    """
    Relative L2 residual of zeta_t - lap zeta + u.grad zeta
    = [R, u.grad] rho - N rho along a Boussinesq series
    """

    times = _check_series(states)
    coeffs = np.array([zeta(s).coeffs for s in states])
    rate = _time_derivative(coeffs, times)

    out = []
    for dz, state in zip(rate, states[1:-1]):
        rhs = zeta_rhs(state)
        dz = rhs.with_coeffs(dz)
        out.append(l2(dz - rhs) / max(l2(dz), EPS))
    return np.array(out)


def gronwall_ratio(states):
    """
    d/dt log |grad rho|^2 divided by |grad u|_Linf; transport bounds it
    by 2 for a resolved run
    """

    times = _check_series(states)
    grad_sq = []
    for s in states:
        d1, d2 = gradient(s.rho_hat)
        grad_sq.append(l2(d1) ** 2 + l2(d2) ** 2)
    rate = _time_derivative(np.log(np.maximum(grad_sq, EPS)), times)
    strain = np.array([grad_u_linf(s) for s in states[1:-1]])
    return np.where(strain > 0, rate / np.where(strain > 0, strain, 1.0), 0.0)


def energy_rate_residual(state, forcing):
    """Semi-discrete energy balance, from the model tendency"""

    domega, _ = explicit_rhs(state, forcing)
    omega_t = domega.with_coeffs(
        domega.coeffs - state.grid.kappa_sq * state.omega_hat.coeffs)
    u1, u2 = velocity(state)
    v1, v2 = biot_savart(omega_t)
    a1, a2 = forcing.mean_acceleration(state)

    rate = np.sum(np.real(np.conj(u1.coeffs) * v1.coeffs
                          + np.conj(u2.coeffs) * v2.coeffs))
    rate += state.u_mean[0] * a1 + state.u_mean[1] * a2

    diss = dissipation(state)
    work = forcing.work(state, u1, u2)
    return (rate + diss - work) / (diss + abs(work) + EPS)


def enstrophy_rate_residual(state, forcing):
    """Semi-discrete balance of 1/2 |omega|^2, from the model tendency"""

    domega, _ = explicit_rhs(state, forcing)
    w = state.omega_hat.coeffs
    ksq = state.grid.kappa_sq
    omega_t = domega.coeffs - ksq * w

    rate = np.sum(np.real(np.conj(w) * omega_t))
    diss = np.sum(ksq * np.abs(w) ** 2)
    source = forcing.vorticity_source(state).coeffs
    pairing = np.sum(np.real(np.conj(w) * source))
    return (rate + diss - pairing) / (diss + abs(pairing) + EPS)
