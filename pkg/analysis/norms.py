"""
Norms and integral functionals on the unit torus.

Grid averages stand in for integrals (the torus has unit measure). The
L-infinity norm is the grid maximum, exact only up to the resolution of
the field.
"""

import numpy as np

from model.solver.state import velocity
from model.spectral.field import gradient, inverse_transform
from model.spectral.multiplier import apply_R


def lp_norm(f, p):

    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")

    a = np.abs(np.asarray(getattr(f, "samples", f), dtype=float))
    top = np.max(a)
    if np.isinf(p):
        return top
    if top == 0:
        return 0.0
    # Scale by the maximum so that large p does not overflow
    return top * np.mean((a / top) ** p) ** (1.0 / p)


def sobolev_norm(F, s):
    weight = (1.0 + F.grid.kappa_sq) ** s
    return np.sqrt(np.sum(weight * np.abs(F.coeffs) ** 2))


def sobolev_norm_vector(u1, u2, s):
    return np.hypot(sobolev_norm(u1, s), sobolev_norm(u2, s))


def phi_p(omega, p):
    """Grid average of |omega|^p"""

    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    return np.mean(np.abs(omega.samples) ** p)


def zeta(state):
    """Modified vorticity omega - R rho"""
    return state.omega_hat - apply_R(state.rho_hat)


def psi_p(zeta_hat, p):
    """Sum over both axes of the grid average of |d_k zeta|^p"""

    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    return sum(np.mean(np.abs(inverse_transform(d).samples) ** p)
               for d in gradient(zeta_hat))


def grad_magnitude(F):
    """Pointwise Euclidean |grad F| as an array"""
    d1, d2 = gradient(F)
    return np.hypot(inverse_transform(d1).samples,
                    inverse_transform(d2).samples)


def grad_lp_norm(F, p):
    return lp_norm(grad_magnitude(F), p)


def grad_omega_profile(omega_hat, p_list):
    """p -> p^(-3/2) |grad omega|_Lp, bounded uniformly in p at late times"""
    return {p: p ** -1.5 * grad_lp_norm(omega_hat, p) for p in p_list}


def dissipation(state):
    """|grad u|_L2^2, equal to |omega|_L2^2 for a mean-free vorticity"""

    u1, u2 = velocity(state)
    ksq = state.grid.kappa_sq
    return np.sum(ksq * (np.abs(u1.coeffs) ** 2 + np.abs(u2.coeffs) ** 2))


def kinetic_energy(state):
    u1, u2 = velocity(state)
    return 0.5 * np.sum(np.abs(u1.coeffs) ** 2 + np.abs(u2.coeffs) ** 2)


def grad_u_linf(state):
    """Grid maximum of the Frobenius norm of grad u"""

    u1, u2 = velocity(state)
    total = np.zeros((state.grid.n, state.grid.n))
    for u in (u1, u2):
        for d in gradient(u):
            total += inverse_transform(d).samples ** 2
    return np.sqrt(np.max(total))
