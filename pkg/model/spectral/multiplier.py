"""
Fourier multipliers on the unit torus and the commutators built from them.

Every symbol is a function of the physical wavenumber kappa = 2*pi*k.
First-derivative factors vanish on the Nyquist mode of their axis, so that
all multipliers below map real fields to real fields.
"""

import numpy as np
from scipy import fft

from model.exceptions import PreconditionError
from model.spectral.field import (
    SpectralField, derivative, hermitian_defect, inverse_transform, product)

DIV_FREE_TOL = 1e-8
EPS = np.finfo(float).tiny


class MultiplierSymbol:

    def __init__(self, name, rule):
        self.name = name
        self.rule = rule

    def values(self, grid):
        return np.broadcast_to(self.rule(grid), (grid.n, grid.n))

    def apply(self, F):
        return F.with_coeffs(F.coeffs * self.values(F.grid))

    __call__ = apply

    def __matmul__(self, other):
        return MultiplierSymbol(
            f"{self.name}{other.name}",
            lambda grid: self.values(grid) * other.values(grid))

    def __neg__(self):
        return MultiplierSymbol(f"-{self.name}",
                                lambda grid: -self.values(grid))

    def preserves_realness(self, grid, tol=1e-12):
        """True when sigma(-k) = conj(sigma(k)) on every grid mode"""
        sigma = np.asarray(self.values(grid), dtype=complex)
        scale = max(np.max(np.abs(sigma)), 1.0)
        return hermitian_defect(sigma) <= tol * scale

    def __repr__(self):
        return f"MultiplierSymbol({self.name})"


IDENTITY = MultiplierSymbol("I", lambda grid: np.ones((grid.n, grid.n)))


def helmholtz_symbol(s):
    """Symbol of (I - Laplacian)^(s/2)"""
    return MultiplierSymbol(f"Lambda^{s:g}",
                            lambda grid: (1.0 + grid.kappa_sq) ** (s / 2))


def derivative_symbol(axis):
    return MultiplierSymbol(f"d{axis}",
                            lambda grid: grid.derivative_symbol(axis))


R_SYMBOL = derivative_symbol(1) @ helmholtz_symbol(-2)
R_SYMBOL.name = "R"

# Fixed by requiring zeta = omega - R rho to satisfy
# zeta_t - lap zeta + u.grad zeta = [R, u.grad] rho - N rho exactly:
# the rho terms collapse to d1 + lap R = R, hence N = -R.
N_SYMBOL = -R_SYMBOL
N_SYMBOL.name = "N"


def apply_helmholtz_power(F, s):
    return helmholtz_symbol(s).apply(F)


def apply_R(F):
    return derivative(apply_helmholtz_power(F, -2), 1)


def apply_N(F):
    return -apply_R(F)


def _inverse_laplacian_symbol(grid):
    ksq = grid.kappa_sq
    return np.where(ksq > 0, 1.0 / np.where(ksq > 0, ksq, 1.0), 0.0)


def biot_savart(omega):
    """Divergence-free, mean-free velocity whose curl is ``omega``"""

    scale = max(np.max(np.abs(omega.coeffs)), 1.0)
    if abs(omega.coeffs[0, 0]) > 1e-12 * scale:
        raise PreconditionError(
            f"vorticity must be mean-free, mean={omega.coeffs[0, 0]:.3e}")

    grid = omega.grid
    psi = omega.coeffs * _inverse_laplacian_symbol(grid)
    u1 = grid.derivative_symbol(2) * psi
    u2 = -grid.derivative_symbol(1) * psi
    return omega.with_coeffs(u1), omega.with_coeffs(u2)


def divergence(u1, u2):
    return derivative(u1, 1) + derivative(u2, 2)


def curl(u1, u2):
    return derivative(u2, 1) - derivative(u1, 2)


def l2(F):
    """L2 norm on the unit torus, through Parseval"""
    return np.sqrt(np.sum(np.abs(F.coeffs) ** 2))


def h1_vector(u1, u2):
    weight = 1.0 + u1.grid.kappa_sq
    return np.sqrt(np.sum(weight * (np.abs(u1.coeffs) ** 2
                                    + np.abs(u2.coeffs) ** 2)))


def check_divergence_free(u1, u2, tol=DIV_FREE_TOL):

    div = l2(divergence(u1, u2))
    bound = tol * h1_vector(u1, u2)
    if div > bound:
        raise PreconditionError(
            f"velocity is not divergence-free: |div u|={div:.3e} "
            f"> {bound:.3e}")


def advect(u1, u2, f):
    """Dealiased u . grad f"""
    return product(u1, derivative(f, 1)) + product(u2, derivative(f, 2))


def _commutator_R_advection_hat(u1, u2, rho):
    return apply_R(advect(u1, u2, rho)) - advect(u1, u2, apply_R(rho))


def commutator_R_advection(u1, u2, rho, check=True):
    """[R, u.grad] rho = R(u.grad rho) - u.grad(R rho), on the grid"""

    if check:
        check_divergence_free(u1, u2)
    return inverse_transform(_commutator_R_advection_hat(u1, u2, rho))


def _relative(residual, rho):
    return l2(residual) / max(l2(rho), EPS)


def commutator_identity_residual(u1, u2, rho, check=True):
    """
    Relative L2 residual of
    [R, u.grad] rho = d_j R(u_j rho) - u_j d_j R rho,
    which holds when u is divergence-free
    """

    if check:
        check_divergence_free(u1, u2)

    lhs = _commutator_R_advection_hat(u1, u2, rho)
    rhs = derivative(apply_R(product(u1, rho)), 1) \
        + derivative(apply_R(product(u2, rho)), 2) \
        - advect(u1, u2, apply_R(rho))
    return _relative(lhs - rhs, rho)


def commutator_T_identity_residual(T, u1, u2, rho, check=True):
    """
    Relative L2 residual of
    T([R, u.grad] rho) = [T R d_j, u_j] rho - [T d_j, u_j] R rho
    for a multiplier T
    """

    if check:
        check_divergence_free(u1, u2)

    lhs = T.apply(_commutator_R_advection_hat(u1, u2, rho))

    R_rho = apply_R(rho)
    rhs = SpectralField.zeros(rho.grid)
    for axis, u in ((1, u1), (2, u2)):
        d = derivative_symbol(axis)
        TRd = T @ R_SYMBOL @ d
        Td = T @ d
        rhs = rhs \
            + TRd.apply(product(u, rho)) - product(u, TRd.apply(rho)) \
            - Td.apply(product(u, R_rho)) + product(u, Td.apply(R_rho))
    return _relative(lhs - rhs, rho)


def realness_defect(symbol, F):
    """Largest imaginary part after applying ``symbol`` to a real field"""
    out = symbol.apply(F)
    samples = fft.ifft2(out.coeffs, norm="forward")
    return np.max(np.abs(samples.imag))

