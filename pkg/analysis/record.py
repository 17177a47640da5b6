"""
One row of diagnostics per recorded time, and the spectral resolution
monitor that stops a run before the density filaments reach the grid scale.
"""

from dataclasses import dataclass, field

import numpy as np

from analysis.budgets import energy_rate_residual, enstrophy_rate_residual
from analysis.norms import (
    grad_lp_norm, lp_norm, sobolev_norm, sobolev_norm_vector, zeta)
from model.solver.state import velocity
from model.spectral.field import inverse_transform

DEFAULT_P_LIST = (2, 4, 8, 16)

# Share of density energy above n/4 beyond which the run is under-resolved
TAIL_TOL = 1e-6

BASE_COLUMNS = ("t", "l2_u", "h1_u", "h2_u", "l2_rho", "h1_rho")


def resolution_monitor(rho_hat):
    """Fraction of sum |rho_hat|^2 in modes with max(|k1|, |k2|) > n/4"""

    grid = rho_hat.grid
    power = np.abs(rho_hat.coeffs) ** 2
    total = np.sum(power)
    if total == 0:
        return 0.0
    tail = np.maximum(np.abs(grid.k1), np.abs(grid.k2)) > grid.n / 4
    return float(np.sum(power[tail]) / total)


def is_under_resolved(tail_fraction):
    return tail_fraction > TAIL_TOL


@dataclass(frozen=True)
class DiagnosticsRecord:

    t: float
    l2_u: float
    h1_u: float
    h2_u: float
    l2_rho: float
    h1_rho: float
    lp_omega: dict
    linf_omega: float
    lp_grad_zeta: dict
    energy_residual: float
    enstrophy_residual: float
    tail_fraction_rho: float
    dt_used: float
    lp_grad_omega: dict = field(default_factory=dict)
    lp_rho: dict = field(default_factory=dict)
    mean_rho: float = 0.0
    u_mean_1: float = 0.0
    u_mean_2: float = 0.0

    @staticmethod
    def columns(p_list):
        """CSV column order"""
        return (
            list(BASE_COLUMNS)
            + [f"lp_omega_{p}" for p in p_list]
            + ["linf_omega"]
            + [f"lp_grad_zeta_{p}" for p in p_list]
            + ["energy_residual", "enstrophy_residual",
               "tail_fraction_rho", "dt_used"]
            + [f"lp_grad_omega_{p}" for p in p_list]
            + [f"lp_rho_{p}" for p in p_list]
            + ["mean_rho", "u_mean_1", "u_mean_2"])

    def as_row(self):

        p_list = list(self.lp_omega)
        row = {c: getattr(self, c) for c in BASE_COLUMNS}
        row.update({f"lp_omega_{p}": v for p, v in self.lp_omega.items()})
        row["linf_omega"] = self.linf_omega
        row.update({f"lp_grad_zeta_{p}": v
                    for p, v in self.lp_grad_zeta.items()})
        row.update(energy_residual=self.energy_residual,
                   enstrophy_residual=self.enstrophy_residual,
                   tail_fraction_rho=self.tail_fraction_rho,
                   dt_used=self.dt_used)
        row.update({f"lp_grad_omega_{p}": self.lp_grad_omega.get(p, np.nan)
                    for p in p_list})
        row.update({f"lp_rho_{p}": self.lp_rho.get(p, np.nan)
                    for p in p_list})
        row.update(mean_rho=self.mean_rho, u_mean_1=self.u_mean_1,
                   u_mean_2=self.u_mean_2)
        return {c: float(row[c]) for c in self.columns(p_list)}


def evaluate(state, forcing, p_list=DEFAULT_P_LIST, dt_used=0.0):

    u1, u2 = velocity(state)
    omega = inverse_transform(state.omega_hat)
    rho = inverse_transform(state.rho_hat)
    z = zeta(state)

    return DiagnosticsRecord(
        t=state.t,
        l2_u=sobolev_norm_vector(u1, u2, 0),
        h1_u=sobolev_norm_vector(u1, u2, 1),
        h2_u=sobolev_norm_vector(u1, u2, 2),
        l2_rho=lp_norm(rho, 2),
        h1_rho=sobolev_norm(state.rho_hat, 1),
        lp_omega={p: lp_norm(omega, p) for p in p_list},
        linf_omega=lp_norm(omega, np.inf),
        lp_grad_zeta={p: grad_lp_norm(z, p) for p in p_list},
        energy_residual=energy_rate_residual(state, forcing),
        enstrophy_residual=enstrophy_rate_residual(state, forcing),
        tail_fraction_rho=resolution_monitor(state.rho_hat),
        dt_used=dt_used,
        lp_grad_omega={p: grad_lp_norm(state.omega_hat, p) for p in p_list},
        lp_rho={p: lp_norm(rho, p) for p in p_list},
        mean_rho=np.real(state.rho_hat.mean),
        u_mean_1=state.u_mean[0],
        u_mean_2=state.u_mean[1])
