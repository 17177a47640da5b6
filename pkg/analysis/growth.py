"""
Least-squares growth fits on the log of a positive time series, to tell a
single-exponential envelope C exp(Ct) from a Gaussian one C exp(Ct^2).
"""

from dataclasses import dataclass

import numpy as np

MIN_SAMPLES = 8
TRANSIENT_FRACTION = 0.1

# Single-exponential envelope: good linear fit, and little left for t^2
MIN_R_SQUARED = 0.95
MAX_VARIANCE_REDUCTION = 0.1


@dataclass(frozen=True)
class GrowthFit:

    t_a: float
    t_b: float
    linear_slope: float
    quadratic_coeff: float
    r_squared: float
    quadratic_slope: float
    linear_residual_var: float
    quadratic_residual_var: float
    n_samples: int

    @property
    def variance_reduction(self):
        """Relative drop of residual variance when t^2 is added"""
        if self.linear_residual_var == 0:
            return 0.0
        return 1.0 - self.quadratic_residual_var / self.linear_residual_var

    @property
    def single_exponential(self):
        return (self.r_squared >= MIN_R_SQUARED
                and self.variance_reduction < MAX_VARIANCE_REDUCTION)

    def line(self):
        return (f"fit b={self.linear_slope:.6f} q={self.quadratic_coeff:.6f} "
                f"r2={self.r_squared:.6f}")


def default_window(t):
    """Whole series minus the first 10% (transient)"""
    t = np.asarray(t, dtype=float)
    return t[0] + TRANSIENT_FRACTION * (t[-1] - t[0]), t[-1]


def _lstsq(design, y):
    coef = np.linalg.lstsq(design, y, rcond=None)[0]
    residual = y - design @ coef
    return coef, residual


def growth_fit(t, values, window=None):

    t = np.asarray(t, dtype=float)
    values = np.asarray(values, dtype=float)

    t_a, t_b = default_window(t) if window is None else window
    if not t_a < t_b:
        raise ValueError(f"empty window [{t_a}, {t_b}]")

    inside = (t >= t_a) & (t <= t_b)
    if np.sum(inside) < MIN_SAMPLES:
        raise ValueError(f"need at least {MIN_SAMPLES} samples in "
                         f"[{t_a}, {t_b}], got {np.sum(inside)}")

    t, values = t[inside], values[inside]
    if np.any(values <= 0) or not np.all(np.isfinite(values)):
        bad = np.flatnonzero(~(values > 0))
        raise ValueError(f"values must be positive, offending t={t[bad[0]]}")

    y = np.log(values)
    ones = np.ones_like(t)

    lin, lin_res = _lstsq(np.column_stack((ones, t)), y)
    quad, quad_res = _lstsq(np.column_stack((ones, t, t ** 2)), y)

    ss_tot = np.sum((y - np.mean(y)) ** 2)
    ss_res = np.sum(lin_res ** 2)
    r_squared = 1.0 - ss_res / ss_tot if np.ptp(y) > 0 else 1.0

    return GrowthFit(
        t_a=t_a, t_b=t_b,
        linear_slope=lin[1],
        quadratic_coeff=quad[2],
        r_squared=r_squared,
        quadratic_slope=quad[1],
        linear_residual_var=np.var(lin_res),
        quadratic_residual_var=np.var(quad_res),
        n_samples=len(t))
