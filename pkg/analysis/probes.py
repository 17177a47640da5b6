import numpy as np

from analysis.norms import grad_magnitude, lp_norm
from model.spectral.field import (
    forward_transform, random_bandlimited, resample)


def _norms(v):

    if not np.any(v.samples):
        raise ValueError("probe needs a nonzero field")
    grad = lp_norm(grad_magnitude(forward_transform(v)), 2)
    return lp_norm(v, 1), lp_norm(v, 2), grad


def inequality_probe_nash(v):
    """|v|_2 / (|v|_1^(1/2) |grad v|_2^(1/2) + |v|_1)"""

    l1, l2, grad = _norms(v)
    return l2 / (np.sqrt(l1 * grad) + l1)


def inequality_probe_gn(v, p):
    """|v|_p / (p^(1/2) |v|_2^(2/p) |grad v|_2^(1-2/p) + |v|_2)"""

    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    _, l2, grad = _norms(v)
    return lp_norm(v, p) / (np.sqrt(p) * l2 ** (2 / p)
                            * grad ** (1 - 2 / p) + l2)


def probe_maxima(grid, n_fields, kmax, seed, p_list=(4, 8, 16),
                 draw_grid=None):
    """
    Largest probe ratios over seeded random band-limited fields. Fields
    are drawn on ``draw_grid`` (default ``grid``) and evaluated on
    ``grid``, so that two grids can be compared on the same fields.
    """

    rng = np.random.default_rng(seed)
    draw_grid = grid if draw_grid is None else draw_grid
    nash = 0.0
    gn = {p: 0.0 for p in p_list}
    for _ in range(n_fields):
        F = random_bandlimited(draw_grid, kmax, rng, mean_zero=False)
        v = resample(F, grid).to_physical()
        nash = max(nash, inequality_probe_nash(v))
        for p in p_list:
            gn[p] = max(gn[p], inequality_probe_gn(v, p))
    return nash, gn
