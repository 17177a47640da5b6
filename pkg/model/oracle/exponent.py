"""
Growth exponents of the whole-space doubling scheme.

beta_{2^k} = prod_{j=1..k} (1 - 2^-j) is the exponent of the L^(2^k)
vorticity bound (t+1)^beta_p, and beta = lim beta_{2^k} = 0.28878...
"""

import numpy as np

MAX_FACTORS = 2000


def beta_partial(k):

    if int(k) != k or k < 1:
        raise ValueError(f"k must be an integer >= 1, got {k}")
    return float(np.prod(1.0 - 0.5 ** np.arange(1, int(k) + 1)))


def beta_limit(tol=1e-10):
    """Extend the product until a factor changes it by less than ``tol``"""

    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")

    beta = 0.5
    for j in range(2, MAX_FACTORS):
        increment = beta * 0.5 ** j
        beta -= increment
        if increment < tol:
            return beta
    raise ArithmeticError(f"no convergence to tol={tol} "
                          f"after {MAX_FACTORS} factors")


def vorticity_lp_exponent(p, beta=None):
    """Exponent 1/p + beta (1 - 2/p) of the L^p vorticity bound, p >= 2"""

    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    beta = beta_limit() if beta is None else beta
    if np.isinf(p):
        return beta
    return 1 / p + beta * (1 - 2 / p)


def density_gradient_exponent(beta=None):
    """Power of (t+1) in exp((t+1)^(beta+1) log(t+1)), the whole-space
    envelope of |grad rho|_L2"""

    return 1 + (beta_limit() if beta is None else beta)
