"""
Riccati comparison y' = a - y^2 / a, a > 0, which bounds the L^2
enstrophy of a forced flow. Its solution from y0 > a is
y(t) = a coth(t + arccoth(y0 / a)), so the time to come down to 2a does not
depend on a.
"""

import numpy as np
from scipy.integrate import solve_ivp

RTOL = 1e-12
ATOL = 1e-14
THRESHOLD = 2.0


def _check(a, y0):
    if not a > 0:
        raise ValueError(f"a must be positive, got {a}")
    if y0 < 0:
        raise ValueError(f"y0 must be >= 0, got {y0}")


def arccoth(x):
    return np.arctanh(1.0 / x)


def riccati_closed_form(a, y0, t):
    """y(t) for y0 > a"""

    _check(a, y0)
    if not y0 > a:
        raise ValueError("closed form in coth needs y0 > a")
    return a / np.tanh(np.asarray(t) + arccoth(y0 / a))


def settling_closed_form(a, y0):

    _check(a, y0)
    if y0 <= THRESHOLD * a:
        return 0.0
    return arccoth(THRESHOLD) - arccoth(y0 / a)


def _reciprocal_rhs(t, v):
    # v = a / y obeys v' = 1 - v^2
    return 1.0 - v ** 2


def _reached_threshold(t, v):
    return v[0] - 1.0 / THRESHOLD


_reached_threshold.terminal = True
_reached_threshold.direction = 1


def riccati_settling(a, y0):
    """First t with y(t) <= 2a, by adaptive DOP853 integration"""

    _check(a, y0)
    if y0 <= THRESHOLD * a:
        return 0.0

    # In v = a / y the decay from a large y0 is a smooth climb from v0 to
    # 1/2 instead of a stiff initial transient
    sol = solve_ivp(_reciprocal_rhs, (0.0, 2 * arccoth(THRESHOLD)),
                    [a / y0], method="DOP853", rtol=RTOL, atol=ATOL,
                    events=_reached_threshold)
    if not sol.success or len(sol.t_events[0]) == 0:
        raise RuntimeError(f"Riccati integration did not settle: "
                           f"{sol.message}")
    return float(sol.t_events[0][0])


def riccati_trajectory(a, y0, t_eval):
    """Numerical y at ``t_eval``, integrated in the variable y / a"""

    _check(a, y0)
    t_eval = np.asarray(t_eval, dtype=float)
    sol = solve_ivp(lambda t, z: 1.0 - z ** 2, (0.0, t_eval[-1]),
                    [y0 / a], method="DOP853", rtol=RTOL, atol=ATOL,
                    t_eval=t_eval)
    if not sol.success:
        raise RuntimeError(sol.message)
    return a * sol.y[0]
