"""
Bounding recursions of the L^p doubling scheme, p_k = 2^k, in log domain.

Terms grow like X^(2^k), so both sequences are carried as
s_k = log(term_k) / 2^k, which stays of order one; the logs themselves are
recovered by an exact multiplication by 2^k.
"""

from dataclasses import dataclass

import numpy as np

DOMINANCE_TOL = 1e-12
LOG2 = np.log(2.0)


@dataclass(frozen=True)
class RecursionParams:

    C0: float = 1.0
    C1: float = 1.0
    M: float = 2.0
    lam: float = 0.0

    def __post_init__(self):
        for name in ("C0", "C1", "M", "lam"):
            if not np.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.C0 < 1:
            raise ValueError(f"C0 must be >= 1, got {self.C0}")
        if self.C1 < self.C0:
            raise ValueError(f"C1 must be >= C0, got {self.C1} < {self.C0}")
        if self.M < 1:
            raise ValueError(f"M must be >= 1, got {self.M}")
        if self.lam < 0:
            raise ValueError(f"lambda must be >= 0, got {self.lam}")

    @property
    def mu(self):
        return 2 + 2 * self.lam

    def log_bound(self):
        """log(2^mu C1 M)"""
        return self.mu * LOG2 + np.log(self.C1) + np.log(self.M)

    @classmethod
    def draw(cls, rng):
        """Random parameters in C0 in [1, 10], C1 in [C0, 100],
        M in [1, 1e6], lambda in [0, 3]"""
        C0 = rng.uniform(1, 10)
        return cls(C0=C0, C1=rng.uniform(C0, 100),
                   M=rng.uniform(1, 1e6), lam=rng.uniform(0, 3))


@dataclass(frozen=True)
class LogSequence:
    """Natural logs of a sequence, ``values[0]`` being the term k = 1"""

    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if not np.all(np.isfinite(values)):
            raise ValueError("log sequence has non-finite entries")
        object.__setattr__(self, "values", values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k):
        """log of term k, k from 1"""
        if not 1 <= k <= len(self.values):
            raise IndexError(f"k={k} out of range 1..{len(self.values)}")
        return self.values[k - 1]

    @property
    def k(self):
        return np.arange(1, len(self.values) + 1)

    @property
    def per_doubling(self):
        """log(term_k) / 2^k"""
        return self.values / 2.0 ** self.k

    @classmethod
    def from_scaled(cls, scaled):
        scaled = np.asarray(scaled, dtype=float)
        return cls(scaled * 2.0 ** np.arange(1, len(scaled) + 1))


def _check_kmax(kmax):
    if int(kmax) != kmax or kmax < 1:
        raise ValueError(f"kmax must be an integer >= 1, got {kmax}")
    return int(kmax)


def m_sequence(params, kmax):
    """
    M_1 = C0 M^2,
    M_{k+1} = C0 max(p_k M_k^2, p_k^(2(1+lam)p_k/(p_k+1))
                     (M_k M)^(2p_k/(p_k+1)))
    """

    kmax = _check_kmax(kmax)
    log_c0, log_m = np.log(params.C0), np.log(params.M)

    scaled = np.empty(kmax)
    scaled[0] = (log_c0 + 2 * log_m) / 2
    for k in range(1, kmax):
        p = 2.0 ** k
        s = scaled[k - 1]
        squared = k * LOG2 / (2 * p) + s
        mixed = (1 + params.lam) * k * LOG2 / (p + 1) \
            + p / (p + 1) * (s + log_m / p)
        scaled[k] = log_c0 / (2 * p) + max(squared, mixed)
    return LogSequence.from_scaled(scaled)


def r_sequence(params, kmax):
    """R_1 = C1 2^mu M^2, R_{k+1} = C1 p_k^mu R_k^2"""

    kmax = _check_kmax(kmax)
    log_c1, log_m = np.log(params.C1), np.log(params.M)

    scaled = np.empty(kmax)
    scaled[0] = (log_c1 + params.mu * LOG2 + 2 * log_m) / 2
    for k in range(1, kmax):
        scaled[k] = scaled[k - 1] \
            + (log_c1 + params.mu * k * LOG2) / 2.0 ** (k + 1)
    return LogSequence.from_scaled(scaled)


def r_closed_form(params, k, scaled=False):
    """
    log R_k = (2^k - 1) log C1 + mu (3 2^(k-1) - k - 1) log 2 + 2^k log M

    With ``scaled`` the value is divided by 2^k.
    """

    p = 2.0 ** k
    value = (1 - 1 / p) * np.log(params.C1) \
        + params.mu * (1.5 - (k + 1) / p) * LOG2 + np.log(params.M)
    return value if scaled else value * p


def r_printed_form(params, k):
    """log of (2^mu C1)^(2^k - 1) M^(2^k); equals R_k only for k <= 2 or
    mu = 0"""
    p = 2.0 ** k
    return (p - 1) * (params.mu * LOG2 + np.log(params.C1)) \
        + p * np.log(params.M)


def closed_form_gap(params, kmax):
    """Largest |log R_k / 2^k - closed form / 2^k| over k <= kmax"""

    r = r_sequence(params, kmax).per_doubling
    closed = np.array([r_closed_form(params, k, scaled=True)
                       for k in range(1, kmax + 1)])
    return np.max(np.abs(r - closed))


def dominance_check(params, kmax):
    """(True, None) if M_k <= R_k for all k <= kmax, else (False, k) with
    the first failing k"""

    m = m_sequence(params, kmax).per_doubling
    r = r_sequence(params, kmax).per_doubling
    failed = np.flatnonzero(m > r + DOMINANCE_TOL)
    if len(failed):
        return False, int(failed[0]) + 1
    return True, None


@dataclass(frozen=True)
class BoundExtract:

    value: float
    k: int
    bound: float

    @property
    def holds(self):
        return self.value <= self.bound + DOMINANCE_TOL


def uniform_bound_extract(params, kmax):
    """max over k of log(M_k) / 2^k against log(2^mu C1 M)"""

    scaled = m_sequence(params, kmax).per_doubling
    i = int(np.argmax(scaled))
    return BoundExtract(value=scaled[i], k=i + 1, bound=params.log_bound())


def time_shifts(kmax, C):
    """Cumulative t_k = sum_{j<=k} C / 2^j, k = 1..kmax"""

    kmax = _check_kmax(kmax)
    if not C > 0:
        raise ValueError(f"C must be positive, got {C}")
    return np.cumsum(C / 2.0 ** np.arange(1, kmax + 1))


def time_shift_sum(kmax, C):

    total = time_shifts(kmax, C)[-1]
    if total > C:
        raise ArithmeticError(f"partial sum {total} exceeds its limit {C}")
    return total
