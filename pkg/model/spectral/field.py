"""
Real 1-periodic scalar fields on an n x n grid, in sample and mode space.

Samples are stored with axis 0 along x1 and axis 1 along x2, i.e.
``samples[i, j]`` is the value at (i/n, j/n). Coefficients use the FFT
ordering of ``scipy.fft`` and are normalised as mode averages, so that
``coeffs[0, 0]`` is the mean of the field.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy import fft

from model.exceptions import MalformedFieldError

SYMMETRY_TOL = 1e-10


@dataclass(frozen=True)
class Grid:

    n: int
    period: float = 1.0

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 8 or self.n % 2:
            raise ValueError(f"n must be an even integer >= 8, got {self.n}")
        if self.period != 1.0:
            raise ValueError("the torus side length is fixed to 1")

    @cached_property
    def modes(self):
        """Integer modes per axis, FFT order, in {-n/2, ..., n/2 - 1}"""
        return np.rint(np.fft.fftfreq(self.n, d=1.0 / self.n)).astype(int)

    @cached_property
    def k1(self):
        return np.broadcast_to(self.modes[:, None], (self.n, self.n))

    @cached_property
    def k2(self):
        return np.broadcast_to(self.modes[None, :], (self.n, self.n))

    @cached_property
    def kappa1(self):
        return 2 * np.pi * self.k1 / self.period

    @cached_property
    def kappa2(self):
        return 2 * np.pi * self.k2 / self.period

    @cached_property
    def kappa_sq(self):
        return self.kappa1 ** 2 + self.kappa2 ** 2

    @cached_property
    def dealias_mask(self):
        cut = self.n / 3
        return (np.abs(self.k1) <= cut) & (np.abs(self.k2) <= cut)

    @property
    def dx(self):
        return self.period / self.n

    def kappa(self, axis):
        if axis == 1:
            return self.kappa1
        elif axis == 2:
            return self.kappa2
        raise ValueError(f"axis must be 1 or 2, got {axis}")

    def derivative_symbol(self, axis):
        """i*kappa along ``axis``, zero on that axis' Nyquist mode"""

        k = self.k1 if axis == 1 else self.k2
        symbol = 1j * self.kappa(axis)
        return np.where(k == -self.n // 2, 0.0, symbol)

    def mesh(self):
        x = np.arange(self.n) * self.dx
        return np.meshgrid(x, x, indexing="ij")

    def band_mask(self, kmax):
        return self.k1 ** 2 + self.k2 ** 2 <= kmax ** 2


def _readonly(arr):
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class PhysicalField:

    grid: Grid
    samples: np.ndarray

    def __post_init__(self):
        samples = np.array(self.samples, dtype=float)
        if samples.shape != (self.grid.n, self.grid.n):
            raise MalformedFieldError(
                f"expected {self.grid.n}x{self.grid.n} samples, "
                f"got {samples.shape}")
        if not np.all(np.isfinite(samples)):
            raise MalformedFieldError("non-finite sample")
        object.__setattr__(self, "samples", _readonly(samples))

    def __add__(self, other):
        return PhysicalField(self.grid, self.samples + other.samples)

    def __sub__(self, other):
        return PhysicalField(self.grid, self.samples - other.samples)

    def __mul__(self, other):
        if isinstance(other, PhysicalField):
            return PhysicalField(self.grid, self.samples * other.samples)
        return PhysicalField(self.grid, self.samples * other)

    __rmul__ = __mul__


@dataclass(frozen=True, eq=False)
class SpectralField:

    grid: Grid
    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=complex)
        if coeffs.shape != (self.grid.n, self.grid.n):
            raise MalformedFieldError(
                f"expected {self.grid.n}x{self.grid.n} coefficients, "
                f"got {coeffs.shape}")
        if not np.all(np.isfinite(coeffs)):
            raise MalformedFieldError("non-finite coefficient")
        object.__setattr__(self, "coeffs", _readonly(coeffs))

    @classmethod
    def zeros(cls, grid):
        return cls(grid, np.zeros((grid.n, grid.n), dtype=complex))

    @property
    def mean(self):
        return self.coeffs[0, 0].real

    def to_physical(self):
        return inverse_transform(self)

    def with_coeffs(self, coeffs):
        return SpectralField(self.grid, coeffs)

    def __add__(self, other):
        return self.with_coeffs(self.coeffs + other.coeffs)

    def __sub__(self, other):
        return self.with_coeffs(self.coeffs - other.coeffs)

    def __neg__(self):
        return self.with_coeffs(-self.coeffs)

    def __mul__(self, scalar):
        return self.with_coeffs(self.coeffs * scalar)

    __rmul__ = __mul__


def reflected(coeffs):
    """Array whose entry at k is the entry of ``coeffs`` at -k"""
    return np.roll(np.flip(coeffs, axis=(0, 1)), 1, axis=(0, 1))


def hermitian_defect(coeffs):
    return np.max(np.abs(coeffs - np.conj(reflected(coeffs))))


def forward_transform(f):
    coeffs = fft.fft2(f.samples, norm="forward")
    return SpectralField(f.grid, coeffs)


def inverse_transform(F):

    scale = max(np.max(np.abs(F.coeffs)), np.finfo(float).tiny)
    defect = hermitian_defect(F.coeffs)
    if defect > SYMMETRY_TOL * scale:
        raise MalformedFieldError(
            f"coefficients violate Hermitian symmetry "
            f"(defect {defect:.3e}, scale {scale:.3e})")

    samples = fft.ifft2(F.coeffs, norm="forward").real
    return PhysicalField(F.grid, samples)


def derivative(F, axis):
    return F.with_coeffs(F.coeffs * F.grid.derivative_symbol(axis))


def dealias(F):
    return F.with_coeffs(np.where(F.grid.dealias_mask, F.coeffs, 0.0))


def project_mean_zero(F):
    coeffs = F.coeffs.copy()
    coeffs[0, 0] = 0.0
    return F.with_coeffs(coeffs)


def gradient(F):
    return derivative(F, 1), derivative(F, 2)


def product(a, b):
    """Pointwise product of two spectral fields, formed on the grid
    and dealiased once"""
    pa = inverse_transform(a)
    pb = inverse_transform(b)
    return dealias(forward_transform(pa * pb))


def resample(F, grid):
    """Same trigonometric polynomial on another grid; modes beyond the
    target band and the source Nyquist modes are dropped"""

    src = F.grid
    keep = (np.abs(src.modes) < min(src.n, grid.n) // 2)
    idx = src.modes[keep] % grid.n
    coeffs = np.zeros((grid.n, grid.n), dtype=complex)
    coeffs[np.ix_(idx, idx)] = F.coeffs[np.ix_(keep, keep)]
    return SpectralField(grid, coeffs)


def sample(grid, func):
    """Physical field with samples ``func(x1, x2)`` on the grid"""
    x1, x2 = grid.mesh()
    return PhysicalField(grid, func(x1, x2))


def random_bandlimited(grid, kmax, rng, amplitude=1.0, mean_zero=True):
    """
    Random real field whose modes satisfy |k| <= kmax, with
    normalised standard deviation ``amplitude``
    """

    noise = rng.standard_normal((grid.n, grid.n)) \
        + 1j * rng.standard_normal((grid.n, grid.n))
    # Hermitian part, exactly symmetric under k -> -k
    coeffs = (noise + np.conj(reflected(noise))) / 2
    F = SpectralField(grid, np.where(grid.band_mask(kmax), coeffs, 0.0))
    if mean_zero:
        F = project_mean_zero(F)

    rms = np.sqrt(np.sum(np.abs(F.coeffs) ** 2))
    if rms == 0:
        return F
    return F * (amplitude / rms)
