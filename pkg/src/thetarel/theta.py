"""Numerical evaluation of theta functions with rational characteristics.

The series evaluated here is

    theta_mu(z, tau) = sum over xi in Z^g of
        e[ (1/2) (xi+mu') tau . (xi+mu') + (xi+mu') . (z+mu'') ],

with e[x] = exp(2*pi*i*x), mu = (mu'; mu'') a rational characteristic,
z a complex g-vector and tau a symmetric g x g matrix whose imaginary
part is positive definite.

Truncation uses the axis-aligned box max_a |xi_a + mu'_a| <= R.  Every
omitted term satisfies

    |term| <= exp(-pi * lam_min * r^2 + 2*pi * r * |Im z|_2),   r = |v|_2 > R,

where lam_min is a lower estimate of the smallest eigenvalue of Im tau,
so the tail is bounded by a geometric-style envelope summed over integer
shells.  The radius search stops at the smallest R whose envelope meets
the requested absolute error; the reported tail_bound is that envelope
floored at the rounding-noise level of the computed sum, making it a
bound on the total absolute error.

Summation is vectorised and then accumulated with exactly-rounded
compensated summation (math.fsum on real and imaginary parts), in a
fixed lexicographic box order, so results are reproducible bit-for-bit
for identical inputs and settings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .charalg import Characteristic

__all__ = [
    "PeriodMatrix",
    "EvalSettings",
    "ThetaValue",
    "TruncationError",
    "theta",
    "theta_constant",
    "char_shift_phase",
    "DEFAULT_SETTINGS",
]

TWO_PI = 2.0 * math.pi

# Shells of the tail envelope below this are closed with a geometric
# remainder; the envelope decays like exp(-pi*lam_min*r^2) so only a
# couple of dozen shells are ever needed.
_SHELL_CAP = 4096


class TruncationError(ArithmeticError):
    """Requested absolute error unreachable within the radius cap."""

    def __init__(self, target: float, best_bound: float, radius: int):
        super().__init__(
            f"tail bound {best_bound:.3e} at radius {radius} "
            f"does not reach target {target:.3e}"
        )
        self.target = target
        self.best_bound = best_bound
        self.radius = radius


@dataclass(frozen=True, eq=False)
class PeriodMatrix:
    """Symmetric g x g complex matrix with positive-definite imaginary part."""

    entries: np.ndarray

    def __post_init__(self):
        arr = np.atleast_2d(np.asarray(self.entries, dtype=complex))
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"period matrix must be square, got shape {arr.shape}")
        if not np.array_equal(arr, arr.T):
            raise ValueError("period matrix must be symmetric")
        try:
            np.linalg.cholesky(arr.imag)
        except np.linalg.LinAlgError:
            raise ValueError("imaginary part must be positive definite") from None
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "entries", arr)
        object.__setattr__(self, "_lam_min", _min_eig_lower(arr.imag))

    @property
    def genus(self) -> int:
        return self.entries.shape[0]

    @property
    def lam_min(self) -> float:
        """Safe lower estimate of the smallest eigenvalue of Im tau."""
        return self._lam_min


def _min_eig_lower(y: np.ndarray) -> float:
    """Smallest-eigenvalue estimate by a dozen inverse power iterations.

    Fixed seed vector (1,...,1)/sqrt(g); the Rayleigh quotient of the
    final iterate never undershoots the true minimum, so a 1% margin is
    subtracted to keep the tail bound conservative.
    """
    g = y.shape[0]
    if g == 1:
        return float(y[0, 0]) * 0.99
    x = np.full(g, 1.0 / math.sqrt(g))
    for _ in range(12):
        x = np.linalg.solve(y, x)
        x /= np.linalg.norm(x)
    rq = float(x @ y @ x)
    return rq * 0.99


@dataclass(frozen=True)
class EvalSettings:
    """Absolute-error target and radius cap for the truncated lattice sum."""

    target_abs_error: float = 1e-13
    max_radius: int = 32

    def __post_init__(self):
        if self.target_abs_error < 1e-14:
            raise ValueError("target_abs_error below 1e-14 is not supported")
        if not 1 <= self.max_radius <= 64:
            raise ValueError("max_radius must be in [1, 64]")


DEFAULT_SETTINGS = EvalSettings()


@dataclass(frozen=True)
class ThetaValue:
    """Evaluated series value with its truncation radius and error bound.

    tail_bound upper-bounds the omitted tail of the series and is floored
    at the arithmetic noise of the computed sum, so it is a usable bound
    on the total absolute error of `value`.
    """

    value: complex
    truncation_radius: int
    tail_bound: float


def _tail_envelope(radius: int, lam_min: float, y_norm: float, g: int) -> float:
    """Upper bound on the sum of |term| over the omitted box exterior.

    Shell k holds lattice points with sup-norm in (radius+k, radius+k+1];
    each contributes at most (2(radius+k)+3)^g points, every one with
    l2-norm above radius+k.  Monotonicity of the per-point bound needs
    r >= y_norm/lam_min, below which the bound is reported as infinite
    (forcing the radius search onward).
    """
    if lam_min <= 0.0:
        return math.inf
    if radius < y_norm / lam_min:
        return math.inf
    total = 0.0
    for k in range(_SHELL_CAP):
        r = float(radius + k)
        t = (2.0 * r + 3.0) ** g * math.exp(-math.pi * lam_min * r * r + TWO_PI * r * y_norm)
        total += t
        # Envelope ratio between consecutive shells, polynomial factor
        # bounded by (5/3)^g <= 3^g for r >= 1.
        ratio = 3.0 ** g * math.exp(-math.pi * lam_min * (2.0 * r + 1.0) + TWO_PI * y_norm)
        if ratio < 0.5 and t * ratio / (1.0 - ratio) < max(total, 1e-300) * 1e-9:
            total += t * ratio / (1.0 - ratio)
            return total
        if t == 0.0:
            return total
    return math.inf


def _box_sum(
    mu_top: Sequence[Fraction],
    mu_bottom: Sequence[Fraction],
    z: np.ndarray,
    tau: np.ndarray,
    radius: int,
) -> tuple[complex, float]:
    """Lattice sum over the box, lexicographic order, exactly-rounded accumulation.

    Returns (value, noise_bound) where noise_bound estimates the rounding
    error of the computed terms: the accumulation itself is exactly
    rounded, so per-term error |term| * (|phase| + 2) * O(eps) dominates.
    """
    ranges = [
        np.arange(math.ceil(-radius - m), math.floor(radius - m) + 1)
        for m in mu_top
    ]
    mesh = np.meshgrid(*ranges, indexing="ij")
    xi = np.stack([axis.reshape(-1) for axis in mesh], axis=-1).astype(float)
    v = xi + np.array([float(m) for m in mu_top])
    quad = ((v @ tau) * v).sum(axis=1)
    phase = TWO_PI * (0.5 * quad + v @ (z + np.array([float(m) for m in mu_bottom])))
    terms = np.exp(1j * phase)
    value = complex(math.fsum(terms.real), math.fsum(terms.imag))
    eps = np.finfo(float).eps
    noise = 5.0 * eps * math.fsum(np.abs(terms) * (np.abs(phase) + 2.0))
    return value, noise


def theta(
    mu: Characteristic,
    z,
    tau: PeriodMatrix,
    settings: EvalSettings = DEFAULT_SETTINGS,
) -> ThetaValue:
    """Evaluate theta_mu(z, tau) to the requested absolute error.

    z may be a complex scalar (genus 1) or a length-g complex vector.
    Raises TruncationError when no radius up to settings.max_radius
    brings the tail envelope below settings.target_abs_error.
    """
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    g = tau.genus
    if mu.genus != g or z.shape != (g,):
        raise ValueError(
            f"genus mismatch: characteristic {mu.genus}, z {z.shape}, tau {g}"
        )
    y_norm = float(np.linalg.norm(z.imag))
    radius = min(4, settings.max_radius)
    bound = _tail_envelope(radius, tau.lam_min, y_norm, g)
    while bound > settings.target_abs_error:
        if radius >= settings.max_radius:
            raise TruncationError(settings.target_abs_error, bound, radius)
        radius = min(radius + 2, settings.max_radius)
        bound = _tail_envelope(radius, tau.lam_min, y_norm, g)
    value, noise = _box_sum(mu.top, mu.bottom, z, tau.entries, radius)
    return ThetaValue(value, radius, max(bound, noise))


def theta_constant(
    mu: Characteristic,
    tau: PeriodMatrix,
    settings: EvalSettings = DEFAULT_SETTINGS,
) -> ThetaValue:
    """The theta constant theta_mu(0, tau)."""
    return theta(mu, np.zeros(tau.genus, dtype=complex), tau, settings)


def char_shift_phase(mu: Characteristic, k_bottom: Sequence[int]) -> complex:
    """Root of unity e[mu' . k''] picked up when the bottom characteristic
    is shifted by the integer vector k''."""
    ks = [int(k) for k in k_bottom]
    if len(ks) != mu.genus:
        raise ValueError(f"expected {mu.genus} integers, got {len(ks)}")
    dot = sum(m * k for m, k in zip(mu.top, ks)) % 1
    return complex(np.exp(TWO_PI * 1j * float(dot)))
