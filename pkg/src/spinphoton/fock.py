"""Truncated photon-number vectors and Poisson concentration utilities.

A coherent field state carries Poisson-distributed photon-number weights,
so every quantity in this package reduces to sums of Poisson terms over a
finite retention window.  All weights are evaluated in the log domain
(via the gamma function); raw factorials would overflow long before the
mean photon numbers of interest (~10^4).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.stats import poisson

DEFAULT_TRUNC_SIGMAS = 12.0
DEFAULT_TRUNC_TOL = 1e-9


@dataclass(frozen=True)
class CoherentSpec:
    """Coherent field state with parameter ``alpha = mean_n * exp(-2j*theta)``.

    Parameters
    ----------
    mean_n : float
        Mean photon number (also the magnitude of the coherent parameter).
    theta : float
        Phase angle in radians; each amplitude c_n picks up exp(-1j*n*theta).
    trunc_sigmas : float
        Half-width of the retained photon-number window in units of
        sqrt(mean_n).
    trunc_tol : float
        Maximum Poisson probability mass the window may discard; checked
        at construction.
    """

    mean_n: float
    theta: float = 0.0
    trunc_sigmas: float = DEFAULT_TRUNC_SIGMAS
    trunc_tol: float = DEFAULT_TRUNC_TOL

    def __post_init__(self) -> None:
        if self.mean_n < 0:
            raise ValueError(f"mean_n must be >= 0, got {self.mean_n}")
        if self.trunc_sigmas <= 0:
            raise ValueError(f"trunc_sigmas must be > 0, got {self.trunc_sigmas}")
        if self.trunc_tol <= 0:
            raise ValueError(f"trunc_tol must be > 0, got {self.trunc_tol}")
        lo, hi = self.window()
        discarded = _interval_complement_mass(self.mean_n, lo, hi)
        if discarded > self.trunc_tol:
            raise ValueError(
                f"window [{lo}, {hi}] discards Poisson mass {discarded:.3e} "
                f"> trunc_tol {self.trunc_tol:.3e}"
            )

    def window(self) -> tuple[int, int]:
        """Retained photon-number window [lo, hi], clamped at 0."""
        if self.mean_n == 0:
            return (0, 0)
        half = self.trunc_sigmas * math.sqrt(self.mean_n)
        return (max(0, math.floor(self.mean_n - half)), math.ceil(self.mean_n + half))


@dataclass(frozen=True)
class ConcentrationSet:
    """Window E of photon numbers carrying almost all Poisson mass."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo < 0:
            raise ValueError(f"lo must be >= 0, got {self.lo}")
        if self.lo > self.hi:
            raise ValueError(f"need lo <= hi, got [{self.lo}, {self.hi}]")

    def __contains__(self, n: int) -> bool:
        return self.lo <= n <= self.hi


@dataclass
class FockVector:
    """Complex amplitudes over consecutive number states |n_min>, |n_min+1>, ..."""

    n_min: int
    amps: np.ndarray

    def __post_init__(self) -> None:
        if self.n_min < 0:
            raise ValueError(f"n_min must be >= 0, got {self.n_min}")
        self.amps = np.asarray(self.amps, dtype=complex)

    def n_values(self) -> np.ndarray:
        return np.arange(self.n_min, self.n_min + len(self.amps))

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def mean_photon(self) -> float:
        """Sum of n * |amp_n|^2 (no renormalization)."""
        return float(np.sum(self.n_values() * np.abs(self.amps) ** 2))

    def overlap(self, other: FockVector) -> complex:
        """Inner product <self|other>, aligning the two index windows."""
        lo = max(self.n_min, other.n_min)
        hi = min(self.n_min + len(self.amps), other.n_min + len(other.amps)) - 1
        if lo > hi:
            return 0j
        a = self.amps[lo - self.n_min : hi - self.n_min + 1]
        b = other.amps[lo - other.n_min : hi - other.n_min + 1]
        return complex(np.vdot(a, b))


def coherent_amplitudes(spec: CoherentSpec) -> FockVector:
    """Amplitudes of the coherent state over the spec's retention window.

    amp_n = exp(-1j*n*theta) * sqrt(Poisson(n; mean_n)), evaluated through
    the log-pmf so that no factorial is ever formed.
    """
    lo, hi = spec.window()
    n = np.arange(lo, hi + 1)
    if spec.mean_n == 0:
        logp = np.where(n == 0, 0.0, -np.inf)
    else:
        logp = poisson.logpmf(n, spec.mean_n)
    amps = np.exp(0.5 * logp) * np.exp(-1j * n * spec.theta)
    return FockVector(n_min=lo, amps=amps)


def concentration_set(mean_n: float, exponent: float) -> ConcentrationSet:
    """Window [mean_n - mean_n**exponent, mean_n + mean_n**exponent], clamped at 0."""
    if mean_n <= 0:
        raise ValueError(f"mean_n must be > 0, got {mean_n}")
    if not 0 < exponent < 1:
        raise ValueError(f"exponent must lie in (0, 1), got {exponent}")
    half = mean_n**exponent
    return ConcentrationSet(
        lo=max(0, math.floor(mean_n - half)), hi=math.ceil(mean_n + half)
    )


def tail_mass(mean_n: float, cset: ConcentrationSet) -> float:
    """Exact Poisson probability mass outside the set, P(E^c).

    Uses the regularized incomplete-gamma CDF/SF pair, which sums the two
    tails directly instead of computing 1 minus a near-unit window mass.
    """
    if mean_n <= 0:
        raise ValueError(f"mean_n must be > 0, got {mean_n}")
    below = float(poisson.cdf(cset.lo - 1, mean_n))
    above = float(poisson.sf(cset.hi, mean_n))
    return min(max(below + above, 0.0), 1.0)


def _interval_complement_mass(mean_n: float, lo: int, hi: int) -> float:
    if mean_n == 0:
        return 0.0 if lo <= 0 <= hi else 1.0
    return float(poisson.cdf(lo - 1, mean_n) + poisson.sf(hi, mean_n))
