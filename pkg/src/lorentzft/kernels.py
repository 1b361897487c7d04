"""Radial kernels: the Euclidean-sphere Hankel weight chi_n and the four
Minkowski weight families (timelike/spacelike momentum x timelike/spacelike
profile branch).

With l the invariant momentum magnitude and s the radial coordinate of the
matching branch, the transform of a profile f is

    F(l) = sum over branches of  int_0^inf ds f_branch(s) w(s),

where w is the weight returned by `minkowski_kernel`:

    timelike l, timelike branch:
        -2 pi s^{(n+1)/2} / l^{(n-1)/2} [ N_{(n-1)/2}(2 pi s l) cos(pi(n-1)/2)
                                        + J_{(n-1)/2}(2 pi s l) sin(pi(n-1)/2) ]
    timelike l, spacelike branch:
        +4   s^{(n+1)/2} / l^{(n-1)/2}   K_{(n-1)/2}(2 pi s l) cos(pi(n-1)/2)
    spacelike l, timelike branch:
        +4   s^{(n+1)/2} / l^{(n-1)/2}   K_{(n-1)/2}(2 pi s l)
    spacelike l, spacelike branch:
        -2 pi s^{(n+1)/2} / l^{(n-1)/2}  N_{(n-1)/2}(2 pi s l)

The trigonometric factors at multiples of pi/2 are resolved by exact case
analysis on n mod 4, so the vanishing kernels (even n, timelike momentum,
spacelike branch) are exactly zero.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .specfun import DomainError, Order, bessel_j, bessel_k, bessel_n, gamma_fn

__all__ = [
    "MomentumChar",
    "Branch",
    "KernelSpec",
    "MomentumMagnitude",
    "chi",
    "chi_small_argument_limit",
    "minkowski_kernel",
    "kernel_envelope",
    "closure_rhs",
    "exact_cos_sin_half_pi",
]

_N_MIN, _N_MAX = 1, 10


class MomentumChar(enum.Enum):
    TIMELIKE = "timelike"
    SPACELIKE = "spacelike"


class Branch(enum.Enum):
    TIMELIKE_PROFILE = "timelike_profile"    # support at s^2 > 0, radius s0
    SPACELIKE_PROFILE = "spacelike_profile"  # support at s^2 < 0, radius s1


@dataclass(frozen=True)
class KernelSpec:
    """Dimension, momentum character and profile branch of one radial weight."""

    n: int
    momentum_char: MomentumChar
    branch: Branch

    def __post_init__(self):
        if not _N_MIN <= self.n <= _N_MAX:
            raise DomainError(f"spatial dimension n={self.n} outside [{_N_MIN}, {_N_MAX}]")


@dataclass(frozen=True)
class MomentumMagnitude:
    """Invariant momentum magnitude with its character.

    value = sqrt(k0^2 - k^2) for timelike momenta, sqrt(k^2 - k0^2) for
    spacelike ones.  Lightlike momenta (value 0) are not supported.
    """

    value: float
    char: MomentumChar

    def __post_init__(self):
        if not self.value > 0:
            raise DomainError("momentum magnitude must be positive (lightlike "
                              "momenta are unsupported)")


def exact_cos_sin_half_pi(m: int):
    """(cos(pi m / 2), sin(pi m / 2)) by case analysis, exact integers."""
    return [(1, 0), (0, 1), (-1, 0), (0, -1)][m % 4]


def chi(n: int, r, k):
    """Hankel weight chi_n(r, k) = 2 pi r^{n/2} k^{1-n/2} J_{n/2-1}(2 pi r k).

    Reduces an n-dimensional Euclidean radial Fourier transform to one
    dimension.  Swapping the arguments gives the inverse weight chi_n(k, r).
    Broadcasts over r and k; requires k > 0, r >= 0.
    """
    if not _N_MIN <= n <= _N_MAX:
        raise DomainError(f"spatial dimension n={n} outside [{_N_MIN}, {_N_MAX}]")
    scalar = (np.isscalar(r) or np.asarray(r).ndim == 0) and \
             (np.isscalar(k) or np.asarray(k).ndim == 0)
    ra, ka = np.broadcast_arrays(np.asarray(r, dtype=float),
                                 np.asarray(k, dtype=float))
    ra, ka = np.atleast_1d(ra), np.atleast_1d(ka)
    if np.any(ka <= 0):
        raise DomainError("chi requires k > 0")
    if np.any(ra < 0):
        raise DomainError("chi requires r >= 0")
    nu = Order(n - 2)
    out = np.empty_like(ra)
    pos = ra > 0
    out[pos] = 2.0 * math.pi * ra[pos] ** (n / 2.0) * ka[pos] ** (1.0 - n / 2.0) \
        * bessel_j(nu, 2.0 * math.pi * ra[pos] * ka[pos])
    # r = 0 limits: 2 for n = 1 (cosine kernel), 0 otherwise
    out[~pos] = 2.0 if n == 1 else 0.0
    return float(out[0]) if scalar else out


def chi_small_argument_limit(n: int, k: float) -> float:
    """lim_{r -> 0} chi_n(k, r) = 2 pi^{n/2} k^{n-1} / Gamma(n/2).

    The prefactor is the unit (n-1)-sphere volume times k^{n-1}.
    """
    if not k > 0:
        raise DomainError("chi_small_argument_limit requires k > 0")
    return 2.0 * math.pi ** (n / 2.0) * k ** (n - 1) / gamma_fn(n / 2.0)


def minkowski_kernel(spec: KernelSpec, s, l: MomentumMagnitude):
    """Radial weight w(s) for the given dimension, momentum and branch.

    Vectorized over s > 0 (s = 0 yields the limit value 0 for every kernel).
    """
    if spec.momentum_char is not l.char:
        raise DomainError("momentum character does not match the kernel spec")
    arr = np.asarray(s, dtype=float)
    scalar = np.isscalar(s) or arr.ndim == 0
    arr = np.atleast_1d(arr)
    if np.any(arr < 0):
        raise DomainError("minkowski_kernel requires s >= 0")
    n = spec.n
    nu = Order(n - 1)
    cosf, sinf = exact_cos_sin_half_pi(n - 1)
    out = np.zeros_like(arr)
    pos = arr > 0
    sp = arr[pos]
    z = 2.0 * math.pi * sp * l.value
    pref = sp ** ((n + 1) / 2.0) / l.value ** ((n - 1) / 2.0)
    if spec.momentum_char is MomentumChar.TIMELIKE:
        if spec.branch is Branch.TIMELIKE_PROFILE:
            cyl = np.zeros_like(sp)
            if cosf:
                cyl += cosf * bessel_n(nu, z)
            if sinf:
                cyl += sinf * bessel_j(nu, z)
            out[pos] = -2.0 * math.pi * pref * cyl
        else:
            if cosf:
                out[pos] = 4.0 * cosf * pref * bessel_k(nu, z)
            # even n: exactly zero, no Bessel evaluation
    else:
        if spec.branch is Branch.TIMELIKE_PROFILE:
            out[pos] = 4.0 * pref * bessel_k(nu, z)
        else:
            out[pos] = -2.0 * math.pi * pref * bessel_n(nu, z)
    return float(out[0]) if scalar else out


def kernel_envelope(spec: KernelSpec, l: MomentumMagnitude):
    """Smooth upper bound on |minkowski_kernel|, valid for 2 pi s l >~ 1.

    Only used to place tail truncation points, where the large-argument
    envelopes of the cylinder functions apply.
    """
    n = spec.n
    lv = l.value
    nu = (n - 1) / 2.0
    uses_k = (spec.momentum_char is MomentumChar.SPACELIKE
              and spec.branch is Branch.TIMELIKE_PROFILE) or \
             (spec.momentum_char is MomentumChar.TIMELIKE
              and spec.branch is Branch.SPACELIKE_PROFILE)

    def env(s):
        sa = np.maximum(np.asarray(s, dtype=float), 1e-9)
        z = np.maximum(2.0 * math.pi * sa * lv, 1e-9)
        pref = 2.0 * math.pi * sa ** ((n + 1) / 2.0) / lv ** ((n - 1) / 2.0)
        if uses_k:
            amp = 1.5 * np.sqrt(math.pi / (2.0 * z)) * (1.0 + nu * nu / z) \
                * np.exp(-np.minimum(z, 700.0))
        else:
            amp = 2.0 * np.sqrt(2.0 / (math.pi * z)) * (1.0 + nu * nu / z)
        return pref * amp

    return env


def closure_rhs(n: int, m: int, k: float, u: float) -> float:
    """Closed form of int_0^inf chi_n(r, k) chi_m(u, r) dr for m > n.

    Equals (2 pi^h / Gamma(h)) u (u^2 - k^2)^{h-1} Theta(u - k) with
    h = (m - n)/2; requires m - n even and h >= 1.
    """
    if not (k > 0 and u > 0):
        raise DomainError("closure_rhs requires k > 0 and u > 0")
    if m <= n or (m - n) % 2 != 0:
        raise DomainError("closure_rhs requires m > n with m - n even")
    h = (m - n) // 2
    if h < 1:
        raise DomainError("closure_rhs requires h = (m - n)/2 >= 1")
    if u < k:
        return 0.0
    return 2.0 * math.pi ** h / gamma_fn(float(h)) * u * (u * u - k * k) ** (h - 1)
