"""Cylinder and Gamma functions for integer and half-integer orders.

The radial kernels need J_nu (Bessel), N_nu (Neumann, also written Y_nu),
K_nu (Macdonald) and Gamma, all for orders 2*nu in {-1, 0, 1, ..., 21} and
positive real argument.  Evaluation is delegated to scipy.special, which is
accurate to near machine precision on the supported ranges; the test suite
pins the accuracy against independent ascending-series oracles and against
the half-integer closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import special as _sp

__all__ = [
    "DomainError",
    "Order",
    "bessel_j",
    "bessel_n",
    "bessel_k",
    "gamma_fn",
]

_TWICE_NU_MIN = -1
_TWICE_NU_MAX = 21


class DomainError(ValueError):
    """Argument or order outside the supported domain."""


@dataclass(frozen=True)
class Order:
    """Bessel-function order nu, stored as 2*nu so half-integers stay exact."""

    twice_nu: int

    def __post_init__(self):
        if not isinstance(self.twice_nu, (int, np.integer)):
            raise DomainError(f"twice_nu must be an integer, got {self.twice_nu!r}")
        if not _TWICE_NU_MIN <= self.twice_nu <= _TWICE_NU_MAX:
            raise DomainError(
                f"order 2*nu={self.twice_nu} outside supported range "
                f"[{_TWICE_NU_MIN}, {_TWICE_NU_MAX}]"
            )

    @classmethod
    def from_nu(cls, nu: float) -> "Order":
        twice = 2.0 * nu
        if abs(twice - round(twice)) > 1e-12:
            raise DomainError(f"nu={nu} is not an integer or half-integer")
        return cls(int(round(twice)))

    @property
    def nu(self) -> float:
        return self.twice_nu / 2.0

    @property
    def is_integer(self) -> bool:
        return self.twice_nu % 2 == 0

    def __str__(self):
        return f"{self.twice_nu}/2" if self.twice_nu % 2 else str(self.twice_nu // 2)


def _as_array(x):
    arr = np.asarray(x, dtype=float)
    return arr, np.isscalar(x) or arr.ndim == 0


def bessel_j(nu: Order, x):
    """Bessel function of the first kind J_nu(x).

    x may be a scalar or array, x > 0 (x = 0 allowed for nu >= 0).
    """
    arr, scalar = _as_array(x)
    if np.any(arr < 0):
        raise DomainError("bessel_j requires x >= 0")
    if nu.twice_nu < 0 and np.any(arr == 0):
        raise DomainError("bessel_j at x = 0 requires nu >= 0")
    out = _sp.jv(nu.nu, arr)
    return float(out) if scalar else out


def bessel_n(nu: Order, x):
    """Neumann function N_nu(x) (Bessel second kind, also written Y_nu).

    Diverges at x = 0; requires x > 0.
    """
    arr, scalar = _as_array(x)
    if np.any(arr <= 0):
        raise DomainError("bessel_n requires x > 0")
    out = _sp.yv(nu.nu, arr)
    return float(out) if scalar else out


def bessel_k(nu: Order, x):
    """Macdonald function K_nu(x) (modified Bessel, third kind); x > 0."""
    arr, scalar = _as_array(x)
    if np.any(arr <= 0):
        raise DomainError("bessel_k requires x > 0")
    out = _sp.kv(abs(nu.nu), arr)
    return float(out) if scalar else out


def gamma_fn(x):
    """Euler Gamma function for positive real argument."""
    arr, scalar = _as_array(x)
    if np.any(arr <= 0):
        raise DomainError("gamma_fn requires x > 0")
    out = _sp.gamma(arr)
    return float(out) if scalar else out
