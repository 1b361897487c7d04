"""Radial profiles: Lorentz-invariant functions given by their two branches.

A profile represents f(s^2) through f_timelike(s0) = f(s0^2) on the timelike
side and f_spacelike(s1) = f(-s1^2) on the spacelike side, both evaluable for
radius >= 0 and complex-valued.  Profiles may carry an envelope hint (an upper
bound on |f| used for tail truncation), a support radius (beyond which both
branches vanish identically), and a phase-scale hint for oscillatory profiles.

Tabulated profiles are read from CSV with header

    s,re_timelike,im_timelike,re_spacelike,im_spacelike

strictly increasing s >= 0; values are interpolated with a monotone cubic
scheme inside the sample range and extended by zero beyond it.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.interpolate import PchipInterpolator

__all__ = [
    "RadialProfile",
    "builtin_profile",
    "BUILTIN_PROFILES",
    "profile_from_csv",
    "profile_to_csv",
    "PROFILE_CSV_HEADER",
]

PROFILE_CSV_HEADER = ["s", "re_timelike", "im_timelike", "re_spacelike", "im_spacelike"]


@dataclass(frozen=True)
class RadialProfile:
    """Two complex branches of a Lorentz-invariant function.

    f_timelike(s0) is f at s^2 = s0^2 > 0; f_spacelike(s1) is f at
    s^2 = -s1^2 < 0.  Both must accept numpy arrays of radii.
    """

    f_timelike: Callable
    f_spacelike: Callable
    envelope_hint: Optional[Callable] = None
    support_radius: Optional[float] = None
    phase_scale: float = 0.0    # bound on |d arg f / d(s^2)|, 0 if non-oscillatory
    continuous_at_lightcone: bool = False

    def __post_init__(self):
        if self.continuous_at_lightcone:
            a = complex(np.asarray(self.f_timelike(np.array([0.0])))[0])
            b = complex(np.asarray(self.f_spacelike(np.array([0.0])))[0])
            if abs(a - b) > 1e-12 * (1.0 + abs(a)):
                raise ValueError("branches disagree at the light-cone although "
                                 "declared continuous")

    def branch(self, name: str) -> Callable:
        if name == "timelike":
            return self.f_timelike
        if name == "spacelike":
            return self.f_spacelike
        raise KeyError(name)


def _gauss_oscillatory() -> RadialProfile:
    # f(s^2) = exp(i s^2): unit modulus, quadratic phase on both branches
    return RadialProfile(
        f_timelike=lambda s: np.exp(1j * np.asarray(s) ** 2),
        f_spacelike=lambda s: np.exp(-1j * np.asarray(s) ** 2),
        envelope_hint=lambda s: np.ones_like(np.asarray(s, dtype=float)),
        phase_scale=1.0,
        continuous_at_lightcone=True,
    )


def _gauss_decay_timelike() -> RadialProfile:
    return RadialProfile(
        f_timelike=lambda s: np.exp(-np.asarray(s, dtype=float) ** 2) + 0j,
        f_spacelike=lambda s: np.zeros(np.shape(s), dtype=complex),
        envelope_hint=lambda s: np.exp(-np.asarray(s, dtype=float) ** 2),
    )


def _compact_bump() -> RadialProfile:
    def branch(s):
        sa = np.asarray(s, dtype=float)
        return np.where(sa < 1.0, (1.0 - np.minimum(sa, 1.0) ** 2) ** 3, 0.0) + 0j

    return RadialProfile(
        f_timelike=branch,
        f_spacelike=branch,
        support_radius=1.0,
        continuous_at_lightcone=True,
    )


def _zero() -> RadialProfile:
    z = lambda s: np.zeros(np.shape(s), dtype=complex)
    return RadialProfile(f_timelike=z, f_spacelike=z, support_radius=1.0,
                         continuous_at_lightcone=True)


BUILTIN_PROFILES = {
    "gauss_oscillatory": _gauss_oscillatory,
    "gauss_decay_timelike": _gauss_decay_timelike,
    "compact_bump": _compact_bump,
    "zero": _zero,
}


def builtin_profile(name: str) -> RadialProfile:
    """Construct one of the named builtin profiles."""
    try:
        return BUILTIN_PROFILES[name]()
    except KeyError:
        raise KeyError(f"unknown builtin profile {name!r}; available: "
                       f"{sorted(BUILTIN_PROFILES)}") from None


# --------------------------------------------------------------------------
# CSV-tabulated profiles


def _interp_branch(s: np.ndarray, vals: np.ndarray) -> Callable:
    if len(s) == 1:
        lo = hi = s[0]
        only = vals[0]

        def f(x):
            xa = np.asarray(x, dtype=float)
            return np.where(xa == lo, only, 0.0 + 0.0j)

        return f
    re = PchipInterpolator(s, vals.real, extrapolate=False)
    im = PchipInterpolator(s, vals.imag, extrapolate=False)
    lo, hi = s[0], s[-1]

    def f(x):
        xa = np.asarray(x, dtype=float)
        out = np.nan_to_num(re(xa), nan=0.0) + 1j * np.nan_to_num(im(xa), nan=0.0)
        return np.where((xa < lo) | (xa > hi), 0.0 + 0.0j, out)

    return f


def profile_from_csv(source) -> RadialProfile:
    """Load a tabulated profile; `source` is a path or a text stream."""
    if hasattr(source, "read"):
        rows = list(csv.reader(source))
    else:
        with open(source, newline="", encoding="utf-8") as fh:
            rows = list(csv.reader(fh))
    if not rows or [c.strip() for c in rows[0]] != PROFILE_CSV_HEADER:
        raise ValueError(f"profile CSV must start with header "
                         f"{','.join(PROFILE_CSV_HEADER)}")
    data = np.array([[float(c) for c in row] for row in rows[1:] if row],
                    dtype=float)
    if data.size == 0:
        raise ValueError("profile CSV has no samples")
    s = data[:, 0]
    if np.any(s < 0) or np.any(np.diff(s) <= 0):
        raise ValueError("profile CSV requires strictly increasing s >= 0")
    ft = _interp_branch(s, data[:, 1] + 1j * data[:, 2])
    fs = _interp_branch(s, data[:, 3] + 1j * data[:, 4])
    return RadialProfile(f_timelike=ft, f_spacelike=fs,
                         support_radius=float(s[-1]))


def profile_to_csv(profile: RadialProfile, s_grid, stream=None) -> str:
    """Sample both branches on s_grid and write the CSV format."""
    out = stream if stream is not None else io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(PROFILE_CSV_HEADER)
    sg = np.asarray(s_grid, dtype=float)
    vt = np.asarray(profile.f_timelike(sg), dtype=complex)
    vs = np.asarray(profile.f_spacelike(sg), dtype=complex)
    for i in range(len(sg)):
        writer.writerow([f"{x:.17g}" for x in
                         (sg[i], vt[i].real, vt[i].imag, vs[i].real, vs[i].imag)])
    return out.getvalue() if stream is None else ""
