"""One- and two-electron radial densities in position and momentum space.

Normalisation conventions: one-electron densities integrate to N (= 2) or to
unity; pair densities to N(N-1) (= 2) or to unity. All densities here are
spherically symmetric because the wavefunctions are built from s orbitals, so
they are handled directly as functions of the radius (or momentum magnitude).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable

import numpy as np

from . import orbitals as orb
from .errors import NormalizationError
from .wavefunctions import TwoElectronState, amplitude, amplitude_p

SPACES = ("position", "momentum")


@dataclass(frozen=True)
class RadialDensity:
    space: str
    normalization: str  # "N" or "unity"
    profile: Callable
    scale: float
    electrons: int = 2
    factor: float = 1.0

    def __call__(self, x):
        return self.factor * self.profile(x)

    @property
    def total(self) -> float:
        return 1.0 if self.normalization == "unity" else float(self.electrons)


@dataclass(frozen=True)
class PairRadialDensity:
    space: str
    normalization: str  # "N(N-1)" or "unity"
    profile: Callable
    scale: float
    electrons: int = 2
    factor: float = 1.0

    def __call__(self, x1, x2):
        return self.factor * self.profile(x1, x2)

    @property
    def total(self) -> float:
        n = self.electrons
        return 1.0 if self.normalization == "unity" else float(n * (n - 1))


def _check_space(space: str) -> None:
    if space not in SPACES:
        raise ValueError(f"space must be one of {SPACES}, got {space!r}")


def grid_scale(state: TwoElectronState, space: str) -> float:
    """Characteristic length (1/zeta_min) or momentum (zeta_min) of a state."""
    return 1.0 / state.zeta_min if space == "position" else state.zeta_min


def one_density(state: TwoElectronState, space: str = "position") -> RadialDensity:
    """rho = 2 C^2 [a^2 S_bb + b^2 S_aa + 2 s a b S_ab], N-normalised.

    The momentum density uses the transformed orbitals with the same overlaps,
    which the unitary transform preserves.
    """
    _check_space(space)
    s_aa, s_bb, s_ab = state.overlaps()
    evaluate = orb.eval_position if space == "position" else orb.eval_momentum
    a, b = state.orbital_a, state.orbital_b
    pref = 2.0 * state.norm_const**2
    sign = state.sym_sign

    def profile(x):
        va, vb = evaluate(a, x), evaluate(b, x)
        return pref * (va * va * s_bb + vb * vb * s_aa + 2.0 * sign * va * vb * s_ab)

    return RadialDensity(space, "N", profile, grid_scale(state, space))


def pair_density(state: TwoElectronState, space: str = "position") -> PairRadialDensity:
    """Spinless pair density 2 |Psi|^2 (or 2 |Phi|^2), normalised to N(N-1) = 2."""
    _check_space(space)
    amp = amplitude if space == "position" else amplitude_p

    def profile(x1, x2):
        return 2.0 * amp(state, x1, x2) ** 2

    return PairRadialDensity(space, "N(N-1)", profile, grid_scale(state, space))


def to_unity(d):
    if d.normalization == "unity":
        raise NormalizationError("density is already unity-normalised")
    return replace(d, normalization="unity", factor=d.factor / d.total)


def hydrogenic_density(z: float, space: str = "position") -> RadialDensity:
    """1s density of a one-electron ion with nuclear charge z (unity-normalised)."""
    _check_space(space)
    z = float(z)
    if space == "position":
        c = z**3 / math.pi

        def profile(r):
            return c * np.exp(-2.0 * z * r)

        return RadialDensity(space, "unity", profile, 1.0 / z, electrons=1)

    c = 8.0 * z**5 / math.pi**2

    def profile(p):
        return c / (z * z + p * p) ** 4

    return RadialDensity(space, "unity", profile, z, electrons=1)
