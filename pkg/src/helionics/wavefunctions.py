"""Two-electron spatial wavefunctions for the helium-like series.

Singlet:  C [e^{-Z1 r1} e^{-Z2 r2} + e^{-Z2 r1} e^{-Z1 r2}]
Triplet:  C [e^{-Z1 r1} (1 - Z2 r2) e^{-Z2 r2} - (1 - Z2 r1) e^{-Z2 r1} e^{-Z1 r2}]

Both are written as C [a(r1) b(r2) + s b(r1) a(r2)] with s = +1 / -1. The
non-interacting triplet fixes (Z1, Z2) = (Z, Z/2): hydrogenic 1s and 2s.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from . import orbitals as orb
from .errors import DegenerateTriplet, NonPositiveExponent
from .quadrature import DEFAULT_SPEC, integrate_pair


class StateKind(str, Enum):
    SINGLET = "singlet"
    TRIPLET = "triplet"
    NI_TRIPLET = "ni-triplet"

    @property
    def sym_sign(self) -> int:
        return 1 if self is StateKind.SINGLET else -1


@dataclass(frozen=True)
class TwoElectronState:
    kind: StateKind
    z_nuclear: float
    orbital_a: orb.OrbitalCombo
    orbital_b: orb.OrbitalCombo
    sym_sign: int
    norm_const: float
    params: tuple[float, float]

    @property
    def zeta_min(self) -> float:
        return min(self.params)

    def overlaps(self) -> tuple[float, float, float]:
        """(S_aa, S_bb, S_ab)."""
        a, b = self.orbital_a, self.orbital_b
        return orb.overlap(a, a), orb.overlap(b, b), orb.overlap(a, b)


def ni_params(z: float) -> tuple[float, float]:
    return (float(z), float(z) / 2.0)


def build_state(kind: StateKind | str, z_nuclear: float,
                params: tuple[float, float] | None = None) -> TwoElectronState:
    kind = StateKind(kind)
    if kind is StateKind.NI_TRIPLET:
        params = ni_params(z_nuclear)
    elif params is None:
        raise ValueError(f"{kind.value} state needs explicit exponents")
    z1, z2 = float(params[0]), float(params[1])
    if not (z1 > 0 and z2 > 0):
        raise NonPositiveExponent(f"exponents must be positive, got ({z1}, {z2})")
    if kind is StateKind.SINGLET:
        a, b = orb.slater(z1), orb.slater(z2)
    else:
        if z1 == z2:
            raise DegenerateTriplet("triplet exponents must differ")
        a, b = orb.slater(z1), orb.two_s_like(z2)
    sign = kind.sym_sign
    s_aa, s_bb, s_ab = orb.overlap(a, a), orb.overlap(b, b), orb.overlap(a, b)
    norm = 1.0 / math.sqrt(2.0 * (s_aa * s_bb + sign * s_ab * s_ab))
    return TwoElectronState(kind, float(z_nuclear), a, b, sign, norm, (z1, z2))


def amplitude(state: TwoElectronState, r1, r2):
    a1 = orb.eval_position(state.orbital_a, r1)
    b1 = orb.eval_position(state.orbital_b, r1)
    a2 = orb.eval_position(state.orbital_a, r2)
    b2 = orb.eval_position(state.orbital_b, r2)
    return state.norm_const * (a1 * b2 + state.sym_sign * b1 * a2)


def amplitude_p(state: TwoElectronState, p1, p2):
    a1 = orb.eval_momentum(state.orbital_a, p1)
    b1 = orb.eval_momentum(state.orbital_b, p1)
    a2 = orb.eval_momentum(state.orbital_a, p2)
    b2 = orb.eval_momentum(state.orbital_b, p2)
    return state.norm_const * (a1 * b2 + state.sym_sign * b1 * a2)


def norm_numeric(state: TwoElectronState, space: str = "position", spec=None) -> float:
    """<Psi|Psi> by pair quadrature (a check on the closed-form constant)."""
    amp = amplitude if space == "position" else amplitude_p
    scale = 1.0 / state.zeta_min if space == "position" else state.zeta_min
    c = orb.FOUR_PI**2

    def f(x, y):
        return c * x * x * y * y * amp(state, x, y) ** 2

    return integrate_pair(f, spec or DEFAULT_SPEC, scale=scale).value

