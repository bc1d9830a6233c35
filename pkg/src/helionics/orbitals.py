"""s-type Slater primitives r**k exp(-zeta r), k in {0, 1}, and their linear
combinations, with closed-form momentum transforms and one-electron integrals.

Radial integrals reduce to the moments int_0^inf r**n exp(-s r) dr = n!/s**(n+1).
Internally a radial function is handled as a list of ``(coef, power, exponent)``
terms so products and derivatives stay in closed form.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import NonPositiveExponent

FOUR_PI = 4.0 * math.pi
_MOMENTUM_PREFACTOR = 2.0 * math.sqrt(2.0 / math.pi)

Terms = list[tuple[float, int, float]]


@dataclass(frozen=True)
class SlaterPrimitive:
    power: int
    exponent: float

    def __post_init__(self):
        if self.power not in (0, 1):
            raise ValueError(f"primitive power must be 0 or 1, got {self.power}")
        if not self.exponent > 0:
            raise NonPositiveExponent(f"orbital exponent must be > 0, got {self.exponent}")

    def norm2(self) -> float:
        """4 pi int r^2 (r^k e^{-zeta r})^2 dr."""
        k, z = self.power, self.exponent
        return FOUR_PI * math.factorial(2 * k + 2) / (2.0 * z) ** (2 * k + 3)


@dataclass(frozen=True)
class OrbitalCombo:
    terms: tuple[tuple[float, SlaterPrimitive], ...]

    @property
    def exponents(self) -> tuple[float, ...]:
        return tuple(p.exponent for _, p in self.terms)

    def raw(self) -> Terms:
        return [(c, p.power, p.exponent) for c, p in self.terms]


def slater(zeta: float) -> OrbitalCombo:
    """Nodeless 1s-like factor exp(-zeta r)."""
    return OrbitalCombo(((1.0, SlaterPrimitive(0, zeta)),))


def two_s_like(zeta: float) -> OrbitalCombo:
    """(1 - zeta r) exp(-zeta r), with its radial node at r = 1/zeta."""
    return OrbitalCombo(((1.0, SlaterPrimitive(0, zeta)), (-zeta, SlaterPrimitive(1, zeta))))


def eval_raw(terms: Terms, r):
    r = np.asarray(r, dtype=float)
    out = np.zeros_like(r)
    for c, k, z in terms:
        out = out + c * r**k * np.exp(-z * r)
    return out


def eval_position(o: OrbitalCombo, r):
    return eval_raw(o.raw(), r)


def _primitive_momentum(k: int, z: float, p):
    q = z * z + p * p
    if k == 0:
        return _MOMENTUM_PREFACTOR * z / q**2
    return _MOMENTUM_PREFACTOR * (3.0 * z * z - p * p) / q**3


def eval_momentum(o: OrbitalCombo, p):
    """Momentum-space amplitude of an s orbital,

        phi(p) = (2/pi)^(1/2) p^-1 int_0^inf r phi(r) sin(p r) dr,

    in closed form. Finite at p = 0.
    """
    p = np.asarray(p, dtype=float)
    out = np.zeros_like(p)
    for c, prim in o.terms:
        out = out + c * _primitive_momentum(prim.power, prim.exponent, p)
    return out


def derivative(terms: Terms) -> Terms:
    out: Terms = []
    for c, k, z in terms:
        if k:
            out.append((c * k, k - 1, z))
        out.append((-c * z, k, z))
    return out


def multiply(a: Terms, b: Terms) -> Terms:
    return [(ca * cb, ka + kb, za + zb) for ca, ka, za in a for cb, kb, zb in b]


def radial_moment(terms: Terms, n: int) -> float:
    """int_0^inf r**n f(r) dr for f given as raw terms (n + k >= 0)."""
    total = 0.0
    for c, k, z in terms:
        m = n + k
        if m < 0:
            raise ValueError("moment diverges at the origin")
        total += c * math.factorial(m) / z ** (m + 1)
    return total


def overlap(a: OrbitalCombo, b: OrbitalCombo) -> float:
    """4 pi int r^2 a(r) b(r) dr."""
    return FOUR_PI * radial_moment(multiply(a.raw(), b.raw()), 2)


def inverse_r(a: OrbitalCombo, b: OrbitalCombo) -> float:
    """4 pi int r a(r) b(r) dr, the <a|1/r|b> matrix element."""
    return FOUR_PI * radial_moment(multiply(a.raw(), b.raw()), 1)


def kinetic(a: OrbitalCombo, b: OrbitalCombo) -> float:
    """<a| -1/2 nabla^2 |b> for s functions, as 1/2 * 4 pi int r^2 a' b' dr."""
    return 0.5 * FOUR_PI * radial_moment(multiply(derivative(a.raw()), derivative(b.raw())), 2)


def min_exponent(orbitals: Iterable[OrbitalCombo]) -> float:
    return min(z for o in orbitals for z in o.exponents)
