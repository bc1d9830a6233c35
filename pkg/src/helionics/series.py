"""Sweeps over the isoelectronic series, hydrogenic baselines and crossovers."""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Iterable, Sequence

from .densities import hydrogenic_density
from .hamiltonian import EnergyBreakdown, OptimizationResult, optimize
from .measures import MEASURE_SPEC, MeasureReport, measure_report, shannon_one
from .quadrature import QuadSpec, find_root, interpolated_root
from .wavefunctions import StateKind, build_state

QUANTITIES = ("one_electron_entropy", "two_electron_entropy", "mutual_information")
CROSSOVER_KINDS = ("hydrogenic",) + tuple(k.value for k in StateKind)
DEFAULT_Z_VALUES = tuple(float(z) for z in range(2, 31))
CROSSOVER_TOL = 1e-3


@dataclass(frozen=True)
class SweepRow:
    z_nuclear: float
    kind: str
    params: tuple[float, float]
    energy: EnergyBreakdown
    report: MeasureReport


@dataclass(frozen=True)
class CrossoverResult:
    quantity: str
    kind: str
    z_star: float
    bracket: tuple[float, float]

    def as_dict(self) -> dict:
        return {"quantity": self.quantity, "kind": self.kind, "z_star": self.z_star,
                "bracket": list(self.bracket)}


@lru_cache(maxsize=None)
def _hydrogen_momentum_entropy() -> float:
    return shannon_one(hydrogenic_density(1.0, "momentum"))


def hydrogenic_entropies(z: float) -> tuple[float, float]:
    """(S_rho, S_pi) of a hydrogenic 1s ion; S_pi(1) is computed once by quadrature."""
    if not z > 0:
        raise ValueError("nuclear charge must be positive")
    lnz = math.log(z)
    return 3.0 + math.log(math.pi) - 3.0 * lnz, _hydrogen_momentum_entropy() + 3.0 * lnz


def _difference(report: MeasureReport, quantity: str) -> float:
    if quantity == "one_electron_entropy":
        return report.S_rho_u - report.S_pi_u
    if quantity == "two_electron_entropy":
        return report.S_Gamma_u - report.S_Pi_u
    if quantity == "mutual_information":
        return report.I_r - report.I_p
    raise ValueError(f"unknown quantity {quantity!r}; expected one of {QUANTITIES}")


def evaluate(kind: StateKind | str, z: float, spec: QuadSpec = MEASURE_SPEC,
             initial_params=None) -> tuple[OptimizationResult, MeasureReport]:
    opt = optimize(kind, z, initial_params)
    return opt, measure_report(opt.state(), spec)


def _row(args) -> SweepRow:
    kind, z, spec = args
    opt, report = evaluate(kind, z, spec)
    if kind in (StateKind.TRIPLET, StateKind.NI_TRIPLET):
        ni = (report if kind is StateKind.NI_TRIPLET
              else measure_report(build_state(StateKind.NI_TRIPLET, z), spec))
        report = replace(report, I_r_prime=report.I_r - ni.I_r, I_p_prime=report.I_p - ni.I_p)
    return SweepRow(z, kind.value, opt.params, opt.energy, report)


def sweep(kind: StateKind | str, z_values: Iterable[float] = DEFAULT_Z_VALUES,
          quad_spec: QuadSpec = MEASURE_SPEC, jobs: int = 1) -> list[SweepRow]:
    """Optimise and measure every Z. Each row starts from the default simplex
    for its own Z, so rows are independent and the result does not depend on
    ``jobs`` or on which other Z values are requested."""
    kind = StateKind(kind)
    zs = sorted(float(z) for z in z_values)
    if not zs:
        raise ValueError("z_values must be non-empty")
    if kind is StateKind.SINGLET and zs[0] < 2:
        raise ValueError("singlet sweeps start at Z = 2")
    tasks = [(kind, z, quad_spec) for z in zs]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_row, tasks))
    return [_row(t) for t in tasks]


class _WarmStart:
    """Nearest-Z parameter cache for probe optimisations (single writer)."""

    def __init__(self):
        self._params: dict[float, tuple[float, float]] = {}

    def start(self, kind: StateKind, z: float):
        if not self._params:
            return None
        near = min(self._params, key=lambda q: abs(q - z))
        p = self._params[near]
        return (p[0] * z / near, p[1] * z / near)

    def store(self, z: float, params) -> None:
        self._params[z] = tuple(params)


def crossover_function(kind: str, quantity: str, spec: QuadSpec = MEASURE_SPEC):
    """g(Z) = position-space measure minus its momentum-space counterpart."""
    if kind == "hydrogenic":
        if quantity != "one_electron_entropy":
            raise ValueError("hydrogenic ions only have a one-electron crossover")

        def g_h(z):
            s_rho, s_pi = hydrogenic_entropies(z)
            return s_rho - s_pi

        return g_h
    state_kind = StateKind(kind)
    cache = _WarmStart()

    def g(z):
        opt, report = evaluate(state_kind, z, spec, cache.start(state_kind, z)
                               if state_kind is not StateKind.NI_TRIPLET else None)
        cache.store(z, opt.params)
        return _difference(report, quantity)

    return g


def find_crossover(kind: str, quantity: str, bracket: Sequence[float],
                   quad_spec: QuadSpec = MEASURE_SPEC, tol: float = CROSSOVER_TOL) -> CrossoverResult:
    """Bisect the continuous-Z sign change of g on ``bracket``, re-optimising
    the state at every probe Z."""
    if kind not in CROSSOVER_KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {CROSSOVER_KINDS}")
    lo, hi = float(bracket[0]), float(bracket[1])
    z_star = find_root(crossover_function(kind, quantity, quad_spec), lo, hi, tol)
    return CrossoverResult(quantity, kind, z_star, (lo, hi))


def ni_two_electron_crossover_closed_form(spec: QuadSpec = MEASURE_SPEC) -> float:
    """exp[(S_Gamma(1) - S_Pi(1)) / 12]: the pair entropies of the
    non-interacting triplet scale as -/+ 6 ln Z."""
    r = measure_report(build_state(StateKind.NI_TRIPLET, 1.0), spec)
    return math.exp((r.S_Gamma_u - r.S_Pi_u) / 12.0)


def hydrogenic_crossover_closed_form() -> float:
    return math.exp((3.0 + math.log(math.pi) - _hydrogen_momentum_entropy()) / 6.0)


def tabulated_crossover(rows: Sequence[SweepRow], quantity: str) -> float:
    """Linear interpolation of the first sign change across sweep rows."""
    return interpolated_root([r.z_nuclear for r in rows],
                             [_difference(r.report, quantity) for r in rows])
