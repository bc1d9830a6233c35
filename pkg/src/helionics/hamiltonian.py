"""Energy of the helium-like Hamiltonian

    H = -1/2 nabla_1^2 - 1/2 nabla_2^2 - Z/r1 - Z/r2 + 1/r12

for the two-exponent states, and Nelder-Mead optimisation of the exponents.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import orbitals as orb
from .errors import DegenerateTriplet, NoBoundState, NonConvergence, NonPositiveExponent
from .quadrature import DEFAULT_SPEC, QuadSpec, integrate_pair
from .wavefunctions import StateKind, TwoElectronState, amplitude, build_state, ni_params

FOUR_PI_SQ = orb.FOUR_PI**2

# NoBoundState is raised when the singlet optimum fails to beat the
# one-electron ion (-Z^2/2) by at least this much.
BOUND_MARGIN = 1e-8


@dataclass(frozen=True)
class EnergyBreakdown:
    kinetic: float
    nuclear_attraction: float
    electron_repulsion: float

    @property
    def total(self) -> float:
        return self.kinetic + self.nuclear_attraction + self.electron_repulsion

    @property
    def potential(self) -> float:
        return self.nuclear_attraction + self.electron_repulsion

    def virial_ratio(self) -> float:
        """|2T + V| / |E|; zero at a variational optimum in a scaling family."""
        return abs(2.0 * self.kinetic + self.potential) / abs(self.total)

    def as_dict(self) -> dict:
        return {
            "kinetic": self.kinetic,
            "nuclear": self.nuclear_attraction,
            "repulsion": self.electron_repulsion,
            "total": self.total,
        }


@dataclass(frozen=True)
class OptimizationResult:
    kind: StateKind
    z_nuclear: float
    params: tuple[float, float]
    energy: EnergyBreakdown
    iterations: int
    evaluations: int
    converged: bool

    def state(self) -> TwoElectronState:
        return build_state(self.kind, self.z_nuclear, self.params)


# -- Coulomb repulsion -------------------------------------------------------

def _inner(m: int, alpha: float, n: int, beta: float) -> float:
    """int_0^inf dr1 r1^(m-1) e^{-alpha r1} int_0^r1 dr2 r2^n e^{-beta r2}."""
    s = alpha + beta
    tail = sum(beta**j / math.factorial(j) * math.factorial(m - 1 + j) / s ** (m + j)
               for j in range(n + 1))
    return math.factorial(n) / beta ** (n + 1) * (math.factorial(m - 1) / alpha**m - tail)


def coulomb_monopole(p: orb.Terms, q: orb.Terms) -> float:
    """(4 pi)^2 int int r1^2 r2^2 P(r1) Q(r2) / max(r1, r2) dr1 dr2 in closed form."""
    total = 0.0
    for cp, kp, zp in p:
        for cq, kq, zq in q:
            m, n = kp + 2, kq + 2
            total += cp * cq * (_inner(m, zp, n, zq) + _inner(n, zq, m, zp))
    return FOUR_PI_SQ * total


def repulsion_closed(state: TwoElectronState) -> float:
    """<1/r12> = 2 C^2 [J(aa, bb) + s J(ab, ab)]; only the l = 0 term survives."""
    a, b = state.orbital_a.raw(), state.orbital_b.raw()
    aa, bb, ab = orb.multiply(a, a), orb.multiply(b, b), orb.multiply(a, b)
    j = coulomb_monopole(aa, bb) + state.sym_sign * coulomb_monopole(ab, ab)
    return 2.0 * state.norm_const**2 * j


def repulsion_quadrature(state: TwoElectronState, spec: QuadSpec = DEFAULT_SPEC) -> float:
    """<1/r12> by pair quadrature with the max(r1, r2) kernel."""

    def f(x, y):
        return FOUR_PI_SQ * x * x * y * y * amplitude(state, x, y) ** 2 / np.maximum(x, y)

    return integrate_pair(f, spec, scale=1.0 / state.zeta_min).value


def _one_body(state: TwoElectronState, op: Callable) -> float:
    """<Psi| h(1) + h(2) |Psi> for a one-electron operator given by ``op(a, b)``."""
    a, b = state.orbital_a, state.orbital_b
    s_aa, s_bb, s_ab = state.overlaps()
    inner = op(a, a) * s_bb + op(b, b) * s_aa + 2.0 * state.sym_sign * op(a, b) * s_ab
    return 2.0 * state.norm_const**2 * inner


def energy(state: TwoElectronState, include_repulsion: bool = True,
           repulsion: str = "closed", spec: QuadSpec = DEFAULT_SPEC) -> EnergyBreakdown:
    kin = _one_body(state, orb.kinetic)
    nuc = -state.z_nuclear * _one_body(state, orb.inverse_r)
    if not include_repulsion:
        vee = 0.0
    elif repulsion == "closed":
        vee = repulsion_closed(state)
    elif repulsion == "quadrature":
        vee = repulsion_quadrature(state, spec)
    else:
        raise ValueError(f"unknown repulsion route {repulsion!r}")
    return EnergyBreakdown(kin, nuc, vee)


# -- Nelder-Mead -------------------------------------------------------------

@dataclass
class SimplexResult:
    x: np.ndarray
    fun: float
    iterations: int
    evaluations: int
    converged: bool


def _mirror(x: np.ndarray) -> np.ndarray:
    # reflect through zero to stay in the positive orthant
    return np.maximum(np.abs(x), 1e-12)


def nelder_mead(f: Callable[[np.ndarray], float], x0: Sequence[float], step: float = 0.1,
                xtol: float = 1e-7, ftol: float = 1e-10, max_evals: int = 2000,
                alpha: float = 1.0, gamma: float = 2.0, rho: float = 0.5,
                sigma: float = 0.5, positive: bool = True, restarts: int = 1) -> SimplexResult:
    """Derivative-free minimisation with the standard reflection (1),
    expansion (2), contraction (0.5) and shrink (0.5) coefficients.

    Converged when the simplex diameter is below ``xtol`` and the spread of
    vertex values is below ``ftol``. After convergence the search restarts
    once from the best vertex with a fresh simplex, guarding against collapse.
    """
    clip = _mirror if positive else (lambda v: v)
    evals = 0

    def fx(v):
        nonlocal evals
        evals += 1
        return float(f(v))

    def run(start, size):
        nonlocal evals
        dim = len(start)
        pts = [clip(np.asarray(start, dtype=float))]
        for i in range(dim):
            v = pts[0].copy()
            v[i] += size * max(abs(v[i]), 1.0)
            pts.append(clip(v))
        vals = [fx(p) for p in pts]
        it = 0
        while True:
            order = np.argsort(vals, kind="stable")
            pts = [pts[i] for i in order]
            vals = [vals[i] for i in order]
            diam = max(np.max(np.abs(p - pts[0])) for p in pts[1:])
            if diam < xtol and vals[-1] - vals[0] < ftol:
                return pts[0], vals[0], it, True
            if evals >= max_evals:
                return pts[0], vals[0], it, False
            it += 1
            centroid = np.mean(pts[:-1], axis=0)
            xr = clip(centroid + alpha * (centroid - pts[-1]))
            fr = fx(xr)
            if vals[0] <= fr < vals[-2]:
                pts[-1], vals[-1] = xr, fr
                continue
            if fr < vals[0]:
                xe = clip(centroid + gamma * (xr - centroid))
                fe = fx(xe)
                if fe < fr:
                    pts[-1], vals[-1] = xe, fe
                else:
                    pts[-1], vals[-1] = xr, fr
                continue
            if fr < vals[-1]:
                xc = clip(centroid + rho * (xr - centroid))
                fc = fx(xc)
                if fc <= fr:
                    pts[-1], vals[-1] = xc, fc
                    continue
            else:
                xc = clip(centroid + rho * (pts[-1] - centroid))
                fc = fx(xc)
                if fc < vals[-1]:
                    pts[-1], vals[-1] = xc, fc
                    continue
            for i in range(1, len(pts)):
                pts[i] = clip(pts[0] + sigma * (pts[i] - pts[0]))
                vals[i] = fx(pts[i])

    x, fbest, iters, ok = run(x0, step)
    for _ in range(restarts):
        if not ok:
            break
        x, fbest, more, ok = run(x, step * 0.1)
        iters += more
    return SimplexResult(x, fbest, iters, evals, ok)


def default_start(kind: StateKind | str, z: float) -> tuple[float, float]:
    kind = StateKind(kind)
    if kind is StateKind.SINGLET:
        return (1.1 * z, 0.6 * z)
    return (z - 0.1, z / 2.0 - 0.05)


def optimize(kind: StateKind | str, z_nuclear: float,
             initial_params: Sequence[float] | None = None,
             max_evals: int = 2000) -> OptimizationResult:
    """Minimise the total energy over the two exponents.

    The non-interacting triplet has fixed exponents and is returned as-is.
    """
    kind = StateKind(kind)
    z = float(z_nuclear)
    if kind is StateKind.NI_TRIPLET:
        params = ni_params(z)
        e = energy(build_state(kind, z))
        return OptimizationResult(kind, z, params, e, 0, 0, True)

    start = tuple(initial_params) if initial_params is not None else default_start(kind, z)
    if min(start) <= 0:
        raise NonPositiveExponent(f"initial exponents must be positive, got {start}")

    def objective(v):
        try:
            return energy(build_state(kind, z, (v[0], v[1]))).total
        except DegenerateTriplet:
            return math.inf

    res = nelder_mead(objective, start, max_evals=max_evals)
    if not res.converged:
        raise NonConvergence(
            f"Nelder-Mead did not converge for {kind.value} Z={z} within {max_evals} evaluations")
    p1, p2 = float(res.x[0]), float(res.x[1])
    if kind is StateKind.SINGLET and p2 > p1:
        p1, p2 = p2, p1
    state = build_state(kind, z, (p1, p2))
    e = energy(state)
    if kind is StateKind.SINGLET and e.total >= -0.5 * z * z - BOUND_MARGIN:
        raise NoBoundState(
            f"no bound state: singlet optimum {e.total:.6f} does not lie below "
            f"the one-electron threshold {-0.5 * z * z:.6f}")
    return OptimizationResult(kind, z, (p1, p2), e, res.iterations, res.evaluations, True)
