"""Shannon entropies, mutual information and their local (radial) densities.

Scalar measures are computed from unity-normalised densities and reported in
nats:

    S_rho   = -int rho ln rho d3r                S_Gamma = -int int Gamma ln Gamma
    I_r     = int int Gamma ln[Gamma / (rho rho)] = 2 S_rho - S_Gamma

and identically in momentum space. The momentum information density uses the
N-normalised densities (pi -> N, Pi -> N(N-1)) exactly as it is usually
written; with that convention it integrates to I_p.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .densities import (
    PairRadialDensity,
    RadialDensity,
    grid_scale,
    one_density,
    pair_density,
    to_unity,
)
from .errors import MarginalMismatch, NonConvergence, NotUnityNormalized
from .orbitals import FOUR_PI
from .quadrature import (
    DEFAULT_SPEC,
    QuadSpec,
    _gauss_legendre,
    integrate_pair,
    integrate_radial,
    make_grid,
)
from .wavefunctions import StateKind, TwoElectronState

DENSITY_FLOOR = 1e-300
FOUR_PI_SQ = FOUR_PI**2
LN2 = math.log(2.0)

# 3(1 + ln pi) and 6(1 + ln pi): entropic uncertainty bounds.
ONE_ELECTRON_BOUND = 3.0 * (1.0 + math.log(math.pi))
TWO_ELECTRON_BOUND = 6.0 * (1.0 + math.log(math.pi))

MEASURE_SPEC = QuadSpec(rel_tol=1e-9, abs_tol=1e-12, max_panels=256)


def xlogx(d):
    """d ln d with 0 ln 0 = 0 and a floor below which the density counts as 0."""
    d = np.asarray(d, dtype=float)
    safe = np.where(d > DENSITY_FLOOR, d, 1.0)
    return np.where(d > DENSITY_FLOOR, d * np.log(safe), 0.0)


def _require_unity(d) -> None:
    if d.normalization != "unity":
        raise NotUnityNormalized(f"expected a unity-normalised density, got {d.normalization}")


def shannon_one(d: RadialDensity, spec: QuadSpec = MEASURE_SPEC) -> float:
    _require_unity(d)

    def f(x):
        return -FOUR_PI * x * x * xlogx(d(x))

    return integrate_radial(f, spec, scale=d.scale, reference=1.0).value


def shannon_two(d: PairRadialDensity, spec: QuadSpec = MEASURE_SPEC) -> float:
    _require_unity(d)

    def f(x, y):
        return -FOUR_PI_SQ * x * x * y * y * xlogx(d(x, y))

    return integrate_pair(f, spec, scale=d.scale, reference=1.0).value


def marginal(pair: PairRadialDensity, x: float, spec: QuadSpec = MEASURE_SPEC) -> float:
    """4 pi int y^2 pair(x, y) dy."""

    def f(y):
        return FOUR_PI * y * y * pair(np.full_like(y, x), y)

    return integrate_radial(f, spec, scale=pair.scale).value


def check_marginal(pair: PairRadialDensity, one: RadialDensity, rtol: float = 1e-6,
                   points=(0.2, 1.0, 3.0)) -> float:
    """Largest relative deviation of the pair marginal from ``one``; raises
    MarginalMismatch above ``rtol``. Points are in units of the grid scale."""
    n = pair.electrons
    # unity pair -> unity one-density; N(N-1) pair -> (N-1) * N-normalised one
    expected_factor = 1.0 if pair.normalization == "unity" else float(n - 1)
    worst = 0.0
    for t in points:
        x = t * one.scale
        want = expected_factor * float(one(np.array(x)))
        got = marginal(pair, x)
        worst = max(worst, abs(got - want) / abs(want))
    if worst > rtol:
        raise MarginalMismatch(f"pair marginal deviates from the one-density by {worst:.3g}")
    return worst


def mutual_information(pair: PairRadialDensity, one: RadialDensity, mode: str = "direct",
                       spec: QuadSpec = MEASURE_SPEC) -> float:
    """Mutual information between the two electron coordinates (nats).

    ``direct`` integrates the Kullback-Leibler form against the product of
    marginals; ``entropy_difference`` returns 2 S_one - S_pair.
    """
    _require_unity(pair)
    _require_unity(one)
    if pair.space != one.space:
        raise ValueError("pair and one-electron densities live in different spaces")
    check_marginal(pair, one)
    if mode == "entropy_difference":
        return 2.0 * shannon_one(one, spec) - shannon_two(pair, spec)
    if mode != "direct":
        raise ValueError(f"unknown mode {mode!r}")

    def f(x, y):
        g = pair(x, y)
        prod = one(x) * one(y)
        ok = g > DENSITY_FLOOR
        ratio = np.where(ok, g, 1.0) / np.where(ok, prod, 1.0)
        return FOUR_PI_SQ * x * x * y * y * np.where(ok, g * np.log(ratio), 0.0)

    return integrate_pair(f, spec, scale=pair.scale, reference=1.0).value


def reference_subtracted(value: float, reference: float) -> float:
    """I' = I - I(non-interacting reference)."""
    return value - reference


@dataclass(frozen=True)
class MeasureReport:
    z_nuclear: float
    kind: str
    S_rho_u: float
    S_pi_u: float
    S_Gamma_u: float
    S_Pi_u: float
    I_r_prime: float | None = None
    I_p_prime: float | None = None

    @property
    def entropy_sum_1e(self) -> float:
        return self.S_rho_u + self.S_pi_u

    @property
    def entropy_sum_2e(self) -> float:
        return self.S_Gamma_u + self.S_Pi_u

    @property
    def I_r(self) -> float:
        return 2.0 * self.S_rho_u - self.S_Gamma_u

    @property
    def I_p(self) -> float:
        return 2.0 * self.S_pi_u - self.S_Pi_u

    @property
    def S_cond_r(self) -> float:
        return self.S_Gamma_u - self.S_rho_u

    @property
    def S_cond_p(self) -> float:
        return self.S_Pi_u - self.S_pi_u

    def violations(self, tol: float = 1e-6) -> list[str]:
        bad = []
        if self.entropy_sum_1e < ONE_ELECTRON_BOUND - tol:
            bad.append("one-electron entropic uncertainty bound")
        if self.entropy_sum_2e < TWO_ELECTRON_BOUND - tol:
            bad.append("two-electron entropic uncertainty bound")
        if self.I_r < -tol or self.I_p < -tol or self.I_r + self.I_p < -tol:
            bad.append("mutual information non-negativity")
        return bad

    def as_dict(self) -> dict:
        out = asdict(self)
        for name in ("entropy_sum_1e", "entropy_sum_2e", "I_r", "I_p", "S_cond_r", "S_cond_p"):
            out[name] = getattr(self, name)
        return out


def measure_report(state: TwoElectronState, spec: QuadSpec = MEASURE_SPEC) -> MeasureReport:
    ents = {}
    for space in ("position", "momentum"):
        ents[space] = (
            shannon_one(to_unity(one_density(state, space)), spec),
            shannon_two(to_unity(pair_density(state, space)), spec),
        )
    (s_rho, s_gamma), (s_pi, s_pi2) = ents["position"], ents["momentum"]
    return MeasureReport(state.z_nuclear, StateKind(state.kind).value, s_rho, s_pi, s_gamma, s_pi2)


# -- local measures ----------------------------------------------------------

PROFILE_QUANTITIES = ("entropy_density_r", "entropy_density_p", "info_density_p",
                      "radial_momentum")


@dataclass(frozen=True)
class ProfileCurve:
    quantity: str
    abscissae: np.ndarray = field(repr=False)
    values: np.ndarray = field(repr=False)
    z_nuclear: float | None = None
    kind: str | None = None

    def __post_init__(self):
        if np.any(np.diff(self.abscissae) <= 0):
            raise ValueError("profile abscissae must be strictly increasing")

    def trapezoid(self) -> float:
        return float(np.trapezoid(self.values, self.abscissae))

    def peak(self) -> tuple[float, float]:
        i = int(np.argmax(self.values))
        return float(self.abscissae[i]), float(self.values[i])


def profile_grid(space: str, n: int = 400, lo: float = 1e-3, hi: float | None = None) -> np.ndarray:
    """Log-spaced figure grid: [1e-3, 20] bohr or [1e-3, 10] 1/bohr by default."""
    if hi is None:
        hi = 20.0 if space == "position" else 10.0
    return np.geomspace(lo, hi, n)


def entropy_density(d: RadialDensity, grid, z_nuclear=None, kind=None) -> ProfileCurve:
    """-4 pi x^2 d ln d on ``grid`` (integrates to the Shannon entropy of d)."""
    x = np.asarray(grid, dtype=float)
    quantity = "entropy_density_r" if d.space == "position" else "entropy_density_p"
    return ProfileCurve(quantity, x, -FOUR_PI * x * x * xlogx(d(x)), z_nuclear, kind)


def radial_momentum(state: TwoElectronState, grid) -> ProfileCurve:
    """I(p) = 4 pi p^2 pi(p), pi normalised to N."""
    p = np.asarray(grid, dtype=float)
    pi_n = one_density(state, "momentum")
    return ProfileCurve("radial_momentum", p, FOUR_PI * p * p * pi_n(p),
                        state.z_nuclear, StateKind(state.kind).value)


def _conditional_bracket(pair: PairRadialDensity, one: RadialDensity, p: np.ndarray,
                         spec: QuadSpec) -> np.ndarray:
    """int_0^inf q^2 Pi(p, q) [ln Pi(p, q) - ln pi(q)] dq for every p.

    The q-range is split at q = p, where a triplet pair density vanishes.
    """
    gx, gw = _gauss_legendre(spec.order)

    def integrand(pp, q):
        g = pair(pp, q)
        ok = g > DENSITY_FLOOR
        ratio = np.where(ok, g, 1.0) / np.where(ok, one(q), 1.0)
        return q * q * np.where(ok, g * np.log(ratio), 0.0)

    def rule(panels):
        h = 1.0 / panels
        t = (np.arange(panels)[:, None] * h + h * gx[None, :]).ravel()
        w = np.tile(h * gw, panels)
        pp = p[:, None]
        near = integrand(pp, pp * t[None, :]) @ w * p
        tail_grid = make_grid(panels, pair.scale, "algebraic", spec.order)
        far = integrand(pp, pp + tail_grid.nodes[None, :]) @ tail_grid.weights
        return near + far

    panels = spec.initial_panels
    prev = rule(panels)
    while 2 * panels <= spec.max_panels:
        panels *= 2
        cur = rule(panels)
        # one tolerance for the whole curve: the zero line of Pi off the
        # diagonal slows convergence where the bracket is near its largest
        if np.max(np.abs(cur - prev)) <= max(spec.abs_tol, spec.rel_tol * np.max(np.abs(cur))):
            return cur
        prev = cur
    raise NonConvergence("inner momentum integral did not converge")


def info_density_values(state: TwoElectronState, p, spec: QuadSpec = MEASURE_SPEC) -> np.ndarray:
    r"""Local momentum-space mutual information for N = 2,

        I_p(p) = ln(N/(N-1))/N I(p) + S_pi(p)/N
                 + 16 pi^2 p^2 / (N(N-1)) int q^2 Pi(p, q) [ln Pi(p, q) - ln pi(q)] dq

    with pi normalised to N and Pi to N(N-1).
    """
    p = np.atleast_1d(np.asarray(p, dtype=float))
    n = 2
    pi_n = one_density(state, "momentum")
    pair_n = pair_density(state, "momentum")
    radial = FOUR_PI * p * p * pi_n(p)
    s_local = -FOUR_PI * p * p * xlogx(pi_n(p))
    bracket = _conditional_bracket(pair_n, pi_n, p, spec)
    return (math.log(n / (n - 1)) / n * radial + s_local / n
            + 16.0 * math.pi**2 * p * p / (n * (n - 1)) * bracket)


def info_density_p(state: TwoElectronState, grid, spec: QuadSpec = MEASURE_SPEC) -> ProfileCurve:
    p = np.asarray(grid, dtype=float)
    return ProfileCurve("info_density_p", p, info_density_values(state, p, spec),
                        state.z_nuclear, StateKind(state.kind).value)


def integrated_info_density(state: TwoElectronState, spec: QuadSpec = MEASURE_SPEC) -> float:
    """int_0^inf I_p(p) dp by quadrature; equals I_p."""
    return integrate_radial(lambda p: info_density_values(state, p, spec), spec,
                            scale=grid_scale(state, "momentum"), reference=1.0).value
