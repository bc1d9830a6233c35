import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from helionics.densities import one_density
from helionics.errors import NoBoundState, NonConvergence
from helionics.hamiltonian import (
    energy,
    nelder_mead,
    optimize,
    repulsion_closed,
    repulsion_quadrature,
)
from helionics.quadrature import QuadSpec, integrate_radial
from helionics.wavefunctions import build_state

TIGHT = QuadSpec(rel_tol=1e-11, abs_tol=1e-14)


@pytest.mark.parametrize("zeta", [1.0, 27 / 16, 2.4])
def test_single_exponent_energy(zeta):
    e = energy(build_state("singlet", 2.0, (zeta, zeta)))
    assert e.total == pytest.approx(zeta**2 - 4 * zeta + 5 * zeta / 8, abs=1e-13)
    assert e.kinetic == pytest.approx(zeta**2, rel=1e-13)
    assert e.nuclear_attraction == pytest.approx(-4 * zeta, rel=1e-13)
    assert e.electron_repulsion == pytest.approx(5 * zeta / 8, rel=1e-13)


def test_single_exponent_minimum():
    e = energy(build_state("singlet", 2.0, (27 / 16, 27 / 16)))
    assert e.total == pytest.approx(-2.84765625, abs=1e-12)


@pytest.mark.parametrize("kind, params", [("singlet", (2.18, 1.19)), ("triplet", (1.99, 0.78)),
                                          ("triplet", (0.65, 1.02)), ("ni-triplet", None)])
def test_closed_form_repulsion_matches_quadrature(kind, params):
    s = build_state(kind, 2.0, params)
    assert repulsion_closed(s) == pytest.approx(repulsion_quadrature(s, TIGHT), rel=1e-10)
    e_quad = energy(s, repulsion="quadrature", spec=TIGHT)
    assert e_quad.total == pytest.approx(energy(s).total, abs=1e-10)


@given(a=st.floats(0.4, 6.0), b=st.floats(0.4, 6.0))
@settings(max_examples=50, deadline=None)
def test_singlet_energy_against_independent_formula(a, b):
    e = energy(build_state("singlet", 2.0, (a, b))).total
    assert e == pytest.approx(float(oracles.singlet_energy(a, b, 2.0)), rel=1e-11, abs=1e-11)


@given(a=st.floats(0.4, 6.0), b=st.floats(0.4, 6.0))
@settings(max_examples=30, deadline=None)
def test_energy_swap_invariance_singlet(a, b):
    e1 = energy(build_state("singlet", 2.0, (a, b))).total
    e2 = energy(build_state("singlet", 2.0, (b, a))).total
    assert e1 == pytest.approx(e2, rel=1e-13, abs=1e-13)


@pytest.mark.parametrize("z", [1.0, 2.0, 7.0, 30.0])
def test_ni_energy_without_repulsion(z):
    e = energy(build_state("ni-triplet", z), include_repulsion=False)
    assert e.total == pytest.approx(-z * z / 2 - z * z / 8, abs=1e-9)
    assert e.electron_repulsion == 0.0


def test_two_parameter_optimum_matches_grid_scan():
    (a, b), e_ref = oracles.singlet_grid_scan(2.0, (1.5, 3.0), (0.5, 1.8))
    res = optimize("singlet", 2.0, (2.2, 1.2))
    assert res.converged
    assert res.energy.total == pytest.approx(-2.8757, abs=5e-4)
    assert res.energy.total == pytest.approx(e_ref, abs=1e-9)
    assert res.params == pytest.approx((a, b), abs=1e-4)
    assert res.params == pytest.approx((2.18, 1.19), abs=0.01)
    assert res.energy.total < -(27 / 16) ** 2


@pytest.mark.parametrize("kind", ["singlet", "triplet"])
@pytest.mark.parametrize("z", [2.0, 5.0, 30.0])
def test_virial_at_optimum(kind, z):
    res = optimize(kind, z)
    e = res.energy
    assert e.virial_ratio() < 1e-5
    assert abs(2 * e.kinetic / e.potential + 1) < 1e-5


@pytest.mark.parametrize("kind, params", [("singlet", (2.18, 1.19)), ("triplet", (1.99, 0.78))])
def test_kinetic_equals_half_momentum_second_moment(kind, params):
    s = build_state(kind, 2.0, params)
    pi_n = one_density(s, "momentum")
    p2 = integrate_radial(lambda p: 4 * math.pi * p**4 * pi_n(p), TIGHT, scale=pi_n.scale).value
    # pi integrates to N = 2, so <p^2> summed over both electrons is the full integral
    assert energy(s).kinetic == pytest.approx(0.5 * p2, rel=1e-7)


def test_ni_triplet_is_not_optimised():
    res = optimize("ni-triplet", 2.0, (3.0, 3.0))
    assert res.params == (2.0, 1.0)
    assert res.evaluations == 0


def test_triplet_global_minimum_at_z2():
    res = optimize("triplet", 2.0)
    assert res.energy.total == pytest.approx(-2.16663987525, abs=1e-8)
    assert res.params == pytest.approx((1.99363, 0.77547), abs=1e-4)


def test_triplet_approaches_unscreened_exponents():
    ratios = []
    for z in (10.0, 20.0, 30.0):
        p = optimize("triplet", z).params
        ratios.append((p[0] / z, p[1] / (z / 2)))
    inner = [abs(r[0] - 1) for r in ratios]
    outer = [abs(r[1] - 1) for r in ratios]
    assert inner[-1] < 1e-3
    assert outer[0] > outer[1] > outer[2]
    assert outer[-1] < 0.015


def test_z1_singlet_is_weakly_bound():
    # the two-exponent family binds H- just below the hydrogen threshold
    res = optimize("singlet", 1.0)
    assert res.energy.total == pytest.approx(-0.513303, abs=1e-6)
    assert res.energy.total < -0.5


@pytest.mark.parametrize("z", [0.9, 0.8, 0.7])
def test_no_bound_state_below_threshold(z):
    with pytest.raises(NoBoundState):
        optimize("singlet", z)


def test_nonconvergence_reported():
    with pytest.raises(NonConvergence):
        optimize("singlet", 2.0, (2.2, 1.2), max_evals=10)


def test_nelder_mead_rosenbrock():
    rosen = lambda v: (1 - v[0]) ** 2 + 100 * (v[1] - v[0] ** 2) ** 2
    res = nelder_mead(rosen, [-1.2, 1.0], positive=False, max_evals=5000, xtol=1e-9, ftol=1e-14)
    assert res.converged
    np.testing.assert_allclose(res.x, [1.0, 1.0], atol=1e-6)


def test_nelder_mead_stays_positive():
    seen = []

    def f(v):
        seen.append(np.array(v))
        return (v[0] + 1) ** 2 + (v[1] - 2) ** 2

    res = nelder_mead(f, [0.5, 1.0])
    assert all(np.all(v > 0) for v in seen)
    assert res.x[0] == pytest.approx(0.0, abs=1e-6)


def test_triplet_parameter_swap_is_not_a_symmetry():
    # the second factor carries a radial node, so (Z1, Z2) -> (Z2, Z1) is a different state
    e1 = energy(build_state("triplet", 2.0, (1.99, 0.78))).total
    e2 = energy(build_state("triplet", 2.0, (0.78, 1.99))).total
    assert abs(e1 - e2) > 0.1
