import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from helionics.densities import hydrogenic_density, one_density, pair_density, to_unity
from helionics.errors import NotUnityNormalized
from helionics.hamiltonian import optimize
from helionics.measures import (
    ONE_ELECTRON_BOUND,
    TWO_ELECTRON_BOUND,
    ProfileCurve,
    entropy_density,
    info_density_p,
    integrated_info_density,
    measure_report,
    mutual_information,
    profile_grid,
    radial_momentum,
    reference_subtracted,
    shannon_one,
    shannon_two,
)
from helionics.quadrature import make_grid
from helionics.wavefunctions import amplitude, build_state

S_RHO_H = 3 + math.log(math.pi)


def test_hydrogenic_position_entropy():
    d = hydrogenic_density(1.0, "position")
    assert shannon_one(d) == pytest.approx(S_RHO_H, abs=1e-9)
    assert shannon_one(d) == pytest.approx(oracles.entropy_quad(lambda r: float(d(r))), abs=1e-9)


def test_hydrogenic_momentum_entropy():
    value = shannon_one(hydrogenic_density(1.0, "momentum"))
    assert value == pytest.approx(2.42186, abs=5e-6)
    assert value == pytest.approx(oracles.hydrogen_momentum_entropy(), abs=1e-9)


@given(z=st.floats(0.3, 40.0))
@settings(max_examples=30, deadline=None)
def test_hydrogenic_scaling(z):
    s_rho = shannon_one(hydrogenic_density(z, "position"))
    s_pi = shannon_one(hydrogenic_density(z, "momentum"))
    assert s_rho - S_RHO_H == pytest.approx(-3 * math.log(z), abs=1e-8)
    assert s_rho + s_pi == pytest.approx(S_RHO_H + 2.4218623411651867, abs=1e-8)


@pytest.mark.parametrize("zeta", [0.8, 1.7, 6.0])
def test_product_state_is_uncorrelated(zeta):
    s = build_state("singlet", 2.0, (zeta, zeta))
    for space in ("position", "momentum"):
        one = to_unity(one_density(s, space))
        pair = to_unity(pair_density(s, space))
        assert shannon_two(pair) == pytest.approx(2 * shannon_one(one), abs=1e-9)
        for mode in ("direct", "entropy_difference"):
            assert mutual_information(pair, one, mode) == pytest.approx(0.0, abs=1e-9)


def test_ni_pair_entropy_against_scipy():
    s = build_state("ni-triplet", 1.0)
    ref = oracles.pair_entropy_quad(lambda x, y: float(amplitude(s, x, y)) ** 2, scale=2.0)
    assert measure_report(s).S_Gamma_u == pytest.approx(ref, abs=1e-8)


def test_ni_scaling_is_exact():
    base = measure_report(build_state("ni-triplet", 1.0))
    for z in (2.0, 5.5, 30.0):
        r = measure_report(build_state("ni-triplet", z))
        lnz = math.log(z)
        assert r.S_Gamma_u - base.S_Gamma_u == pytest.approx(-6 * lnz, abs=1e-8)
        assert r.S_Pi_u - base.S_Pi_u == pytest.approx(6 * lnz, abs=1e-8)
        assert r.entropy_sum_1e == pytest.approx(base.entropy_sum_1e, abs=1e-8)
        assert r.I_r == pytest.approx(base.I_r, abs=1e-8)
        assert r.I_p == pytest.approx(base.I_p, abs=1e-8)


def test_ni_mutual_information_values():
    r = measure_report(build_state("ni-triplet", 2.0))
    assert r.I_r == pytest.approx(0.50, abs=0.005)
    assert r.I_p == pytest.approx(0.51, abs=0.005)


def _state(kind, z):
    return build_state("ni-triplet", z) if kind == "ni-triplet" else optimize(kind, z).state()


@pytest.mark.parametrize("kind", ["singlet", "triplet", "ni-triplet"])
@pytest.mark.parametrize("z", [2.0, 3.0, 5.0, 10.0, 30.0])
def test_mutual_information_modes_agree(kind, z):
    s = _state(kind, z)
    for space in ("position", "momentum"):
        one = to_unity(one_density(s, space))
        pair = to_unity(pair_density(s, space))
        direct = mutual_information(pair, one, "direct")
        diff = mutual_information(pair, one, "entropy_difference")
        assert abs(direct - diff) <= 1e-5
        assert direct >= 0


@pytest.mark.parametrize("kind", ["singlet", "triplet"])
@pytest.mark.parametrize("z", [2.0, 10.0, 30.0])
def test_entropic_bounds(kind, z):
    r = measure_report(_state(kind, z))
    assert r.entropy_sum_1e >= ONE_ELECTRON_BOUND - 1e-6
    assert r.entropy_sum_2e >= TWO_ELECTRON_BOUND - 1e-6
    assert r.violations() == []


def test_bound_constants():
    assert ONE_ELECTRON_BOUND == pytest.approx(6.43419, abs=5e-6)
    assert TWO_ELECTRON_BOUND == pytest.approx(12.86837, abs=1e-5)


def test_triplet_z2_correlation():
    r = measure_report(_state("triplet", 2.0))
    ni = measure_report(build_state("ni-triplet", 2.0))
    assert r.I_r > r.I_p
    assert r.I_r > ni.I_r and r.I_p > ni.I_p
    assert reference_subtracted(r.I_r, ni.I_r) > reference_subtracted(r.I_p, ni.I_p) > 0


def test_reference_subtracted():
    assert reference_subtracted(0.5, 0.5) == 0.0


def test_unity_required():
    s = build_state("ni-triplet", 2.0)
    with pytest.raises(NotUnityNormalized):
        shannon_one(one_density(s))
    with pytest.raises(NotUnityNormalized):
        shannon_two(pair_density(s))
    with pytest.raises(NotUnityNormalized):
        mutual_information(pair_density(s), to_unity(one_density(s)))


def test_report_dict():
    d = measure_report(build_state("ni-triplet", 2.0)).as_dict()
    for key in ("S_rho_u", "S_pi_u", "S_Gamma_u", "S_Pi_u", "I_r", "I_p", "entropy_sum_1e",
                "entropy_sum_2e", "S_cond_r", "S_cond_p"):
        assert key in d
    assert d["S_cond_r"] == pytest.approx(d["S_Gamma_u"] - d["S_rho_u"])


# -- local measures ----------------------------------------------------------

@pytest.mark.parametrize("kind", ["singlet", "triplet"])
@pytest.mark.parametrize("space", ["position", "momentum"])
def test_entropy_density_integrates_on_quadrature_grid(kind, space):
    s = _state(kind, 2.0)
    d = to_unity(one_density(s, space))
    grid = make_grid(256, d.scale)
    curve = entropy_density(d, grid.nodes)
    assert grid.integrate(curve.values) == pytest.approx(shannon_one(d), rel=1e-6)


@pytest.mark.parametrize("space", ["position", "momentum"])
def test_entropy_density_trapezoid_on_dense_grid(space):
    s = _state("triplet", 3.0)
    d = to_unity(one_density(s, space))
    grid = np.geomspace(1e-5, 60 * d.scale, 4000)
    assert entropy_density(d, grid).trapezoid() == pytest.approx(shannon_one(d), abs=1e-4)


def test_hydrogenic_entropy_density_nonnegative():
    d = hydrogenic_density(1.0, "position")
    r = np.concatenate([[0.0], profile_grid("position"), np.linspace(0, 40, 2001)])
    r = np.unique(r)
    assert np.all(entropy_density(d, r).values >= 0)


def test_radial_momentum_counts_electrons():
    s = _state("triplet", 2.0)
    grid = make_grid(128, s.zeta_min)
    assert grid.integrate(radial_momentum(s, grid.nodes).values) == pytest.approx(2.0, rel=1e-9)


@pytest.mark.parametrize("kind, z", [("triplet", 2.0), ("triplet", 4.0), ("singlet", 2.0),
                                     ("ni-triplet", 3.0)])
def test_info_density_integrates_to_mutual_information(kind, z):
    s = _state(kind, z)
    assert integrated_info_density(s) == pytest.approx(measure_report(s).I_p, rel=1e-4, abs=1e-9)


def test_info_density_vanishes_for_product_state():
    s = build_state("singlet", 2.0, (1.7, 1.7))
    curve = info_density_p(s, profile_grid("momentum", 60))
    np.testing.assert_allclose(curve.values, 0.0, atol=1e-10)


def test_info_density_peak_ordering():
    peaks = [info_density_p(_state("triplet", z), profile_grid("momentum")).peak()
             for z in (2.0, 3.0, 4.0)]
    values = [v for _, v in peaks]
    assert values[0] > values[1] > values[2]
    assert all(p < 1.5 for p, _ in peaks)


def test_profile_curve_validation():
    with pytest.raises(ValueError):
        ProfileCurve("x", np.array([1.0, 1.0]), np.array([0.0, 0.0]))
    g = profile_grid("momentum")
    assert g[0] == pytest.approx(1e-3) and g[-1] == pytest.approx(10.0) and len(g) == 400
    assert profile_grid("position")[-1] == pytest.approx(20.0)
