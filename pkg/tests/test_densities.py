import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from helionics.densities import (
    hydrogenic_density,
    one_density,
    pair_density,
    to_unity,
)
from helionics.errors import MarginalMismatch, NormalizationError
from helionics.measures import check_marginal, marginal
from helionics.quadrature import QuadSpec, integrate_pair, integrate_radial
from helionics.wavefunctions import build_state

SPEC = QuadSpec(rel_tol=1e-11, abs_tol=1e-14)
FOUR_PI = 4 * math.pi

STATES = {
    "singlet": build_state("singlet", 2.0, (2.1832, 1.1885)),
    "triplet": build_state("triplet", 2.0, (1.9936, 0.7755)),
    "ni-triplet": build_state("ni-triplet", 2.0),
    "triplet-z10": build_state("triplet", 10.0, (10.0, 4.8)),
}


def one_total(d):
    return integrate_radial(lambda x: FOUR_PI * x * x * d(x), SPEC, scale=d.scale).value


def pair_total(d):
    return integrate_pair(lambda x, y: FOUR_PI**2 * x * x * y * y * d(x, y), SPEC,
                          scale=d.scale).value


@pytest.mark.parametrize("name", STATES)
@pytest.mark.parametrize("space", ["position", "momentum"])
def test_normalizations(name, space):
    s = STATES[name]
    rho, gamma = one_density(s, space), pair_density(s, space)
    assert one_total(rho) == pytest.approx(2.0, rel=1e-8)
    assert pair_total(gamma) == pytest.approx(2.0, rel=1e-8)
    assert one_total(to_unity(rho)) == pytest.approx(1.0, rel=1e-8)
    assert pair_total(to_unity(gamma)) == pytest.approx(1.0, rel=1e-8)


def test_product_state_density():
    zeta = 1.6
    s = build_state("singlet", 2.0, (zeta, zeta))
    rho, gamma = one_density(s), pair_density(s)
    r = np.linspace(0.0, 5.0, 11)
    np.testing.assert_allclose(rho(r), 2 * zeta**3 / math.pi * np.exp(-2 * zeta * r), rtol=1e-13)
    x, y = np.meshgrid(r, r)
    np.testing.assert_allclose(gamma(x, y), rho(x) * rho(y) / 2, rtol=1e-13)


@pytest.mark.parametrize("name", ["triplet", "ni-triplet"])
@pytest.mark.parametrize("space", ["position", "momentum"])
def test_triplet_pair_diagonal_vanishes(name, space):
    x = np.geomspace(1e-3, 20, 50)
    assert np.all(pair_density(STATES[name], space)(x, x) == 0.0)


@pytest.mark.parametrize("name", STATES)
@pytest.mark.parametrize("space", ["position", "momentum"])
def test_marginal_consistency(name, space):
    s = STATES[name]
    rho, gamma = one_density(s, space), pair_density(s, space)
    for t in (0.2, 1.0, 3.0):
        x = t * rho.scale
        # N(N-1)-normalised pair integrates to (N-1) rho
        assert marginal(gamma, x, SPEC) == pytest.approx(float(rho(x)), rel=1e-8)
    assert check_marginal(to_unity(gamma), to_unity(rho), rtol=1e-8) <= 1e-8


def test_ni_density_at_origin():
    # 1s(Z) and 2s(Z/2) are orthogonal, so rho(0) = |1s(0)|^2 + |2s(0)|^2
    z = 2.0
    rho = one_density(STATES["ni-triplet"])
    one_s = z**3 / math.pi
    two_s = (z / 2) ** 3 / math.pi  # <(1 - zeta r)^2 e^{-2 zeta r}> = pi / zeta^3
    assert float(rho(0.0)) == pytest.approx(one_s + two_s, rel=1e-12)


def test_marginal_mismatch_detected():
    s = STATES["triplet"]
    other = to_unity(one_density(STATES["singlet"]))
    with pytest.raises(MarginalMismatch):
        check_marginal(to_unity(pair_density(s)), other)


def test_to_unity_refuses_second_application():
    d = to_unity(one_density(STATES["singlet"]))
    with pytest.raises(NormalizationError):
        to_unity(d)
    with pytest.raises(NormalizationError):
        to_unity(to_unity(pair_density(STATES["singlet"])))


def test_to_unity_halves_profile():
    d = one_density(STATES["triplet"], "momentum")
    x = np.array([0.3, 1.0])
    np.testing.assert_allclose(to_unity(d)(x), d(x) / 2, rtol=1e-15)


@pytest.mark.parametrize("z", [1.0, 2.5])
@pytest.mark.parametrize("space", ["position", "momentum"])
def test_hydrogenic_normalization(z, space):
    d = hydrogenic_density(z, space)
    assert one_total(d) == pytest.approx(1.0, rel=1e-9)


def test_unknown_space():
    with pytest.raises(ValueError):
        one_density(STATES["singlet"], "phase")


@given(z1=st.floats(0.5, 8.0), z2=st.floats(0.5, 8.0), x=st.floats(0, 15), y=st.floats(0, 15))
@settings(max_examples=60, deadline=None)
def test_densities_nonnegative_and_symmetric(z1, z2, x, y):
    kind = "triplet" if z1 != z2 else "singlet"
    s = build_state(kind, 2.0, (z1, z2))
    for space in ("position", "momentum"):
        assert one_density(s, space)(x) >= 0
        g = pair_density(s, space)
        assert g(x, y) >= 0
        assert g(x, y) == g(y, x)
