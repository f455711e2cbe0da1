"""Cusped-domain geometry: profile, area, scale function, involution."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diskspec import (
    CuspDomain,
    DomainError,
    area_D,
    g_profile,
    in_domain,
    involution,
    scale_function,
)
from oracles import area_midpoint, profile_height

# Frozen closed-form values.
G_AT_QUARTER_LEFT = 0.45330987784454152
G_SECOND_DERIV_HALF = 0.36755259694786135
CUSP_CONSTANT = 0.30010543871903539


def test_profile_endpoints_and_center():
    assert g_profile(-1.0) == pytest.approx(1.0, abs=1e-15)
    assert g_profile(1.0) == pytest.approx(0.0, abs=1e-15)
    assert g_profile(0.0) == pytest.approx(1.0 / math.pi, abs=1e-16)
    assert g_profile(-0.25) == pytest.approx(G_AT_QUARTER_LEFT, abs=1e-15)


@settings(max_examples=80, deadline=None)
@given(st.floats(-0.999, 0.999))
def test_profile_matches_independent_form(x):
    # The oracle's 1 - x*x form loses digits within ~1e-3 of the cusps.
    assert g_profile(x) == pytest.approx(profile_height(x), abs=1e-14)


@settings(max_examples=60, deadline=None)
@given(st.floats(-1.0, 1.0))
def test_profile_reflection_identity(x):
    # g(-x) = g(x) + x ties the two cusps together.
    assert g_profile(-x) == pytest.approx(g_profile(x) + x, abs=2e-15)


def test_profile_domain_guard():
    with pytest.raises(DomainError):
        g_profile(1.0000001)
    with pytest.raises(DomainError):
        g_profile(-1.1)
    with pytest.raises(DomainError):
        g_profile(math.nan)


def test_profile_convexity_and_curvature():
    h = 1e-4
    xs = np.linspace(-0.9, 0.9, 19)
    second = (g_profile(xs + h) - 2.0 * g_profile(xs) + g_profile(xs - h)) / h**2
    assert np.all(second > 0.0)
    mid = (g_profile(0.5 + h) - 2.0 * g_profile(0.5) + g_profile(0.5 - h)) / h**2
    assert mid == pytest.approx(G_SECOND_DERIV_HALF, rel=1e-6)


def test_cusp_power_law():
    # g(1 - h) ~ (2 sqrt 2 / 3 pi) h^(3/2) at the right cusp.
    for h in (1e-3, 1e-4, 1e-5):
        ratio = g_profile(1.0 - h) / h**1.5
        assert ratio == pytest.approx(CUSP_CONSTANT, rel=2e-3 + 3.0 * h)


def test_area_quadrature_vs_exact():
    # Integration by parts gives exactly 1/4.
    assert area_D() == pytest.approx(0.25, abs=1e-9)
    # Halving the tolerance must not move the value materially.
    assert abs(area_D(1e-11) - area_D(5e-12)) <= 1e-9


def test_area_against_midpoint_oracle():
    assert area_D() == pytest.approx(area_midpoint(), abs=1e-4)


def test_area_validation():
    with pytest.raises(DomainError):
        area_D(abs_tol=0.0)


def test_scale_function_axis_and_profile_values():
    assert scale_function(0.0, 1.0) == pytest.approx(math.pi, abs=1e-12)
    assert scale_function(0.0, 2.0) == pytest.approx(2.0 * math.pi, abs=1e-12)
    for x in (-0.75, -0.25, 0.2, 0.6, 0.95):
        assert scale_function(x, g_profile(x)) == pytest.approx(1.0, abs=1e-10)


@settings(max_examples=60, deadline=None)
@given(
    st.floats(-0.95, 0.95),
    st.floats(0.05, 3.0),
    st.floats(0.1, 20.0),
)
def test_scale_function_homogeneity(x, dy, lam):
    y = max(0.0, -x) + dy
    base = scale_function(x, y)
    scaled = scale_function(lam * x, lam * y)
    assert scaled == pytest.approx(lam * base, rel=1e-9)


@settings(max_examples=60, deadline=None)
@given(st.floats(-0.95, 0.95), st.floats(0.05, 3.0), st.floats(0.3, 40.0))
def test_scale_function_inverts_dilated_profile(x, dy, mu):
    # F(x, mu g(x/mu)) = mu for |x| < mu.
    del dy
    val = scale_function(x * mu, mu * g_profile(x))
    assert val == pytest.approx(mu, rel=1e-10)


def test_scale_function_domain_guard():
    with pytest.raises(DomainError):
        scale_function(0.5, 0.0)
    with pytest.raises(DomainError):
        scale_function(-1.0, 0.5)
    with pytest.raises(DomainError):
        scale_function(0.0, -2.0)
    with pytest.raises(DomainError):
        scale_function(math.inf, 1.0)


@settings(max_examples=60, deadline=None)
@given(st.integers(-40, 40), st.integers(1, 40))
def test_involution_exact_on_lattice(n, k):
    p = (float(n), k - 0.25)
    q = involution(p)
    assert q == (-float(n), (k + n) - 0.25)
    assert involution(q) == p


def test_involution_float_roundtrip():
    p = (0.37, 0.81)
    q = involution(involution(p))
    assert q[0] == pytest.approx(p[0], abs=1e-15)
    assert q[1] == pytest.approx(p[1], abs=1e-15)


@settings(max_examples=80, deadline=None)
@given(st.integers(-25, 25), st.integers(1, 30), st.floats(2.0, 25.0))
def test_involution_preserves_membership(n, k, mu):
    p = (float(n), k - 0.25)
    assert in_domain(mu, p) == in_domain(mu, involution(p))


def test_in_domain_examples():
    # At scale 1 the center column reaches 1/pi ~ 0.318.
    assert not in_domain(1.0, (0.0, 0.5))
    assert in_domain(1.0, (0.0, 0.3))
    # Boundary points count: the domain is closed.
    assert in_domain(1.0, (1.0, 0.0))
    assert in_domain(1.0, (0.0, 1.0 / math.pi))
    assert in_domain(1.0, (-1.0, 1.0))
    assert not in_domain(1.0, (-1.0, 1.0000001))
    assert not in_domain(1.0, (1.2, 0.0))


def test_cusp_domain_accessors():
    dom = CuspDomain(4.0)
    assert dom.upper(0.0) == pytest.approx(4.0 / math.pi, abs=1e-15)
    assert dom.lower(-2.0) == 2.0
    assert dom.lower(3.0) == 0.0
    assert dom.contains(1.0, 0.5)
    with pytest.raises(DomainError):
        CuspDomain(0.0)
    with pytest.raises(DomainError):
        CuspDomain(math.inf)
