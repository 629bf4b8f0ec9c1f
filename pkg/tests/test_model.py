import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from drslip import (MathieuParams, ModelParams, Pitching, VerticalSinusoid,
                    axial_force, equivalent_vertical_sinusoid, surface_accel,
                    surface_height, t_of_tau, tau_of_t, to_mathieu)

REF = ModelParams(z0=0.42)


def test_vertical_height_quarter_period():
    m = VerticalSinusoid(amplitude=0.07, omega=math.pi)
    assert surface_height(m, 0.5) == pytest.approx(0.07, rel=1e-12)
    assert surface_height(VerticalSinusoid(0.10, math.pi), 0.0) == 0.0


def test_pitching_height_direct_formula():
    m = Pitching(pitch_amplitude=math.radians(5.0), pitch_frequency=0.5,
                 reference_radius=1.0)
    expected = 1.0 * math.sin(math.radians(5.0) * math.sin(math.pi * 0.5))
    assert surface_height(m, 0.5) == pytest.approx(expected, rel=1e-12)
    assert expected == pytest.approx(0.0872, abs=5e-5)


def test_vertical_accel_values():
    m = VerticalSinusoid(amplitude=0.07, omega=math.pi)
    assert surface_accel(m, 0.5) == pytest.approx(-0.07 * math.pi ** 2, rel=1e-12)
    assert surface_accel(m, 0.0) == 0.0


@pytest.mark.parametrize("motion", [
    VerticalSinusoid(amplitude=0.07, omega=math.pi),
    VerticalSinusoid(amplitude=0.35, omega=2.2, phase=0.4),
    Pitching(pitch_amplitude=math.radians(5.0), pitch_frequency=0.5,
             reference_radius=1.0),
    Pitching(pitch_amplitude=math.radians(12.0), pitch_frequency=0.37,
             reference_radius=0.8),
])
def test_accel_matches_central_differences(motion):
    # independent oracle: second central difference of the height. At
    # h = 1e-5 the quotient is cancellation-limited near eps*|z|/h^2
    # (a few 1e-6 absolute); any formula error would show at 1e-1 scale.
    h = 1e-5
    for i in range(25):
        t = 0.08 * i + 0.013
        fd = (surface_height(motion, t + h) - 2.0 * surface_height(motion, t)
              + surface_height(motion, t - h)) / (h * h)
        ana = surface_accel(motion, t)
        assert ana == pytest.approx(fd, rel=1e-4, abs=1e-5)


def test_equivalent_sinusoid_amplitude_and_frequency():
    eq = equivalent_vertical_sinusoid(
        Pitching(math.radians(5.0), 0.5, reference_radius=1.0))
    assert eq.amplitude == pytest.approx(math.sin(math.radians(5.0)), rel=1e-12)
    assert eq.omega == pytest.approx(math.pi, rel=1e-12)

    eq2 = equivalent_vertical_sinusoid(
        Pitching(math.radians(5.0), 0.4, reference_radius=1.0))
    assert eq2.omega == pytest.approx(0.8 * math.pi, rel=1e-12)

    eq3 = equivalent_vertical_sinusoid(Pitching(0.0, 0.5, 1.0))
    assert eq3.amplitude == 0.0


def test_equivalent_sinusoid_rejects_large_pitch():
    with pytest.raises(ValueError):
        equivalent_vertical_sinusoid(Pitching(math.radians(15.0), 0.5, 1.0))


def test_to_mathieu_reference_values():
    mp = to_mathieu(REF, VerticalSinusoid(amplitude=0.07, omega=math.pi))
    assert mp.c0 == pytest.approx(-4.0 * 9.81 / (math.pi ** 2 * 0.42), rel=1e-14)
    assert mp.c0 == pytest.approx(-9.4663, abs=5e-5)
    assert mp.c1 == pytest.approx(1.0 / 3.0, rel=1e-14)


def test_to_mathieu_classical_limit_and_scaling():
    mp0 = to_mathieu(REF, VerticalSinusoid(amplitude=0.0, omega=math.pi))
    assert mp0.c1 == 0.0
    mp1 = to_mathieu(ModelParams(z0=0.42), VerticalSinusoid(0.07, 2.0))
    mp2 = to_mathieu(ModelParams(z0=0.84), VerticalSinusoid(0.07, 2.0))
    assert mp2.c1 == pytest.approx(mp1.c1 / 2.0, rel=1e-14)
    assert abs(mp2.c0) == pytest.approx(abs(mp1.c0) / 2.0, rel=1e-14)


@given(st.floats(0.0, 1.0), st.floats(0.2, 10.0), st.floats(0.1, 2.0))
def test_to_mathieu_sign_invariants(amplitude, omega, z0):
    mp = to_mathieu(ModelParams(z0=z0), VerticalSinusoid(amplitude, omega))
    assert mp.c0 < 0.0
    assert (mp.c1 == 0.0) == (amplitude == 0.0)


def test_axial_force_static_and_reference():
    m = VerticalSinusoid(amplitude=0.0, omega=1.0)
    assert axial_force(REF, m, (0.0, 0.0), 0.0) == pytest.approx(
        REF.m * REF.g, rel=1e-14)
    moving = VerticalSinusoid(amplitude=0.07, omega=math.pi)
    f = axial_force(REF, moving, (0.0, 0.0), 0.5)
    assert f == pytest.approx(25.0 * (9.81 - 0.07 * math.pi ** 2), rel=1e-12)
    assert f == pytest.approx(227.98, abs=0.01)


@given(st.floats(-0.5, 0.5), st.floats(-0.5, 0.5), st.floats(0.0, 2.0))
def test_axial_force_positive_above_free_fall(x, y, t):
    moving = VerticalSinusoid(amplitude=0.07, omega=math.pi)
    # peak downward surface acceleration 0.07 pi^2 << g
    assert axial_force(REF, moving, (x, y), t) > 0.0


@given(st.floats(-5.0, 5.0), st.floats(0.3, 8.0), st.floats(-2.0, 2.0))
def test_time_mapping_round_trip(t, omega, phase):
    mp = MathieuParams(c0=-5.0, c1=0.1, omega=omega, phase=phase)
    assert t_of_tau(mp, tau_of_t(mp, t)) == pytest.approx(t, abs=1e-12)


def test_invariant_validation():
    with pytest.raises(ValueError):
        ModelParams(z0=-0.1)
    with pytest.raises(ValueError):
        VerticalSinusoid(amplitude=-0.01, omega=1.0)
    with pytest.raises(ValueError):
        VerticalSinusoid(amplitude=0.1, omega=0.0)
    with pytest.raises(ValueError):
        MathieuParams(c0=0.5, c1=0.1, omega=1.0)
    with pytest.raises(ValueError):
        Pitching(math.radians(95.0), 0.5, 1.0)
