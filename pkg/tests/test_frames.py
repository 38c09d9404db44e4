import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from gliderdr.errors import GimbalProximityError
from gliderdr.frames import (
    BodyVelocityRel,
    EulerAngles,
    NedPosition,
    dr_step,
    euler_rate_matrix,
    heading_error,
    positioning_error,
    rot_body_to_ned,
    skew,
    wrap_angle,
)

SAFE_PITCH = math.pi / 2 - 0.0873 - 1e-6


def _elementary_rotation_product(phi, theta, psi):
    # Independent oracle: compose the three elementary rotations explicitly.
    rx = np.array([
        [1, 0, 0],
        [0, math.cos(phi), -math.sin(phi)],
        [0, math.sin(phi), math.cos(phi)],
    ])
    ry = np.array([
        [math.cos(theta), 0, math.sin(theta)],
        [0, 1, 0],
        [-math.sin(theta), 0, math.cos(theta)],
    ])
    rz = np.array([
        [math.cos(psi), -math.sin(psi), 0],
        [math.sin(psi), math.cos(psi), 0],
        [0, 0, 1],
    ])
    return rz @ ry @ rx


class TestSkew:
    def test_zero_vector(self):
        assert np.array_equal(skew([0, 0, 0]), np.zeros((3, 3)))

    def test_matches_cross_product(self):
        # S([1,2,3]) @ [4,5,6] = [1,2,3] x [4,5,6] = [-3, 6, -3]
        out = skew([1, 2, 3]) @ np.array([4, 5, 6])
        np.testing.assert_allclose(out, [-3.0, 6.0, -3.0], atol=0)

    def test_antisymmetric(self):
        s = skew([0.1, -0.2, 0.3])
        assert np.array_equal(s + s.T, np.zeros((3, 3)))

    def test_cross_product_sweep(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            v, y = rng.normal(size=3), rng.normal(size=3)
            np.testing.assert_allclose(skew(v) @ y, np.cross(v, y),
                                       rtol=1e-14, atol=1e-14)


class TestRotation:
    def test_zero_attitude_is_identity(self):
        r = rot_body_to_ned(EulerAngles(0, 0, 0))
        np.testing.assert_allclose(r, np.eye(3), atol=1e-15)

    def test_pure_yaw_maps_surge_to_east(self):
        r = rot_body_to_ned(EulerAngles(0, 0, math.pi / 2))
        np.testing.assert_allclose(r @ [1, 0, 0], [0, 1, 0], atol=1e-15)

    def test_matches_elementary_composition(self):
        r = rot_body_to_ned(EulerAngles(0.1, 0.2, 0.3))
        np.testing.assert_allclose(
            r, _elementary_rotation_product(0.1, 0.2, 0.3), atol=1e-14)
        assert abs(np.linalg.det(r) - 1.0) < 1e-12

    def test_orthonormal_over_random_attitudes(self):
        rng = np.random.default_rng(11)
        for _ in range(500):
            att = EulerAngles(rng.uniform(-math.pi, math.pi),
                              rng.uniform(-SAFE_PITCH, SAFE_PITCH),
                              rng.uniform(-math.pi, math.pi))
            r = rot_body_to_ned(att)
            assert np.abs(r.T @ r - np.eye(3)).max() < 1e-12
            assert abs(np.linalg.det(r) - 1.0) < 1e-12

    def test_gimbal_guard(self):
        with pytest.raises(GimbalProximityError):
            EulerAngles(0, math.pi / 2 - 0.01, 0)


class TestEulerRateMatrix:
    def test_level_attitude_is_identity(self):
        t = euler_rate_matrix(EulerAngles(0, 0, 1.234))
        np.testing.assert_allclose(t, np.eye(3), atol=1e-15)

    def test_closed_form_entries(self):
        phi, theta = 0.1, 0.2
        t = euler_rate_matrix(EulerAngles(phi, theta, 0))
        sph, cph = math.sin(phi), math.cos(phi)
        tth, cth = math.tan(theta), math.cos(theta)
        expected = np.array([
            [1, sph * tth, cph * tth],
            [0, cph, -sph],
            [0, sph / cth, cph / cth],
        ])
        np.testing.assert_allclose(t, expected, atol=1e-15)

    @pytest.mark.parametrize("sign", [1.0, -1.0])
    def test_guard_near_singularity(self, sign):
        with pytest.raises(GimbalProximityError):
            EulerAngles(0, sign * (math.pi / 2 - 0.01), 0)


class TestDrStep:
    def test_straight_north(self):
        chi = dr_step(NedPosition(0, 0, 0), EulerAngles(0, 0, 0),
                      BodyVelocityRel(1, 0, 0), 0.5)
        assert chi == NedPosition(0.5, 0.0, 0.0)

    def test_pure_yaw_moves_east(self):
        chi = dr_step(NedPosition(0, 0, 0), EulerAngles(0, 0, math.pi / 2),
                      BodyVelocityRel(1, 0, 0), 1.0)
        assert abs(chi.north) < 1e-12
        assert abs(chi.east - 1.0) < 1e-12

    def test_constant_input_matches_closed_form_line(self):
        att = EulerAngles(0.05, -0.3, 2.0)
        vel = BodyVelocityRel(0.7, -0.05, 0.2)
        dt = 0.5
        chi = NedPosition(10.0, -4.0, 25.0)
        for _ in range(100):
            chi = dr_step(chi, att, vel, dt)
        expected = (np.array([10.0, -4.0, 25.0])
                    + rot_body_to_ned(att) @ vel.as_array() * (100 * dt))
        np.testing.assert_allclose(chi.as_array(), expected, rtol=1e-9)

    def test_zero_velocity_is_identity(self):
        chi = NedPosition(3.25, -1.5, 12.0)
        out = dr_step(chi, EulerAngles(0.2, 0.1, -1.0),
                      BodyVelocityRel(0, 0, 0), 0.5)
        assert out is chi

    def test_rejects_bad_dt(self):
        with pytest.raises(ValueError):
            dr_step(NedPosition(0, 0, 0), EulerAngles(0, 0, 0),
                    BodyVelocityRel(1, 0, 0), 0.0)


class TestPositioningError:
    def test_identity(self):
        p = NedPosition(100, 50, 5)
        err = positioning_error(p, p)
        assert err.n_error == 0.0 and err.e_error == 0.0

    def test_absolute_difference(self):
        err = positioning_error(NedPosition(100, 50, 0), NedPosition(90, 60, 0))
        assert err.n_error == 10.0 and err.e_error == 10.0

    @given(st.floats(-1e6, 1e6), st.floats(-1e6, 1e6),
           st.floats(-1e6, 1e6), st.floats(-1e6, 1e6))
    def test_symmetric(self, n1, e1, n2, e2):
        a, b = NedPosition(n1, e1, 0), NedPosition(n2, e2, 0)
        assert positioning_error(a, b) == positioning_error(b, a)


class TestAngles:
    @given(st.floats(-1e4, 1e4))
    def test_wrap_range(self, a):
        w = wrap_angle(a)
        assert -math.pi < w <= math.pi
        # same direction on the circle
        assert abs(math.sin(w) - math.sin(a)) < 1e-9
        assert abs(math.cos(w) - math.cos(a)) < 1e-9

    def test_wrap_boundary(self):
        assert wrap_angle(math.pi) == math.pi
        assert wrap_angle(-math.pi) == math.pi

    def test_heading_error_shortest_arc(self):
        assert abs(heading_error(math.pi - 0.1, -math.pi + 0.1) + 0.2) < 1e-12

    def test_velocity_sanity_bound(self):
        with pytest.raises(ValueError):
            BodyVelocityRel(6.0, 0, 0)
