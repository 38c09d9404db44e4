"""Attitude kinematics, dead-reckoning integration, and positioning error.

Conventions
-----------
Inertial frame is a North-East-Down (NED) local tangent plane.  The body
frame is surge (forward), sway (starboard), heave (down).  Attitude is the
ZYX Euler triplet (roll phi, pitch theta, yaw psi), and ``rot_body_to_ned``
is the proper rotation Rz(psi) @ Ry(theta) @ Rx(phi) taking body vectors to
NED.  All angles are radians, wrapped to (-pi, pi].

Pitch is guarded: any operation needing the Euler rate map refuses pitch
within ``GIMBAL_GUARD_RAD`` of +/-90 deg instead of returning huge values.

Everything here is a pure function over small value types and is safe to
call concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import GimbalProximityError

# Refuse attitudes closer than ~5 deg to the pitch singularity.
GIMBAL_GUARD_RAD = 0.0873

# Sanity bound for glider-class relative velocities, m/s.
MAX_BODY_SPEED = 5.0

_TWO_PI = 2.0 * math.pi


def wrap_angle(angle: float) -> float:
    """Wrap an angle to (-pi, pi]."""
    a = (angle + math.pi) % _TWO_PI - math.pi
    if a == -math.pi:
        return math.pi
    return a


def heading_error(target: float, actual: float) -> float:
    """Shortest signed arc from ``actual`` to ``target``, in (-pi, pi]."""
    return wrap_angle(target - actual)


def _check_pitch(theta: float) -> None:
    if abs(theta) >= math.pi / 2.0 - GIMBAL_GUARD_RAD:
        raise GimbalProximityError(
            f"pitch {theta:.4f} rad is within the gimbal guard band"
        )


@dataclass(frozen=True)
class EulerAngles:
    """Roll/pitch/yaw attitude in radians.

    Roll and yaw are wrapped to (-pi, pi] on construction; pitch must stay
    outside the gimbal guard band.
    """

    phi: float
    theta: float
    psi: float

    def __post_init__(self):
        if not (math.isfinite(self.phi) and math.isfinite(self.theta)
                and math.isfinite(self.psi)):
            raise ValueError("attitude angles must be finite")
        _check_pitch(self.theta)
        object.__setattr__(self, "phi", wrap_angle(self.phi))
        object.__setattr__(self, "psi", wrap_angle(self.psi))


@dataclass(frozen=True)
class BodyVelocityRel:
    """Relative (through-water) body velocity, m/s."""

    u_r: float
    v_r: float
    w_r: float

    def __post_init__(self):
        for name in ("u_r", "v_r", "w_r"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite")
            if abs(v) > MAX_BODY_SPEED:
                raise ValueError(
                    f"{name}={v} exceeds the {MAX_BODY_SPEED} m/s sanity bound"
                )

    def as_array(self) -> np.ndarray:
        return np.array([self.u_r, self.v_r, self.w_r])


@dataclass(frozen=True)
class NedPosition:
    """North/east/down position, metres."""

    north: float
    east: float
    down: float

    def __post_init__(self):
        for name in ("north", "east", "down"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")

    def as_array(self) -> np.ndarray:
        return np.array([self.north, self.east, self.down])


@dataclass(frozen=True)
class PositionError:
    """Absolute north/east deviation between two positions, metres."""

    n_error: float
    e_error: float


def skew(v) -> np.ndarray:
    """Skew-symmetric matrix S with S(v) @ y == cross(v, y)."""
    x, y, z = float(v[0]), float(v[1]), float(v[2])
    return np.array([
        [0.0, -z, y],
        [z, 0.0, -x],
        [-y, x, 0.0],
    ])


def _rotation(phi: float, theta: float, psi: float) -> np.ndarray:
    """Body-to-NED rotation from raw angles; no guard checks."""
    cph, sph = math.cos(phi), math.sin(phi)
    cth, sth = math.cos(theta), math.sin(theta)
    cps, sps = math.cos(psi), math.sin(psi)
    return np.array([
        [cps * cth, cps * sth * sph - sps * cph, sps * sph + cps * cph * sth],
        [sps * cth, cps * cph + sph * sth * sps, sth * sps * cph - cps * sph],
        [-sth, cth * sph, cth * cph],
    ])


def rot_body_to_ned(att: EulerAngles) -> np.ndarray:
    """Proper orthonormal rotation taking body vectors into the NED frame.

    Equals Rz(psi) @ Ry(theta) @ Rx(phi).  Raises
    :class:`GimbalProximityError` when pitch is inside the guard band.
    """
    _check_pitch(att.theta)
    return _rotation(att.phi, att.theta, att.psi)


def _euler_rate(phi: float, theta: float) -> np.ndarray:
    _check_pitch(theta)
    cph, sph = math.cos(phi), math.sin(phi)
    cth = math.cos(theta)
    tth = math.tan(theta)
    return np.array([
        [1.0, sph * tth, cph * tth],
        [0.0, cph, -sph],
        [0.0, sph / cth, cph / cth],
    ])


def euler_rate_matrix(att: EulerAngles) -> np.ndarray:
    """Map body angular rates [p, q, r] to Euler-angle rates.

    Unbounded near +/-90 deg pitch, hence the gimbal guard.
    """
    return _euler_rate(att.phi, att.theta)


def dr_step(chi: NedPosition, att: EulerAngles, vel: BodyVelocityRel,
            dt: float) -> NedPosition:
    """One forward-Euler dead-reckoning step: chi + R(att) @ vel * dt.

    Zero velocity is an exact no-op (returns ``chi`` itself).
    """
    if dt <= 0.0 or not math.isfinite(dt):
        raise ValueError("dt must be positive and finite")
    if vel.u_r == 0.0 and vel.v_r == 0.0 and vel.w_r == 0.0:
        return chi
    step = rot_body_to_ned(att) @ vel.as_array() * dt
    return NedPosition(chi.north + step[0], chi.east + step[1],
                       chi.down + step[2])


def positioning_error(est: NedPosition, truth: NedPosition) -> PositionError:
    """Componentwise absolute north/east error between two positions."""
    return PositionError(abs(est.north - truth.north),
                         abs(est.east - truth.east))
