"""6DOF truth simulator for a buoyancy-driven underwater glider.

The vehicle model follows the standard marine-craft vectorial form

    M @ dnu_r + C(nu_r) @ nu_r + D(nu_r) @ nu_r + g(eta) = tau

expressed in relative (through-water) body velocities, with

  * ``M = M_rb + M_A`` (rigid body plus added mass, constant),
  * a velocity-independent rigid-body Coriolis parametrization built from
    the angular rates only, which makes the relative-velocity form exact
    under an irrotational, inertially-constant horizontal current,
  * diagonal-plus-fin linear damping, quadratic damping, and wing
    lift/drag resolved from the angle of attack,
  * restoring forces from weight and (VBS-modulated) buoyancy, with the
    moving-mass actuator treated quasi-statically as a centre-of-gravity
    shift.

Position kinematics advect with the absolute velocity ``nu_r + nu_c`` so
the vehicle drifts with the water mass, while the maneuvering equation
above stays in relative velocities.  Ocean currents are horizontal and
irrotational: constant in the inertial frame, time-varying in the body
frame under vehicle rotation.

The actuators are a variable buoyancy system (displaced volume command)
and an internal moving mass (longitudinal translation for pitch, rotation
for roll/bank).  Two decoupled PID loops track pitch and heading
setpoints; a small scenario supervisor sequences sawtooth glides, spiral
turns, and an end-of-run neutral coast.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .config import GliderConfig
from .errors import ConfigError, GimbalProximityError, SingularMassError
from .frames import _euler_rate, _rotation, heading_error, skew, wrap_angle

SCENARIO_KINDS = ("wings_level_sawtooth", "spiral", "mixed_test")


# ---------------------------------------------------------------------------
# Parameter and state types


@dataclass(frozen=True)
class RigidBodyParams:
    """Mass properties and hydrostatic force magnitudes.

    I_b is the inertia tensor about the body origin; r_cg / r_cb are the
    centre-of-gravity and centre-of-buoyancy offsets from that origin
    (x forward, y starboard, z down). W is the weight force and B0 the
    nominal displaced-volume buoyancy force, both in newtons.
    """

    m: float
    I_b: np.ndarray
    r_cg: np.ndarray
    r_cb: np.ndarray
    W: float
    B0: float

    def __post_init__(self):
        if self.m <= 0:
            raise ConfigError("mass must be positive")
        I = np.asarray(self.I_b, dtype=float)
        if I.shape != (3, 3) or np.abs(I - I.T).max() > 1e-12:
            raise ConfigError("I_b must be a symmetric 3x3 matrix")
        if np.any(np.linalg.eigvalsh(I) <= 0):
            raise ConfigError("I_b must be positive definite")
        for name in ("r_cg", "r_cb"):
            r = np.asarray(getattr(self, name), dtype=float)
            if r.shape != (3,) or np.linalg.norm(r) >= 1.0:
                raise ConfigError(f"{name} must be a 3-vector shorter than 1 m")


@dataclass(frozen=True)
class HydroParams:
    """Added mass, damping, and wing coefficients.

    D_quad holds per-axis quadratic coefficients applied as d*|v|*v.  The
    wing model is a linear lift slope with a smooth large-angle rolloff
    (C_L = slope*sin(a)*cos(a)) plus parasitic and induced drag, referenced
    to wing_area.
    """

    M_A: np.ndarray
    D_lin: np.ndarray
    D_quad: np.ndarray
    wing_area: float
    lift_slope: float
    drag_coeff0: float
    induced_drag_k: float

    def __post_init__(self):
        ma = np.asarray(self.M_A, dtype=float)
        if ma.shape != (6, 6) or np.abs(ma - ma.T).max() > 1e-12:
            raise ConfigError("M_A must be a symmetric 6x6 matrix")
        if np.any(np.linalg.eigvalsh(ma) < -1e-12):
            raise ConfigError("M_A must be positive semidefinite")
        dl = np.asarray(self.D_lin, dtype=float)
        if dl.shape != (6, 6):
            raise ConfigError("D_lin must be 6x6")
        if np.any(np.linalg.eigvalsh(0.5 * (dl + dl.T)) < -1e-12):
            raise ConfigError("symmetric part of D_lin must be PSD "
                              "(dissipative damping)")
        if np.asarray(self.D_quad).shape != (6,) or np.any(
                np.asarray(self.D_quad) < 0):
            raise ConfigError("D_quad must be 6 nonnegative coefficients")


@dataclass(frozen=True)
class GliderState:
    """Inertial pose eta = [x,y,z,phi,theta,psi] and relative body
    velocities nu_r = [u_r,v_r,w_r,p,q,r]."""

    eta: np.ndarray
    nu_r: np.ndarray

    def __post_init__(self):
        eta = np.asarray(self.eta, dtype=float)
        nu = np.asarray(self.nu_r, dtype=float)
        if eta.shape != (6,) or nu.shape != (6,):
            raise ValueError("eta and nu_r must be 6-vectors")
        if not (np.all(np.isfinite(eta)) and np.all(np.isfinite(nu))):
            raise ValueError("state must be finite")
        object.__setattr__(self, "eta", eta)
        object.__setattr__(self, "nu_r", nu)


@dataclass(frozen=True)
class ControlInput:
    """Actuator set: VBS displaced volume (m^3), moving-mass longitudinal
    position (m), moving-mass roll angle (rad)."""

    vbs: float = 0.0
    mm_x: float = 0.0
    mm_roll: float = 0.0

    def __post_init__(self):
        for name in ("vbs", "mm_x", "mm_roll"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")

    def as_array(self) -> np.ndarray:
        return np.array([self.vbs, self.mm_x, self.mm_roll])


@dataclass(frozen=True)
class OceanCurrent:
    """Horizontal irrotational current: speed V_c (m/s) and the direction
    beta_c it flows toward (rad, inertial)."""

    V_c: float
    beta_c: float

    def __post_init__(self):
        if self.V_c < 0 or not math.isfinite(self.V_c):
            raise ValueError("V_c must be nonnegative and finite")

    @classmethod
    def from_inertial(cls, u_c: float, v_c: float) -> "OceanCurrent":
        return cls(math.hypot(u_c, v_c), math.atan2(v_c, u_c))

    def inertial(self) -> tuple[float, float]:
        return (self.V_c * math.cos(self.beta_c),
                self.V_c * math.sin(self.beta_c))

    def body_components(self, psi: float) -> np.ndarray:
        return current_body(self.V_c, self.beta_c, psi)


STILL_WATER = OceanCurrent(0.0, 0.0)


@dataclass
class PidController:
    """PID with output saturation and clamping anti-windup.

    With ``angular=True`` the error is the shortest signed arc between
    setpoint and measurement (heading loops).
    """

    kp: float
    ki: float
    kd: float
    out_min: float
    out_max: float
    angular: bool = False
    integral: float = 0.0
    prev_error: float | None = None

    def reset(self):
        self.integral = 0.0
        self.prev_error = None


def pid_step(ctl: PidController, setpoint: float, measurement: float,
             dt: float) -> float:
    """Advance the controller one sample and return the saturated command.

    The integral state is only committed when the output is not saturated,
    so sustained saturation cannot wind it up.
    """
    if dt <= 0:
        raise ValueError("dt must be positive")
    if ctl.angular:
        err = heading_error(setpoint, measurement)
    else:
        err = setpoint - measurement
    if ctl.prev_error is None:
        derr = 0.0
    else:
        derr = (err - ctl.prev_error) / dt
    integral_candidate = ctl.integral + err * dt
    raw = ctl.kp * err + ctl.ki * integral_candidate + ctl.kd * derr
    out = min(max(raw, ctl.out_min), ctl.out_max)
    if out == raw:
        ctl.integral = integral_candidate
    ctl.prev_error = err
    return out


# ---------------------------------------------------------------------------
# Force and matrix builders


def coriolis_rb(params: RigidBodyParams, omega) -> np.ndarray:
    """Rigid-body Coriolis/centripetal matrix from the angular rates only.

    Because it never touches the linear velocity, evaluating the rigid-body
    force with absolute or relative velocities gives the same result for an
    irrotational current (the velocity-independent parametrization).
    """
    omega = np.asarray(omega, dtype=float)
    m = params.m
    s_w = skew(omega)
    s_cg = skew(params.r_cg)
    out = np.zeros((6, 6))
    out[:3, :3] = m * s_w
    out[:3, 3:] = -m * s_w @ s_cg
    out[3:, :3] = m * s_cg @ s_w
    out[3:, 3:] = -skew(params.I_b @ omega)
    return out


def coriolis_added(M_A, nu_r) -> np.ndarray:
    """Added-mass Coriolis matrix built from the M_A @ nu_r partitions."""
    M_A = np.asarray(M_A, dtype=float)
    nu_r = np.asarray(nu_r, dtype=float)
    f1 = M_A[:3, :3] @ nu_r[:3] + M_A[:3, 3:] @ nu_r[3:]
    f2 = M_A[3:, :3] @ nu_r[:3] + M_A[3:, 3:] @ nu_r[3:]
    s1 = skew(f1)
    out = np.zeros((6, 6))
    out[:3, 3:] = -s1
    out[3:, :3] = -s1
    out[3:, 3:] = -skew(f2)
    return out


def damping_force(hydro: HydroParams, nu_r, rho: float) -> np.ndarray:
    """Net hydrodynamic damping force/moment acting on the vehicle.

    Linear + quadratic hull damping plus wing lift/drag resolved into body
    axes from the angle of attack atan2(w_r, u_r).  Strictly dissipative:
    nu_r . tau <= 0 for any state.
    """
    nu_r = np.asarray(nu_r, dtype=float)
    tau = -(hydro.D_lin @ nu_r) - hydro.D_quad * np.abs(nu_r) * nu_r
    u, w = nu_r[0], nu_r[2]
    speed_xz_sq = u * u + w * w
    if speed_xz_sq > 1e-12:
        alpha = math.atan2(w, u)
        ca, sa = math.cos(alpha), math.sin(alpha)
        q_dyn = 0.5 * rho * hydro.wing_area * speed_xz_sq
        cl = hydro.lift_slope * sa * ca
        cd = hydro.drag_coeff0 + hydro.induced_drag_k * cl * cl
        lift = q_dyn * cl
        drag = q_dyn * cd
        tau[0] += lift * sa - drag * ca
        tau[2] += -lift * ca - drag * sa
    return tau


def restoring_force(att, params: RigidBodyParams, vbs: float, env,
                    r_cg_offset=None) -> np.ndarray:
    """Gravity/buoyancy force-moment vector acting on the vehicle.

    Buoyancy is B0 + rho*g*vbs.  ``r_cg_offset`` shifts the centre of
    gravity (the quasi-static moving-mass model); ``att`` may be an
    EulerAngles or any object with phi/theta attributes.
    """
    phi, theta = att.phi, att.theta
    sth, cth = math.sin(theta), math.cos(theta)
    sph, cph = math.sin(phi), math.cos(phi)
    down_body = np.array([-sth, cth * sph, cth * cph])
    B = params.B0 + env.rho * env.gravity * vbs
    r_cg = params.r_cg if r_cg_offset is None else params.r_cg + r_cg_offset
    force = (params.W - B) * down_body
    moment = np.cross(r_cg, params.W * down_body) + np.cross(
        params.r_cb, -B * down_body)
    return np.concatenate([force, moment])


def current_body(V_c: float, beta_c: float, psi: float) -> np.ndarray:
    """Body-frame components of a horizontal current for heading psi."""
    if V_c < 0:
        raise ValueError("V_c must be nonnegative")
    return np.array([V_c * math.cos(beta_c - psi),
                     V_c * math.sin(beta_c - psi),
                     0.0])


def current_body_derivative(omega, nu_c_b) -> np.ndarray:
    """Body-frame rate of change of an inertially constant current:
    -S(omega) @ nu_c_b."""
    return -np.cross(np.asarray(omega, dtype=float),
                     np.asarray(nu_c_b, dtype=float)) * -1.0 * -1.0


# ---------------------------------------------------------------------------
# Vehicle model


class _Attitude:
    __slots__ = ("phi", "theta")

    def __init__(self, phi, theta):
        self.phi = phi
        self.theta = theta


class GliderModel:
    """Precomputed mass matrices plus the equations of motion."""

    def __init__(self, cfg: GliderConfig):
        self.cfg = cfg
        self.rb: RigidBodyParams = cfg.rigid_body
        self.hydro: HydroParams = cfg.hydro
        self.env = cfg.env
        rb = self.rb
        s_cg = skew(rb.r_cg)
        m_rb = np.zeros((6, 6))
        m_rb[:3, :3] = rb.m * np.eye(3)
        m_rb[:3, 3:] = -rb.m * s_cg
        m_rb[3:, :3] = rb.m * s_cg
        m_rb[3:, 3:] = rb.I_b
        self.M_rb = m_rb
        self.M = m_rb + self.hydro.M_A
        if np.linalg.cond(self.M) > 1e12:
            raise SingularMassError("combined mass matrix is ill-conditioned")
        self.M_inv = np.linalg.inv(self.M)
        self._mm_scale = cfg.moving_mass_kg / rb.m
        self._mm_radius = cfg.moving_mass_radius

    def cg_offset(self, ctrl: ControlInput) -> np.ndarray:
        """CG shift produced by the moving mass (quasi-static)."""
        return self._mm_scale * np.array([
            ctrl.mm_x,
            self._mm_radius * math.sin(ctrl.mm_roll),
            0.0,
        ])

    def _derivative(self, eta, nu_r, ctrl: ControlInput, V_c, beta_c):
        phi, theta, psi = eta[3], eta[4], eta[5]
        if abs(theta) >= math.pi / 2 - 0.0873:
            raise GimbalProximityError(
                f"pitch {theta:.4f} rad inside the guard band during "
                "integration")
        omega = nu_r[3:]
        nu_c_b = current_body(V_c, beta_c, psi)

        xdot = np.empty(12)
        xdot[:3] = _rotation(phi, theta, psi) @ (nu_r[:3] + nu_c_b)
        xdot[3:6] = _euler_rate(phi, theta) @ omega

        c_total = coriolis_rb(self.rb, omega) + coriolis_added(
            self.hydro.M_A, nu_r)
        tau = damping_force(self.hydro, nu_r, self.env.rho)
        tau += restoring_force(_Attitude(phi, theta), self.rb, ctrl.vbs,
                               self.env, self.cg_offset(ctrl))
        xdot[6:] = self.M_inv @ (tau - c_total @ nu_r)
        return xdot

    def derivative(self, state: GliderState, ctrl: ControlInput,
                   current: OceanCurrent) -> np.ndarray:
        """Time derivative of [eta, nu_r] under the maneuvering model."""
        return self._derivative(state.eta, state.nu_r, ctrl,
                                current.V_c, current.beta_c)

    def rk4_step(self, state: GliderState, ctrl: ControlInput,
                 current: OceanCurrent, dt: float) -> GliderState:
        """Classical RK4 advance with the control held over the step."""
        if not 0 < dt <= 1.0:
            raise ValueError("dt must be in (0, 1] s")
        x = np.concatenate([state.eta, state.nu_r])
        vc, bc = current.V_c, current.beta_c

        k1 = self._derivative(x[:6], x[6:], ctrl, vc, bc)
        x2 = x + 0.5 * dt * k1
        k2 = self._derivative(x2[:6], x2[6:], ctrl, vc, bc)
        x3 = x + 0.5 * dt * k2
        k3 = self._derivative(x3[:6], x3[6:], ctrl, vc, bc)
        x4 = x + dt * k3
        k4 = self._derivative(x4[:6], x4[6:], ctrl, vc, bc)

        x_new = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        x_new[3] = wrap_angle(x_new[3])
        x_new[5] = wrap_angle(x_new[5])
        return GliderState(eta=x_new[:6], nu_r=x_new[6:])


def dynamics_derivative(state: GliderState, ctrl: ControlInput,
                        current: OceanCurrent,
                        model: GliderModel) -> np.ndarray:
    return model.derivative(state, ctrl, current)


def rk4_step(state: GliderState, ctrl: ControlInput, current: OceanCurrent,
             dt: float, model: GliderModel) -> GliderState:
    return model.rk4_step(state, ctrl, current, dt)


# ---------------------------------------------------------------------------
# Scenario generation


@dataclass(frozen=True)
class ScenarioSpec:
    """Scenario kind plus optional overrides of the config defaults."""

    kind: str
    heading: float | None = None
    turn_rate: float | None = None
    depth_min: float | None = None
    depth_max: float | None = None
    pitch_setpoint: float | None = None
    vbs_amplitude: float | None = None

    def __post_init__(self):
        if self.kind not in SCENARIO_KINDS:
            raise ConfigError(
                f"unknown scenario kind {self.kind!r}; "
                f"expected one of {SCENARIO_KINDS}")


@dataclass(frozen=True)
class RunLog:
    """Ground-truth trajectory sampled at the sensor cadence.

    Arrays are row-per-sample: eta (N,6), nu_r (N,6), accel (N,3) is the
    body-frame derivative of the absolute linear velocity, ctrl (N,3) the
    actual actuator states (vbs, mm_x, mm_roll).
    """

    t: np.ndarray
    eta: np.ndarray
    nu_r: np.ndarray
    accel: np.ndarray
    ctrl: np.ndarray
    current_uv: tuple[float, float]
    initial_depth: float
    meta: dict

    @property
    def n_samples(self) -> int:
        return len(self.t)

    def to_bytes(self) -> bytes:
        return b"".join(a.tobytes() for a in
                        (self.t, self.eta, self.nu_r, self.accel, self.ctrl))


@dataclass(frozen=True)
class _Segment:
    t_end: float
    kind: str           # 'wings' | 'spiral' | 'coast'
    heading0: float
    turn_rate: float


def _plan_segments(spec: ScenarioSpec, duration: float, rng,
                   defaults) -> list[_Segment]:
    base_heading = spec.heading if spec.heading is not None else rng.uniform(
        -math.pi, math.pi)
    if spec.kind == "wings_level_sawtooth":
        return [_Segment(duration, "wings", base_heading, 0.0)]
    if spec.kind == "spiral":
        rate = spec.turn_rate if spec.turn_rate is not None else rng.uniform(
            defaults.spiral_rate_min, defaults.spiral_rate_max)
        return [_Segment(duration, "spiral", base_heading, rate)]

    # mixed_test: alternating spiral / wings blocks sized so a 2.7 h run
    # comes out as spiral, wings-level, spiral, then a short neutral coast.
    coast = min(defaults.coast_s, 0.25 * duration)
    maneuver = duration - coast
    n_seg = max(3, int(round(maneuver / 3000.0)))
    seg_len = maneuver / n_seg
    segments = []
    heading = base_heading
    direction = 1.0 if rng.uniform() < 0.5 else -1.0
    for i in range(n_seg):
        t_end = (i + 1) * seg_len
        if i % 2 == 0:
            rate = direction * rng.uniform(defaults.spiral_rate_min,
                                           defaults.spiral_rate_max)
            segments.append(_Segment(t_end, "spiral", heading, rate))
            heading = wrap_angle(heading + rate * seg_len)
            direction = -direction
        else:
            heading = rng.uniform(-math.pi, math.pi)
            segments.append(_Segment(t_end, "wings", heading, 0.0))
    segments.append(_Segment(duration, "coast", heading, 0.0))
    return segments


class _Actuators:
    """Rate-limited, saturated actuator states."""

    def __init__(self, limits):
        self.lim = limits
        self.vbs = 0.0
        self.mm_x = 0.0
        self.mm_roll = 0.0

    @staticmethod
    def _slew(value, cmd, rate, dt, bound):
        cmd = min(max(cmd, -bound), bound)
        step = min(max(cmd - value, -rate * dt), rate * dt)
        return value + step

    def update(self, vbs_cmd, mm_x_cmd, mm_roll_cmd, dt) -> ControlInput:
        self.vbs = self._slew(self.vbs, vbs_cmd, self.lim.vbs_rate, dt,
                              self.lim.vbs_max)
        self.mm_x = self._slew(self.mm_x, mm_x_cmd, self.lim.mm_x_rate, dt,
                               self.lim.mm_x_max)
        self.mm_roll = self._slew(self.mm_roll, mm_roll_cmd,
                                  self.lim.mm_roll_rate, dt,
                                  self.lim.mm_roll_max)
        return ControlInput(self.vbs, self.mm_x, self.mm_roll)


def scenario_generate(spec: ScenarioSpec, duration: float,
                      current: OceanCurrent, seed: int,
                      cfg: GliderConfig) -> RunLog:
    """Simulate one scenario and log ground truth at the sensor rate.

    The run is fully determined by (spec, duration, current, seed, cfg):
    the RNG only draws the initial heading and per-segment setpoints.
    """
    if duration <= 0:
        raise ConfigError("duration must be positive")
    model = GliderModel(cfg)
    defaults = cfg.scenario
    rng = np.random.default_rng(seed)

    depth_min = spec.depth_min if spec.depth_min is not None else defaults.depth_min
    depth_max = spec.depth_max if spec.depth_max is not None else defaults.depth_max
    pitch_mag = (spec.pitch_setpoint if spec.pitch_setpoint is not None
                 else defaults.pitch_setpoint)
    vbs_amp = (spec.vbs_amplitude if spec.vbs_amplitude is not None
               else defaults.vbs_amplitude)
    if not 0 < depth_min < depth_max:
        raise ConfigError("depth band must satisfy 0 < min < max")

    segments = _plan_segments(spec, duration, rng, defaults)

    dt = 1.0 / cfg.dynamics_rate_hz
    decim = int(round(cfg.dynamics_rate_hz / cfg.sensor_rate_hz))
    n_steps = int(round(duration * cfg.dynamics_rate_hz))
    n_samples = n_steps // decim

    pitch_pid = PidController(cfg.pitch_pid.kp, cfg.pitch_pid.ki,
                              cfg.pitch_pid.kd,
                              -cfg.actuators.mm_x_max, cfg.actuators.mm_x_max)
    heading_pid = PidController(cfg.heading_pid.kp, cfg.heading_pid.ki,
                                cfg.heading_pid.kd,
                                -cfg.actuators.mm_roll_max,
                                cfg.actuators.mm_roll_max, angular=True)
    actuators = _Actuators(cfg.actuators)

    state = GliderState(
        eta=np.array([0.0, 0.0, cfg.initial_depth, 0.0, 0.0,
                      segments[0].heading0]),
        nu_r=np.zeros(6),
    )

    t_arr = np.empty(n_samples)
    eta_arr = np.empty((n_samples, 6))
    nu_arr = np.empty((n_samples, 6))
    acc_arr = np.empty((n_samples, 3))
    ctrl_arr = np.empty((n_samples, 3))

    seg_idx = 0
    seg_start = 0.0
    descending = True
    row = 0
    ctrl = ControlInput()
    for i in range(n_steps):
        t = i * dt
        while t >= segments[seg_idx].t_end and seg_idx < len(segments) - 1:
            seg_start = segments[seg_idx].t_end
            seg_idx += 1
        seg = segments[seg_idx]

        depth = state.eta[2]
        if depth >= depth_max:
            descending = False
        elif depth <= depth_min:
            descending = True

        if seg.kind == "coast":
            vbs_cmd = 0.0
            pitch_sp = 0.0
            heading_sp = seg.heading0
        else:
            vbs_cmd = -vbs_amp if descending else vbs_amp
            pitch_sp = -pitch_mag if descending else pitch_mag
            if seg.kind == "spiral":
                heading_sp = wrap_angle(seg.heading0
                                        + seg.turn_rate * (t - seg_start))
            else:
                heading_sp = seg.heading0

        # forward moving mass trims the nose down, hence the sign flip;
        # bank-to-turn reverses with glide direction (the wing lift vector
        # flips between descent and ascent)
        mm_x_cmd = -pid_step(pitch_pid, pitch_sp, state.eta[4], dt)
        turn_sign = 1.0 if descending else -1.0
        mm_roll_cmd = turn_sign * pid_step(heading_pid, heading_sp,
                                           state.eta[5], dt)
        ctrl = actuators.update(vbs_cmd, mm_x_cmd, mm_roll_cmd, dt)

        state = model.rk4_step(state, ctrl, current, dt)

        if (i + 1) % decim == 0:
            xdot = model.derivative(state, ctrl, current)
            omega = state.nu_r[3:]
            nu_c_b = current.body_components(state.eta[5])
            t_arr[row] = (i + 1) * dt
            eta_arr[row] = state.eta
            nu_arr[row] = state.nu_r
            acc_arr[row] = xdot[6:9] - np.cross(omega, nu_c_b)
            ctrl_arr[row] = ctrl.as_array()
            row += 1

    meta = {
        "scenario": spec.kind,
        "seed": int(seed),
        "duration_s": float(duration),
        "current_u_m_s": current.inertial()[0],
        "current_v_m_s": current.inertial()[1],
        "dynamics_rate_hz": cfg.dynamics_rate_hz,
        "sensor_rate_hz": cfg.sensor_rate_hz,
        "config_hash": cfg.config_hash,
    }
    return RunLog(t=t_arr, eta=eta_arr, nu_r=nu_arr, accel=acc_arr,
                  ctrl=ctrl_arr, current_uv=current.inertial(),
                  initial_depth=cfg.initial_depth, meta=meta)


def mechanical_energy(model: GliderModel, state: GliderState) -> float:
    """Kinetic (with added mass) plus hydrostatic potential energy.

    Only meaningful in still water where nu == nu_r.  Used by the
    dissipativity checks.
    """
    nu = state.nu_r
    kinetic = 0.5 * nu @ model.M @ nu
    phi, theta = state.eta[3], state.eta[4]
    r = _rotation(phi, theta, state.eta[5])
    z_cg = state.eta[2] + (r @ model.rb.r_cg)[2]
    z_cb = state.eta[2] + (r @ model.rb.r_cb)[2]
    potential = -model.rb.W * z_cg + model.rb.B0 * z_cb
    return kinetic + potential
