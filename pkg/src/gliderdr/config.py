"""Plain-text (INI-style) configuration for the simulator and pipeline.

One file carries every physical coefficient, controller gain, actuator
bound, sensor parameter, and current preset.  ``load_config(None)`` returns
the packaged default set.  The raw file bytes are hashed so dataset metadata
can pin the exact configuration that produced it.
"""

from __future__ import annotations

import configparser
import hashlib
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from .errors import ConfigError

DEFAULT_CONFIG_RESOURCE = "glider_default.cfg"


def _floats(raw: str, n: int, key: str) -> np.ndarray:
    parts = [p.strip() for p in raw.split(",")]
    if len(parts) != n:
        raise ConfigError(f"{key}: expected {n} comma-separated values")
    try:
        return np.array([float(p) for p in parts])
    except ValueError as exc:
        raise ConfigError(f"{key}: {exc}") from None


@dataclass(frozen=True)
class PidGains:
    kp: float
    ki: float
    kd: float


@dataclass(frozen=True)
class ActuatorLimits:
    vbs_max: float
    vbs_rate: float
    mm_x_max: float
    mm_x_rate: float
    mm_roll_max: float
    mm_roll_rate: float


@dataclass(frozen=True)
class Environment:
    rho: float
    gravity: float
    seabed_depth: float


@dataclass(frozen=True)
class ScenarioDefaults:
    depth_min: float
    depth_max: float
    pitch_setpoint: float
    vbs_amplitude: float
    spiral_rate_min: float
    spiral_rate_max: float
    segment_min_s: float
    segment_max_s: float
    coast_s: float


@dataclass(frozen=True)
class GliderConfig:
    """All tunables, grouped the way the config file sections are."""

    rigid_body: "object"  # RigidBodyParams, set by glider_dynamics to avoid a cycle
    hydro: "object"       # HydroParams
    moving_mass_kg: float
    moving_mass_radius: float
    actuators: ActuatorLimits
    pitch_pid: PidGains
    heading_pid: PidGains
    env: Environment
    current_presets: dict[str, tuple[float, float]]
    imu: "object"         # ImuParams
    dvl: "object"         # DvlParams
    filters: dict[str, float]
    dynamics_rate_hz: float
    sensor_rate_hz: float
    initial_depth: float
    scenario: ScenarioDefaults
    config_hash: str = field(repr=False, default="")
    source_text: str = field(repr=False, default="")


def _read_text(path: str | Path | None) -> str:
    if path is None:
        return (resources.files("gliderdr") / "data" / DEFAULT_CONFIG_RESOURCE
                ).read_text()
    p = Path(path)
    if not p.exists():
        raise ConfigError(f"config file not found: {p}")
    return p.read_text()


def config_hash(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def load_config(path: str | Path | None = None) -> GliderConfig:
    """Parse a config file (or the packaged default) into typed parameters."""
    from .glider_dynamics import HydroParams, RigidBodyParams
    from .sensor_models import DvlParams, ImuParams

    text = _read_text(path)
    cp = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(f"cannot parse config: {exc}") from None

    try:
        veh = cp["vehicle"]
        mass = veh.getfloat("mass_kg")
        gravity = cp["environment"].getfloat("gravity_m_s2")
        buoy_raw = veh.get("buoyancy_n").strip()
        buoyancy = mass * gravity if buoy_raw == "auto" else float(buoy_raw)
        rigid_body = RigidBodyParams(
            m=mass,
            I_b=np.diag([veh.getfloat("inertia_xx"),
                         veh.getfloat("inertia_yy"),
                         veh.getfloat("inertia_zz")]),
            r_cg=_floats(veh.get("r_cg"), 3, "r_cg"),
            r_cb=_floats(veh.get("r_cb"), 3, "r_cb"),
            W=mass * gravity,
            B0=buoyancy,
        )

        hyd = cp["hydro"]
        d_lin = np.diag(_floats(hyd.get("damping_lin_diag"), 6,
                                "damping_lin_diag"))
        sway_yaw = hyd.getfloat("damping_lin_sway_yaw")
        d_lin[1, 5] = d_lin[5, 1] = sway_yaw
        hydro = HydroParams(
            M_A=np.diag(_floats(hyd.get("added_mass_diag"), 6,
                                "added_mass_diag")),
            D_lin=d_lin,
            D_quad=_floats(hyd.get("damping_quad_diag"), 6,
                           "damping_quad_diag"),
            wing_area=hyd.getfloat("wing_area_m2"),
            lift_slope=hyd.getfloat("wing_lift_slope_per_rad"),
            drag_coeff0=hyd.getfloat("wing_drag_coeff0"),
            induced_drag_k=hyd.getfloat("wing_induced_drag_k"),
        )

        act = cp["actuators"]
        actuators = ActuatorLimits(
            vbs_max=act.getfloat("vbs_max_m3"),
            vbs_rate=act.getfloat("vbs_rate_m3_s"),
            mm_x_max=act.getfloat("mm_x_max_m"),
            mm_x_rate=act.getfloat("mm_x_rate_m_s"),
            mm_roll_max=act.getfloat("mm_roll_max_rad"),
            mm_roll_rate=act.getfloat("mm_roll_rate_rad_s"),
        )

        ctl = cp["control"]
        pitch_pid = PidGains(ctl.getfloat("pitch_kp"), ctl.getfloat("pitch_ki"),
                             ctl.getfloat("pitch_kd"))
        heading_pid = PidGains(ctl.getfloat("heading_kp"),
                               ctl.getfloat("heading_ki"),
                               ctl.getfloat("heading_kd"))

        env = Environment(
            rho=cp["environment"].getfloat("water_density_kg_m3"),
            gravity=gravity,
            seabed_depth=cp["environment"].getfloat("seabed_depth_m"),
        )

        presets = {}
        for name, raw in cp["currents"].items():
            uc, vc = _floats(raw, 2, f"currents.{name}")
            presets[name] = (float(uc), float(vc))

        imu_sec = cp["imu"]
        imu = ImuParams(
            b_gyro=_floats(imu_sec.get("gyro_bias_rad_s"), 3, "gyro_bias"),
            b_acc=_floats(imu_sec.get("accel_bias_m_s2"), 3, "accel_bias"),
            gyro_noise_std=imu_sec.getfloat("gyro_noise_std_rad_s"),
            accel_noise_std=imu_sec.getfloat("accel_noise_std_m_s2"),
            attitude_rms_roll_pitch=imu_sec.getfloat(
                "attitude_rms_roll_pitch_rad"),
            attitude_rms_heading=imu_sec.getfloat("attitude_rms_heading_rad"),
            attitude_error_tau=imu_sec.getfloat("attitude_error_tau_s"),
            pressure_noise_std=imu_sec.getfloat("pressure_noise_std_pa"),
        )

        dvl_sec = cp["dvl"]
        dvl = DvlParams(
            max_altitude=dvl_sec.getfloat("max_altitude_m"),
            min_altitude=dvl_sec.getfloat("min_altitude_m"),
            accuracy=dvl_sec.getfloat("accuracy_fraction"),
            accuracy_floor=dvl_sec.getfloat("accuracy_floor_m_s"),
            ping_rate=dvl_sec.getfloat("ping_rate_hz"),
        )

        filt = cp["filters"]
        filters = {
            "lowpass_cutoff_hz": filt.getfloat("lowpass_cutoff_hz"),
            "gaussian_sigma_samples": filt.getfloat("gaussian_sigma_samples"),
            "outlier_z_threshold": filt.getfloat("outlier_z_threshold"),
        }

        sim = cp["simulation"]
        scn = cp["scenario"]
        scenario = ScenarioDefaults(
            depth_min=scn.getfloat("depth_min_m"),
            depth_max=scn.getfloat("depth_max_m"),
            pitch_setpoint=scn.getfloat("pitch_setpoint_rad"),
            vbs_amplitude=scn.getfloat("vbs_amplitude_m3"),
            spiral_rate_min=scn.getfloat("spiral_rate_min_rad_s"),
            spiral_rate_max=scn.getfloat("spiral_rate_max_rad_s"),
            segment_min_s=scn.getfloat("segment_min_s"),
            segment_max_s=scn.getfloat("segment_max_s"),
            coast_s=scn.getfloat("coast_s"),
        )

        cfg = GliderConfig(
            rigid_body=rigid_body,
            hydro=hydro,
            moving_mass_kg=veh.getfloat("moving_mass_kg"),
            moving_mass_radius=veh.getfloat("moving_mass_radius_m"),
            actuators=actuators,
            pitch_pid=pitch_pid,
            heading_pid=heading_pid,
            env=env,
            current_presets=presets,
            imu=imu,
            dvl=dvl,
            filters=filters,
            dynamics_rate_hz=sim.getfloat("dynamics_rate_hz"),
            sensor_rate_hz=sim.getfloat("sensor_rate_hz"),
            initial_depth=sim.getfloat("initial_depth_m"),
            scenario=scenario,
            config_hash=config_hash(text),
            source_text=text,
        )
    except (KeyError, ValueError, TypeError) as exc:
        raise ConfigError(f"bad or missing config value: {exc}") from None

    if cfg.dynamics_rate_hz <= 0 or cfg.sensor_rate_hz <= 0:
        raise ConfigError("rates must be positive")
    if cfg.dynamics_rate_hz < cfg.sensor_rate_hz:
        raise ConfigError("dynamics rate must be >= sensor rate")
    ratio = cfg.dynamics_rate_hz / cfg.sensor_rate_hz
    if abs(ratio - round(ratio)) > 1e-9:
        raise ConfigError("dynamics rate must be an integer multiple of "
                          "the sensor rate")
    if not math.isfinite(cfg.env.rho) or cfg.env.rho <= 0:
        raise ConfigError("water density must be positive")
    return cfg


def resolve_current(cfg: GliderConfig, spec: str) -> tuple[float, float]:
    """Turn a preset name or a "u,v" literal into inertial components."""
    if spec in cfg.current_presets:
        return cfg.current_presets[spec]
    try:
        uc, vc = _floats(spec, 2, "current")
        return float(uc), float(vc)
    except ConfigError:
        raise ConfigError(
            f"unknown current preset {spec!r}; available: "
            f"{sorted(cfg.current_presets)} or a 'u,v' pair") from None
