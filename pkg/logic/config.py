"""
Run configuration: defaults and molecule presets from logic/data/config.json,
user config files (JSON or key=value) and the initial-state syntax.
"""

from __future__ import annotations

import json
import logging
import os
from dataclasses import asdict, dataclass, field, replace
from typing import Any, Dict, Optional

from logic.dynamics import TimeSpec, TimeUnit
from logic.errors import ConfigError, SimulationError
from logic.fock import FockPair, ModelParams, SubspaceState

logger = logging.getLogger(__name__)

# Constants for file paths
DATA_DIR = os.path.join(os.path.dirname(__file__), "data")
CONFIG_FILE = os.path.join(DATA_DIR, "config.json")
JSON_SCHEMA_FILE = os.path.join(DATA_DIR, "headers.json")

# key in user config files -> RunConfig field
CONFIG_KEYS = {
    "omega_cm1": "omega",
    "gamma_cm1": "gamma",
    "epsilon_cm1": "epsilon",
    "initial": "initial",
    "t_max": "t_max",
    "steps": "steps",
    "time_unit": "time_unit",
    "lambda": "lam",
    "molecule": "molecule",
}


def load_config(path: str = CONFIG_FILE) -> Dict[str, Any]:
    """Load a config file; a missing file yields an empty dict.

    ``.json`` files are parsed as JSON, anything else as ``key=value`` lines
    with ``#`` comments.
    """
    if not os.path.isfile(path):
        return {}
    try:
        with open(path, encoding="utf-8") as f:
            if path.endswith(".json"):
                data = json.load(f)
                if not isinstance(data, dict):
                    raise ConfigError(f"{path}: top level must be an object")
                return data
            return _parse_key_values(f.read(), path)
    except json.JSONDecodeError as e:
        raise ConfigError(f"{path}: invalid JSON ({e})") from e


def save_config(cfg: Dict[str, Any], path: str = CONFIG_FILE) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(cfg, f, indent=2)


def _parse_key_values(text: str, source: str) -> Dict[str, str]:
    values = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected key=value, got {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        values[key] = value
    return values


def load_defaults() -> Dict[str, Any]:
    return load_config(CONFIG_FILE)


def load_schema() -> Dict[str, Dict[str, list]]:
    with open(JSON_SCHEMA_FILE, encoding="utf-8") as f:
        return json.load(f)


def csv_columns(command: str) -> list:
    """Flattened column list of a command, group by group in file order."""
    schema = load_schema()
    if command not in schema:
        raise ConfigError(f"no CSV schema for command {command!r}")
    return [col for group in schema[command].values() for col in group]


# ---------- Initial states ----------
def parse_initial(text: str) -> SubspaceState:
    """``"n,m"`` for |n,m> or ``"amps:N:re,im;re,im;..."`` for explicit S_N amplitudes."""
    text = text.strip()
    try:
        if text.startswith("amps:"):
            _, n_text, body = text.split(":", 2)
            N = int(n_text)
            amps = []
            for chunk in filter(None, (c.strip() for c in body.split(";"))):
                re_text, im_text = chunk.split(",")
                amps.append(complex(float(re_text), float(im_text)))
            return SubspaceState.from_amplitudes(N, amps)
        n_text, m_text = text.split(",")
        return SubspaceState.basis(int(n_text), int(m_text))
    except SimulationError as e:
        raise ConfigError(f"initial state {text!r}: {e}") from e
    except ValueError as e:
        raise ConfigError(f"cannot parse initial state {text!r} ({e})") from e


# ---------- Run configuration ----------
@dataclass(frozen=True)
class RunConfig:
    omega: float = 3050.0
    gamma: float = 125.0
    epsilon: float = 30.0
    initial: str = "0,1"
    t_max: float = 1.0
    steps: int = 2001
    time_unit: str = TimeUnit.PHASE.value
    lam: float = 1.0
    molecule: Optional[str] = None
    extra: Dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.steps < 1:
            raise ConfigError(f"steps must be at least 1, got {self.steps}")
        try:
            TimeUnit(self.time_unit)
        except ValueError:
            raise ConfigError(f"unknown time unit {self.time_unit!r} (use ps or phase)") from None

    @property
    def params(self) -> ModelParams:
        try:
            return ModelParams(self.omega, self.gamma, self.epsilon)
        except SimulationError as e:
            raise ConfigError(str(e)) from e

    @property
    def initial_state(self) -> SubspaceState:
        return parse_initial(self.initial)

    def time_spec(self) -> TimeSpec:
        try:
            return TimeSpec.grid(self.t_max, self.steps, self.time_unit)
        except SimulationError as e:
            raise ConfigError(str(e)) from e

    def get_state(self) -> Dict[str, Any]:
        """Serializable view using the config-file keys."""
        state = asdict(self)
        state.pop("extra")
        inverse = {v: k for k, v in CONFIG_KEYS.items()}
        return {inverse[k]: v for k, v in state.items() if v is not None}


def _coerce(field_name: str, value: Any) -> Any:
    converters = {"omega": float, "gamma": float, "epsilon": float, "t_max": float,
                  "lam": float, "steps": int, "initial": str, "time_unit": str, "molecule": str}
    try:
        return converters[field_name](value)
    except (TypeError, ValueError) as e:
        raise ConfigError(f"bad value {value!r} for {field_name}") from e


def apply_preset(cfg: RunConfig, molecule: str, defaults: Optional[Dict[str, Any]] = None) -> RunConfig:
    presets = (defaults if defaults is not None else load_defaults()).get("molecules", {})
    if molecule not in presets:
        known = ", ".join(sorted(presets)) or "none"
        raise ConfigError(f"unknown molecule {molecule!r} (known: {known})")
    preset = presets[molecule]
    return replace(cfg, molecule=molecule, omega=float(preset["omega_cm1"]),
                   gamma=float(preset["gamma_cm1"]), epsilon=float(preset["epsilon_cm1"]))


def build_run_config(file_values: Optional[Dict[str, Any]] = None,
                     overrides: Optional[Dict[str, Any]] = None,
                     defaults: Optional[Dict[str, Any]] = None) -> RunConfig:
    """Layer packaged defaults, then the config file, then explicit overrides.

    ``overrides`` uses RunConfig field names (flags); ``None`` entries are
    ignored. A molecule preset replaces omega, gamma and epsilon, after which
    explicit parameter values still win.
    """
    defaults = defaults if defaults is not None else load_defaults()
    values: Dict[str, Any] = {}
    for source in (defaults.get("run", {}), file_values or {}):
        for key, value in source.items():
            if key not in CONFIG_KEYS:
                raise ConfigError(f"unknown config key {key!r}")
            values[CONFIG_KEYS[key]] = value
    file_params = {k for k in ("omega", "gamma", "epsilon")
                   if file_values and any(CONFIG_KEYS.get(fk) == k for fk in file_values)}
    for key, value in (overrides or {}).items():
        if value is not None:
            values[key] = value

    values = {k: _coerce(k, v) for k, v in values.items()}
    molecule = values.pop("molecule", None)
    cfg = RunConfig(**values)
    if molecule:
        cfg = apply_preset(cfg, molecule, defaults)
        explicit = {k: values[k] for k in ("omega", "gamma", "epsilon")
                    if k in file_params or (overrides or {}).get(k) is not None}
        cfg = replace(cfg, **explicit)
    logger.debug("run config: %s", cfg)
    return cfg
