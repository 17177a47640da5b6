"""
Flat ``key=value`` run configuration. Keys are documented in config/doc.md.
"""

import os

from model.exceptions import ConfigError
from model.solver.forcing import BOUSSINESQ, VARIANTS, ForcingSpec
from model.solver.initial import PRESETS
from model.solver.integrator import StepPolicy
from settings.paths import DATA_DIR

MIN_GRID_N = 16

REQUIRED = ("grid_n", "t_end", "preset")

DEFAULTS = {
    "cfl": 0.4,
    "dt_max": 1e-2,
    "dt_min": 1e-8,
    "seed": 0,
    "amplitude": 1.0,
    "perturbation": 0.1,
    "rho_mean": 0.0,
    "forcing": BOUSSINESQ,
    "forcing_amplitude": 1.0,
    "forcing_lambda": 0.5,
    "forcing_speed": 1.0,
    "cadence": 10,
    "p_list": (2, 4, 8, 16),
    "output_dir": DATA_DIR,
    "run_name": "run",
    "nonzero_mean": False,
}


def _bool(text):
    value = text.strip().lower()
    if value in ("true", "yes", "1"):
        return True
    elif value in ("false", "no", "0"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def _p_list(text):
    out = []
    for item in text.split(","):
        p = float(item)
        out.append(int(p) if p.is_integer() else p)
    return tuple(out)


CONVERTERS = {
    "grid_n": int,
    "cfl": float,
    "dt_max": float,
    "dt_min": float,
    "t_end": float,
    "preset": str,
    "seed": int,
    "amplitude": float,
    "perturbation": float,
    "rho_mean": float,
    "forcing": str,
    "forcing_amplitude": float,
    "forcing_lambda": float,
    "forcing_speed": float,
    "cadence": int,
    "p_list": _p_list,
    "output_dir": str,
    "run_name": str,
    "nonzero_mean": _bool,
}

KEYS = tuple(CONVERTERS)


class RunConfig:

    def __init__(self, grid_n, t_end, preset, config_file=None, **kwargs):

        values = dict(DEFAULTS, grid_n=grid_n, t_end=t_end, preset=preset)
        for key, value in kwargs.items():
            if key not in CONVERTERS:
                raise ConfigError(f"unknown key {key!r}", field=key)
            values[key] = value

        for key in KEYS:
            setattr(self, key, values[key])
        self.p_list = tuple(self.p_list)
        self.config_file = config_file

        self.validate()

    def validate(self):

        if self.grid_n < MIN_GRID_N or self.grid_n % 2:
            raise ConfigError(
                f"grid_n must be even and >= {MIN_GRID_N}, got {self.grid_n}",
                field="grid_n")
        if self.t_end < 0:
            raise ConfigError(f"t_end must be >= 0, got {self.t_end}",
                              field="t_end")
        if not self.p_list or any(p < 2 for p in self.p_list):
            raise ConfigError(f"p_list entries must be >= 2, "
                              f"got {self.p_list}", field="p_list")
        if self.cadence < 1:
            raise ConfigError(f"cadence must be >= 1, got {self.cadence}",
                              field="cadence")
        if self.preset not in PRESETS:
            raise ConfigError(f"preset {self.preset!r} not recognized, "
                              f"expected one of {PRESETS}", field="preset")
        if self.forcing not in VARIANTS:
            raise ConfigError(f"forcing {self.forcing!r} not recognized, "
                              f"expected one of {VARIANTS}", field="forcing")

        try:
            self.step_policy()
        except ValueError as e:
            raise ConfigError(str(e), field="step policy") from e
        try:
            self.forcing_spec()
        except ValueError as e:
            raise ConfigError(str(e), field="forcing") from e

        if not _writable(self.output_dir):
            raise ConfigError(f"output_dir {self.output_dir} is not writable",
                              field="output_dir")

    def step_policy(self):
        return StepPolicy(cfl=self.cfl, dt_max=self.dt_max,
                          dt_min=self.dt_min, t_end=self.t_end)

    def forcing_spec(self):
        return ForcingSpec(variant=self.forcing,
                           amplitude=self.forcing_amplitude,
                           lam=self.forcing_lambda,
                           speed=self.forcing_speed,
                           nonzero_mean=self.nonzero_mean)

    def as_dict(self):
        return {key: getattr(self, key) for key in KEYS}

    @property
    def run_dir(self):
        return os.path.join(self.output_dir, self.run_name)

    def echo(self):
        """Fully resolved config, in the input format"""

        lines = []
        for key, value in self.as_dict().items():
            if key == "p_list":
                value = ",".join(str(p) for p in value)
            elif isinstance(value, bool):
                value = str(value).lower()
            lines.append(f"{key}={value}")
        return "\n".join(lines) + "\n"

    @classmethod
    def get(cls, file):

        with open(file, encoding="utf-8") as f:
            cf = parse_config(f.read(), config_file=os.path.basename(file))
        return cf


def _writable(path):
    path = os.path.abspath(path)
    while not os.path.exists(path):
        parent = os.path.dirname(path)
        if parent == path:
            return False
        path = parent
    return os.path.isdir(path) and os.access(path, os.W_OK)


def parse_config(text, config_file=None):

    values = {}
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"expected key=value, got {raw.strip()!r}",
                              line=i)

        key, value = (s.strip() for s in line.split("=", 1))
        if key not in CONVERTERS:
            raise ConfigError(f"unknown key {key!r}", line=i, field=key)
        if key in values:
            raise ConfigError(f"duplicate key {key!r}", line=i, field=key)
        try:
            values[key] = CONVERTERS[key](value)
        except ValueError as e:
            raise ConfigError(f"bad value for {key}: {e}",
                              line=i, field=key) from e

    missing = [key for key in REQUIRED if key not in values]
    if missing:
        raise ConfigError(f"missing required keys: {', '.join(missing)}",
                          field=missing[0])

    return RunConfig(config_file=config_file, **values)
