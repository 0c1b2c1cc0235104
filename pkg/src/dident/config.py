"""Run configuration: defaults, then config file, then environment, then flags."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from pathlib import Path

ENV_KEYS = {"DIDENT_BUDGET": "budget", "DIDENT_SEED": "seed"}
FORMATS = ("text", "json")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    budget: int | None = None  # search node / assignment limit; None keeps the module defaults
    timeout: float | None = None  # seconds per search
    workers: int = 1
    format: str = "text"
    seed: int = 0
    timing: bool = True  # include wall-clock fields in reports

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}, not {self.format!r}")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")
        if self.budget is not None and self.budget < 1:
            raise ConfigError("budget must be positive")

    def search_kwargs(self) -> dict:
        """Keyword arguments understood by ``is_didentity`` and the campaigns."""
        kw: dict = {"workers": self.workers}
        if self.budget is not None:
            kw["exhaustive_budget"] = self.budget
            kw["node_budget"] = self.budget
        if self.timeout is not None:
            kw["timeout"] = self.timeout
        return kw

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def _coerce(key: str, value: str):
    value = value.strip().strip('"').strip("'")
    try:
        if key in ("budget", "workers", "seed"):
            return None if key == "budget" and value.lower() in ("", "none") else int(float(value))
        if key == "timeout":
            return None if value.lower() in ("", "none") else float(value)
        if key == "timing":
            if value.lower() not in ("true", "false", "1", "0", "yes", "no"):
                raise ValueError(value)
            return value.lower() in ("true", "1", "yes")
    except ValueError:
        raise ConfigError(f"bad value for {key}: {value!r}") from None
    return value


def parse_config_text(text: str) -> dict:
    """``key = value`` lines; ``#`` starts a comment; ``[section]`` headers are ignored."""
    known = {f.name for f in fields(RunConfig)}
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line or (line.startswith("[") and line.endswith("]")):
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in known:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        out[key] = _coerce(key, value)
    return out


def load_config(path: str | os.PathLike | None = None, env=None, **overrides) -> RunConfig:
    """Layered configuration.  ``overrides`` with value None are skipped."""
    env = os.environ if env is None else env
    values: dict = {}
    if path is not None:
        try:
            values.update(parse_config_text(Path(path).read_text()))
        except OSError as exc:
            raise ConfigError(f"cannot read config file: {exc}") from None
    for var, key in ENV_KEYS.items():
        if env.get(var):
            values[key] = _coerce(key, env[var])
    values.update({k: v for k, v in overrides.items() if v is not None})
    return replace(RunConfig(), **values)


__all__ = ["RunConfig", "ConfigError", "load_config", "parse_config_text"]
