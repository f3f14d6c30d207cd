"""Run configurations: one JSON file naming the algebra, the automorphisms,
the cocycle, the module parameters, the window and the sample counts.

A bare name (``sl2_untwisted``) refers to a configuration shipped in
``toroidal/configs``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from importlib import resources
from pathlib import Path

from .loopmod import Window
from .tau import CocycleConfig


class ConfigError(ValueError):
    """Malformed or missing configuration (a usage error)."""


SAMPLE_DEFAULTS = {"jacobi": 1000, "da": 200, "axioms": 500}


@dataclass
class RunConfig:
    name: str
    algebra: dict
    automorphisms: list
    cocycle: CocycleConfig
    module: dict | None = None
    window: Window = field(default_factory=Window)
    d0_window: Window = field(default_factory=lambda: Window(2, 1, 2))
    samples: dict = field(default_factory=lambda: dict(SAMPLE_DEFAULTS))
    seed: int = 0
    cap: int = 40
    thin: dict | None = None
    a1_as_b1: bool | None = None
    source: str = ""

    def with_overrides(self, seed=None, window=None, cocycle=None) -> "RunConfig":
        out = self
        if seed is not None:
            out = replace(out, seed=int(seed))
        if window is not None:
            out = replace(out, window=_window(window))
        if cocycle is not None:
            out = replace(out, cocycle=_cocycle(cocycle))
        return out

    def to_json(self):
        return {"name": self.name, "algebra": self.algebra, "automorphisms": self.automorphisms,
                "cocycle": self.cocycle.to_json(), "module": self.module, "window": self.window.to_json(),
                "d0_window": self.d0_window.to_json(), "samples": self.samples, "seed": self.seed,
                "cap": self.cap, "thin": self.thin, "a1_as_b1": self.a1_as_b1}


def _window(text) -> Window:
    try:
        return Window.parse(text) if isinstance(text, str) else Window(**text)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad window {text!r}: {exc}") from exc


def _cocycle(val) -> CocycleConfig:
    try:
        if isinstance(val, str):
            return CocycleConfig.parse(val)
        c1, c2 = val
        return CocycleConfig.parse(f"{c1},{c2}")
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"bad cocycle {val!r}: {exc}") from exc


def builtin_names() -> list:
    return sorted(p.name[:-5] for p in resources.files("toroidal.configs").iterdir() if p.name.endswith(".json"))


def _read(ref: str) -> tuple[dict, str]:
    path = Path(ref)
    if path.is_file():
        text, source = path.read_text(), str(path)
    else:
        name = ref[:-5] if ref.endswith(".json") else ref
        if name not in builtin_names():
            raise ConfigError(f"no config file or builtin named {ref!r} (builtins: {', '.join(builtin_names())})")
        text = resources.files("toroidal.configs").joinpath(name + ".json").read_text()
        source = f"builtin:{name}"
    try:
        return json.loads(text), source
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{source}: invalid JSON ({exc})") from exc


def load_config(ref: str) -> RunConfig:
    data, source = _read(ref)
    if not isinstance(data, dict):
        raise ConfigError(f"{source}: expected a JSON object")
    missing = [k for k in ("algebra", "automorphisms") if k not in data]
    if missing:
        raise ConfigError(f"{source}: missing {missing}")
    if not isinstance(data["automorphisms"], list) or not data["automorphisms"]:
        raise ConfigError(f"{source}: automorphisms must be a nonempty list")
    samples = dict(SAMPLE_DEFAULTS)
    samples.update(data.get("samples", {}))
    return RunConfig(
        name=data.get("name", Path(source).stem),
        algebra=data["algebra"],
        automorphisms=data["automorphisms"],
        cocycle=_cocycle(data.get("cocycle", [0, 0])),
        module=data.get("module"),
        window=_window(data.get("window", "k=2,depth=2,height=2")),
        d0_window=_window(data.get("d0_window", "k=2,depth=1,height=2")),
        samples={k: int(v) for k, v in samples.items()},
        seed=int(data.get("seed", 0)),
        cap=int(data.get("cap", 40)),
        thin=data.get("thin"),
        a1_as_b1=data.get("a1_as_b1"),
        source=source,
    )
