"""Blow-up configurations and their declared (-2)-classes."""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .errors import InvalidConfigError
from .lattice import DivisorClass, k_degree, self_int

KEYS = ("r", "general_position", "infinitely_near", "collinear", "on_conic",
        "cubic_pencil", "on_cubic", "extra_effective_roots")


def is_root(c: DivisorClass) -> bool:
    return self_int(c) == -2 and k_degree(c) == 0


@dataclass(frozen=True)
class SurfaceConfig:
    """Points p1..pr in the plane, possibly infinitely near.

    infinitely_near holds pairs (i, j) with p_j lying on the exceptional
    curve over p_i, so e_i - e_j is effective.
    """
    r: int
    general_position: bool = False
    infinitely_near: tuple[tuple[int, int], ...] = ()
    collinear: tuple[tuple[int, ...], ...] = ()
    on_conic: tuple[tuple[int, ...], ...] = ()
    cubic_pencil: bool = False
    on_cubic: bool = False
    extra_effective_roots: tuple[DivisorClass, ...] = ()

    def __post_init__(self):
        conv = {
            "infinitely_near": tuple(tuple(p) for p in self.infinitely_near),
            "collinear": tuple(tuple(s) for s in self.collinear),
            "on_conic": tuple(tuple(s) for s in self.on_conic),
            "extra_effective_roots": tuple(
                c if isinstance(c, DivisorClass) else _class_from_json(c)
                for c in self.extra_effective_roots),
        }
        for k, v in conv.items():
            object.__setattr__(self, k, v)
        self.validate()

    def validate(self) -> None:
        r = self.r
        if isinstance(r, bool) or not isinstance(r, int) or r < 0:
            raise InvalidConfigError(f"r must be a nonnegative integer, got {r!r}")
        for name in ("general_position", "cubic_pencil", "on_cubic"):
            if not isinstance(getattr(self, name), bool):
                raise InvalidConfigError(f"{name} must be a boolean")

        def idx(i, where):
            if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= r:
                raise InvalidConfigError(f"{where}: index {i!r} outside 1..{r}")

        for p in self.infinitely_near:
            if len(p) != 2:
                raise InvalidConfigError(f"infinitely_near entry {p} is not a pair")
            idx(p[0], "infinitely_near")
            idx(p[1], "infinitely_near")
            if p[0] == p[1]:
                raise InvalidConfigError(f"infinitely_near entry {p} repeats an index")
        for name, size in (("collinear", 3), ("on_conic", 6)):
            for s in getattr(self, name):
                if len(s) != size or len(set(s)) != size:
                    raise InvalidConfigError(f"{name} entry {s} needs {size} distinct indices")
                for i in s:
                    idx(i, name)
        if self.general_position and (self.infinitely_near or self.collinear or self.on_conic
                                      or self.extra_effective_roots or self.cubic_pencil):
            raise InvalidConfigError("general_position excludes incidences, declared roots and cubic_pencil")
        if self.cubic_pencil and r != 9:
            raise InvalidConfigError("cubic_pencil requires r = 9")
        for c in self.extra_effective_roots:
            if c.r != r:
                raise InvalidConfigError(f"extra root {c} has r={c.r}, expected {r}")
            if not is_root(c):
                raise InvalidConfigError(f"extra root {c} fails R^2 = -2, R.K = 0")

    # JSON mapping

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "SurfaceConfig":
        if not isinstance(data, dict):
            raise InvalidConfigError("configuration must be a JSON object")
        unknown = set(data) - set(KEYS)
        if unknown:
            raise InvalidConfigError(f"unknown keys: {sorted(unknown)}")
        if "r" not in data:
            raise InvalidConfigError("missing key: r")
        try:
            return cls(**data)
        except InvalidConfigError:
            raise
        except (TypeError, ValueError) as exc:
            raise InvalidConfigError(str(exc)) from exc

    @classmethod
    def load(cls, path: str | Path) -> "SurfaceConfig":
        try:
            data = json.loads(Path(path).read_text())
        except json.JSONDecodeError as exc:
            raise InvalidConfigError(f"{path}: {exc}") from exc
        return cls.from_dict(data)

    def to_dict(self) -> dict[str, Any]:
        return {
            "r": self.r,
            "general_position": self.general_position,
            "infinitely_near": [list(p) for p in self.infinitely_near],
            "collinear": [list(s) for s in self.collinear],
            "on_conic": [list(s) for s in self.on_conic],
            "cubic_pencil": self.cubic_pencil,
            "on_cubic": self.on_cubic,
            "extra_effective_roots": [list(c.vector()) for c in self.extra_effective_roots],
        }


def _class_from_json(c) -> DivisorClass:
    if isinstance(c, str):
        return DivisorClass.parse(c)
    if isinstance(c, (list, tuple)) and c:
        return DivisorClass.from_vector(c)
    raise InvalidConfigError(f"cannot read class {c!r}")


def _unit(r: int, idx) -> list[int]:
    v = [0] * r
    for i in idx:
        v[i - 1] = 1
    return v


def declared_roots(config: SurfaceConfig) -> frozenset[DivisorClass]:
    r = config.r
    out: set[DivisorClass] = set()
    for i, j in config.infinitely_near:
        m = [0] * r
        m[i - 1] = -1   # e_i
        m[j - 1] = 1    # -e_j
        out.add(DivisorClass(0, tuple(m)))
    for s in config.collinear:
        out.add(DivisorClass(1, tuple(_unit(r, s))))
    for s in config.on_conic:
        out.add(DivisorClass(2, tuple(_unit(r, s))))
    for c in config.extra_effective_roots:
        if not is_root(c):
            raise InvalidConfigError(f"extra root {c} fails R^2 = -2, R.K = 0")
        out.add(c)
    for c in out:
        assert is_root(c), c
    return frozenset(out)


def is_anticanonical(config: SurfaceConfig) -> bool:
    return config.r <= 9 or config.on_cubic or config.cubic_pencil
