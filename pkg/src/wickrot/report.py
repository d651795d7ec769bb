"""Deterministic JSON reports.

Reals serialize as decimal strings with 17 significant digits (round-trip
exact for float64); rationals as numerator/denominator strings. Reports are
bitwise identical for identical (testbed, seed, version): keys are sorted
and every float goes through the same formatter.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__


def fmt_float(x: float) -> str:
    return f"{float(x):.17g}"


def encode(obj):
    """Recursively convert to JSON-safe deterministic primitives."""
    if isinstance(obj, float):
        return fmt_float(obj)
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    if isinstance(obj, (int, str, bool)) or obj is None:
        return obj
    if hasattr(obj, "as_json"):
        return encode(obj.as_json())
    if hasattr(obj, "item"):  # numpy scalars
        return encode(obj.item())
    raise TypeError(f"cannot encode {type(obj)} deterministically")


def dumps(obj) -> str:
    return json.dumps(encode(obj), sort_keys=True, indent=1, separators=(",", ": "))


@dataclass
class Report:
    job: dict
    results: dict = field(default_factory=dict)
    passed: bool | None = None

    def body(self) -> dict:
        return {
            "version": __version__,
            "job": self.job,
            "passed": self.passed,
            "results": self.results,
        }

    def to_json(self) -> str:
        return dumps(self.body())

    def write(self, path: str) -> None:
        # atomic-ish: write then rename
        import os
        import tempfile

        d = os.path.dirname(os.path.abspath(path)) or "."
        fd, tmp = tempfile.mkstemp(dir=d, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as f:
                f.write(self.to_json())
                f.write("\n")
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
