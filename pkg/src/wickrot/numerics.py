"""Finite differences: central quotients with one Richardson level.

Defaults follow the package-wide convention h = 1e-5 on unit-scaled
coordinates; every consumer records the step it used.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_H = 1e-5


@dataclass(frozen=True)
class FDConfig:
    h: float = DEFAULT_H
    richardson: bool = True

    def as_json(self) -> dict:
        return {"h": self.h, "richardson": self.richardson}


def central_diff(f, x0: np.ndarray, direction: np.ndarray, cfg: FDConfig = FDConfig()):
    """d/dt f(x0 + t v) at t = 0. f may return scalars or arrays."""
    x0 = np.asarray(x0, dtype=float)
    v = np.asarray(direction, dtype=float)

    def quot(h):
        fp = np.asarray(f(x0 + h * v))
        fm = np.asarray(f(x0 - h * v))
        return (fp - fm) / (2 * h)

    d1 = quot(cfg.h)
    if not cfg.richardson:
        return d1
    d2 = quot(cfg.h / 2)
    return (4 * d2 - d1) / 3


def jacobian(f, x0: np.ndarray, cfg: FDConfig = FDConfig()) -> np.ndarray:
    """FD Jacobian, columns computed independently."""
    x0 = np.asarray(x0, dtype=float)
    cols = []
    for k in range(len(x0)):
        e = np.zeros(len(x0))
        e[k] = 1.0
        cols.append(central_diff(f, x0, e, cfg))
    J = np.column_stack(cols)
    if not np.all(np.isfinite(J)):
        raise FloatingPointError("non-finite entries in FD Jacobian")
    return J


def richardson_consistency(f, x0: np.ndarray, direction: np.ndarray, h: float) -> float:
    """Gap between the h and h/2 Richardson limits of a directional quotient;
    small values certify first-order convergence at this sample."""
    c1 = central_diff(f, x0, direction, FDConfig(h=h, richardson=True))
    c2 = central_diff(f, x0, direction, FDConfig(h=h / 2, richardson=True))
    return float(np.max(np.abs(np.asarray(c1) - np.asarray(c2))))
