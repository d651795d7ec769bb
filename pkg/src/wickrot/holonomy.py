"""Holonomy representations, trace lengths, trace panels.

A holonomy assigns a det-1 matrix (real or complex) to each generator of a
presentation. Conjugacy-class comparisons always go through trace panels (a
fixed word list), never raw matrices; matrix signs are projective.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .matrices import commutator, inv_sl2, proj_residual, word_product
from .surfaces import CurveWord, GroupPresentation, SurfaceSig, Word, WeightedMulticurve

DET_TOL = 1e-12
RELATOR_TOL = 1e-9
CUSP_TOL = 1e-10


class HolonomyError(ValueError):
    pass


class TraceLength(NamedTuple):
    value: float
    parabolic: bool


@dataclass(frozen=True)
class Holonomy:
    presentation: GroupPresentation
    matrices: tuple[np.ndarray, ...]
    field: str = "real"  # "real" | "complex"
    # named closed curves resolvable by lamination_length (chart curves)
    curve_words: tuple[tuple[str, Word], ...] = ()

    def __post_init__(self):
        if len(self.matrices) != self.presentation.rank:
            raise HolonomyError("one matrix per generator required")
        for M in self.matrices:
            d = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
            if abs(d - 1) > DET_TOL:
                raise HolonomyError(f"generator determinant off by {abs(d-1):.3e}")

    def matrix(self, w: Word | CurveWord) -> np.ndarray:
        word = w.word if isinstance(w, CurveWord) else w
        return word_product(self.matrices, word)

    def trace(self, w: Word | CurveWord) -> complex | float:
        t = np.trace(self.matrix(w))
        return complex(t) if self.field == "complex" else float(np.real(t))

    def relator_residual(self) -> float:
        return max(
            (proj_residual(self.matrix(r)) for r in self.presentation.relators),
            default=0.0,
        )

    def peripheral_traces(self) -> list[complex | float]:
        return [self.trace(p) for p in self.presentation.peripheral]

    def trace_panel(self, panel: list[Word]) -> np.ndarray:
        return np.array([abs(self.trace(w)) for w in panel])

    def resolve(self, curve) -> Word:
        if isinstance(curve, CurveWord):
            return curve.word
        if isinstance(curve, str):
            for name, w in self.curve_words:
                if name == curve:
                    return w
            raise HolonomyError(f"unknown chart curve {curve!r}")
        if isinstance(curve, tuple):
            return curve
        raise HolonomyError(f"cannot resolve {curve!r} to a word")


def panel_distance(a: Holonomy, b: Holonomy, panel: list[Word]) -> float:
    """Max absolute-trace gap over the panel (conjugation-invariant)."""
    return float(np.max(np.abs(a.trace_panel(panel) - b.trace_panel(panel))))


def trace_length(rho: Holonomy, w) -> TraceLength:
    """Translation length 2 arccosh(|tr|/2); |tr| = 2 is parabolic (length 0),
    |tr| < 2 is elliptic and rejected."""
    t = abs(rho.trace(rho.resolve(w)))
    if t < 2.0 - 1e-12:
        raise HolonomyError(f"elliptic element (|tr| = {t:.6f} < 2) has no length")
    if t <= 2.0 + 1e-12:
        return TraceLength(0.0, True)
    return TraceLength(2.0 * float(np.arccosh(t / 2.0)), False)


def lamination_length(rho: Holonomy, l: WeightedMulticurve) -> float:
    """Weighted sum of component geodesic lengths."""
    total = 0.0
    for curve, weight in l.components:
        w = rho.resolve(curve)
        total += float(weight) * trace_length(rho, w).value
    return total


def holonomy_from_shear(chart, sigma, check_cusps: bool = True) -> Holonomy:
    """Holonomy of a shear-chart point: generator loops evaluated at the
    coordinates. Complete structures must have parabolic peripherals; checked
    here (|tr| - 2 within CUSP_TOL) unless disabled."""
    from .shear import ShearChart, ShearCoordinates  # local import, no cycle

    values = [float(v) for v in sigma.values]
    cplx = False
    mats = tuple(lp.holonomy(chart, values) for lp in chart.generator_loops)
    rho = Holonomy(chart.presentation, mats, field="complex" if cplx else "real")
    if check_cusps and sigma.complete:
        for t in rho.peripheral_traces():
            if abs(abs(t) - 2.0) > CUSP_TOL:
                raise HolonomyError(
                    f"complete structure with non-parabolic cusp: |tr| = {abs(t)!r}"
                )
    return rho


def complex_holonomy_from_shear(chart, values) -> Holonomy:
    """Same construction over complex shear values (grafting/bending)."""
    vals = [complex(v) for v in values]
    mats = tuple(lp.holonomy(chart, vals) for lp in chart.generator_loops)
    return Holonomy(chart.presentation, mats, field="complex")
