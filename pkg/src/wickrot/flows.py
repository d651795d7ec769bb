"""Earthquake, double earthquake, the length-differential map, and grafting.

Shear-chart flows are exact coordinate arithmetic (fractions); Fenchel-
Nielsen flows shift twists. Left and right are a recorded orientation
convention: side "L" adds the measure, side "R" subtracts, and the two are
exact inverses. Negative flow times are allowed (the flows extend); a
warning flag is raised when t * weights leaves the measured-lamination cone.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .fenchel import FNChart, FNCoordinates, complex_holonomy_from_fn
from .holonomy import Holonomy, complex_holonomy_from_shear, lamination_length
from .numerics import FDConfig, central_diff
from .rational import mat_vec, rat
from .shear import ChartError, ShearChart, ShearCoordinates
from .surfaces import WeightedMulticurve
from .teich import TeichPoint
from .traintrack import TrackError, WeightSystem


class FlowWarning(UserWarning):
    """t * weight left the measured-lamination cone; the flow still extends."""


@dataclass(frozen=True)
class CotangentPoint:
    """Base point plus covector in the base chart's (reduced) coordinate dual."""

    base: TeichPoint
    covector: tuple

    def __post_init__(self):
        dim = (
            self.base.chart.reduced_dim
            if self.base.kind == "shear"
            else 2 * self.base.chart.n_curves
        )
        if len(self.covector) != dim:
            raise ChartError(
                f"covector dimension {len(self.covector)} != chart dimension {dim}"
            )


@dataclass(frozen=True)
class ComplexShearCoordinates:
    """Shear-bend coordinates: real part a shear vector, imaginary part a
    weight vector on the dual track (bending measure)."""

    chart: ShearChart
    real: ShearCoordinates
    imag: tuple[Fraction, ...]

    @property
    def values(self) -> list[complex]:
        return [complex(float(a), float(b)) for a, b in zip(self.real.values, self.imag)]

    def holonomy(self) -> Holonomy:
        return complex_holonomy_from_shear(self.chart, self.values)

    @property
    def fuchsian(self) -> bool:
        return all(v == 0 for v in self.imag)


def _flow_sign(side: str) -> int:
    if side not in ("L", "R"):
        raise ValueError(f"side must be 'L' or 'R', got {side!r}")
    return 1 if side == "L" else -1


def _warn_if_negative(t, weights) -> None:
    tq = rat(t) if not isinstance(t, float) else Fraction(t)
    if any(tq * rat(w) < 0 for w in weights):
        warnings.warn(
            "flow parameter times weight is negative: outside the "
            "measured-lamination cone",
            FlowWarning,
            stacklevel=3,
        )


def earthquake_shear(
    sigma: ShearCoordinates, tau: WeightSystem, t, side: str = "L"
) -> ShearCoordinates:
    """sigma + t*tau (side L) or sigma - t*tau (side R), exact."""
    chart = sigma.chart
    if tau.track != chart.dual_track:
        raise TrackError("weight system lives on a different track")
    s = _flow_sign(side)
    tq = Fraction(t) if isinstance(t, float) else rat(t)
    edge_tau = chart.restrict_weight_system(tau)
    _warn_if_negative(tq, edge_tau)
    vals = tuple(v + s * tq * w for v, w in zip(sigma.values, edge_tau))
    return ShearCoordinates(chart, vals)


def earthquake_fn(
    x: FNCoordinates, l: WeightedMulticurve, t: float, side: str = "L"
) -> FNCoordinates:
    """Twist shift t * weight on each supported pants curve; lengths fixed."""
    if not l.pants_supported:
        raise ChartError("earthquake_fn needs a pants-supported multicurve")
    chart = x.chart
    s = _flow_sign(side)
    shift = {name: 0.0 for name in chart.curves}
    for curve, w in l.components:
        if not isinstance(curve, str) or curve not in shift:
            raise ChartError(f"component {curve!r} is not a pants curve of this chart")
        shift[curve] = float(w)
    _warn_if_negative(t, [shift[c] for c in chart.curves])
    twists = tuple(
        tw + s * float(t) * shift[name] for tw, name in zip(x.twists, chart.curves)
    )
    return x.with_twists(twists)


def _resolve_lamination(m: TeichPoint, l) -> tuple[str, object]:
    """Normalize lamination data per chart kind."""
    if m.kind == "shear":
        if isinstance(l, WeightSystem):
            return "shear", l
        raise ChartError("shear-chart flows take a WeightSystem on the dual track")
    if isinstance(l, WeightedMulticurve):
        return "fn", l
    raise ChartError("fn-chart flows take a pants-supported WeightedMulticurve")


def earthquake(m: TeichPoint, l, t, side: str = "L") -> TeichPoint:
    kind, lam = _resolve_lamination(m, l)
    if kind == "shear":
        return TeichPoint(earthquake_shear(m.coords, lam, t, side))
    return TeichPoint(earthquake_fn(m.coords, lam, float(t), side))


def double_earthquake(m: TeichPoint, l) -> tuple[TeichPoint, TeichPoint]:
    """(left, right) pair at unit time; l = 0 returns (m, m) (Fuchsian)."""
    if l is None:
        return m, m
    return earthquake(m, l, 1, "L"), earthquake(m, l, 1, "R")


def delta(m: TeichPoint, l, cfg: FDConfig = FDConfig()) -> CotangentPoint:
    """The length differential of the lamination at m, as a chart covector.

    Shear charts: exact linear pairing u(v_j) = Om_Th(tau, v_j) over the
    reduced (completeness) basis. FN charts: central FD gradient of the
    lamination length over the chart coordinates, one Richardson level.
    """
    if l is None:
        dim = m.chart.reduced_dim if m.kind == "shear" else 2 * m.chart.n_curves
        return CotangentPoint(m, (0.0,) * dim)
    kind, lam = _resolve_lamination(m, l)
    if kind == "shear":
        chart = m.chart
        tau_edges = chart.restrict_weight_system(lam)
        # (Om tau)_i = Om_Th(e_i, tau), so Om_Th(tau, v) = -(Om tau) . v
        om_tau = mat_vec(chart.omega_edges, tau_edges)
        comps = tuple(
            -sum((a * b for a, b in zip(om_tau, v)), Fraction(0))
            for v in chart.complete_basis
        )
        return CotangentPoint(m, comps)

    chart = m.chart

    def length_at(vec) -> float:
        x = FNCoordinates.from_vector(chart, vec)
        from .fenchel import holonomy_from_fn

        return lamination_length(holonomy_from_fn(chart, x), lam)

    x0 = m.coords.vector()
    grad = []
    for k in range(len(x0)):
        e = np.zeros(len(x0))
        e[k] = 1.0
        g = central_diff(length_at, x0, e, cfg)
        if not np.isfinite(g):
            raise FloatingPointError("non-finite FD gradient component")
        grad.append(float(g))
    return CotangentPoint(m, tuple(grad))


def graft_shearbend(
    sigma: ShearCoordinates, tau: WeightSystem, t
) -> ComplexShearCoordinates:
    """Complexified earthquake: shear-bend coordinates sigma + i t tau."""
    chart = sigma.chart
    if tau.track != chart.dual_track:
        raise TrackError("weight system lives on a different track")
    edge_tau = chart.restrict_weight_system(tau)
    if any(w < 0 for w in edge_tau):
        raise ChartError("grafting needs a non-negative (carried) measure")
    tq = Fraction(t) if isinstance(t, float) else rat(t)
    return ComplexShearCoordinates(
        chart, sigma, tuple(tq * w for w in edge_tau)
    )


def graft_fn(x: FNCoordinates, l: WeightedMulticurve, t: float) -> Holonomy:
    """Holonomy with twists t_i + i t w_i on the supported pants curves."""
    if not l.pants_supported:
        raise ChartError("graft_fn needs a pants-supported multicurve")
    chart = x.chart
    imag = {name: 0.0 for name in chart.curves}
    for curve, w in l.components:
        if not isinstance(curve, str) or curve not in imag:
            raise ChartError(f"component {curve!r} is not a pants curve of this chart")
        imag[curve] = float(t) * float(w)
    return complex_holonomy_from_fn(chart, x, tuple(imag[c] for c in chart.curves))
