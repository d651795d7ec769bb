"""Anti-de Sitter, Minkowski, and de Sitter points from surface data.

The AdS correspondence stores the (left, right) hyperbolic pair produced by
the double earthquake of boundary data (m, l); the pleated Wick rotation is
the same map under its own name (the verifier composes it through charts).
Minkowski points carry a Fuchsian linear part with a translation cocycle,
extracted as the flow derivative of the earthquake deformation; de Sitter
points wrap complex projective (shear-bend) data unchanged.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .cocycles import Cocycle, CocycleError, cocycle_from_direction
from .flows import ComplexShearCoordinates, double_earthquake, earthquake
from .holonomy import Holonomy
from .numerics import FDConfig
from .surfaces import WeightedMulticurve
from .teich import TeichPoint
from .traintrack import WeightSystem

MINK_RESIDUAL_TOL = 1e-6


class LorentzError(ValueError):
    pass


@dataclass(frozen=True)
class AdSPoint:
    left: TeichPoint
    right: TeichPoint
    provenance: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.left.chart != self.right.chart:
            raise LorentzError("left and right factors need the same chart")

    @property
    def fuchsian(self) -> bool:
        return self.left.coords == self.right.coords


@dataclass(frozen=True)
class MinkPoint:
    base: Holonomy
    translation: Cocycle
    provenance: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class DSPoint:
    data: ComplexShearCoordinates | Holonomy
    provenance: dict = field(default_factory=dict, compare=False)

    @property
    def fuchsian(self) -> bool:
        if isinstance(self.data, ComplexShearCoordinates):
            return self.data.fuchsian
        return bool(np.max(np.abs(np.imag([np.trace(M) for M in self.data.matrices]))) < 1e-12)


def ads_from_plus_boundary(m: TeichPoint, l) -> AdSPoint:
    """AdS point whose convex-core upper boundary carries (m, l): the left
    and right metrics are the two unit-time earthquakes of m along l."""
    left, right = double_earthquake(m, l)
    return AdSPoint(left, right, provenance={"source": "plus-boundary", "fuchsian": l is None})


def wick_pleated(m: TeichPoint, l) -> AdSPoint:
    """Pleated Wick rotation: matches boundary data by definition, so this is
    ads_from_plus_boundary under the name the chart verifier composes."""
    p = ads_from_plus_boundary(m, l)
    return AdSPoint(p.left, p.right, provenance={"source": "wick-pleated", "fuchsian": l is None})


def ads_holonomy_pair(a: AdSPoint) -> tuple[Holonomy, Holonomy]:
    return a.left.holonomy, a.right.holonomy


def ds_from_projective(p: ComplexShearCoordinates | Holonomy) -> DSPoint:
    """The de Sitter Wick rotation is the identity on projective charts."""
    return DSPoint(p, provenance={"source": "projective-identity"})


def mink_from_lamination(m: TeichPoint, l, cfg: FDConfig = FDConfig(h=1e-4)) -> MinkPoint:
    """Linear part = holonomy of m; translation part = t-derivative at 0 of
    the left-earthquake deformation along l. The cocycle condition is
    verified before returning (residual carried in the provenance)."""
    if l is None:
        rho = m.holonomy
        zero = tuple(np.zeros((2, 2)) for _ in rho.matrices)
        return MinkPoint(rho, Cocycle(rho, zero), provenance={"fd": cfg.as_json(), "residual": 0.0})

    def builder(tvec):
        return earthquake(m, l, float(tvec[0]), "L").holonomy

    try:
        u = cocycle_from_direction(builder, np.array([0.0]), np.array([1.0]), cfg)
    except CocycleError as exc:
        raise LorentzError(f"translation cocycle extraction failed: {exc}") from exc
    cond = u.condition_residual()
    if cond > MINK_RESIDUAL_TOL:
        raise LorentzError(
            f"cocycle condition residual {cond:.3e} exceeds {MINK_RESIDUAL_TOL:.0e}"
        )
    return MinkPoint(
        u.base,
        u,
        provenance={"fd": cfg.as_json(), "residual": cond, "source": "earthquake-derivative"},
    )
