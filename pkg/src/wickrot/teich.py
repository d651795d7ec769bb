"""Points of Teichmueller space: a chart tag plus coordinates, with holonomy
cached on first use. Comparisons between points always go through trace
panels; raw matrices are only defined up to conjugation and sign.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .fenchel import FNChart, FNCoordinates, holonomy_from_fn
from .holonomy import Holonomy, holonomy_from_shear
from .shear import ShearChart, ShearCoordinates


class TeichError(ValueError):
    pass


@dataclass(frozen=True)
class TeichPoint:
    coords: ShearCoordinates | FNCoordinates

    @property
    def kind(self) -> str:
        return "shear" if isinstance(self.coords, ShearCoordinates) else "fn"

    @property
    def chart(self):
        return self.coords.chart

    @cached_property
    def holonomy(self) -> Holonomy:
        if self.kind == "shear":
            return holonomy_from_shear(self.chart, self.coords, check_cusps=False)
        return holonomy_from_fn(self.chart, self.coords)

    @staticmethod
    def shear(chart: ShearChart, values) -> "TeichPoint":
        return TeichPoint(ShearCoordinates.make(chart, values))

    @staticmethod
    def fn(chart: FNChart, lengths, twists) -> "TeichPoint":
        return TeichPoint(FNCoordinates(chart, tuple(map(float, lengths)), tuple(map(float, twists))))
