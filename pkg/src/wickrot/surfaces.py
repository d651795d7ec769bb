"""Surfaces, fundamental-group presentations, curve words, weighted multicurves.

Generator index conventions: a word is a tuple of nonzero ints, +k for the
k-th generator (1-based), -k for its inverse.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .rational import rat

Word = tuple[int, ...]


class SurfaceError(ValueError):
    pass


@dataclass(frozen=True)
class SurfaceSig:
    """Topological type (genus, punctures); must be hyperbolic."""

    genus: int
    punctures: int = 0

    def __post_init__(self):
        if self.genus < 0 or self.punctures < 0:
            raise SurfaceError("genus and punctures must be non-negative")
        if self.euler_characteristic >= 0:
            raise SurfaceError(
                f"signature (g={self.genus}, n={self.punctures}) is not hyperbolic: "
                f"Euler characteristic {self.euler_characteristic} >= 0"
            )

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus - self.punctures

    @property
    def teich_dim(self) -> int:
        return 6 * self.genus - 6 + 2 * self.punctures

    def as_json(self) -> dict:
        return {"genus": self.genus, "punctures": self.punctures}


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]
    peripheral: tuple[Word, ...] = ()

    @property
    def rank(self) -> int:
        return len(self.generators)

    def letter_name(self, k: int) -> str:
        name = self.generators[abs(k) - 1]
        return name if k > 0 else name + "^-1"

    def word_str(self, w: Word) -> str:
        return "*".join(self.letter_name(k) for k in w) if w else "1"


def commutator_word(i: int, j: int) -> Word:
    return (i, j, -i, -j)


def build_presentation(sig: SurfaceSig) -> GroupPresentation:
    """Standard presentation: closed genus g has generators a1,b1,..,ag,bg and
    the single product-of-commutators relator; punctured surfaces are free of
    rank 2g + n - 1 with explicit peripheral words."""
    g, n = sig.genus, sig.punctures
    if n == 0:
        gens = tuple(x for i in range(1, g + 1) for x in (f"a{i}", f"b{i}"))
        rel: Word = tuple(
            k for i in range(g) for k in commutator_word(2 * i + 1, 2 * i + 2)
        )
        return GroupPresentation(gens, (rel,))
    gens = tuple(x for i in range(1, g + 1) for x in (f"a{i}", f"b{i}"))
    gens += tuple(f"c{i}" for i in range(1, n))
    # peripherals: c_1, .., c_{n-1}, and the boundary of the polygon:
    # (prod [a_i,b_i] c_1..c_{n-1})^{-1}
    periph = [ (2 * g + i,) for i in range(1, n) ]
    last: Word = tuple(k for i in range(g) for k in commutator_word(2 * i + 1, 2 * i + 2))
    last += tuple(2 * g + i for i in range(1, n))
    periph.append(tuple(-k for k in reversed(last)))
    return GroupPresentation(gens, (), tuple(periph))


@dataclass(frozen=True)
class CurveWord:
    word: Word
    cyclically_reduced: bool = False

    def __post_init__(self):
        if any(k == 0 for k in self.word):
            raise SurfaceError("0 is not a valid letter")


def _free_reduce(w: Word) -> Word:
    out: list[int] = []
    for k in w:
        if out and out[-1] == -k:
            out.pop()
        else:
            out.append(k)
    return tuple(out)


def reduce_word(c: CurveWord, cyclic: bool = False) -> CurveWord:
    """Freely (and optionally cyclically) reduce; idempotent."""
    w = _free_reduce(c.word)
    if cyclic or c.cyclically_reduced:
        while len(w) >= 2 and w[0] == -w[-1]:
            w = w[1:-1]
        return CurveWord(w, cyclically_reduced=True)
    return CurveWord(w, cyclically_reduced=False)


@dataclass(frozen=True)
class WeightedMulticurve:
    """Formal non-negative combination of curves.

    A component curve is either a CurveWord or a chart-curve identifier
    (a string naming a pants curve of an FN chart, or a named carried loop
    of a shear chart).
    """

    components: tuple[tuple[object, Fraction], ...]
    pants_supported: bool = False

    def __post_init__(self):
        seen = set()
        for curve, w in self.components:
            if rat(w) <= 0:
                raise SurfaceError(f"weight {w} is not positive")
            key = curve.word if isinstance(curve, CurveWord) else curve
            if key in seen:
                raise SurfaceError(f"duplicate component {key!r}")
            seen.add(key)

    @staticmethod
    def of(*pairs, pants_supported: bool = False) -> "WeightedMulticurve":
        comps = tuple((c, rat(w)) for c, w in pairs)
        return WeightedMulticurve(comps, pants_supported)


def multicurve_scale(l: WeightedMulticurve, c) -> WeightedMulticurve:
    c = rat(c)
    if c <= 0:
        raise SurfaceError(f"scale factor must be positive, got {c}")
    return WeightedMulticurve(
        tuple((curve, w * c) for curve, w in l.components), l.pants_supported
    )
