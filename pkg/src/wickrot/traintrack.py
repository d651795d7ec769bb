"""Train tracks, weight systems, and the Thurston intersection form.

A track is combinatorial: named branches and trivalent switches. Each switch
records one incoming branch and two ordered outgoing branches (plus, minus);
the ordering is input data fixed by the surface orientation, never inferred.
Weight systems are exact rationals and every identity in this module is
checked with zero tolerance.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .rational import in_span, kernel_basis, rat, rat_str
from .surfaces import SurfaceSig


class TrackError(ValueError):
    pass


@dataclass(frozen=True)
class Switch:
    incoming: str
    out_plus: str
    out_minus: str


@dataclass(frozen=True)
class TrainTrack:
    """Branches + trivalent switches; optional extra linear constraint rows
    (puncture/boundary conditions) attached as data, one row per constraint
    in branch order. Fragments (branches with free ends) are allowed; the
    `maximal` flag marks tracks dual to a full ideal triangulation."""

    branches: tuple[str, ...]
    switches: tuple[Switch, ...]
    constraints: tuple[tuple[Fraction, ...], ...] = ()
    surface: SurfaceSig | None = None
    maximal: bool = False
    name: str = ""

    def __post_init__(self):
        idx = self.index
        for s in self.switches:
            for b in (s.incoming, s.out_plus, s.out_minus):
                if b not in idx:
                    raise TrackError(f"switch references unknown branch {b!r}")
        for row in self.constraints:
            if len(row) != len(self.branches):
                raise TrackError("constraint row length != branch count")

    @property
    def index(self) -> dict[str, int]:
        return {b: i for i, b in enumerate(self.branches)}

    def switch_rows(self) -> list[list[Fraction]]:
        """Matrix of the relations a(in) - a(out+) - a(out-) = 0."""
        idx = self.index
        rows = []
        for s in self.switches:
            row = [Fraction(0)] * len(self.branches)
            row[idx[s.incoming]] += 1
            row[idx[s.out_plus]] -= 1
            row[idx[s.out_minus]] -= 1
            rows.append(row)
        return rows

    def as_json(self) -> dict:
        return {
            "name": self.name,
            "edges": list(self.branches),
            "switches": [
                {"in": s.incoming, "out_plus": s.out_plus, "out_minus": s.out_minus}
                for s in self.switches
            ],
            "constraints": [[rat_str(v) for v in row] for row in self.constraints],
            "surface": self.surface.as_json() if self.surface else None,
            "maximal": self.maximal,
        }

    @staticmethod
    def from_json(d: dict) -> "TrainTrack":
        surf = SurfaceSig(**d["surface"]) if d.get("surface") else None
        return TrainTrack(
            branches=tuple(d["edges"]),
            switches=tuple(
                Switch(s["in"], s["out_plus"], s["out_minus"]) for s in d["switches"]
            ),
            constraints=tuple(
                tuple(rat(v) for v in row) for row in d.get("constraints", [])
            ),
            surface=surf,
            maximal=d.get("maximal", False),
            name=d.get("name", ""),
        )


@dataclass(frozen=True)
class WeightSystem:
    track: TrainTrack
    weights: tuple[Fraction, ...]
    lamination_realizable: bool = False

    def __getitem__(self, branch: str) -> Fraction:
        return self.weights[self.track.index[branch]]

    def __add__(self, other: "WeightSystem") -> "WeightSystem":
        _same_track(self, other)
        return WeightSystem(self.track, tuple(a + b for a, b in zip(self.weights, other.weights)))

    def __sub__(self, other: "WeightSystem") -> "WeightSystem":
        _same_track(self, other)
        return WeightSystem(self.track, tuple(a - b for a, b in zip(self.weights, other.weights)))

    def __neg__(self) -> "WeightSystem":
        return WeightSystem(self.track, tuple(-a for a in self.weights))

    def scale(self, c) -> "WeightSystem":
        c = rat(c)
        return WeightSystem(self.track, tuple(c * a for a in self.weights))

    def as_json(self) -> list[str]:
        return [rat_str(v) for v in self.weights]


def _same_track(a: WeightSystem, b: WeightSystem) -> None:
    if a.track is not b.track and a.track != b.track:
        raise TrackError("weight systems live on different tracks")


def validate_weights(track: TrainTrack, raw: Mapping[str, object] | Sequence[object]) -> WeightSystem:
    """Check every switch relation exactly; reject naming the first bad switch."""
    if isinstance(raw, Mapping):
        missing = [b for b in track.branches if b not in raw]
        if missing:
            raise TrackError(f"no weight for branches {missing}")
        vals = tuple(rat(raw[b]) for b in track.branches)
    else:
        if len(raw) != len(track.branches):
            raise TrackError("weight vector length != branch count")
        vals = tuple(rat(v) for v in raw)
    idx = track.index
    for k, s in enumerate(track.switches):
        lhs = vals[idx[s.incoming]]
        rhs = vals[idx[s.out_plus]] + vals[idx[s.out_minus]]
        if lhs != rhs:
            raise TrackError(
                f"switch relation violated at switch {k} "
                f"(in={s.incoming}): {lhs} != {rhs}"
            )
    return WeightSystem(track, vals)


def weight_space_basis(track: TrainTrack, with_constraints: bool = False) -> list[WeightSystem]:
    """Exact rational basis of the switch-relation kernel (optionally also
    intersecting the attached constraint rows). Dimension computed, never
    assumed."""
    rows = track.switch_rows()
    if with_constraints:
        rows += [list(r) for r in track.constraints]
    basis = kernel_basis(rows, len(track.branches))
    return [WeightSystem(track, tuple(v)) for v in basis]


def spans_weight_space(basis: list[WeightSystem], w: WeightSystem) -> bool:
    return in_span([b.weights for b in basis], w.weights)


def thurston_form(track: TrainTrack, a: WeightSystem, b: WeightSystem) -> Fraction:
    """Sum over switches of a(out+) b(out-) - b(out+) a(out-), exact."""
    if a.track != track or b.track != track:
        raise TrackError("weight system on the wrong track")
    total = Fraction(0)
    for s in track.switches:
        total += a[s.out_plus] * b[s.out_minus] - b[s.out_plus] * a[s.out_minus]
    return total


def double_earthquake_linear(sigma: WeightSystem, tau: WeightSystem) -> tuple[WeightSystem, WeightSystem]:
    """The left/right pair (sigma + tau, sigma - tau), exact."""
    _same_track(sigma, tau)
    return sigma + tau, sigma - tau


def de_pullback_identity(
    rho1: WeightSystem, theta1: WeightSystem, rho2: WeightSystem, theta2: WeightSystem
) -> tuple[Fraction, Fraction]:
    """Both sides of the factor-two identity, evaluated exactly.

    lhs = Om(rho1+theta1, rho2+theta2) - Om(rho1-theta1, rho2-theta2)
    rhs = 2 Om(theta1, rho2) - 2 Om(theta2, rho1)

    Equality is a theorem; the test suite asserts it, this function only
    evaluates.
    """
    for w in (theta1, rho2, theta2):
        _same_track(rho1, w)
    t = rho1.track
    lhs = thurston_form(t, rho1 + theta1, rho2 + theta2) - thurston_form(
        t, rho1 - theta1, rho2 - theta2
    )
    rhs = 2 * thurston_form(t, theta1, rho2) - 2 * thurston_form(t, theta2, rho1)
    return lhs, rhs


def carried_cocycle(track: TrainTrack, counts: Mapping[str, object]) -> WeightSystem:
    """Weight system from per-branch traversal counts of a carried curve
    system. Counts must be non-negative and satisfy the switch relations."""
    for b, v in counts.items():
        if rat(v) < 0:
            raise TrackError(f"negative traversal count on branch {b!r}")
    ws = validate_weights(track, counts)
    return WeightSystem(ws.track, ws.weights, lamination_realizable=True)
