"""Ideal-triangulation shear charts, dual train tracks, and holonomy.

A chart is a combinatorial ideal triangulation of a punctured surface:
triangles with ccw-ordered sides 0,1,2 and a fixed-point-free gluing
involution on side slots. Edge coordinates are shear parameters; a
structure is complete iff every puncture row (edge multiplicities around a
vertex cycle) pairs to zero with the coordinate vector.

Holonomy follows the classical crossing/turn recipe: crossing an edge with
shear x contributes X(x) = [[0, e^{x/2}], [-e^{-x/2}, 0]], turning inside a
triangle contributes a fixed matrix per turn direction. With these
conventions the loop around a puncture has trace +-2cosh(sum of crossed
shears), so completeness is exactly cusp parabolicity.

The dual track has one branch per edge and one branch per triangle corner;
switch relations at the two ends of each edge branch encode the corner
splitting (x_i + x_j - x_k)/2. Edge-coordinate vectors embed as weight
systems, realizing transverse cocycles in track coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from .rational import kernel_basis, mat_vec, rat, rat_str
from .surfaces import GroupPresentation, SurfaceSig, build_presentation
from .traintrack import Switch, TrainTrack, TrackError, WeightSystem, thurston_form

Side = tuple[int, int]  # (triangle, side index 0..2)

TURN_PLUS = np.array([[1.0, 1.0], [-1.0, 0.0]])   # exit side i+1 (corner turn)
TURN_MINUS = np.array([[0.0, 1.0], [-1.0, -1.0]])  # exit side i+2


class ChartError(ValueError):
    pass


def _edge_name(k: int) -> str:
    return f"e{k}"


def _corner_name(t: int, i: int) -> str:
    return f"c{t}_{i}"


@dataclass(frozen=True)
class Triangulation:
    n_triangles: int
    gluing: tuple[tuple[Side, Side], ...]  # unordered pairs of side slots

    def __post_init__(self):
        g = self.gluing_map
        slots = {(t, i) for t in range(self.n_triangles) for i in range(3)}
        if set(g) != slots:
            raise ChartError("gluing must cover every side slot exactly once")
        for s, s2 in g.items():
            if s == s2:
                raise ChartError(f"side {s} glued to itself")
            if g[s2] != s:
                raise ChartError("gluing is not an involution")

    @cached_property
    def gluing_map(self) -> dict[Side, Side]:
        m: dict[Side, Side] = {}
        for a, b in self.gluing:
            m[tuple(a)] = tuple(b)
            m[tuple(b)] = tuple(a)
        return m

    @cached_property
    def edges(self) -> list[tuple[Side, Side]]:
        """One entry per edge, ordered by smallest side slot."""
        seen = set()
        out = []
        for t in range(self.n_triangles):
            for i in range(3):
                s = (t, i)
                if s in seen:
                    continue
                s2 = self.gluing_map[s]
                seen.add(s)
                seen.add(s2)
                out.append((s, s2))
        return out

    @cached_property
    def edge_of_side(self) -> dict[Side, int]:
        m = {}
        for k, (a, b) in enumerate(self.edges):
            m[a] = k
            m[b] = k
        return m

    @cached_property
    def vertex_cycles(self) -> list[list[Side]]:
        """Corner orbits; corner (t,i) sits between sides i and i+1 of t.
        Walking ccw around the vertex crosses side i+1 into the glued slot."""
        def step(c: Side) -> Side:
            t, i = c
            return self.gluing_map[(t, (i + 1) % 3)]

        corners = {(t, i) for t in range(self.n_triangles) for i in range(3)}
        cycles = []
        seen: set[Side] = set()
        for c0 in sorted(corners):
            if c0 in seen:
                continue
            cyc = [c0]
            seen.add(c0)
            c = step(c0)
            while c != c0:
                cyc.append(c)
                seen.add(c)
                c = step(c)
            cycles.append(cyc)
        return cycles


@dataclass(frozen=True)
class DualLoop:
    """Closed path in the dual graph: steps (triangle, in_side, out_side),
    each step entering through in_side and leaving through out_side."""

    steps: tuple[tuple[int, int, int], ...]
    name: str = ""

    def validate(self, tri: Triangulation) -> None:
        g = tri.gluing_map
        for k, (t, i, j) in enumerate(self.steps):
            if i == j:
                raise ChartError("backtracking step (in == out)")
            t2, i2, _ = self.steps[(k + 1) % len(self.steps)]
            if g[(t, j)] != (t2, i2):
                raise ChartError(f"steps {k}->{k+1} are not glued consecutively")

    def counts(self, chart: "ShearChart") -> dict[str, Fraction]:
        """Per-branch traversal counts on the dual track."""
        c = {b: Fraction(0) for b in chart.dual_track.branches}
        for (t, i, j) in self.steps:
            c[_edge_name(chart.triangulation.edge_of_side[(t, i)])] += 1
            d = (j - i) % 3
            corner = i if d == 1 else j  # corner between the two visited sides
            c[_corner_name(t, corner)] += 1
        return c

    def rebased(self, k: int) -> "DualLoop":
        k %= len(self.steps)
        return DualLoop(self.steps[k:] + self.steps[:k], self.name)

    def holonomy(self, chart: "ShearChart", values) -> np.ndarray:
        """Product of crossing and turn matrices; `values` indexed by edge."""
        vals = list(values)
        cplx = any(isinstance(v, complex) for v in vals)
        dt = complex if cplx else float
        M = np.eye(2, dtype=dt)
        for (t, i, j) in self.steps:
            x = dt(vals[chart.triangulation.edge_of_side[(t, i)]])
            ep = np.exp(x / 2)
            cross = np.array([[0, ep], [-1 / ep, 0]], dtype=dt)
            d = (j - i) % 3
            turn = TURN_PLUS if d == 1 else TURN_MINUS
            M = M @ cross @ turn.astype(dt)
        return M

    def as_json(self) -> dict:
        return {"name": self.name, "steps": [list(s) for s in self.steps]}

    @staticmethod
    def from_json(d: dict) -> "DualLoop":
        return DualLoop(tuple(tuple(s) for s in d["steps"]), d.get("name", ""))


@dataclass(frozen=True)
class ShearChart:
    surface: SurfaceSig
    triangulation: Triangulation
    generator_loops: tuple[DualLoop, ...]
    name: str = ""

    def __post_init__(self):
        if self.surface.punctures == 0:
            raise ChartError("shear charts require punctured surfaces")
        if len(self.triangulation.vertex_cycles) != self.surface.punctures:
            raise ChartError(
                f"triangulation has {len(self.triangulation.vertex_cycles)} vertex "
                f"cycles, surface has {self.surface.punctures} punctures"
            )
        for lp in self.generator_loops:
            lp.validate(self.triangulation)

    @property
    def n_edges(self) -> int:
        return len(self.triangulation.edges)

    @cached_property
    def presentation(self) -> GroupPresentation:
        return build_presentation(self.surface)

    @cached_property
    def puncture_rows(self) -> list[list[Fraction]]:
        """Edge multiplicities around each vertex cycle; completeness is
        row @ x = 0 for every row."""
        rows = []
        for cyc in self.triangulation.vertex_cycles:
            row = [Fraction(0)] * self.n_edges
            for (t, i) in cyc:
                row[self.triangulation.edge_of_side[(t, (i + 1) % 3)]] += 1
            rows.append(row)
        return rows

    @cached_property
    def dual_track(self) -> TrainTrack:
        tri = self.triangulation
        branches = [_edge_name(k) for k in range(self.n_edges)]
        branches += [_corner_name(t, i) for t in range(tri.n_triangles) for i in range(3)]
        switches = []
        for t in range(tri.n_triangles):
            for i in range(3):
                switches.append(
                    Switch(
                        incoming=_edge_name(tri.edge_of_side[(t, i)]),
                        out_plus=_corner_name(t, i),
                        out_minus=_corner_name(t, (i - 1) % 3),
                    )
                )
        constraints = tuple(
            tuple(row + [Fraction(0)] * (3 * tri.n_triangles)) for row in self.puncture_rows
        )
        return TrainTrack(
            branches=tuple(branches),
            switches=tuple(switches),
            constraints=constraints,
            surface=self.surface,
            maximal=True,
            name=(self.name + "-dual") if self.name else "dual",
        )

    def embed_edge_vector(self, x) -> WeightSystem:
        """Edge coordinates -> full weight system (corner weights are the
        half-sums forced by the switch relations)."""
        xs = [rat(v) for v in x]
        if len(xs) != self.n_edges:
            raise ChartError("edge vector has wrong length")
        tri = self.triangulation
        w: dict[str, Fraction] = {}
        for k, v in enumerate(xs):
            w[_edge_name(k)] = v
        for t in range(tri.n_triangles):
            s = [xs[tri.edge_of_side[(t, i)]] for i in range(3)]
            for i in range(3):
                w[_corner_name(t, i)] = (s[i] + s[(i + 1) % 3] - s[(i + 2) % 3]) / 2
        track = self.dual_track
        return WeightSystem(track, tuple(w[b] for b in track.branches))

    def restrict_weight_system(self, w: WeightSystem) -> list[Fraction]:
        return [w[_edge_name(k)] for k in range(self.n_edges)]

    @cached_property
    def omega_edges(self) -> list[list[Fraction]]:
        """Thurston form in edge coordinates (exact antisymmetric matrix)."""
        n = self.n_edges
        basis = []
        for k in range(n):
            e = [Fraction(0)] * n
            e[k] = Fraction(1)
            basis.append(self.embed_edge_vector(e))
        t = self.dual_track
        return [[thurston_form(t, basis[i], basis[j]) for j in range(n)] for i in range(n)]

    @cached_property
    def complete_basis(self) -> list[list[Fraction]]:
        """Rational basis of the completeness subspace (the reduced chart)."""
        return kernel_basis(self.puncture_rows, self.n_edges)

    @property
    def reduced_dim(self) -> int:
        return len(self.complete_basis)

    @cached_property
    def omega_reduced(self) -> list[list[Fraction]]:
        """Thurston form on the completeness subspace, in the reduced basis."""
        V = self.complete_basis
        OmV = [mat_vec(self.omega_edges, v) for v in V]
        return [
            [sum((a * b for a, b in zip(V[i], OmV[j])), Fraction(0)) for j in range(len(V))]
            for i in range(len(V))
        ]

    def reduced_to_edges(self, s) -> list[Fraction]:
        V = self.complete_basis
        out = [Fraction(0)] * self.n_edges
        for coef, v in zip(s, V):
            c = rat(coef) if not isinstance(coef, float) else Fraction(coef)
            for k in range(self.n_edges):
                out[k] += c * v[k]
        return out

    def as_json(self) -> dict:
        return {
            "name": self.name,
            "surface": self.surface.as_json(),
            "n_triangles": self.triangulation.n_triangles,
            "gluing": [[list(a), list(b)] for a, b in self.triangulation.gluing],
            "generators": [lp.as_json() for lp in self.generator_loops],
        }

    @staticmethod
    def from_json(d: dict) -> "ShearChart":
        tri = Triangulation(
            d["n_triangles"],
            tuple((tuple(a), tuple(b)) for a, b in d["gluing"]),
        )
        gens = tuple(DualLoop.from_json(x) for x in d["generators"])
        return ShearChart(SurfaceSig(**d["surface"]), tri, gens, d.get("name", ""))


@dataclass(frozen=True)
class ShearCoordinates:
    """Exact per-edge shear values. floats are accepted and converted exactly
    (every float is a dyadic rational), so flow identities hold with zero
    tolerance."""

    chart: ShearChart
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != self.chart.n_edges:
            raise ChartError("coordinate vector has wrong length")

    @staticmethod
    def make(chart: ShearChart, values) -> "ShearCoordinates":
        vals = tuple(Fraction(v) if isinstance(v, float) else rat(v) for v in values)
        return ShearCoordinates(chart, vals)

    @property
    def complete(self) -> bool:
        return all(
            sum((r * v for r, v in zip(row, self.values)), Fraction(0)) == 0
            for row in self.chart.puncture_rows
        )

    def floats(self) -> np.ndarray:
        return np.array([float(v) for v in self.values])

    def as_weight_system(self) -> WeightSystem:
        return self.chart.embed_edge_vector(self.values)

    def as_json(self) -> list[str]:
        return [rat_str(v) for v in self.values]


def enumerate_carried_loops(chart: ShearChart, max_steps: int = 4) -> list[DualLoop]:
    """Deterministic list of closed non-backtracking dual loops up to the
    given length, deduplicated under cyclic rotation."""
    tri = chart.triangulation
    g = tri.gluing_map
    found: dict[tuple, DualLoop] = {}

    def rec(path, t, i, maxlen):
        if len(path) > 0 and len(path) <= maxlen and g[(path[-1][0], path[-1][2])] == (path[0][0], path[0][1]):
            steps = tuple(path)
            key = min(steps[k:] + steps[:k] for k in range(len(steps)))
            found.setdefault(key, DualLoop(steps))
        if len(path) == maxlen:
            return
        for j in range(3):
            if j == i:
                continue
            t2, i2 = g[(t, j)]
            path.append((t, i, j))
            rec(path, t2, i2, maxlen)
            path.pop()

    for L in range(2, max_steps + 1, 2):
        for t0 in range(tri.n_triangles):
            for i0 in range(3):
                rec([], t0, i0, L)
    return [found[k] for k in sorted(found)]


def cocycle_length(chart: ShearChart, sigma_m: ShearCoordinates, tau: WeightSystem) -> Fraction:
    """Thurston pairing of the chart point against a weight system: the
    linear length functional of cocycles supported on the chart lamination.
    For carried-but-transverse closed curves this is *not* the geodesic
    length (see tests); calibration constants are recorded by the testbeds.
    """
    if tau.track != chart.dual_track:
        raise TrackError("weight system lives on a different track")
    if sigma_m.chart is not chart and sigma_m.chart != chart:
        raise ChartError("coordinates belong to a different chart")
    return thurston_form(chart.dual_track, sigma_m.as_weight_system(), tau)
