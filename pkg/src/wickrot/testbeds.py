"""Bundled testbeds and their JSON format.

Three beds ship with the package:
  t11.json    punctured-torus shear chart, dual track, word panel, carried
              curves, calibration block
  g2.json     closed genus-2 FN chart (handle decomposition), word panel,
              sampling box, calibration block
  onesw.json  abstract one-switch track fragment for exact linear tests

Loaders rebuild charts from the JSON; the files are the runtime source of
truth and scripts/make_testbeds.py regenerates them.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .fenchel import FNChart, FNCoordinates
from .rational import rat, rat_str
from .shear import (DualLoop, ShearChart, ShearCoordinates, Triangulation,
                    enumerate_carried_loops)
from .surfaces import SurfaceSig, Word
from .traintrack import Switch, TrainTrack


@dataclass(frozen=True)
class Testbed:
    name: str
    kind: str  # "shear" | "fn" | "track"
    chart: object | None
    track: TrainTrack | None
    base: object | None
    word_panel: tuple[Word, ...]
    curves: tuple[DualLoop, ...] = ()
    sample_box: dict = field(default_factory=dict)
    calibration: dict = field(default_factory=dict)
    raw: dict = field(default_factory=dict, compare=False)


# --- construction -------------------------------------------------------------

T11_GLUING = tuple(((0, i), (1, i)) for i in range(3))
T11_GEN_A = DualLoop(((0, 0, 1), (1, 1, 0)), "a1")
T11_GEN_B = DualLoop(((0, 0, 2), (1, 2, 0)), "b1")
T11_BASE = ("1/3", "-1/2", "1/6")

G2_SPUN_GLUING = (
    ((0, 0), (1, 0)),
    ((0, 1), (2, 0)),
    ((0, 2), (3, 0)),
    ((1, 1), (2, 1)),
    ((1, 2), (3, 1)),
    ((2, 2), (3, 2)),
)


def t11_chart() -> ShearChart:
    tri = Triangulation(2, T11_GLUING)
    return ShearChart(SurfaceSig(1, 1), tri, (T11_GEN_A, T11_GEN_B), name="t11")


def _is_primitive(steps) -> bool:
    n = len(steps)
    for p in range(1, n):
        if n % p == 0 and steps == steps[:p] * (n // p):
            return False
    return True


def t11_carried_curves(chart: ShearChart, count: int = 5) -> tuple[DualLoop, ...]:
    """Deterministic primitive carried loops, shortest first, hyperbolic at
    the base point."""
    base = ShearCoordinates.make(chart, [rat(v) for v in T11_BASE])
    vals = [float(v) for v in base.values]
    out = []
    maxlen = 4
    import numpy as np

    while len(out) < count and maxlen <= 10:
        out = []
        for lp in enumerate_carried_loops(chart, maxlen):
            if not _is_primitive(lp.steps):
                continue
            t = abs(np.trace(lp.holonomy(chart, vals)))
            if t > 2 + 1e-9:
                out.append(DualLoop(lp.steps, f"curve{len(out)}"))
            if len(out) == count:
                break
        maxlen += 2
    return tuple(out)


def random_word(rng: random.Random, rank: int, max_len: int) -> Word:
    n = rng.randint(1, max_len)
    w: list[int] = []
    while len(w) < n:
        k = rng.choice([s * g for g in range(1, rank + 1) for s in (1, -1)])
        if w and w[-1] == -k:
            continue
        w.append(k)
    return tuple(w)


def make_word_panel(rank: int, size: int = 20, seed: int = 2024, max_len: int = 4) -> tuple[Word, ...]:
    rng = random.Random(seed)
    panel: list[Word] = [(g,) for g in range(1, rank + 1)]
    seen = set(panel)
    while len(panel) < size:
        w = random_word(rng, rank, max_len)
        if w not in seen:
            seen.add(w)
            panel.append(w)
    return tuple(panel)


def build_t11() -> dict:
    chart = t11_chart()
    curves = t11_carried_curves(chart)
    return {
        "name": "t11",
        "kind": "shear",
        "chart": chart.as_json(),
        "base_coords": list(T11_BASE),
        "word_panel": [list(w) for w in make_word_panel(2, seed=11)],
        "carried_curves": [lp.as_json() for lp in curves],
        "dual_track": chart.dual_track.as_json(),
        "sample_box": {"reduced_scale": 0.8, "measure_scale": 0.5},
        "calibration": {},
    }


def build_g2() -> dict:
    chart = FNChart()
    return {
        "name": "g2",
        "kind": "fn",
        "chart": chart.as_json(),
        "base_lengths": [1.2, 1.6, 1.0],
        "base_twists": [0.3, -0.4, 0.25],
        "word_panel": [list(w) for w in make_word_panel(4, seed=22, max_len=3)],
        "sample_box": {
            "lengths": [0.8, 2.2],
            "twists": [-1.2, 1.2],
            "measure_scale": 0.5,
        },
        "calibration": {},
    }


def build_onesw() -> dict:
    track = TrainTrack(
        branches=("e", "ep", "em"),
        switches=(Switch("e", "ep", "em"),),
        name="onesw",
    )
    return {"name": "onesw", "kind": "track", "track": track.as_json()}


def g2_spun_track() -> TrainTrack:
    """Abstract maximal track on the closed genus-2 surface: dual to a
    4-triangle pairing with no vertex cycles required (spun combinatorics)."""
    from .shear import _corner_name, _edge_name

    gluing = {}
    for a, b in G2_SPUN_GLUING:
        gluing[a] = b
        gluing[b] = a
    edge_of_side = {}
    edges = []
    for t in range(4):
        for i in range(3):
            s = (t, i)
            if s in edge_of_side:
                continue
            k = len(edges)
            edges.append(s)
            edge_of_side[s] = k
            edge_of_side[gluing[s]] = k
    branches = [_edge_name(k) for k in range(len(edges))]
    branches += [_corner_name(t, i) for t in range(4) for i in range(3)]
    switches = []
    for t in range(4):
        for i in range(3):
            switches.append(
                Switch(
                    incoming=_edge_name(edge_of_side[(t, i)]),
                    out_plus=_corner_name(t, i),
                    out_minus=_corner_name(t, (i - 1) % 3),
                )
            )
    return TrainTrack(
        branches=tuple(branches),
        switches=tuple(switches),
        surface=SurfaceSig(2, 0),
        maximal=True,
        name="g2-spun",
    )


# --- loading ------------------------------------------------------------------


def _bundled(name: str) -> dict:
    with resources.files("wickrot.data").joinpath(name).open() as f:
        return json.load(f)


def load_testbed(path_or_name: str) -> Testbed:
    """Load from a file path, or a bundled name ('t11', 'g2', 'onesw')."""
    import os

    if os.path.exists(path_or_name):
        with open(path_or_name) as f:
            d = json.load(f)
    else:
        base = os.path.basename(path_or_name)
        name = base[:-5] if base.endswith(".json") else base
        try:
            d = _bundled(name + ".json")
        except FileNotFoundError:
            raise FileNotFoundError(
                f"no such testbed file or bundled name: {path_or_name!r}"
            ) from None
    return testbed_from_json(d)


def testbed_from_json(d: dict) -> Testbed:
    kind = d["kind"]
    panel = tuple(tuple(w) for w in d.get("word_panel", []))
    if kind == "shear":
        chart = ShearChart.from_json(d["chart"])
        base = ShearCoordinates.make(chart, [rat(v) for v in d["base_coords"]])
        curves = tuple(DualLoop.from_json(c) for c in d.get("carried_curves", []))
        return Testbed(
            d["name"], kind, chart, chart.dual_track, base, panel, curves,
            d.get("sample_box", {}), d.get("calibration", {}), d,
        )
    if kind == "fn":
        chart = FNChart.from_json(d["chart"])
        base = FNCoordinates(
            chart, tuple(float(v) for v in d["base_lengths"]),
            tuple(float(v) for v in d["base_twists"]),
        )
        return Testbed(
            d["name"], kind, chart, None, base, panel, (),
            d.get("sample_box", {}), d.get("calibration", {}), d,
        )
    if kind == "track":
        track = TrainTrack.from_json(d["track"])
        return Testbed(d["name"], kind, None, track, None, panel, (), {}, {}, d)
    raise ValueError(f"unknown testbed kind {kind!r}")
