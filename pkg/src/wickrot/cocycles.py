"""Group cocycles with coefficients in sl2: tangent vectors to representation
varieties and Minkowski translation parts.

A cocycle stores one traceless matrix per generator; values on words follow
u(gh) = u(g) + Ad(g) u(h). Extraction from a smooth family of holonomies is
central FD with one Richardson level: u(g) = d/dt rho_t(g) rho(g)^{-1}.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .holonomy import Holonomy
from .matrices import inv_sl2, traceless_part, word_product
from .numerics import FDConfig
from .surfaces import Word

TRACELESS_TOL = 1e-10
COCYCLE_TOL = 1e-6


class CocycleError(ValueError):
    pass


def _ad(M, X):
    return M @ X @ inv_sl2(M)


@dataclass(frozen=True)
class Cocycle:
    base: Holonomy
    values: tuple[np.ndarray, ...]
    raw_trace_residual: float = 0.0  # before traceless projection

    def __post_init__(self):
        if len(self.values) != self.base.presentation.rank:
            raise CocycleError("one value per generator required")
        for X in self.values:
            if abs(np.trace(X)) > 1e-12:
                raise CocycleError("cocycle values must be traceless (projected)")

    def on_letter(self, k: int) -> np.ndarray:
        if k > 0:
            return self.values[k - 1]
        M = inv_sl2(self.base.matrices[-k - 1])
        return -_ad(M, self.values[-k - 1])

    def on_word(self, w: Word) -> np.ndarray:
        u = np.zeros((2, 2), dtype=self.values[0].dtype)
        M = np.eye(2, dtype=self.base.matrices[0].dtype)
        for k in w:
            u = u + _ad(M, self.on_letter(k))
            M = M @ (self.base.matrices[k - 1] if k > 0 else inv_sl2(self.base.matrices[-k - 1]))
        return u

    def scale(self, c: float) -> "Cocycle":
        return Cocycle(self.base, tuple(c * X for X in self.values), self.raw_trace_residual)

    def __add__(self, other: "Cocycle") -> "Cocycle":
        if other.base is not self.base and other.base != self.base:
            raise CocycleError("cocycles at different representations")
        return Cocycle(self.base, tuple(a + b for a, b in zip(self.values, other.values)))

    def relator_residual(self) -> float:
        """A derivative of a relator-preserving family vanishes on relators."""
        return max(
            (float(np.abs(self.on_word(r)).max()) for r in self.base.presentation.relators),
            default=0.0,
        )

    def condition_residual(self, words: list[tuple[Word, Word]] | None = None) -> float:
        """Twisted cocycle condition u(gh) = u(g) + Ad(g)u(h) on word pairs,
        with u(gh) evaluated independently through the concatenation."""
        pres = self.base.presentation
        if words is None:
            n = pres.rank
            words = [((i + 1,), (j + 1,)) for i in range(n) for j in range(n)]
        worst = 0.0
        for g, h in words:
            lhs = self.on_word(g + h)
            rhs = self.on_word(g) + _ad(word_product(self.base.matrices, g), self.on_word(h))
            worst = max(worst, float(np.abs(lhs - rhs).max()))
        return worst


def coboundary(rho: Holonomy, A: np.ndarray) -> Cocycle:
    """u(g) = A - Ad(g) A; pairs to zero against everything."""
    A = traceless_part(np.asarray(A, dtype=rho.matrices[0].dtype))
    vals = tuple(A - _ad(M, A) for M in rho.matrices)
    return Cocycle(rho, vals)


def cocycle_from_direction(
    builder, x0, direction, cfg: FDConfig = FDConfig(h=1e-4)
) -> Cocycle:
    """u(g) = d/dt rho_{x0 + t v}(g) rho_{x0}(g)^{-1}, central + Richardson.

    builder maps a coordinate vector to a Holonomy. The raw trace residual
    (before projection) is recorded; the projected values are exactly
    traceless. Raises if the raw residual or the cocycle condition residual
    breaches its gate.
    """
    x0 = np.asarray(x0, dtype=float)
    v = np.asarray(direction, dtype=float)
    rho0 = builder(x0)

    def diffs(h):
        gp = builder(x0 + h * v).matrices
        gm = builder(x0 - h * v).matrices
        return [(p - m) / (2 * h) for p, m in zip(gp, gm)]

    d1 = diffs(cfg.h)
    if cfg.richardson:
        d2 = diffs(cfg.h / 2)
        d = [(4 * b - a) / 3 for a, b in zip(d1, d2)]
    else:
        d = d1
    raw = [dg @ inv_sl2(M) for dg, M in zip(d, rho0.matrices)]
    residual = max(float(abs(np.trace(X))) for X in raw) if raw else 0.0
    if residual > TRACELESS_TOL:
        raise CocycleError(
            f"raw trace residual {residual:.3e} exceeds {TRACELESS_TOL:.0e} "
            f"(step h={cfg.h})"
        )
    vals = tuple(traceless_part(X) for X in raw)
    u = Cocycle(rho0, vals, raw_trace_residual=residual)
    cond = u.condition_residual()
    if cond > COCYCLE_TOL:
        raise CocycleError(f"cocycle condition residual {cond:.3e} exceeds {COCYCLE_TOL:.0e}")
    return u


def shear_flow_cocycle(chart, sigma, tau) -> Cocycle:
    """Exact derivative of the shear-chart holonomy along the earthquake flow
    sigma + t tau: the sum over edge crossings of the conjugated translation
    generator, weighted by the crossing's measure. Independent of the FD
    route (used as its oracle)."""
    from .holonomy import holonomy_from_shear
    from .shear import ShearCoordinates

    rho = holonomy_from_shear(chart, sigma, check_cusps=False)
    vals_f = [float(x) for x in sigma.values]
    tau_edges = [float(w) for w in chart.restrict_weight_system(tau)]
    J = np.array([[0.5, 0.0], [0.0, -0.5]])
    out = []
    for lp in chart.generator_loops:
        M = np.eye(2)
        total = np.zeros((2, 2))
        for (t, i, j) in lp.steps:
            e = chart.triangulation.edge_of_side[(t, i)]
            total = total + tau_edges[e] * _ad(M, J)
            x = vals_f[e]
            ep = np.exp(x / 2)
            cross = np.array([[0.0, ep], [-1.0 / ep, 0.0]])
            from .shear import TURN_MINUS, TURN_PLUS

            turn = TURN_PLUS if (j - i) % 3 == 1 else TURN_MINUS
            M = M @ cross @ turn
        out.append(traceless_part(total))
    return Cocycle(rho, tuple(out))


def fn_sep_twist_cocycle(rho: Holonomy) -> Cocycle:
    """Exact separating-curve twist cocycle on the genus-2 FN chart."""
    from .fenchel import sep_twist_cocycle_values

    return Cocycle(rho, tuple(traceless_part(X) for X in sep_twist_cocycle_values(rho)))
