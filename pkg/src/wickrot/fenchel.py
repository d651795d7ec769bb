"""Fenchel-Nielsen chart on the closed genus-2 surface.

Pants decomposition of handle type: two one-holed tori glued along the
separating curve. Chart coordinates (l1, t1, L, T, l3, t3): lengths of the
two handle curves and the separating curve, with twists in length units.

Construction: each handle is a one-holed-torus group (a, b) with a diagonal,
b crossing it perpendicularly, boundary trace forced to -2cosh(L/2) by the
trace identity; the second handle is conjugated onto the inverse separating
axis by a balanced eigenframe with a twist insertion. Internal arithmetic is
longdouble and the last generator gets a rank-aware Newton polish so the
relator closes to evaluation precision. The construction raises if the
float64 relator residual still exceeds RELATOR_TOL (never silently accepted).

Twist conventions per curve are recorded data; the separating-curve twist
coordinate field is the exactly normalized Fenchel-Nielsen twist (its Dehn
periodicity T -> T + L is the remarking a2 -> c a2 c^-1, b2 -> c b2 c^-1
with c = [a2, b2], and its insertion generator is F (X/2) F^-1 on the
separating axis). The handle twist fields preserve all pants lengths but
carry a frame-dependent transverse component; flows and round trips use
coordinates, so this is a documented chart property, not an obstruction.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .matrices import (LD, SL2_BASIS, commutator, expm_traceless,
                       hyperbolic_frame, inv_sl2, mdiag, mperp, proj_residual)
from .holonomy import Holonomy, RELATOR_TOL, HolonomyError
from .rational import rat
from .surfaces import SurfaceSig, Word, build_presentation

SEP_X = np.array([[0.5, 0.0], [0.0, -0.5]])


class FNError(ValueError):
    pass


@dataclass(frozen=True)
class FNChart:
    """Genus-2 handle decomposition; curve order (g1, sep, g2)."""

    surface: SurfaceSig = SurfaceSig(2, 0)
    curves: tuple[str, ...] = ("g1", "sep", "g2")
    twist_orientations: tuple[int, ...] = (1, 1, 1)
    name: str = "genus2-handle"

    def __post_init__(self):
        if self.surface != SurfaceSig(2, 0):
            raise FNError("only the closed genus-2 handle decomposition is implemented")

    @property
    def presentation(self):
        return build_presentation(self.surface)

    @property
    def n_curves(self) -> int:
        return 3

    # words of the pants curves in the standard generators a1,b1,a2,b2
    @property
    def curve_word_map(self) -> tuple[tuple[str, Word], ...]:
        return (
            (self.curves[0], (1,)),
            (self.curves[1], (1, 2, -1, -2)),
            (self.curves[2], (3,)),
        )

    def as_json(self) -> dict:
        return {
            "name": self.name,
            "surface": self.surface.as_json(),
            "curves": list(self.curves),
            "twist_orientations": list(self.twist_orientations),
        }

    @staticmethod
    def from_json(d: dict) -> "FNChart":
        return FNChart(
            SurfaceSig(**d["surface"]),
            tuple(d["curves"]),
            tuple(d.get("twist_orientations", (1, 1, 1))),
            d.get("name", "genus2-handle"),
        )


@dataclass(frozen=True)
class FNCoordinates:
    chart: FNChart
    lengths: tuple[float, float, float]
    twists: tuple[float, float, float]

    def __post_init__(self):
        if any(l <= 0 for l in self.lengths):
            raise FNError(f"lengths must be positive, got {self.lengths}")

    def vector(self) -> np.ndarray:
        l, t = self.lengths, self.twists
        return np.array([l[0], t[0], l[1], t[1], l[2], t[2]])

    @staticmethod
    def from_vector(chart: FNChart, x) -> "FNCoordinates":
        x = [float(v) for v in x]
        return FNCoordinates(chart, (x[0], x[2], x[4]), (x[1], x[3], x[5]))

    def with_twists(self, twists) -> "FNCoordinates":
        return FNCoordinates(self.chart, self.lengths, tuple(float(t) for t in twists))

    def as_json(self) -> dict:
        return {"lengths": list(self.lengths), "twists": list(self.twists)}


def _one_holed_torus(ell, tau, L, dtype=LD):
    """Handle pair (a, b): a diagonal of length ell, b crossing it, boundary
    commutator trace exactly -2cosh(L/2) via the trace identity
    tr[a,b] = x^2 + y^2 - x^2 y^2/4 - 2 with z = xy/2. tau may be complex
    (imaginary part = grafting insertion)."""
    ell, L = LD(ell), LD(L)
    x = 2 * np.cosh(ell / 2)
    cL = np.cosh(L / 2)
    y2 = 4 * (x * x + 2 * cL - 2) / (x * x - 4)
    lam = 2 * np.arccosh(np.sqrt(y2) / 2)
    a = mdiag(ell, dtype=LD).astype(dtype)
    e = np.exp(np.asarray(tau, dtype=dtype) / 2)
    tw = np.array([[e, 0], [0, 1 / e]], dtype=dtype)
    b = tw @ mperp(lam, dtype=LD).astype(dtype)
    return a, b


def _solve_rank_aware(A, b, rel_tol=1e-9):
    """3x3 least-norm-ish solve tolerating the 1-dim centralizer kernel."""
    A = A.copy()
    b = b.copy()
    n = 3
    cols = list(range(n))
    row = 0
    first_piv = None
    for k in range(n):
        sub = np.abs(A[row:, k:])
        if sub.size == 0:
            break
        r_off, c_off = np.unravel_index(int(np.argmax(sub)), sub.shape)
        c = k + c_off
        if c != k:
            A[:, [k, c]] = A[:, [c, k]]
            cols[k], cols[c] = cols[c], cols[k]
        r = row + r_off
        if r != row:
            A[[row, r]] = A[[r, row]]
            b[[row, r]] = b[[r, row]]
        piv = A[row, k]
        if abs(piv) == 0 or (first_piv is not None and abs(piv) < rel_tol * abs(first_piv)):
            break
        if first_piv is None:
            first_piv = piv
        for rr in range(row + 1, n):
            f = A[rr, k] / piv
            A[rr, k:] -= f * A[row, k:]
            b[rr] -= f * b[row]
        row += 1
    y = np.zeros(n, dtype=A.dtype)
    for k in range(row - 1, -1, -1):
        y[k] = (b[k] - A[k, k + 1 :] @ y[k + 1 :]) / A[k, k]
    x = np.zeros(n, dtype=A.dtype)
    for k in range(n):
        x[cols[k]] = y[k]
    return x


def _polish_b2(K, a2, b2):
    """Newton-correct b2 -> b2 exp(eps) so that K [a2, b2] = Id exactly.

    The solution manifold is 1-dimensional (centralizer of a2), so the 3x3
    Newton system is rank 2 and solved rank-aware.
    """
    basis = [B.astype(K.dtype) for B in SL2_BASIS]
    I = np.eye(2, dtype=K.dtype)
    for _ in range(6):
        R = K @ commutator(a2, b2)
        if np.real(np.trace(R)) < 0:
            R = -R
        res = R - I
        res = res - (np.trace(res) / 2) * I
        rvec = np.array([res[0, 0], res[0, 1], res[1, 0]], dtype=LD)
        if max(abs(v) for v in rvec) < LD(1e-17):
            break
        ia2, ib2 = inv_sl2(a2), inv_sl2(b2)
        J = np.zeros((3, 3), dtype=K.dtype)
        for j, E in enumerate(basis):
            D = K @ a2 @ b2 @ (E @ ia2 - ia2 @ E) @ ib2
            D = D - (np.trace(D) / 2) * I
            J[:, j] = [D[0, 0], D[0, 1], D[1, 0]]
        eps = _solve_rank_aware(J, -rvec)
        b2 = b2 @ expm_traceless(eps[0] * basis[0] + eps[1] * basis[1] + eps[2] * basis[2])
    return b2


def _generators_ld(x: FNCoordinates, imag_twists=(0.0, 0.0, 0.0)):
    o = x.chart.twist_orientations
    l1, L, l3 = x.lengths
    cplx = any(abs(float(s)) > 0 for s in imag_twists)
    dtype = np.clongdouble if cplx else LD
    tw = [o[k] * complex(x.twists[k], float(imag_twists[k])) for k in range(3)]
    if not cplx:
        tw = [t.real for t in tw]
    t1, T, t3 = tw
    a1, b1 = _one_holed_torus(l1, t1, L, dtype)
    K = commutator(a1, b1)
    a2_0, b2_0 = _one_holed_torus(l3, t3, L, dtype)
    K0 = commutator(a2_0, b2_0)
    F1, _ = hyperbolic_frame(inv_sl2(K))
    F0, _ = hyperbolic_frame(K0)
    e = np.exp(np.asarray(T, dtype=dtype) / 2)
    twist_mat = np.array([[e, 0], [0, 1 / e]], dtype=dtype)
    G = F1 @ twist_mat @ inv_sl2(F0)
    a2 = G @ a2_0 @ inv_sl2(G)
    b2 = _polish_b2(K, a2, G @ b2_0 @ inv_sl2(G))
    return (a1, b1, a2, b2), F1


def holonomy_from_fn(chart: FNChart, x: FNCoordinates) -> Holonomy:
    if x.chart != chart:
        raise FNError("coordinates belong to a different chart")
    gens_ld, _ = _generators_ld(x)
    mats = tuple(M.astype(np.float64) for M in gens_ld)
    rho = Holonomy(chart.presentation, mats, curve_words=chart.curve_word_map)
    res = rho.relator_residual()
    if res > RELATOR_TOL:
        raise HolonomyError(
            f"relator residual {res:.3e} exceeds {RELATOR_TOL:.0e}: construction "
            "failure (coordinates outside the well-conditioned box?)"
        )
    for name, ell in zip(chart.curves, x.lengths):
        w = rho.resolve(name)
        got = abs(rho.trace(w))
        want = 2.0 * np.cosh(ell / 2.0)
        if abs(got - want) > 1e-9 * max(1.0, want):
            raise HolonomyError(
                f"curve {name!r} trace {got!r} does not match prescribed length"
            )
    return rho


def complex_holonomy_from_fn(chart: FNChart, x: FNCoordinates, imag_twists) -> Holonomy:
    """Holonomy with complex twists t_i + i s_i (grafting realization): the
    same construction run over complex matrices."""
    gens_ld, _ = _generators_ld(x, imag_twists)
    mats = tuple(M.astype(complex) for M in gens_ld)
    return Holonomy(chart.presentation, mats, field="complex",
                    curve_words=chart.curve_word_map)


def sep_twist_cocycle_values(rho: Holonomy) -> tuple[np.ndarray, ...]:
    """Exact derivative cocycle of the separating twist: the insertion
    generator J = F (X/2) F^-1 on the separating axis, summed over crossings
    (handle-2 generators pick up J - Ad J)."""
    K = commutator(rho.matrices[0], rho.matrices[1])
    F, _ = hyperbolic_frame(inv_sl2(K))
    J = F @ SEP_X @ inv_sl2(F)
    z = np.zeros((2, 2))
    a2, b2 = rho.matrices[2], rho.matrices[3]
    return (z, z, J - a2 @ J @ inv_sl2(a2), J - b2 @ J @ inv_sl2(b2))


def dehn_twist_remarking(rho: Holonomy) -> Holonomy:
    """Remarked generators after a full separating Dehn twist: conjugate the
    handle-2 pair by c = [a2, b2]."""
    c = commutator(rho.matrices[2], rho.matrices[3])
    ic = inv_sl2(c)
    mats = (
        rho.matrices[0],
        rho.matrices[1],
        c @ rho.matrices[2] @ ic,
        c @ rho.matrices[3] @ ic,
    )
    return Holonomy(rho.presentation, mats, rho.field, rho.curve_words)
