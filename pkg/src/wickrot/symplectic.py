"""Symplectic pairings on chart coordinates and the pullback verifier.

A charted map is a coordinate evaluator between boxes; pullback_check
computes its FD Jacobian at each sample, transports the target form, and
compares against c times the source form on all coordinate 2-planes. With
c_expected = "estimate" the best single constant is fitted jointly across
samples and the fit residual reported. Maps with an exact rational Jacobian
(the linear chart maps) are checked exactly along a rational path.

Chart realizations on a shear testbed, all on the reduced (completeness)
coordinates with the exact Thurston matrix M:
  double earthquake  (s, u) -> (s + t(u), s - t(u)),  u = Om(t, .)
  grafting           (s, u) -> s + i t(u)
  pleated Wick       z = x + iy -> (x + y, x - y)
with target forms Om (+) -Om, Im-complexified Om, and source the canonical
cotangent form.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .goldman import PairingKind
from .numerics import FDConfig, jacobian
from .rational import mat_vec, rref
from .shear import ShearChart


class SymplecticError(ValueError):
    pass


def cotangent_form(p1: tuple, p2: tuple) -> float:
    """Canonical two-form on (base-direction, covector-direction) pairs:
    sum_i p1_i q2_i - p2_i q1_i."""
    q1, p1v = p1
    q2, p2v = p2
    q1, p1v, q2, p2v = map(np.asarray, (q1, p1v, q2, p2v))
    if not (len(q1) == len(p1v) == len(q2) == len(p2v)):
        raise SymplecticError("dimension mismatch between tangent pairs")
    return float(p1v @ q2 - p2v @ q1)


@dataclass(frozen=True)
class ChartedMap:
    name: str
    source_dim: int
    target_dim: int
    evaluator: Callable[[np.ndarray], np.ndarray]
    exact_jacobian: tuple[tuple[Fraction, ...], ...] | None = None

    def __call__(self, x: np.ndarray) -> np.ndarray:
        y = np.asarray(self.evaluator(np.asarray(x, dtype=float)), dtype=float)
        if y.shape != (self.target_dim,):
            raise SymplecticError(f"evaluator returned shape {y.shape}")
        return y


@dataclass(frozen=True)
class PullbackReport:
    map_name: str
    c_expected: object
    fitted_c: float
    max_deviation: float
    rel_residual: float
    samples: int
    h: float
    per_sample: tuple = field(default_factory=tuple)
    exact: bool = False

    def as_json(self) -> dict:
        return {
            "map": self.map_name,
            "c_expected": None if self.c_expected == "estimate" else float(self.c_expected),
            "fitted_c": self.fitted_c,
            "max_dev": self.max_deviation,
            "rel_residual": self.rel_residual,
            "samples": self.samples,
            "h": self.h,
            "exact": self.exact,
            "per_sample": list(self.per_sample),
        }


def _as_float_matrix(M) -> np.ndarray:
    return np.array([[float(v) for v in row] for row in M])


def pullback_check(
    F: ChartedMap,
    omega_src,
    omega_tgt,
    c_expected,
    samples: Sequence[np.ndarray],
    cfg: FDConfig = FDConfig(),
    use_exact: bool = False,
) -> PullbackReport:
    """Compare F^* omega_tgt with c omega_src on coordinate 2-planes.

    omega_src / omega_tgt: antisymmetric matrices (rational rows or floats)
    on the source / target coordinates. With use_exact and an exact rational
    Jacobian the comparison is exact (zero tolerance path).
    """
    if use_exact:
        if F.exact_jacobian is None:
            raise SymplecticError(f"map {F.name!r} has no exact jacobian")
        J = F.exact_jacobian
        Ot = omega_tgt
        # A = J^T Ot J over Fractions
        rows = len(J)
        cols = len(J[0])
        OtJ = [mat_vec(Ot, [J[r][c] for r in range(rows)]) for c in range(cols)]
        A = [[sum((J[r][i] * OtJ[j][r] for r in range(rows)), Fraction(0)) for j in range(cols)] for i in range(cols)]
        if c_expected == "estimate":
            raise SymplecticError("exact path needs a numeric expected constant")
        c = Fraction(c_expected)
        dev = max(
            abs(A[i][j] - c * omega_src[i][j])
            for i in range(cols)
            for j in range(cols)
        )
        return PullbackReport(F.name, c_expected, float(c), float(dev), 0.0, 1, 0.0, exact=True)

    Os = _as_float_matrix(omega_src)
    Ot = _as_float_matrix(omega_tgt)
    As = []
    per_sample = []
    bad = []
    for x in samples:
        J = jacobian(F, np.asarray(x, dtype=float), cfg)
        A = J.T @ Ot @ J
        As.append(A)
    iu = np.triu_indices(Os.shape[0], k=1)
    a_flat = np.concatenate([A[iu] for A in As])
    s_flat = np.concatenate([Os[iu] for _ in As])
    if c_expected == "estimate":
        denom = float(s_flat @ s_flat)
        if denom == 0:
            raise SymplecticError("source form vanishes; cannot fit a constant")
        c = float(a_flat @ s_flat) / denom
    else:
        c = float(c_expected)
    devs = np.abs(a_flat - c * s_flat)
    scale = max(1e-300, float(np.max(np.abs(a_flat))))
    for k, A in enumerate(As):
        per_sample.append(float(np.max(np.abs(A[iu] - c * Os[iu]))))
    return PullbackReport(
        map_name=F.name,
        c_expected=c_expected,
        fitted_c=c,
        max_deviation=float(np.max(devs)),
        rel_residual=float(np.max(devs)) / scale,
        samples=len(As),
        h=cfg.h,
        per_sample=tuple(per_sample),
    )


# ---------------------------------------------------------------------------
# chart realizations on a shear testbed (reduced coordinates)


def _minv(M: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(M)
    aug = [list(M[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    red, piv = rref(aug)
    if piv != list(range(n)):
        raise SymplecticError("reduced Thurston form is singular")
    return [row[n:] for row in red]


def thurston_reduced_matrix(chart: ShearChart) -> list[list[Fraction]]:
    return chart.omega_reduced


def cotangent_matrix(dim: int) -> list[list[Fraction]]:
    """Form matrix of the canonical cotangent pairing on (q, p) coordinates:
    omega(X, Y) = X^T B Y with B = [[0, -I], [I, 0]]."""
    B = [[Fraction(0)] * (2 * dim) for _ in range(2 * dim)]
    for i in range(dim):
        B[i][dim + i] = Fraction(-1)
        B[dim + i][i] = Fraction(1)
    return B


def pair_matrix(M: list[list[Fraction]]) -> list[list[Fraction]]:
    """Om (+) -Om on (left, right) coordinates."""
    d = len(M)
    B = [[Fraction(0)] * (2 * d) for _ in range(2 * d)]
    for i in range(d):
        for j in range(d):
            B[i][j] = M[i][j]
            B[d + i][d + j] = -M[i][j]
    return B


def imag_complex_matrix(M: list[list[Fraction]]) -> list[list[Fraction]]:
    """Imaginary part of the complexified form on (real, imag) coordinates:
    Im Om(z1, z2) = Om(x1, y2) + Om(y1, x2)."""
    d = len(M)
    B = [[Fraction(0)] * (2 * d) for _ in range(2 * d)]
    for i in range(d):
        for j in range(d):
            B[i][d + j] = M[i][j]
            B[d + i][j] = M[i][j]
    return B


def _tau_of_covector(chart: ShearChart) -> list[list[Fraction]]:
    """Matrix sending reduced covector components to the reduced measure:
    u = Om(tau, .) means u_j = sum_k tau_k M[k][j], i.e. tau = -M^{-1} u."""
    M = chart.omega_reduced
    Minv = _minv(M)
    return [[-Minv[i][j] for j in range(len(M))] for i in range(len(M))]


def _block_map(blocks: list[list[list[list[Fraction]] | None]], dims: tuple[int, int]) -> tuple:
    """Assemble a block matrix of Fractions; None = zero block."""
    d = dims[0]
    n_out = len(blocks) * d
    n_in = len(blocks[0]) * d
    M = [[Fraction(0)] * n_in for _ in range(n_out)]
    for bi, row in enumerate(blocks):
        for bj, blk in enumerate(row):
            if blk is None:
                continue
            for i in range(d):
                for j in range(d):
                    M[bi * d + i][bj * d + j] = blk[i][j]
    return tuple(tuple(r) for r in M)


def _ident(d: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]


def de_charted_map(chart: ShearChart) -> ChartedMap:
    """Double earthquake through the length-differential identification:
    (s, u) -> (s + tau(u), s - tau(u)) on reduced coordinates."""
    d = chart.reduced_dim
    T = _tau_of_covector(chart)
    Tf = _as_float_matrix(T)

    def ev(x):
        s, u = x[:d], x[d:]
        tau = Tf @ u
        return np.concatenate([s + tau, s - tau])

    I = _ident(d)
    negT = [[-v for v in row] for row in T]
    J = _block_map([[I, T], [I, negT]], (d, d))
    return ChartedMap("double-earthquake", 2 * d, 2 * d, ev, J)


def graft_charted_map(chart: ShearChart) -> ChartedMap:
    """Grafting through the same identification: (s, u) -> s + i tau(u),
    target coordinates (real, imag)."""
    d = chart.reduced_dim
    T = _tau_of_covector(chart)
    Tf = _as_float_matrix(T)

    def ev(x):
        s, u = x[:d], x[d:]
        return np.concatenate([s, Tf @ u])

    Z = [[Fraction(0)] * d for _ in range(d)]
    J = _block_map([[_ident(d), Z], [Z, T]], (d, d))
    return ChartedMap("grafting", 2 * d, 2 * d, ev, J)


def wick_charted_map(chart: ShearChart) -> ChartedMap:
    """Pleated Wick rotation on the projective chart: x + iy -> (x+y, x-y)."""
    d = chart.reduced_dim

    def ev(z):
        x, y = z[:d], z[d:]
        return np.concatenate([x + y, x - y])

    I = _ident(d)
    negI = [[-v for v in row] for row in I]
    J = _block_map([[I, I], [I, negI]], (d, d))
    return ChartedMap("wick-pleated", 2 * d, 2 * d, ev, J)
