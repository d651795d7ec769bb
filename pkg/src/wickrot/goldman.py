"""Goldman-type pairings: cup product against the relator 2-cycle.

The surface fundamental class is represented on the bar complex by
  z = sum_k [w_{k-1} | y_k]  -  sum_g [g | g^{-1}]
for the single relator R = y_1 ... y_N with prefixes w_k; the correction
terms close the cycle (each generator appears once with each sign in a
surface relator). The pairing of 1-cocycles u, v with coefficient form B is
  <u cup v, z> = sum_k B(u(w_{k-1}), Ad(w_{k-1}) v(y_k)) + sum_g B(u(g), v(g)).
Coboundaries annihilate and the value is antisymmetric; both are gates of
the acceptance suite. Accumulation runs in longdouble: the defect of these
identities scales with the relator residual times the conjugation scale.

Coefficient pairings (one per model-space curvature):
  killing_real  tr(XY) on sl2(R)            (Weil-Petersson conventions, kappa_G)
  tr1           Im tr(ZW) on sl2(C)
  trm1          1/2 tr(X+ Y+) - 1/2 tr(X- Y-) on sl2 + sl2 (left/right pairs)
  tr0           tr(x v) + tr(y u) on sl2 x sl2 (linear part, translation part)
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cocycles import Cocycle
from .holonomy import Holonomy
from .matrices import LD, inv_sl2
from .surfaces import Word

VALID_KINDS = ("killing_real", "tr1", "trm1", "tr0")


class PairingError(ValueError):
    pass


@dataclass(frozen=True)
class PairingKind:
    """thurston | cotangent | goldman; goldman carries a coefficient variant."""

    family: str
    variant: str = ""

    def __post_init__(self):
        if self.family not in ("thurston", "cotangent", "goldman"):
            raise PairingError(f"unknown pairing family {self.family!r}")
        if self.family == "goldman" and self.variant not in VALID_KINDS:
            raise PairingError(f"unknown goldman variant {self.variant!r}")


def _require_closed(pres) -> Word:
    if len(pres.relators) != 1 or pres.peripheral:
        raise PairingError(
            "goldman pairing needs a closed-surface presentation with a single "
            "relator (use the thurston pairing on shear charts instead)"
        )
    return pres.relators[0]


def _ad(M, X):
    return M @ X @ inv_sl2(M)


class _Engine:
    """Cup-product accumulation over tuples of matrices (one tuple entry per
    holonomy factor), generic in the coefficient form."""

    def __init__(self, gens_tuples, relator: Word, B):
        self.gens = [tuple(np.asarray(M, dtype=self._dt(M)) for M in t) for t in gens_tuples]
        self.relator = relator
        self.B = B

    @staticmethod
    def _dt(M):
        return np.clongdouble if np.iscomplexobj(M) else LD

    def _letter_mats(self, k: int):
        if k > 0:
            return self.gens[k - 1]
        return tuple(inv_sl2(M) for M in self.gens[-k - 1])

    def _letter_vals(self, vals, k: int):
        if k > 0:
            return vals[k - 1]
        inv_mats = self._letter_mats(k)
        return tuple(-_ad(Mi, X) for Mi, X in zip(inv_mats, vals[-k - 1]))

    def pair(self, u_vals, v_vals) -> float | complex:
        u_vals = [tuple(np.asarray(X, dtype=self._dt(X)) for X in t) for t in u_vals]
        v_vals = [tuple(np.asarray(X, dtype=self._dt(X)) for X in t) for t in v_vals]
        nfac = len(self.gens[0])
        prefix = [np.eye(2, dtype=self.gens[0][f].dtype) for f in range(nfac)]
        pref_u = [np.zeros((2, 2), dtype=u_vals[0][f].dtype) for f in range(nfac)]
        total = 0.0
        for k in self.relator:
            vk = self._letter_vals(v_vals, k)
            total = total + self.B(tuple(pref_u), tuple(_ad(P, X) for P, X in zip(prefix, vk)))
            uk = self._letter_vals(u_vals, k)
            pref_u = [pu + _ad(P, X) for pu, P, X in zip(pref_u, prefix, uk)]
            prefix = [P @ M for P, M in zip(prefix, self._letter_mats(k))]
        for g in range(len(self.gens)):
            total = total + self.B(u_vals[g], v_vals[g])
        return total


def _b_killing_real(u, v):
    return np.trace(u[0] @ v[0])


def _b_tr1(u, v):
    return np.imag(np.trace(u[0] @ v[0]))


def _b_trm1(u, v):
    return 0.5 * np.trace(u[0] @ v[0]) - 0.5 * np.trace(u[1] @ v[1])


_B_SINGLE = {"killing_real": _b_killing_real, "tr1": _b_tr1}


def goldman_pairing(rho: Holonomy, u: Cocycle, v: Cocycle, kind: PairingKind) -> float | complex:
    """Cup-product pairing of two cocycles at rho (closed surface only)."""
    if kind.family != "goldman":
        raise PairingError("goldman_pairing evaluates goldman kinds only")
    if kind.variant == "trm1":
        raise PairingError("trm1 pairs holonomy pairs; use ads_pairing_decomposition")
    if kind.variant == "tr0":
        raise PairingError("tr0 pairs (linear, translation) data; use tr0_pairing")
    if kind.variant == "tr1" and rho.field != "complex":
        raise PairingError("tr1 applies to complex holonomies")
    if kind.variant == "killing_real" and rho.field == "complex":
        raise PairingError("killing_real applies to real holonomies")
    rel = _require_closed(rho.presentation)
    eng = _Engine([(M,) for M in rho.matrices], rel, _B_SINGLE[kind.variant])
    val = eng.pair([(X,) for X in u.values], [(X,) for X in v.values])
    return float(np.real(val)) if kind.variant == "killing_real" else float(val)


def ads_pairing_decomposition(
    rho_l: Holonomy,
    rho_r: Holonomy,
    u_pair: tuple[Cocycle, Cocycle],
    v_pair: tuple[Cocycle, Cocycle],
) -> tuple[float, float, float]:
    """trm1 pairing of left/right cocycle pairs and its split:
    combined = 1/2 left - 1/2 right with left/right the killing_real values.
    """
    rel = _require_closed(rho_l.presentation)
    if rho_r.presentation != rho_l.presentation:
        raise PairingError("left and right factors need the same presentation")
    gens = [(a, b) for a, b in zip(rho_l.matrices, rho_r.matrices)]
    eng = _Engine(gens, rel, _b_trm1)
    combined = float(
        np.real(
            eng.pair(
                [(x, y) for x, y in zip(u_pair[0].values, u_pair[1].values)],
                [(x, y) for x, y in zip(v_pair[0].values, v_pair[1].values)],
            )
        )
    )
    kind = PairingKind("goldman", "killing_real")
    left = goldman_pairing(rho_l, u_pair[0], v_pair[0], kind)
    right = goldman_pairing(rho_r, u_pair[1], v_pair[1], kind)
    return combined, left, right


def tr0_pairing(
    rho0: Holonomy,
    u_pair: tuple[Cocycle, Cocycle],
    v_pair: tuple[Cocycle, Cocycle],
) -> float:
    """tr0 pairing for Minkowski data: cocycles valued in the semidirect
    algebra, given as (linear-part value, translation value) per generator.

    Group elements are (A, a) with (A,a)(B,b) = (AB, a + Ad(A) b); the
    adjoint action on (x, u) is (Ad(A) x, Ad(A) u + [a, Ad(A) x]).
    """
    rel = _require_closed(rho0.presentation)
    mats = [np.asarray(M, dtype=LD) for M in rho0.matrices]
    zero = np.zeros((2, 2), dtype=LD)

    # translation parts of the base representation are zero: the pairing is
    # evaluated at the Fuchsian locus, where tangent vectors are pairs.
    def semi_mul(g, h):
        return (g[0] @ h[0], g[1] + _ad(g[0], h[1]))

    def semi_inv(g):
        Ai = inv_sl2(g[0])
        return (Ai, -_ad(Ai, g[1]))

    def semi_ad(g, xu):
        A, a = g
        x = _ad(A, xu[0])
        return (x, _ad(A, xu[1]) + a @ x - x @ a)

    def B(xu, yv):
        return np.trace(xu[0] @ yv[1]) + np.trace(yv[0] @ xu[1])

    gens = [(M, zero) for M in mats]
    u_vals = [
        (np.asarray(x, dtype=LD), np.asarray(t, dtype=LD))
        for x, t in zip(u_pair[0].values, u_pair[1].values)
    ]
    v_vals = [
        (np.asarray(x, dtype=LD), np.asarray(t, dtype=LD))
        for x, t in zip(v_pair[0].values, v_pair[1].values)
    ]

    def letter_g(k):
        return gens[k - 1] if k > 0 else semi_inv(gens[-k - 1])

    def letter_val(vals, k):
        if k > 0:
            return vals[k - 1]
        gi = semi_inv(gens[-k - 1])
        x, u = semi_ad(gi, vals[-k - 1])
        return (-x, -u)

    prefix = (np.eye(2, dtype=LD), zero)
    pref_u = (zero, zero)
    total = LD(0)
    for k in rel:
        vk = semi_ad(prefix, letter_val(v_vals, k))
        total = total + B(pref_u, vk)
        uk = semi_ad(prefix, letter_val(u_vals, k))
        pref_u = (pref_u[0] + uk[0], pref_u[1] + uk[1])
        prefix = semi_mul(prefix, letter_g(k))
    for g in range(len(gens)):
        total = total + B(u_vals[g], v_vals[g])
    return float(total)
