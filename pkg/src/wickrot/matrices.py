"""2x2 matrix helpers for PSL(2,R)/PSL(2,C) work.

Determinant-one matrices throughout; inverses via the adjugate (exact up to
rounding, no pivoting noise). Longdouble variants back the Fenchel-Nielsen
construction, which is conditioning-sensitive.
"""
from __future__ import annotations

import numpy as np

LD = np.longdouble

SL2_BASIS = (
    np.array([[1.0, 0.0], [0.0, -1.0]]),
    np.array([[0.0, 1.0], [0.0, 0.0]]),
    np.array([[0.0, 0.0], [1.0, 0.0]]),
)


def inv_sl2(M):
    return np.array([[M[1, 1], -M[0, 1]], [-M[1, 0], M[0, 0]]], dtype=M.dtype)


def mdiag(t, dtype=np.float64):
    """Translation by t along the imaginary-axis geodesic (diagonal frame)."""
    e = np.exp(np.asarray(t, dtype=dtype) / 2)
    return np.array([[e, 0.0], [0.0, 1.0 / e]], dtype=dtype)


def mperp(s, dtype=np.float64):
    """Translation by s along the geodesic (-1, 1), perpendicular to mdiag's axis."""
    s = np.asarray(s, dtype=dtype)
    return np.array(
        [[np.cosh(s / 2), np.sinh(s / 2)], [np.sinh(s / 2), np.cosh(s / 2)]], dtype=dtype
    )


def word_product(mats, word):
    """Evaluate a signed word (1-based indices) against generator matrices."""
    M = np.eye(2, dtype=mats[0].dtype)
    for k in word:
        M = M @ (mats[k - 1] if k > 0 else inv_sl2(mats[-k - 1]))
    return M


def commutator(A, B):
    return A @ B @ inv_sl2(A) @ inv_sl2(B)


def proj_residual(M) -> float:
    """Distance of M from +-identity (projective identity)."""
    I = np.eye(2, dtype=M.dtype)
    return float(min(np.abs(M - I).max(), np.abs(M + I).max()))


def traceless_part(X):
    return X - (np.trace(X) / 2) * np.eye(2, dtype=X.dtype)


def expm_traceless(X):
    """exp of a traceless 2x2 via X^2 = -det(X) I."""
    q2 = X[0, 0] * X[0, 0] + X[0, 1] * X[1, 0]
    I = np.eye(2, dtype=X.dtype)
    if np.iscomplexobj(X):
        q = np.sqrt(q2)
        if abs(q) < 1e-30:
            return I + X
        return np.cosh(q) * I + (np.sinh(q) / q) * X
    if q2 > 0:
        q = np.sqrt(q2)
        return np.cosh(q) * I + (np.sinh(q) / q) * X
    if q2 < 0:
        q = np.sqrt(-q2)
        return np.cos(q) * I + (np.sin(q) / q) * X
    return I + X


def hyperbolic_frame(M):
    """(P, mu): M = P diag(mu, 1/mu) P^{-1} with |mu| > 1, det P = 1, and
    balanced eigenvector columns (keeps later conjugations well-conditioned).
    Analytic formulas; raises on non-hyperbolic (real) input. Complex input
    (loxodromic) is supported with the principal sqrt branch."""
    a, b = M[0, 0], M[0, 1]
    c, d = M[1, 0], M[1, 1]
    t = a + d
    is_complex = np.iscomplexobj(M)
    disc = t * t - 4
    if not is_complex and disc <= 0:
        raise ValueError(f"matrix with trace {float(t)} is not hyperbolic")
    s = np.sqrt(disc)
    mu = (t + s) / 2
    if abs(mu) < 1:
        mu = (t - s) / 2
    nu = 1 / mu

    def eigvec(lam):
        if abs(b) + abs(lam - a) >= abs(lam - d) + abs(c):
            v = np.array([b, lam - a], dtype=M.dtype)
        else:
            v = np.array([lam - d, c], dtype=M.dtype)
        return v / np.sqrt(np.abs(v[0]) ** 2 + np.abs(v[1]) ** 2)

    vp, vm = eigvec(mu), eigvec(nu)
    det = vp[0] * vm[1] - vp[1] * vm[0]
    if not is_complex and det < 0:
        vm = -vm
        det = -det
    P = np.column_stack([vp, vm]) / np.sqrt(det)
    return P, mu


def fixed_det_one(M, tol=1e-12) -> None:
    d = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
    if abs(d - 1) > tol:
        raise ValueError(f"determinant {d} differs from 1 by more than {tol}")
