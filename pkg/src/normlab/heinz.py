"""Heinz-mean brackets, the arithmetic-geometric mean bound, and the
chained refinements of the sum bound with a quadrature integral term.

The workhorse is :class:`PairBasis`: for positive definite A, B every
bracket A^s X B^{w-s} + A^{w-s} X B^s equals Q_A (W(s) o X~) Q_B* with
X~ = Q_A* X Q_B and scalar weights W(s)_ij = a_i^s b_j^{w-s} + a_i^{w-s} b_j^s.
Unitarily invariant norms drop the outer unitaries, so chain members and
quadrature nodes reduce to one batched SVD of small weighted matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import matcore
from .chains import DEFAULT_TOL, ChainReport, chain
from .errors import DimensionMismatch, NotPositiveDefinite
from .norms import NormKind, norm, norm_from_sv

__all__ = [
    "HeinzParams",
    "ChainReport",
    "PairBasis",
    "pair_basis",
    "power_pair_sv",
    "weighted_sv",
    "heinz_expr",
    "heinz_check",
    "agm_check",
    "integral_mean_norm",
    "kittaneh_chain",
    "gauss_legendre_nodes",
]

# Interval lengths below this are collapsed to an endpoint evaluation of the
# integrand instead of a quadrature rule on a degenerate interval.
DEGENERATE_INTERVAL = 1e-10

DEFAULT_NODES = 32


@dataclass(frozen=True)
class HeinzParams:
    """Exponent pair for Heinz-type brackets: alpha in [0,1], quadrature
    variable nu in [0,1]."""

    alpha: float
    nu: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in [0,1], got {self.alpha}")


@dataclass(frozen=True)
class PairBasis:
    """Eigendata of a positive definite pair with the free matrix rotated
    into the eigenbases (x_rot = Q_A* X Q_B)."""

    a_eigs: np.ndarray
    b_eigs: np.ndarray
    x_rot: np.ndarray


def pair_basis(a, b, x) -> PairBasis:
    """Diagonalize positive definite A and B once and rotate X."""
    da = matcore.herm_eigen(a)
    db = matcore.herm_eigen(b)
    for dec in (da, db):
        eigs = dec.eigenvalues
        if eigs[0] <= matcore.POSDEF_RTOL * eigs[-1] or eigs[-1] <= 0.0:
            raise NotPositiveDefinite("pair members must be positive definite")
    x = matcore.as_matrix(x)
    if x.shape != (da.eigenvalues.size, db.eigenvalues.size):
        raise DimensionMismatch(
            f"free matrix shape {x.shape} does not match pair dimensions "
            f"({da.eigenvalues.size}, {db.eigenvalues.size})"
        )
    return PairBasis(
        a_eigs=da.eigenvalues,
        b_eigs=db.eigenvalues,
        x_rot=da.vectors.conj().T @ x @ db.vectors,
    )


def power_pair_sv(basis: PairBasis, exponents, total: float = 1.0) -> np.ndarray:
    """Singular values of A^s X B^{total-s} + A^{total-s} X B^s, batched.

    exponents is scalar or 1-D; the result has one descending row of
    singular values per exponent.
    """
    s = np.atleast_1d(np.asarray(exponents, dtype=float))
    la = basis.a_eigs[None, :]
    mu = basis.b_eigs[None, :]
    la_s = la ** s[:, None]
    la_c = la ** (total - s)[:, None]
    mu_s = mu ** s[:, None]
    mu_c = mu ** (total - s)[:, None]
    w = la_s[:, :, None] * mu_c[:, None, :] + la_c[:, :, None] * mu_s[:, None, :]
    return np.linalg.svd(w * basis.x_rot[None, :, :], compute_uv=False)


def weighted_sv(basis: PairBasis, weights) -> np.ndarray:
    """Singular values of an entrywise-weighted rotated free matrix."""
    w = np.asarray(weights, dtype=float)
    if w.shape != basis.x_rot.shape:
        raise DimensionMismatch("weight shape must match the rotated free matrix")
    return np.linalg.svd(w * basis.x_rot, compute_uv=False)


def gauss_legendre_nodes(lo: float, hi: float, nodes: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights mapped affinely to [lo, hi];
    weights sum to hi - lo."""
    base, w = np.polynomial.legendre.leggauss(int(nodes))
    mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
    return mid + half * base, half * w


def heinz_expr(a, b, x, alpha: float) -> np.ndarray:
    """The bracket A^alpha X B^(1-alpha) + A^(1-alpha) X B^alpha."""
    HeinzParams(alpha)
    x = matcore.as_matrix(x)
    t1 = matcore.matmul(matcore.matmul(matcore.frac_power(a, alpha), x), matcore.frac_power(b, 1.0 - alpha))
    t2 = matcore.matmul(matcore.matmul(matcore.frac_power(a, 1.0 - alpha), x), matcore.frac_power(b, alpha))
    return t1 + t2


def heinz_check(a, b, x, alpha: float, kind: NormKind, tol: float = DEFAULT_TOL) -> ChainReport:
    """Two-value chain: |AX+XB| >= |A^a X B^(1-a) + A^(1-a) X B^a|."""
    x = matcore.as_matrix(x)
    lhs = norm(matcore.matmul(a, x) + matcore.matmul(x, b), kind)
    rhs = norm(heinz_expr(a, b, x, alpha), kind)
    return chain(("|AX+XB|", "|A^aXB^(1-a)+A^(1-a)XB^a|"), (lhs, rhs), tol=tol)


def agm_check(a, b, x, kind: NormKind, tol: float = DEFAULT_TOL) -> ChainReport:
    """Two-value chain: |A*AX+XBB*| >= 2|AXB| for arbitrary A, B."""
    a, b, x = matcore.as_matrix(a), matcore.as_matrix(b), matcore.as_matrix(x)
    lhs = norm(matcore.matmul(matcore.adjoint(a) @ a, x) + matcore.matmul(x, b @ matcore.adjoint(b)), kind)
    rhs = 2.0 * norm(matcore.matmul(matcore.matmul(a, x), b), kind)
    return chain(("|A*AX+XBB*|", "2|AXB|"), (lhs, rhs), tol=tol)


def integral_mean_norm(
    a,
    b,
    x,
    lo: float,
    hi: float,
    kind: NormKind,
    nodes: int = DEFAULT_NODES,
) -> float:
    """Mean of nu -> |A^nu X B^(1-nu) + A^(1-nu) X B^nu| over [lo, hi].

    Gauss-Legendre with the stated node count; the integrand is analytic in
    nu for positive definite inputs, so convergence is spectral.
    """
    if not (0.0 <= lo < hi <= 1.0):
        raise ValueError(f"need 0 <= lo < hi <= 1, got [{lo}, {hi}]")
    basis = pair_basis(a, b, x)
    return _integral_mean_from_basis(basis, lo, hi, kind, nodes)


def _integral_mean_from_basis(basis: PairBasis, lo: float, hi: float, kind: NormKind, nodes: int) -> float:
    pts, w = gauss_legendre_nodes(lo, hi, nodes)
    sv = power_pair_sv(basis, pts, total=1.0)
    vals = np.array([norm_from_sv(row, kind) for row in sv])
    return float(np.dot(w, vals) / (hi - lo))


def kittaneh_chain(
    a,
    b,
    x,
    alpha: float,
    kind: NormKind,
    tol: float = DEFAULT_TOL,
    nodes: int = DEFAULT_NODES,
) -> ChainReport:
    """Five-value refinement chain for the Heinz bracket, largest first:

        |AX+XB|
        >= 0.5|AX+XB| + 0.5 H(alpha)
        >= mean of H over the regime interval
        >= H at the interval midpoint map
        >= H(alpha)

    with H(s) = |A^s X B^(1-s) + A^(1-s) X B^s|.  The regime interval is
    [0, alpha] with midpoint map alpha/2 for alpha <= 1/2, and [alpha, 1]
    with midpoint map (1+alpha)/2 otherwise.  A zero-length interval
    (alpha at 0 or 1) evaluates the integrand at the endpoint.
    """
    HeinzParams(alpha)
    basis = pair_basis(a, b, x)
    regime = 1 if alpha <= 0.5 else 2
    return _kittaneh_from_basis(basis, alpha, regime, kind, tol, nodes)


def _kittaneh_from_basis(
    basis: PairBasis,
    alpha: float,
    regime: int,
    kind: NormKind,
    tol: float,
    nodes: int,
) -> ChainReport:
    if regime == 1:
        lo, hi = 0.0, alpha
        mid_map = 0.5 * alpha
    else:
        lo, hi = alpha, 1.0
        mid_map = 0.5 * (1.0 + alpha)

    sv = power_pair_sv(basis, [1.0, alpha, mid_map], total=1.0)
    v_sum = norm_from_sv(sv[0], kind)
    v_alpha = norm_from_sv(sv[1], kind)
    v_mid = norm_from_sv(sv[2], kind)
    if hi - lo < DEGENERATE_INTERVAL:
        endpoint = alpha
        v_int = norm_from_sv(power_pair_sv(basis, [endpoint], total=1.0)[0], kind)
    else:
        v_int = _integral_mean_from_basis(basis, lo, hi, kind, nodes)
    v_half = 0.5 * v_sum + 0.5 * v_alpha

    return chain(
        (
            "|AX+XB|",
            "(|AX+XB|+H(a))/2",
            "mean H",
            "H(midmap)",
            "H(a)",
        ),
        (v_sum, v_half, v_int, v_mid, v_alpha),
        tol=tol,
    )
