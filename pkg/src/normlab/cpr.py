"""Sandwich inequalities for invertible conjugations and the two-parameter
power-pair chain, including direct-sum variants and a Schatten power form.

Chains here reuse the :mod:`normlab.heinz` pair-basis evaluator with total
power 2: H(s) denotes |A^s X B^{2-s} + A^{2-s} X B^s| and the quadratic
bracket A^2 X + X B^2 + t AXB carries the entrywise weight
a_i^2 + b_j^2 + t a_i b_j in the rotated basis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import matcore
from .chains import DEFAULT_TOL, ChainReport, chain
from .errors import InvalidParams
from .heinz import (
    DEGENERATE_INTERVAL,
    DEFAULT_NODES,
    PairBasis,
    gauss_legendre_nodes,
    pair_basis,
    power_pair_sv,
    weighted_sv,
)
from .norms import OP, NormKind, direct_sum_norm, norm, norm_from_sv

__all__ = [
    "ZhanParams",
    "cpr_check",
    "cpr_two_sided_check",
    "cpr_star_check",
    "zhan_chain",
    "zhan_check",
    "cor23_check",
    "cor24_check",
    "mos1_check",
    "mos2_check",
    "final_cor_check",
]


@dataclass(frozen=True)
class ZhanParams:
    """Parameter box t <= 2, 1/2 <= r <= 3/2; regime 1 covers r <= 1."""

    t: float
    r: float

    def __post_init__(self):
        if not self.t <= 2.0:
            raise InvalidParams(f"t must be <= 2, got {self.t}")
        if not 0.5 <= self.r <= 1.5:
            raise InvalidParams(f"r must lie in [1/2, 3/2], got {self.r}")

    @property
    def regime(self) -> int:
        return 1 if self.r <= 1.0 else 2


def cpr_check(s, x, kind: NormKind, tol: float = DEFAULT_TOL) -> ChainReport:
    """|SXS^-1 + S^-1XS| >= 2|X| for self-adjoint invertible S."""
    s = matcore.as_matrix(s)
    matcore.require_hermitian(s)
    si = matcore.inverse(s)
    x = matcore.as_matrix(x)
    lhs = norm(s @ x @ si + si @ x @ s, kind)
    return chain(("|SXS^-1+S^-1XS|", "2|X|"), (lhs, 2.0 * norm(x, kind)), tol=tol)


def cpr_two_sided_check(s, t, x, kind: NormKind, tol: float = DEFAULT_TOL) -> ChainReport:
    """|SXT^-1 + S^-1XT| >= 2|X| for self-adjoint invertible S, T."""
    s, t = matcore.as_matrix(s), matcore.as_matrix(t)
    matcore.require_hermitian(s)
    matcore.require_hermitian(t)
    si, ti = matcore.inverse(s), matcore.inverse(t)
    x = matcore.as_matrix(x)
    lhs = norm(s @ x @ ti + si @ x @ t, kind)
    return chain(("|SXT^-1+S^-1XT|", "2|X|"), (lhs, 2.0 * norm(x, kind)), tol=tol)


def cpr_star_check(s, x, kind: NormKind, tol: float = DEFAULT_TOL) -> ChainReport:
    """|S*XS^-1 + S^-1XS*| >= 2|X| for arbitrary invertible S."""
    s = matcore.as_matrix(s)
    si = matcore.inverse(s)
    x = matcore.as_matrix(x)
    lhs = norm(s.conj().T @ x @ si + si @ x @ s.conj().T, kind)
    return chain(("|S*XS^-1+S^-1XS*|", "2|X|"), (lhs, 2.0 * norm(x, kind)), tol=tol)


def _quad_sv(basis: PairBasis, t: float) -> np.ndarray:
    """Singular values of A^2 X + X B^2 + t AXB via the entrywise weight."""
    la, mu = basis.a_eigs, basis.b_eigs
    w = (la**2)[:, None] + (mu**2)[None, :] + t * np.outer(la, mu)
    return weighted_sv(basis, w)


def _h_value(basis: PairBasis, s: float, kind: NormKind) -> float:
    """H(s) = |A^s X B^{2-s} + A^{2-s} X B^s|."""
    return norm_from_sv(power_pair_sv(basis, [s], total=2.0)[0], kind)


def _first_member(basis: PairBasis, t: float, kind: NormKind) -> float:
    return 2.0 * norm_from_sv(_quad_sv(basis, t), kind)


def _last_member(h_r: float, t: float) -> float:
    return (t + 2.0) * h_r


def zhan_chain(
    a,
    b,
    x,
    params: ZhanParams,
    kind: NormKind,
    tol: float = DEFAULT_TOL,
    nodes: int = DEFAULT_NODES,
) -> ChainReport:
    """Eight-member refinement chain between 2|A^2X+XB^2+tAXB| and
    (t+2)H(r), largest first.

    With H(s) = |A^s X B^{2-s} + A^{2-s} X B^s|, g = |AXB| and c = 4-2t:

        2|A^2X+XB^2+tAXB|
        >= 2|A^2X+XB^2+2AXB| - c g
        >= 4 H(3/2) - c g
        >= 2 H(3/2) + 2 H(r) - c g
        >= (4/L) int H(nu+1/2) dnu - c g
        >= 4 H(mid) - c g
        >= 4 H(r) - c g
        >= (t+2) H(r)

    Regime 1 (r <= 1): nu runs over [0, r-1/2], mid = (2r+1)/4.
    Regime 2 (r >= 1): nu runs over [r-1/2, 1], mid = (2r+3)/4.
    A zero-length nu interval evaluates the integrand at its endpoint.
    """
    if not isinstance(params, ZhanParams):
        params = ZhanParams(*params)
    basis = pair_basis(a, b, x)
    return _zhan_from_basis(basis, params.t, params.r, params.regime, kind, tol, nodes)


def _zhan_from_basis(
    basis: PairBasis,
    t: float,
    r: float,
    regime: int,
    kind: NormKind,
    tol: float,
    nodes: int,
) -> ChainReport:
    c = 4.0 - 2.0 * t
    g = norm_from_sv(weighted_sv(basis, np.outer(basis.a_eigs, basis.b_eigs)), kind)
    h32 = _h_value(basis, 1.5, kind)
    h_r = _h_value(basis, r, kind)

    if regime == 1:
        lo, hi = 0.0, r - 0.5
        mid = (2.0 * r + 1.0) / 4.0
    else:
        lo, hi = r - 0.5, 1.0
        mid = (2.0 * r + 3.0) / 4.0

    if hi - lo < DEGENERATE_INTERVAL:
        mean_h = _h_value(basis, lo + 0.5, kind)
    else:
        pts, w = gauss_legendre_nodes(lo, hi, nodes)
        sv = power_pair_sv(basis, pts + 0.5, total=2.0)
        vals = np.array([norm_from_sv(row, kind) for row in sv])
        mean_h = float(np.dot(w, vals) / (hi - lo))

    m0 = _first_member(basis, t, kind)
    m1 = _first_member(basis, 2.0, kind) - c * g
    m2 = 4.0 * h32 - c * g
    m3 = 2.0 * h32 + 2.0 * h_r - c * g
    m4 = 4.0 * mean_h - c * g
    m5 = 4.0 * _h_value(basis, mid, kind) - c * g
    m6 = 4.0 * h_r - c * g
    m7 = _last_member(h_r, t)

    return chain(
        (
            "2|A^2X+XB^2+tAXB|",
            "2|A^2X+XB^2+2AXB|-c|AXB|",
            "4H(3/2)-c|AXB|",
            "2H(3/2)+2H(r)-c|AXB|",
            "(4/L)intH-c|AXB|",
            "4H(mid)-c|AXB|",
            "4H(r)-c|AXB|",
            "(t+2)H(r)",
        ),
        (m0, m1, m2, m3, m4, m5, m6, m7),
        tol=tol,
    )


def zhan_check(
    a,
    b,
    x,
    params: ZhanParams,
    kind: NormKind,
    tol: float = DEFAULT_TOL,
) -> ChainReport:
    """Two-value chain 2|A^2X+tAXB+XB^2| >= (2+t)H(r).

    Shares its evaluation helpers with :func:`zhan_chain`, so its two values
    coincide bitwise with that chain's first and last members.
    """
    if not isinstance(params, ZhanParams):
        params = ZhanParams(*params)
    basis = pair_basis(a, b, x)
    lhs = _first_member(basis, params.t, kind)
    rhs = _last_member(_h_value(basis, params.r, kind), params.t)
    return chain(("2|A^2X+XB^2+tAXB|", "(t+2)H(r)"), (lhs, rhs), tol=tol)


def cor23_check(a, b, x, t: float, kind: NormKind, tol: float = DEFAULT_TOL) -> ChainReport:
    """|A*AX + XBB* + t|A|X|B*|| >= (t+2)|AXB| for arbitrary A, B, t <= 2.

    The quadratic bound for positive pairs applied to |A| and |B*|; at
    t = 0 this is exactly the arithmetic-geometric-mean inequality of
    agm_check, and for positive A, B it collapses to the r = 1 sandwich
    bound.  (The pairing of XBB* with |B*| and a starless AXB on the right
    is forced: swapping either star makes the statement false, with random
    3x3 counterexamples at margin ~1e0.)
    """
    if not t <= 2.0:
        raise InvalidParams(f"t must be <= 2, got {t}")
    a, b, x = matcore.as_matrix(a), matcore.as_matrix(b), matcore.as_matrix(x)
    abs_a = matcore.polar_abs(a)
    abs_b_star = matcore.polar_abs(b.conj().T)
    lhs = norm(a.conj().T @ a @ x + x @ b @ b.conj().T + t * (abs_a @ x @ abs_b_star), kind)
    rhs = (t + 2.0) * norm(a @ x @ b, kind)
    return chain(("|A*AX+XBB*+t|A|X|B*||", "(t+2)|AXB|"), (lhs, rhs), tol=tol)


def cor24_check(p, q, x, t: float, kind: NormKind, tol: float = DEFAULT_TOL) -> ChainReport:
    """|PXQ^-1 + P^-1XQ + tX| >= (t+2)|X| for positive definite P, Q, t <= 2."""
    if not t <= 2.0:
        raise InvalidParams(f"t must be <= 2, got {t}")
    x = matcore.as_matrix(x)
    p_inv = matcore.frac_power(p, -1.0)
    q_inv = matcore.frac_power(q, -1.0)
    p, q = matcore.as_matrix(p), matcore.as_matrix(q)
    lhs = norm(p @ x @ q_inv + p_inv @ x @ q + t * x, kind)
    return chain(
        ("|PXQ^-1+P^-1XQ+tX|", "(t+2)|X|"),
        (lhs, (t + 2.0) * norm(x, kind)),
        tol=tol,
    )


def mos1_check(s, x, y, kind: NormKind, tol: float = DEFAULT_TOL) -> ChainReport:
    """Direct-sum variant, first form:

    |(SYS^-1 + S^{*-1}YS*) (+) (S*XS^{*-1} + S^-1XS)| >= 2|X (+) Y|.
    """
    s = matcore.as_matrix(s)
    si = matcore.inverse(s)
    s_star, si_star = s.conj().T, si.conj().T
    x, y = matcore.as_matrix(x), matcore.as_matrix(y)
    block_y = s @ y @ si + si_star @ y @ s_star
    block_x = s_star @ x @ si_star + si @ x @ s
    lhs = direct_sum_norm(block_y, block_x, kind)
    rhs = 2.0 * direct_sum_norm(x, y, kind)
    return chain(("|blockY(+)blockX|", "2|X(+)Y|"), (lhs, rhs), tol=tol)


def mos2_check(s, x, y, kind: NormKind, tol: float = DEFAULT_TOL) -> ChainReport:
    """Direct-sum variant, second form:

    |(SYS^{*-1} + S^{*-1}YS) (+) (S*XS^-1 + S^-1XS*)| >= 2|X (+) Y|.
    """
    s = matcore.as_matrix(s)
    si = matcore.inverse(s)
    s_star, si_star = s.conj().T, si.conj().T
    x, y = matcore.as_matrix(x), matcore.as_matrix(y)
    block_y = s @ y @ si_star + si_star @ y @ s
    block_x = s_star @ x @ si + si @ x @ s_star
    lhs = direct_sum_norm(block_y, block_x, kind)
    rhs = 2.0 * direct_sum_norm(x, y, kind)
    return chain(("|blockY(+)blockX|", "2|X(+)Y|"), (lhs, rhs), tol=tol)


def final_cor_check(s, x, p: float, tol: float = DEFAULT_TOL) -> tuple[ChainReport, ChainReport]:
    """Two sub-checks on the pair E1 = SXS^-1 + S^{*-1}XS*,
    E2 = S*XS^{*-1} + S^-1XS:

    (i)  max(|E1|, |E2|) >= 2|X| in the operator norm;
    (ii) |E1|_p^p + |E2|_p^p >= 2^(p+1) |X|_p^p.

    Returned as two 2-value reports; they live on different scales and do
    not form one monotone chain.
    """
    if p < 1.0:
        raise InvalidParams(f"Schatten exponent must be >= 1, got {p}")
    s = matcore.as_matrix(s)
    si = matcore.inverse(s)
    s_star, si_star = s.conj().T, si.conj().T
    x = matcore.as_matrix(x)
    e1 = s @ x @ si + si_star @ x @ s_star
    e2 = s_star @ x @ si_star + si @ x @ s

    op_report = chain(
        ("max(|E1|,|E2|)", "2|X|"),
        (max(norm(e1, OP), norm(e2, OP)), 2.0 * norm(x, OP)),
        tol=tol,
    )
    kind = NormKind.schatten(p)
    power_report = chain(
        ("|E1|_p^p+|E2|_p^p", "2^(p+1)|X|_p^p"),
        (norm(e1, kind) ** p + norm(e2, kind) ** p, 2.0 ** (p + 1.0) * norm(x, kind) ** p),
        tol=tol,
    )
    return op_report, power_report
