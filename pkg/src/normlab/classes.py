"""The shifted-sandwich map phi(S,k): X -> SXS^-1 + S^-1XS + kX and the
class of invertible S whose phi stays bounded below by (k+2)|X|.

For self-adjoint S the map is an entrywise (Schur) multiplier in the
eigenbasis: with S = Q diag(l) Q* and X~ = Q*XQ,

    phi(S,k,X) = Q (M o X~) Q*,   M_ij = l_i/l_j + l_j/l_i + k.

That representation powers the spectral membership test, the residual
check, the bound check against the classical PSD multiplier theorem, and a
multistart minimizer probing inf |phi(X)| / |X| over the unit sphere.
Sampled checks of the fourteen norm identities that characterize scalar
multiples of self-adjoint, normal, unitary, and reflection classes round
out the module.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import matcore
from .chains import DEFAULT_TOL, ChainReport, chain
from .errors import InvalidK, NotPSD, Singular, ZeroEigenvalue
from .norms import OP, NormKind, norm

__all__ = [
    "DkProbeResult",
    "CharacterizationForm",
    "FORMS",
    "EQUALITY_FORMS",
    "phi",
    "dk_spectral_test",
    "schur_rep_residual",
    "schur_theorem_bound_check",
    "dk_ratio_minimize",
    "characterization_check",
    "sample_for_form",
]

# Pass threshold slack for the pairwise spectral criterion.
SPECTRAL_SLACK = 1e-12
# Equality characterizations are exact theorems on their classes.
EQUALITY_TOL = 1e-9


@dataclass(frozen=True)
class DkProbeResult:
    """Outcome of the ratio-minimization probe.

    best_ratio is an upper bound on inf |phi(S,k,X)| / |X| (operator norm),
    achieved by witness; it is never claimed to be the infimum.  verdict is
    three-valued: "violated" (witness strictly below k+2), "consistent"
    (no witness found within budget), "spectrally-excluded" (the pairwise
    eigenvalue criterion already fails).
    """

    eigenvalues: np.ndarray
    k: float
    spectral_ok: bool
    best_ratio: float
    witness: np.ndarray
    starts_used: int

    @property
    def verdict(self) -> str:
        if not self.spectral_ok:
            return "spectrally-excluded"
        if self.best_ratio < self.k + 2.0 - 1e-9:
            return "violated"
        return "consistent"


def phi(s, k: float, x) -> np.ndarray:
    """SXS^-1 + S^-1XS + kX for invertible S."""
    s = matcore.as_matrix(s)
    si = matcore.inverse(s)
    x = matcore.as_matrix(x)
    return s @ x @ si + si @ x @ s + k * x


def _pair_values(eigs: np.ndarray, k: float) -> np.ndarray:
    ratio = np.divide.outer(eigs, eigs)
    return np.abs(ratio + 1.0 / ratio + k)


def dk_spectral_test(eigs, k: float, allow_any_k: bool = False) -> tuple[bool, np.ndarray]:
    """Pairwise criterion |l_i/l_j + l_j/l_i + k| >= k+2 over the spectrum.

    Returns (ok, values) where values[i, j] is the left side for the pair
    (i, j).  The criterion is necessary for membership when S is
    self-adjoint with the given eigenvalues.  k < 0 is rejected unless
    allow_any_k is set (the bound below is vacuous there).
    """
    eigs = np.asarray(eigs, dtype=float)
    if eigs.ndim != 1 or eigs.size == 0:
        raise ValueError("eigs must be a nonempty 1-D real vector")
    if np.any(eigs == 0.0):
        raise ZeroEigenvalue("spectral criterion needs nonzero eigenvalues")
    if k < 0.0 and not allow_any_k:
        raise InvalidK(f"k must be >= 0 (pass allow_any_k=True to override), got {k}")
    vals = _pair_values(eigs, k)
    ok = bool(np.all(vals >= k + 2.0 - SPECTRAL_SLACK))
    return ok, vals


def _selfadjoint_eigen(s) -> matcore.HermEigen:
    dec = matcore.herm_eigen(s)
    mags = np.abs(dec.eigenvalues)
    if mags.min() <= 1e-12 * mags.max():
        raise Singular("self-adjoint matrix is numerically singular")
    return dec


def _multiplier_matrix(eigs: np.ndarray, k: float) -> np.ndarray:
    ratio = np.divide.outer(eigs, eigs)
    return ratio + 1.0 / ratio + k


def schur_rep_residual(s, k: float, x) -> float:
    """Residual of the eigenbasis multiplier representation of phi.

    Computes phi(S,k,X) directly (explicit inverse) and via
    Q (M o (Q*XQ)) Q*, returning the Frobenius gap over max(1, |phi|_F).
    The two routes share no factorization.
    """
    s = matcore.as_matrix(s)
    x = matcore.as_matrix(x)
    direct = phi(s, k, x)
    dec = _selfadjoint_eigen(s)
    m = _multiplier_matrix(dec.eigenvalues, k)
    q = dec.vectors
    rep = q @ (m * (q.conj().T @ x @ q)) @ q.conj().T
    return float(np.linalg.norm(direct - rep) / max(1.0, np.linalg.norm(direct)))


def schur_theorem_bound_check(n_mat, x, tol: float = DEFAULT_TOL) -> ChainReport:
    """max_i N_ii |X| >= |N o X| in the operator norm, for PSD N."""
    n_mat = matcore.as_matrix(n_mat)
    matcore.require_hermitian(n_mat)
    eigs = np.linalg.eigvalsh(n_mat)
    if eigs[0] < -1e-10 * max(eigs[-1], 0.0):
        raise NotPSD("multiplier matrix must be positive semidefinite")
    x = matcore.as_matrix(x)
    lhs = float(np.max(np.real(np.diagonal(n_mat)))) * norm(x, OP)
    rhs = norm(matcore.hadamard(n_mat, x), OP)
    return chain(("maxdiag(N)|X|", "|NoX|"), (lhs, rhs), tol=tol)


def _ratio_and_numgrad(m: np.ndarray, y: np.ndarray) -> tuple[float, np.ndarray, np.ndarray]:
    """Ratio |M o Y| / |Y| with subgradients of numerator and denominator."""
    un, sn, vhn = np.linalg.svd(m * y)
    ud, sd, vhd = np.linalg.svd(y)
    g_num = m * np.outer(un[:, 0], vhn[0])
    g_den = np.outer(ud[:, 0], vhd[0])
    return sn[0] / sd[0], g_num, g_den


def dk_ratio_minimize(
    s,
    k: float,
    starts: int = 64,
    iters: int = 500,
    rng: matcore.Rng | None = None,
) -> DkProbeResult:
    """Multistart upper bound on inf |phi(S,k,X)| / |X| over X != 0.

    Works in the eigenbasis of self-adjoint S, where phi is the entrywise
    multiplier M.  Seeds are every rank-one basis matrix e_i e_j* (whose
    ratio is exactly |M_ij|) plus the identity (ratio |k+2|); `starts`
    additional random starts follow.  Each start runs a projected
    subgradient descent on the ratio with step 0.1/sqrt(iter), keeping the
    best iterate.  Deterministic given the rng.
    """
    if rng is None:
        rng = matcore.Rng(0)
    dec = _selfadjoint_eigen(s)
    eigs = dec.eigenvalues
    n = eigs.size
    m = _multiplier_matrix(eigs, k)
    spectral_ok, _ = dk_spectral_test(eigs, k, allow_any_k=True)

    seeds: list[np.ndarray] = []
    for i in range(n):
        for j in range(n):
            e = np.zeros((n, n), dtype=complex)
            e[i, j] = 1.0
            seeds.append(e)
    seeds.append(np.eye(n, dtype=complex) / np.sqrt(n))
    g = rng.generator()
    for _ in range(int(starts)):
        z = (g.standard_normal((n, n)) + 1j * g.standard_normal((n, n))) / np.sqrt(2.0)
        seeds.append(z / np.linalg.norm(z))

    best_ratio = np.inf
    best_y = seeds[0]
    for y0 in seeds:
        y = y0.copy()
        for it in range(int(iters)):
            ratio, g_num, g_den = _ratio_and_numgrad(m, y)
            if ratio < best_ratio:
                best_ratio = ratio
                best_y = y.copy()
            denom = np.linalg.svd(y, compute_uv=False)[0]
            grad = (g_num - ratio * g_den) / denom
            gnorm = np.linalg.norm(grad)
            if gnorm < 1e-14:
                break
            y = y - (0.1 / np.sqrt(it + 1.0)) * grad / gnorm
            ynorm = np.linalg.norm(y)
            if ynorm < 1e-12:
                break
            y = y / ynorm
        ratio, _, _ = _ratio_and_numgrad(m, y)
        if ratio < best_ratio:
            best_ratio = ratio
            best_y = y.copy()

    witness = dec.vectors @ best_y @ dec.vectors.conj().T
    return DkProbeResult(
        eigenvalues=eigs,
        k=float(k),
        spectral_ok=spectral_ok,
        best_ratio=float(best_ratio),
        witness=witness,
        starts_used=len(seeds),
    )


@dataclass(frozen=True)
class CharacterizationForm:
    """One displayed norm relation: lhs/rhs are expression selectors from
    {E1, E2, N1, N2, TWO_X}; relation is 'ge', 'le', or 'eq'."""

    form_id: str
    lhs: str
    rhs: str
    relation: str


FORMS: dict[str, CharacterizationForm] = {
    f.form_id: f
    for f in (
        CharacterizationForm("ineq6", "E1", "TWO_X", "ge"),
        CharacterizationForm("eq7", "E1", "E2", "eq"),
        CharacterizationForm("ineq8", "E1", "E2", "ge"),
        CharacterizationForm("ineq9", "N1", "TWO_X", "ge"),
        CharacterizationForm("eq10", "N1", "N2", "eq"),
        CharacterizationForm("ineq11", "N1", "N2", "ge"),
        CharacterizationForm("ineq12", "N1", "N2", "le"),
        CharacterizationForm("ineq13", "E1", "TWO_X", "le"),
        CharacterizationForm("eq14", "E1", "TWO_X", "eq"),
        CharacterizationForm("ineq15", "E1", "E2", "le"),
        CharacterizationForm("eq16", "N1", "TWO_X", "eq"),
        CharacterizationForm("ineq17", "N1", "TWO_X", "le"),
        CharacterizationForm("eq18", "E2", "TWO_X", "eq"),
        CharacterizationForm("eq19", "N2", "TWO_X", "eq"),
    )
}

EQUALITY_FORMS = tuple(fid for fid, f in FORMS.items() if f.relation == "eq")

_EXPR_LABELS = {
    "E1": "|SXS^-1+S^-1XS|",
    "E2": "|S*XS^-1+S^-1XS*|",
    "N1": "|SXS^-1|+|S^-1XS|",
    "N2": "|S*XS^-1|+|S^-1XS*|",
    "TWO_X": "2|X|",
}


def _expressions(s: np.ndarray, x: np.ndarray, kind: NormKind) -> dict[str, float]:
    si = matcore.inverse(s)
    s_star, si_star = s.conj().T, si.conj().T
    a = s @ x @ si
    b = si @ x @ s
    c = s_star @ x @ si
    d = si @ x @ s_star
    return {
        "E1": norm(a + b, kind),
        "E2": norm(c + d, kind),
        "N1": norm(a, kind) + norm(b, kind),
        "N2": norm(c, kind) + norm(d, kind),
        "TWO_X": 2.0 * norm(x, kind),
    }


def characterization_check(
    s,
    x,
    form: CharacterizationForm | str,
    kind: NormKind = OP,
    tol: float | None = None,
) -> ChainReport:
    """Evaluate one characterization relation on a single sample.

    Inequality reports put the expected-larger side first so the margin is
    nonnegative on the characterized class; equality reports use an 'eq'
    link whose margin is the signed difference lhs - rhs.  Sampled passes
    are evidence about class membership, never a proof.
    """
    if isinstance(form, str):
        try:
            form = FORMS[form]
        except KeyError:
            raise ValueError(f"unknown form id {form!r}") from None
    s = matcore.as_matrix(s)
    x = matcore.as_matrix(x)
    vals = _expressions(s, x, kind)
    lhs_label, rhs_label = _EXPR_LABELS[form.lhs], _EXPR_LABELS[form.rhs]
    lv, rv = vals[form.lhs], vals[form.rhs]
    if form.relation == "eq":
        return chain((lhs_label, rhs_label), (lv, rv), tol=EQUALITY_TOL if tol is None else tol, relations=("eq",))
    if tol is None:
        tol = DEFAULT_TOL
    if form.relation == "ge":
        return chain((lhs_label, rhs_label), (lv, rv), tol=tol)
    return chain((rhs_label, lhs_label), (rv, lv), tol=tol)


# Operator class that makes each relation an identity or a theorem.
_FORM_CLASS = {
    "ineq6": "scaled_selfadjoint",
    "eq7": "scaled_selfadjoint",
    "ineq8": "scaled_selfadjoint",
    "ineq9": "normal",
    "eq10": "normal",
    "ineq11": "normal",
    "ineq12": "normal",
    "ineq13": "scaled_unitary",
    "eq14": "scaled_reflection",
    "ineq15": "scaled_unitary",
    "eq16": "scaled_unitary",
    "ineq17": "scaled_unitary",
    "eq18": "scaled_unitary",
    "eq19": "scaled_unitary",
}


def sample_for_form(form_id: str, n: int, rng: matcore.Rng, cond: float = 100.0) -> np.ndarray:
    """Draw S from the operator class characterized by the given form."""
    try:
        family = _FORM_CLASS[form_id]
    except KeyError:
        raise ValueError(f"unknown form id {form_id!r}") from None
    if family == "scaled_selfadjoint":
        return matcore.random_scaled_selfadjoint(n, cond, rng)
    if family == "normal":
        return matcore.random_normal_invertible(n, cond, rng)
    if family == "scaled_unitary":
        return matcore.random_scaled_unitary(n, rng)
    return matcore.random_scaled_reflection(n, rng)
