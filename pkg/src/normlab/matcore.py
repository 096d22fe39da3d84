"""Dense complex linear algebra and seeded instance generation.

Matrices are numpy ``complex128`` arrays throughout; ``as_matrix`` is the
boundary validator (2-D, finite entries).  Decompositions wrap LAPACK via
numpy and normalize its conventions: eigenvalues ascending, singular values
descending, errors mapped onto the :mod:`normlab.errors` taxonomy.

Random sampling is purely functional: an :class:`Rng` is an immutable
(seed, path) pair and every sampler draws from a generator reconstructed
from that pair, so a given Rng always produces the same matrix.  Distinct
instances must use distinct substreams (``rng.substream(i)``).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionMismatch,
    NoConvergence,
    NotHermitian,
    NotPositiveDefinite,
    Singular,
)

__all__ = [
    "Rng",
    "HermEigen",
    "SvdResult",
    "as_matrix",
    "require_hermitian",
    "herm_eigen",
    "svd",
    "frac_power",
    "polar_abs",
    "haar_unitary",
    "random_posdef",
    "random_posdef_spectral",
    "random_selfadjoint_invertible",
    "random_selfadjoint_spectral",
    "random_invertible",
    "random_normal_invertible",
    "random_scaled_unitary",
    "random_scaled_reflection",
    "random_scaled_selfadjoint",
    "random_hermitian",
    "ginibre",
    "random_probe_matrix",
    "matmul",
    "add",
    "scale",
    "adjoint",
    "inverse",
    "hadamard",
    "direct_sum",
]

# Relative tolerance for "is this matrix Hermitian" at op boundaries.
HERMITICITY_RTOL = 1e-12
# Eigenvalues below this fraction of the largest are treated as zero when a
# positive definite input is required.
POSDEF_RTOL = 1e-12
# Smallest singular value below this fraction of the Frobenius norm means
# numerically singular.
SINGULAR_RTOL = 1e-13


@dataclass(frozen=True)
class Rng:
    """Splittable deterministic random stream.

    The stream is a pure function of ``(seed, path)``: ``generator()``
    always restarts from the stream origin, and ``substream(i)`` derives an
    independent child stream.  Philox keyed through SeedSequence gives
    counter-based, order-independent streams.
    """

    seed: int
    path: tuple[int, ...] = field(default=())

    def substream(self, index: int) -> "Rng":
        """Independent child stream; substream(i) != substream(j) for i != j."""
        return Rng(self.seed, self.path + (int(index),))

    def generator(self) -> np.random.Generator:
        ss = np.random.SeedSequence(self.seed, spawn_key=self.path)
        return np.random.Generator(np.random.Philox(ss))


@dataclass(frozen=True)
class HermEigen:
    """Spectral decomposition of a Hermitian matrix.

    eigenvalues are real and ascending; vectors is unitary with eigenvectors
    in its columns, so ``vectors @ diag(eigenvalues) @ vectors.conj().T``
    reconstructs the input.
    """

    eigenvalues: np.ndarray
    vectors: np.ndarray


@dataclass(frozen=True)
class SvdResult:
    """Singular value decomposition ``A = left @ diag(s) @ right.conj().T``.

    singular_values are nonnegative and descending; left and right are
    unitary.
    """

    singular_values: np.ndarray
    left: np.ndarray
    right: np.ndarray


def as_matrix(a) -> np.ndarray:
    """Validate and coerce to a 2-D complex128 array.

    Raises DimensionMismatch for non-2-D input and ValueError for NaN/Inf
    entries (no non-finite value is admitted into any matrix).
    """
    out = np.asarray(a, dtype=complex)
    if out.ndim != 2:
        raise DimensionMismatch(f"expected a 2-D matrix, got ndim={out.ndim}")
    if not np.all(np.isfinite(out)):
        raise ValueError("matrix entries must be finite")
    return out


def _require_square(a: np.ndarray) -> None:
    if a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {a.shape}")


def require_hermitian(a: np.ndarray) -> None:
    """Raise NotHermitian unless A equals A* within HERMITICITY_RTOL."""
    scale_ = max(1.0, float(np.linalg.norm(a)))
    if np.linalg.norm(a - a.conj().T) > HERMITICITY_RTOL * scale_:
        raise NotHermitian("matrix is not self-adjoint within tolerance")


def herm_eigen(a) -> HermEigen:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending."""
    a = as_matrix(a)
    _require_square(a)
    require_hermitian(a)
    try:
        eigs, q = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return HermEigen(eigenvalues=eigs, vectors=q)


def svd(a) -> SvdResult:
    """Singular value decomposition with descending singular values."""
    a = as_matrix(a)
    try:
        u, s, vh = np.linalg.svd(a)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return SvdResult(singular_values=s, left=u, right=vh.conj().T)


def frac_power(p, s: float) -> np.ndarray:
    """Real power ``P**s`` of a positive definite matrix.

    Defined spectrally: Q diag(eig**s) Q*.  Requires the smallest eigenvalue
    to exceed POSDEF_RTOL times the largest, so negative exponents stay
    well posed.
    """
    dec = herm_eigen(p)
    eigs = dec.eigenvalues
    if eigs[0] <= POSDEF_RTOL * eigs[-1] or eigs[-1] <= 0.0:
        raise NotPositiveDefinite("matrix is not positive definite within tolerance")
    powered = (dec.vectors * eigs**s) @ dec.vectors.conj().T
    # The spectral formula is Hermitian; rounding is folded back symmetrically.
    return 0.5 * (powered + powered.conj().T)


def polar_abs(a) -> np.ndarray:
    """Positive factor |A| = (A*A)^(1/2) of the polar decomposition."""
    dec = svd(a)
    absval = (dec.right * dec.singular_values) @ dec.right.conj().T
    return 0.5 * (absval + absval.conj().T)


def haar_unitary(n: int, rng: Rng) -> np.ndarray:
    """Haar-distributed n-by-n unitary.

    QR of a complex Ginibre matrix; multiplying Q by the phases of R's
    diagonal makes the factorization unique and the law exactly Haar.
    """
    if n < 1:
        raise DimensionMismatch("dimension must be at least 1")
    g = rng.generator()
    z = (g.standard_normal((n, n)) + 1j * g.standard_normal((n, n))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r).copy()
    d[d == 0] = 1.0
    return q * (d / np.abs(d))


def random_posdef_spectral(n: int, cond: float, rng: Rng) -> tuple[np.ndarray, np.ndarray]:
    """Spectral data (eigenvalues ascending, Haar eigenvectors) of a random
    positive definite matrix with eigenvalues log-uniform in
    [cond**-0.5, cond**0.5]."""
    if cond < 1.0:
        raise ValueError("cond must be >= 1")
    g = rng.generator()
    eigs = np.sort(np.exp(g.uniform(-0.5, 0.5, size=n) * np.log(cond)))
    q = _haar_from_generator(n, g)
    return eigs, q


def random_posdef(n: int, cond: float, rng: Rng) -> np.ndarray:
    """Random Hermitian positive definite matrix with condition <= cond."""
    eigs, q = random_posdef_spectral(n, cond, rng)
    a = (q * eigs) @ q.conj().T
    return 0.5 * (a + a.conj().T)


def random_selfadjoint_spectral(n: int, cond: float, rng: Rng) -> tuple[np.ndarray, np.ndarray]:
    """Spectral data of a random self-adjoint invertible matrix: positive
    log-uniform magnitudes with independent random signs, |eig| >= cond**-0.5."""
    if cond < 1.0:
        raise ValueError("cond must be >= 1")
    g = rng.generator()
    mags = np.exp(g.uniform(-0.5, 0.5, size=n) * np.log(cond))
    signs = np.where(g.random(n) < 0.5, -1.0, 1.0)
    q = _haar_from_generator(n, g)
    return mags * signs, q


def random_selfadjoint_invertible(n: int, cond: float, rng: Rng) -> np.ndarray:
    """Random self-adjoint invertible matrix (signed spectrum, |eig| bounded
    away from zero by cond**-0.5)."""
    eigs, q = random_selfadjoint_spectral(n, cond, rng)
    a = (q * eigs) @ q.conj().T
    return 0.5 * (a + a.conj().T)


def random_invertible(n: int, cond: float, rng: Rng) -> np.ndarray:
    """Random invertible matrix U diag(s) V* with independent Haar factors
    and singular values log-uniform in [cond**-0.5, cond**0.5]."""
    if cond < 1.0:
        raise ValueError("cond must be >= 1")
    g = rng.generator()
    svals = np.exp(g.uniform(-0.5, 0.5, size=n) * np.log(cond))
    u = _haar_from_generator(n, g)
    v = _haar_from_generator(n, g)
    return (u * svals) @ v.conj().T


def random_normal_invertible(n: int, cond: float, rng: Rng) -> np.ndarray:
    """Random invertible normal matrix U diag(d) U* with complex d,
    |d| log-uniform in [cond**-0.5, cond**0.5]."""
    if cond < 1.0:
        raise ValueError("cond must be >= 1")
    g = rng.generator()
    mags = np.exp(g.uniform(-0.5, 0.5, size=n) * np.log(cond))
    phases = np.exp(2j * np.pi * g.random(n))
    q = _haar_from_generator(n, g)
    return (q * (mags * phases)) @ q.conj().T


def random_scaled_unitary(n: int, rng: Rng) -> np.ndarray:
    """Nonzero real scalar times a Haar unitary."""
    g = rng.generator()
    c = _log_uniform_scale(g) * (-1.0 if g.random() < 0.5 else 1.0)
    return c * _haar_from_generator(n, g)


def random_scaled_reflection(n: int, rng: Rng) -> np.ndarray:
    """Nonzero complex scalar times a self-adjoint unitary (Q diag(+-1) Q*)."""
    g = rng.generator()
    c = _log_uniform_scale(g) * np.exp(2j * np.pi * g.random())
    signs = np.where(g.random(n) < 0.5, -1.0, 1.0)
    q = _haar_from_generator(n, g)
    refl = (q * signs) @ q.conj().T
    return c * 0.5 * (refl + refl.conj().T)


def random_scaled_selfadjoint(n: int, cond: float, rng: Rng) -> np.ndarray:
    """Nonzero complex scalar times a self-adjoint invertible matrix."""
    g = rng.generator()
    c = _log_uniform_scale(g) * np.exp(2j * np.pi * g.random())
    mags = np.exp(g.uniform(-0.5, 0.5, size=n) * np.log(max(cond, 1.0)))
    signs = np.where(g.random(n) < 0.5, -1.0, 1.0)
    q = _haar_from_generator(n, g)
    a = (q * (mags * signs)) @ q.conj().T
    return c * 0.5 * (a + a.conj().T)


def random_hermitian(n: int, rng: Rng) -> np.ndarray:
    """Gaussian Hermitian matrix (G + G*)/2."""
    g = rng.generator()
    z = (g.standard_normal((n, n)) + 1j * g.standard_normal((n, n))) / np.sqrt(2.0)
    return 0.5 * (z + z.conj().T)


def ginibre(n: int, m: int | None = None, rng: Rng | None = None) -> np.ndarray:
    """Complex Ginibre matrix: i.i.d. standard complex Gaussian entries."""
    if rng is None:
        raise ValueError("rng is required")
    m = n if m is None else m
    g = rng.generator()
    return (g.standard_normal((n, m)) + 1j * g.standard_normal((n, m))) / np.sqrt(2.0)


def random_probe_matrix(n: int, rng: Rng) -> np.ndarray:
    """Free-matrix sampler for inequality checks.

    Mixture of dense Ginibre draws with the structured extremal candidates:
    rank-one basis matrices e_i e_j*, Hermitian draws, and Haar unitaries.
    Rank-one off-diagonal seeds need n >= 2 and fall back to Ginibre at n=1.
    """
    g = rng.generator()
    pick = g.integers(0, 4)
    if pick == 0 and n >= 2:
        i = int(g.integers(0, n))
        j = int(g.integers(0, n - 1))
        j = j + 1 if j >= i else j
        x = np.zeros((n, n), dtype=complex)
        x[i, j] = 1.0
        return x
    if pick == 1:
        z = (g.standard_normal((n, n)) + 1j * g.standard_normal((n, n))) / np.sqrt(2.0)
        return 0.5 * (z + z.conj().T)
    if pick == 2:
        return _haar_from_generator(n, g)
    return (g.standard_normal((n, n)) + 1j * g.standard_normal((n, n))) / np.sqrt(2.0)


def _haar_from_generator(n: int, g: np.random.Generator) -> np.ndarray:
    z = (g.standard_normal((n, n)) + 1j * g.standard_normal((n, n))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r).copy()
    d[d == 0] = 1.0
    return q * (d / np.abs(d))


def _log_uniform_scale(g: np.random.Generator) -> float:
    # Magnitude log-uniform in [0.1, 10]; keeps scalar factors moderate.
    return float(10.0 ** g.uniform(-1.0, 1.0))


def matmul(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def add(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"cannot add {a.shape} and {b.shape}")
    return a + b


def scale(c, a) -> np.ndarray:
    return complex(c) * as_matrix(a)


def adjoint(a) -> np.ndarray:
    return as_matrix(a).conj().T


def inverse(a) -> np.ndarray:
    """Matrix inverse; raises Singular when the smallest singular value is
    below SINGULAR_RTOL times the Frobenius norm."""
    a = as_matrix(a)
    _require_square(a)
    smallest = np.linalg.svd(a, compute_uv=False)[-1]
    if smallest <= SINGULAR_RTOL * max(np.linalg.norm(a), 1e-300):
        raise Singular("matrix is numerically singular")
    return np.linalg.solve(a, np.eye(a.shape[0], dtype=complex))


def hadamard(a, b) -> np.ndarray:
    """Entrywise product."""
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"entrywise product needs equal shapes, got {a.shape} and {b.shape}")
    return a * b


def direct_sum(a, b) -> np.ndarray:
    """Block-diagonal sum; works for rectangular blocks."""
    a, b = as_matrix(a), as_matrix(b)
    out = np.zeros((a.shape[0] + b.shape[0], a.shape[1] + b.shape[1]), dtype=complex)
    out[: a.shape[0], : a.shape[1]] = a
    out[a.shape[0] :, a.shape[1] :] = b
    return out
