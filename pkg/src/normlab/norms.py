"""Unitarily invariant norms: operator, Schatten p, Ky Fan k.

All three families are functions of the singular values alone, so every
entry point funnels through :func:`norm_from_sv`.  Selector strings used by
the CLI ("op", "fro", "tr", "schatten:<p>", "kyfan:<k>") parse via
:meth:`NormKind.parse`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import matcore

__all__ = ["NormKind", "norm", "norm_from_sv", "direct_sum_norm", "OP", "TR", "FRO"]

# Singular values below this fraction of the largest are clamped to zero
# before p-th powers, stabilizing Schatten norms near p=1.
SV_CLIP_RTOL = 1e-14


@dataclass(frozen=True)
class NormKind:
    """Tagged norm selector.

    family is one of "operator", "schatten", "kyfan".  param carries p for
    Schatten (real, >= 1, finite) or k for Ky Fan (integer >= 1) and is None
    for the operator norm.  There is no Schatten(inf) variant; use operator.
    """

    family: str
    param: float | None = None

    @staticmethod
    def operator() -> "NormKind":
        return NormKind("operator")

    @staticmethod
    def schatten(p: float) -> "NormKind":
        p = float(p)
        if not np.isfinite(p) or p < 1.0:
            raise ValueError(f"Schatten p must be finite and >= 1, got {p}")
        return NormKind("schatten", p)

    @staticmethod
    def kyfan(k: int) -> "NormKind":
        if int(k) != k or k < 1:
            raise ValueError(f"Ky Fan k must be a positive integer, got {k}")
        return NormKind("kyfan", float(int(k)))

    @staticmethod
    def parse(text: str) -> "NormKind":
        """Parse a selector: op | fro | tr | schatten:<p> | kyfan:<k>."""
        sel = text.strip().lower()
        if sel == "op":
            return NormKind.operator()
        if sel == "tr":
            return NormKind.schatten(1.0)
        if sel == "fro":
            return NormKind.schatten(2.0)
        if sel.startswith("schatten:"):
            return NormKind.schatten(float(sel.split(":", 1)[1]))
        if sel.startswith("kyfan:"):
            return NormKind.kyfan(int(sel.split(":", 1)[1]))
        raise ValueError(f"unknown norm selector {text!r}")

    @property
    def label(self) -> str:
        """Canonical selector string (stable across runs, used in reports)."""
        if self.family == "operator":
            return "op"
        if self.family == "schatten":
            return f"schatten:{_fmt_param(self.param)}"
        return f"kyfan:{int(self.param)}"


def _fmt_param(p: float) -> str:
    return str(int(p)) if float(p).is_integer() else repr(float(p))


OP = NormKind.operator()
TR = NormKind.schatten(1.0)
FRO = NormKind.schatten(2.0)


def norm_from_sv(sv: np.ndarray, kind: NormKind) -> float:
    """Norm value from a descending singular value vector."""
    sv = np.asarray(sv, dtype=float)
    if sv.size == 0:
        return 0.0
    top = sv[0]
    if top > 0.0:
        sv = np.where(sv < SV_CLIP_RTOL * top, 0.0, sv)
    if kind.family == "operator":
        return float(top)
    if kind.family == "schatten":
        p = kind.param
        if p == 1.0:
            return float(np.sum(sv))
        if p == 2.0:
            return float(np.sqrt(np.sum(sv * sv)))
        return float(np.sum(sv**p) ** (1.0 / p))
    if kind.family == "kyfan":
        k = int(kind.param)
        return float(np.sum(sv[:k]))
    raise ValueError(f"unknown norm family {kind.family!r}")


def norm(a, kind: NormKind) -> float:
    """Unitarily invariant norm of a matrix."""
    a = matcore.as_matrix(a)
    sv = np.linalg.svd(a, compute_uv=False)
    return norm_from_sv(sv, kind)


def direct_sum_norm(a, b, kind: NormKind) -> float:
    """Norm of the block-diagonal sum of two matrices.

    Equals max(|A|, |B|) for the operator norm and the p-th power sum rule
    (|A|_p^p + |B|_p^p)^(1/p) for Schatten norms; both identities are exact
    because the singular values of the sum are the union of the blocks'.
    """
    return norm(matcore.direct_sum(a, b), kind)
