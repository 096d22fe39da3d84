"""Ordered value chains with per-link tolerance verdicts.

A ChainReport holds named values expected to run largest-first.  Each
adjacent pair is one link; a "ge" link passes when the margin v[i]-v[i+1]
is at least -tol*scale, an "eq" link when |margin| <= tol*scale, with
scale = max(1, |v[i]|, |v[i+1]|) so verdicts are scale-free.
"""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["ChainReport", "chain", "DEFAULT_TOL"]

DEFAULT_TOL = 1e-8


@dataclass(frozen=True)
class ChainReport:
    labels: tuple[str, ...]
    values: tuple[float, ...]
    margins: tuple[float, ...]
    link_pass: tuple[bool, ...]
    relations: tuple[str, ...]
    tol: float = field(default=DEFAULT_TOL)

    @property
    def ok(self) -> bool:
        """True when every link passes."""
        return all(self.link_pass)

    @property
    def min_margin(self) -> float:
        return min(self.margins) if self.margins else 0.0

    def as_dict(self) -> dict:
        return {
            "labels": list(self.labels),
            "values": list(self.values),
            "margins": list(self.margins),
            "relations": list(self.relations),
            "link_pass": list(self.link_pass),
            "pass": self.ok,
        }


def chain(
    labels,
    values,
    tol: float = DEFAULT_TOL,
    relations=None,
) -> ChainReport:
    """Build a ChainReport from ordered labels and values.

    relations supplies one tag per link ("ge" or "eq"); omitted links
    default to "ge".
    """
    labels = tuple(str(s) for s in labels)
    values = tuple(float(v) for v in values)
    if len(labels) != len(values):
        raise ValueError("labels and values must have equal length")
    if len(values) < 2:
        raise ValueError("a chain needs at least two values")
    nlinks = len(values) - 1
    if relations is None:
        relations = ("ge",) * nlinks
    else:
        relations = tuple(relations)
        if len(relations) != nlinks:
            raise ValueError(f"expected {nlinks} relations, got {len(relations)}")
        if any(r not in ("ge", "eq") for r in relations):
            raise ValueError("relations must be 'ge' or 'eq'")

    margins = []
    verdicts = []
    for i in range(nlinks):
        hi, lo = values[i], values[i + 1]
        margin = hi - lo
        scale = max(1.0, abs(hi), abs(lo))
        if relations[i] == "ge":
            verdicts.append(margin >= -tol * scale)
        else:
            verdicts.append(abs(margin) <= tol * scale)
        margins.append(margin)
    return ChainReport(
        labels=labels,
        values=values,
        margins=tuple(margins),
        link_pass=tuple(verdicts),
        relations=relations,
        tol=tol,
    )
