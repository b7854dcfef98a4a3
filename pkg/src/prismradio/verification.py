"""Independent audit of radio labelings.

``verify`` checks the radio condition d(u, v) + |c(u) - c(v)| >= diam + 1
for every unordered vertex pair against the graph's BFS distance matrix and
returns a report rather than a verdict bit.  Duplicate labels need no special
treatment: a pair with gap 0 always violates the condition, so collisions
surface as ordinary violations with label_gap = 0.  Violations are listed in
lexicographic (cycle, position) order of the pair, so reports are stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .graphs import PrismGraph, Vertex
from .labeling import Labeling

__all__ = ["Violation", "VerificationReport", "verify", "span_of"]


class Violation(NamedTuple):
    u: Vertex
    v: Vertex
    distance: int
    label_gap: int
    required: int


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking every pair: valid iff violations is empty."""

    valid: bool
    violations: tuple[Violation, ...]
    span: int
    pairs_checked: int

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "span": self.span,
            "pairs_checked": self.pairs_checked,
            "violations": [
                {
                    "u": {"cycle": w.u.cycle, "pos": w.u.position},
                    "v": {"cycle": w.v.cycle, "pos": w.v.position},
                    "distance": w.distance,
                    "label_gap": w.label_gap,
                    "required": w.required,
                }
                for w in self.violations
            ],
        }


def span_of(labeling: Labeling) -> int:
    """Largest label used; ValueError("empty labeling") when there is none."""
    if not labeling.assignment:
        raise ValueError("empty labeling")
    return max(labeling.assignment.values())


def verify(g: PrismGraph, labeling: Labeling) -> VerificationReport:
    """Check the radio condition on all pairs of g under the given labels.

    Raises ValueError("labeling incomplete") when some vertex of g has no
    label, and ValueError("labeling references unknown vertex") when the
    assignment mentions a vertex outside g.
    """
    verts = list(g.vertices())
    vert_set = set(verts)
    for v in labeling.assignment:
        if v not in vert_set:
            raise ValueError(f"labeling references unknown vertex: {v}")
    missing = [v for v in verts if v not in labeling.assignment]
    if missing:
        raise ValueError(
            f"labeling incomplete: {len(missing)} vertices unlabeled (first: {missing[0]})"
        )

    nv = 2 * g.n
    labels = np.array([labeling.assignment[v] for v in verts], dtype=np.int64)
    gap = np.abs(labels[:, None] - labels[None, :])
    required = g.diameter + 1
    iu, ju = np.triu_indices(nv, k=1)
    bad = (g.dist[iu, ju] + gap[iu, ju]) < required
    violations = tuple(
        Violation(
            verts[int(i)],
            verts[int(j)],
            int(g.dist[i, j]),
            int(gap[i, j]),
            required,
        )
        for i, j in zip(iu[bad], ju[bad])
    )
    return VerificationReport(
        valid=not violations,
        violations=violations,
        span=int(labels.max()),
        pairs_checked=nv * (nv - 1) // 2,
    )
