"""Lower bounds and gap parameters for radio labelings of Z(n, s).

A radio labeling of a graph with diameter ``diam`` assigns distinct positive
integers c(v) so that d(u, v) + |c(u) - c(v)| >= diam + 1 for every pair.
Sort the vertices by label as alpha_1, ..., alpha_2n.  Because any three
vertices of Z(n, s) have pairwise distances summing to at most n + 3 - s
(with a known exceptional family when s = 3, see ``check_triple_bound``),
labels two apart in the sorted order must differ by at least a value phi(n, s)
that depends only on n mod 4 and s.  Chaining that gap over the whole order
gives the lower bound

    rn(Z(n, s)) >= (n - 1) * phi(n, s) + 2,

which the constructive labelings in ``labeling`` meet exactly.

``phi`` is a table lookup on (n mod 4, s) with n = 4k + r, k >= 1, valid for
s in {1, 2, 3} except the single graph (n, s) = (4, 3).  ``d_offset`` and
``omega`` are the position-offset and rotation-step helpers the construction
uses: (1, y) and (2, y + d_offset) are always at distance exactly diam, and
omega is the step between consecutive odd-indexed positions in the general
case of the construction (defined only for n not divisible by 4).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import PrismGraph, Vertex

__all__ = [
    "PhiParams",
    "in_phi_scope",
    "phi",
    "lower_bound_rn",
    "d_offset",
    "omega",
    "check_triple_bound",
    "triple_bound_violations",
]

# (r, s) -> step, where phi(4k + r, s) = k + step
_PHI_STEP: dict[tuple[int, int], int] = {
    (0, 1): 2, (0, 2): 1, (0, 3): 2,
    (1, 1): 2, (1, 2): 2, (1, 3): 1,
    (2, 1): 3, (2, 2): 2, (2, 3): 2,
    (3, 1): 2, (3, 2): 3, (3, 3): 2,
}


@dataclass(frozen=True)
class PhiParams:
    """The decomposition n = 4k + r (k >= 1) that keys the phi table."""

    n: int
    k: int
    r: int
    s: int

    @classmethod
    def resolve(cls, n: int, s: int) -> "PhiParams":
        if s not in (1, 2, 3):
            raise ValueError(f"outside theorem scope: s={s} (need s in {{1, 2, 3}})")
        k, r = divmod(n, 4)
        if k < 1 or n < 4:
            raise ValueError(f"outside theorem scope: n={n} (need n >= 4)")
        if (n, s) == (4, 3):
            raise ValueError("outside theorem scope: (n, s) = (4, 3) is a special case")
        return cls(n=n, k=k, r=r, s=s)


def in_phi_scope(n: int, s: int) -> bool:
    """True iff (n, s) is covered by the phi table."""
    return s in (1, 2, 3) and n >= 4 and (n, s) != (4, 3)


def phi(n: int, s: int) -> int:
    """Minimum gap between labels two apart in sorted order, table lookup."""
    p = PhiParams.resolve(n, s)
    return p.k + _PHI_STEP[(p.r, p.s)]


def lower_bound_rn(n: int, s: int) -> int:
    """(n - 1) * phi(n, s) + 2; met with equality by the construction."""
    return (n - 1) * phi(n, s) + 2


def d_offset(n: int, s: int) -> int:
    """Position offset realizing the diameter between the two cycles.

    d((1, y), (2, y + d_offset(n, s))) equals the diameter for every y.
    """
    if s not in (1, 2, 3):
        raise ValueError(f"outside theorem scope: s={s} (need s in {{1, 2, 3}})")
    if n < 3:
        raise ValueError(f"outside theorem scope: n={n} (need n >= 3)")
    return (n + 1) // 2 if s in (1, 3) else (n + 2) // 2


def omega(n: int) -> int:
    """Rotation step used by the general-case construction.

    Defined for n = 4k + r with r in {1, 2, 3} and k >= 1: equal to k when
    r = 1, or when r = 2 with k odd; equal to k + 1 when r = 3, or when
    r = 2 with k even.
    """
    k, r = divmod(n, 4)
    if r == 0:
        raise ValueError(f"case-1 only: omega is undefined for n={n} divisible by 4")
    if k < 1:
        raise ValueError(f"case-1 only: omega needs n >= 5, got n={n}")
    if r == 1:
        return k
    if r == 3:
        return k + 1
    return k if k % 2 == 1 else k + 1


def _phi_from_triple_budget(n: int, s: int) -> int:
    """Rederive phi from first principles, as a cross-check of the table.

    Summing the radio condition over the three pairs of {alpha_i, alpha_i+1,
    alpha_i+2} and applying the triple-distance budget n + 3 - s yields
    2 * |c(alpha_i+2) - c(alpha_i)| >= 3 * (diam + 1) - (n + 3 - s), i.e.
    phi = ceil((3 + 3 * diam - (n + 3 - s)) / 2).  Agrees with the table on
    its whole domain; the selftest bounds suite enforces that agreement.
    """
    diam = (n + 3 - s) // 2
    return -((-(3 + 3 * diam - (n + 3 - s))) // 2)


def _partner_index(i: int, n: int) -> int:
    # index of (2, j) for (1, j) and vice versa
    return (i + n) % (2 * n)


def triple_bound_violations(
    g: PrismGraph,
) -> list[tuple[Vertex, Vertex, Vertex, int]]:
    """Exhaustively find vertex triples whose pairwise distances sum past n + 3 - s.

    For s = 3, triples containing both (1, j) and (2, j) for some j are
    exempt: that pair is adjacent, yet both of its ends can sit at full
    diameter from a third vertex, which legitimately pushes the sum to n + 1.
    The budget holds for every other triple, so the exempt family is excluded
    from the sweep rather than reported.
    """
    n, nv = g.n, 2 * g.n
    limit = g.n + 3 - g.s
    dist = g.dist
    out: list[tuple[Vertex, Vertex, Vertex, int]] = []

    partner_pair = np.zeros((nv, nv), dtype=bool)
    if g.s == 3:
        for i in range(n):
            partner_pair[i, i + n] = partner_pair[i + n, i] = True

    for i in range(nv - 2):
        row = dist[i, i + 1 :]
        sub = dist[i + 1 :, i + 1 :]
        totals = row[:, None] + row[None, :] + sub
        mask = np.triu(np.ones_like(sub, dtype=bool), k=1)
        if g.s == 3:
            mask &= ~partner_pair[i + 1 :, i + 1 :]
            bad_with_i = partner_pair[i, i + 1 :]
            mask[bad_with_i, :] = False
            mask[:, bad_with_i] = False
        for j, k in np.argwhere(mask & (totals > limit)):
            out.append(
                (
                    g.vertex_at(i),
                    g.vertex_at(i + 1 + int(j)),
                    g.vertex_at(i + 1 + int(k)),
                    int(totals[j, k]),
                )
            )
    return out


def check_triple_bound(g: PrismGraph) -> bool:
    """True iff no triple (outside the s = 3 exemption) exceeds the budget."""
    return not triple_bound_violations(g)
