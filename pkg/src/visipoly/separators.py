"""Shortest-separators, set-separators and maximal c_Q-visible families.

For a fixed set Q, a set W outside Q is c_Q-visible when every pair inside W
and every pair (u, w) with u in Q, w in W has a geodesic whose internal
vertices avoid Q.  When Q is itself a mutual-visibility set such W are
called absolute, and the inclusion-maximal ones form the family Γ_Q.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, iter_bits
from .visibility import downset_leaves, is_mutual_visibility_set, is_pair_visible


class NotMutualVisibilitySet(ValueError):
    """Q must be a mutual-visibility set for absolute c_Q-visibility."""


@dataclass(frozen=True)
class CqFamily:
    q: int
    members: tuple[int, ...]
    pairwise_disjoint: bool

    @property
    def unique(self) -> bool:
        return len(self.members) == 1


def _check_vertex(g: Graph, *vs: int) -> None:
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")


def is_shortest_separator(g: Graph, sep: int, u: int, v: int) -> bool:
    """True iff every u-v geodesic passes through ``sep``."""
    _check_vertex(g, sep, u, v)
    if u == v or sep in (u, v):
        raise ValueError("need distinct u, v and a separator outside {u, v}")
    return not is_pair_visible(g, u, v, 1 << sep)


def path_cut(g: Graph) -> int:
    """Mask of vertices that are a shortest-separator for at least one pair."""
    cut = 0
    for u in range(g.n):
        for v in range(u + 1, g.n):
            for w in iter_bits(g.interiors[u][v] & ~cut):
                if not is_pair_visible(g, u, v, 1 << w):
                    cut |= 1 << w
    return cut


def is_set_separator(g: Graph, sep: int, a: int, b: int) -> bool:
    if not a or not b:
        raise ValueError("set-separator needs nonempty vertex sets")
    if a & b:
        raise ValueError("set-separator needs disjoint vertex sets")
    if (a | b) >> sep & 1:
        raise ValueError("separator must lie outside both sets")
    return all(
        is_shortest_separator(g, sep, u, v) for u in iter_bits(a) for v in iter_bits(b)
    )


def is_cq_visible(g: Graph, q: int, w: int) -> bool:
    if q & w:
        raise ValueError("W must be disjoint from Q")
    ws = list(iter_bits(w))
    for u in iter_bits(q):
        for y in ws:
            if not is_pair_visible(g, u, y, q):
                return False
    for i, a in enumerate(ws):
        for b in ws[i + 1:]:
            if not is_pair_visible(g, a, b, q):
                return False
    return True


def _cq_candidates(g: Graph, q: int) -> int:
    """Vertices outside Q that are Q-visible from every vertex of Q."""
    out = 0
    for y in iter_bits(g.full_mask & ~q):
        if all(is_pair_visible(g, u, y, q) for u in iter_bits(q)):
            out |= 1 << y
    return out


def maximal_absolute_cq_visible(g: Graph, q: int) -> CqFamily:
    """Γ_Q: all inclusion-maximal absolute c_Q-visible sets.

    The obstruction set is Q throughout, so c_Q-visibility of W is a
    pairwise condition and the lattice walk only tests pairs that involve
    the vertex being added.
    """
    if q & ~g.full_mask:
        raise GraphError("Q has vertices out of range")
    if not is_mutual_visibility_set(g, q):
        raise NotMutualVisibilitySet(f"Q={sorted(iter_bits(q))} is not a mutual-visibility set")
    cands = _cq_candidates(g, q)

    def can_extend(w: int, y: int) -> bool:
        return all(is_pair_visible(g, a, y, q) for a in iter_bits(w))

    leaves = set(downset_leaves(cands, can_extend))
    members = sorted(
        (x for x in leaves if not any(x != y and x & y == x for y in leaves)),
        key=lambda m: tuple(iter_bits(m)),
    )
    disjoint = all(
        members[i] & members[j] == 0
        for i in range(len(members))
        for j in range(i + 1, len(members))
    )
    return CqFamily(q, tuple(members), disjoint)


def is_disjoint_visible(g: Graph, q: int) -> bool:
    """Q is disjoint-visible when the members of Γ_Q are pairwise disjoint."""
    return maximal_absolute_cq_visible(g, q).pairwise_disjoint
