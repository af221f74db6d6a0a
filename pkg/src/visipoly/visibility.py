"""Mutual-visibility decisions and exhaustive enumeration of mutual-visibility sets.

Two vertices u, v are visible with respect to a set X when some u-v geodesic
has no internal vertex in X.  X is a mutual-visibility set when all its
pairs are X-visible.  The family of such sets is closed under taking
subsets, so enumeration is a depth-first walk of the subset lattice that
never extends a set that already fails.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterator

from .graph import Graph, GraphError, iter_bits
from .polynomial import Polynomial, poly_sum

DEFAULT_MAX_N = 22
HARD_MAX_N = 25


class EnumerationCapError(ValueError):
    """Graph too large for exhaustive enumeration."""

    def __init__(self, n: int, cap: int):
        super().__init__(f"graph has {n} vertices; exhaustive enumeration is capped at n ≤ {cap}")
        self.n = n
        self.cap = cap


def check_cap(g: Graph, max_n: int = DEFAULT_MAX_N) -> None:
    if max_n > HARD_MAX_N:
        raise EnumerationCapError(g.n, HARD_MAX_N)
    if g.n > max_n:
        raise EnumerationCapError(g.n, max_n)


def is_pair_visible(g: Graph, u: int, v: int, x: int) -> bool:
    """True iff some shortest u-v path avoids ``x`` at its internal vertices.

    Breadth-first search from u through vertices outside ``x``, advancing one
    distance layer at a time and staying on the u-v geodesic interval; v is
    reached at full length exactly when a clean geodesic exists.
    """
    if u == v:
        raise ValueError("pair visibility needs two distinct vertices")
    d = g.dist[u][v]
    if d <= 1:
        return True
    allowed = g.interiors[u][v] & ~x
    if not allowed:
        return False
    sphere = g.spheres[u]
    adj = g.adj
    frontier = 1 << u
    for k in range(1, d):
        reach = 0
        for w in iter_bits(frontier):
            reach |= adj[w]
        frontier = reach & sphere[k] & allowed
        if not frontier:
            return False
    # every interval vertex on layer d-1 is adjacent to v
    return True


def is_mutual_visibility_set(g: Graph, x: int) -> bool:
    verts = list(iter_bits(x))
    for i, a in enumerate(verts):
        for b in verts[i + 1:]:
            if not is_pair_visible(g, a, b, x):
                return False
    return True


def _geodesic_partners(g: Graph) -> tuple[tuple[int, ...], ...]:
    """``partners[v][a]``: mask of b > a with v strictly inside some a-b geodesic."""
    n = g.n
    interiors = g.interiors
    out = [[0] * n for _ in range(n)]
    for a in range(n):
        row = interiors[a]
        for b in range(a + 1, n):
            for v in iter_bits(row[b]):
                out[v][a] |= 1 << b
    return tuple(tuple(r) for r in out)


def mv_extension_check(g: Graph) -> Callable[[int, int], bool]:
    """Predicate ``ok(x, v)``: given mutual-visibility set x, is x ∪ {v} one too?

    New pairs (a, v) are checked directly.  An old pair (a, b) can only be
    spoiled if v lies inside one of its geodesics, so exactly those pairs are
    re-verified.
    """
    partners = _geodesic_partners(g)

    def ok(x: int, v: int) -> bool:
        y = x | (1 << v)
        for a in iter_bits(x):
            if not is_pair_visible(g, a, v, y):
                return False
        pv = partners[v]
        for a in iter_bits(x):
            for b in iter_bits(pv[a] & x):
                if not is_pair_visible(g, a, b, y):
                    return False
        return True

    return ok


def enumerate_downset(
    candidates: int,
    can_extend: Callable[[int, int], bool],
    root: int = 0,
    first: int | None = None,
) -> Iterator[int]:
    """Yield every set reachable from ``root`` by adding candidate vertices in
    increasing index order while ``can_extend`` holds.

    ``root`` itself is not yielded.  With ``first`` the walk is confined to
    the subtree whose first added vertex is ``first``.  For a downward-closed
    family containing ``root`` this visits each member above ``root`` once.
    """
    if first is not None:
        if not (candidates >> first & 1) or not can_extend(root, first):
            return
        start = root | (1 << first)
        yield start
        stack = [(start, first)]
    else:
        stack = [(root, -1)]
    while stack:
        x, last = stack.pop()
        rest = candidates >> (last + 1) << (last + 1)
        for v in iter_bits(rest):
            if can_extend(x, v):
                y = x | (1 << v)
                yield y
                stack.append((y, v))


def downset_leaves(
    candidates: int, can_extend: Callable[[int, int], bool], root: int = 0
) -> list[int]:
    """Sets of the same walk as :func:`enumerate_downset` (``root`` included)
    that admit no further extension by a higher-index candidate."""
    leaves = []
    stack = [(root, -1)]
    while stack:
        x, last = stack.pop()
        rest = candidates >> (last + 1) << (last + 1)
        grew = False
        for v in iter_bits(rest):
            if can_extend(x, v):
                stack.append((x | (1 << v), v))
                grew = True
        if not grew:
            leaves.append(x)
    return leaves


def iter_mutual_visibility_sets(g: Graph, first: int | None = None) -> Iterator[int]:
    """All nonempty mutual-visibility sets (or those with minimum vertex ``first``)."""
    return enumerate_downset(g.full_mask, mv_extension_check(g), first=first)


def _count_subtree(g: Graph, first: int) -> list[int]:
    counts = [0] * (g.n + 1)
    for x in iter_mutual_visibility_sets(g, first):
        counts[x.bit_count()] += 1
    return counts


def _resolve_threads(threads: int | None) -> int:
    if threads is None or threads <= 0:
        return os.cpu_count() or 1
    return threads


def visibility_polynomial_bruteforce(
    g: Graph, max_n: int = DEFAULT_MAX_N, threads: int | None = 1
) -> Polynomial:
    """Visibility polynomial by pruned exhaustive enumeration.

    The lattice is split by smallest vertex; with ``threads > 1`` the
    subtrees run in worker processes and partial counts are summed.
    """
    check_cap(g, max_n)
    workers = _resolve_threads(threads)
    firsts = range(g.n)
    if workers == 1 or g.n < 8:
        parts = [_count_subtree(g, s) for s in firsts]
    else:
        with ProcessPoolExecutor(max_workers=min(workers, g.n)) as pool:
            parts = list(pool.map(_count_subtree, [g] * g.n, firsts))
    polys = [Polynomial([1])] + [Polynomial(c) for c in parts]
    return poly_sum(polys)


def visibility_polynomial_naive(g: Graph, max_n: int = DEFAULT_MAX_N) -> Polynomial:
    """Unpruned scan over all 2^n subsets; reference for the pruned walk."""
    check_cap(g, max_n)
    counts = [0] * (g.n + 1)
    for x in range(1 << g.n):
        if is_mutual_visibility_set(g, x):
            counts[x.bit_count()] += 1
    return Polynomial(counts)


def mu(g: Graph, max_n: int = DEFAULT_MAX_N, threads: int | None = 1) -> int:
    """Mutual-visibility number: the degree of the visibility polynomial."""
    return visibility_polynomial_bruteforce(g, max_n, threads).degree


def maximum_mutual_visibility_set(g: Graph, max_n: int = DEFAULT_MAX_N) -> int:
    """A largest mutual-visibility set; ties go to the smallest sorted vertex list."""
    check_cap(g, max_n)
    best = 0
    best_key: tuple[int, ...] = ()
    for x in iter_mutual_visibility_sets(g):
        k = x.bit_count()
        if k > best.bit_count() or (k == best.bit_count() and tuple(iter_bits(x)) < best_key):
            best, best_key = x, tuple(iter_bits(x))
    return best


def require_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
