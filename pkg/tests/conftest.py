"""Shared corpus and independent oracles.

The oracles here deliberately avoid the package's bitset machinery: distances
come from Floyd-Warshall on the edge list and visibility from explicit
enumeration of every geodesic.
"""

import random
from itertools import combinations, permutations

import pytest

from visipoly.graph import Graph, family
from visipoly.polynomial import Polynomial


def floyd(g):
    n = g.n
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in g.edges():
        d[u][v] = d[v][u] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def all_geodesics(g, u, v, d=None):
    """Every shortest u-v path as a vertex tuple."""
    d = d or floyd(g)
    nbrs = {a: [b for b in range(g.n) if g.has_edge(a, b)] for a in range(g.n)}
    out = []

    def walk(path):
        last = path[-1]
        if last == v:
            out.append(tuple(path))
            return
        for w in nbrs[last]:
            if d[w][v] == d[last][v] - 1:
                walk(path + [w])

    walk([u])
    return out


class Oracle:
    """Geodesic-enumeration visibility, cached per graph."""

    def __init__(self, g):
        self.g = g
        self.d = floyd(g)
        self._geo = {}

    def geodesics(self, u, v):
        key = (min(u, v), max(u, v))
        if key not in self._geo:
            self._geo[key] = all_geodesics(self.g, key[0], key[1], self.d)
        return self._geo[key]

    def visible(self, u, v, x):
        return any(not (set(p[1:-1]) & x) for p in self.geodesics(u, v))

    def mv(self, x):
        x = set(x)
        return all(self.visible(a, b, x) for a, b in combinations(sorted(x), 2))

    def polynomial(self):
        counts = [0] * (self.g.n + 1)
        for k in range(self.g.n + 1):
            for s in combinations(range(self.g.n), k):
                if self.mv(s):
                    counts[k] += 1
        return Polynomial(counts)

    def cq_visible(self, q, w):
        q, w = set(q), set(w)
        return all(self.visible(u, y, q) for u in q for y in w) and all(
            self.visible(a, b, q) for a, b in combinations(sorted(w), 2)
        )


def isomorphic(g, h):
    """Backtracking isomorphism test with degree pruning (tests only)."""
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degree(v) for v in range(g.n)) != sorted(h.degree(v) for v in range(h.n)):
        return False
    n = g.n
    mapping = [-1] * n
    used = [False] * n

    def extend(i):
        if i == n:
            return True
        for j in range(n):
            if used[j] or g.degree(i) != h.degree(j):
                continue
            if all(g.has_edge(i, k) == h.has_edge(j, mapping[k]) for k in range(i)):
                mapping[i] = j
                used[j] = True
                if extend(i + 1):
                    return True
                used[j] = False
        mapping[i] = -1
        return False

    return extend(0)


def isomorphic_bruteforce(g, h):
    """Plain permutation search; only for tiny graphs."""
    if g.n != h.n:
        return False
    eg = {frozenset(e) for e in g.edges()}
    eh = {frozenset(e) for e in h.edges()}
    return any({frozenset((p[a], p[b])) for a, b in eg} == eh for p in permutations(range(g.n)))


def random_connected_graph(rng, n, p=0.3):
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


RANDOM_SEED = 20241015


def random_corpus():
    rng = random.Random(RANDOM_SEED)
    return [random_connected_graph(rng, rng.randint(5, 12)) for _ in range(10)]


def build_corpus():
    """Named graphs: every family in small sizes plus fixed random graphs."""
    items = []
    for n in range(4, 13):
        items.append((f"W{n}", family("wheel", n)))
    for n in range(4, 7):
        items.append((f"H{n}", family("helm", n)))
    for n in range(1, 6):
        items.append((f"F{n}", family("friendship", n)))
    for n in range(3, 13):
        items.append((f"S{n}", family("shell", n)))
    for m, n in [(3, 3), (3, 5), (4, 4), (4, 6), (5, 6)]:
        items.append((f"B{m},{n}", family("bow", m, n)))
    for n in range(1, 9):
        items.append((f"P{n}", family("path", n)))
    for n in range(3, 11):
        items.append((f"C{n}", family("cycle", n)))
    for n in range(1, 8):
        items.append((f"K{n}", family("complete", n)))
    for i, g in enumerate(random_corpus()):
        items.append((f"R{i}", g))
    return items


CORPUS = build_corpus()


@pytest.fixture(scope="session")
def corpus():
    return CORPUS
