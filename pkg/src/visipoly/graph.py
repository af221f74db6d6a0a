"""Immutable bitset graphs, the family constructors and their fixed labelings.

Vertices are ``0..n-1`` and every vertex set is a Python ``int`` used as a
bit-vector (bit ``i`` set means vertex ``i`` is in the set).  Graphs are
connected, simple and capped at :data:`MAX_VERTICES` vertices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

MAX_VERTICES = 64

FAMILY_ARITY = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "wheel": 1,
    "helm": 1,
    "friendship": 1,
    "shell": 1,
    "bow": 2,
    "join": 0,
    "corona": 0,
    "custom": 0,
}

# smallest admissible parameter for each family constructor
FAMILY_MIN = {
    "path": 1,
    "cycle": 3,
    "complete": 1,
    "wheel": 4,
    "helm": 4,
    "friendship": 1,
    "shell": 3,
    "bow": 3,
}

ROLE_TAGS = frozenset({"hub", "apex", "center", "rim", "pendant"})


class GraphError(ValueError):
    """Raised for structurally invalid graphs or family parameters."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> list[int]:
    return list(iter_bits(mask))


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.name not in FAMILY_ARITY:
            raise GraphError(f"unknown family {self.name!r}")
        params = tuple(int(p) for p in self.params)
        object.__setattr__(self, "params", params)
        arity = FAMILY_ARITY[self.name]
        if len(params) != arity:
            raise GraphError(
                f"{self.name} takes {arity} parameter(s), got {len(params)}"
            )

    def label(self) -> str:
        if not self.params:
            return self.name
        return f"{self.name}({','.join(map(str, self.params))})"

    def to_json(self) -> dict:
        return {"name": self.name, "params": list(self.params)}


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances; ``dm[u][v]`` or ``dm.d[u][v]``."""

    d: tuple[tuple[int, ...], ...]

    def __getitem__(self, u: int) -> tuple[int, ...]:
        return self.d[u]

    def __len__(self) -> int:
        return len(self.d)


def _bfs_rows(n: int, adj: Sequence[int]) -> tuple[tuple[int, ...], ...] | None:
    rows = []
    full = (1 << n) - 1
    for s in range(n):
        row = [-1] * n
        row[s] = 0
        seen = 1 << s
        frontier = seen
        depth = 0
        while frontier:
            depth += 1
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            nxt &= ~seen
            for v in iter_bits(nxt):
                row[v] = depth
            seen |= nxt
            frontier = nxt
        if seen != full:
            return None
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True, eq=False)
class Graph:
    """A connected simple undirected graph with bitset adjacency.

    ``adj[v]`` is the neighbourhood of ``v`` as a bit mask.  Distances are
    computed at construction and available as :attr:`dist`.
    """

    n: int
    adj: tuple[int, ...]
    family: FamilySpec | None = None
    role_items: tuple[tuple[int, str], ...] = ()
    dist: DistanceMatrix = field(init=False, repr=False)

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise GraphError("graph must have at least one vertex")
        if n > MAX_VERTICES:
            raise GraphError(f"graphs are capped at {MAX_VERTICES} vertices, got {n}")
        adj = tuple(int(a) for a in self.adj)
        if len(adj) != n:
            raise GraphError("adjacency must have one row per vertex")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for w in iter_bits(row):
                if not adj[w] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at ({v}, {w})")
        object.__setattr__(self, "adj", adj)
        roles = tuple(sorted((int(v), str(t)) for v, t in dict(self.role_items).items()))
        for v, tag in roles:
            if not 0 <= v < n:
                raise GraphError(f"role assigned to out-of-range vertex {v}")
            if tag not in ROLE_TAGS:
                raise GraphError(f"unknown role tag {tag!r}")
        object.__setattr__(self, "role_items", roles)
        rows = _bfs_rows(n, adj)
        if rows is None:
            raise GraphError("graph is disconnected")
        object.__setattr__(self, "dist", DistanceMatrix(rows))

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Sequence[int]],
        family: FamilySpec | None = None,
        roles: Mapping[int, str] | None = None,
    ) -> "Graph":
        """Build a graph from an edge list, rejecting loops, repeats and bad indices."""
        if n > MAX_VERTICES:
            raise GraphError(f"graphs are capped at {MAX_VERTICES} vertices, got {n}")
        adj = [0] * n
        for e in edges:
            u, v = (int(x) for x in e)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                raise GraphError(f"duplicate edge ({min(u, v)}, {max(u, v)})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), family, tuple((roles or {}).items()))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def roles(self) -> dict[int, str]:
        return dict(self.role_items)

    def vertices_with_role(self, tag: str) -> list[int]:
        return [v for v, t in self.role_items if t == tag]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @cached_property
    def spheres(self) -> tuple[tuple[int, ...], ...]:
        """``spheres[u][k]`` is the mask of vertices at distance exactly ``k`` from ``u``."""
        out = []
        for u in range(self.n):
            row = self.dist[u]
            layers = [0] * (max(row) + 1)
            for v, k in enumerate(row):
                layers[k] |= 1 << v
            out.append(tuple(layers))
        return tuple(out)

    @cached_property
    def interiors(self) -> tuple[tuple[int, ...], ...]:
        """``interiors[u][v]``: vertices other than u, v lying on some u-v geodesic."""
        n, d = self.n, self.dist
        out = [[0] * n for _ in range(n)]
        for u in range(n):
            du = d[u]
            for v in range(u + 1, n):
                duv = du[v]
                dv = d[v]
                mask = 0
                if duv > 1:
                    for w in range(n):
                        if du[w] + dv[w] == duv and w != u and w != v:
                            mask |= 1 << w
                out[u][v] = out[v][u] = mask
        return tuple(tuple(r) for r in out)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n, self.adj, self.family, self.role_items) == (
            other.n,
            other.adj,
            other.family,
            other.role_items,
        )

    def __hash__(self):
        return hash((self.n, self.adj, self.family, self.role_items))

    def summary(self) -> str:
        fam = self.family.label() if self.family else "custom"
        return f"{fam}: n={self.n}, m={self.m}"

    # canonical JSON

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "edges": [[u, v] for u, v in self.edges()],
            "family": self.family.to_json() if self.family else None,
            "roles": {str(v): t for v, t in self.role_items} if self.role_items else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "Graph":
        try:
            n = obj["n"]
            edges = obj["edges"]
        except (KeyError, TypeError) as exc:
            raise GraphError(f"graph JSON missing field: {exc}") from None
        if not isinstance(n, int) or isinstance(n, bool):
            raise GraphError("graph JSON 'n' must be an integer")
        for e in edges:
            if len(e) != 2 or not all(isinstance(x, int) and not isinstance(x, bool) for x in e):
                raise GraphError(f"malformed edge {e!r}")
        fam = obj.get("family")
        family = FamilySpec(fam["name"], tuple(fam.get("params", ()))) if fam else None
        roles = obj.get("roles") or {}
        return cls.from_edges(n, edges, family, {int(k): v for k, v in roles.items()})

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_json_obj(json.loads(text))


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Hop distances by BFS; raises :class:`GraphError` if ``g`` is disconnected."""
    rows = _bfs_rows(g.n, g.adj)
    if rows is None:
        raise GraphError("graph is disconnected")
    return DistanceMatrix(rows)


def _check_min(name: str, value: int, label: str = "n") -> None:
    lo = FAMILY_MIN[name]
    if value < lo:
        raise GraphError(f"{name} requires {label} ≥ {lo}")


def _cycle_edges(vertices: Sequence[int]) -> list[tuple[int, int]]:
    k = len(vertices)
    return [(vertices[i], vertices[(i + 1) % k]) for i in range(k)]


def _path_edges(vertices: Sequence[int]) -> list[tuple[int, int]]:
    return [(vertices[i], vertices[i + 1]) for i in range(len(vertices) - 1)]


def build_family(spec: FamilySpec) -> Graph:
    """Construct a named family member with the fixed labeling.

    * wheel(n): hub 0, rim 1..n-1 in cyclic order
    * helm(n): as wheel, pendant of rim vertex i is i+n-1
    * friendship(n): center 0, triangle i on (0, 2i-1, 2i)
    * shell(n): apex 0, path 1..n-1
    * bow(m, n): apex 0, paths 1..m-1 and m..m+n-2
    """
    name, p = spec.name, spec.params
    if name in ("join", "corona", "custom"):
        raise GraphError(f"{name} graphs are built by composition, not by build_family")
    for i, value in enumerate(p):
        _check_min(name, value, ("m", "n")[i] if name == "bow" else "n")

    if name == "path":
        (n,) = p
        return Graph.from_edges(n, _path_edges(range(n)), spec)
    if name == "cycle":
        (n,) = p
        return Graph.from_edges(n, _cycle_edges(range(n)), spec)
    if name == "complete":
        (n,) = p
        return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)], spec)
    if name == "wheel":
        (n,) = p
        rim = list(range(1, n))
        edges = [(0, r) for r in rim] + _cycle_edges(rim)
        roles = {0: "hub", **{r: "rim" for r in rim}}
        return Graph.from_edges(n, edges, spec, roles)
    if name == "helm":
        (n,) = p
        rim = list(range(1, n))
        edges = [(0, r) for r in rim] + _cycle_edges(rim) + [(r, r + n - 1) for r in rim]
        roles = {0: "hub", **{r: "rim" for r in rim}, **{r + n - 1: "pendant" for r in rim}}
        return Graph.from_edges(2 * n - 1, edges, spec, roles)
    if name == "friendship":
        (n,) = p
        edges = []
        for i in range(1, n + 1):
            a, b = 2 * i - 1, 2 * i
            edges += [(0, a), (0, b), (a, b)]
        return Graph.from_edges(2 * n + 1, edges, spec, {0: "center"})
    if name == "shell":
        (n,) = p
        path = list(range(1, n))
        edges = [(0, v) for v in path] + _path_edges(path)
        return Graph.from_edges(n, edges, spec, {0: "apex"})
    if name == "bow":
        m, n = p
        first = list(range(1, m))
        second = list(range(m, m + n - 1))
        edges = [(0, v) for v in first + second] + _path_edges(first) + _path_edges(second)
        return Graph.from_edges(m + n - 1, edges, spec, {0: "apex"})
    raise GraphError(f"no constructor for family {name!r}")


def family(name: str, *params: int) -> Graph:
    """Shorthand for ``build_family(FamilySpec(name, params))``."""
    return build_family(FamilySpec(name, tuple(params)))


def build_join(g: Graph, h: Graph) -> Graph:
    """``g`` on 0..g.n-1, ``h`` shifted to g.n.., plus every cross edge."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise GraphError(f"join would have {n} > {MAX_VERTICES} vertices")
    g_mask = g.full_mask
    h_mask = h.full_mask << g.n
    adj = [a | h_mask for a in g.adj] + [(a << g.n) | g_mask for a in h.adj]
    return Graph(n, tuple(adj), FamilySpec("join"))


def build_corona(g: Graph, h: Graph) -> Graph:
    """Corona product: ``g`` on 0..g.n-1; the copy of ``h`` for vertex v
    occupies ``g.n + v*h.n .. g.n + (v+1)*h.n - 1`` and is joined to v."""
    n = g.n + g.n * h.n
    if n > MAX_VERTICES:
        raise GraphError(f"corona would have {n} > {MAX_VERTICES} vertices")
    adj = list(g.adj) + [0] * (g.n * h.n)
    for v in range(g.n):
        base = g.n + v * h.n
        block = h.full_mask << base
        adj[v] |= block
        for i, row in enumerate(h.adj):
            adj[base + i] = (row << base) | (1 << v)
    return Graph(n, tuple(adj), FamilySpec("corona"))


def delete_edge(g: Graph, u: int, v: int, prune_isolated: bool = False) -> Graph:
    """Remove edge uv.

    The result must stay connected.  With ``prune_isolated`` an endpoint left
    without neighbours is dropped as well and higher indices shift down by
    one, which is how the helm arises from a wheel corona.
    """
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    if prune_isolated and g.n > 2:
        isolated = [w for w in (u, v) if adj[w] == 0]
        if len(isolated) == 1:
            x = isolated[0]
            low = (1 << x) - 1

            def squeeze(mask: int) -> int:
                return (mask & low) | (mask >> (x + 1) << x)

            adj = [squeeze(a) for i, a in enumerate(adj) if i != x]
    try:
        return Graph(len(adj), tuple(adj), FamilySpec("custom"))
    except GraphError as exc:
        raise GraphError(f"deleting ({u}, {v}) leaves an invalid graph: {exc}") from None


def with_family(g: Graph, spec: FamilySpec | None, roles: Mapping[int, str] | None = None) -> Graph:
    """Return ``g`` relabelled with new family metadata (structure unchanged)."""
    return Graph(g.n, g.adj, spec, tuple((roles or {}).items()))
