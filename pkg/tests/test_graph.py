import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from visipoly.graph import (
    MAX_VERTICES,
    FamilySpec,
    Graph,
    GraphError,
    all_pairs_distances,
    build_corona,
    build_family,
    build_join,
    delete_edge,
    family,
)

from conftest import CORPUS, floyd, isomorphic, isomorphic_bruteforce


def relabel_equal(g, h, perm):
    """g with vertex i renamed perm[i] has exactly h's edge set."""
    return {tuple(sorted((perm[u], perm[v]))) for u, v in g.edges()} == set(h.edges())


EDGE_COUNTS = {
    "wheel": lambda n: (n, 2 * (n - 1)),
    "helm": lambda n: (2 * n - 1, 3 * (n - 1)),
    "friendship": lambda n: (2 * n + 1, 3 * n),
    "shell": lambda n: (n, 2 * n - 3),
}


@pytest.mark.parametrize("name", sorted(EDGE_COUNTS))
@pytest.mark.parametrize("n", range(4, 16))
def test_family_sizes(name, n):
    g = family(name, n)
    assert (g.n, g.m) == EDGE_COUNTS[name](n)


@pytest.mark.parametrize("m", range(3, 9))
@pytest.mark.parametrize("n", range(3, 9))
def test_bow_sizes(m, n):
    g = family("bow", m, n)
    assert (g.n, g.m) == (m + n - 1, 2 * m + 2 * n - 6)


def test_wheel4_is_k4():
    assert family("wheel", 4).edges() == family("complete", 4).edges()


def test_friendship1_is_k3():
    assert family("friendship", 1).edges() == family("complete", 3).edges()


def test_bow33_isomorphic_to_friendship2():
    assert isomorphic_bruteforce(family("bow", 3, 3), family("friendship", 2))


def test_labelings():
    w = family("wheel", 8)
    assert w.roles[0] == "hub" and w.vertices_with_role("rim") == list(range(1, 8))
    assert all(w.has_edge(i, i % 7 + 1) for i in range(1, 8))
    h = family("helm", 8)
    assert all(h.has_edge(i, i + 7) and h.degree(i + 7) == 1 for i in range(1, 8))
    f = family("friendship", 3)
    assert all(f.has_edge(2 * i - 1, 2 * i) for i in range(1, 4))
    b = family("bow", 4, 5)
    assert b.has_edge(1, 2) and b.has_edge(2, 3) and not b.has_edge(3, 4)
    assert b.has_edge(4, 5) and b.has_edge(6, 7)


@pytest.mark.parametrize(
    "name, params, msg",
    [
        ("wheel", (3,), "wheel requires n ≥ 4"),
        ("cycle", (2,), "cycle requires n ≥ 3"),
        ("helm", (3,), "helm requires n ≥ 4"),
        ("friendship", (0,), "friendship requires n ≥ 1"),
        ("shell", (2,), "shell requires n ≥ 3"),
        ("bow", (2, 5), "bow requires m ≥ 3"),
        ("bow", (5, 2), "bow requires n ≥ 3"),
    ],
)
def test_family_bounds(name, params, msg):
    with pytest.raises(GraphError, match=msg):
        build_family(FamilySpec(name, params))


def test_family_arity():
    with pytest.raises(GraphError):
        FamilySpec("bow", (3,))
    with pytest.raises(GraphError):
        FamilySpec("wheel", (3, 4))


def test_join_examples():
    k1 = family("complete", 1)
    assert build_join(k1, k1).edges() == [(0, 1)]
    shell = build_join(family("path", 3), k1)
    # apex lands last in the join, first in the shell labeling
    assert relabel_equal(shell, family("shell", 4), [1, 2, 3, 0])
    assert isomorphic(build_join(family("cycle", 7), k1), family("wheel", 8))


@pytest.mark.parametrize("n", range(4, 13))
def test_wheel_is_cycle_join_k1(n):
    joined = build_join(family("cycle", n - 1), family("complete", 1))
    perm = list(range(1, n)) + [0]
    assert relabel_equal(joined, family("wheel", n), perm)
    assert isomorphic(joined, family("wheel", n))


def test_corona_examples():
    k1 = family("complete", 1)
    assert build_corona(k1, k1).edges() == [(0, 1)]
    g, h = family("path", 2), k1
    c = build_corona(g, h)
    assert (c.n, c.m) == (4, g.m + g.n * (h.m + h.n))
    assert isomorphic(c, family("path", 4))


def test_corona_edge_count_general():
    g, h = family("cycle", 5), family("path", 3)
    c = build_corona(g, h)
    assert c.n == 5 + 5 * 3
    assert c.m == g.m + g.n * (h.m + h.n)


def test_helm_from_corona():
    for n in range(4, 11):
        corona = build_corona(family("wheel", n), family("complete", 1))
        hub_pendant = n  # copy block of the hub starts right after W_n
        with pytest.raises(GraphError):
            delete_edge(corona, 0, hub_pendant)
        helm = delete_edge(corona, 0, hub_pendant, prune_isolated=True)
        assert helm.n == 2 * n - 1
        assert helm.edges() == family("helm", n).edges()


def test_delete_edge():
    c4 = family("cycle", 4)
    assert isomorphic(delete_edge(c4, 0, 3), family("path", 4))
    assert isomorphic(delete_edge(family("complete", 3), 0, 1), family("path", 3))
    with pytest.raises(GraphError):
        delete_edge(c4, 0, 2)
    with pytest.raises(GraphError):
        delete_edge(family("path", 3), 0, 1)


def test_distances_match_floyd():
    for _, g in CORPUS:
        d = floyd(g)
        assert [list(r) for r in g.dist.d] == d
        assert all_pairs_distances(g) == g.dist


def test_distance_invariants():
    for _, g in CORPUS:
        d = g.dist
        for u in range(g.n):
            assert d[u][u] == 0
            for v in range(g.n):
                assert d[u][v] == d[v][u]
                assert (d[u][v] == 1) == g.has_edge(u, v)
                for w in range(g.n):
                    assert d[u][v] <= d[u][w] + d[w][v]


def test_path_endpoints():
    assert family("path", 4).dist[0][3] == 3


@pytest.mark.parametrize("n", range(8, 15))
def test_wheel_rim_distance(n):
    g = family("wheel", n)
    k = n - 1
    for u in range(1, n):
        for v in range(1, n):
            cyc = min(abs(u - v), k - abs(u - v))
            assert g.dist[u][v] == min(2, cyc)
    # rim distance 3 collapses to 2 through the hub
    assert family("wheel", 8).dist[1][4] == 2


def test_disconnected_rejected():
    with pytest.raises(GraphError, match="disconnected"):
        Graph.from_edges(4, [(0, 1), (2, 3)])


def test_vertex_cap():
    with pytest.raises(GraphError, match="64"):
        family("path", MAX_VERTICES + 1)
    assert family("path", MAX_VERTICES).n == MAX_VERTICES


def test_json_roundtrip_and_canonical():
    g = family("helm", 8)
    text = g.to_json()
    obj = json.loads(text)
    assert list(obj) == ["n", "edges", "family", "roles"]
    assert obj["edges"] == sorted(obj["edges"])
    assert all(u < v for u, v in obj["edges"])
    assert Graph.from_json(text) == g
    assert Graph.from_json(text).to_json() == text
    plain = Graph.from_json(family("path", 3).to_json())
    assert json.loads(plain.to_json())["roles"] is None


@pytest.mark.parametrize(
    "obj",
    [
        {"n": 3, "edges": [[0, 0], [0, 1], [1, 2]], "family": None, "roles": None},
        {"n": 3, "edges": [[0, 1], [1, 0], [1, 2]], "family": None, "roles": None},
        {"n": 3, "edges": [[0, 1], [1, 3]], "family": None, "roles": None},
        {"n": 3, "edges": [[0, 1]], "family": None, "roles": None},
    ],
)
def test_json_reader_rejects(obj):
    with pytest.raises(GraphError):
        Graph.from_json(json.dumps(obj))


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=2, max_value=9), st.data())
def test_random_graph_json_roundtrip(n, data):
    # spanning path plus random chords keeps it connected
    extra = data.draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))))
    edges = {(i, i + 1) for i in range(n - 1)}
    edges |= {(min(a, b), max(a, b)) for a, b in extra if a != b}
    g = Graph.from_edges(n, sorted(edges))
    assert Graph.from_json(g.to_json()) == g
