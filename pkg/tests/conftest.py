"""Shared fixtures, random graph generators and brute-force oracles."""

import random

import pytest

from morphograph import WeightedGraph, flooding_from_edges, flooding_from_nodes
from morphograph.flooding import minima_of_flooding, minima_sets


# -- fixed fixtures ----------------------------------------------------------

PATH4_EDGES = ((0, 1), (1, 2), (2, 3))


@pytest.fixture
def path4():
    """4 nodes a-b-c-d with edge weights ab=1, bc=3, cd=2."""
    return WeightedGraph(4, PATH4_EDGES, None, (1, 3, 2))


@pytest.fixture
def path4_flooding(path4):
    return flooding_from_edges(path4)


@pytest.fixture
def five_path():
    """5 nodes with the symmetric valley profile [0,1,2,1,0]."""
    return WeightedGraph(5, ((0, 1), (1, 2), (2, 3), (3, 4)), (0, 1, 2, 1, 0), None)


@pytest.fixture
def five_path_flooding(five_path):
    return flooding_from_nodes(five_path)


@pytest.fixture
def triangle():
    return WeightedGraph(3, ((0, 1), (1, 2), (0, 2)))


# -- random generators -------------------------------------------------------


def random_edge_weighted(rng, max_nodes=10, w_max=6, edge_prob=0.4, connected=False):
    n = rng.randint(2, max_nodes)
    edges = set()
    if connected:
        order = list(range(n))
        rng.shuffle(order)
        for i in range(1, n):
            u, v = order[i], rng.choice(order[:i])
            edges.add((u, v) if u < v else (v, u))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < edge_prob:
                edges.add((u, v))
    if not connected:
        # leave no isolated nodes so edge/node minima line up exactly
        for u in range(n):
            if not any(u in e for e in edges):
                v = rng.randrange(n - 1)
                v = v if v < u else v + 1
                edges.add((u, v) if u < v else (v, u))
    edges = tuple(sorted(edges))
    return WeightedGraph(n, edges, None, tuple(rng.randint(0, w_max) for _ in edges))


def random_node_weighted(rng, max_nodes=10, w_max=9, edge_prob=0.4):
    n = rng.randint(1, max_nodes)
    edges = set()
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < edge_prob:
                edges.add((u, v))
    return WeightedGraph(
        n, tuple(sorted(edges)), tuple(rng.randint(0, w_max) for _ in range(n)), None
    )


def random_flooding(rng, max_nodes=10, w_max=6, connected=False):
    if rng.random() < 0.5:
        return flooding_from_edges(
            random_edge_weighted(rng, max_nodes, w_max, connected=connected)
        )
    g = random_node_weighted(rng, max_nodes, w_max)
    if connected:
        g = random_edge_weighted(rng, max_nodes, w_max, connected=True).with_weights(
            node_weights=None
        )
        g = WeightedGraph(
            g.num_nodes, g.edges,
            tuple(rng.randint(0, w_max) for _ in range(g.num_nodes)), None,
        )
    return flooding_from_nodes(g)


# -- oracles -----------------------------------------------------------------


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def kruskal_mst(g):
    """(weight, edge ids) of a minimum spanning tree/forest of g."""
    uf = UnionFind(g.num_nodes)
    weight, picked = 0, []
    for w, eid in sorted((g.edge_weights[e], e) for e in range(len(g.edges))):
        u, v = g.edges[eid]
        if uf.union(u, v):
            weight += w
            picked.append(eid)
    return weight, picked


def constrained_msf_weight(fg):
    """Minimum spanning forest with exactly one regional minimum per tree."""
    sets = minima_sets(minima_of_flooding(fg))
    nw = fg.node_weights
    uf = UnionFind(fg.num_nodes)
    weight = 0
    has_min = [False] * fg.num_nodes
    for m in sets:
        members = sorted(m)
        for other in members[1:]:
            uf.union(members[0], other)
        weight += (len(m) - 1) * nw[members[0]]
        has_min[uf.find(members[0])] = True
    for w, eid in sorted((fg.edge_weights[e], e) for e in range(len(fg.edges))):
        u, v = fg.edges[eid]
        ru, rv = uf.find(u), uf.find(v)
        if ru == rv or (has_min[ru] and has_min[rv]):
            continue
        uf.union(u, v)
        has_min[uf.find(u)] = has_min[ru] or has_min[rv]
        weight += w
    return weight


def brute_flooding_distance(g, x, y):
    """Min over simple paths of the max edge weight; None if unreachable."""
    if x == y:
        return 0
    ew = g.edge_weights
    best = None

    def dfs(i, seen, mx):
        nonlocal best
        if best is not None and mx >= best:
            return
        if i == y:
            best = mx
            return
        for j, eid in g.neighbors(i):
            if j not in seen:
                dfs(j, seen | {j}, max(mx, ew[eid]))

    dfs(x, {x}, 0)
    return best


def enumerate_walks(g, start, max_edges):
    """All walks (node sequences) from start with up to max_edges edges."""
    out = [[start]]
    frontier = [[start]]
    for _ in range(max_edges):
        nxt = []
        for walk in frontier:
            for j, _ in g.neighbors(walk[-1]):
                nxt.append(walk + [j])
        out.extend(nxt)
        frontier = nxt
    return out


@pytest.fixture
def rng():
    return random.Random(20120229)
