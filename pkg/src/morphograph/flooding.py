"""Flooding graphs: construction, validation, pairs and shared minima.

A flooding graph carries both node and edge weights tied together by the
two identities "every edge is the max of its endpoints" and "every node
is the min of its adjacent edges".  On such a graph the node-weight and
edge-weight reliefs have the same regional minima, and each node outside
the minima owns at least one adjacent edge of equal weight (a flooding
pair), the atomic step of every descent used later.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .adjunction import (
    dilate_nodes_to_edges,
    erode_edges_to_nodes,
)
from .errors import InvalidFloodingGraph, ZeroNonMinimum
from .graphs import (
    Labeling,
    UNSET,
    WeightedGraph,
    expand_isolated_minima,
    lowest_edge_filter,
    minima_span,
    regional_minima,
)


@dataclass(frozen=True)
class FloodingReport:
    ok: bool
    bad_edges: tuple[int, ...]  # edges where weight != max of endpoints
    bad_nodes: tuple[int, ...]  # nodes where weight != min of adjacent edges


def validate_flooding(g: WeightedGraph) -> FloodingReport:
    """Check both flooding identities; list offending carriers."""
    if not (g.has_node_weights and g.has_edge_weights):
        return FloodingReport(False, (), ())
    want_e = dilate_nodes_to_edges(g, g.node_weights)
    want_n = erode_edges_to_nodes(g, g.edge_weights)
    bad_e = tuple(i for i, w in enumerate(g.edge_weights) if w != want_e[i])
    bad_n = tuple(i for i, w in enumerate(g.node_weights) if w != want_n[i])
    return FloodingReport(not bad_e and not bad_n, bad_e, bad_n)


def require_flooding(g: WeightedGraph) -> WeightedGraph:
    report = validate_flooding(g)
    if not report.ok:
        raise InvalidFloodingGraph(
            f"bad edges {report.bad_edges[:8]}, bad nodes {report.bad_nodes[:8]}"
        )
    return g


def flooding_from_edges(g: WeightedGraph) -> WeightedGraph:
    """Derive a flooding graph from an edge-weighted graph.

    Keeps only the lowest adjacent edges of each node (the others play no
    role in the erosion) and weights the nodes with the min of their
    remaining adjacent edges.
    """
    g.require_edge_weights()
    kept = lowest_edge_filter(g, "lowest_edges")
    part = g.partial(kept)
    return part.with_weights(node_weights=erode_edges_to_nodes(part, part.edge_weights))


def flooding_from_nodes(g: WeightedGraph) -> WeightedGraph:
    """Derive a flooding graph from a node-weighted graph.

    Isolated regional minima first get a dummy twin, then every edge takes
    the max of its endpoints.
    """
    g.require_node_weights()
    gx = expand_isolated_minima(g)
    return gx.with_weights(edge_weights=dilate_nodes_to_edges(gx, gx.node_weights))


# ---------------------------------------------------------------------------
# shared minima
# ---------------------------------------------------------------------------


def minima_of_flooding(g: WeightedGraph) -> Labeling:
    """Labeling of the regional minima, identical on both carriers.

    The node-weight minima and the node spans of the edge-weight minima
    must agree (isolated nodes count as singleton minima on both sides);
    any disagreement means the graph is not a flooding graph.
    """
    require_flooding(g)
    node_m = {frozenset(m) for m in regional_minima(g, "nodes")}
    edge_m = {
        frozenset(s)
        for s in minima_span(regional_minima(g, "edges"), g, "edges")
    }
    isolated = {
        frozenset([i]) for i in range(g.num_nodes) if not g.neighbors(i)
    }
    if node_m != edge_m | isolated:
        raise InvalidFloodingGraph("node and edge minima disagree")
    labels = [UNSET] * g.num_nodes
    for k, m in enumerate(sorted(node_m, key=min), start=1):
        for i in m:
            labels[i] = k
    return Labeling(tuple(labels), "nodes")


def minima_sets(labeling: Labeling) -> list[frozenset[int]]:
    """Minima as node sets, ordered by label."""
    return [ids for _, ids in sorted(labeling.label_sets().items())]


def zero_minima(g: WeightedGraph) -> WeightedGraph:
    """Re-weight every regional minimum (nodes and internal edges) to 0.

    Keeps "edge = max of endpoints" valid everywhere; "node = min of
    adjacent edges" may fail afterwards on minima that are isolated
    nodes, which is harmless for every descent-based computation.
    Raises ZeroNonMinimum if a node outside the minima already weighs 0.
    """
    nw = g.require_node_weights()
    ew = g.require_edge_weights()
    span = set()
    for m in minima_span(regional_minima(g, "edges"), g, "edges"):
        span.update(m)
    span.update(i for i in range(g.num_nodes) if not g.neighbors(i))
    for i in range(g.num_nodes):
        if i not in span and nw[i] == 0:
            raise ZeroNonMinimum(f"node {i} weighs 0 outside the minima")
    new_n = tuple(0 if i in span else nw[i] for i in range(g.num_nodes))
    new_e = tuple(
        0 if u in span and v in span else ew[eid]
        for eid, (u, v) in enumerate(g.edges)
    )
    return g.with_weights(node_weights=new_n, edge_weights=new_e)


# ---------------------------------------------------------------------------
# flooding pairs
# ---------------------------------------------------------------------------


def assign_pairs(
    g: WeightedGraph,
    inside_minima: frozenset[int],
    rng: Optional[random.Random] = None,
) -> dict[int, int]:
    """One-to-one map node -> adjacent equal-weight edge, outside the minima.

    Plateaus are resolved by a breadth-first spanning tree grown from
    their exit nodes (nodes with a strictly lower neighbor); each plateau
    node pairs with its tree-parent edge, each exit with an edge to a
    strictly lower neighbor.  Choices default to the smallest node id;
    with ``rng`` they are drawn uniformly instead.
    """
    nw = g.require_node_weights()
    g.require_edge_weights()
    pairs: dict[int, int] = {}
    visited = [False] * g.num_nodes
    for start in range(g.num_nodes):
        if visited[start] or start in inside_minima:
            continue
        level = nw[start]
        # plateau = equal-weight node zone around start, outside the minima
        zone = {start}
        queue = deque([start])
        visited[start] = True
        while queue:
            i = queue.popleft()
            for j, _ in g.neighbors(i):
                if not visited[j] and j not in inside_minima and nw[j] == level:
                    visited[j] = True
                    zone.add(j)
                    queue.append(j)
        exits = {}
        for s in sorted(zone):
            lower = [(t, eid) for t, eid in g.neighbors(s) if nw[t] < level]
            if lower:
                exits[s] = rng.choice(lower)[1] if rng else lower[0][1]
        if not exits:
            raise InvalidFloodingGraph(f"plateau at level {level} has no exit")
        for s, eid in exits.items():
            pairs[s] = eid
        frontier = sorted(exits)
        seen = set(frontier)
        while frontier:
            reachable: dict[int, list[int]] = {}
            for p in frontier:
                for j, eid in g.neighbors(p):
                    if j in zone and j not in seen:
                        reachable.setdefault(j, []).append(eid)
            nxt = []
            for j in sorted(reachable):
                cands = sorted(reachable[j])
                pairs[j] = rng.choice(cands) if rng else cands[0]
                seen.add(j)
                nxt.append(j)
            frontier = nxt
        if seen != zone:
            raise InvalidFloodingGraph(f"plateau at level {level} not spanned")
    return pairs


def flooding_pairs(g: WeightedGraph) -> list[tuple[int, int]]:
    """Deterministic (node, edge_id) pairing for every node outside minima."""
    labeling = minima_of_flooding(g)
    inside = frozenset(i for i, v in enumerate(labeling.values) if v != UNSET)
    pairing = assign_pairs(g, inside)
    return sorted(pairing.items())
