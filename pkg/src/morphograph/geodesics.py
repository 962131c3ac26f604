"""Graph-native shortest-distance algorithms on flooding graphs.

All of them grow a settled domain from the labeled regional minima and
propagate labels along the geodesics:

* ``dijkstra_to_minima`` keeps re-estimating boundary nodes and settles
  the smallest estimate (for depth 1 this is exactly Prim's forest
  growth from the minima).
* ``core_expanding`` exploits the structure of lexicographic distances:
  the settled boundary node with the lowest depth-(k-1) valuation may
  immediately settle every unsettled neighbor that floods it, so each
  node enters the queue exactly once.
* ``hq_watershed`` is the depth-2 special case driven by a hierarchical
  queue; FIFO order within a bucket divides plateaus from their lower
  boundary inwards.

Also here: additive toll/topographic distances on node-weighted graphs
and the decomposition of a node field into local tolls whose integration
along steepest descents recovers the field.
"""

from __future__ import annotations

import heapq
import itertools
import random
from collections import deque
from typing import Iterable, Optional, Sequence, Union

from .errors import MorphographError, NoRoots
from .flooding import minima_of_flooding, require_flooding
from .graphs import Labeling, UNSET, WeightedGraph
from .lexalgebra import LexWeight, UNIT, ZERO, lex_chain


def parse_tie(tie: Union[str, random.Random, None]) -> Optional[random.Random]:
    """Tie policy: "min-label" -> None, "seed:<u64>" -> seeded generator."""
    if tie is None or isinstance(tie, random.Random):
        return tie
    if tie == "min-label":
        return None
    if tie.startswith("seed:"):
        return random.Random(int(tie[5:]))
    raise ValueError(f"unknown tie policy {tie!r}")


class HierarchicalQueue:
    """FIFO buckets indexed by integer priority.

    Extraction returns, among the entries of lowest priority, the one
    introduced first.
    """

    def __init__(self):
        self._buckets: dict[int, deque] = {}
        self._levels: list[int] = []

    def push(self, priority: int, item) -> None:
        bucket = self._buckets.get(priority)
        if bucket is None:
            bucket = self._buckets[priority] = deque()
            heapq.heappush(self._levels, priority)
        bucket.append(item)

    def pop(self) -> tuple[int, object]:
        while self._levels:
            level = self._levels[0]
            bucket = self._buckets.get(level)
            if bucket:
                return level, bucket.popleft()
            heapq.heappop(self._levels)
            self._buckets.pop(level, None)
        raise IndexError("pop from empty queue")

    def __bool__(self) -> bool:
        return any(self._buckets.values())


def _seed_minima(g: WeightedGraph):
    labeling = minima_of_flooding(g)
    dist: list[LexWeight] = [ZERO] * g.num_nodes
    labels = list(labeling.values)
    settled = [False] * g.num_nodes
    inside = []
    for i, lab in enumerate(labeling.values):
        if lab != UNSET:
            dist[i] = UNIT
            settled[i] = True
            inside.append(i)
    return dist, labels, settled, inside


def dijkstra_to_minima(
    g: WeightedGraph, k: int, tie: Union[str, random.Random, None] = "min-label"
) -> tuple[list[LexWeight], Labeling]:
    """Greedy settlement by smallest depth-k estimate.

    A boundary node j flooding a settled node l is estimated by chaining
    its own weight in front of l's settled distance; the smallest
    estimate is final.  Equal estimates with different labels resolve by
    the tie policy.
    """
    require_flooding(g)
    rng = parse_tie(tie)
    nw = g.node_weights
    ew = g.edge_weights
    dist, labels, settled, inside = _seed_minima(g)

    best: dict[int, LexWeight] = {}
    ties: dict[int, int] = {}
    counter = itertools.count()
    heap: list = []

    def relax(l: int) -> None:
        for j, eid in g.neighbors(l):
            if settled[j] or ew[eid] != nw[j]:
                continue  # only pairs (j, jl) flood the domain
            est = lex_chain((nw[j],), dist[l], k)
            cur = best.get(j)
            if cur is None or est < cur:
                best[j] = est
                labels[j] = labels[l]
                ties[j] = 1
                heapq.heappush(heap, (est, next(counter), j))
            elif est == cur and labels[l] != labels[j]:
                ties[j] += 1
                if rng is None:
                    if labels[l] < labels[j]:
                        labels[j] = labels[l]
                elif rng.random() < 1.0 / ties[j]:
                    labels[j] = labels[l]

    for m in inside:
        relax(m)
    while heap:
        est, _, j = heapq.heappop(heap)
        if settled[j] or est != best.get(j):
            continue
        settled[j] = True
        dist[j] = est
        relax(j)

    for i in range(g.num_nodes):
        if not settled[i]:
            labels[i] = UNSET
    return dist, Labeling(tuple(labels), "nodes")


def core_expanding(
    g: WeightedGraph, k: int, tie: Union[str, random.Random, None] = "min-label"
) -> tuple[list[LexWeight], Labeling, int]:
    """Settle each node the moment its lowest flooded neighbor is extracted.

    Returns (distances, labeling, enqueue_count); the count equals the
    number of nodes, each entering the queue exactly once.
    """
    require_flooding(g)
    rng = parse_tie(tie)
    nw = g.node_weights
    ew = g.edge_weights
    dist, labels, settled, inside = _seed_minima(g)

    counter = itertools.count()
    heap: list = []
    enqueued = 0

    def push(t: int) -> None:
        nonlocal enqueued
        key = dist[t][:k - 1] if dist[t] is not None else dist[t]
        sub = rng.random() if rng is not None else 0.0
        heapq.heappush(heap, (key, sub, next(counter), t))
        enqueued += 1

    for m in inside:
        push(m)
    while heap:
        _, _, _, t = heapq.heappop(heap)
        for s, eid in g.neighbors(t):
            if settled[s] or ew[eid] != nw[s]:
                continue  # s must flood t
            settled[s] = True
            dist[s] = lex_chain((nw[s],), dist[t][:k - 1], k)
            labels[s] = labels[t]
            push(s)

    for i in range(g.num_nodes):
        if not settled[i]:
            labels[i] = UNSET
    return dist, Labeling(tuple(labels), "nodes"), enqueued


def hq_watershed(g: WeightedGraph) -> Labeling:
    """Classical watershed: hierarchical-queue flood from the minima.

    Depth-2 core expansion with node weights as bucket priorities, the
    minima first pinned to 0 so every source starts flooding at once;
    FIFO within a bucket assigns plateau nodes to the wavefront that
    reaches them first (from the plateau's lower boundary inwards).
    """
    require_flooding(g)
    labeling = minima_of_flooding(g)
    labels = list(labeling.values)
    nw = [w if labels[i] == UNSET else 0 for i, w in enumerate(g.node_weights)]
    hq = HierarchicalQueue()
    for i, lab in enumerate(labeling.values):
        if lab != UNSET:
            hq.push(nw[i], i)
    while hq:
        _, j = hq.pop()
        for i, _ in g.neighbors(j):
            if labels[i] == UNSET:
                labels[i] = labels[j]
                hq.push(nw[i], i)
    return Labeling(tuple(labels), "nodes")


# ---------------------------------------------------------------------------
# additive node-cost distances
# ---------------------------------------------------------------------------


def _root_groups(roots) -> list[frozenset[int]]:
    groups = []
    for r in roots:
        groups.append(frozenset([r]) if isinstance(r, int) else frozenset(r))
    if not groups or any(not gset for gset in groups):
        raise NoRoots("empty root set")
    return groups


def node_erosion(g: WeightedGraph, n: Sequence[int]) -> tuple[int, ...]:
    """Per node, min of its own weight and its neighbors' weights."""
    return tuple(
        min([n[i]] + [n[j] for j, _ in g.neighbors(i)]) for i in range(g.num_nodes)
    )


def toll_distances(
    g: WeightedGraph,
    roots: Iterable,
    mode: str = "toll",
    include_root_cost: bool = True,
) -> tuple[list[Optional[int]], Labeling]:
    """Additive shortest distance with per-node entry costs.

    mode="toll": entering a node costs its weight; a root starts at its
    own toll (or 0 with ``include_root_cost=False``).  mode="topographic":
    entering costs the drop to the lowest neighbor (weight minus eroded
    weight) and roots start at their altitude, so geodesics are steepest
    descents read backwards.  ``roots`` is a set of node ids or of node
    groups sharing one label.  Labels propagate along the geodesics,
    smallest label winning ties.
    """
    nw = g.require_node_weights()
    groups = _root_groups(roots)
    if mode == "toll":
        cost = list(nw)
        start = [nw[i] if include_root_cost else 0 for i in range(g.num_nodes)]
    elif mode == "topographic":
        eroded = node_erosion(g, nw)
        cost = [nw[i] - eroded[i] for i in range(g.num_nodes)]
        start = list(nw)
    else:
        raise ValueError(f"unknown mode {mode!r}")

    dist: list[Optional[int]] = [None] * g.num_nodes
    labels = [UNSET] * g.num_nodes
    settled = [False] * g.num_nodes
    counter = itertools.count()
    heap: list = []
    for lab, group in enumerate(groups, start=1):
        for r in sorted(group):
            if dist[r] is None or start[r] < dist[r]:
                dist[r] = start[r]
                labels[r] = lab
            elif start[r] == dist[r] and lab < labels[r]:
                labels[r] = lab
            heapq.heappush(heap, (dist[r], next(counter), r))
    while heap:
        d, _, i = heapq.heappop(heap)
        if settled[i] or d != dist[i]:
            continue
        settled[i] = True
        for j, _ in g.neighbors(i):
            if settled[j]:
                continue
            nd = d + cost[j]
            if dist[j] is None or nd < dist[j]:
                dist[j] = nd
                labels[j] = labels[i]
                heapq.heappush(heap, (nd, next(counter), j))
            elif nd == dist[j] and labels[i] < labels[j]:
                labels[j] = labels[i]
    for i in range(g.num_nodes):
        if not settled[i]:
            labels[i] = UNSET
    return dist, Labeling(tuple(labels), "nodes")


def reconstruct_by_integration(g: WeightedGraph) -> tuple[tuple[int, ...], Labeling]:
    """Decompose a node field into local tolls plus a catchment partition.

    Minima keep their altitude as toll, every other node the drop to its
    lowest neighbor.  Summing tolls along a steepest-descent path from a
    minimum recovers the field exactly, which is verified before
    returning.
    """
    from .graphs import regional_minima

    nw = g.require_node_weights()
    groups = regional_minima(g, "nodes")
    span = {i for m in groups for i in m}
    eroded = node_erosion(g, nw)
    tolls = tuple(
        nw[i] if i in span else nw[i] - eroded[i] for i in range(g.num_nodes)
    )
    dist, labeling = toll_distances(g, groups, mode="topographic")
    for i in range(g.num_nodes):
        if dist[i] is not None and dist[i] != nw[i]:
            raise MorphographError(
                f"integration failed at node {i}: {dist[i]} != {nw[i]}"
            )
    return tolls, labeling
