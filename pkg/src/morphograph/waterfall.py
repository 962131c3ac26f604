"""Waterfall hierarchy by iterated forest contraction.

Each level segments the current graph into drainage basins, records the
forest, and contracts every tree into one node of the next region
adjacency graph; contracted edges keep their weights (minimum among
parallels) and remember which base edge they came from.  Node weights of
the contracted graph come from the min of adjacent edges, i.e. each
basin is flooded up to its lowest pass point, which is what removes
minima between levels.  The loop ends when a single region remains; the
union of all recorded forests is then a minimum spanning tree of the
base graph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Union

from .errors import DisconnectedInput, IncompleteHierarchy, MissingWeights
from .flooding import flooding_from_edges, flooding_from_nodes, require_flooding
from .geodesics import parse_tie
from .graphs import Labeling, WeightedGraph, connected_components, contract
from .steepness import prune_to_steepness
from .watershed import drainage_forest


@dataclass(frozen=True)
class HierarchyLevel:
    forest: frozenset[int]     # base edge ids added at this level
    partition: Labeling        # base nodes -> region label at this level
    region_count: int
    contracted: WeightedGraph  # region adjacency graph after this level


@dataclass(frozen=True)
class Hierarchy:
    base: WeightedGraph        # full edge-weighted working graph (incl. dummies)
    levels: tuple[HierarchyLevel, ...]

    @property
    def complete(self) -> bool:
        return bool(self.levels) and self.levels[-1].contracted.num_nodes == 1


def _prepare(g: WeightedGraph) -> tuple[WeightedGraph, WeightedGraph]:
    """Base edge-weighted graph plus its flooding graph."""
    if g.has_node_weights and g.has_edge_weights:
        require_flooding(g)
        return g, g
    if g.has_edge_weights:
        return g, flooding_from_edges(g)
    if g.has_node_weights:
        flood = flooding_from_nodes(g)
        return flood, flood
    raise MissingWeights("waterfall needs a weighted graph")


def build_hierarchy(
    g: WeightedGraph, k: int = 2, tie: Union[str, random.Random, None] = "min-label"
) -> Hierarchy:
    """Nested watershed partitions down to a single region.

    Level m prunes the current flooding graph to steepness ``k``, takes a
    drainage forest, then contracts it.  Partitions are reported over the
    base nodes and coarsen strictly from level to level.
    """
    rng = parse_tie(tie)
    base, flood = _prepare(g)
    if base.num_nodes > 1 and connected_components(base).num_labels != 1:
        raise DisconnectedInput("waterfall needs a connected graph")
    if base.num_nodes <= 1:
        lone = Labeling((1,) * base.num_nodes, "nodes")
        level = HierarchyLevel(frozenset(), lone, base.num_nodes, base)
        return Hierarchy(base, (level,))

    levels: list[HierarchyLevel] = []
    cur_full = base
    cur_flood = flood
    to_region = list(range(base.num_nodes))   # base node -> current node
    to_base_edge = list(range(len(base.edges)))  # current edge -> base edge

    while True:
        pruned = prune_to_steepness(cur_flood, k)
        forest = drainage_forest(pruned, rng if rng is not None else "min-label")
        forest_full_ids = [
            cur_full.edge_id(*pruned.edges[eid]) for eid in forest.edges
        ]
        base_ids = frozenset(to_base_edge[eid] for eid in forest_full_ids)
        part = Labeling(
            tuple(forest.labels.values[to_region[b]] for b in range(base.num_nodes)),
            "nodes",
        )
        contraction = contract(cur_full, forest_full_ids)
        levels.append(
            HierarchyLevel(base_ids, part, forest.num_trees, contraction.graph)
        )
        if contraction.graph.num_nodes <= 1:
            return Hierarchy(base, tuple(levels))
        to_region = [contraction.node_map[to_region[b]] for b in range(base.num_nodes)]
        to_base_edge = [
            to_base_edge[contraction.edge_origins[e]]
            for e in range(len(contraction.graph.edges))
        ]
        cur_full = contraction.graph
        cur_flood = flooding_from_edges(cur_full)


def merge_levels(h: Hierarchy) -> tuple[int, ...]:
    """Per base edge, the last level at which its two sides are separated.

    Edges inside a level-1 region get 0; an edge separating regions that
    merge when level m+1 is built gets m.  Along the emergent tree these
    values give an ultrametric on the level-1 regions.
    """
    out = []
    for (u, v) in h.base.edges:
        lvl = 0
        for m, level in enumerate(h.levels, start=1):
            if level.partition.values[u] != level.partition.values[v]:
                lvl = m
        out.append(lvl)
    return tuple(out)


def emergent_tree(h: Hierarchy) -> frozenset[int]:
    """Union of all level forests: a minimum spanning tree of the base graph."""
    if not h.complete:
        raise IncompleteHierarchy("hierarchy did not reach a single region")
    edges: set[int] = set()
    for level in h.levels:
        edges.update(level.forest)
    return frozenset(edges)
