#!/usr/bin/env python3
"""Build the waterfall hierarchy of a synthetic terrain and print it.

Generates a 1-D profile with several basins, runs the full pipeline
(flooding graph, steepness pruning, drainage forests, contraction) and
shows how the partitions coarsen level by level until the minimum
spanning tree emerges.

Usage: python3 scripts/waterfall_demo.py [--depth K] [--seed S] [--nodes N]
"""

import argparse
import random
import sys

from morphograph import WeightedGraph, build_hierarchy, emergent_tree, merge_levels


def random_profile(rng, n):
    """A jagged 1-D terrain with a handful of distinct valleys."""
    out = []
    level = rng.randint(0, 4)
    for _ in range(n):
        level = max(0, min(9, level + rng.choice((-2, -1, 1, 2))))
        out.append(level)
    return out


def render(profile, labels):
    for height in range(max(profile), -1, -1):
        row = "".join("#" if p >= height else " " for p in profile)
        print(f"{height:2d} |{row}")
    print("    " + "".join(str(l % 10) for l in labels))


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--depth", type=int, default=2)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--nodes", type=int, default=48)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    profile = random_profile(rng, args.nodes)
    g = WeightedGraph(
        len(profile),
        tuple((i, i + 1) for i in range(len(profile) - 1)),
        tuple(profile),
        None,
    )
    h = build_hierarchy(g, args.depth)
    print(f"profile of {len(profile)} nodes, {len(h.levels)} hierarchy levels\n")
    for m, lvl in enumerate(h.levels, start=1):
        labels = [lvl.partition.values[b] for b in range(len(profile))]
        print(f"level {m}: {lvl.region_count} regions")
        render(profile, labels)
        print()
    tree = emergent_tree(h)
    weight = sum(h.base.edge_weights[e] for e in tree)
    print(f"emergent spanning tree: {len(tree)} edges, total weight {weight}")
    lvls = merge_levels(h)
    print("separator merge levels:", sorted(l for l in lvls if l > 0))
    return 0


if __name__ == "__main__":
    sys.exit(main())
