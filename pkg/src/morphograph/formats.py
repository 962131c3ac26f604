"""File formats: .wgr text graphs, PGM rasters, JSON and DOT exports.

The .wgr format is line based: ``node <id> [<weight>]``, ``edge <u> <v>
[<weight>]`` and ``#`` comments.  Ids are 0-based and dense; a missing
weight column means the carrier is unweighted, and mixing weighted with
unweighted lines on one carrier is an error.
"""

from __future__ import annotations

from typing import Optional

from .errors import MalformedImage, MalformedInput
from .graphs import Labeling, UNSET, ZONE, WeightedGraph
from .weights import W_MAX


def _level(token: str, lineno: int) -> int:
    value = int(token)
    if not 0 <= value <= W_MAX:
        raise MalformedInput(f"line {lineno}: weight {value} outside [0, {W_MAX}]")
    return value


def parse_wgr(text: str) -> WeightedGraph:
    nodes: dict[int, Optional[int]] = {}
    edges: list[tuple[int, int]] = []
    edge_w: list[Optional[int]] = []
    dummies: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            if raw.strip().startswith("# dummy"):
                parts = raw.strip().split()
                if len(parts) == 3 and parts[2].isdigit():
                    dummies.add(int(parts[2]))
            continue
        parts = line.split()
        try:
            if parts[0] == "node" and len(parts) in (2, 3):
                nid = int(parts[1])
                if nid in nodes:
                    raise MalformedInput(f"line {lineno}: duplicate node {nid}")
                nodes[nid] = _level(parts[2], lineno) if len(parts) == 3 else None
            elif parts[0] == "edge" and len(parts) in (3, 4):
                edges.append((int(parts[1]), int(parts[2])))
                edge_w.append(_level(parts[3], lineno) if len(parts) == 4 else None)
            else:
                raise ValueError
        except MalformedInput:
            raise
        except ValueError:
            raise MalformedInput(f"line {lineno}: cannot parse {raw!r}") from None
    if sorted(nodes) != list(range(len(nodes))):
        raise MalformedInput("node ids must be dense 0..N-1")
    node_vals = [nodes[i] for i in range(len(nodes))]
    weighted_nodes = [v is not None for v in node_vals]
    if any(weighted_nodes) and not all(weighted_nodes):
        raise MalformedInput("either all nodes carry a weight or none")
    weighted_edges = [v is not None for v in edge_w]
    if any(weighted_edges) and not all(weighted_edges):
        raise MalformedInput("either all edges carry a weight or none")
    try:
        return WeightedGraph(
            len(nodes),
            tuple(edges),
            tuple(node_vals) if node_vals and node_vals[0] is not None else None,
            tuple(edge_w) if edge_w and edge_w[0] is not None else None,
            frozenset(dummies),
        )
    except ValueError as exc:
        raise MalformedInput(str(exc)) from None


def write_wgr(g: WeightedGraph) -> str:
    lines = []
    for i in range(g.num_nodes):
        if g.node_weights is not None:
            lines.append(f"node {i} {g.node_weights[i]}")
        else:
            lines.append(f"node {i}")
    for i in sorted(g.dummies):
        lines.append(f"# dummy {i}")
    for eid, (u, v) in enumerate(g.edges):
        if g.edge_weights is not None:
            lines.append(f"edge {u} {v} {g.edge_weights[eid]}")
        else:
            lines.append(f"edge {u} {v}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# PGM rasters
# ---------------------------------------------------------------------------


def parse_pgm(data: bytes) -> tuple[int, int, int, list[int]]:
    """Parse P2/P5; returns (width, height, maxval, row-major pixels)."""
    pos = 0

    def token() -> bytes:
        nonlocal pos
        while pos < len(data):
            if data[pos : pos + 1].isspace():
                pos += 1
            elif data[pos : pos + 1] == b"#":
                while pos < len(data) and data[pos : pos + 1] != b"\n":
                    pos += 1
            else:
                break
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace():
            pos += 1
        if start == pos:
            raise MalformedImage("unexpected end of PGM header")
        return data[start:pos]

    magic = token()
    if magic not in (b"P2", b"P5"):
        raise MalformedImage(f"not a PGM: magic {magic!r}")
    try:
        width, height, maxval = int(token()), int(token()), int(token())
    except (ValueError, MalformedImage):
        raise MalformedImage("bad PGM header") from None
    if width <= 0 or height <= 0 or maxval <= 0:
        raise MalformedImage("bad PGM dimensions")
    count = width * height
    if magic == b"P2":
        try:
            pixels = [int(token()) for _ in range(count)]
        except MalformedImage:
            raise MalformedImage("truncated P2 pixel data") from None
    else:
        pos += 1  # single whitespace after maxval
        per = 2 if maxval > 255 else 1
        raw = data[pos : pos + count * per]
        if len(raw) != count * per:
            raise MalformedImage("truncated P5 pixel data")
        if per == 1:
            pixels = list(raw)
        else:
            pixels = [
                (raw[2 * i] << 8) | raw[2 * i + 1] for i in range(count)
            ]
    if any(p < 0 or p > maxval for p in pixels):
        raise MalformedImage("pixel outside [0, maxval]")
    return width, height, maxval, pixels


def write_pgm(width: int, height: int, pixels: list[int], maxval: int = 255) -> bytes:
    header = f"P5 {width} {height} {maxval}\n".encode()
    return header + bytes(min(p, maxval) for p in pixels)


def image_to_graph(data: bytes, connectivity: int = 4) -> WeightedGraph:
    """Pixel graph: one node per pixel (row-major), gray level as weight."""
    if connectivity not in (4, 8):
        raise MalformedImage(f"connectivity must be 4 or 8, got {connectivity}")
    width, height, _, pixels = parse_pgm(data)
    edges = []
    for y in range(height):
        for x in range(width):
            i = y * width + x
            if x + 1 < width:
                edges.append((i, i + 1))
            if y + 1 < height:
                edges.append((i, i + width))
            if connectivity == 8 and y + 1 < height:
                if x + 1 < width:
                    edges.append((i, i + width + 1))
                if x > 0:
                    edges.append((i, i + width - 1))
    return WeightedGraph(width * height, tuple(edges), tuple(pixels), None)


# ---------------------------------------------------------------------------
# exports
# ---------------------------------------------------------------------------


def labels_json(g: WeightedGraph, labeling: Labeling, minima: list[frozenset[int]]) -> dict:
    """Label export over real (non-dummy) nodes: Z nodes carry 0."""
    real = [i for i in range(g.num_nodes) if i not in g.dummies]
    labels = [
        0 if labeling.values[i] in (ZONE, UNSET) else labeling.values[i]
        for i in real
    ]
    zones = [i for i in real if labeling.values[i] == ZONE]
    return {
        "labels": labels,
        "zones": zones,
        "minima": [sorted(m - g.dummies) for m in minima],
    }


def zone_components(g: WeightedGraph, labeling: Labeling) -> list[list[int]]:
    """Connected components of the ZONE set, for consumers needing geometry."""
    zone = labeling.zone_nodes()
    keep = [
        eid for eid, (u, v) in enumerate(g.edges) if u in zone and v in zone
    ]
    from .graphs import connected_components

    comp = connected_components(g.partial(keep))
    groups: dict[int, list[int]] = {}
    for i in sorted(zone):
        groups.setdefault(comp.values[i], []).append(i)
    return [groups[k] for k in sorted(groups, key=lambda k: groups[k][0])]


def to_dot(g: WeightedGraph, labeling: Optional[Labeling] = None) -> str:
    lines = ["graph {"]
    for i in range(g.num_nodes):
        attrs = []
        if g.node_weights is not None:
            attrs.append(f'label="{i}:{g.node_weights[i]}"')
        if labeling is not None and labeling.values[i] != UNSET:
            lab = labeling.values[i]
            attrs.append(f'group="{ "Z" if lab == ZONE else lab }"')
        if i in g.dummies:
            attrs.append("style=dashed")
        lines.append(f"  {i} [{', '.join(attrs)}];" if attrs else f"  {i};")
    for eid, (u, v) in enumerate(g.edges):
        if g.edge_weights is not None:
            lines.append(f'  {u} -- {v} [label="{g.edge_weights[eid]}"];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def labels_to_pgm(width: int, height: int, labeling: Labeling) -> tuple[bytes, dict]:
    """Label map with values mod 255 (0 stays for zones/unset) plus a legend."""
    pixels = []
    legend: dict[str, int] = {}
    for i in range(width * height):
        lab = labeling.values[i]
        gray = 0 if lab in (ZONE, UNSET) else 1 + (lab - 1) % 254
        pixels.append(gray)
        legend["Z" if lab == ZONE else str(lab)] = gray
    return write_pgm(width, height, pixels), {"gray": legend}
