"""Graph surgeries: neighbourhood edge clearing, clique contraction, and
the point-attaching compositions (disjoint union, chain, bouquet).

All operations are pure: they take immutable graphs and return fresh ones.
Compositions relabel into a dense 0..n-1 range and always report the
per-part relabelling maps, so callers can locate attachment vertices in
the result.  An identified vertex keeps the smallest index it received
while parts are placed left to right.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .graph import Graph


@dataclass(frozen=True)
class CompositionResult:
    """A composed graph plus the bookkeeping needed to trace vertices.

    ``vertex_maps[i][v]`` is the composed index of vertex ``v`` of part i;
    ``merged`` lists the composed indices created by identification, in
    attachment order (empty for a disjoint union).
    """

    graph: Graph
    vertex_maps: Tuple[Tuple[int, ...], ...]
    merged: Tuple[int, ...]


def odot(g: Graph, v: int) -> Graph:
    """Remove every edge joining two neighbours of ``v``.

    The vertex set is unchanged and all edges at ``v`` survive, so a
    pendant ``v`` returns a graph equal to ``g``.
    """
    g._check_vertex(v)
    nv = g.adj[v]
    kept = [
        (a, b)
        for a, b in g.edges()
        if not ((nv >> a) & 1 and (nv >> b) & 1)
    ]
    return Graph(g.n, kept)


def contract_clique(g: Graph, v: int) -> Graph:
    """Delete ``v`` and place a clique on its former open neighbourhood.

    Remaining vertices are compacted order-preservingly: w maps to w when
    w < v and to w-1 otherwise.  On a pendant (or isolated) ``v`` this
    degenerates to plain vertex deletion.
    """
    g._check_vertex(v)

    def relabel(w: int) -> int:
        return w if w < v else w - 1

    edges = [(relabel(a), relabel(b)) for a, b in g.edges() if v not in (a, b)]
    nbrs = [relabel(u) for u in g.neighbors(v)]
    edges += [(a, b) for i, a in enumerate(nbrs) for b in nbrs[i + 1 :]]
    return Graph(g.n - 1, edges)


def disjoint_union(g: Graph, h: Graph) -> CompositionResult:
    """Place ``g`` and ``h`` side by side with no edges between them."""
    map_g = tuple(range(g.n))
    map_h = tuple(range(g.n, g.n + h.n))
    edges = g.edges() + [(g.n + a, g.n + b) for a, b in h.edges()]
    return CompositionResult(Graph(g.n + h.n, edges), (map_g, map_h), ())


def _check_attach(part_index: int, g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise IndexError(
            f"attach vertex {v} out of range for part {part_index} (n={g.n})"
        )


def chain(parts: Sequence[Tuple[Graph, int, int]]) -> CompositionResult:
    """Chain the parts by identifying ``y`` of each part with ``x`` of the next.

    Each part is a (graph, x, y) triple; x and y may coincide within a
    part.  The first part keeps its own labels, later parts get fresh
    indices in ascending original order.  A single part comes back
    unchanged.
    """
    if not parts:
        raise ValueError("chain needs at least one part")
    for i, (g, x, y) in enumerate(parts):
        _check_attach(i, g, x)
        _check_attach(i, g, y)

    maps: List[Tuple[int, ...]] = []
    edges: List[Tuple[int, int]] = []
    merged: List[int] = []
    next_free = 0
    for i, (g, x, y) in enumerate(parts):
        mp = [-1] * g.n
        if i > 0:
            mp[x] = maps[i - 1][parts[i - 1][2]]
            merged.append(mp[x])
        for v in range(g.n):
            if mp[v] < 0:
                mp[v] = next_free
                next_free += 1
        maps.append(tuple(mp))
        edges += [(mp[a], mp[b]) for a, b in g.edges()]
    return CompositionResult(Graph(next_free, edges), tuple(maps), tuple(merged))


def bouquet(parts: Sequence[Tuple[Graph, int]]) -> CompositionResult:
    """Identify the chosen vertex of every part into one shared vertex.

    Each part is a (graph, x) pair; the shared vertex keeps the index the
    first part's x received, and ``merged`` holds exactly that index.
    A bouquet of two parts coincides with the chain of those two parts.
    """
    if not parts:
        raise ValueError("bouquet needs at least one part")
    for i, (g, x) in enumerate(parts):
        _check_attach(i, g, x)

    maps: List[Tuple[int, ...]] = []
    edges: List[Tuple[int, int]] = []
    next_free = 0
    hub = -1
    for i, (g, x) in enumerate(parts):
        mp = [-1] * g.n
        if i > 0:
            mp[x] = hub
        for v in range(g.n):
            if mp[v] < 0:
                mp[v] = next_free
                next_free += 1
        if i == 0:
            hub = mp[x]
        maps.append(tuple(mp))
        edges += [(mp[a], mp[b]) for a, b in g.edges()]
    return CompositionResult(Graph(next_free, edges), tuple(maps), (hub,))
