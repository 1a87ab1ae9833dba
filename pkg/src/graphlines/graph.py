"""Bitmask graphs and their shortest-path metric.

A vertex set is a plain ``int`` whose bit ``i`` marks vertex ``i``.  A graph
stores one such mask per vertex (its neighbourhood), so set operations in the
hot loops are single integer operations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import Disconnected, InvalidEdge, OrderOutOfRange, VertexOutOfRange

MAX_ORDER = 64

VertexSet = int


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adj[i]`` has bit ``j`` set iff ``{i, j}`` is an edge.
    """

    n: int
    adj: tuple[int, ...]

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in iter_bits(self.adj[i]) if i < j]

    @property
    def num_edges(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in iter_bits(self.adj[v]):
                row |= 1 << perm[u]
            adj[perm[v]] = row
        return Graph(self.n, tuple(adj))

    def induced(self, mask: int) -> Graph:
        """Induced subgraph on ``mask``, vertices renumbered in increasing order."""
        verts = to_list(mask)
        index = {v: i for i, v in enumerate(verts)}
        adj = []
        for v in verts:
            adj.append(to_mask(index[u] for u in iter_bits(self.adj[v] & mask)))
        return Graph(len(verts), tuple(adj))

    def is_connected(self) -> bool:
        return reach(self.adj, 0) == self.full


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 2 <= n <= MAX_ORDER:
        raise OrderOutOfRange(f"order must lie in [2, {MAX_ORDER}], got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise InvalidEdge(f"loop at vertex {u}")
        if adj[u] >> v & 1:
            raise InvalidEdge(f"duplicate edge ({u}, {v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def reach(adj: Sequence[int], start: int, allowed: int = -1) -> int:
    """Mask of vertices reachable from ``start`` inside ``allowed``."""
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def is_connected_adj(adj: Sequence[int], n: int) -> bool:
    return reach(adj, 0) == (1 << n) - 1


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs shortest path distances of a connected graph.

    ``layers[x][k]`` is the mask of vertices at distance exactly ``k`` from
    ``x``; ``layers[x][0]`` is ``x`` itself.
    """

    n: int
    dist: tuple[tuple[int, ...], ...]
    layers: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def diameter(self) -> int:
        return max(len(row) for row in self.layers) - 1

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.dist[i][j]

    def layer(self, x: int, i: int) -> int:
        row = self.layers[x]
        return row[i] if i < len(row) else 0

    def adjacency(self) -> tuple[int, ...]:
        return tuple(self.layer(x, 1) for x in range(self.n))

    def graph(self) -> Graph:
        return Graph(self.n, self.adjacency())


def bfs_layers(adj: Sequence[int], n: int, x: int) -> tuple[int, ...] | None:
    """Distance layers from ``x``; ``None`` if some vertex is unreachable."""
    full = (1 << n) - 1
    seen = frontier = 1 << x
    out = [frontier]
    while seen != full:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        if not frontier:
            return None
        seen |= frontier
        out.append(frontier)
    return tuple(out)


def distances(g: Graph) -> DistanceMatrix:
    n = g.n
    layers = []
    for x in range(n):
        lay = bfs_layers(g.adj, n, x)
        if lay is None:
            raise Disconnected(f"vertex {x} cannot reach every vertex")
        layers.append(lay)
    return distances_from_layers(n, layers)


def distances_from_layers(n: int, layers: Sequence[tuple[int, ...]]) -> DistanceMatrix:
    dist = [[0] * n for _ in range(n)]
    for x, lay in enumerate(layers):
        row = dist[x]
        for k, m in enumerate(lay):
            for v in iter_bits(m):
                row[v] = k
    return DistanceMatrix(n, tuple(map(tuple, dist)), tuple(layers))


def diameter(d: DistanceMatrix) -> int:
    return d.diameter


def neighborhood(d: DistanceMatrix, x: int, i: int) -> VertexSet:
    """Vertices at distance exactly ``i`` from ``x``."""
    if not 0 <= x < d.n:
        raise VertexOutOfRange(f"vertex {x} not in graph of order {d.n}")
    if i < 1:
        raise ValueError("distance index must be >= 1")
    return d.layer(x, i)


def bridges(g: Graph) -> list[tuple[int, int]]:
    """Bridges of a connected graph via iterative low-link DFS."""
    if not g.is_connected():
        raise Disconnected("bridges are only defined here for connected graphs")
    n = g.n
    disc = [-1] * n
    low = [0] * n
    found = []
    timer = 0
    disc[0] = low[0] = timer
    stack = [(0, -1, iter(iter_bits(g.adj[0])))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for u in it:
            if u == parent:
                continue
            if disc[u] == -1:
                timer += 1
                disc[u] = low[u] = timer
                stack.append((u, v, iter(iter_bits(g.adj[u]))))
                advanced = True
                break
            low[v] = min(low[v], disc[u])
        if advanced:
            continue
        stack.pop()
        if parent >= 0:
            low[parent] = min(low[parent], low[v])
            if low[v] > disc[parent]:
                found.append((min(parent, v), max(parent, v)))
    return sorted(found)


def bridge_count(g: Graph) -> int:
    return len(bridges(g))
