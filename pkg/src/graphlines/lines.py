"""Metric betweenness and lines of graph metrics.

For distinct vertices ``x, y`` the line ``xy`` consists of ``x``, ``y`` and
every ``z`` such that one of the three points lies between the other two,
betweenness being equality in the triangle inequality.  All membership tests
are done on distance layers, so a line costs ``O(diameter)`` mask operations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import VertexOutOfRange, VerticesNotDistinct
from .graph import DistanceMatrix, Graph, bridge_count, distances, iter_bits, to_list

LineSet = frozenset  # of vertex masks


@dataclass(frozen=True)
class Line:
    """A line as a vertex mask; ``pair`` is diagnostic and ignored by equality."""

    members: int
    pair: tuple[int, int] | None = field(default=None, compare=False)

    def vertices(self) -> list[int]:
        return to_list(self.members)

    def __contains__(self, v: int) -> bool:
        return bool(self.members >> v & 1)

    def __len__(self) -> int:
        return bin(self.members).count("1")


def _check_vertices(d: DistanceMatrix, *vs: int) -> None:
    for v in vs:
        if not 0 <= v < d.n:
            raise VertexOutOfRange(f"vertex {v} not in graph of order {d.n}")
    if len(set(vs)) != len(vs):
        raise VerticesNotDistinct(f"vertices {vs} are not pairwise distinct")


def between(d: DistanceMatrix, x: int, z: int, y: int) -> bool:
    """True iff ``z`` lies between ``x`` and ``y``: d(x,y) = d(x,z) + d(z,y)."""
    _check_vertices(d, x, z, y)
    return d.dist[x][y] == d.dist[x][z] + d.dist[z][y]


def line_mask_from_layers(lx: Sequence[int], ly: Sequence[int], x: int, y: int, dxy: int) -> int:
    m = (1 << x) | (1 << y)
    nx, ny = len(lx), len(ly)
    # z beyond x: d(z, y) = d(z, x) + d(x, y)
    for k in range(1, min(nx, ny - dxy)):
        m |= lx[k] & ly[k + dxy]
    # z beyond y
    for k in range(1, min(ny, nx - dxy)):
        m |= ly[k] & lx[k + dxy]
    # z strictly inside
    for k in range(1, dxy):
        m |= lx[k] & ly[dxy - k]
    return m


def line_mask(d: DistanceMatrix, x: int, y: int) -> int:
    return line_mask_from_layers(d.layers[x], d.layers[y], x, y, d.dist[x][y])


def line(d: DistanceMatrix, x: int, y: int) -> Line:
    _check_vertices(d, x, y)
    return Line(line_mask(d, x, y), (x, y))


class LineTable:
    """Every line of a connected graph, indexed by generating pair.

    ``mask[x][y]`` is the member mask of line ``xy`` (``0`` on the diagonal).
    """

    def __init__(self, d: DistanceMatrix):
        self.d = d
        n = d.n
        layers = d.layers
        dist = d.dist
        mask = [[0] * n for _ in range(n)]
        for x in range(n):
            lx = layers[x]
            row = dist[x]
            for y in range(x + 1, n):
                m = line_mask_from_layers(lx, layers[y], x, y, row[y])
                mask[x][y] = m
                mask[y][x] = m
        self.mask = mask
        self.lines: LineSet = frozenset(
            mask[x][y] for x in range(n) for y in range(x + 1, n)
        )

    @property
    def count(self) -> int:
        return len(self.lines)

    @property
    def has_universal(self) -> bool:
        return self.d.full in self.lines

    def family(self, x: int) -> LineSet:
        row = self.mask[x]
        return frozenset(row[y] for y in range(self.d.n) if y != x)

    def family_at(self, x: int, i: int) -> LineSet:
        row = self.mask[x]
        return frozenset(row[y] for y in iter_bits(self.d.layer(x, i)))


def count_lines(d: DistanceMatrix) -> int:
    """Number of distinct lines without materialising a full table."""
    n = d.n
    layers, dist = d.layers, d.dist
    seen = set()
    for x in range(n):
        lx = layers[x]
        row = dist[x]
        for y in range(x + 1, n):
            seen.add(line_mask_from_layers(lx, layers[y], x, y, row[y]))
    return len(seen)


def all_lines(d: DistanceMatrix) -> LineSet:
    return LineTable(d).lines


def num_lines(d: DistanceMatrix) -> int:
    return count_lines(d)


def has_universal_line(d: DistanceMatrix) -> bool:
    return d.full in all_lines(d)


def line_family(d: DistanceMatrix, x: int) -> LineSet:
    """Lines through ``x`` generated with every other vertex."""
    if not 0 <= x < d.n:
        raise VertexOutOfRange(f"vertex {x} not in graph of order {d.n}")
    return frozenset(line_mask(d, x, y) for y in range(d.n) if y != x)


def line_family_i(d: DistanceMatrix, x: int, i: int) -> LineSet:
    """Lines ``xy`` for ``y`` at distance exactly ``i`` from ``x``."""
    if not 0 <= x < d.n:
        raise VertexOutOfRange(f"vertex {x} not in graph of order {d.n}")
    return frozenset(line_mask(d, x, y) for y in iter_bits(d.layer(x, i)))


def satisfies_cc(d: DistanceMatrix) -> bool:
    """Universal line present, or at least as many lines as vertices."""
    table = LineTable(d)
    return table.has_universal or table.count >= d.n


def satisfies_bridge_inequality(g: Graph) -> bool:
    """Lines plus bridges is at least the order."""
    return count_lines(distances(g)) + bridge_count(g) >= g.n
