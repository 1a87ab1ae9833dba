"""Canonical labelling by partition refinement and individualisation.

The search tree follows the usual individualisation-refinement scheme:
refine the ordered partition to an equitable one, split the first smallest
non-singleton cell by individualising each of its vertices in turn, and
recurse until the partition is discrete.  Every discrete leaf yields a
relabelled adjacency certificate; the canonical form is the lexicographically
largest certificate over all leaves.

Automorphisms are harvested whenever a leaf reproduces the certificate of the
first or the best leaf.  They are used to skip sibling branches in the same
orbit of the current pointwise stabiliser, and to jump back to the common
ancestor of the two equivalent leaves.  The generators collected this way
generate the full automorphism group.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, iter_bits

_POP16 = bytes(bin(i).count("1") for i in range(1 << 16))


def _pop(x: int) -> int:
    if x < 65536:
        return _POP16[x]
    return bin(x).count("1")


def refine(adj: Sequence[int], cells: list[int], splitters: list[int]) -> list[int]:
    """Refine ``cells`` (ordered list of disjoint masks) to an equitable partition.

    Cells are split by the number of neighbours each vertex has in a splitter
    cell; fragments keep the position of the parent cell and are ordered by
    increasing count.  The result depends only on the input ordering, not on
    vertex labels.
    """
    cells = list(cells)
    splitters = list(splitters)
    n_cells = len(cells)
    total = sum(_pop(c) for c in cells)
    while splitters and n_cells < total:
        w = splitters.pop(0)
        out = []
        for c in cells:
            if not c & (c - 1):
                out.append(c)
                continue
            groups: dict[int, int] = {}
            m = c
            while m:
                low = m & -m
                v = low.bit_length() - 1
                m ^= low
                k = _pop(adj[v] & w)
                groups[k] = groups.get(k, 0) | low
            if len(groups) == 1:
                out.append(c)
                continue
            pieces = [groups[k] for k in sorted(groups)]
            out.extend(pieces)
            n_cells += len(pieces) - 1
            try:
                i = splitters.index(c)
            except ValueError:
                splitters.extend(pieces)
            else:
                splitters[i:i + 1] = pieces
        cells = out
    return cells


class _Search:
    def __init__(self, adj: Sequence[int], n: int):
        self.adj = adj
        self.n = n
        self.gens: list[tuple[int, ...]] = []
        self.first_path: list[int] | None = None
        self.first_lab: list[int] | None = None
        self.first_cert: tuple[int, ...] | None = None
        self.best_path: list[int] | None = None
        self.best_lab: list[int] | None = None
        self.best_cert: tuple[int, ...] | None = None

    def certificate(self, lab: list[int]) -> tuple[int, ...]:
        pos = [0] * self.n
        for i, v in enumerate(lab):
            pos[v] = i
        adj = self.adj
        rows = []
        for v in lab:
            r = 0
            m = adj[v]
            while m:
                low = m & -m
                r |= 1 << pos[low.bit_length() - 1]
                m ^= low
            rows.append(r)
        return tuple(rows)

    def leaf(self, cells: list[int], path: list[int]) -> int | None:
        lab = [c.bit_length() - 1 for c in cells]
        cert = self.certificate(lab)
        if self.first_cert is None:
            self.first_path = self.best_path = list(path)
            self.first_lab = self.best_lab = lab
            self.first_cert = self.best_cert = cert
            return None
        if cert == self.first_cert:
            return self._automorphism(self.first_lab, lab, self.first_path, path)
        if cert == self.best_cert:
            return self._automorphism(self.best_lab, lab, self.best_path, path)
        if cert > self.best_cert:
            self.best_cert = cert
            self.best_lab = lab
            self.best_path = list(path)
        return None

    def _automorphism(self, lab_a, lab_b, path_a, path_b) -> int:
        perm = [0] * self.n
        for a, b in zip(lab_a, lab_b):
            perm[a] = b
        self.gens.append(tuple(perm))
        j = 0
        for a, b in zip(path_a, path_b):
            if a != b:
                break
            j += 1
        return j

    def _stabiliser_orbit_root(self, path: list[int]):
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.gens:
            if all(g[p] == p for p in path):
                for a in range(self.n):
                    ra, rb = find(a), find(g[a])
                    if ra != rb:
                        parent[max(ra, rb)] = min(ra, rb)
        return find

    def visit(self, cells: list[int], path: list[int]) -> int | None:
        if len(cells) == self.n:
            return self.leaf(cells, path)
        depth = len(path)
        idx = -1
        size = self.n + 1
        for i, c in enumerate(cells):
            if c & (c - 1):
                s = _pop(c)
                if s < size:
                    idx, size = i, s
        target = cells[idx]
        explored: list[int] = []
        n_gens = -1
        find = None
        for v in iter_bits(target):
            if explored:
                if len(self.gens) != n_gens:
                    n_gens = len(self.gens)
                    find = self._stabiliser_orbit_root(path)
                rv = find(v)
                if any(find(u) == rv for u in explored):
                    continue
            explored.append(v)
            bit = 1 << v
            child = cells[:idx] + [bit, target ^ bit] + cells[idx + 1:]
            child = refine(self.adj, child, [bit])
            path.append(v)
            r = self.visit(child, path)
            path.pop()
            if r is not None and r < depth:
                return r
        return None


@dataclass(frozen=True)
class CanonicalLabeling:
    """Result of a canonical labelling run.

    ``lab[i]`` is the original vertex placed at canonical position ``i``;
    ``certificate`` is the relabelled adjacency (row masks) in that order.
    """

    n: int
    lab: tuple[int, ...]
    certificate: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]

    @property
    def position(self) -> list[int]:
        pos = [0] * self.n
        for i, v in enumerate(self.lab):
            pos[v] = i
        return pos

    def orbits(self) -> list[int]:
        """Orbit representative (smallest vertex) for every vertex."""
        return orbit_roots(self.n, self.generators)


def orbit_roots(n: int, generators: Sequence[Sequence[int]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in generators:
        for a in range(n):
            ra, rb = find(a), find(g[a])
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    return [find(v) for v in range(n)]


def canonical_labeling_adj(
    adj: Sequence[int], n: int, cells: list[int] | None = None
) -> CanonicalLabeling:
    """Canonical labelling of the graph given by adjacency masks.

    ``cells`` is an optional ordered initial colouring; isomorphisms are then
    only required to preserve it.
    """
    if cells is None:
        cells = [(1 << n) - 1]
    search = _Search(adj, n)
    search.visit(refine(adj, cells, list(cells)), [])
    return CanonicalLabeling(
        n, tuple(search.best_lab), search.best_cert, tuple(search.gens)
    )


def canonical_labeling(g: Graph) -> CanonicalLabeling:
    return canonical_labeling_adj(g.adj, g.n)


def canonical_graph(g: Graph) -> Graph:
    return Graph(g.n, canonical_labeling(g).certificate)


def canonical_form(g: Graph) -> bytes:
    """Byte certificate equal for two graphs exactly when they are isomorphic."""
    from .graph6 import to_graph6

    return to_graph6(canonical_graph(g)).encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    return canonical_labeling(g).certificate == canonical_labeling(h).certificate


def automorphism_generators(g: Graph) -> tuple[tuple[int, ...], ...]:
    return canonical_labeling(g).generators
