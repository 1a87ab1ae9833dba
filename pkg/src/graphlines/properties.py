"""Per-graph property suites run across enumerated corpora.

Each suite takes a distance matrix and its line table and returns ``None`` when
every assertion holds, or a short description of the first counterexample.
Suites in :data:`DIAMETER3_SUITES` presuppose diameter 3; the bridge
inequality suite applies to any connected graph.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable

from .graph import DistanceMatrix, iter_bits, popcount
from .lines import LineTable
from .structure import (
    case1_profile,
    case2_profile,
    check_case2_partition,
    ClaimReport,
    set_R,
    verify_case1_claims,
    verify_case2_claims,
)

Suite = Callable[[DistanceMatrix, LineTable], "str | None"]


def check_line_symmetry(d: DistanceMatrix, t: LineTable) -> str | None:
    """Direct recomputation of ``yx`` agrees with ``xy`` and with the brute-force definition."""
    dist = d.dist
    n = d.n
    for x, y in combinations(range(n), 2):
        m = (1 << x) | (1 << y)
        for z in range(n):
            if z in (x, y):
                continue
            if (dist[z][y] == dist[z][x] + dist[x][y]
                    or dist[x][y] == dist[x][z] + dist[z][y]
                    or dist[x][z] == dist[x][y] + dist[y][z]):
                m |= 1 << z
        if t.mask[x][y] != m or t.mask[y][x] != m:
            return f"line({x},{y}) mismatch"
    return None


def check_betweenness_membership(d: DistanceMatrix, t: LineTable) -> str | None:
    """``[xyz]`` puts each of the three points on the line of the other two."""
    dist = d.dist
    n = d.n
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if len({x, y, z}) < 3 or dist[x][z] != dist[x][y] + dist[y][z]:
                    continue
                if not (t.mask[y][z] >> x & 1 and t.mask[x][z] >> y & 1 and t.mask[x][y] >> z & 1):
                    return f"[{x}{y}{z}] without line membership"
    return None


def check_far_pair_lines(d: DistanceMatrix, t: LineTable) -> str | None:
    """A pair at distance 3 spans exactly itself plus the vertices between them."""
    dist = d.dist
    n = d.n
    for x, y in combinations(range(n), 2):
        if dist[x][y] != 3:
            continue
        inside = (1 << x) | (1 << y)
        for z in range(n):
            if z not in (x, y) and dist[x][z] + dist[z][y] == 3:
                inside |= 1 << z
        if t.mask[x][y] != inside:
            return f"line({x},{y}) is not the interval"
    return None


def check_layer_lines(d: DistanceMatrix, t: LineTable) -> str | None:
    """Lines from ``x`` to its distance-2 (or 3) layer meet that layer only in the far end."""
    for x in range(d.n):
        for i in (2, 3):
            layer = d.layer(x, i)
            for y in iter_bits(layer):
                if t.mask[x][y] & layer != 1 << y:
                    return f"x={x} i={i} y={y}"
            if len(t.family_at(x, i)) != popcount(layer):
                return f"|family| != |layer| at x={x} i={i}"
    return None


def check_equidistant_exclusion(d: DistanceMatrix, t: LineTable) -> str | None:
    """A vertex at equal distance 2 or 3 from ``x`` and ``y`` is off their line."""
    dist = d.dist
    n = d.n
    for x, y in combinations(range(n), 2):
        m = t.mask[x][y]
        for z in range(n):
            if z in (x, y):
                continue
            if dist[z][x] == dist[z][y] and dist[z][x] in (2, 3) and m >> z & 1:
                return f"z={z} on line({x},{y})"
    return None


def check_clique_independent(d: DistanceMatrix, t: LineTable) -> str | None:
    """Within a complete or independent set, a line picks up only its generators.

    Exhaustive over every vertex subset of size >= 3 that is complete or
    independent (subsets of size 2 are trivial).
    """
    n = d.n
    adj = d.adjacency()
    for size in range(3, n + 1):
        for subset in combinations(range(n), size):
            s = 0
            for v in subset:
                s |= 1 << v
            complete = all(adj[v] & s == s ^ (1 << v) for v in subset)
            independent = all(adj[v] & s == 0 for v in subset)
            if not (complete or independent):
                continue
            for x, y in combinations(subset, 2):
                if t.mask[x][y] & s != (1 << x) | (1 << y):
                    return f"S={subset} x={x} y={y}"
    return None


def check_family_bound(d: DistanceMatrix, t: LineTable) -> str | None:
    """With at least two lines through ``x`` some line misses ``x``; the corollary bound on small graphs."""
    n = d.n
    total = t.count
    for x in range(n):
        k = len(t.family(x))
        if k >= 2 and total < k + 1:
            return f"x={x}: {total} lines but {k} through x"
        if n >= 3 and total < n and not k < n - 1:
            return f"x={x}: |family|={k} while lines={total} < n"
    return None


def check_case1_claims(d: DistanceMatrix, t: LineTable) -> str | None:
    for x in range(d.n):
        prof = case1_profile(d, x, t)
        for w, v in prof.f.items():
            if not d.layer(w, 1) >> v & 1:
                return f"x={x}: f({w})={v} not adjacent"
        if prof.A1 != prof.A1_via_far_family:
            return f"x={x}: two descriptions of A1 differ"
        if not prof.in_R:
            continue
        rep = verify_case1_claims(d, x, t)
        if not rep.ok:
            return f"x={x}: {rep.failures()}"
    return None


def check_case2_partition_all(d: DistanceMatrix, t: LineTable) -> str | None:
    for x in range(d.n):
        for w in iter_bits(d.layer(x, 3)):
            rep = ClaimReport(f"x={x} w={w}")
            check_case2_partition(d, case2_profile(d, x, w, t), rep)
            if not rep.ok:
                return f"x={x} w={w}: {rep.failures()}"
    return None


def check_case2_claims(d: DistanceMatrix, t: LineTable) -> str | None:
    """Distance-3 pair claims; vacuous when some vertex has a coincidence."""
    if set_R(d, t):
        return None
    for x in range(d.n):
        for w in iter_bits(d.layer(x, 3)):
            rep = verify_case2_claims(d, x, w, t)
            if not rep.ok:
                return f"x={x} w={w}: {rep.failures()}"
    return None


LINE_SUITES: dict[str, Suite] = {
    "line-definition": check_line_symmetry,
    "betweenness-membership": check_betweenness_membership,
    "far-pair-lines": check_far_pair_lines,
    "layer-lines": check_layer_lines,
    "equidistant-exclusion": check_equidistant_exclusion,
    "clique-independent": check_clique_independent,
    "family-bound": check_family_bound,
}

STRUCTURE_SUITES: dict[str, Suite] = {
    "case1-claims": check_case1_claims,
    "case2-partition": check_case2_partition_all,
    "case2-claims": check_case2_claims,
}

DIAMETER3_SUITES: dict[str, Suite] = {**LINE_SUITES, **STRUCTURE_SUITES}

# applies to every connected graph; violations are logged, never fatal
BRIDGE_SUITE = "bridge-inequality"

ALL_SUITES = tuple(DIAMETER3_SUITES) + (BRIDGE_SUITE,)

GROUPS = {
    "lemmas": tuple(LINE_SUITES),
    "structure": tuple(STRUCTURE_SUITES),
    "all": ALL_SUITES,
}


def resolve_suites(which) -> tuple[str, ...]:
    """Expand group names (``lemmas``, ``structure``, ``all``) and validate suite names."""
    if which is None:
        return ()
    if isinstance(which, str):
        which = [w for w in which.split(",") if w]
    out: list[str] = []
    for w in which:
        for name in GROUPS.get(w, (w,)):
            if name not in ALL_SUITES:
                raise KeyError(f"unknown property suite {name!r}")
            if name not in out:
                out.append(name)
    return tuple(out)
