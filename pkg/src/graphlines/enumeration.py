"""Isomorph-free generation of connected graphs and the diameter-3 census.

Connected graphs are grown one vertex at a time by canonical augmentation.  A
child ``C`` of parent ``P`` (new vertex ``m`` joined to a non-empty set ``S``)
is kept only when

* ``S`` is the smallest member of its orbit under the automorphisms of ``P``;
* ``m`` lies in the canonical deletion orbit of ``C``: among non-cut vertices
  with the largest (degree, neighbour-degree-sum) invariant, the orbit of the
  vertex with the highest canonical position.

Deleting a non-cut vertex keeps the parent connected, so every level only
holds connected graphs and each isomorphism class is produced exactly once.

The census runs on shards: every connected graph of a small *frontier* order
is one shard, and the shard's descendants up to the target order are
independent of all other shards.  Shards are merged by addition and set
union, so the result does not depend on the number of workers.
"""

from __future__ import annotations

import logging
import os
import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .canon import _pop, canonical_form, canonical_labeling_adj
from .errors import CorruptCheckpoint, Disconnected, GraphLinesError, OrderOutOfRange, VersionMismatch
from .families import family_F
from .graph import Graph, bfs_layers, bridge_count, distances, distances_from_layers, reach
from .graph6 import from_graph6, to_graph6
from .lines import LineTable, count_lines, line_mask_from_layers
from .properties import BRIDGE_SUITE, DIAMETER3_SUITES, resolve_suites

log = logging.getLogger(__name__)

MAX_ENUM_ORDER = 12
DEFAULT_FRONTIER = 6
_MASK64 = (1 << 64) - 1


# ---------------------------------------------------------------------------
# generation


def _subset_reps(m: int, gens: Sequence[Sequence[int]]) -> Iterable[int]:
    """One non-empty subset of ``range(m)`` per orbit of the group generated by ``gens``."""
    size = 1 << m
    if not gens:
        return range(1, size)
    parent = list(range(size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        if all(g[v] == v for v in range(m)):
            continue
        bits = [1 << g[v] for v in range(m)]
        image = [0] * size
        for s in range(1, size):
            low = s & -s
            image[s] = image[s ^ low] | bits[low.bit_length() - 1]
            a, b = find(s), find(image[s])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [s for s in range(1, size) if find(s) == s]


def _non_cut(adj: Sequence[int], n: int, v: int) -> bool:
    rest = ((1 << n) - 1) ^ (1 << v)
    start = (rest & -rest).bit_length() - 1
    return reach(adj, start, rest) == rest


def _children(adj: Sequence[int], m: int, gens, need_gens: bool):
    """Accepted children of a connected parent on ``m`` vertices.

    Yields ``(child_adj, child_generators)``; generators are only computed
    when ``need_gens`` is set or the acceptance test needed a labelling.
    """
    n = m + 1
    new = 1 << m
    deg_p = [_pop(a) for a in adj]
    for s in _subset_reps(m, gens):
        child = [a | new if s >> v & 1 else a for v, a in enumerate(adj)]
        child.append(s)
        deg = [deg_p[v] + (s >> v & 1) for v in range(m)]
        deg.append(_pop(s))
        inv = []
        for v in range(n):
            t = 0
            x = child[v]
            while x:
                low = x & -x
                t += deg[low.bit_length() - 1]
                x ^= low
            inv.append(deg[v] << 12 | t)
        mine = inv[m]
        ties = []
        rejected = False
        for v in range(m):
            iv = inv[v]
            if iv > mine:
                if _non_cut(child, n, v):
                    rejected = True
                    break
            elif iv == mine:
                ties.append(v)
        if rejected:
            continue
        ties = [v for v in ties if _non_cut(child, n, v)]
        child_gens = None
        if ties:
            lab = canonical_labeling_adj(child, n)
            pos = lab.position
            orbit = lab.orbits()
            ties.append(m)
            chosen = max(ties, key=pos.__getitem__)
            if orbit[chosen] != orbit[m]:
                continue
            child_gens = lab.generators
        elif need_gens:
            child_gens = canonical_labeling_adj(child, n).generators
        yield child, child_gens


def _descend(adj: Sequence[int], m: int, gens, n: int) -> Iterator[list[int]]:
    if m == n:
        yield list(adj)
        return
    for child, child_gens in _children(adj, m, gens, m + 1 < n):
        yield from _descend(child, m + 1, child_gens, n)


_K2 = ([2, 1], ((1, 0),))


def frontier(order: int) -> list[tuple[list[int], tuple]]:
    """Connected graphs of ``order`` with automorphism generators, in generation order."""
    if order == 2:
        return [(list(_K2[0]), _K2[1])]
    out = []
    for adj in _descend(_K2[0], 2, _K2[1], order):
        out.append((adj, canonical_labeling_adj(adj, order).generators))
    return out


def _check_order(n: int, hi: int = MAX_ENUM_ORDER) -> None:
    if not 2 <= n <= hi:
        raise OrderOutOfRange(f"order must lie in [2, {hi}], got {n}")


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One representative of every isomorphism class of connected graphs on ``n`` vertices."""
    _check_order(n, 64)
    for adj in _descend(_K2[0], 2, _K2[1], n):
        yield Graph(n, tuple(adj))


def enumerate_naive(n: int) -> list[Graph]:
    """Brute-force oracle: all labelled graphs, connectivity filter, canonical dedup."""
    _check_order(n, 7)
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    seen: dict[tuple, Graph] = {}
    full = (1 << n) - 1
    for code in range(1 << len(pairs)):
        adj = [0] * n
        for k, (i, j) in enumerate(pairs):
            if code >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        if reach(adj, 0) != full:
            continue
        cert = canonical_labeling_adj(adj, n).certificate
        if cert not in seen:
            seen[cert] = Graph(n, tuple(adj))
    return list(seen.values())


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class ClassificationReport:
    graph6: str
    n: int
    diameter: int
    num_lines: int
    has_universal: bool
    bridge_count: int
    exceptional: bool
    f_match: str | None

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "diameter": self.diameter,
            "numLines": self.num_lines,
            "hasUniversal": self.has_universal,
            "bridgeCount": self.bridge_count,
            "exceptional": self.exceptional,
            "fMatch": self.f_match,
        }


_F_INDEX: dict[bytes, str] | None = None


def f_lookup(g: Graph) -> str | None:
    """Name of the exceptional-family member isomorphic to ``g``, if any."""
    global _F_INDEX
    if _F_INDEX is None:
        _F_INDEX = {canonical_form(m.graph): m.name for m in family_F()}
    if g.n not in (4, 5, 6, 8):
        return None
    return _F_INDEX.get(canonical_form(g))


def classify(g: Graph) -> ClassificationReport:
    if not g.is_connected():
        raise Disconnected("classification needs a connected graph")
    d = distances(g)
    t = LineTable(d)
    diam = d.diameter
    return ClassificationReport(
        graph6=to_graph6(g),
        n=g.n,
        diameter=diam,
        num_lines=t.count,
        has_universal=t.has_universal,
        bridge_count=bridge_count(g),
        exceptional=diam == 3 and t.count < g.n,
        f_match=f_lookup(g),
    )


# ---------------------------------------------------------------------------
# census


def _mix(key: int) -> int:
    """splitmix64 finaliser; spreads a graph key over 64 bits."""
    z = (key + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def graph_key(adj: Sequence[int], n: int) -> int:
    key = 0
    for i, a in enumerate(adj):
        key |= a << (n * i)
    return key


@dataclass
class SuiteTally:
    checked: int = 0
    failures: int = 0
    witnesses: list[str] = field(default_factory=list)

    KEEP = 20

    def fail(self, witness: str) -> None:
        self.failures += 1
        if len(self.witnesses) < self.KEEP:
            self.witnesses.append(witness)

    def merge(self, other: SuiteTally) -> None:
        self.checked += other.checked
        self.failures += other.failures
        room = self.KEEP - len(self.witnesses)
        self.witnesses.extend(other.witnesses[:max(room, 0)])


@dataclass
class ShardResult:
    index: int
    connected: int = 0
    diameter3: int = 0
    exceptional: list[str] = field(default_factory=list)
    violators: list[str] = field(default_factory=list)
    digest: int = 0
    suites: dict[str, SuiteTally] = field(default_factory=dict)


def _run_shard(args) -> ShardResult:
    index, adj, gens, m, n, suites = args
    res = ShardResult(index, suites={s: SuiteTally() for s in suites})
    d3_suites = [(s, DIAMETER3_SUITES[s]) for s in suites if s in DIAMETER3_SUITES]
    bridge = res.suites.get(BRIDGE_SUITE)
    full = (1 << n) - 1
    for g in _descend(adj, m, gens, n):
        res.connected += 1
        res.digest = (res.digest + _mix(graph_key(g, n))) & _MASK64
        layers = [bfs_layers(g, n, x) for x in range(n)]
        diam = max(len(lay) for lay in layers) - 1
        if diam != 3 and bridge is None:
            continue
        d = distances_from_layers(n, layers)
        if diam == 3:
            res.diameter3 += 1
            t = LineTable(d)
            ell, universal = t.count, t.has_universal
            if ell < n:
                res.exceptional.append(
                    to_graph6(Graph(n, canonical_labeling_adj(g, n).certificate))
                )
            if ell < n and not universal:
                res.violators.append(to_graph6(Graph(n, tuple(g))))
            for name, suite in d3_suites:
                tally = res.suites[name]
                tally.checked += 1
                msg = suite(d, t)
                if msg is not None:
                    tally.fail(f"{to_graph6(Graph(n, tuple(g)))} {msg}")
        else:
            ell = count_lines(d)
            universal = any(
                line_mask_from_layers(layers[x], layers[y], x, y, d.dist[x][y]) == full
                for x in range(n) for y in range(x + 1, n)
            )
        if bridge is not None and (universal or diam == 3):
            bridge.checked += 1
            graph = Graph(n, tuple(g))
            br = bridge_count(graph)
            if ell + br < n:
                bridge.fail(f"{to_graph6(graph)} diameter={diam} lines={ell} bridges={br}")
    res.exceptional.sort()
    return res


@dataclass
class CensusResult:
    order: int
    frontier_order: int
    shards: int
    suites: tuple[str, ...]
    cursor: int = 0
    connected: int = 0
    diameter3: int = 0
    exceptional: list[str] = field(default_factory=list)
    violators: list[str] = field(default_factory=list)
    digest: int = 0
    tallies: dict[str, SuiteTally] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def complete(self) -> bool:
        return self.cursor == self.shards

    def absorb(self, shard: ShardResult) -> None:
        self.connected += shard.connected
        self.diameter3 += shard.diameter3
        self.exceptional = sorted(self.exceptional + shard.exceptional)
        self.violators.extend(shard.violators)
        self.digest = (self.digest + shard.digest) & _MASK64
        for name, tally in shard.suites.items():
            self.tallies.setdefault(name, SuiteTally()).merge(tally)
        self.cursor += 1

    def exceptional_matches(self) -> list[tuple[str, str | None]]:
        return [(g6, f_lookup(from_graph6(g6))) for g6 in self.exceptional]


def _default_frontier(n: int) -> int:
    return min(n, DEFAULT_FRONTIER)


# ---------------------------------------------------------------------------
# checkpoints
#
# Text format, one "key value" per header line:
#   graphlines-census <version>
#   order 8
#   frontier 6
#   shards 112
#   suites lemmas-suite-a,suite-b        (may be empty)
#   cursor 56
#   connected ... / diameter3 ... / digest <hex>
#   violator <graph6>                    (repeated)
#   suite <name> <checked> <failures>
#   witness <name> <text>                (repeated)
#   end
# followed by one canonical graph6 line per exceptional graph.

CHECKPOINT_MAGIC = "graphlines-census"
CHECKPOINT_VERSION = 1


def checkpoint_save(path: str | os.PathLike, state: CensusResult) -> None:
    lines = [
        f"{CHECKPOINT_MAGIC} {CHECKPOINT_VERSION}",
        f"order {state.order}",
        f"frontier {state.frontier_order}",
        f"shards {state.shards}",
        f"suites {','.join(state.suites)}",
        f"cursor {state.cursor}",
        f"connected {state.connected}",
        f"diameter3 {state.diameter3}",
        f"digest {state.digest:016x}",
    ]
    lines += [f"violator {g6}" for g6 in state.violators]
    for name, tally in state.tallies.items():
        lines.append(f"suite {name} {tally.checked} {tally.failures}")
        lines += [f"witness {name} {w}" for w in tally.witnesses]
    lines.append("end")
    lines += state.exceptional
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text("\n".join(lines) + "\n", encoding="ascii")
    os.replace(tmp, path)


def checkpoint_resume(path: str | os.PathLike) -> CensusResult:
    try:
        text = Path(path).read_text(encoding="ascii")
    except UnicodeDecodeError as exc:
        raise CorruptCheckpoint(f"{path}: not ASCII text") from exc
    rows = text.splitlines()
    if not rows:
        raise CorruptCheckpoint(f"{path}: empty checkpoint")
    head = rows[0].split()
    if len(head) != 2 or head[0] != CHECKPOINT_MAGIC:
        raise CorruptCheckpoint(f"{path}: missing checkpoint header")
    if head[1] != str(CHECKPOINT_VERSION):
        raise VersionMismatch(f"{path}: version {head[1]}, expected {CHECKPOINT_VERSION}")
    fields: dict[str, str] = {}
    violators: list[str] = []
    tallies: dict[str, SuiteTally] = {}
    try:
        end = rows.index("end")
    except ValueError:
        raise CorruptCheckpoint(f"{path}: truncated header") from None
    try:
        for row in rows[1:end]:
            key, _, value = row.partition(" ")
            if key == "violator":
                violators.append(value)
            elif key == "suite":
                name, checked, failures = value.split()
                tallies[name] = SuiteTally(int(checked), int(failures))
            elif key == "witness":
                name, _, w = value.partition(" ")
                tallies[name].witnesses.append(w)
            else:
                fields[key] = value
        state = CensusResult(
            order=int(fields["order"]),
            frontier_order=int(fields["frontier"]),
            shards=int(fields["shards"]),
            suites=tuple(s for s in fields["suites"].split(",") if s),
            cursor=int(fields["cursor"]),
            connected=int(fields["connected"]),
            diameter3=int(fields["diameter3"]),
            digest=int(fields["digest"], 16),
            violators=violators,
            tallies=tallies,
        )
    except (KeyError, ValueError) as exc:
        raise CorruptCheckpoint(f"{path}: bad header field ({exc})") from exc
    state.exceptional = [r for r in rows[end + 1:] if r]
    for g6 in state.exceptional:
        try:
            from_graph6(g6)
        except GraphLinesError as exc:
            raise CorruptCheckpoint(f"{path}: bad exceptional entry {g6!r}") from exc
    if not 0 <= state.cursor <= state.shards:
        raise CorruptCheckpoint(f"{path}: cursor {state.cursor} outside [0, {state.shards}]")
    return state


# ---------------------------------------------------------------------------
# drivers


def shard_tasks(n: int, suites=(), frontier_order: int | None = None):
    f = _default_frontier(n) if frontier_order is None else frontier_order
    if not 2 <= f <= n:
        raise OrderOutOfRange(f"frontier order {f} must lie in [2, {n}]")
    suites = resolve_suites(suites)
    return f, [(i, adj, gens, f, n, suites) for i, (adj, gens) in enumerate(frontier(f))]


def run_shards(n: int, indices: Iterable[int], suites=(), frontier_order: int | None = None) -> list[ShardResult]:
    """Run an explicit subset of shards; useful for manual partitioning across machines."""
    _, tasks = shard_tasks(n, suites, frontier_order)
    return [_run_shard(tasks[i]) for i in indices]


def merge_shards(n: int, results: Iterable[ShardResult], suites=(), frontier_order: int | None = None) -> CensusResult:
    f, tasks = shard_tasks(n, suites, frontier_order)
    state = CensusResult(n, f, len(tasks), resolve_suites(suites))
    for r in sorted(results, key=lambda r: r.index):
        state.absorb(r)
    return state


def census(
    n: int,
    *,
    jobs: int = 1,
    suites=(),
    checkpoint: str | os.PathLike | None = None,
    frontier_order: int | None = None,
    stop_after: int | None = None,
) -> CensusResult:
    """Enumerate every connected graph of order ``n`` and tally the diameter-3 findings.

    With ``checkpoint`` set, progress is saved after each shard, and an
    existing checkpoint file is resumed.  ``stop_after`` halts after that many
    newly completed shards, leaving a partial result (an interruption).
    """
    _check_order(n)
    started = time.perf_counter()
    f, tasks = shard_tasks(n, suites, frontier_order)
    suites = tasks[0][5] if tasks else resolve_suites(suites)
    state = CensusResult(n, f, len(tasks), suites)
    if checkpoint is not None and Path(checkpoint).exists():
        state = checkpoint_resume(checkpoint)
        if (state.order, state.frontier_order, state.shards, state.suites) != (n, f, len(tasks), suites):
            raise CorruptCheckpoint(
                f"{checkpoint}: checkpoint is for order {state.order}, frontier "
                f"{state.frontier_order}, suites {state.suites}"
            )
        log.info("resuming order %d at shard %d/%d", n, state.cursor, state.shards)
    pending = tasks[state.cursor:]
    if stop_after is not None:
        pending = pending[:stop_after]

    def absorb(result: ShardResult) -> None:
        state.absorb(result)
        if checkpoint is not None:
            checkpoint_save(checkpoint, state)

    if jobs > 1 and len(pending) > 1:
        with Pool(jobs) as pool:
            for result in pool.imap(_run_shard, pending):
                absorb(result)
    else:
        for task in pending:
            absorb(_run_shard(task))
    state.elapsed = time.perf_counter() - started
    return state


def expected_exceptional(n: int) -> list[str]:
    """Names of exceptional-family members on ``n`` vertices."""
    return sorted(m.name for m in family_F() if m.graph.n == n)


@dataclass
class TheoremVerdict:
    order: int
    expected: list[str]
    found: list[tuple[str, str | None]]

    @property
    def passed(self) -> bool:
        names = sorted(name for _, name in self.found if name is not None)
        return len(names) == len(self.found) and names == self.expected


@dataclass
class CCVerdict:
    order: int
    diameter3: int
    violators: list[str]

    @property
    def passed(self) -> bool:
        return not self.violators


@dataclass
class PropertyVerdict:
    order: int
    tallies: dict[str, SuiteTally]

    @property
    def passed(self) -> bool:
        # bridge inequality violations are reported, never fatal
        return all(t.failures == 0 for name, t in self.tallies.items() if name != BRIDGE_SUITE)

    def first_counterexample(self) -> str | None:
        for name, t in self.tallies.items():
            if name != BRIDGE_SUITE and t.witnesses:
                return f"{name}: {t.witnesses[0]}"
        return None


def theorem_verdict(state: CensusResult) -> TheoremVerdict:
    return TheoremVerdict(state.order, expected_exceptional(state.order), state.exceptional_matches())


def cc_verdict(state: CensusResult) -> CCVerdict:
    return CCVerdict(state.order, state.diameter3, list(state.violators))


def property_verdict(state: CensusResult) -> PropertyVerdict:
    return PropertyVerdict(state.order, dict(state.tallies))


def verify_theorem(n: int, **kwargs) -> TheoremVerdict:
    """Compare the exceptional graphs of order ``n`` with the family members of that order."""
    return theorem_verdict(census(n, **kwargs))


def verify_cc_diameter3(n: int, **kwargs) -> CCVerdict:
    return cc_verdict(census(n, **kwargs))


def verify_properties(n: int, which="all", **kwargs) -> PropertyVerdict:
    return property_verdict(census(n, suites=which, **kwargs))
