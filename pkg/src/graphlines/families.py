"""Constructors for the clique-matching families and the fourteen exceptional graphs.

``M(p; p1..pq)`` joins a clique ``K_p`` to cliques ``K_p1 .. K_pq`` through a
matching that saturates the small cliques.  ``M'(2p)`` joins two copies of
``K_p`` by a matching of size ``p - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator

from .errors import HypothesisViolated, InvalidSpec, UnknownName
from .graph import Graph, build_graph


@dataclass(frozen=True)
class MSpec:
    p: int
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if self.p < 2:
            raise InvalidSpec(f"clique size must be >= 2, got {self.p}")
        if not self.parts:
            raise InvalidSpec("at least one part is required")
        if any(q < 1 for q in self.parts):
            raise InvalidSpec(f"parts must be positive, got {self.parts}")
        if sum(self.parts) > self.p:
            raise InvalidSpec(f"parts {self.parts} sum to more than p={self.p}")

    @property
    def order(self) -> int:
        return self.p + sum(self.parts)

    @property
    def name(self) -> str:
        return "M_{" + ",".join(map(str, (self.p,) + self.parts)) + "}"


def build_M(spec: MSpec) -> Graph:
    """K_p on 0..p-1, then each part clique; clique vertex j is matched to the j-th outer vertex."""
    p = spec.p
    edges = list(combinations(range(p), 2))
    start = p
    for size in spec.parts:
        edges.extend(combinations(range(start, start + size), 2))
        start += size
    edges.extend((j, p + j) for j in range(sum(spec.parts)))
    return build_graph(spec.order, edges)


def build_Mprime(p: int) -> Graph:
    """Two cliques on 0..p-1 and p..2p-1 with matching i <-> p+i for i < p-1."""
    if p < 2:
        raise InvalidSpec(f"clique size must be >= 2, got {p}")
    edges = list(combinations(range(p), 2))
    edges.extend(combinations(range(p, 2 * p), 2))
    edges.extend((i, p + i) for i in range(p - 1))
    return build_graph(2 * p, edges)


# vertices: x=0, u=1, u*=2, v*=3, w*=4 (for d: x=0, u=1, v*=2, v=3, w*=4)
_FIGURE_EDGES = {
    "a": [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)],
    "b": [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (1, 2)],
    "c": [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)],
    "d": [(0, 1), (1, 2), (1, 3), (2, 4)],
}


def build_figure_graph(name: str) -> Graph:
    key = name.lower().removeprefix("g_").removeprefix("g")
    if key not in _FIGURE_EDGES:
        raise UnknownName(f"no figure graph named {name!r}")
    return build_graph(5, _FIGURE_EDGES[key])


@dataclass(frozen=True)
class FMember:
    name: str
    graph: Graph


_F_M_SPECS = [
    (2, 1, 1),
    (3, 1, 1),
    (3, 1, 1, 1),
    (3, 2, 1),
    (4, 1, 1, 1, 1),
    (4, 2, 1, 1),
    (4, 2, 2),
    (4, 3, 1),
]


def family_F() -> list[FMember]:
    """The fourteen diameter-3 graphs with fewer lines than vertices."""
    out = [FMember(f"G_{c}", build_figure_graph(c)) for c in "abcd"]
    for p, *parts in _F_M_SPECS:
        spec = MSpec(p, tuple(parts))
        out.append(FMember(spec.name, build_M(spec)))
    out.append(FMember("M'_6", build_Mprime(3)))
    out.append(FMember("M'_8", build_Mprime(4)))
    return out


def f_member(name: str) -> FMember:
    for m in family_F():
        if m.name == name:
            return m
    raise UnknownName(f"{name!r} is not a member of the exceptional family")


def expected_line_count(spec: MSpec | int) -> int:
    """``C(p, 2) + 1`` for an M spec (p >= 3, q >= 2) or an M' clique size p >= 3.

    An ``int`` argument is read as the clique size of ``M'(2p)``.
    """
    if isinstance(spec, MSpec):
        if spec.p < 3 or len(spec.parts) < 2:
            raise HypothesisViolated(
                f"{spec.name}: line-count formula needs p >= 3 and at least two parts"
            )
        return comb(spec.p, 2) + 1
    if spec < 3:
        raise HypothesisViolated(f"M'_{2 * spec}: line-count formula needs p >= 3")
    return comb(spec, 2) + 1


def partitions(total: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` into non-increasing positive parts."""
    if largest is None:
        largest = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


def m_specs(p: int, min_parts: int = 2) -> Iterator[MSpec]:
    """Every M spec with clique size ``p`` up to isomorphism (parts sorted)."""
    for s in range(1, p + 1):
        for parts in partitions(s):
            if len(parts) >= min_parts:
                yield MSpec(p, parts)


def parse_family(text: str) -> tuple[str, Graph]:
    """Parse ``M:4,2,2``, ``Mprime:4`` or an exceptional-family name."""
    text = text.strip()
    kind, sep, args = text.partition(":")
    if sep:
        try:
            nums = [int(t) for t in args.replace(" ", "").split(",") if t]
        except ValueError:
            raise InvalidSpec(f"cannot parse numbers in {text!r}") from None
        if kind.lower() == "m":
            if not nums:
                raise InvalidSpec("M spec needs a clique size")
            spec = MSpec(nums[0], tuple(nums[1:]))
            return spec.name, build_M(spec)
        if kind.lower() in ("mprime", "m'"):
            if len(nums) != 1:
                raise InvalidSpec("Mprime spec takes exactly one clique size")
            return f"M'_{2 * nums[0]}", build_Mprime(nums[0])
        raise UnknownName(f"unknown family kind {kind!r}")
    m = f_member(text)
    return m.name, m.graph
