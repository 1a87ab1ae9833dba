"""Structural sets behind line coincidences in diameter-3 graphs.

For a vertex ``x`` we look at lines ``xw`` with ``w`` at distance 3 that
coincide with some line ``xv``, ``v`` at distance 2 (the sets ``A(x)``,
``B(x)`` and the matching ``f`` between them).  For a pair ``x, w`` at
distance 3 we split the neighbourhood of ``x`` according to how lines from
``w`` meet the distance-2 lines of ``x`` (the sets ``A(x,w)``, ``B(x,w)``,
``C(x,w)``, ``D`` and ``D'``).

The ``verify_*`` functions turn the structural claims about these sets into
checks and return a :class:`ClaimReport` listing every claim with a witness
for any failure.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DiameterNotThree, DistanceNotThree, NotInR, RNotEmpty
from .graph import DistanceMatrix, iter_bits, popcount, to_list
from .lines import LineTable


def _table(d: DistanceMatrix, lines: LineTable | None) -> LineTable:
    if d.diameter != 3:
        raise DiameterNotThree(f"graph has diameter {d.diameter}")
    return lines if lines is not None and lines.d is d else LineTable(d)


def edges_between(d: DistanceMatrix, xs: int, ys: int) -> set[tuple[int, int]]:
    """Edges with one end in ``xs`` and the other in ``ys`` as sorted pairs."""
    out = set()
    for a in iter_bits(xs):
        for b in iter_bits(d.layer(a, 1) & ys):
            out.add((min(a, b), max(a, b)))
    return out


@dataclass(frozen=True)
class CaseOneProfile:
    x: int
    A: int
    B: int
    A1: int
    A2: int
    f: dict[int, int] = field(compare=False)
    # A1 computed through membership of xw in the distance-2 lines of w
    A1_via_far_family: int = 0
    ambiguous: tuple[int, ...] = ()

    @property
    def in_R(self) -> bool:
        return self.A != 0


def case1_profile(d: DistanceMatrix, x: int, lines: LineTable | None = None) -> CaseOneProfile:
    t = _table(d, lines)
    row = t.mask[x]
    n2 = d.layer(x, 2)
    n3 = d.layer(x, 3)
    near = d.layer(x, 1)
    by_line2: dict[int, list[int]] = {}
    for v in iter_bits(n2):
        by_line2.setdefault(row[v], []).append(v)
    lines3 = {row[w] for w in iter_bits(n3)}
    A = A1 = A1_far = 0
    f: dict[int, int] = {}
    ambiguous = []
    for w in iter_bits(n3):
        lw = row[w]
        vs = by_line2.get(lw)
        wrow = t.mask[w]
        if vs is not None:
            A |= 1 << w
            f[w] = vs[0]
            if len(vs) > 1:
                ambiguous.append(w)
            if any(wrow[u] == lw for u in iter_bits(near)):
                A1 |= 1 << w
        if any(wrow[z] == lw for z in iter_bits(d.layer(w, 2))) and vs is not None:
            A1_far |= 1 << w
    B = 0
    for v in iter_bits(n2):
        if row[v] in lines3:
            B |= 1 << v
    return CaseOneProfile(x, A, B, A1, A ^ A1, f, A1_far, tuple(ambiguous))


def in_R1(d: DistanceMatrix, profile: CaseOneProfile) -> bool:
    return profile.in_R and popcount(d.layer(profile.x, 1)) == 1


def set_R(d: DistanceMatrix, lines: LineTable | None = None) -> int:
    """Vertices whose distance-2 and distance-3 line families intersect."""
    t = _table(d, lines)
    out = 0
    for x in range(d.n):
        if t.family_at(x, 2) & t.family_at(x, 3):
            out |= 1 << x
    return out


def set_R1(d: DistanceMatrix, lines: LineTable | None = None) -> int:
    r = set_R(d, lines)
    return sum(1 << x for x in iter_bits(r) if popcount(d.layer(x, 1)) == 1)


@dataclass
class ClaimReport:
    subject: str
    results: dict[str, tuple[bool, str | None]] = field(default_factory=dict)

    def record(self, claim: str, ok: bool, witness: str | None = None) -> None:
        if claim in self.results and not self.results[claim][0]:
            return
        self.results[claim] = (ok, None if ok else witness)

    @property
    def ok(self) -> bool:
        return all(ok for ok, _ in self.results.values())

    def failures(self) -> dict[str, str | None]:
        return {k: w for k, (ok, w) in self.results.items() if not ok}


def verify_case1_claims(
    d: DistanceMatrix, x: int, lines: LineTable | None = None
) -> ClaimReport:
    t = _table(d, lines)
    prof = case1_profile(d, x, t)
    if not prof.in_R:
        raise NotInR(f"vertex {x} has no distance-2/3 line coincidence")
    rep = ClaimReport(f"x={x}")
    n2, n3 = d.layer(x, 2), d.layer(x, 3)
    row = t.mask[x]

    rep.record("f-well-defined", not prof.ambiguous, f"ambiguous images for {list(prof.ambiguous)}")
    image = 0
    for v in prof.f.values():
        image |= 1 << v
    injective = len(set(prof.f.values())) == len(prof.f)
    rep.record(
        "f-bijective",
        injective and image == prof.B,
        f"f={prof.f} B={to_list(prof.B)}",
    )
    matching = {(min(w, v), max(w, v)) for w, v in prof.f.items()}
    e_an2 = edges_between(d, prof.A, n2)
    e_bn3 = edges_between(d, prof.B, n3)
    rep.record("edges-A-to-N2", e_an2 == matching, f"E={sorted(e_an2)} matching={sorted(matching)}")
    rep.record("edges-B-to-N3", e_bn3 == matching, f"E={sorted(e_bn3)} matching={sorted(matching)}")
    rep.record(
        "A1-definitions-agree",
        prof.A1 == prof.A1_via_far_family,
        f"{to_list(prof.A1)} vs {to_list(prof.A1_via_far_family)}",
    )

    # lines wu, w in A2(x), u at distance 2 from w inside N(x)
    fam = t.family_at(x, 2) | t.family_at(x, 3)
    seen: dict[int, tuple[int, int]] = {}
    expected = 0
    distinct = True
    clash = None
    for w in iter_bits(prof.A2):
        for u in iter_bits(d.layer(w, 2) & d.layer(x, 1)):
            expected += 1
            m = t.mask[w][u]
            if m in seen:
                distinct = False
                clash = (seen[m], (w, u))
            seen[m] = (w, u)
            if m in fam:
                rep.record("A2-lines-avoid-x-families", False, f"line {(w, u)} repeats a line through x")
    rep.record("A2-lines-avoid-x-families", True)
    rep.record("A2-lines-distinct", distinct and len(seen) == expected, f"pairs {clash} share a line")
    rep.record("A2-lines-count", len(seen) >= popcount(prof.A2), f"{len(seen)} < |A2|")
    for w, v in prof.f.items():
        if row[v] != row[w]:
            rep.record("f-preserves-line", False, f"w={w} v={v}")
    rep.record("f-preserves-line", True)
    return rep


@dataclass(frozen=True)
class CaseTwoProfile:
    x: int
    w: int
    Axw: int
    Bxw: int
    Cxw: int
    Awx: int
    Bwx: int
    Cwx: int
    D: int
    Dprime: int
    f: dict[int, int] = field(compare=False)
    ambiguous: tuple[int, ...] = ()


def _split(d: DistanceMatrix, t: LineTable, x: int, y: int) -> tuple[int, int, int]:
    """A(x,y), B(x,y), C(x,y) for d(x,y) = 3."""
    fam2 = t.family_at(x, 2)
    yrow = t.mask[y]
    near = d.layer(x, 1)
    A = B = 0
    for z in iter_bits(d.layer(y, 2) & near):
        if yrow[z] in fam2:
            B |= 1 << z
        else:
            A |= 1 << z
    return A, B, d.layer(y, 3) & near


def case2_profile(
    d: DistanceMatrix, x: int, w: int, lines: LineTable | None = None
) -> CaseTwoProfile:
    t = _table(d, lines)
    if d.dist[x][w] != 3:
        raise DistanceNotThree(f"d({x},{w}) = {d.dist[x][w]}")
    Axw, Bxw, Cxw = _split(d, t, x, w)
    Awx, Bwx, Cwx = _split(d, t, w, x)
    nw = d.layer(w, 1)
    D = d.layer(x, 2) & ~nw
    Dp = d.layer(x, 3) & ~(nw | 1 << w)
    xrow, wrow = t.mask[x], t.mask[w]
    f = {}
    ambiguous = []
    for u in iter_bits(Bxw):
        vs = [v for v in iter_bits(d.layer(x, 2)) if xrow[v] == wrow[u]]
        f[u] = vs[0]
        if len(vs) > 1:
            ambiguous.append(u)
    return CaseTwoProfile(x, w, Axw, Bxw, Cxw, Awx, Bwx, Cwx, D, Dp, f, tuple(ambiguous))


def check_case2_partition(d: DistanceMatrix, prof: CaseTwoProfile, rep: ClaimReport) -> None:
    x, w = prof.x, prof.w
    n1, n2, n3 = d.layer(x, 1), d.layer(x, 2), d.layer(x, 3)

    def disjoint_union(parts, whole):
        acc = 0
        for p in parts:
            if acc & p:
                return False
            acc |= p
        return acc == whole

    rep.record("partition-N1", disjoint_union((prof.Axw, prof.Bxw, prof.Cxw), n1), f"x={x} w={w}")
    rep.record("partition-N2", disjoint_union((prof.Awx, prof.Bwx, prof.D), n2), f"x={x} w={w}")
    rep.record("partition-N3", disjoint_union((1 << w, prof.Cwx, prof.Dprime), n3), f"x={x} w={w}")
    rep.record(
        "D-definitions",
        prof.D == n2 & ~d.layer(w, 1) and prof.Dprime == n3 & ~(d.layer(w, 1) | 1 << w),
        f"x={x} w={w}",
    )


def verify_case2_claims(
    d: DistanceMatrix, x: int, w: int, lines: LineTable | None = None,
    *, require_empty_R: bool = True,
) -> ClaimReport:
    t = _table(d, lines)
    if require_empty_R and set_R(d, t):
        raise RNotEmpty("claims for distance-3 pairs are only asserted when R is empty")
    prof = case2_profile(d, x, w, t)
    rep = ClaimReport(f"x={x} w={w}")
    check_case2_partition(d, prof, rep)

    for u, v in prof.f.items():
        ok = bool(prof.Bwx >> v & 1) and bool(d.layer(u, 1) >> v & 1)
        rep.record("image-adjacent-in-B(w,x)", ok, f"u={u} f(u)={v}")
        rest = (prof.Axw | prof.Bxw) & ~(1 << u)
        rep.record("others-at-distance-2", rest & ~d.layer(v, 2) == 0, f"u={u} v={v}")

    image = 0
    for v in prof.f.values():
        image |= 1 << v
    rep.record("f-well-defined", not prof.ambiguous, f"ambiguous for {list(prof.ambiguous)}")
    rep.record(
        "f-bijective",
        len(set(prof.f.values())) == len(prof.f) and image == prof.Bwx,
        f"f={prof.f} B(w,x)={to_list(prof.Bwx)}",
    )
    matching = {(min(u, v), max(u, v)) for u, v in prof.f.items()}
    e1 = edges_between(d, prof.Bxw, prof.Awx | prof.Bwx)
    e2 = edges_between(d, prof.Bwx, prof.Axw | prof.Bxw)
    rep.record("matching-edges-from-B(x,w)", e1 == matching, f"{sorted(e1)} vs {sorted(matching)}")
    rep.record("matching-edges-from-B(w,x)", e2 == matching, f"{sorted(e2)} vs {sorted(matching)}")

    empties = {
        "no-edges-B(x,w)-C(x,w)": (prof.Bxw, prof.Cxw),
        "no-edges-B(w,x)-C(w,x)": (prof.Bwx, prof.Cwx),
        "no-edges-B(w,x)-C(x,w)": (prof.Bwx, prof.Cxw),
        "no-edges-B(w,x)-D'": (prof.Bwx, prof.Dprime),
    }
    for claim, (a, b) in empties.items():
        e = edges_between(d, a, b)
        rep.record(claim, not e, f"edges {sorted(e)}")
    rep.record(
        "A-symmetry",
        (prof.Axw != 0) == (prof.Awx != 0),
        f"A(x,w)={to_list(prof.Axw)} A(w,x)={to_list(prof.Awx)}",
    )
    return rep
