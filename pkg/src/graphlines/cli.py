"""Command line front end: ``graphlines lines|family|enumerate``.

Exit codes: 0 when every requested check passes, 1 when a counterexample was
found (its graph6 is printed), 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from . import __version__
from .enumeration import (
    MAX_ENUM_ORDER,
    census,
    cc_verdict,
    classify,
    property_verdict,
    theorem_verdict,
)
from .errors import GraphLinesError, HypothesisViolated, InvalidEdge
from .families import MSpec, expected_line_count, family_F, parse_family
from .graph import Graph, build_graph, distances
from .graph6 import from_graph6, to_graph6
from .lines import LineTable
from .properties import BRIDGE_SUITE

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


def parse_edge_list(text: str) -> Graph:
    rows = [r.split() for r in text.splitlines() if r.strip() and not r.lstrip().startswith("#")]
    try:
        n, m = map(int, rows[0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except (ValueError, IndexError):
        raise InvalidEdge("edge list must start with 'n m' followed by 'u v' rows") from None
    if len(edges) != m:
        raise InvalidEdge(f"header announces {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def _parse_text(text: str) -> Graph:
    first = next((r for r in text.splitlines() if r.strip() and not r.lstrip().startswith("#")), "")
    tokens = first.split()
    if len(tokens) == 2 and all(t.isdigit() for t in tokens):
        return parse_edge_list(text)
    return from_graph6(first)


def read_graph(arg: str) -> Graph:
    """Graph from a graph6 literal, a file (graph6 or edge list), or ``-`` for stdin."""
    if arg == "-":
        return _parse_text(sys.stdin.read())
    path = Path(arg)
    if path.is_file():
        return _parse_text(path.read_text())
    return from_graph6(arg)


def _envelope(command: str, report, elapsed: float, **extra) -> dict:
    out = {"command": command, "version": __version__, "input": report.graph6}
    body = report.to_dict()
    body.pop("graph6")
    out.update(body)
    out["elapsedMs"] = round(elapsed * 1000, 3)
    out.update(extra)
    return out


def _text_report(r) -> str:
    return (
        f"n={r.n} diameter={r.diameter} ℓ={r.num_lines} "
        f"universal={str(r.has_universal).lower()} bridges={r.bridge_count} "
        f"exceptional={str(r.exceptional).lower()} fMatch={r.f_match or '-'}"
    )


def cmd_lines(args) -> int:
    t0 = time.perf_counter()
    g = read_graph(args.input)
    report = classify(g)
    shown = None
    if args.show_lines:
        t = LineTable(distances(g))
        shown = sorted(sorted(_bits(m)) for m in t.lines)
    elapsed = time.perf_counter() - t0
    if args.json:
        extra = {"lines": shown} if shown is not None else {}
        print(json.dumps(_envelope("lines", report, elapsed, **extra)))
    else:
        print(_text_report(report))
        for members in shown or ():
            print(" ".join(map(str, members)))
    return EXIT_OK


def _bits(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def _verify_member(name: str, g: Graph) -> tuple[bool, str]:
    d = distances(g)
    t = LineTable(d)
    notes = [f"ℓ={t.count}"]
    ok = True
    f_names = {m.name for m in family_F()}
    if name in f_names:
        good = d.diameter == 3 and t.count < g.n and t.has_universal
        notes.append(f"diameter={d.diameter} n={g.n} universal={str(t.has_universal).lower()}")
        ok &= good
    spec = _spec_of(name)
    if spec is not None:
        try:
            expected = expected_line_count(spec)
        except HypothesisViolated as exc:
            notes.append(f"(no formula: {exc})")
        else:
            notes.append(f"expected={expected}")
            ok &= t.count == expected and d.diameter == 3
    return ok, " ".join(notes)


def _spec_of(name: str):
    if name.startswith("M_{"):
        nums = tuple(int(t) for t in name[3:-1].split(","))
        return MSpec(nums[0], nums[1:])
    if name.startswith("M'_"):
        return int(name[3:]) // 2
    return None


def cmd_family(args) -> int:
    if args.name.upper() == "F":
        members = [(m.name, m.graph) for m in family_F()]
    else:
        members = [parse_family(args.name)]
    status = EXIT_OK
    for name, g in members:
        line = to_graph6(g) if args.graph6 else f"{name} {to_graph6(g)}"
        if args.verify:
            ok, notes = _verify_member(name, g)
            line += f" verify={'pass' if ok else 'FAIL'} {notes}"
            if not ok:
                status = EXIT_COUNTEREXAMPLE
        print(line)
    return status


def cmd_enumerate(args) -> int:
    if not 2 <= args.order <= MAX_ENUM_ORDER:
        print(f"error: order must lie in [2, {MAX_ENUM_ORDER}]", file=sys.stderr)
        return EXIT_USAGE
    t0 = time.perf_counter()
    state = census(
        args.order,
        jobs=args.jobs,
        suites=args.verify_properties or (),
        checkpoint=args.checkpoint,
        frontier_order=args.frontier,
    )
    status = EXIT_OK
    summary = {
        "order": state.order,
        "connected": state.connected,
        "diameter3": state.diameter3,
        "exceptional": len(state.exceptional),
        "digest": f"{state.digest:016x}",
    }
    text = [
        f"order={state.order} connected={state.connected} diameter3={state.diameter3} "
        f"exceptional={len(state.exceptional)}"
    ]
    envelopes = []
    for g6, name in state.exceptional_matches():
        report = classify(from_graph6(g6))
        envelopes.append(_envelope("enumerate", report, 0.0))
        text.append(f"  exceptional {g6} fMatch={name or '-'}")
    if args.verify_theorem:
        v = theorem_verdict(state)
        summary["theorem"] = {"pass": v.passed, "expected": v.expected,
                              "found": [name for _, name in v.found]}
        text.append(f"theorem: {'pass' if v.passed else 'FAIL'} expected={v.expected}")
        if not v.passed:
            status = EXIT_COUNTEREXAMPLE
            text += [f"  unexpected {g6}" for g6, name in v.found if name is None]
    if args.verify_cc:
        v = cc_verdict(state)
        summary["cc"] = {"pass": v.passed, "violators": v.violators}
        text.append(f"chen-chvatal (diameter 3): {'pass' if v.passed else 'FAIL'} violators={len(v.violators)}")
        if not v.passed:
            status = EXIT_COUNTEREXAMPLE
            text += [f"  violator {g6}" for g6 in v.violators]
    if args.verify_properties:
        v = property_verdict(state)
        summary["properties"] = {
            name: {"checked": t.checked, "failures": t.failures, "witnesses": t.witnesses}
            for name, t in v.tallies.items()
        }
        for name, t in v.tallies.items():
            tag = "logged" if name == BRIDGE_SUITE else ("pass" if t.failures == 0 else "FAIL")
            text.append(f"property {name}: {tag} checked={t.checked} failures={t.failures}")
            text += [f"  witness {w}" for w in t.witnesses]
        if not v.passed:
            status = EXIT_COUNTEREXAMPLE
    elapsed = time.perf_counter() - t0
    summary["pass"] = status == EXIT_OK
    if args.json:
        for env in envelopes:
            print(json.dumps(env))
        print(json.dumps({"command": "enumerate", "version": __version__,
                          "summary": summary, "elapsedMs": round(elapsed * 1000, 3)}))
    else:
        print("\n".join(text))
        print(f"elapsed={elapsed:.2f}s")
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphlines", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lines", help="line statistics of one graph")
    p.add_argument("input", help="graph6 string, file (graph6 or 'n m' edge list), or - for stdin")
    p.add_argument("--json", action="store_true")
    p.add_argument("--show-lines", action="store_true")
    p.set_defaults(func=cmd_lines)

    p = sub.add_parser("family", help="build family members: F, a member name, M:p,p1,..,pq or Mprime:p")
    p.add_argument("name")
    p.add_argument("--graph6", action="store_true", help="print only graph6")
    p.add_argument("--verify", action="store_true", help="recompute and check the line count")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("enumerate", help="census of connected graphs of one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--verify-theorem", action="store_true")
    p.add_argument("--verify-cc", action="store_true")
    p.add_argument("--verify-properties", nargs="?", const="all", default=None,
                   help="comma separated suites or groups (lemmas, structure, all)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--checkpoint", type=Path)
    p.add_argument("--frontier", type=int, default=None, help="shard frontier order")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (GraphLinesError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
