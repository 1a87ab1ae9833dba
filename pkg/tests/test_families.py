from itertools import combinations
from math import comb

import pytest

from graphlines.canon import is_isomorphic
from graphlines.errors import HypothesisViolated, InvalidSpec, UnknownName
from graphlines.families import (
    MSpec,
    build_M,
    build_Mprime,
    build_figure_graph,
    expected_line_count,
    f_member,
    family_F,
    m_specs,
    parse_family,
    partitions,
)
from graphlines.graph import bridge_count, distances
from graphlines.lines import LineTable, line, num_lines

from conftest import path


def test_mspec_validation():
    for p, parts in [(1, (1,)), (3, ()), (3, (0, 1)), (3, (2, 2)), (4, (-1,))]:
        with pytest.raises(InvalidSpec):
            MSpec(p, parts)
    assert MSpec(4, (2, 2)).order == 8
    assert MSpec(4, (2, 2)).name == "M_{4,2,2}"
    with pytest.raises(InvalidSpec):
        build_Mprime(1)


def test_m211_is_p4():
    assert is_isomorphic(build_M(MSpec(2, (1, 1))), path(4))


def test_m_layout():
    g = build_M(MSpec(3, (2, 1)))
    assert g.n == 6
    assert {(0, 1), (0, 2), (1, 2), (3, 4), (0, 3), (1, 4), (2, 5)} == set(g.edges())


def test_mprime_layout():
    g = build_Mprime(3)
    assert set(g.edges()) == {(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4)}


def test_known_line_counts():
    assert num_lines(distances(build_M(MSpec(3, (1, 1))))) == 4
    assert num_lines(distances(build_M(MSpec(4, (2, 2))))) == 7
    assert num_lines(distances(build_Mprime(3))) == 4
    assert num_lines(distances(build_Mprime(4))) == 7
    assert num_lines(distances(build_Mprime(5))) == 11


def test_expected_line_count():
    assert expected_line_count(MSpec(3, (1, 1))) == 4
    assert expected_line_count(4) == 7
    with pytest.raises(HypothesisViolated):
        expected_line_count(MSpec(2, (1, 1)))
    with pytest.raises(HypothesisViolated):
        expected_line_count(MSpec(4, (3,)))
    with pytest.raises(HypothesisViolated):
        expected_line_count(2)


def _partition_count(total, largest):
    if total == 0:
        return 1
    return sum(_partition_count(total - k, k) for k in range(1, min(total, largest) + 1))


def test_partitions_enumerate_all():
    for total in range(1, 9):
        ps = list(partitions(total))
        assert len(ps) == len(set(ps)) == _partition_count(total, total)
        assert all(sum(p) == total and list(p) == sorted(p, reverse=True) for p in ps)


@pytest.mark.parametrize("p", range(3, 9))
def test_formula_over_all_specs(p):
    for spec in m_specs(p):
        d = distances(build_M(spec))
        assert d.diameter == 3
        assert num_lines(d) == comb(p, 2) + 1 == expected_line_count(spec)
    d = distances(build_Mprime(p))
    assert d.diameter == 3 and num_lines(d) == comb(p, 2) + 1


def test_matching_edges_generate_universal_lines():
    for p in range(3, 7):
        for spec in m_specs(p):
            g = build_M(spec)
            d = distances(g)
            for j in range(sum(spec.parts)):
                assert line(d, j, p + j).members == g.full
        g = build_Mprime(p)
        d = distances(g)
        for i in range(p - 1):
            assert line(d, i, p + i).members == g.full


def test_figure_graphs():
    graphs = {c: build_figure_graph(c) for c in "abcd"}
    m311 = build_M(MSpec(3, (1, 1)))
    for g in graphs.values():
        d = distances(g)
        assert (g.n, d.diameter, num_lines(d)) == (5, 3, 4)
        assert not is_isomorphic(g, m311)
    for a, b in combinations(graphs.values(), 2):
        assert not is_isomorphic(a, b)
    assert graphs["d"].num_edges == 4 and bridge_count(graphs["d"]) == 4
    with pytest.raises(UnknownName):
        build_figure_graph("e")


def test_family_F():
    members = family_F()
    assert len(members) == 14
    for m in members:
        t = LineTable(distances(m.graph))
        assert t.d.diameter == 3 and t.count < m.graph.n and t.has_universal, m.name
    for a, b in combinations(members, 2):
        assert not is_isomorphic(a.graph, b.graph)
    by_order = {}
    for m in members:
        by_order.setdefault(m.graph.n, []).append(m.name)
    assert sorted(by_order[8]) == sorted(
        ["M_{4,1,1,1,1}", "M_{4,2,1,1}", "M_{4,2,2}", "M_{4,3,1}", "M'_8"]
    )
    assert sorted(by_order[5]) == ["G_a", "G_b", "G_c", "G_d", "M_{3,1,1}"]
    assert f_member("M'_6").graph == build_Mprime(3)
    with pytest.raises(UnknownName):
        f_member("M_{9,9}")


def test_parse_family():
    name, g = parse_family("M:4,2,2")
    assert name == "M_{4,2,2}" and g.n == 8
    name, g = parse_family("Mprime:4")
    assert name == "M'_8" and g == build_Mprime(4)
    name, g = parse_family("G_c")
    assert g == build_figure_graph("c")
    with pytest.raises(InvalidSpec):
        parse_family("M:3,4")
    with pytest.raises((UnknownName, InvalidSpec)):
        parse_family("nonsense")
