import pytest

from graphlines.errors import DiameterNotThree, DistanceNotThree, NotInR, RNotEmpty
from graphlines.families import MSpec, build_M, build_Mprime, family_F
from graphlines.graph import build_graph, distances, iter_bits, to_list
from graphlines.lines import LineTable
from graphlines.properties import STRUCTURE_SUITES, check_case2_claims
from graphlines.structure import (
    case1_profile,
    case2_profile,
    check_case2_partition,
    ClaimReport,
    set_R,
    set_R1,
    verify_case1_claims,
    verify_case2_claims,
)

from conftest import complete, cycle, path


def test_p4_case_one():
    d = distances(path(4))
    prof = case1_profile(d, 0)
    assert to_list(prof.A) == [3]
    assert to_list(prof.B) == [2]
    assert prof.A1 == prof.A
    assert prof.f == {3: 2}
    assert to_list(set_R(d)) == [0, 3]
    assert set_R1(d) == set_R(d)
    assert verify_case1_claims(d, 0).ok


def test_diameter_guard():
    with pytest.raises(DiameterNotThree):
        case1_profile(distances(complete(4)), 0)
    with pytest.raises(DiameterNotThree):
        set_R(distances(path(5)))


def test_mprime_has_empty_R():
    for p in (3, 4):
        d = distances(build_Mprime(p))
        assert set_R(d) == 0
        with pytest.raises(NotInR):
            verify_case1_claims(d, 0)


def test_m311_pendants_in_R():
    d = distances(build_M(MSpec(3, (1, 1))))
    assert set_R(d) & 0b11000 == 0b11000


def test_m422_case_one_claims():
    d = distances(build_M(MSpec(4, (2, 2))))
    t = LineTable(d)
    hits = [x for x in range(d.n) if case1_profile(d, x, t).A1]
    assert hits
    for x in iter_bits(set_R(d, t)):
        rep = verify_case1_claims(d, x, t)
        assert rep.ok, rep.failures()


def test_mprime6_case_two():
    d = distances(build_Mprime(3))
    # unmatched pair: 2 and 5
    prof = case2_profile(d, 2, 5)
    assert to_list(prof.Bxw) == [0, 1]
    assert prof.Axw == prof.Cxw == prof.D == prof.Dprime == 0
    assert prof.f == {0: 3, 1: 4}
    assert verify_case2_claims(d, 2, 5).ok


def test_p4_case_two():
    d = distances(path(4))
    prof = case2_profile(d, 0, 3)
    assert to_list(prof.Bxw) == [1]
    assert prof.Axw == prof.Cxw == 0
    with pytest.raises(RNotEmpty):
        verify_case2_claims(d, 0, 3)
    assert verify_case2_claims(d, 0, 3, require_empty_R=False).ok


def test_case_two_guards():
    d = distances(build_Mprime(3))
    with pytest.raises(DistanceNotThree):
        case2_profile(d, 0, 1)


def test_c7_partition():
    d = distances(cycle(7))
    for x in range(7):
        for w in iter_bits(d.layer(x, 3)):
            rep = ClaimReport(f"{x},{w}")
            check_case2_partition(d, case2_profile(d, x, w), rep)
            assert rep.ok, rep.failures()


def test_mprime_case_two_claims_all_pairs():
    for p in (3, 4):
        d = distances(build_Mprime(p))
        assert check_case2_claims(d, LineTable(d)) is None


def test_family_case_split():
    for m in family_F():
        d = distances(m.graph)
        t = LineTable(d)
        if m.name.startswith("M'"):
            assert set_R(d, t) == 0, m.name
        elif m.name.startswith("M_"):
            assert any(case1_profile(d, x, t).A1 for x in range(d.n)), m.name
        for name, suite in STRUCTURE_SUITES.items():
            assert suite(d, t) is None, (m.name, name)


def test_claim_report_keeps_first_failure():
    rep = ClaimReport("demo")
    rep.record("c", True)
    rep.record("c", False, "w1")
    rep.record("c", False, "w2")
    rep.record("c", True)
    assert not rep.ok
    assert rep.failures() == {"c": "w1"}
