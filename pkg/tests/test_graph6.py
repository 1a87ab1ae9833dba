import pytest

from graphlines.errors import MalformedGraph6, OrderOutOfRange
from graphlines.graph import build_graph
from graphlines.graph6 import from_graph6, to_graph6

from conftest import complete, path, random_graph


def test_k4_hand_decoded():
    # 'C' = 63+4, '~' = 63+63: six upper-triangle bits all set
    g = from_graph6("C~")
    assert g == complete(4)
    assert to_graph6(complete(4)) == "C~"


def test_p4_known_string():
    # bits (0,1),(0,2),(1,2),(0,3),(1,3),(2,3) = 1,0,1,0,0,1 -> 101001 = 41 -> 'h'
    assert to_graph6(path(4)) == "Ch"
    assert from_graph6("Ch") == path(4)


def test_header_bytes_and_whitespace():
    assert from_graph6(b">>graph6<<C~\n") == complete(4)


@pytest.mark.parametrize("n", range(2, 11))
def test_round_trip_random(rng, n):
    for _ in range(1000):
        g = random_graph(rng, n, rng.random())
        assert from_graph6(to_graph6(g)) == g


def test_long_order_round_trip(rng):
    for n in (62, 63, 64):
        g = random_graph(rng, n, 0.3)
        s = to_graph6(g)
        assert s[0] == "~" if n >= 63 else True
        assert from_graph6(s) == g


@pytest.mark.parametrize("bad", ["", "C", "C~~", "C\x7f", "D~~", "Dn", "~??", " ", "A?\n?"])
def test_malformed(bad):
    with pytest.raises((MalformedGraph6, OrderOutOfRange)):
        from_graph6(bad)


def test_padding_bits_must_be_zero():
    # n=5 packs 10 data bits into 2 bytes, leaving 2 padding bits
    s = to_graph6(build_graph(5, [(3, 4)]))
    assert (ord(s[-1]) - 63) & 0b11 == 0
    with pytest.raises(MalformedGraph6):
        from_graph6(s[:-1] + chr(ord(s[-1]) + 1))


def test_order_out_of_range():
    with pytest.raises((MalformedGraph6, OrderOutOfRange)):
        from_graph6("@")
    with pytest.raises((MalformedGraph6, OrderOutOfRange)):
        from_graph6("A`")  # n=2 has one data bit; value 33 sets a padding bit
