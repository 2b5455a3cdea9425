import pytest

import ladderprod as lp


def test_parse_and_width():
    assert lp.parse("[1,2]+[0,1]") == [(0, 1), (1, 2)]
    assert lp.width("[0,2]+[1,1]") == 2
    assert lp.is_ladder("[0,1]+[1,2]")
    assert not lp.is_ladder("[0,2]+[1,1]")
    assert len(lp.ladder_cover("[0,2]+[1,1]")) == 2


def test_bad_input_raises():
    with pytest.raises(ValueError):
        lp.parse("[2,0]")
    with pytest.raises(ValueError):
        lp.decompose(["[0,2]+[1,1]", "[0,0]"])


def test_linked_pair_decomposes_into_two():
    r = lp.decompose(["[0,1]", "[1,2]"])
    got = sorted(c["multisegment"] for c in r["constituents"])
    assert got == sorted(["[0,1]+[1,2]", "[0,2]+[1,1]"])
    assert all(c["multiplicity"] == 1 for c in r["constituents"])


def test_unlinked_pair_is_irreducible():
    r = lp.decompose(["[0,0]", "[0,0]"])
    assert [c["multisegment"] for c in r["constituents"]] == ["[0,0]+[0,0]"]


def test_kl_examples():
    assert lp.kl_poly("1234", "3412") == [1, 1]
    assert lp.kl_poly("1234", "4231") == [1, 1]
    assert lp.kl_poly("123", "321") == [1]


def test_indicator_and_jacquet():
    assert lp.indicator("[0,2]+[1,1]", "[0,1]", "[1,2]") == 1
    assert lp.indicator("[0,1]+[1,2]", "[0,2]", "[1,1]") == 0
    assert len(lp.jacquet_pairs("[0,1]+[1,2]")) == 6


def test_census_and_identity():
    row = lp.census(4)
    assert (row["avoid_321"], row["avoid_321_3412"], row["smooth_kl"]) == (14, 13, 22)
    assert row["agree"]
    lines = lp.verify_identity(5)
    assert lines[0]["kind"] == "header"
    assert lines[-1]["result"]["avoiders"] == 42
    assert lines[-1]["agree"]


def test_small_conjecture_sweep():
    lines = lp.verify_conjecture(max_total=3, window=4)
    summary = lines[-1]
    assert summary["kind"] == "summary"
    assert summary["result"]["disagreements"] == 0
    assert summary["result"]["instances"] > 0
