import math

import pytest

from randic_incidence import bounds
from randic_incidence.extremal import (
    CSV_COLUMNS,
    TIE_TOL,
    explore_min_tree,
    rank_records,
    rank_trees,
    read_corpus,
    records_csv,
    scan_corpus,
    write_tree_csvs,
)
from randic_incidence.formats import parse_graph6
from randic_incidence.graph import GraphError, is_path, is_star

S2 = math.sqrt(2)


def test_rank_n4():
    records, s = rank_trees(4)
    assert [r.rank for r in records] == [1, 2]
    assert is_star(parse_graph6(records[0].graph6))
    assert records[0].i_re == pytest.approx(2 + S2, abs=1e-12)
    assert records[1].i_re == pytest.approx(3.3461, abs=1e-4)
    assert s.max_is_star and s.max_unique and s.path_is_min


def test_rank_n5_and_n2():
    records, s = rank_trees(5)
    assert s.count_trees == 3 and is_star(parse_graph6(records[0].graph6))
    assert records[0].i_re == pytest.approx(3 + S2)
    records, s = rank_trees(2)
    assert len(records) == 1 and records[0].i_re == pytest.approx(S2)
    assert s.top_gap is None and s.max_unique


@pytest.mark.parametrize("n", [0, 1, 17])
def test_rank_range(n):
    with pytest.raises(GraphError):
        rank_trees(n)


@pytest.mark.parametrize("n", range(4, 11))
def test_star_strict_unique_maximum(n):
    records, s = rank_trees(n)
    assert s.max_is_star and s.max_unique and s.top_gap > 1e-9
    for r in records:
        assert math.sqrt(n) - 1e-9 <= r.i_re <= n - 2 + S2 + 1e-9
    assert sorted(r.rank for r in records) == list(range(1, len(records) + 1))


def test_tie_grouping():
    values = {"b": 1.0, "a": 1.0 + TIE_TOL / 2, "c": 0.5, "d": 2.0}
    recs = rank_records(values, 5)
    assert [r.graph6 for r in recs] == ["d", "a", "b", "c"]
    assert recs[1].i_re == recs[2].i_re == 1.0 + TIE_TOL / 2
    # order of the input dict is irrelevant
    assert rank_records(dict(reversed(list(values.items()))), 5) == recs


def test_workers_identical():
    a, _ = rank_trees(9, workers=1)
    b, _ = rank_trees(9, workers=3)
    assert records_csv(a) == records_csv(b)


def test_csv_files(tmp_path):
    summaries = write_tree_csvs(range(2, 7), tmp_path)
    assert [s.count_trees for s in summaries] == [1, 1, 2, 3, 6]
    text = (tmp_path / "trees_n4.csv").read_text()
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    rank, g6, n, val = lines[1].split(",")
    assert (rank, n, val) == ("1", "4", "3.41421356237") and is_star(parse_graph6(g6))


def test_explore():
    r3, r4, r9 = explore_min_tree([3, 4, 9])
    assert r3.count_trees == 1 and r3.path_is_min
    assert r4.argmin == (r4.path_graph6,) and is_path(parse_graph6(r4.path_graph6)) and r4.path_is_min
    assert r9.count_trees == 47 and len(r9.argmin) >= 1
    assert r9.path_rank == 47 if r9.path_is_min else r9.path_rank < 47


def test_scan_examples():
    rows = list(scan_corpus(["C~", "@", "Ch"]))
    assert [r["line"] for r in rows] == [1, 2, 3]
    k4 = rows[0]["reports"]
    assert k4[bounds.T2_2].tight
    assert rows[1]["error"].startswith("theorem preconditions unmet")
    p4 = rows[2]["reports"][bounds.T4_1]
    assert p4.holds and not p4.tight


def test_scan_bad_lines():
    rows = list(scan_corpus(["# header", "", "C~", "Cxyz", "A_"]))
    assert [r["line"] for r in rows] == [3, 4, 5]
    assert rows[1]["error"].startswith("parse error")
    assert "error" not in rows[2]


def test_read_corpus():
    assert list(read_corpus(["#c", " A_ ", "", "C~"])) == [(2, "A_"), (4, "C~")]
