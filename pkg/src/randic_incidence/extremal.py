"""Exhaustive extremal searches over trees and batch scans of graph corpora."""
from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .bounds import applicable_checks
from .energy import i_re
from .formats import parse_graph6, write_graph6
from .graph import GraphError, is_path, is_star
from .trees import MAX_TREE_ORDER, enumerate_trees

TIE_TOL = 1e-9
CSV_COLUMNS = ("rank", "graph6", "n", "i_re")


@dataclass(frozen=True)
class TreeRecord:
    n: int
    graph6: str
    i_re: float
    rank: int


@dataclass(frozen=True)
class ExtremalSummary:
    n: int
    count_trees: int
    max_record: TreeRecord
    min_record: TreeRecord
    max_is_star: bool
    max_unique: bool
    path_is_min: bool
    top_gap: float | None  # rank 1 minus rank 2; None for a single tree


@dataclass(frozen=True)
class MinTreeReport:
    n: int
    count_trees: int
    min_value: float
    argmin: tuple[str, ...]
    path_graph6: str
    path_value: float
    path_rank: int
    path_is_min: bool


def _energy_of(g6: str) -> float:
    return i_re(parse_graph6(g6))


def _energies(keys: list[str], workers: int) -> dict[str, float]:
    if workers <= 1 or len(keys) < 2:
        return {k: _energy_of(k) for k in keys}
    with ProcessPoolExecutor(max_workers=workers) as pool:
        values = pool.map(_energy_of, keys, chunksize=max(1, len(keys) // (4 * workers)))
        return dict(zip(keys, values))


def rank_records(values: dict[str, float], n: int) -> list[TreeRecord]:
    """Rank by energy, descending.

    Values within ``TIE_TOL`` of the head of their run form one tie group;
    members share the head's value and are ordered by graph6 string.
    """
    ordered = sorted(values.items(), key=lambda kv: (-kv[1], kv[0]))
    groups: list[list[tuple[str, float]]] = []
    for key, val in ordered:
        if groups and groups[-1][0][1] - val <= TIE_TOL:
            groups[-1].append((key, val))
        else:
            groups.append([(key, val)])
    records = []
    for grp in groups:
        shared = grp[0][1]
        for key, _ in sorted(grp):
            records.append(TreeRecord(n, key, shared, len(records) + 1))
    return records


def rank_trees(n: int, workers: int = 1) -> tuple[list[TreeRecord], ExtremalSummary]:
    if not 2 <= n <= MAX_TREE_ORDER:
        raise GraphError(f"rank_trees supports 2 <= n <= {MAX_TREE_ORDER}, got {n}")
    keys = [write_graph6(t) for t in enumerate_trees(n)]
    records = rank_records(_energies(keys, workers), n)
    top, bottom = records[0], records[-1]
    min_group = [r for r in records if r.i_re == bottom.i_re]
    if len(records) > 1:
        gap = top.i_re - records[1].i_re
        unique = gap > TIE_TOL
    else:
        gap, unique = None, True
    summary = ExtremalSummary(
        n=n,
        count_trees=len(records),
        max_record=top,
        min_record=bottom,
        max_is_star=is_star(parse_graph6(top.graph6)),
        max_unique=unique,
        path_is_min=any(is_path(parse_graph6(r.graph6)) for r in min_group),
        top_gap=gap,
    )
    return records, summary


def explore_min_tree(n_values: Iterable[int], workers: int = 1) -> list[MinTreeReport]:
    """Where does the path sit among n-vertex trees? Reported, never asserted."""
    out = []
    for n in n_values:
        records, summary = rank_trees(n, workers)
        low = records[-1].i_re
        path = next(r for r in records if is_path(parse_graph6(r.graph6)))
        argmin = tuple(r.graph6 for r in records if r.i_re == low)
        out.append(MinTreeReport(
            n=n,
            count_trees=summary.count_trees,
            min_value=low,
            argmin=argmin,
            path_graph6=path.graph6,
            path_value=path.i_re,
            path_rank=path.rank,
            path_is_min=path.graph6 in argmin,
        ))
    return out


def fmt(x: float) -> str:
    return f"{x:.12g}"


def records_csv(records: list[TreeRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        w.writerow([r.rank, r.graph6, r.n, fmt(r.i_re)])
    return buf.getvalue()


def write_tree_csvs(n_values: Iterable[int], out_dir: str | Path, workers: int = 1) -> list[ExtremalSummary]:
    """One ``trees_n<N>.csv`` per order; returns the summaries."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    summaries = []
    for n in n_values:
        records, summary = rank_trees(n, workers)
        (out_dir / f"trees_n{n}.csv").write_text(records_csv(records))
        summaries.append(summary)
    return summaries


def read_corpus(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, graph6)``, skipping blanks and ``#`` comments."""
    for lineno, line in enumerate(lines, 1):
        s = line.strip()
        if s and not s.startswith("#"):
            yield lineno, s


def scan_corpus(lines: Iterable[str]) -> Iterator[dict]:
    """One row per graph6 line, in input order; bad lines become error rows."""
    for lineno, g6 in read_corpus(lines):
        row = {"line": lineno, "graph6": g6}
        try:
            g = parse_graph6(g6)
        except GraphError as exc:
            row["error"] = f"parse error: {exc}"
            yield row
            continue
        row.update(n=g.n, m=g.m)
        try:
            row["i_re"] = i_re(g)
            checks = applicable_checks(g)
        except ArithmeticError as exc:
            row["error"] = f"numerical failure: {exc}"
            yield row
            continue
        if all(isinstance(v, str) for v in checks.values()):
            row["error"] = "theorem preconditions unmet: " + ", ".join(f"{k}={v}" for k, v in checks.items())
        row["reports"] = checks
        yield row
