"""Self-verification suite run by ``randic-incidence verify``.

Each criterion is a function ``(seed) -> (passed, detail)``. Random corpora
depend only on the seed, so any seed should pass.
"""
from __future__ import annotations

import math
import random
import tempfile
from pathlib import Path
from typing import Callable

import numpy as np

from . import bounds
from .energy import i_re
from .extremal import explore_min_tree, rank_trees, write_tree_csvs
from .formats import parse_graph6, write_graph6
from .graph import (
    gen_complete,
    gen_complete_bipartite,
    gen_cycle,
    gen_path,
    gen_petersen,
    gen_star,
    induced_subgraph,
    is_bipartite,
    is_complete,
    is_complete_bipartite,
    non_isolated_partition,
    random_connected_graph,
    random_graph,
)
from .spectra import edge_gram, normalized_signless_laplacian, randic_incidence, sym_eigenvalues
from .trees import enumerate_trees

TREE_COUNTS = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106)

Result = tuple[bool, str]


def _worst(pairs) -> tuple[float, str]:
    """Largest error and its label; a NaN wins immediately."""
    worst, where = 0.0, ""
    for err, label in pairs:
        if math.isnan(err):
            return err, label
        if err > worst:
            worst, where = err, label
    return worst, where


def star_law(seed: int = 0) -> Result:
    worst, where = _worst((abs(i_re(gen_star(n)) - (n - 2 + math.sqrt(2))), f"S{n}") for n in range(2, 51))
    return worst <= 1e-9, f"max error {worst:.3g} ({where})"


def complete_law(seed: int = 0) -> Result:
    worst, where = _worst(
        (abs(i_re(gen_complete(n)) - (math.sqrt(2) + math.sqrt((n - 1) * (n - 2)))), f"K{n}") for n in range(2, 51)
    )
    return worst <= 1e-9, f"max error {worst:.3g} ({where})"


def complete_bipartite_law(seed: int = 0) -> Result:
    worst, where = _worst(
        (abs(i_re(gen_complete_bipartite(x, y)) - (x + y - 2 + math.sqrt(2))), f"K{x},{y}")
        for x in range(1, 21) for y in range(x, 21)
    )
    return worst <= 1e-9, f"max error {worst:.3g} ({where})"


def path4_value(seed: int = 0) -> Result:
    val = i_re(gen_path(4))
    return abs(val - 3.346065) <= 1e-6, f"I_RE(P4) = {val:.12g}"


def fuzz_graphs(seed: int, count: int = 1000):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_connected_graph(rng.randint(3, 10), rng)


def bound_fuzz(seed: int = 0) -> Result:
    corpus = list(fuzz_graphs(seed))
    corpus += [t for n in range(2, 11) for t in enumerate_trees(n)]
    problems = []
    for g in corpus:
        reports = [bounds.check_lower_bound(g), bounds.check_upper_bound(g)]
        if is_bipartite(g):
            reports.append(bounds.check_bipartite_bound(g))
        for r in reports:
            if not r.holds or not r.consistent:
                problems.append(f"{r.theorem_id} on {write_graph6(g)} (gap {r.gap:.3g}, tight={r.tight})")
    return not problems, f"{len(corpus)} graphs; " + ("; ".join(problems[:3]) or "all hold, tightness exact")


def monotonicity_fuzz(seed: int = 0) -> Result:
    rng = random.Random(seed + 1)
    problems, min_gap, pairs = [], math.inf, 0
    while pairs < 500:
        g = random_graph(rng.randint(2, 10), rng.random(), rng)
        if g.m == 0:
            continue
        k = rng.randint(1, g.m)
        subset = rng.sample(list(g.edges), k)
        r = bounds.check_monotonicity(g, subset)
        min_gap = min(min_gap, r.gap)
        if not r.gap > 1e-12:
            problems.append(f"T3_2 {write_graph6(g)} minus {subset}: gap {r.gap:.3g}")
        pairs += 1
    for g in fuzz_graphs(seed + 2, 499):
        e = rng.choice(g.edges)
        r = bounds.check_edge_deletion(g, e)
        if not r.holds or r.tight:
            problems.append(f"T3_4 {write_graph6(g)} edge {e}: gap {r.gap:.3g}")
    k2 = bounds.check_edge_deletion(gen_complete(2), (0, 1))
    if not k2.tight:
        problems.append("T3_4 not tight on K2")
    return not problems, f"min T3_2 gap {min_gap:.3g}; " + ("; ".join(problems[:3]) or "T3_4 tight only at K2")


def identity_residuals(seed: int = 0) -> Result:
    rng = random.Random(seed + 3)
    worst_block = worst_trace = worst_rows = worst_etrace = 0.0
    for _ in range(200):
        g = random_graph(rng.randint(1, 12), rng.random(), rng)
        b = randic_incidence(g)
        vg = b @ b.T
        part = non_isolated_partition(g)
        expected = np.zeros((g.n, g.n))
        if part.r:
            w = np.asarray(part.non_isolated)
            expected[np.ix_(w, w)] = normalized_signless_laplacian(induced_subgraph(g, part.non_isolated))
        worst_block = max(worst_block, float(np.max(np.abs(vg - expected), initial=0.0)))
        worst_trace = max(worst_trace, abs(float(np.trace(vg)) - part.r))
        if g.m:
            eg = edge_gram(g)
            worst_rows = max(worst_rows, float(np.max(np.abs(eg.sum(axis=0) - 2.0))),
                             float(np.max(np.abs(eg.sum(axis=1) - 2.0))))
            if not part.isolated:
                worst_etrace = max(worst_etrace, abs(float(np.trace(eg)) - g.n))
    ok = worst_block <= 1e-12 and worst_trace <= 1e-10 and worst_rows <= 1e-12 and worst_etrace <= 1e-10
    return ok, (f"block {worst_block:.3g}, trace {worst_trace:.3g}, "
                f"edge-Gram sums {worst_rows:.3g}, edge-Gram trace {worst_etrace:.3g}")


def regular_line_identity(seed: int = 0) -> Result:
    family = [gen_cycle(n) for n in range(3, 13)] + [gen_complete(n) for n in range(3, 9)] + [gen_petersen()]
    worst, where = _worst((abs(bounds.check_regular_line_identity(g).gap), write_graph6(g)) for g in family)
    return worst <= 1e-9, f"max disagreement {worst:.3g} ({where})"


def tree_enumeration(seed: int = 0) -> Result:
    counts = tuple(sum(1 for _ in enumerate_trees(n)) for n in range(1, 11))
    problems = [] if counts == TREE_COUNTS else [f"counts {counts}"]
    for n in range(3, 11):
        _, s = rank_trees(n)
        if not s.max_is_star or (n >= 4 and not s.max_unique):
            problems.append(f"n={n}: star not strict unique maximum")
    return not problems, "; ".join(problems) or "counts match; star is the strict maximum for n=4..10"


def eigensolver_accuracy(seed: int = 0) -> Result:
    def err(n):
        got = sym_eigenvalues(normalized_signless_laplacian(gen_complete(n))).values
        want = np.array([2.0] + [(n - 2) / (n - 1)] * (n - 1))
        return float(np.max(np.abs(got - want)))

    worst, where = _worst((err(n), f"K{n}") for n in range(3, 13))
    return worst <= 1e-10, f"max error {worst:.3g} ({where})"


def format_round_trip(seed: int = 0) -> Result:
    rng = random.Random(seed + 4)
    problems = []
    for _ in range(500):
        g = random_graph(rng.randint(0, 62 if rng.random() < 0.1 else 16), rng.random(), rng)
        s = write_graph6(g)
        if parse_graph6(s) != g or write_graph6(parse_graph6(s)) != s:
            problems.append(s)
    if parse_graph6("C~") != gen_complete(4) or write_graph6(gen_complete(4)) != "C~":
        problems.append("C~")
    if parse_graph6("Ch") != gen_path(4) or write_graph6(gen_path(4)) != "Ch":
        problems.append("Ch")
    return not problems, "; ".join(problems[:3]) or "500 random strings, C~ and Ch round trip"


def determinism(seed: int = 0) -> Result:
    outputs = []
    for workers in (1, 2):
        with tempfile.TemporaryDirectory() as tmp:
            write_tree_csvs(range(2, 11), tmp, workers=workers)
            outputs.append({p.name: p.read_bytes() for p in sorted(Path(tmp).iterdir())})
    return outputs[0] == outputs[1], f"{len(outputs[0])} CSV files compared across 1 and 2 workers"


def exploratory_min_tree(seed: int = 0) -> Result:
    parts = []
    for r in explore_min_tree(range(2, 11)):
        parts.append(f"n={r.n}:{'P' if r.path_is_min else 'not P'}(rank {r.path_rank}/{r.count_trees})")
    return True, "recorded only: " + " ".join(parts)


CRITERIA: dict[str, Callable[[int], Result]] = {
    "1 star closed form": star_law,
    "2 complete-graph equality": complete_law,
    "3 complete-bipartite equality": complete_bipartite_law,
    "4 P4 spot value": path4_value,
    "5 bound fuzz": bound_fuzz,
    "6 monotonicity fuzz": monotonicity_fuzz,
    "7 identity residuals": identity_residuals,
    "8 regular line-graph identity": regular_line_identity,
    "9 tree enumeration": tree_enumeration,
    "10 eigensolver accuracy": eigensolver_accuracy,
    "11 format round trip": format_round_trip,
    "12 determinism": determinism,
    "13 exploratory min tree": exploratory_min_tree,
}


def run_all(seed: int = 0, only: str | None = None) -> list[tuple[str, bool, str]]:
    """Run the criteria (``only``: comma-separated numbers) and collect results."""
    wanted = None if only is None else {x.strip() for x in only.split(",") if x.strip()}
    out = []
    for name, fn in CRITERIA.items():
        if wanted is not None and name.split()[0] not in wanted:
            continue
        try:
            ok, detail = fn(seed)
        except (ArithmeticError, ValueError) as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append((name, ok, detail))
    return out
