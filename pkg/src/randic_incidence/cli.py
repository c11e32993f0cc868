"""Command-line front end: ``randic-incidence {compute,bounds,trees,scan,verify}``.

Exit codes: 0 success, 2 input error, 3 numerical failure, 4 failed verification.
Output is assembled completely before anything is printed.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path

from . import bounds, verify
from .energy import (
    general_randic_incidence_energy,
    incidence_energy,
    randic_incidence_energy,
    randic_index,
)
from .extremal import explore_min_tree, rank_trees, records_csv, scan_corpus, write_tree_csvs
from .formats import parse_graph6, read_edge_list, write_graph6
from .graph import (
    Graph,
    GraphError,
    gen_complete,
    gen_complete_bipartite,
    gen_cycle,
    gen_path,
    gen_star,
)

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC, EXIT_VERIFY = 0, 2, 3, 4

_GENERATOR = re.compile(r"^([KSPC])(\d+)(?:,(\d+))?$", re.IGNORECASE)


class InputError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    tolerance: float = 1e-9
    output_format: str = "table"
    alpha: float | None = None
    seed: int | None = None

    def __post_init__(self):
        if not self.tolerance > 0:
            raise InputError("--tol must be positive")


def fmt(x) -> str:
    if isinstance(x, bool) or x is None:
        return str(x)
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


def _num(x: float) -> float:
    return float(f"{x:.12g}")


def graph_from_spec(text: str) -> Graph:
    """Generator spec (K5, S7, P4, C6, K3,4), edge-list file path, or graph6 string."""
    s = text.strip()
    m = _GENERATOR.match(s)
    if m:
        kind, a, b = m.group(1).upper(), int(m.group(2)), m.group(3)
        if b is not None:
            if kind != "K":
                raise GraphError(f"only K takes two sizes: {s!r}")
            return gen_complete_bipartite(a, int(b))
        return {"K": gen_complete, "S": gen_star, "P": gen_path, "C": gen_cycle}[kind](a)
    if Path(s).is_file():
        return read_edge_list(s)
    return parse_graph6(s)


def _sources(args) -> list[tuple[str, Graph]]:
    if args.stdin:
        items = [ln.strip() for ln in sys.stdin if ln.strip() and not ln.lstrip().startswith("#")]
    elif args.source:
        items = [args.source]
    else:
        raise InputError("no input graph: give a source argument or --stdin")
    return [(item, graph_from_spec(item)) for item in items]


def _table(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[fmt(x) for x in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(lines) + "\n"


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(x) for x in row])
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- commands -----------------------------------------------------------------

def cmd_compute(args, cfg: RunConfig) -> str:
    records = []
    for label, g in _sources(args):
        rie = randic_incidence_energy(g)
        rec = {
            "graph": label,
            "graph6": write_graph6(g) if g.n <= 62 else None,
            "n": g.n,
            "m": g.m,
            "i_re": _num(rie.value),
            "ie": _num(incidence_energy(g).value),
            "randic_index": _num(randic_index(g)),
            "sigma": [_num(x) for x in rie.sigma],
        }
        if cfg.alpha is not None:
            gen = general_randic_incidence_energy(g, cfg.alpha)
            rec["alpha"] = cfg.alpha
            rec["general_energy"] = _num(gen.value)
            if gen.metadata.get("degenerate_alpha"):
                rec["note"] = "degenerate alpha=0 (plain incidence matrix)"
        records.append(rec)
    if cfg.output_format == "json":
        return _json(records)
    header = ["graph", "n", "m", "i_re", "ie", "randic_index"]
    if cfg.alpha is not None:
        header += ["alpha", "general_energy"]
    rows = [[r[h] for h in header] for r in records]
    if cfg.output_format == "csv":
        return _csv(header + ["sigma"], [row + [";".join(fmt(x) for x in r["sigma"])] for row, r in zip(rows, records)])
    out = _table(header, rows)
    for r in records:
        out += f"sigma({r['graph']}): " + " ".join(fmt(x) for x in r["sigma"]) + "\n"
    return out


def cmd_bounds(args, cfg: RunConfig) -> str:
    rows = []
    for label, g in _sources(args):
        g6 = write_graph6(g) if g.n <= 62 else None
        for name, rep in bounds.applicable_checks(g, eq_tol=cfg.tolerance).items():
            if isinstance(rep, str):
                rows.append({"theorem": name, "graph": label, "graph6": g6, "n": g.n, "m": g.m,
                             "lhs": None, "rhs": None, "holds": None, "tight": None, "status": rep})
            else:
                rows.append({"theorem": name, "graph": label, "graph6": g6, "n": g.n, "m": g.m,
                             "lhs": _num(rep.lhs), "rhs": _num(rep.rhs), "holds": rep.holds,
                             "tight": rep.tight, "status": "checked"})
    if cfg.output_format == "json":
        return _json(rows)
    header = ["theorem", "graph6", "n", "m", "lhs", "rhs", "holds", "tight", "status"]
    table_rows = [[r[h] if r[h] is not None else "" for h in header] for r in rows]
    return (_csv if cfg.output_format == "csv" else _table)(header, table_rows)


def _parse_range(args) -> list[int]:
    if args.n is not None:
        return [args.n]
    if args.range:
        m = re.fullmatch(r"(\d+)\.\.(\d+)", args.range)
        if not m or int(m.group(1)) > int(m.group(2)):
            raise InputError(f"--range expects A..B with A <= B, got {args.range!r}")
        return list(range(int(m.group(1)), int(m.group(2)) + 1))
    raise InputError("trees needs --n or --range")


def cmd_trees(args, cfg: RunConfig) -> str:
    ns = _parse_range(args)
    header = ["n", "count_trees", "max_graph6", "max_i_re", "max_is_star", "max_unique",
              "min_graph6", "min_i_re", "path_is_min"]
    out_dir = args.out_dir or ("." if cfg.output_format == "csv" else None)
    if out_dir is not None:
        summaries = write_tree_csvs(ns, out_dir, workers=args.workers)
        body = ""
    else:
        summaries, body = [], ""
        for n in ns:
            records, s = rank_trees(n, workers=args.workers)
            summaries.append(s)
            if cfg.output_format == "table":
                body += _table(["rank", "graph6", "n", "i_re"], [[r.rank, r.graph6, r.n, r.i_re] for r in records])
            else:
                body += records_csv(records)
    rows = [[s.n, s.count_trees, s.max_record.graph6, s.max_record.i_re, s.max_is_star, s.max_unique,
             s.min_record.graph6, s.min_record.i_re, s.path_is_min] for s in summaries]
    if cfg.output_format == "json":
        return _json([dict(zip(header, [_num(x) if isinstance(x, float) else x for x in row])) for row in rows])
    if cfg.output_format == "csv":
        return _csv(header, rows)
    return body + _table(header, rows)


def cmd_explore(args, cfg: RunConfig) -> str:
    reports = explore_min_tree(_parse_range(args), workers=args.workers)
    header = ["n", "count_trees", "min_i_re", "argmin", "path_graph6", "path_i_re", "path_rank", "path_is_min"]
    rows = [[r.n, r.count_trees, r.min_value, " ".join(r.argmin), r.path_graph6, r.path_value,
             r.path_rank, r.path_is_min] for r in reports]
    if cfg.output_format == "json":
        return _json([dict(zip(header, [_num(x) if isinstance(x, float) else x for x in row])) for row in rows])
    return (_csv if cfg.output_format == "csv" else _table)(header, rows)


def cmd_scan(args, cfg: RunConfig) -> str:
    if args.stdin:
        lines = sys.stdin.read().splitlines()
    elif args.source:
        lines = Path(args.source).read_text().splitlines()
    else:
        raise InputError("scan needs a corpus file or --stdin")
    out_rows = []
    for row in scan_corpus(lines):
        base = {"line": row["line"], "graph6": row["graph6"], "n": row.get("n"), "m": row.get("m"),
                "i_re": _num(row["i_re"]) if "i_re" in row else None, "error": row.get("error")}
        reps = row.get("reports", {})
        if not reps:
            out_rows.append({**base, "theorem": None, "lhs": None, "rhs": None, "holds": None,
                             "tight": None, "status": "error"})
        for name, rep in reps.items():
            if isinstance(rep, str):
                out_rows.append({**base, "theorem": name, "lhs": None, "rhs": None, "holds": None,
                                 "tight": None, "status": rep})
            else:
                out_rows.append({**base, "theorem": name, "lhs": _num(rep.lhs), "rhs": _num(rep.rhs),
                                 "holds": rep.holds, "tight": rep.tight, "status": "checked"})
    if cfg.output_format == "json":
        return _json(out_rows)
    header = ["line", "graph6", "n", "m", "i_re", "theorem", "lhs", "rhs", "holds", "tight", "status", "error"]
    rows = [[r[h] if r[h] is not None else "" for h in header] for r in out_rows]
    return (_csv if cfg.output_format == "csv" else _table)(header, rows)


def cmd_verify(args, cfg: RunConfig) -> tuple[str, int]:
    seed = cfg.seed if cfg.seed is not None else 0
    results = verify.run_all(seed, only=args.criteria)
    lines = [f"{'PASS' if ok else 'FAIL'}  {name}: {detail}" for name, ok, detail in results]
    failed = sum(1 for _, ok, _ in results if not ok)
    lines.append(f"{len(results) - failed}/{len(results)} criteria passed (seed {seed})")
    return "\n".join(lines) + "\n", (EXIT_VERIFY if failed else EXIT_OK)


# -- entry point --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-9, help="equality tolerance (default 1e-9)")
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--alpha", type=float, default=None, help="exponent for the general energy")
    common.add_argument("--seed", type=int, default=None, help="seed for random corpora")

    p = argparse.ArgumentParser(prog="randic-incidence", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    for name, help_ in (("compute", "energies and singular values of a graph"),
                        ("bounds", "check every applicable bound")):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("source", nargs="?", help="graph6 string, edge-list file, or K5/S7/P4/C6/K3,4")
        sp.add_argument("--stdin", action="store_true", help="read newline-delimited graph6 from stdin")

    for name, help_ in (("trees", "rank all n-vertex trees by energy"),
                        ("explore", "locate the path among minimal-energy trees")):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("--n", type=int, default=None)
        sp.add_argument("--range", default=None, help="A..B")
        sp.add_argument("--workers", type=int, default=1)
        if name == "trees":
            sp.add_argument("--out-dir", default=None, help="write trees_n<N>.csv files here")

    sp = sub.add_parser("scan", parents=[common], help="check a graph6 corpus line by line")
    sp.add_argument("source", nargs="?", help="corpus file (newline-delimited graph6)")
    sp.add_argument("--stdin", action="store_true")

    sp = sub.add_parser("verify", parents=[common], help="run the self-verification suite")
    sp.add_argument("--criteria", default=None, help="comma-separated criterion numbers (default: all)")
    return p


COMMANDS = {
    "compute": cmd_compute,
    "bounds": cmd_bounds,
    "trees": cmd_trees,
    "explore": cmd_explore,
    "scan": cmd_scan,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(args.tol, args.format, args.alpha, args.seed)
        result = COMMANDS[args.command](args, cfg)
    except (InputError, GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ArithmeticError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    sys.stdout.write(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
