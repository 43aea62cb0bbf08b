"""Command-line interface.

Subcommands::

    compute    [--graph6 STR | --edge-list PATH] [--json]
    sweep      --in PATH --out PATH [--resume] [--with-c] [--max-n K] [--timing]
    enumerate  --graph6 STR --k K --kind pds
    verify     --suite NAME
    family     --spec STR [--emit graph6|edges]

Exit codes: 0 success (for ``verify``: all cases passed), 1 verify failures,
2 unusable input / unknown suite, 3 solver size guard.  ``sweep`` always
exits 0 once the output is written: per-line parse errors become error
records instead of aborting the run.

The sweep output is JSONL, one record per input line, in input order, with
a fixed key order so identical inputs and flags give byte-identical files
(``--timing`` records real elapsed milliseconds and is therefore excluded
from that guarantee; without it ``elapsed_ms`` is 0).  Resuming counts the
lines already present in the output and continues from there.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Optional

from .coalition import Partition, PrcCertificate, partner_count
from .errors import PerfcoalError, TooLargeError
from .families import generate, parse_family_spec
from .graphs import (
    Graph,
    encode_graph6,
    format_edge_list,
    is_connected,
    parse_edge_list,
    parse_graph6,
    structure_report,
    vertices_of,
)
from .solver import COALITION_MAX_N, SOLVE_MAX_N, coalition_number_bruteforce, prc_solve
from .domination import enumerate_perfect_dominating_sets
from .suites import SUITES, run_suite

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_USAGE = 2
EXIT_TOO_LARGE = 3


def certificate_to_json(cert: PrcCertificate) -> dict:
    """JSON form: sorted vertex arrays plus one role object per block."""
    roles = []
    for r in cert.roles:
        if r is None:
            roles.append({"kind": "singleton_dominating"})
        else:
            roles.append({"kind": "partner", "partner": r})
    return {"blocks": [vertices_of(b) for b in cert.partition.blocks], "roles": roles}


def certificate_from_json(doc: dict) -> PrcCertificate:
    blocks = Partition.from_vertex_lists(doc["blocks"])
    roles = []
    for r in doc["roles"]:
        if r["kind"] == "singleton_dominating":
            roles.append(None)
        elif r["kind"] == "partner":
            roles.append(int(r["partner"]))
        else:
            raise ValueError(f"unknown role kind {r['kind']!r}")
    return PrcCertificate(partition=blocks, roles=tuple(roles))


def _load_graph(args) -> Graph:
    if args.graph6 is not None:
        return parse_graph6(args.graph6)
    text = Path(args.edge_list).read_text()
    return parse_edge_list(text)


def _cmd_compute(args) -> int:
    try:
        g = _load_graph(args)
    except (PerfcoalError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        res = prc_solve(g)
    except TooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    doc: dict = {"graph6": encode_graph6(g), "n": g.n, "prc": res.prc}
    if res.certificate is not None:
        doc["certificate"] = certificate_to_json(res.certificate)
    doc["stats"] = {
        "nodes": res.stats.nodes,
        "partitions_tested": res.stats.partitions_tested,
        "elapsed_ms": int(res.stats.elapsed_s * 1000),
    }
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        print(f"graph6 {doc['graph6']}  n={g.n}  m={g.edge_count}  prc={res.prc}")
        if res.certificate is not None:
            for b, r in zip(res.certificate.partition.blocks, res.certificate.roles):
                role = "singleton dominating" if r is None else f"partner of block {r}"
                print(f"  block {vertices_of(b)}: {role}")
    return EXIT_OK


def _delta_bound_ok(g: Graph, cert: Optional[PrcCertificate]) -> bool:
    if cert is None:
        return True
    bound = structure_report(g).max_degree + (0 if is_connected(g) else 1)
    return all(
        partner_count(g, cert.partition, i) <= bound
        for i in range(len(cert.partition.blocks))
    )


def _sweep_record(raw: str, with_c: bool, max_n: int, timing: bool) -> dict:
    try:
        g = parse_graph6(raw)
    except PerfcoalError as exc:
        return {"graph6": raw, "error": str(exc)}
    if g.n > max_n:
        return {"graph6": encode_graph6(g), "n": g.n, "error": f"n={g.n} exceeds max-n {max_n}"}
    t0 = time.perf_counter()
    try:
        res = prc_solve(g)
    except TooLargeError as exc:
        return {"graph6": encode_graph6(g), "n": g.n, "error": str(exc)}
    c_number = None
    if with_c and g.n <= COALITION_MAX_N:
        c_number = coalition_number_bruteforce(g)
    elapsed_ms = int((time.perf_counter() - t0) * 1000) if timing else 0
    return {
        "graph6": encode_graph6(g),
        "n": g.n,
        "m": g.edge_count,
        "prc": res.prc,
        "c_number": c_number,
        "delta_bound_ok": _delta_bound_ok(g, res.certificate),
        "elapsed_ms": elapsed_ms,
    }


def _cmd_sweep(args) -> int:
    in_path = Path(args.in_path)
    out_path = Path(args.out_path)
    try:
        lines = in_path.read_text().splitlines()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    skip = 0
    if args.resume and out_path.exists():
        skip = len(out_path.read_text().splitlines())
    mode = "a" if args.resume and out_path.exists() else "w"
    done = 0
    with out_path.open(mode) as out:
        for idx, raw in enumerate(lines):
            if idx < skip:
                continue
            rec = _sweep_record(raw.strip(), args.with_c, args.max_n, args.timing)
            out.write(json.dumps(rec, separators=(",", ":")) + "\n")
            done += 1
    print(f"swept {done} line(s) (skipped {skip}) -> {out_path}", file=sys.stderr)
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    try:
        g = parse_graph6(args.graph6)
        sets = enumerate_perfect_dominating_sets(g, args.k)
    except PerfcoalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for s in sets:
        print(json.dumps(vertices_of(s)))
    return EXIT_OK


def _cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        rep = run_suite(name)
        print(rep.format())
        ok = ok and rep.passed
    return EXIT_OK if ok else EXIT_FAILURES


def _cmd_family(args) -> int:
    try:
        g = generate(parse_family_spec(args.spec))
    except PerfcoalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.emit == "graph6":
        print(encode_graph6(g))
    else:
        sys.stdout.write(format_edge_list(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="perfcoal", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="perfect coalition number of one graph")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", help="graph6 record")
    src.add_argument("--edge-list", help="path to an edge-list file ('n m' header)")
    c.add_argument("--json", action="store_true", help="emit the full JSON document")
    c.set_defaults(fn=_cmd_compute)

    s = sub.add_parser("sweep", help="compute over a graph6 stream, JSONL out")
    s.add_argument("--in", dest="in_path", required=True, help="graph6 stream, one record per line")
    s.add_argument("--out", dest="out_path", required=True, help="JSONL output path")
    s.add_argument("--resume", action="store_true", help="continue after existing output lines")
    s.add_argument("--with-c", dest="with_c", action="store_true",
                   help=f"also compute C(G) (guarded to n <= {COALITION_MAX_N})")
    s.add_argument("--max-n", dest="max_n", type=int, default=SOLVE_MAX_N,
                   help="emit an error record for larger graphs")
    s.add_argument("--timing", action="store_true",
                   help="record real elapsed_ms (breaks byte-for-byte reproducibility)")
    s.set_defaults(fn=_cmd_sweep)

    e = sub.add_parser("enumerate", help="list perfect dominating sets of one size")
    e.add_argument("--graph6", required=True)
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--kind", choices=["pds"], required=True)
    e.set_defaults(fn=_cmd_enumerate)

    v = sub.add_parser("verify", help="run an executable theorem suite")
    v.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    v.set_defaults(fn=_cmd_verify)

    f = sub.add_parser("family", help="generate a named family instance")
    f.add_argument("--spec", required=True, help="e.g. path:9, cycle:12, gdelta:4, t2:3,4,1")
    f.add_argument("--emit", choices=["graph6", "edges"], default="graph6")
    f.set_defaults(fn=_cmd_family)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
