"""Command-line front end.

    bowditch certify --input rep.json [--c-override 5] [--output report.json]
    bowditch scan --input grid.json --format csv --jobs 4
    bowditch verify-certificate --input rep.json --certificate report.json

Exit status: 0 when a verdict (of any kind) was produced, 1 when a
certificate fails re-verification, 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import oracle, report
from .geometry import SpaceParams, format_length, make_space, parse_length
from .recognition import (
    Budget,
    Constants,
    InfiniteEvidence,
    Representation,
    all_passed,
    certify,
    tree_T,
    verify_certificate,
)
from .recognition.search import DEFAULT_BUDGET
from .report import InputError

COMMANDS = ("certify", "scan", "oracle", "dump-tree", "dump-levelset", "check-identities", "verify-certificate")


def parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bowditch", description="Recognize Bowditch representations of F2.")
    p.add_argument("command_pos", nargs="?", choices=COMMANDS, metavar="command")
    p.add_argument("--command", choices=COMMANDS)
    p.add_argument("--input", required=True, help="representation (or grid) JSON file")
    p.add_argument("--c-override", help="threshold C; below 432 delta the run is heuristic")
    p.add_argument("--k-override", help="threshold K for the arc tree (default C + delta)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--precision-bits", type=int, default=None)
    p.add_argument("--output", help="write here instead of stdout")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--certificate", help="report to re-check (verify-certificate)")
    p.add_argument("--max-length", type=int, default=14, help="word-length cap for oracle scans")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for grid scans")
    return p


def _constants(delta, c_override, k_override) -> Constants:
    try:
        C = parse_length(c_override) if c_override is not None else None
        K = parse_length(k_override) if k_override is not None else None
    except ValueError as exc:
        raise InputError(f"bad threshold: {exc}") from exc
    if delta == 0:
        C = None if C is None else (int(C) if C == int(C) else C)
        K = None if K is None else (int(K) if K == int(K) else K)
    return Constants.make(delta, C, K)


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---- commands


def cmd_certify(args, doc, levelset_only=False) -> int:
    rep = report.build_representation(doc, args.precision_bits)
    consts = _constants(rep.delta, args.c_override, args.k_override)
    budget = Budget(args.budget)
    verdict = certify(rep, consts, budget)
    if args.format == "csv":
        _emit(report.level_set_csv(verdict), args.output)
    elif levelset_only:
        doc = report.verdict_dict(verdict, rep, consts, budget)
        cert = doc.get("certificate", {})
        rows = [{k: r[k] for k in ("slope", "word", "length")} for r in cert.get("regions", [])]
        _emit(report.dumps({"verdict": doc["verdict"], "regions": rows}), args.output)
    else:
        _emit(report.dumps(report.verdict_dict(verdict, rep, consts, budget)), args.output)
    print(f"verdict: {verdict.label}", file=sys.stderr)
    return 0


def _scan_point(job):
    backend, x, y, z, c, k, limit, bits = job
    space = make_space(SpaceParams(backend, **({"precision_bits": bits} if bits else {})))
    try:
        A, B = oracle.matrices_from_traces(space, x, y, z)
    except (ValueError, ArithmeticError) as exc:
        return [x, y, z, "invalid", str(exc)]
    rep = Representation(space, A, B)
    consts = _constants(rep.delta, c, k)
    verdict = certify(rep, consts, Budget(limit))
    detail = ""
    if hasattr(verdict, "certificate"):
        cert = verdict.certificate
        detail = f"{len(cert.regions)} regions" if hasattr(cert, "regions") else f"sink {cert.vertex}"
    elif hasattr(verdict, "witness"):
        detail = report.witness_dict(verdict.witness)["kind"]
    else:
        detail = verdict.reason
    return [x, y, z, verdict.label, detail]


def _axis(bounds):
    lo, hi, n = bounds
    lo, hi, n = parse_length(str(lo)), parse_length(str(hi)), int(n)
    if n < 1:
        raise InputError("grid axes need at least one point")
    return [format_length(lo + (hi - lo) * i / max(n - 1, 1), 12) for i in range(n)]


def cmd_scan(args, doc) -> int:
    backend = doc.get("backend")
    if backend not in ("plane", "space3"):
        raise InputError("grid scans need a plane or space3 backend")
    try:
        grid = doc["grid"]
        xs, ys = _axis(grid["trA"]), _axis(grid["trB"])
        z = str(grid["trAB"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad grid: {exc}") from exc
    jobs = [(backend, x, y, z, args.c_override, args.k_override, args.budget, args.precision_bits) for x in xs for y in ys]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_scan_point, jobs, chunksize=4))
    else:
        rows = [_scan_point(j) for j in jobs]
    header = ["trA", "trB", "trAB", "verdict", "detail"]
    if args.format == "csv":
        _emit(report.rows_csv(header, rows), args.output)
    else:
        _emit(report.dumps({"points": [dict(zip(header, r)) for r in rows]}), args.output)
    return 0


def cmd_oracle(args, doc) -> int:
    rep = report.build_representation(doc, args.precision_bits)
    consts = _constants(rep.delta, args.c_override, args.k_override)
    scan = oracle.bq_scan(rep, args.max_length, consts.C_big)
    _emit(scan.to_csv() if args.format == "csv" else scan.to_json(), args.output)
    return 0


def cmd_dump_tree(args, doc) -> int:
    rep = report.build_representation(doc, args.precision_bits)
    consts = _constants(rep.delta, args.c_override, args.k_override)
    tree = tree_T(rep, consts.K_threshold, Budget(args.budget))
    if isinstance(tree, InfiniteEvidence):
        out = {"finite": False, "kind": tree.kind, "region": str(tree.region) if tree.region else None,
               "side": tree.side, "frontier": [str(x) for x in tree.frontier]}
        rows = []
    else:
        edges = tree.sorted_edges()
        out = {"finite": True, "K": format_length(consts.K_threshold), "edges": [[str(e.x), str(e.y)] for e in edges]}
        rows = [[str(e.x), str(e.y)] for e in edges]
    _emit(report.rows_csv(["x", "y"], rows) if args.format == "csv" else report.dumps(out), args.output)
    return 0


def cmd_check_identities(args, doc) -> int:
    rep = report.build_representation(doc, args.precision_bits)
    if rep.exact:
        raise InputError("trace identities need a plane or space3 representation")
    sp = rep.space
    A, B = rep.images
    edge, vertex = oracle.trace_identity_check(sp, A, B)
    comm = sp.compose(sp.compose(A, B), sp.compose(sp.invert(A), sp.invert(B)))
    out = {
        "edge_residual": format_length(edge, 6),
        "vertex_residual": format_length(vertex, 6),
        "traces": {
            name: report.boundary_str(sp.trace(g))
            for name, g in (("A", A), ("B", B), ("AB", sp.compose(A, B)), ("[A,B]", comm))
        },
    }
    _emit(report.dumps(out), args.output)
    return 0


def cmd_verify(args, doc) -> int:
    if not args.certificate:
        raise InputError("verify-certificate needs --certificate")
    rep = report.build_representation(doc, args.precision_bits)
    cert_doc = report.read_json(args.certificate)
    if "certificate" not in cert_doc:
        raise InputError("the report carries no Bowditch certificate")
    verdict = report.verdict_from_dict(cert_doc, rep.space)
    consts = report.constants_from_dict(cert_doc, rep.space)
    checks = verify_certificate(rep, verdict, consts)
    out = {"passed": all_passed(checks), "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks]}
    _emit(report.dumps(out), args.output)
    return 0 if out["passed"] else 1


HANDLERS = {
    "certify": cmd_certify,
    "scan": cmd_scan,
    "oracle": cmd_oracle,
    "dump-tree": cmd_dump_tree,
    "dump-levelset": lambda args, doc: cmd_certify(args, doc, levelset_only=True),
    "check-identities": cmd_check_identities,
    "verify-certificate": cmd_verify,
}


def main(argv=None) -> int:
    args = parser().parse_args(argv)
    command = args.command or args.command_pos
    if command is None:
        print("bowditch: a command is required", file=sys.stderr)
        return 2
    if args.budget < 1:
        print("bowditch: --budget must be at least 1", file=sys.stderr)
        return 2
    start = time.perf_counter()
    try:
        doc = report.read_json(args.input)
        status = HANDLERS[command](args, doc)
    except InputError as exc:
        print(f"bowditch: {exc}", file=sys.stderr)
        return 2
    # timing goes to stderr so that reports stay byte-identical between runs
    print(f"wall time: {time.perf_counter() - start:.3f} s", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
