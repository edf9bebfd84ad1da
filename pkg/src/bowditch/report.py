"""Input parsing and JSON/CSV rendering of verdicts, certificates and scans."""

from __future__ import annotations

import csv
import io
import json

from .farey import Edge, Region, Vertex, primitive_word
from .geometry import INFINITY, End, format_length, parse_length
from .recognition import (
    Bowditch,
    Budget,
    Constants,
    EndpointCoincidence,
    FiniteLevelSet,
    GrowthConstants,
    LevelRegion,
    NonHyperbolicPrimitive,
    NotBowditch,
    Reducible,
    Representation,
    SinkCertificate,
)
from .words import ALPHABET, canonical_form


class InputError(ValueError):
    pass


# ---- input


def read_json(path: str) -> dict:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError(f"{path} must hold a JSON object")
    return doc


def _check_matrix(m, backend: str):
    if not (isinstance(m, list) and len(m) == 2 and all(isinstance(r, list) and len(r) == 2 for r in m)):
        raise InputError("matrices are 2x2 row-major arrays")
    for row in m:
        for v in row:
            if backend == "plane" and not isinstance(v, (str, int, float)):
                raise InputError("plane entries are decimal strings")
            if backend == "space3" and not (isinstance(v, list) and len(v) == 2):
                raise InputError("space3 entries are [re, im] pairs")


def space_options(doc: dict, precision_bits: int | None = None) -> dict:
    opts = {}
    if "delta" in doc:
        opts["delta"] = doc["delta"]
    if "boundary_tolerance" in doc:
        opts["boundary_tolerance"] = float(doc["boundary_tolerance"])
    if precision_bits is not None:
        opts["precision_bits"] = precision_bits
    return opts


def build_representation(doc: dict, precision_bits: int | None = None) -> Representation:
    backend = doc.get("backend")
    if backend not in ("plane", "space3", "cayley_tree"):
        raise InputError(f"unknown backend {backend!r}")
    if "A" not in doc or "B" not in doc:
        raise InputError("input needs images A and B")
    a, b = doc["A"], doc["B"]
    if backend == "cayley_tree":
        for w in (a, b):
            if not isinstance(w, str) or any(c not in ALPHABET for c in w):
                raise InputError("tree images are words over a, b, A, B")
    else:
        _check_matrix(a, backend)
        _check_matrix(b, backend)
    try:
        opts = space_options(doc, precision_bits)
        if "delta" in opts and backend != "cayley_tree":
            opts["delta"] = parse_length(str(opts["delta"]))
        return Representation.build(backend, a, b, **opts)
    except (ValueError, TypeError, ArithmeticError) as exc:
        raise InputError(str(exc)) from exc


# ---- rendering


def _num(x) -> str:
    return format_length(x)


def boundary_str(xi) -> str:
    if xi is INFINITY:
        return "inf"
    if isinstance(xi, End):
        return str(xi)
    if xi.imag == 0:
        return _num(xi.real)
    return f"{_num(xi.real)}{'+' if xi.imag >= 0 else '-'}{_num(abs(xi.imag))}i"


def _edge(e: Edge) -> list[str]:
    return [str(e.x), str(e.y)]


def _growth(g: GrowthConstants) -> dict:
    return {"N": _num(g.N), "k": _num(g.k), "d_bo": _num(g.d_bo), "d_po": _num(g.d_po)}


def certificate_dict(cert) -> dict:
    if isinstance(cert, SinkCertificate):
        return {
            "kind": "sink",
            "vertex": [str(r) for r in cert.vertex.regions],
            "lengths": [_num(x) for x in cert.lengths],
            "trail": [_edge(e) for e in cert.trail],
        }
    return {
        "kind": "finite-level-set",
        "start": _edge(cert.start),
        "size": len(cert.regions),
        "regions": [
            {
                "slope": str(lr.region),
                "word": str(primitive_word(lr.region)),
                "partner": str(lr.partner),
                "length": _num(lr.length),
                "n_minus": lr.n_minus,
                "n_plus": lr.n_plus,
                "plus": _growth(lr.plus),
                "minus": _growth(lr.minus),
            }
            for lr in cert.regions
        ],
    }


def witness_dict(w) -> dict:
    if isinstance(w, NonHyperbolicPrimitive):
        return {"kind": "non-hyperbolic-primitive", "slope": str(w.region), "word": str(primitive_word(w.region)), "length": _num(w.length)}
    if isinstance(w, Reducible):
        return {"kind": "reducible", "point": boundary_str(w.point), "detail": w.detail}
    if isinstance(w, EndpointCoincidence):
        return {"kind": "endpoint-coincidence", "basis": [str(r) for r in w.basis], "side": w.side}
    raise TypeError(type(w).__name__)


def verdict_dict(verdict, rep: Representation, consts: Constants, budget: Budget) -> dict:
    out = {
        "verdict": verdict.label,
        "backend": rep.params.model_id,
        "constants": {"delta": _num(consts.delta), "C": _num(consts.C_big), "K": _num(consts.K_threshold)},
        "mode": consts.mode,
        "budget": {"limit": budget.limit, "used": budget.used},
        "precision_bits": rep.params.precision_bits,
    }
    if isinstance(verdict, Bowditch):
        out["certificate"] = certificate_dict(verdict.certificate)
    elif isinstance(verdict, NotBowditch):
        out["witness"] = witness_dict(verdict.witness)
    else:
        out["reason"] = verdict.reason
        out["frontier"] = [str(x) for x in verdict.frontier]
    return out


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def level_set_csv(verdict) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["slope", "word", "length", "n_minus", "n_plus"])
    if isinstance(verdict, Bowditch) and isinstance(verdict.certificate, FiniteLevelSet):
        for lr in verdict.certificate.regions:
            word = canonical_form(primitive_word(lr.region))
            out.writerow([str(lr.region), str(word), _num(lr.length), lr.n_minus, lr.n_plus])
    return buf.getvalue()


def rows_csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(header)
    out.writerows(rows)
    return buf.getvalue()


# ---- reading certificates back


def _parse_num(space, text: str):
    if space.model_id == "cayley_tree":
        return int(text)
    return space.ctx.mpf(text)


def _parse_growth(space, d: dict, side: str) -> GrowthConstants:
    return GrowthConstants(*(_parse_num(space, d[k]) for k in ("N", "k")), side, *(_parse_num(space, d[k]) for k in ("d_bo", "d_po")))


def verdict_from_dict(doc: dict, space) -> Bowditch:
    """Rebuild a Bowditch verdict from its JSON form for re-verification."""
    try:
        cert = doc["certificate"]
        if cert["kind"] == "sink":
            vertex = Vertex.of(*(Region.parse(s) for s in cert["vertex"]))
            lengths = tuple(_parse_num(space, s) for s in cert["lengths"])
            trail = tuple(Edge(Region.parse(x), Region.parse(y)) for x, y in cert["trail"])
            parsed = SinkCertificate(vertex, lengths, trail)
        elif cert["kind"] == "finite-level-set":
            start = Edge(*(Region.parse(s) for s in cert["start"]))
            regions = tuple(
                LevelRegion(
                    Region.parse(r["slope"]),
                    Region.parse(r["partner"]),
                    _parse_num(space, r["length"]),
                    int(r["n_minus"]),
                    int(r["n_plus"]),
                    _parse_growth(space, r["plus"], "plus"),
                    _parse_growth(space, r["minus"], "minus"),
                )
                for r in cert["regions"]
            )
            parsed = FiniteLevelSet(start, regions)
        else:
            raise InputError(f"unknown certificate kind {cert['kind']!r}")
        return Bowditch(parsed, doc.get("mode", "heuristic"))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"malformed certificate: {exc}") from exc


def constants_from_dict(doc: dict, space) -> Constants:
    # the printed C is rounded, so the mode is taken from the report rather than re-derived
    c = doc["constants"]
    mode = doc.get("mode", "heuristic")
    if mode not in ("certified", "heuristic"):
        raise InputError(f"unknown mode {mode!r}")
    return Constants(space.delta, _parse_num(space, c["C"]), _parse_num(space, c["K"]), mode)


__all__ = [
    "InputError",
    "build_representation",
    "certificate_dict",
    "constants_from_dict",
    "dumps",
    "level_set_csv",
    "read_json",
    "rows_csv",
    "verdict_dict",
    "verdict_from_dict",
    "witness_dict",
]
