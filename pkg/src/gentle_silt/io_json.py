"""JSON and DOT serialization for every file the command line reads or writes.

Writers are deterministic (sorted iteration, fixed key order, two-space
indent, trailing newline), so repeated runs with the same inputs produce
byte-identical files.  Readers validate against the schemas below and report
violations with JSON-pointer paths.

File kinds and their invariants:

* algebra: quiver + relations + optional arrow grades (omitted grade = 0).
* surface: alternating open/closed boundary points plus the dissection arcs.
  The closed point on the boundary edge leaving open point ``p`` is named
  ``p*``.  Arcs carry their endpoint and fan data; the embedding is pinned
  entirely by the fans, so the per-arc winding of the reduced representative
  is always 0.  The per-arc grade is the grade of its dual closed arc.
* curve: endpoint descriptors, crossed arc ids, and a winding number (the
  signed crossing count with a fixed spanning arc on the annulus, 0 on the
  disk).  The corner data of the curve is reconstructed from these; the
  reader rejects files that match no curve or more than one.  Curves without
  endpoints (closed curves, i.e. band objects) are structurally valid but no
  operation accepts them.
* complex: two-term complex of projectives.  d[i][j] is the component
  P1[i] -> P0[j], a list of {path, coef} terms whose paths run from P0[j] to
  P1[i] composed left to right; a lone term object or a literal 0 are also
  accepted on read.  Coefficients are ints or "num/den" strings.
* pairs: enumeration output (algebra, mode, bounds, the pairs, bound events).
* report: verification output (inputs, counts, per-pair records, failures,
  verdict).
"""

from __future__ import annotations

import itertools
import json
import os
import tempfile
from fractions import Fraction

import jsonschema

from .complexes import TwoTermComplex, cadd, make_complex
from .curves import (
    PermissibleCurve,
    curve_endpoints,
    permissible_curve,
    permissible_winding,
)
from .errors import InternalConsistencyError, StructuralError
from .quivers import GentlePresentation, classify_hereditary_type, presentation
from .silting import SupportTauTiltingPair, pair_from_obj, pair_to_obj
from .surfaces import Surface, assemble_surface, dissection_algebra

# -- schemas -------------------------------------------------------------------

_ARROW = {
    "type": "object",
    "required": ["id", "source", "target"],
    "properties": {
        "id": {"type": "string"},
        "source": {"type": "string"},
        "target": {"type": "string"},
        "grade": {"type": "integer"},
    },
    "additionalProperties": False,
}

ALGEBRA_SCHEMA = {
    "type": "object",
    "required": ["vertices", "arrows"],
    "properties": {
        "vertices": {"type": "array", "items": {"type": "string"}},
        "arrows": {"type": "array", "items": _ARROW},
        "relations": {
            "type": "array",
            "items": {
                "type": "array",
                "minItems": 2,
                "maxItems": 2,
                "items": {"type": "string"},
            },
        },
    },
    "additionalProperties": False,
}

_POINT = {
    "type": "object",
    "required": ["color", "id"],
    "properties": {
        "color": {"enum": ["open", "closed"]},
        "id": {"type": "string"},
        "extra": {"type": "boolean"},
    },
    "additionalProperties": False,
}

_ARC = {
    "type": "object",
    "required": ["id", "endpoints", "fan"],
    "properties": {
        "id": {"type": "string"},
        "endpoints": {
            "type": "array",
            "minItems": 2,
            "maxItems": 2,
            "items": {"type": "string"},
        },
        "fan": {
            "type": "array",
            "minItems": 2,
            "maxItems": 2,
            "items": {"type": "integer", "minimum": 0},
        },
        "winding": {"type": "integer"},
        "grade": {"type": "integer"},
    },
    "additionalProperties": False,
}

SURFACE_SCHEMA = {
    "type": "object",
    "required": ["schema", "kind", "boundary", "arcs"],
    "properties": {
        "schema": {"const": "gentle-silt/surface/1"},
        "kind": {"enum": ["disk", "annulus"]},
        "boundary": {
            "type": "array",
            "minItems": 1,
            "items": {"type": "array", "minItems": 2, "items": _POINT},
        },
        "arcs": {"type": "array", "minItems": 1, "items": _ARC},
    },
    "additionalProperties": False,
}

_CURVE_END = {
    "type": "object",
    "required": ["kind", "point"],
    "properties": {
        "kind": {"enum": ["marked", "extra"]},
        "point": {"type": "string"},
    },
    "additionalProperties": False,
}

CURVE_SCHEMA = {
    "type": "object",
    "required": ["crossings"],
    "properties": {
        "start": _CURVE_END,
        "end": _CURVE_END,
        "crossings": {"type": "array", "minItems": 1, "items": {"type": "string"}},
        "winding": {"type": "integer"},
    },
    "additionalProperties": False,
}

_COEF = {"type": ["integer", "string"], "pattern": "^-?[0-9]+(/[1-9][0-9]*)?$"}

_TERM = {
    "type": "object",
    "required": ["path", "coef"],
    "properties": {
        "path": {"type": "array", "items": {"type": "string"}},
        "coef": _COEF,
    },
    "additionalProperties": False,
}

_ENTRY = {"anyOf": [{"type": "array", "items": _TERM}, _TERM, {"const": 0}]}

COMPLEX_SCHEMA = {
    "type": "object",
    "required": ["P1", "P0", "d"],
    "properties": {
        "schema": {"const": "gentle-silt/complex/1"},
        "P1": {"type": "array", "items": {"type": "string"}},
        "P0": {"type": "array", "items": {"type": "string"}},
        "d": {"type": "array", "items": {"type": "array", "items": _ENTRY}},
    },
    "additionalProperties": False,
}

_STRING_SPEC = {
    "type": "object",
    "required": ["verts", "links"],
    "properties": {
        "verts": {"type": "array", "minItems": 1, "items": {"type": "string"}},
        "links": {
            "type": "array",
            "items": {
                "type": "array",
                "minItems": 2,
                "maxItems": 2,
                "prefixItems": [{"type": "string"}, {"enum": [1, -1]}],
                "items": False,
            },
        },
    },
    "additionalProperties": False,
}

_PAIR = {
    "type": "object",
    "required": ["strings", "projs"],
    "properties": {
        "strings": {"type": "array", "items": _STRING_SPEC},
        "projs": {"type": "array", "items": {"type": "string"}},
    },
    "additionalProperties": False,
}

_EVENT = {
    "type": "object",
    "required": ["pair", "slot", "string_bound"],
    "properties": {
        "pair": _PAIR,
        "slot": {"type": "integer", "minimum": 0},
        "string_bound": {"type": "integer", "minimum": 1},
    },
    "additionalProperties": False,
}

PAIRS_SCHEMA = {
    "type": "object",
    "required": ["schema", "algebra", "type", "mode", "string_bound", "count", "pairs"],
    "properties": {
        "schema": {"const": "gentle-silt/pairs/1"},
        "algebra": ALGEBRA_SCHEMA,
        "type": {"type": "string"},
        "mode": {"type": "string"},
        "string_bound": {"type": "integer", "minimum": 1},
        "count": {"type": "integer", "minimum": 0},
        "pairs": {"type": "array", "items": _PAIR},
        "events": {"type": "array", "items": _EVENT},
    },
    "additionalProperties": False,
}

_FACTOR = {
    "type": "array",
    "minItems": 2,
    "maxItems": 2,
    "prefixItems": [{"enum": ["A", "Atilde"]}, {"type": "integer", "minimum": 1}],
    "items": False,
}

_RECORD = {
    "type": "object",
    "required": [
        "pair",
        "polygons",
        "max_arc_edges",
        "max_total_edges",
        "gldim_bound",
        "endo",
        "gldim",
        "gldim_formula",
    ],
    "properties": {
        "pair": _PAIR,
        "polygons": {"type": "integer", "minimum": 1},
        "max_arc_edges": {"type": "integer", "minimum": 1},
        "max_total_edges": {"type": "integer", "minimum": 2},
        "gldim_bound": {"type": "integer", "minimum": 0},
        "endo": {"type": "string"},
        "gldim": {"type": "integer", "minimum": 0},
        "gldim_formula": {"type": "integer", "minimum": 0},
        "form": {"type": "string"},
        "factors": {"type": "array", "items": _FACTOR},
    },
    "additionalProperties": False,
}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["schema", "inputs", "counts", "records", "failures", "verdict"],
    "properties": {
        "schema": {"const": "gentle-silt/report/1"},
        "inputs": {
            "type": "object",
            "required": ["algebra", "type", "mode", "string_bound", "sample"],
            "properties": {
                "algebra": ALGEBRA_SCHEMA,
                "type": {"type": "string"},
                "mode": {"type": "string"},
                "string_bound": {"type": "integer", "minimum": 1},
                "sample": {"type": "integer", "minimum": 1},
            },
            "additionalProperties": False,
        },
        "counts": {
            "type": "object",
            "required": ["pairs", "checked"],
            "properties": {
                "pairs": {"type": "integer", "minimum": 0},
                "checked": {"type": "integer", "minimum": 0},
            },
            "additionalProperties": False,
        },
        "records": {"type": "array", "items": _RECORD},
        "events": {"type": "array", "items": _EVENT},
        "failures": {"type": "array", "items": {"type": "string"}},
        "verdict": {"enum": ["pass", "fail"]},
    },
    "additionalProperties": False,
}


def validate_obj(obj, schema, what: str) -> None:
    """Schema-check a parsed file; violations report a JSON-pointer path."""
    checker = jsonschema.Draft202012Validator(schema)
    err = jsonschema.exceptions.best_match(checker.iter_errors(obj))
    if err is not None:
        ptr = "/" + "/".join(str(x) for x in err.absolute_path)
        raise StructuralError(f"{what} schema violation at {ptr}: {err.message}")


# -- files ----------------------------------------------------------------------


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def write_text(path: str, text: str) -> None:
    """Atomic write: no reader ever sees a half-written file."""
    target = os.path.abspath(path)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(target), prefix=".tmp-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def write_json(path: str, obj) -> None:
    write_text(path, dumps(obj))


def read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise StructuralError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise StructuralError(f"{path} is not JSON: {exc}")


# -- algebras --------------------------------------------------------------------


def algebra_to_obj(p: GentlePresentation) -> dict:
    arrows = []
    for a in sorted(p.arrows, key=lambda a: a.id):
        row = {"id": a.id, "source": a.source, "target": a.target}
        if p.grades[a.id]:
            row["grade"] = p.grades[a.id]
        arrows.append(row)
    return {
        "vertices": sorted(p.vertices),
        "arrows": arrows,
        "relations": sorted([a, b] for a, b in p.relations),
    }


def algebra_from_obj(obj) -> GentlePresentation:
    validate_obj(obj, ALGEBRA_SCHEMA, "algebra")
    grades = {a["id"]: a["grade"] for a in obj["arrows"] if a.get("grade")}
    return presentation(
        obj["vertices"],
        [(a["id"], a["source"], a["target"]) for a in obj["arrows"]],
        [tuple(r) for r in obj.get("relations", [])],
        grades=grades,
    )


# -- surfaces --------------------------------------------------------------------


def _dot_name(p: str) -> str:
    return p + "*"


def surface_to_obj(s: Surface) -> dict:
    comps = []
    for comp in s.components:
        pts = []
        for p in comp:
            pts.append({"color": "open", "id": p, "extra": False})
            pts.append({"color": "closed", "id": _dot_name(p), "extra": s.dot_in_E(p)})
        comps.append(pts)
    arcs = []
    for v in sorted(s.arc_ends):
        (p0, k0), (p1, k1) = s.arc_ends[v]
        arcs.append(
            {
                "id": v,
                "endpoints": [p0, p1],
                "fan": [k0, k1],
                "winding": 0,
                "grade": 0,
            }
        )
    return {
        "schema": "gentle-silt/surface/1",
        "kind": s.kind,
        "boundary": comps,
        "arcs": arcs,
    }


def _cyclic_eq(a, b) -> bool:
    if len(a) != len(b):
        return False
    a, b = list(a), list(b)
    return any(b[i:] + b[:i] == a for i in range(len(b)))


def surface_from_obj(obj) -> Surface:
    """Rebuild a Surface; the boundary data is cross-checked, not trusted.

    The dissection (arc endpoints and fans) is authoritative: faces, the
    topology, and the underlying algebra are derived from it, then compared
    against the declared kind, boundary order, and extra flags.
    """
    validate_obj(obj, SURFACE_SCHEMA, "surface")
    slot_arc = {}
    arc_ends = {}
    for i, arc in enumerate(obj["arcs"]):
        aid = arc["id"]
        if aid in arc_ends:
            raise StructuralError(f"duplicate arc id {aid}")
        if arc.get("winding", 0):
            raise StructuralError(
                "arcs are stored as reduced representatives; their winding is 0"
            )
        (p0, p1), (k0, k1) = arc["endpoints"], arc["fan"]
        if p0 == p1:
            raise StructuralError(f"arc {aid} has both ends at one point")
        for p, k in ((p0, k0), (p1, k1)):
            if (p, k) in slot_arc:
                raise StructuralError(f"two arcs claim fan slot {k} at {p}")
            slot_arc[(p, k)] = aid
        arc_ends[aid] = ((p0, k0), (p1, k1))
    fans = {}
    for p in {pt for pt, _ in slot_arc}:
        ks = sorted(k for pt, k in slot_arc if pt == p)
        if ks != list(range(len(ks))):
            raise StructuralError(f"fan positions at {p} are not 0..{len(ks) - 1}")
        fans[p] = tuple(slot_arc[(p, k)] for k in ks)

    opens = []
    declared_extra = {}
    for ci, comp in enumerate(obj["boundary"]):
        if len(comp) % 2:
            raise StructuralError(f"boundary component {ci} does not alternate")
        seq = []
        for j, pt in enumerate(comp):
            want = "open" if j % 2 == 0 else "closed"
            if pt["color"] != want:
                raise StructuralError(
                    f"boundary component {ci} does not alternate open/closed"
                )
            if want == "open":
                if pt.get("extra"):
                    raise StructuralError("open points are never extra")
                seq.append(pt["id"])
            else:
                declared_extra[comp[j - 1]["id"]] = bool(pt.get("extra", False))
        opens.append(seq)
    declared_pts = [p for seq in opens for p in seq]
    if sorted(declared_pts) != sorted(fans):
        raise StructuralError("boundary points and arc endpoints disagree")

    grades = {arc["id"]: arc.get("grade", 0) for arc in obj["arcs"]}
    pres, corner_arrow = dissection_algebra(fans, arc_ends, grades)
    try:
        surf = assemble_surface(pres, fans, arc_ends, corner_arrow)
    except (InternalConsistencyError, KeyError, IndexError) as exc:
        raise StructuralError(f"dissection does not close up: {exc}")
    if surf.kind != obj["kind"]:
        raise StructuralError(f"declared {obj['kind']}, assembled {surf.kind}")
    derived = [list(c) for c in surf.components]
    for seq in opens:
        if not any(_cyclic_eq(seq, d) for d in derived):
            raise StructuralError(
                "a declared boundary cycle does not match the dissection"
            )
    if len(opens) != len(derived):
        raise StructuralError("wrong number of boundary components")
    for p in surf.points():
        if declared_extra.get(p, False) != surf.dot_in_E(p):
            raise StructuralError(f"extra flag of the closed point after {p} is wrong")
    return surf


# -- curves ----------------------------------------------------------------------


def _curve_end_obj(end) -> dict:
    kind, p = end
    if kind == "dot":
        return {"kind": "extra", "point": _dot_name(p)}
    return {"kind": "marked", "point": p}


def curve_to_obj(surface: Surface, c: PermissibleCurve) -> dict:
    e0, e1 = curve_endpoints(surface, c)
    obj = {
        "start": _curve_end_obj(e0),
        "crossings": list(c.arcs),
        "end": _curve_end_obj(e1),
        "winding": permissible_winding(surface, c),
    }
    try:
        back = curve_from_obj(surface, obj)
    except StructuralError as exc:
        raise InternalConsistencyError(f"curve encoding is not invertible: {exc}")
    if back != c:
        raise InternalConsistencyError("curve encoding is not invertible")
    return obj


def curve_from_obj(surface: Surface, obj) -> PermissibleCurve:
    validate_obj(obj, CURVE_SCHEMA, "curve")
    if ("start" in obj) != ("end" in obj):
        raise StructuralError("an open curve needs both endpoints")
    if "start" not in obj:
        raise StructuralError(
            "a curve without endpoints encodes a band object; no operation "
            "accepts those"
        )
    arcs = tuple(obj["crossings"])
    for a in arcs:
        if a not in surface.arc_ends:
            raise StructuralError(f"unknown arc {a}")
    choices = []
    for i in range(len(arcs) - 1):
        pts = set()
        for p, _ in surface.arc_ends[arcs[i]]:
            fan = surface.fans[p]
            if arcs[i + 1] in fan and abs(fan.index(arcs[i + 1]) - fan.index(arcs[i])) == 1:
                pts.add(p)
        if not pts:
            raise StructuralError(
                f"crossings {i} and {i + 1} never meet as fan neighbours"
            )
        choices.append(sorted(pts))
    matches = []
    for corners in itertools.product(*choices):
        try:
            c = permissible_curve(surface, arcs, corners)
        except StructuralError:
            continue
        e0, e1 = curve_endpoints(surface, c)
        if _curve_end_obj(e0) != obj["start"] or _curve_end_obj(e1) != obj["end"]:
            continue
        if permissible_winding(surface, c) != obj.get("winding", 0):
            continue
        matches.append(c)
    if not matches:
        raise StructuralError("no permissible curve matches the file")
    if len(matches) > 1:
        raise StructuralError("curve data is ambiguous on this surface")
    return matches[0]


# -- complexes -------------------------------------------------------------------


def _coef_obj(x: Fraction):
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _coef_val(raw) -> Fraction:
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise StructuralError(f"bad coefficient {raw!r}: {exc}")


def complex_to_obj(S: TwoTermComplex) -> dict:
    rows = []
    for i in range(len(S.p1)):
        row = []
        for j in range(len(S.p0)):
            row.append(
                [
                    {"path": list(pa), "coef": _coef_obj(co)}
                    for pa, co in sorted(S.entry(i, j).items())
                ]
            )
        rows.append(row)
    return {
        "schema": "gentle-silt/complex/1",
        "P1": list(S.p1),
        "P0": list(S.p0),
        "d": rows,
    }


def complex_from_obj(pres: GentlePresentation, obj) -> TwoTermComplex:
    validate_obj(obj, COMPLEX_SCHEMA, "complex")

    def entry(cell):
        if cell == 0:
            return {}
        combo = {}
        for t in cell if isinstance(cell, list) else [cell]:
            combo = cadd(combo, {tuple(t["path"]): _coef_val(t["coef"])})
        return combo

    d = [[entry(cell) for cell in row] for row in obj["d"]]
    if len(d) != len(obj["P1"]) or any(len(r) != len(obj["P0"]) for r in d):
        raise StructuralError("differential shape is not |P1| x |P0|")
    return make_complex(pres, obj["P1"], obj["P0"], d)


# -- pairs and reports -------------------------------------------------------------


def pairs_to_obj(pres, mode, string_bound: int, pairs, events=()) -> dict:
    return {
        "schema": "gentle-silt/pairs/1",
        "algebra": algebra_to_obj(pres),
        "type": str(classify_hereditary_type(pres)),
        "mode": str(mode),
        "string_bound": string_bound,
        "count": len(pairs),
        "pairs": [pair_to_obj(p) for p in pairs],
        "events": list(events),
    }


def pairs_from_obj(obj) -> tuple:
    """(presentation, pairs, mode, string_bound) of an enumeration file."""
    validate_obj(obj, PAIRS_SCHEMA, "pairs")
    pres = algebra_from_obj(obj["algebra"])
    pairs = [pair_from_obj(po) for po in obj["pairs"]]
    if len(pairs) != obj["count"]:
        raise StructuralError("count field disagrees with the pair list")
    return pres, pairs, obj["mode"], obj["string_bound"]


def report_to_obj(report, pres, events=None) -> dict:
    evs = list(report.events if events is None else events)
    return {
        "schema": "gentle-silt/report/1",
        "inputs": {
            "algebra": algebra_to_obj(pres),
            "type": report.algebra,
            "mode": report.mode,
            "string_bound": report.string_bound,
            "sample": report.sample,
        },
        "counts": {"pairs": report.pair_count, "checked": report.checked_count},
        "records": [dict(r) for r in report.records],
        "events": evs,
        "failures": list(report.failures),
        "verdict": "pass" if report.verdict else "fail",
    }


def report_from_obj(obj) -> dict:
    validate_obj(obj, REPORT_SCHEMA, "report")
    if (obj["verdict"] == "pass") != (not obj["failures"]):
        raise StructuralError("verdict disagrees with the failure list")
    if len(obj["records"]) != obj["counts"]["checked"]:
        raise StructuralError("checked count disagrees with the record list")
    return obj


# -- DOT -----------------------------------------------------------------------


def _dot_id(s) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def dot_quiver(pres: GentlePresentation, name: str = "quiver") -> str:
    lines = [f"digraph {_dot_id(name)} {{"]
    for v in sorted(pres.vertices):
        lines.append(f"  {_dot_id(v)};")
    for a in sorted(pres.arrows, key=lambda a: a.id):
        g = pres.grades[a.id]
        label = a.id if not g else f"{a.id} ({g:+d})"
        lines.append(
            f"  {_dot_id(a.source)} -> {_dot_id(a.target)} [label={_dot_id(label)}];"
        )
    for x, y in sorted(pres.relations):
        s = pres.arrow(x).source
        t = pres.arrow(y).target
        lines.append(
            f"  {_dot_id(s)} -> {_dot_id(t)} "
            f"[style=dotted, arrowhead=none, label={_dot_id(f'{x}.{y} = 0')}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def pair_label(pair: SupportTauTiltingPair) -> str:
    mods = "+".join("-".join(v) for v, _ in pair.strings) or "0"
    projs = "+".join(pair.projs) or "0"
    return f"M {mods} | P {projs}"


def dot_exchange_graph(pairs, edges, name: str = "exchange") -> str:
    lines = [f"graph {_dot_id(name)} {{", "  node [shape=box];"]
    for i, p in enumerate(pairs):
        lines.append(f"  {i} [label={_dot_id(pair_label(p))}];")
    for i, j in edges:
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
