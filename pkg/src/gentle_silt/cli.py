"""Command line front end.

    gentle-silt check      ALGEBRA
    gentle-silt surface    ALGEBRA [--out FILE]
    gentle-silt enumerate  ALGEBRA --mode MODE [--string-bound L] [--out FILE]
    gentle-silt embed      ALGEBRA CURVE [--out FILE]
    gentle-silt verify     ALGEBRA --mode MODE [--string-bound L] [--sample K]
                           [--out FILE] [--dot FILE] [--jobs N]
    gentle-silt classify   REPORT
    gentle-silt export-dot ALGEBRA|PAIRS|REPORT [--out FILE]

Exit codes: 0 success (for verify: verdict pass), 1 a cross-check or the
main theorem failed (a bug signal, never bad input), 2 unusable input.
All file output is atomic and byte-identical across repeated runs with the
same configuration.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import io_json
from .errors import (
    ClassificationViolation,
    GentleSiltError,
    InternalConsistencyError,
)
from .quivers import (
    classify_hereditary_type,
    connected_components,
    global_dimension_monomial,
    presentation_from_code,
    validate_gentle,
)
from .silting import (
    VerificationReport,
    check_pair,
    enumerate_stau_tilt,
    exchange_edges,
    pair_from_obj,
    pair_to_obj,
)
from .surfaces import surface_from_algebra, surfaces_from_algebra
from .embedding import embed_curve


def _emit(text: str, path) -> None:
    if path:
        io_json.write_text(path, text)
        print(f"wrote {path}")
    else:
        sys.stdout.write(text)


def _read_algebra(path: str):
    return io_json.algebra_from_obj(io_json.read_json(path))


# -- commands -------------------------------------------------------------------


def cmd_check(args) -> int:
    pres = _read_algebra(args.algebra)
    diag = validate_gentle(pres)
    print(f"vertices: {len(pres.vertices)}")
    print(f"arrows: {len(pres.arrows)}")
    print(f"relations: {len(pres.relations)}")
    comps = connected_components(pres)
    print(f"components: {len(comps)}")
    if not diag.ok:
        print("gentle: no")
        for axiom, witness in diag.violations:
            print(f"  ({axiom}) {witness}")
        return 2
    print("gentle: yes")
    try:
        typ = classify_hereditary_type(pres)
        print(f"type: {typ}")
    except GentleSiltError:
        print("type: general gentle (not a path or an acyclic cycle algebra)")
    gd = global_dimension_monomial(pres)
    print(f"global dimension: {'infinite' if gd == float('inf') else gd}")
    try:
        surfaces = surfaces_from_algebra(pres)
    except GentleSiltError as exc:
        print(f"surface: none ({exc})")
        return 0
    for s in surfaces:
        print(
            f"surface: {s.kind}, {len(s.points())} marked points, "
            f"{len(s.faces)} faces"
        )
    return 0


def cmd_surface(args) -> int:
    pres = _read_algebra(args.algebra)
    surfaces = surfaces_from_algebra(pres)
    if len(surfaces) == 1:
        obj = io_json.surface_to_obj(surfaces[0])
    else:
        obj = {
            "schema": "gentle-silt/surface-list/1",
            "surfaces": [io_json.surface_to_obj(s) for s in surfaces],
        }
    _emit(io_json.dumps(obj), args.out)
    return 0


def cmd_enumerate(args) -> int:
    pres = _read_algebra(args.algebra)
    events = []
    pairs = enumerate_stau_tilt(pres, args.mode, args.string_bound, events=events)
    obj = io_json.pairs_to_obj(pres, args.mode, args.string_bound, pairs, events)
    _emit(io_json.dumps(obj), args.out)
    return 0


def cmd_embed(args) -> int:
    pres = _read_algebra(args.algebra)
    surface = surface_from_algebra(pres)
    curve = io_json.curve_from_obj(surface, io_json.read_json(args.curve))
    _emit(io_json.dumps(io_json.complex_to_obj(embed_curve(surface, curve))), args.out)
    return 0


def _check_chunk(algebra_obj, pair_objs):
    """Worker: run the per-pair pipeline on a slice of the enumeration."""
    pres = io_json.algebra_from_obj(algebra_obj)
    surface = surface_from_algebra(pres)
    typ = classify_hereditary_type(pres)
    return [check_pair(surface, typ, pair_from_obj(po)) for po in pair_objs]


def _job_count(args) -> int:
    if args.jobs is not None:
        jobs = args.jobs
    else:
        try:
            jobs = int(os.environ.get("GENTLE_SILT_JOBS", "1"))
        except ValueError:
            raise GentleSiltError("GENTLE_SILT_JOBS is not an integer")
    if jobs < 1:
        raise GentleSiltError(f"need at least one job, got {jobs}")
    return jobs


def cmd_verify(args) -> int:
    pres = _read_algebra(args.algebra)
    typ = classify_hereditary_type(pres)
    jobs = _job_count(args)
    if args.sample < 1:
        raise GentleSiltError("--sample must be positive")
    events = []
    pairs = enumerate_stau_tilt(pres, args.mode, args.string_bound, events=events)
    sampled = pairs[::args.sample]
    if jobs == 1:
        surface = surface_from_algebra(pres)
        results = [check_pair(surface, typ, p) for p in sampled]
    else:
        aobj = io_json.algebra_to_obj(pres)
        slices = [sampled[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futs = [
                pool.submit(_check_chunk, aobj, [pair_to_obj(p) for p in sl])
                for sl in slices
            ]
            per_slice = [f.result() for f in futs]
        results = [None] * len(sampled)
        for i, rs in enumerate(per_slice):
            for k, r in enumerate(rs):
                results[i + k * jobs] = r
    records = []
    failures = []
    for record, fails in results:
        records.append(record)
        failures.extend(f"{f} [pair {record['pair']}]" for f in fails)
    report = VerificationReport(
        algebra=str(typ),
        mode=args.mode,
        string_bound=args.string_bound,
        sample=args.sample,
        pair_count=len(pairs),
        checked_count=len(records),
        records=tuple(records),
        events=tuple(events),
        failures=tuple(failures),
    )
    if args.out:
        io_json.write_json(args.out, io_json.report_to_obj(report, pres))
    if args.dot:
        edges = exchange_edges(pres, pairs, args.string_bound)
        io_json.write_text(args.dot, io_json.dot_exchange_graph(pairs, edges))
    print(f"algebra: {typ}")
    print(f"mode: {args.mode}")
    print(f"pairs: {report.pair_count} (checked {report.checked_count})")
    if records:
        print(f"max global dimension: {max(r['gldim'] for r in records)}")
        print(f"max polygon bound: {max(r['gldim_bound'] for r in records)}")
    if events:
        print(f"bound events: {len(events)}")
    print(f"verdict: {'pass' if report.verdict else 'fail'}")
    for f in report.failures:
        print(f"  {f}")
    return 0 if report.verdict else 1


def cmd_classify(args) -> int:
    obj = io_json.report_from_obj(io_json.read_json(args.report))
    tally = {}
    unclassified = 0
    for rec in obj["records"]:
        if "form" not in rec:
            unclassified += 1
            continue
        factors = "+".join(f"{kind}{m}" for kind, m in rec["factors"])
        tally[(rec["form"], factors)] = tally.get((rec["form"], factors), 0) + 1
    width = max([len(f) for _, f in tally] + [7])
    print(f"form  {'factors':<{width}}  count")
    for (form, factors), n in sorted(tally.items()):
        print(f"{form:<4}  {factors:<{width}}  {n}")
    print(f"records: {len(obj['records'])}")
    if unclassified:
        print(f"unclassified: {unclassified}")
    print(f"verdict: {obj['verdict']}")
    return 0 if obj["verdict"] == "pass" and not unclassified else 1


def cmd_export_dot(args) -> int:
    obj = io_json.read_json(args.input)
    schema = obj.get("schema") if isinstance(obj, dict) else None
    if schema == "gentle-silt/pairs/1":
        pres, pairs, _, bound = io_json.pairs_from_obj(obj)
        edges = exchange_edges(pres, pairs, bound)
        text = io_json.dot_exchange_graph(pairs, edges)
    elif schema == "gentle-silt/report/1":
        rep = io_json.report_from_obj(obj)
        pres = io_json.algebra_from_obj(rep["inputs"]["algebra"])
        bound = rep["inputs"]["string_bound"]
        pairs = enumerate_stau_tilt(pres, rep["inputs"]["mode"], bound)
        edges = exchange_edges(pres, pairs, bound)
        parts = [io_json.dot_exchange_graph(pairs, edges)]
        for i, rec in enumerate(rep["records"]):
            endo = presentation_from_code(rec["endo"])
            parts.append(io_json.dot_quiver(endo, name=f"endo_{i}"))
        text = "".join(parts)
    else:
        text = io_json.dot_quiver(_read_algebra(args.input))
    _emit(text, args.out)
    return 0


# -- argument parsing -------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gentle-silt",
        description="Silting combinatorics of hereditary gentle algebras.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        return p

    p = add("check", cmd_check, "validate an algebra file and print diagnostics")
    p.add_argument("algebra")

    p = add("surface", cmd_surface, "write the dissected surface of an algebra")
    p.add_argument("algebra")
    p.add_argument("--out")

    p = add("enumerate", cmd_enumerate, "enumerate support pairs")
    p.add_argument("algebra")
    p.add_argument("--mode", required=True, help="exhaustive or depth:<d>")
    p.add_argument("--string-bound", type=int, default=12)
    p.add_argument("--out")

    p = add("embed", cmd_embed, "minimal presentation complex of a curve")
    p.add_argument("algebra")
    p.add_argument("curve")
    p.add_argument("--out")

    p = add("verify", cmd_verify, "run the no-global-dimension-3 sweep")
    p.add_argument("algebra")
    p.add_argument("--mode", required=True, help="exhaustive or depth:<d>")
    p.add_argument("--string-bound", type=int, default=12)
    p.add_argument("--sample", type=int, default=1, help="check every k-th pair")
    p.add_argument("--out", help="report file")
    p.add_argument("--dot", help="exchange graph DOT file")
    p.add_argument("--jobs", type=int, default=None)

    p = add("classify", cmd_classify, "tabulate the forms in a report")
    p.add_argument("report")

    p = add("export-dot", cmd_export_dot, "DOT of an algebra, pairs, or report file")
    p.add_argument("input")
    p.add_argument("--out")

    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InternalConsistencyError, ClassificationViolation) as exc:
        print(f"cross-check failure: {exc}", file=sys.stderr)
        return 1
    except GentleSiltError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
