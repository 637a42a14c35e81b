"""From permissible curves to two-term complexes of projectives.

Rotating a permissible curve one step around its endpoints yields an
admissible curve whose complex is the minimal projective presentation of
the string module the curve records.  Over a surface of hereditary shape
the rotated walk can be read off combinatorially: the top arcs of the
string survive in degree 0, the interior socle arcs reappear in degree -1,
and each end contributes one extra degree -1 arc whenever the fan at the
walk end continues past the terminal arc.
"""

from __future__ import annotations

from .complexes import HomotopyString, TwoTermComplex, complex_of_homotopy_string
from .curves import (
    AdmissibleCurve,
    PermissibleCurve,
    admissible_curve,
    curve_endpoints,
    curve_sides,
    left_arc,
    projective_curve,
    top_socle_arcs,
)
from .errors import InternalConsistencyError, StructuralError
from .surfaces import Surface


def walk_anchor_points(surface: Surface, c: PermissibleCurve) -> tuple:
    """Marked points where the rotated walk of the curve is anchored."""
    if len(c.arcs) == 1:
        (p0, _), (p1, _) = surface.arc_ends[c.arcs[0]]
        return p0, p1
    sides = curve_sides(surface, c)
    if sides[0] == "L":
        w_start = surface.other_end(c.arcs[0], c.corners[0])[0]
    else:
        w_start = c.corners[0]
    if sides[-1] == "R":
        w_end = surface.other_end(c.arcs[-1], c.corners[-1])[0]
    else:
        w_end = c.corners[-1]
    return w_start, w_end


def end_segment_case(surface: Surface, c: PermissibleCurve, end: int) -> str:
    """How an end of the curve behaves under rotation.

    "I": the fan continues past the terminal arc, so rotation picks up an
    extra degree -1 arc and the end stays put.  Otherwise the end slides
    along the boundary: "II" from a marked point, "III" from a dot.
    """
    if end not in (0, 1):
        raise StructuralError("end must be 0 or 1")
    w = walk_anchor_points(surface, c)[end]
    arc = c.arcs[0] if end == 0 else c.arcs[-1]
    if left_arc(surface, arc, w) is not None:
        return "I"
    kind, _ = curve_endpoints(surface, c)[end]
    return "II" if kind == "point" else "III"


def rotate_curve(surface: Surface, c: PermissibleCurve) -> AdmissibleCurve:
    """The admissible curve presenting the minimal projective presentation
    of the string module of c.  Requires a surface of hereditary shape."""
    if not surface.is_hereditary_shape():
        raise StructuralError(
            "rotation needs every face to have a boundary segment and at most "
            "two arc sides"
        )
    m = len(c.arcs)
    tops, socs = top_socle_arcs(surface, c)
    sel = sorted(set(tops) | {i for i in socs if 0 < i < m - 1})
    if not sel:
        raise InternalConsistencyError("string without top arcs")
    sides = curve_sides(surface, c)
    w_start, w_end = walk_anchor_points(surface, c)
    ql = left_arc(surface, c.arcs[0], w_start)
    qr = left_arc(surface, c.arcs[-1], w_end)

    arcs = []
    degs = []
    juncs = []
    if ql is not None:
        arcs.append(ql)
        degs.append(-1)
        juncs.append(w_start)
    for k, t in enumerate(sel):
        if k:
            prev = sel[k - 1]
            run = {c.corners[i] for i in range(prev, t)}
            if len(run) != 1 or len({sides[i] for i in range(prev, t)}) != 1:
                raise InternalConsistencyError("junction corner run is not uniform")
            juncs.append(c.corners[prev])
        arcs.append(c.arcs[t])
        degs.append(0 if t in tops else -1)
    if qr is not None:
        arcs.append(qr)
        degs.append(-1)
        juncs.append(w_end)

    if juncs:
        pts = [surface.other_end(arcs[0], juncs[0])[0]]
        pts += juncs
        pts.append(surface.other_end(arcs[-1], juncs[-1])[0])
    else:
        (p0, _), (p1, _) = surface.arc_ends[arcs[0]]
        pts = [p0, p1]
    return admissible_curve(surface, tuple(pts), tuple(arcs), tuple(degs))


def complex_of_admissible(surface: Surface, w: AdmissibleCurve) -> TwoTermComplex:
    """Two-term complex of an admissible curve with degrees in {-1, 0}.

    At each junction the letter is the composite of the corner arrows
    between the two fan positions; running down the fan gives a direct
    letter, running up an inverse one."""
    nodes = tuple(zip(w.arcs, w.degrees))
    letters = []
    for i in range(len(w.arcs) - 1):
        x = w.points[i + 1]
        s = surface.fan_position(x, w.arcs[i])
        t = surface.fan_position(x, w.arcs[i + 1])
        if t < s:
            sign, path = 1, tuple(surface.corner_arrow[(x, k)] for k in range(t, s))
            expect = w.degrees[i] + 1
        else:
            sign, path = -1, tuple(surface.corner_arrow[(x, k)] for k in range(s, t))
            expect = w.degrees[i] - 1
        if w.degrees[i + 1] != expect:
            raise StructuralError(f"degree step at junction {i} disagrees with the fan")
        letters.append((sign, path))
    return complex_of_homotopy_string(
        HomotopyString(surface.pres, nodes, tuple(letters))
    )


def projective_cover_curve(surface: Surface, c: PermissibleCurve) -> tuple:
    """Vertices of the projective cover and its kernel, read off the curve.

    The cover gets one indecomposable projective per top arc.  The kernel
    (projective, since the shape is hereditary) gets one per interior socle
    arc plus one per fan continuation past a terminal arc.  Both multisets
    come back sorted.
    """
    m = len(c.arcs)
    tops, socs = top_socle_arcs(surface, c)
    cover = sorted(c.arcs[i] for i in tops)
    kernel = [c.arcs[i] for i in socs if 0 < i < m - 1]
    w_start, w_end = walk_anchor_points(surface, c)
    for arc, w in ((c.arcs[0], w_start), (c.arcs[-1], w_end)):
        q = left_arc(surface, arc, w)
        if q is not None:
            kernel.append(q)
    return tuple(cover), tuple(sorted(kernel))


def embed_curve(surface: Surface, c: PermissibleCurve) -> TwoTermComplex:
    """Minimal projective presentation of the string module of c,
    computed by rotating the curve."""
    return complex_of_admissible(surface, rotate_curve(surface, c))


def projective_presentation_curve(surface: Surface, v) -> AdmissibleCurve:
    """Rotated curve of the indecomposable projective at v."""
    return rotate_curve(surface, projective_curve(surface, v))
