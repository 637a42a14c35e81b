"""Curves on the marked surface, and their crossing combinatorics.

Two kinds of curve:

* a permissible curve records a string module: the sequence of arcs it
  crosses together with the marked point of each consecutive-arc corner.
  Its endpoints land on marked points or on the distinguished extra dots
  of digon faces.
* an admissible curve is a graded walk along the arcs themselves (points,
  arcs, one degree per arc).  These present two-term complexes.

Minimal crossing numbers are computed combinatorially.  Each curve is
compiled to a walk through a region complex: faces separated by arcs for
permissible curves, dual polygons around marked points separated by
transverse arc cuts for admissible ones.  Every region carries a cyclic
counterclockwise list of port slots; two compiled walks meet along maximal
common corridors, and each corridor contributes 0 or 1 crossings decided
by the cyclic position of the four ports where the walks enter and leave.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InternalConsistencyError,
    StructuralError,
    UnsupportedTopologyError,
)
from .linrep import Representation, string_rep
from .surfaces import Surface


@dataclass(frozen=True)
class PermissibleCurve:
    """Arcs crossed in order, plus the marked point of each corner."""

    arcs: tuple
    corners: tuple

    def canonical(self) -> tuple:
        fwd = (self.arcs, self.corners)
        rev = (tuple(reversed(self.arcs)), tuple(reversed(self.corners)))
        return min(fwd, rev)


@dataclass(frozen=True)
class AdmissibleCurve:
    """A graded walk along arcs: m+1 points, m arcs, m degrees."""

    points: tuple
    arcs: tuple
    degrees: tuple

    def canonical(self) -> tuple:
        fwd = (self.points, self.arcs, self.degrees)
        rev = (
            tuple(reversed(self.points)),
            tuple(reversed(self.arcs)),
            tuple(reversed(self.degrees)),
        )
        return min(fwd, rev)


def permissible_curve(surface: Surface, arcs, corners) -> PermissibleCurve:
    arcs = tuple(arcs)
    corners = tuple(corners)
    if not arcs:
        raise StructuralError("a permissible curve crosses at least one arc")
    if len(corners) != len(arcs) - 1:
        raise StructuralError("need exactly one corner between consecutive arcs")
    for a in arcs:
        if a not in surface.arc_ends:
            raise StructuralError(f"unknown arc {a}")
    sides = []
    for i, x in enumerate(corners):
        fan = surface.fans.get(x)
        if fan is None:
            raise StructuralError(f"unknown marked point {x}")
        if arcs[i] not in fan or arcs[i + 1] not in fan:
            raise StructuralError(f"arcs at corner {i} do not meet at {x}")
        d = fan.index(arcs[i + 1]) - fan.index(arcs[i])
        if d == 1:
            sides.append("L")
        elif d == -1:
            sides.append("R")
        else:
            raise StructuralError(f"arcs at corner {i} are not fan neighbours")
    for i in range(1, len(sides)):
        if (sides[i - 1] == sides[i]) != (corners[i - 1] == corners[i]):
            raise StructuralError(
                f"corner {i}: the word doubles back or runs into a relation"
            )
    return PermissibleCurve(arcs, corners)


def curve_sides(surface: Surface, c: PermissibleCurve) -> tuple:
    """"L" when the corner arrow points from arcs[i] to arcs[i+1], else "R"."""
    out = []
    for i, x in enumerate(c.corners):
        d = surface.fan_position(x, c.arcs[i + 1]) - surface.fan_position(x, c.arcs[i])
        out.append("L" if d == 1 else "R")
    return tuple(out)


def string_of_curve(surface: Surface, c: PermissibleCurve) -> tuple:
    """(verts, links) of the string the curve records; arcs become vertices."""
    sides = curve_sides(surface, c)
    links = []
    for i, x in enumerate(c.corners):
        if sides[i] == "L":
            k = surface.fan_position(x, c.arcs[i])
            links.append((surface.corner_arrow[(x, k)], 1))
        else:
            k = surface.fan_position(x, c.arcs[i + 1])
            links.append((surface.corner_arrow[(x, k)], -1))
    return tuple(c.arcs), tuple(links)


def module_of_curve(surface: Surface, c: PermissibleCurve) -> Representation:
    verts, links = string_of_curve(surface, c)
    return string_rep(surface.pres, list(verts), list(links))


def _arrow_corners(surface: Surface) -> dict:
    return {aid: key for key, aid in surface.corner_arrow.items()}


def curve_of_module(surface: Surface, verts, links) -> PermissibleCurve:
    """Permissible curve of the string with the given vertices and links."""
    at = _arrow_corners(surface)
    corners = []
    for i, (aid, d) in enumerate(links):
        if aid not in at:
            raise StructuralError(f"unknown arrow {aid}")
        pt, k = at[aid]
        fan = surface.fans[pt]
        lo, hi = (verts[i], verts[i + 1]) if d == 1 else (verts[i + 1], verts[i])
        if fan[k] != lo or fan[k + 1] != hi:
            raise StructuralError(f"link {i} does not match arrow {aid}")
        corners.append(pt)
    return permissible_curve(surface, tuple(verts), tuple(corners))


def top_socle_arcs(surface: Surface, c: PermissibleCurve) -> tuple:
    """Positions (0-based) of the top and socle arcs of the string."""
    sides = curve_sides(surface, c)
    m = len(c.arcs)
    tops = tuple(
        i
        for i in range(m)
        if (i == 0 or sides[i - 1] == "R") and (i == m - 1 or sides[i] == "L")
    )
    socs = tuple(
        i
        for i in range(m)
        if (i == 0 or sides[i - 1] == "L") and (i == m - 1 or sides[i] == "R")
    )
    return tops, socs


def left_arc(surface: Surface, arc, point):
    """The next arc counterclockwise after `arc` in the fan at `point`."""
    fan = surface.fans[point]
    i = fan.index(arc)
    return fan[i + 1] if i + 1 < len(fan) else None


def projective_curve(surface: Surface, v) -> PermissibleCurve:
    pres = surface.pres
    branches = []
    for a in sorted(pres.out_arrows(v), key=lambda x: x.id):
        chain = [a]
        while True:
            nxt = [
                b
                for b in pres.out_arrows(chain[-1].target)
                if not pres.is_relation(chain[-1].id, b.id)
            ]
            if not nxt:
                break
            if len(nxt) > 1:
                raise InternalConsistencyError("two surviving continuations")
            chain.append(nxt[0])
        branches.append(chain)
    verts = [v]
    links = []
    if branches:
        for a in branches[0]:
            verts.append(a.target)
            links.append((a.id, 1))
    if len(branches) == 2:
        for a in branches[1]:
            verts.insert(0, a.target)
            links.insert(0, (a.id, -1))
    return curve_of_module(surface, verts, links)


def band_module(surface: Surface, arcs, corners, lam) -> Representation:
    """Band representation of a cyclic curve, with parameter lam != 0."""
    lam = Fraction(lam)
    if lam == 0:
        raise StructuralError("band parameter must be nonzero")
    arcs = tuple(arcs)
    corners = tuple(corners)
    m = len(arcs)
    if m < 2 or len(corners) != m:
        raise StructuralError("a band crosses at least two arcs, one corner each")
    sides = []
    for i, x in enumerate(corners):
        a, b = arcs[i], arcs[(i + 1) % m]
        fan = surface.fans[x]
        if a not in fan or b not in fan:
            raise StructuralError(f"band corner {i} does not sit at {x}")
        d = fan.index(b) - fan.index(a)
        if abs(d) != 1:
            raise StructuralError(f"band corner {i}: arcs are not fan neighbours")
        sides.append("L" if d == 1 else "R")
    for i in range(m):
        j = (i + 1) % m
        if (sides[i] == sides[j]) != (corners[i] == corners[j]):
            raise StructuralError(f"band corner {j}: relation or backtrack")
    if len(set(sides)) == 1:
        raise StructuralError("cyclic path word is not a band")
    word = list(zip(arcs, corners))
    for d in range(1, m):
        if m % d == 0 and word == word[d:] + word[:d]:
            raise StructuralError("band word is a proper power")
    pres = surface.pres
    pos = {}
    dims = {u: 0 for u in pres.vertices}
    for i, a in enumerate(arcs):
        pos[i] = dims[a]
        dims[a] += 1
    maps = {
        a.id: [[Fraction(0)] * dims[a.source] for _ in range(dims[a.target])]
        for a in pres.arrows
    }
    for i, x in enumerate(corners):
        j = (i + 1) % m
        coeff = lam if j == 0 else Fraction(1)
        if sides[i] == "L":
            aid = surface.corner_arrow[(x, surface.fan_position(x, arcs[i]))]
            maps[aid][pos[j]][pos[i]] += coeff
        else:
            aid = surface.corner_arrow[(x, surface.fan_position(x, arcs[j]))]
            maps[aid][pos[i]][pos[j]] += coeff
    return Representation(pres, dims, maps)


def admissible_curve(surface: Surface, points, arcs, degrees) -> AdmissibleCurve:
    points = tuple(points)
    arcs = tuple(arcs)
    degrees = tuple(int(d) for d in degrees)
    if not arcs:
        raise StructuralError("an admissible curve walks along at least one arc")
    if len(points) != len(arcs) + 1 or len(degrees) != len(arcs):
        raise StructuralError("walk lengths disagree")
    for i, a in enumerate(arcs):
        if a not in surface.arc_ends:
            raise StructuralError(f"unknown arc {a}")
        ends = {e[0] for e in surface.arc_ends[a]}
        if {points[i], points[i + 1]} != ends:
            raise StructuralError(f"walk step {i} does not run along arc {a}")
        if i and arcs[i] == arcs[i - 1]:
            raise StructuralError("walk doubles back along an arc")
    return AdmissibleCurve(points, arcs, degrees)


def arc_stalk(surface: Surface, v, degree: int = 0) -> AdmissibleCurve:
    (p0, _), (p1, _) = surface.arc_ends[v]
    return admissible_curve(surface, (p0, p1), (v,), (degree,))


# -- region complexes --------------------------------------------------------
#
# Port slots of a face, counterclockwise (trace order):
#   boundary face:  [dot, corner, edge, corner, edge, ..., corner]
#   closed face:    [edge, corner, edge, corner, ...]
# Port slots of the dual polygon around a marked point, counterclockwise:
#   [terminal, cut of fan[0], cut of fan[1], ...]


class _Tables:
    __slots__ = ("face_n", "trav_slot", "wedge_slot", "dot_slot", "corner_slots", "corner_pt")

    def __init__(self, surface: Surface):
        self.face_n = []
        self.trav_slot = {}
        self.wedge_slot = {}
        self.dot_slot = {}
        self.corner_slots = {}
        self.corner_pt = {}
        for fi, face in enumerate(surface.faces):
            k = len(face.arc_edges)
            corners = []
            if face.bd is not None:
                self.face_n.append(2 * k + 2)
                self.dot_slot[fi] = 0
                for t, (v, a, b) in enumerate(face.arc_edges):
                    corners.append(2 * t + 1)
                    self.corner_pt[(fi, 2 * t + 1)] = a
                    self.trav_slot[(v, a)] = (fi, 2 * t + 2)
                corners.append(2 * k + 1)
                self.corner_pt[(fi, 2 * k + 1)] = face.bd[0]
            else:
                self.face_n.append(2 * k)
                self.dot_slot[fi] = None
                for t, (v, a, b) in enumerate(face.arc_edges):
                    self.trav_slot[(v, a)] = (fi, 2 * t)
                    corners.append(2 * t + 1)
                    self.corner_pt[(fi, 2 * t + 1)] = b
            self.corner_slots[fi] = tuple(corners)
            # the corner after arc edge t is the wedge where the trace steps
            # one fan position down at that edge's endpoint
            edges = list(face.arc_edges)
            pairs = zip(edges, edges[1:] + ([edges[0]] if face.bd is None else []))
            for t, ((v1, _, mid), (v2, _, _)) in enumerate(pairs):
                j = surface.end_at(v1, mid)[1]
                if surface.fans[mid][j - 1] != v2:
                    raise InternalConsistencyError("wedge out of step with trace")
                slot = (2 * t + 3) if face.bd is not None else (2 * t + 1)
                self.wedge_slot[(mid, j - 1)] = (fi, slot % self.face_n[fi])


def _tables(surface: Surface) -> _Tables:
    t = getattr(surface, "_curve_tables", None)
    if t is None:
        t = _Tables(surface)
        surface._curve_tables = t
    return t


@dataclass(frozen=True)
class CompiledWalk:
    """A curve as a walk through regions, ports resolved to cyclic slots."""

    regions: tuple
    edges: tuple
    slots_in: tuple
    slots_out: tuple
    sizes: tuple

    def reverse(self) -> "CompiledWalk":
        return CompiledWalk(
            tuple(reversed(self.regions)),
            tuple(reversed(self.edges)),
            tuple(reversed(self.slots_out)),
            tuple(reversed(self.slots_in)),
            tuple(reversed(self.sizes)),
        )


def _slot_facing(tables: _Tables, surface: Surface, arc, face) -> int:
    hits = []
    for p, _ in surface.arc_ends[arc]:
        fi, slot = tables.trav_slot[(arc, p)]
        if fi == face:
            hits.append(slot)
    if len(hits) != 1:
        raise InternalConsistencyError(f"arc {arc} has {len(hits)} sides on face {face}")
    return hits[0]


def _other_side(surface: Surface, arc, not_face) -> int:
    faces = [surface.face_of_traversal[(arc, p)] for p, _ in surface.arc_ends[arc]]
    hits = [f for f in faces if f != not_face]
    if len(hits) != 1:
        raise InternalConsistencyError(f"arc {arc} does not separate two faces")
    return hits[0]


def _endpoint_slot(tables: _Tables, face: int, edge_slot: int) -> int:
    n = tables.face_n[face]
    adj = {(edge_slot - 1) % n, (edge_slot + 1) % n}
    cands = [s for s in tables.corner_slots[face] if s not in adj]
    if len(cands) == 1:
        return cands[0]
    if not cands:
        dot = tables.dot_slot[face]
        if dot is None:
            raise InternalConsistencyError("curve ends on an unmarked circle")
        return dot
    raise UnsupportedTopologyError(
        "curve endpoint is ambiguous in a face with more than two arc sides"
    )


def compile_permissible(surface: Surface, c: PermissibleCurve) -> CompiledWalk:
    tables = _tables(surface)
    m = len(c.arcs)
    if m >= 2:
        mids = []
        for i, x in enumerate(c.corners):
            k = min(surface.fan_position(x, c.arcs[i]), surface.fan_position(x, c.arcs[i + 1]))
            mids.append(surface.wedge_face[(x, k)])
        regions = [_other_side(surface, c.arcs[0], mids[0])]
        regions += mids
        regions.append(_other_side(surface, c.arcs[-1], mids[-1]))
    else:
        (p0, _), (p1, _) = surface.arc_ends[c.arcs[0]]
        regions = [
            surface.face_of_traversal[(c.arcs[0], p0)],
            surface.face_of_traversal[(c.arcs[0], p1)],
        ]
        if regions[0] == regions[1]:
            raise InternalConsistencyError("arc does not separate two faces")
    slots_in = [0] * (m + 1)
    slots_out = [0] * (m + 1)
    for i, a in enumerate(c.arcs):
        slots_out[i] = _slot_facing(tables, surface, a, regions[i])
        slots_in[i + 1] = _slot_facing(tables, surface, a, regions[i + 1])
    slots_in[0] = _endpoint_slot(tables, regions[0], slots_out[0])
    slots_out[m] = _endpoint_slot(tables, regions[m], slots_in[m])
    for i in range(1, m):
        x = c.corners[i - 1]
        k = min(surface.fan_position(x, c.arcs[i - 1]), surface.fan_position(x, c.arcs[i]))
        fi, w = tables.wedge_slot[(x, k)]
        n = tables.face_n[fi]
        if fi != regions[i] or {(w - 1) % n, (w + 1) % n} != {slots_in[i], slots_out[i]}:
            raise InternalConsistencyError("curve does not pass through its wedge")
    return CompiledWalk(
        tuple(regions),
        tuple(c.arcs),
        tuple(slots_in),
        tuple(slots_out),
        tuple(tables.face_n[f] for f in regions),
    )


def curve_endpoints(surface: Surface, c: PermissibleCurve) -> tuple:
    """(("point", p) | ("dot", p), ...) for the two ends; a dot is named by
    the point whose outgoing boundary edge carries it."""
    tables = _tables(surface)
    w = compile_permissible(surface, c)

    def describe(face, slot):
        if tables.dot_slot[face] == slot:
            return ("dot", surface.faces[face].bd[0])
        return ("point", tables.corner_pt[(face, slot)])

    return (
        describe(w.regions[0], w.slots_in[0]),
        describe(w.regions[-1], w.slots_out[-1]),
    )


def permissible_winding(surface: Surface, c: PermissibleCurve) -> int:
    """Signed crossing count with the fixed spanning arc; 0 on a disk.

    Separates curves that cross the same arcs in the same order but wrap the
    annulus differently, which is all the serialized form needs.
    """
    from .surfaces import winding_cut_arc

    cut = winding_cut_arc(surface)
    if cut is None:
        return 0
    w = compile_permissible(surface, c)
    (p0, _), (p1, _) = surface.arc_ends[cut]
    fa = surface.face_of_traversal[(cut, p0)]
    fb = surface.face_of_traversal[(cut, p1)]
    total = 0
    for i, a in enumerate(c.arcs):
        if a != cut:
            continue
        step = (w.regions[i], w.regions[i + 1])
        if step == (fa, fb):
            total += 1
        elif step == (fb, fa):
            total -= 1
        else:
            raise InternalConsistencyError("crossing misses the cut arc's sides")
    return total


def compile_admissible(surface: Surface, w: AdmissibleCurve) -> CompiledWalk:
    m = len(w.arcs)
    sizes = tuple(1 + len(surface.fans[p]) for p in w.points)
    slots_in = [0] * (m + 1)
    slots_out = [0] * (m + 1)
    for i, a in enumerate(w.arcs):
        slots_out[i] = 1 + surface.fan_position(w.points[i], a)
        slots_in[i + 1] = 1 + surface.fan_position(w.points[i + 1], a)
    return CompiledWalk(
        tuple(w.points), tuple(w.arcs), tuple(slots_in), tuple(slots_out), sizes
    )


# -- minimal crossing numbers ------------------------------------------------


def _maximal_alignments(a: CompiledWalk, b: CompiledWalk) -> list:
    na, nb = len(a.regions), len(b.regions)
    out = {}
    for i in range(na):
        for j in range(nb):
            if a.regions[i] != b.regions[j]:
                continue
            li, lj = i, j
            while (
                li > 0
                and lj > 0
                and a.edges[li - 1] == b.edges[lj - 1]
                and a.regions[li - 1] == b.regions[lj - 1]
            ):
                li -= 1
                lj -= 1
            ri, rj = i, j
            while (
                ri + 1 < na
                and rj + 1 < nb
                and a.edges[ri] == b.edges[rj]
                and a.regions[ri + 1] == b.regions[rj + 1]
            ):
                ri += 1
                rj += 1
            out[(li, lj)] = ri - li + 1
    return [(li, lj, n) for (li, lj), n in out.items()]


def _corridor_bit(a: CompiledWalk, b: CompiledWalk, i0: int, j0: int, length: int) -> int:
    i1, j1 = i0 + length - 1, j0 + length - 1
    n_in, n_out = a.sizes[i0], a.sizes[i1]
    a_in, x_in = a.slots_in[i0], b.slots_in[j0]
    a_out, x_out = a.slots_out[i1], b.slots_out[j1]
    ends = (
        i0 == 0,
        j0 == 0,
        i1 == len(a.regions) - 1,
        j1 == len(b.regions) - 1,
    )
    if a_in == x_in:
        if not (ends[0] and ends[1]):
            raise InternalConsistencyError("corridor extends past its entry")
        return 0
    if a_out == x_out:
        if not (ends[2] and ends[3]):
            raise InternalConsistencyError("corridor extends past its exit")
        return 0
    if length == 1:
        if a_in == x_out:
            if not (ends[0] and ends[3]):
                raise InternalConsistencyError("reverse overlap not filtered")
            return 0
        if a_out == x_in:
            if not (ends[2] and ends[1]):
                raise InternalConsistencyError("reverse overlap not filtered")
            return 0
        span = (a_out - a_in) % n_in
        fx = 0 < (x_in - a_in) % n_in < span
        fy = 0 < (x_out - a_in) % n_in < span
        return 1 if fx != fy else 0
    if b.slots_out[j0] != a.slots_out[i0] or b.slots_in[j1] != a.slots_in[i1]:
        raise InternalConsistencyError("corridor interior edges disagree")
    ref_in, ref_out = a.slots_out[i0], a.slots_in[i1]
    order_in = (a_in - ref_in) % n_in < (x_in - ref_in) % n_in
    order_out = (a_out - ref_out) % n_out < (x_out - ref_out) % n_out
    return 1 if order_in == order_out else 0


def _check_reduced(a: CompiledWalk) -> None:
    for i in range(len(a.edges) - 1):
        if a.edges[i] == a.edges[i + 1]:
            raise StructuralError("walk doubles back along an edge")


def _drop_subsumed(corridors: dict) -> list:
    keys = list(corridors)
    out = []
    for k in keys:
        if any(k < other for other in keys):
            continue
        out.append((k, corridors[k]))
    return out


def minimal_crossings(a: CompiledWalk, b: CompiledWalk) -> int:
    """Minimal number of transversal crossings between two distinct curves."""
    _check_reduced(a)
    _check_reduced(b)
    brev = b.reverse()
    nb = len(b.regions)
    corridors = {}
    for li, lj, n in _maximal_alignments(a, b):
        pairs = frozenset((li + k, lj + k) for k in range(n))
        corridors.setdefault(pairs, (b, li, lj, n))
    for li, lj, n in _maximal_alignments(a, brev):
        pairs = frozenset((li + k, nb - 1 - (lj + k)) for k in range(n))
        corridors.setdefault(pairs, (brev, li, lj, n))
    total = 0
    for _, (bb, li, lj, n) in _drop_subsumed(corridors):
        total += _corridor_bit(a, bb, li, lj, n)
    return total


def minimal_self_crossings(a: CompiledWalk) -> int:
    _check_reduced(a)
    arev = a.reverse()
    n = len(a.regions)
    corridors = {}
    for li, lj, ln in _maximal_alignments(a, a):
        if li == lj:
            continue  # the identity alignment
        pairs = frozenset(frozenset((li + k, lj + k)) for k in range(ln))
        corridors.setdefault(pairs, (a, li, lj, ln))
    for li, lj, ln in _maximal_alignments(a, arev):
        orig = [(li + k, n - 1 - (lj + k)) for k in range(ln)]
        if ln == 1 and orig[0][0] == orig[0][1]:
            continue  # one passage of the walk, not a self-meeting
        pairs = frozenset(frozenset(p) for p in orig)
        corridors.setdefault(pairs, (arev, li, lj, ln))
    total = 0
    for _, (bb, li, lj, ln) in _drop_subsumed(corridors):
        total += _corridor_bit(a, bb, li, lj, ln)
    return total


def crossing_number_permissible(surface: Surface, c1: PermissibleCurve, c2: PermissibleCurve) -> int:
    if c1.canonical() == c2.canonical():
        return minimal_self_crossings(compile_permissible(surface, c1))
    return minimal_crossings(
        compile_permissible(surface, c1), compile_permissible(surface, c2)
    )


def crossing_number_admissible(surface: Surface, w1: AdmissibleCurve, w2: AdmissibleCurve) -> int:
    same = (w1.points, w1.arcs) in (
        (w2.points, w2.arcs),
        (tuple(reversed(w2.points)), tuple(reversed(w2.arcs))),
    )
    if same:
        return minimal_self_crossings(compile_admissible(surface, w1))
    return minimal_crossings(
        compile_admissible(surface, w1), compile_admissible(surface, w2)
    )


# -- germs of admissible curves ---------------------------------------------


def germ_of(w: AdmissibleCurve, end: int) -> tuple:
    """(points, arcs) of the walk read away from the chosen end."""
    if end == 0:
        return w.points, w.arcs
    return tuple(reversed(w.points)), tuple(reversed(w.arcs))


def germ_degree(w: AdmissibleCurve, end: int) -> int:
    return w.degrees[0] if end == 0 else w.degrees[-1]


def _divergence_key(surface: Surface, x, alpha: int, arc) -> tuple:
    """Transverse order at the mouth of the divergence point, low side first.

    Strands turning to an arc below the arrival position sit below the
    terminating slot, those turning above sit above it; on either side a
    strand that sweeps farther around the point must duck inside the ones
    peeling off earlier, so both sides read in descending position."""
    if arc is None:
        return (1, 0)
    beta = surface.fan_position(x, arc)
    if beta == alpha:
        raise InternalConsistencyError("germ doubles back along an arc")
    return (0, -beta) if beta < alpha else (2, -beta)


def compare_germs(surface: Surface, g1: tuple, g2: tuple) -> int:
    """Counterclockwise order at the common anchor of two curve germs."""
    pts1, arcs1 = g1
    pts2, arcs2 = g2
    if pts1[0] != pts2[0]:
        raise StructuralError("germs anchored at different points")
    if arcs1[0] != arcs2[0]:
        p1 = surface.fan_position(pts1[0], arcs1[0])
        p2 = surface.fan_position(pts2[0], arcs2[0])
        return -1 if p1 < p2 else 1
    k = 0
    while True:
        k += 1
        x = pts1[k]
        if pts2[k] != x:
            raise InternalConsistencyError("shared arc led to different points")
        done1 = k >= len(arcs1)
        done2 = k >= len(arcs2)
        if done1 and done2:
            return 0
        if not done1 and not done2 and arcs1[k] == arcs2[k]:
            continue
        alpha = surface.fan_position(x, arcs1[k - 1])
        k1 = _divergence_key(surface, x, alpha, None if done1 else arcs1[k])
        k2 = _divergence_key(surface, x, alpha, None if done2 else arcs2[k])
        if k1 == k2:
            raise InternalConsistencyError("germ divergence keys collide")
        far = -1 if k1 < k2 else 1
        # the two strands never cross, so their order at the anchor mirrors
        # the order at the divergence point: germ rays are read along the
        # direction of travel at the anchor but against it at the far end
        return -far


def sorted_germs(surface: Surface, walks: list) -> dict:
    """point -> list of (walk index, end) in counterclockwise fan order."""
    at = {}
    for wi, w in enumerate(walks):
        at.setdefault(w.points[0], []).append((wi, 0))
        at.setdefault(w.points[-1], []).append((wi, 1))

    def cmp(x, y):
        return compare_germs(surface, germ_of(walks[x[0]], x[1]), germ_of(walks[y[0]], y[1]))

    out = {}
    for p, gs in at.items():
        gs = sorted(gs, key=functools.cmp_to_key(cmp))
        for t in range(len(gs) - 1):
            if cmp(gs[t], gs[t + 1]) == 0:
                raise InternalConsistencyError("two identical germs at one point")
        out[p] = gs
    return out


def algebra_from_arc_system(surface: Surface, walks: list, names: list):
    """Graded quiver with relations of a system of admissible curves.

    Vertices are the curve names; arrows join counterclockwise-consecutive
    germs at each marked point, graded by the difference of the adjacent
    arc degrees; a composite of two arrows dies exactly when it passes
    through opposite ends of the middle curve.
    """
    from .quivers import presentation

    if len(walks) != len(names) or len(set(names)) != len(names):
        raise StructuralError("need one distinct name per curve")
    germs = sorted_germs(surface, walks)
    arrows = []
    grades = {}
    meta = {}
    for p in sorted(germs):
        gs = germs[p]
        for t in range(len(gs) - 1):
            g1, g2 = gs[t], gs[t + 1]
            aid = f"x{len(arrows)}"
            arrows.append((aid, names[g1[0]], names[g2[0]]))
            grades[aid] = germ_degree(walks[g1[0]], g1[1]) - germ_degree(
                walks[g2[0]], g2[1]
            )
            meta[aid] = (g1, g2)
    relations = []
    for aid, (_, mid_in) in meta.items():
        for bid, (mid_out, _) in meta.items():
            if mid_in[0] != mid_out[0]:
                continue
            if mid_in[1] != mid_out[1]:
                relations.append((aid, bid))
    return presentation(list(names), arrows, relations, grades=grades)
