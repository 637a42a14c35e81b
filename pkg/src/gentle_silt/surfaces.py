"""Marked ribbon surfaces modelling gentle algebras.

A gentle presentation is encoded as a dissected surface: one arc per algebra
vertex, marked points given by the maximal fans of arcs glued along surviving
compositions, and elementary faces read off by tracing corridors between arcs.
Supported topologies are the disk and the annulus; anything else (higher genus,
more than two boundary circles) raises UnsupportedTopologyError.

Conventions, fixed once for the whole package:

* at a marked point the incident arc ends are linearly ordered (the fan); the
  corner between fan positions k and k+1 carries an algebra arrow pointing
  from the arc at k to the arc at k+1;
* going around a marked point the local order is: outgoing boundary edge,
  fan position 0, 1, ..., last, incoming boundary edge;
* every elementary face has exactly one boundary edge, except the faces that
  wrap an unmarked boundary circle (those occur only for non-hereditary
  algebras of infinite global dimension).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import (
    InternalConsistencyError,
    NotFiniteDimensionalError,
    StructuralError,
    UnsupportedTopologyError,
)
from .quivers import GentlePresentation, connected_components, require_gentle


@dataclass(frozen=True)
class Face:
    """One elementary polygon of the dissection.

    arc_edges are (arc vertex, from point, to point) traversals in trace
    order; bd is the (from point, to point) boundary edge, or None for a face
    wrapping an unmarked boundary circle.
    """

    arc_edges: tuple
    bd: tuple | None

    def n_arc_edges(self) -> int:
        return len(self.arc_edges)

    def is_digon(self) -> bool:
        return self.bd is not None and len(self.arc_edges) == 1


@dataclass
class Surface:
    pres: GentlePresentation
    kind: str  # "disk" or "annulus"
    components: tuple  # tuple of tuples of point ids, in boundary order
    fans: dict  # point id -> tuple of arc vertices
    arc_ends: dict  # arc vertex -> ((point, fan idx), (point, fan idx)) by slot
    corner_arrow: dict  # (point, fan idx) -> arrow id between fan[k], fan[k+1]
    faces: tuple  # tuple of Face
    succ: dict  # point -> next point along its boundary component
    face_of_bd: dict  # point p -> index of the face whose bd edge is (p, succ[p])
    wedge_face: dict  # (point, k) -> face index of the corner fan[k], fan[k+1]
    face_of_traversal: dict  # (arc vertex, from point) -> face index
    _pred: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self._pred:
            self._pred = {q: p for p, q in self.succ.items()}

    # -- navigation --

    def points(self) -> list:
        return [p for comp in self.components for p in comp]

    def successor(self, p) -> str:
        return self.succ[p]

    def predecessor(self, p) -> str:
        return self._pred[p]

    def fan(self, p) -> tuple:
        return self.fans[p]

    def fan_position(self, p, v) -> int:
        return self.fans[p].index(v)

    def ends_of_arc(self, v) -> tuple:
        return self.arc_ends[v]

    def end_at(self, v, p) -> tuple:
        """(point, fan idx) of arc v's end at p; the arc must end there."""
        for e in self.arc_ends[v]:
            if e[0] == p:
                return e
        raise StructuralError(f"arc {v} has no end at {p}")

    def other_end(self, v, p) -> tuple:
        e0, e1 = self.arc_ends[v]
        if e0[0] == p:
            return e1
        if e1[0] == p:
            return e0
        raise StructuralError(f"arc {v} has no end at {p}")

    def component_of(self, p) -> int:
        for i, comp in enumerate(self.components):
            if p in comp:
                return i
        raise StructuralError(f"unknown point {p}")

    def dot_in_E(self, p) -> bool:
        """Is the extra point on the boundary edge leaving p in the digon set."""
        return self.faces[self.face_of_bd[p]].is_digon()

    def n_unmarked_circles(self) -> int:
        return sum(1 for f in self.faces if f.bd is None)

    def is_hereditary_shape(self) -> bool:
        return all(f.bd is not None and len(f.arc_edges) <= 2 for f in self.faces)


def _assign_slots(pres) -> dict:
    """arrow id -> (slot at source, slot at target), each slot in {0, 1}.

    At every vertex the two ends of its arc are the slots; arrows attach to a
    slot so that an (incoming, outgoing) pair shares a slot exactly when the
    composition survives.  Gentleness makes this locally satisfiable; the
    lexicographically first solution keeps the construction deterministic.
    """
    src_slot = {}
    tgt_slot = {}
    for v in pres.vertices:
        outs = sorted(a.id for a in pres.out_arrows(v))
        ins = sorted(a.id for a in pres.in_arrows(v))
        ends = [("out", a) for a in outs] + [("in", a) for a in ins]
        found = None
        for bits in itertools.product((0, 1), repeat=len(ends)):
            s = dict(zip(ends, bits))
            if len(outs) == 2 and s[("out", outs[0])] == s[("out", outs[1])]:
                continue
            if len(ins) == 2 and s[("in", ins[0])] == s[("in", ins[1])]:
                continue
            ok = True
            for b in ins:
                for a in outs:
                    same = s[("in", b)] == s[("out", a)]
                    if pres.is_relation(b, a):
                        if same:
                            ok = False
                    else:
                        if not same:
                            ok = False
                if not ok:
                    break
            if ok:
                found = s
                break
        if found is None:
            raise InternalConsistencyError(f"no slot assignment at vertex {v}")
        for a in outs:
            src_slot[a] = found[("out", a)]
        for b in ins:
            tgt_slot[b] = found[("in", b)]
    return {a.id: (src_slot[a.id], tgt_slot[a.id]) for a in pres.arrows}


def _chains(pres, slots):
    """Maximal chains of arc ends glued along surviving compositions.

    Returns a list of (nodes, arrows): nodes = [(vertex, slot), ...] in fan
    order, arrows = arrow ids joining consecutive nodes.
    """
    nodes = [(v, s) for v in pres.vertices for s in (0, 1)]
    out_link = {}
    in_link = {}
    for a in pres.arrows:
        ssrc, stgt = slots[a.id]
        u = (a.source, ssrc)
        w = (a.target, stgt)
        if u in out_link or w in in_link:
            raise InternalConsistencyError("slot carries two arrows one way")
        out_link[u] = (a.id, w)
        in_link[w] = (a.id, u)
    chains = []
    seen = set()
    for start in nodes:
        if start in seen or start in in_link:
            continue
        chain = [start]
        arrows = []
        cur = start
        while cur in out_link:
            aid, nxt = out_link[cur]
            arrows.append(aid)
            cur = nxt
            chain.append(cur)
        seen.update(chain)
        chains.append((chain, arrows))
    leftover = [x for x in nodes if x not in seen]
    if leftover:
        # every leftover node sits on a cycle of surviving compositions
        raise NotFiniteDimensionalError(
            "cyclic fan: some composable cycle avoids all relations"
        )
    for chain, _ in chains:
        verts = [v for v, _ in chain]
        if len(set(verts)) != len(verts):
            raise UnsupportedTopologyError(
                "arc with both endpoints at one marked point"
            )
    return chains


def surface_from_algebra(pres: GentlePresentation) -> Surface:
    """Dissected marked surface of a connected gentle presentation."""
    require_gentle(pres)
    if len(connected_components(pres)) != 1:
        raise StructuralError(
            "presentation is disconnected; use surfaces_from_algebra"
        )
    slots = _assign_slots(pres)
    chains = _chains(pres, slots)
    chains.sort(key=lambda c: c[0])
    fans = {}
    corner_arrow = {}
    arc_ends = {v: [None, None] for v in pres.vertices}
    for i, (chain, arrows) in enumerate(chains):
        p = f"m{i}"
        fans[p] = tuple(v for v, _ in chain)
        for k, (v, s) in enumerate(chain):
            arc_ends[v][s] = (p, k)
        for k, aid in enumerate(arrows):
            corner_arrow[(p, k)] = aid
    for v, ends in arc_ends.items():
        if ends[0] is None or ends[1] is None:
            raise InternalConsistencyError(f"arc {v} lost an end")
        arc_ends[v] = tuple(ends)
    return assemble_surface(pres, fans, arc_ends, corner_arrow)


def assemble_surface(pres, fans, arc_ends, corner_arrow) -> Surface:
    """Complete a dissection (fans plus arc ends) into a full Surface.

    Traces the boundary and the elementary faces and settles the topology;
    raises when the data does not close up into a disk or an annulus.
    """

    def other(v, pt):
        e0, e1 = arc_ends[v]
        return e1 if e0[0] == pt else e0

    n_sides = 2 * len(arc_ends)

    # corridor from q: leave the fan-last germ, then repeatedly step one fan
    # position down at each arrival, stopping on arrival at a first germ
    def corridor(q):
        edges = []
        v = fans[q][-1]
        cur = q
        while True:
            pt, idx = other(v, cur)
            edges.append((v, cur, pt))
            if len(edges) > n_sides:
                raise InternalConsistencyError("face trace does not terminate")
            if idx == 0:
                return pt, edges
            v = fans[pt][idx - 1]
            cur = pt

    succ = {}
    corridor_edges = {}
    for q in fans:
        p, edges = corridor(q)
        if succ.get(p) is not None:
            raise InternalConsistencyError("two boundary edges leave one point")
        succ[p] = q
        corridor_edges[p] = edges
    if set(succ) != set(fans):
        raise InternalConsistencyError("boundary successor is not a bijection")

    # faces with a boundary edge: [bd(p, succ p)] + the corridor of succ p
    faces = []
    face_of_bd = {}
    wedge_face = {}
    face_of_traversal = {}
    used = set()
    for p in sorted(fans):
        q = succ[p]
        edges = corridor_edges[p]
        if edges[-1][2] != p:
            raise InternalConsistencyError("face does not close at its boundary edge")
        idx = len(faces)
        faces.append(Face(tuple(edges), (p, q)))
        face_of_bd[p] = idx
        for v, a, b in edges:
            token = (v, a)
            if token in used:
                raise InternalConsistencyError("arc side traversed twice")
            used.add(token)
            face_of_traversal[token] = idx
        # wedges: an arrival at fan position j >= 1 is followed by leaving j-1
        for (v1, _, mid), (v2, _, _) in zip(edges, edges[1:]):
            j = _arrival_index(fans, arc_ends, v1, mid)
            if fans[mid][j - 1] != v2:
                raise InternalConsistencyError("face trace broke the wedge rule")
            wedge_face[(mid, j - 1)] = idx
    # leftover traversals wrap unmarked circles
    all_tokens = [(v, e[0]) for v in pres.vertices for e in arc_ends[v]]
    for token in sorted(all_tokens):
        if token in used:
            continue
        fi = len(faces)
        edges = []
        t = token
        while True:
            v, cur = t
            pt, idx = other(v, cur)
            edges.append((v, cur, pt))
            if len(edges) > n_sides:
                raise InternalConsistencyError("face trace does not terminate")
            used.add(t)
            face_of_traversal[t] = fi
            if idx == 0:
                raise InternalConsistencyError("unmarked-circle face hit a fan end")
            wedge_face[(pt, idx - 1)] = fi
            t = (fans[pt][idx - 1], pt)
            if t == token:
                break
        faces.append(Face(tuple(edges), None))

    # boundary components from the successor cycles
    comps = []
    placed = set()
    for p in sorted(fans):
        if p in placed:
            continue
        comp = [p]
        placed.add(p)
        cur = succ[p]
        while cur != p:
            comp.append(cur)
            placed.add(cur)
            cur = succ[cur]
        comps.append(tuple(comp))

    n_unmarked = sum(1 for f in faces if f.bd is None)
    b = len(comps) + n_unmarked
    chi = len(fans) - len(pres.vertices)
    genus2 = 2 - b - chi  # = 2g
    if genus2 != 0:
        raise UnsupportedTopologyError(f"surface has positive genus (2g = {genus2})")
    if b == 1:
        kind = "disk"
    elif b == 2:
        kind = "annulus"
    else:
        raise UnsupportedTopologyError(f"surface has {b} boundary components")

    return Surface(
        pres=pres,
        kind=kind,
        components=tuple(comps),
        fans=fans,
        arc_ends=arc_ends,
        corner_arrow=corner_arrow,
        faces=tuple(faces),
        succ=succ,
        face_of_bd=face_of_bd,
        wedge_face=wedge_face,
        face_of_traversal=face_of_traversal,
    )


def _arrival_index(fans, arc_ends, v, pt) -> int:
    for p, idx in arc_ends[v]:
        if p == pt:
            return idx
    raise InternalConsistencyError(f"arc {v} does not end at {pt}")


def surfaces_from_algebra(pres: GentlePresentation) -> list:
    """One surface per connected component of the presentation."""
    return [surface_from_algebra(c) for c in connected_components(pres)]


def algebra_from_surface(surface: Surface) -> GentlePresentation:
    """Read the gentle presentation back off a dissected surface.

    Arrows are the fan corners; a composition of two corner arrows survives
    exactly when both corners sit at the same end of the shared arc.
    """
    pres, _ = dissection_algebra(surface.fans, surface.arc_ends)
    return pres


def dissection_algebra(fans, arc_ends, arc_grades=None):
    """(presentation, corner -> arrow id) of raw dissection data.

    The optional arc_grades map grades the dual closed arcs; the arrow at a
    corner inherits the difference of the grades on its two sides.
    """
    from .quivers import presentation

    def end_at(v, pt):
        for e in arc_ends[v]:
            if e[0] == pt:
                return e
        raise StructuralError(f"arc {v} has no end at {pt}")

    verts = sorted(arc_ends)
    arrows = []
    grades = {}
    at_corner = {}
    for p in sorted(fans):
        fan = fans[p]
        for k in range(len(fan) - 1):
            aid = f"x{len(arrows)}"
            arrows.append((aid, fan[k], fan[k + 1]))
            if arc_grades is not None:
                grades[aid] = arc_grades[fan[k]] - arc_grades[fan[k + 1]]
            at_corner[(p, k)] = aid
    relations = []
    for (p, k), aid in sorted(at_corner.items()):
        fan = fans[p]
        mid = fan[k + 1]
        # arrows out of mid: corners (q, j) with fans[q][j] == mid
        for q in sorted(fans):
            fq = fans[q]
            for j in range(len(fq) - 1):
                if fq[j] != mid:
                    continue
                bid = at_corner[(q, j)]
                # composition (aid, bid) survives iff both corners use the
                # same end of arc mid
                end_in = end_at(mid, p)
                end_out = end_at(mid, q)
                if end_in != end_out:
                    relations.append((aid, bid))
    return presentation(verts, arrows, relations, grades=grades), at_corner


def global_dimension_geometric(surface: Surface):
    """Max face size minus one; float('inf') with an unmarked boundary circle."""
    if surface.n_unmarked_circles():
        return float("inf")
    return max(len(f.arc_edges) - 1 for f in surface.faces)


def winding_cut_arc(surface: Surface):
    """A fixed arc joining the two boundary circles of an annulus, or None."""
    if surface.kind != "annulus":
        return None
    for v in sorted(surface.arc_ends):
        (p0, _), (p1, _) = surface.arc_ends[v]
        if surface.component_of(p0) != surface.component_of(p1):
            return v
    raise InternalConsistencyError("annulus dissection with no spanning arc")
