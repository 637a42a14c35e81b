"""Quivers, gentle presentations, hereditary-type classification.

Conventions used everywhere in this package:

* Vertex and arrow ids are opaque strings; canonical ordering is lexicographic.
* A path is a tuple of arrow ids composed left to right: ``(a, b)`` means
  "a then b" and requires ``target(a) == source(b)``.  Relations are stored as
  ordered pairs in the same sense.
* ``grades`` is a total map arrow id -> int; hereditary inputs default to 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import (
    InternalConsistencyError,
    NotFiniteDimensionalError,
    NotGentleError,
    NotHereditaryError,
    NotHereditaryGentleTypeError,
    StructuralError,
)


@dataclass(frozen=True)
class Arrow:
    id: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise StructuralError("duplicate vertex ids")
        ids = [a.id for a in self.arrows]
        if len(set(ids)) != len(ids):
            raise StructuralError("duplicate arrow ids")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise StructuralError(f"arrow {a.id} references a missing vertex")


class GentlePresentation:
    """A quiver with length-2 relations and integer arrow grades.

    Immutable after construction.  Equality is structural (same ids, same
    relations, same grades); use :func:`presentations_isomorphic` for
    isomorphism up to relabeling.
    """

    def __init__(
        self,
        quiver: Quiver,
        relations: Iterable[tuple[str, str]] = (),
        grades: Mapping[str, int] | None = None,
    ):
        self.quiver = quiver
        self.relations = frozenset(tuple(r) for r in relations)
        arrow_ids = {a.id for a in quiver.arrows}
        g = dict.fromkeys(arrow_ids, 0)
        if grades:
            for k, v in grades.items():
                if k not in arrow_ids:
                    raise StructuralError(f"grade for unknown arrow {k!r}")
                g[k] = int(v)
        self.grades = g
        self._arrow = {a.id: a for a in quiver.arrows}
        for r in self.relations:
            if len(r) != 2:
                raise StructuralError(f"relation {r!r} is not a length-2 path")
            a, b = r
            if a not in self._arrow or b not in self._arrow:
                raise StructuralError(f"relation {r!r} references a missing arrow")
            if self._arrow[a].target != self._arrow[b].source:
                raise StructuralError(f"relation {r!r} is not composable")
        self._out: dict[str, list[Arrow]] = {v: [] for v in quiver.vertices}
        self._in: dict[str, list[Arrow]] = {v: [] for v in quiver.vertices}
        for a in sorted(quiver.arrows, key=lambda x: x.id):
            self._out[a.source].append(a)
            self._in[a.target].append(a)

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.quiver.vertices

    @property
    def arrows(self) -> tuple[Arrow, ...]:
        return self.quiver.arrows

    def arrow(self, aid: str) -> Arrow:
        return self._arrow[aid]

    def out_arrows(self, v: str) -> list[Arrow]:
        return list(self._out[v])

    def in_arrows(self, v: str) -> list[Arrow]:
        return list(self._in[v])

    def is_relation(self, a: str, b: str) -> bool:
        return (a, b) in self.relations

    def path_source(self, path: tuple[str, ...]) -> str:
        return self._arrow[path[0]].source

    def path_target(self, path: tuple[str, ...]) -> str:
        return self._arrow[path[-1]].target

    def path_is_nonzero(self, path: tuple[str, ...]) -> bool:
        """True iff the path is composable and avoids every relation."""
        for x, y in zip(path, path[1:]):
            if self._arrow[x].target != self._arrow[y].source:
                return False
            if (x, y) in self.relations:
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, GentlePresentation):
            return NotImplemented
        return (
            self.quiver == other.quiver
            and self.relations == other.relations
            and self.grades == other.grades
        )

    def __hash__(self):
        return hash((self.quiver, self.relations, tuple(sorted(self.grades.items()))))

    def __repr__(self):
        arrs = ",".join(f"{a.id}:{a.source}->{a.target}" for a in self.arrows)
        rels = ",".join(f"{a}{b}" for a, b in sorted(self.relations))
        return f"GentlePresentation([{arrs}]; I=[{rels}])"


def presentation(
    vertices: Iterable[str],
    arrows: Iterable[tuple[str, str, str]],
    relations: Iterable[tuple[str, str]] = (),
    grades: Mapping[str, int] | None = None,
) -> GentlePresentation:
    """Convenience constructor: arrows as (id, source, target) triples."""
    q = Quiver(tuple(str(v) for v in vertices), tuple(Arrow(*a) for a in arrows))
    return GentlePresentation(q, relations, grades)


# -- axioms ---------------------------------------------------------------


@dataclass
class Diagnostics:
    ok: bool
    violations: list[tuple[str, str]] = field(default_factory=list)

    def __bool__(self):
        return self.ok


def validate_gentle(p: GentlePresentation) -> Diagnostics:
    """Check the four gentle axioms; report every violation with a witness.

    (G1) each vertex is the source of at most two arrows and the target of at
         most two; (G2) for each arrow, at most one arrow composes with it into
         a relation on either side; (G3) for each arrow, at most one arrow
         composes with it to a nonzero path on either side; (G4) relations are
         length-2 composable paths (enforced structurally at construction).
    """
    v: list[tuple[str, str]] = []
    for vert in p.vertices:
        if len(p.out_arrows(vert)) > 2:
            v.append(("G1", f"vertex {vert} is the source of more than two arrows"))
        if len(p.in_arrows(vert)) > 2:
            v.append(("G1", f"vertex {vert} is the target of more than two arrows"))
    for a in p.arrows:
        succ_in_i = [b.id for b in p.out_arrows(a.target) if p.is_relation(a.id, b.id)]
        succ_out_i = [b.id for b in p.out_arrows(a.target) if not p.is_relation(a.id, b.id)]
        pred_in_i = [b.id for b in p.in_arrows(a.source) if p.is_relation(b.id, a.id)]
        pred_out_i = [b.id for b in p.in_arrows(a.source) if not p.is_relation(b.id, a.id)]
        if len(succ_in_i) > 1:
            v.append(("G2", f"arrow {a.id} followed by {succ_in_i} all inside I"))
        if len(pred_in_i) > 1:
            v.append(("G2", f"arrow {a.id} preceded by {pred_in_i} all inside I"))
        if len(succ_out_i) > 1:
            v.append(("G3", f"arrow {a.id} composes with {succ_out_i} outside I"))
        if len(pred_out_i) > 1:
            v.append(("G3", f"arrows {pred_out_i} compose with {a.id} outside I"))
    return Diagnostics(ok=not v, violations=v)


def require_gentle(p: GentlePresentation) -> None:
    d = validate_gentle(p)
    if not d.ok:
        raise NotGentleError("; ".join(f"{ax}: {w}" for ax, w in d.violations))


# -- paths ---------------------------------------------------------------


def all_paths_from(p: GentlePresentation, v: str) -> list[tuple[str, ...]]:
    """All nonzero paths starting at v, including the trivial path ().

    Raises NotFiniteDimensionalError when a nonzero path longer than |Q_1|
    exists (some arrow would repeat, so a composable cycle avoids I and the
    algebra is infinite dimensional).
    """
    cap = len(p.arrows)
    out: list[tuple[str, ...]] = [()]
    frontier: list[tuple[str, ...]] = [()]
    here = v
    while frontier:
        nxt = []
        for path in frontier:
            end = p.path_target(path) if path else here
            for a in p.out_arrows(end):
                if path and p.is_relation(path[-1], a.id):
                    continue
                q = path + (a.id,)
                if len(q) > cap:
                    raise NotFiniteDimensionalError(
                        f"nonzero path of length > {cap} from vertex {v}"
                    )
                out.append(q)
                nxt.append(q)
        frontier = nxt
    return out


def all_paths_into(p: GentlePresentation, v: str) -> list[tuple[str, ...]]:
    """All nonzero paths ending at v, including the trivial path ()."""
    cap = len(p.arrows)
    out: list[tuple[str, ...]] = [()]
    frontier: list[tuple[str, ...]] = [()]
    while frontier:
        nxt = []
        for path in frontier:
            start = p.path_source(path) if path else v
            for a in p.in_arrows(start):
                if path and p.is_relation(a.id, path[0]):
                    continue
                q = (a.id,) + path
                if len(q) > cap:
                    raise NotFiniteDimensionalError(
                        f"nonzero path of length > {cap} into vertex {v}"
                    )
                out.append(q)
                nxt.append(q)
        frontier = nxt
    return out


def paths_between(p: GentlePresentation, src: str, tgt: str) -> list[tuple[str, ...]]:
    """All nonzero paths src -> tgt (the trivial path when src == tgt)."""
    res = []
    for path in all_paths_from(p, src):
        end = p.path_target(path) if path else src
        if end == tgt:
            res.append(path)
    return res


# -- hereditary classification -------------------------------------------


@dataclass(frozen=True)
class HereditaryType:
    """kind "A": path quiver on n vertices, orientation word over {>,<} read
    along the path (canonicalized against reversal).  kind "Atilde": acyclic
    cycle on n vertices with (p, q) arrows in the two rotational senses,
    canonicalized p >= q >= 1.
    """

    kind: str  # "A" | "Atilde"
    n: int
    orientation: str = ""
    pq: tuple[int, int] = (0, 0)

    def __str__(self):
        if self.kind == "A":
            return f"A{self.n}[{self.orientation}]"
        return f"Atilde{self.n}(p={self.pq[0]},q={self.pq[1]})"


def _neighbors(p: GentlePresentation, v: str) -> list[str]:
    return [a.target for a in p.out_arrows(v)] + [a.source for a in p.in_arrows(v)]


def connected_components(p: GentlePresentation) -> list[GentlePresentation]:
    seen: set[str] = set()
    comps: list[GentlePresentation] = []
    for start in sorted(p.vertices):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in _neighbors(p, v):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        verts = tuple(v for v in p.vertices if v in comp)
        arrs = tuple(a for a in p.arrows if a.source in comp)
        rels = [r for r in p.relations if p.arrow(r[0]).source in comp]
        grades = {a.id: p.grades[a.id] for a in arrs}
        comps.append(GentlePresentation(Quiver(verts, arrs), rels, grades))
    return comps


def classify_hereditary_type(p: GentlePresentation) -> HereditaryType:
    require_gentle(p)
    if p.relations:
        raise NotHereditaryError(f"presentation has {len(p.relations)} relations")
    if len(connected_components(p)) != 1:
        raise StructuralError("classification requires a connected presentation")
    n = len(p.vertices)
    if n == 1 and not p.arrows:
        return HereditaryType("A", 1, "")
    deg = {v: len(_neighbors(p, v)) for v in p.vertices}
    m = len(p.arrows)
    if m == n - 1 and all(d <= 2 for d in deg.values()):
        ends = sorted(v for v, d in deg.items() if d == 1)
        if len(ends) != 2:
            raise NotHereditaryGentleTypeError("graph is not a path")
        words = []
        for start in ends:
            order = [start]
            prev = None
            while len(order) < n:
                nxt = [w for w in _neighbors(p, order[-1]) if w != prev]
                # a multi-edge would put the same neighbor twice; paths have none
                nxt = sorted(set(nxt) - {order[-1]})
                if len(nxt) != 1:
                    raise NotHereditaryGentleTypeError("graph is not a path")
                prev = order[-1]
                order.append(nxt[0])
            word = ""
            for u, w in zip(order, order[1:]):
                fwd = any(a.source == u and a.target == w for a in p.arrows)
                word += ">" if fwd else "<"
            words.append(word)
        return HereditaryType("A", n, min(words))
    if m == n and all(deg[v] == 2 for v in p.vertices):
        # cycle; walk it edge by edge (tracking used arrow ids, so parallel
        # arrows between two vertices work) and count arrows along/against
        start = sorted(p.vertices)[0]
        order = [start]
        used: set = set()
        fwd = 0
        cur = start
        while True:
            step = None
            for a in sorted(p.arrows, key=lambda a: a.id):
                if a.id in used:
                    continue
                if a.source == cur:
                    step = (a, a.target, True)
                    break
                if a.target == cur:
                    step = (a, a.source, False)
                    break
            if step is None:
                raise NotHereditaryGentleTypeError("graph is not a cycle")
            a, nxt, along = step
            used.add(a.id)
            if along:
                fwd += 1
            cur = nxt
            if cur == start:
                break
            order.append(cur)
            if len(order) > n:
                raise NotHereditaryGentleTypeError("graph is not a simple cycle")
        if len(order) != n or len(used) != m:
            raise NotHereditaryGentleTypeError("graph is not a single cycle")
        pq = (fwd, n - fwd)
        if 0 in pq:
            raise NotFiniteDimensionalError("cyclically oriented cycle")
        p_, q_ = max(pq), min(pq)
        return HereditaryType("Atilde", n, pq=(p_, q_))
    raise NotHereditaryGentleTypeError("underlying graph is neither a path nor a cycle")


def is_hereditary_gentle(p: GentlePresentation) -> bool:
    try:
        classify_hereditary_type(p)
        return True
    except (NotHereditaryError, NotHereditaryGentleTypeError, NotFiniteDimensionalError):
        return False
    except StructuralError:
        return False


def global_dimension_monomial(p: GentlePresentation):
    """Global dimension of a gentle algebra by chaining relations.

    The projective dimension of the simple at v is the longest chain of
    arrows a1, a2, ... starting at v in which every consecutive pair lies
    in the relation ideal.  Chains that close up give infinite global
    dimension.  Returns an int, or float("inf").
    """
    require_gentle(p)
    nxt: dict[str, str] = {}
    for x, y in p.relations:
        nxt[x] = y
    depth: dict[str, float] = {}

    def chain(aid: str, seen: tuple[str, ...]) -> float:
        if aid in depth:
            return depth[aid]
        if aid in seen:
            return float("inf")
        if aid not in nxt:
            depth[aid] = 0
            return 0
        d = 1 + chain(nxt[aid], seen + (aid,))
        depth[aid] = d
        return d

    best = 0.0
    for v in p.vertices:
        outs = p.out_arrows(v)
        if not outs:
            continue
        best = max(best, 1 + max(chain(a.id, ()) for a in outs))
    return int(best) if best != float("inf") else float("inf")


# -- graded arrows ---------------------------------------------------------


def delete_nonzero_graded_arrows(p: GentlePresentation) -> GentlePresentation:
    """Drop every arrow with grade != 0; keep relations whose arrows survive."""
    keep = [a for a in p.arrows if p.grades[a.id] == 0]
    ids = {a.id for a in keep}
    rels = [r for r in p.relations if r[0] in ids and r[1] in ids]
    out = GentlePresentation(Quiver(p.vertices, tuple(keep)), rels)
    d = validate_gentle(out)
    if not d.ok:
        raise InternalConsistencyError(
            "deleting graded arrows broke gentleness: " + repr(d.violations)
        )
    return out


# -- canonical form / isomorphism ------------------------------------------


def _refine_colors(p: GentlePresentation, colors: dict[str, tuple]) -> dict[str, tuple]:
    while True:
        new = {}
        for v in p.vertices:
            sig_out = sorted(
                (p.grades[a.id], colors[a.target]) for a in p.out_arrows(v)
            )
            sig_in = sorted(
                (p.grades[a.id], colors[a.source]) for a in p.in_arrows(v)
            )
            rels_here = sorted(
                1 for r in p.relations if p.arrow(r[0]).target == v
            )
            new[v] = (colors[v], tuple(sig_out), tuple(sig_in), tuple(rels_here))
        # compress to comparable ranks
        ranks = {c: i for i, c in enumerate(sorted(set(new.values())))}
        new_ranked = {v: (ranks[new[v]],) for v in p.vertices}
        if new_ranked == colors:
            return colors
        colors = new_ranked


def _encode(p: GentlePresentation, order: list[str]) -> str:
    idx = {v: i for i, v in enumerate(order)}
    base = sorted(
        (idx[a.source], idx[a.target], p.grades[a.id], a.id) for a in p.arrows
    )
    # positions of parallel twins with identical keys may swap; branch on them
    groups: list[list[int]] = []
    i = 0
    while i < len(base):
        j = i
        while j + 1 < len(base) and base[j + 1][:3] == base[i][:3]:
            j += 1
        if j > i:
            groups.append(list(range(i, j + 1)))
        i = j + 1
    arrangements = [list(range(len(base)))]
    for g in groups:
        arrangements = [
            arr[: g[0]] + list(perm) + arr[g[-1] + 1 :]
            for arr in arrangements
            for perm in itertools.permutations(g)
        ]
    best = None
    for arr in arrangements:
        pos = {base[k][3]: slot for slot, k in enumerate(arr)}
        arrows_part = ";".join(
            f"{base[k][0]}>{base[k][1]}:{base[k][2]}" for k in arr
        )
        rels_part = ";".join(
            f"{x},{y}"
            for x, y in sorted((pos[r[0]], pos[r[1]]) for r in p.relations)
        )
        code = f"V{len(order)}|A|{arrows_part}|R|{rels_part}"
        if best is None or code < best:
            best = code
    assert best is not None or not p.arrows
    if best is None:
        best = f"V{len(order)}|A||R|"
    return best


def canonical_form(p: GentlePresentation) -> str:
    """Canonical string code, equal iff presentations are isomorphic.

    Individualization-refinement search over vertex orderings; fine here since
    gentle quivers are sparse (every vertex meets at most four arrows) and
    desk-scale inputs stay under ~20 vertices.
    """
    colors = _refine_colors(p, dict.fromkeys(p.vertices, (0,)))
    best: list[str | None] = [None]

    def search(assigned: list[str], colors: dict[str, tuple]):
        if len(assigned) == len(p.vertices):
            code = _encode(p, assigned)
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        remaining = [v for v in p.vertices if v not in assigned]
        # pick the smallest color class among remaining, branch over it
        by_color: dict[tuple, list[str]] = {}
        for v in remaining:
            by_color.setdefault(colors[v], []).append(v)
        target_color = min(by_color, key=lambda c: (len(by_color[c]), c))
        for v in sorted(by_color[target_color]):
            forced = dict(colors)
            forced[v] = (-1 - len(assigned),)  # individualize
            search(assigned + [v], _refine_colors(p, forced))

    if not p.vertices:
        return "V0|A||R|"
    search([], colors)
    assert best[0] is not None
    return best[0]


def presentation_from_code(code: str) -> GentlePresentation:
    """Rebuild a presentation from a canonical_form code.

    Vertices come back as "v0".."v{n-1}", arrows as "x0", "x1", ...; the
    result's canonical form equals the input code.
    """
    parts = code.split("|")
    if (
        len(parts) != 5
        or not parts[0].startswith("V")
        or parts[1] != "A"
        or parts[3] != "R"
    ):
        raise StructuralError(f"not a canonical code: {code!r}")
    try:
        n = int(parts[0][1:])
        verts = [f"v{i}" for i in range(n)]
        arrows = []
        grades = {}
        rels = []
        if parts[2]:
            for k, tok in enumerate(parts[2].split(";")):
                st, g = tok.rsplit(":", 1)
                s, t = st.split(">")
                aid = f"x{k}"
                arrows.append((aid, f"v{int(s)}", f"v{int(t)}"))
                grades[aid] = int(g)
        if parts[4]:
            for tok in parts[4].split(";"):
                x, y = tok.split(",")
                rels.append((f"x{int(x)}", f"x{int(y)}"))
    except ValueError as exc:
        raise StructuralError(f"not a canonical code: {code!r}") from exc
    return presentation(verts, arrows, rels, grades=grades)


def presentations_isomorphic(p: GentlePresentation, q: GentlePresentation) -> bool:
    if len(p.vertices) != len(q.vertices) or len(p.arrows) != len(q.arrows):
        return False
    if len(p.relations) != len(q.relations):
        return False
    return canonical_form(p) == canonical_form(q)
