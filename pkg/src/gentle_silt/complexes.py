"""Two-term complexes of projectives over a gentle presentation.

Everything here is symbolic: a map between direct sums of projectives is a
matrix of path combinations.  The conventions, used consistently across the
package:

* ``Hom(P(u), P(v))`` has basis the nonzero paths ``v -> u``.
* the symbol of a composite ``g . f`` (f first) is ``concat(symb g, symb f)``,
  i.e. path combos multiply by concatenation with the left factor first.
* a ``TwoTermComplex`` lives in degrees -1 and 0; ``d[i][j]`` is the component
  ``P(p1[i]) -> P(p0[j])``, a combo of paths ``p0[j] -> p1[i]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InternalConsistencyError, StructuralError
from .exactlinalg import Matrix, is_invertible, nullspace, rank, rref
from .quivers import GentlePresentation, paths_between

PathCombo = dict  # tuple[str, ...] -> Fraction


# -- path combo arithmetic ---------------------------------------------------


def czero() -> PathCombo:
    return {}


def cunit(path: tuple) -> PathCombo:
    return {tuple(path): Fraction(1)}


def cadd(a: PathCombo, b: PathCombo) -> PathCombo:
    out = dict(a)
    for k, v in b.items():
        w = out.get(k, Fraction(0)) + v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def cscale(a: PathCombo, s: Fraction) -> PathCombo:
    if not s:
        return {}
    return {k: v * s for k, v in a.items()}


def cneg(a: PathCombo) -> PathCombo:
    return {k: -v for k, v in a.items()}


def cis_zero(a: PathCombo) -> bool:
    return not a


def cmul(pres: GentlePresentation, a: PathCombo, b: PathCombo) -> PathCombo:
    """Concatenate a then b; terms whose junction hits a relation drop out."""
    out: PathCombo = {}
    for pa, va in a.items():
        for pb, vb in b.items():
            if pa and pb:
                if pres.path_target(pa) != pres.path_source(pb):
                    raise StructuralError("combo product of non-composable paths")
                if pres.is_relation(pa[-1], pb[0]):
                    continue
            path = pa + pb
            if path and not pres.path_is_nonzero(path):
                # a longer stretch may hit a relation even when the junction
                # alone does not; with quadratic monomial relations the
                # junction check suffices, but stay defensive
                continue
            w = out.get(path, Fraction(0)) + va * vb
            if w:
                out[path] = w
            else:
                out.pop(path, None)
    return out


def combo_inverse(pres: GentlePresentation, a: PathCombo) -> PathCombo:
    """Invert a combo of cycles at one vertex whose scalar part is nonzero.

    a = c*e_v + r with r spanned by paths of length >= 1 (hence nilpotent in a
    finite-dimensional algebra); the inverse is the usual geometric series.
    """
    c = a.get((), Fraction(0))
    if not c:
        raise StructuralError("combo is not invertible (no scalar part)")
    r = {k: v for k, v in a.items() if k}
    inv = {(): Fraction(1) / c}
    term = {(): Fraction(1)}
    guard = 0
    while True:
        term = cmul(pres, term, cscale(r, Fraction(-1) / c))
        if cis_zero(term):
            break
        inv = cadd(inv, cscale(term, Fraction(1) / c))
        guard += 1
        if guard > len(pres.arrows) + 1:
            raise InternalConsistencyError("non-nilpotent radical part in combo")
    return inv


# -- two-term complexes ------------------------------------------------------


@dataclass(frozen=True)
class TwoTermComplex:
    """P1 -> P0 in degrees -1, 0; summands listed by vertex id."""

    pres: GentlePresentation
    p1: tuple
    p0: tuple
    d: tuple  # tuple of rows; row i is a tuple of PathCombo, one per p0 summand

    def __post_init__(self):
        if len(self.d) != len(self.p1):
            raise StructuralError("differential row count != number of P1 summands")
        for row in self.d:
            if len(row) != len(self.p0):
                raise StructuralError("differential column count != number of P0 summands")
        for i, u in enumerate(self.p1):
            for j, v in enumerate(self.p0):
                for path in self.d[i][j]:
                    if path == ():
                        if u != v:
                            raise StructuralError("trivial path between distinct vertices")
                        continue
                    if self.pres.path_source(path) != v or self.pres.path_target(path) != u:
                        raise StructuralError(
                            f"entry path {path} is not a path {v} -> {u}"
                        )
                    if not self.pres.path_is_nonzero(path):
                        raise StructuralError(f"entry path {path} is zero in the algebra")

    def entry(self, i: int, j: int) -> PathCombo:
        return self.d[i][j]

    def is_minimal(self) -> bool:
        return all(
            not self.d[i][j].get(())
            for i in range(len(self.p1))
            for j in range(len(self.p0))
        )

    def total_summands(self) -> int:
        return len(self.p1) + len(self.p0)

    def is_zero(self) -> bool:
        return not self.p1 and not self.p0


def make_complex(pres, p1: Sequence, p0: Sequence, d: Sequence) -> TwoTermComplex:
    rows = tuple(tuple(dict(e) for e in row) for row in d)
    return TwoTermComplex(pres, tuple(p1), tuple(p0), rows)


def stalk(pres, v, degree: int) -> TwoTermComplex:
    """P(v) concentrated in degree 0, or P(v)[1] in degree -1."""
    if degree == 0:
        return TwoTermComplex(pres, (), (v,), ())
    if degree == -1:
        return TwoTermComplex(pres, (v,), (), ((),))
    raise StructuralError("two-term stalks live in degree 0 or -1")


def direct_sum(parts: Iterable[TwoTermComplex]) -> TwoTermComplex:
    parts = list(parts)
    if not parts:
        raise StructuralError("empty direct sum")
    pres = parts[0].pres
    for s in parts:
        if s.pres is not pres and s.pres != pres:
            raise StructuralError("direct sum over different presentations")
    p1 = tuple(v for s in parts for v in s.p1)
    p0 = tuple(v for s in parts for v in s.p0)
    rows = []
    for k, s in enumerate(parts):
        pre0 = sum(len(t.p0) for t in parts[:k])
        post0 = len(p0) - pre0 - len(s.p0)
        for row in s.d:
            rows.append(tuple([{}] * pre0) + tuple(dict(e) for e in row) + tuple([{}] * post0))
    return TwoTermComplex(pres, p1, p0, tuple(rows))


# -- linear systems over path coordinates ------------------------------------


class _MapSpace:
    """Coordinates for matrices of combos between two lists of projectives.

    src[i] -> tgt[j] components; the coordinate basis at (i, j) is the list of
    nonzero paths tgt[j] -> src[i] (plus the trivial path when the vertices
    agree).
    """

    def __init__(self, pres, src: Sequence, tgt: Sequence):
        self.pres = pres
        self.src = tuple(src)
        self.tgt = tuple(tgt)
        self.vars = []
        self.index = {}
        for i, u in enumerate(self.src):
            for j, v in enumerate(self.tgt):
                for path in paths_between(pres, v, u):
                    self.index[(i, j, path)] = len(self.vars)
                    self.vars.append((i, j, path))

    @property
    def dim(self) -> int:
        return len(self.vars)

    def matrix_of(self, vec: Sequence) -> list:
        rows = [[{} for _ in self.tgt] for _ in self.src]
        for k, (i, j, path) in enumerate(self.vars):
            c = vec[k]
            if c:
                rows[i][j] = cadd(rows[i][j], {path: Fraction(c)})
        return rows

    def vector_of(self, mat: Sequence) -> list:
        vec = [Fraction(0)] * len(self.vars)
        for i in range(len(self.src)):
            for j in range(len(self.tgt)):
                for path, c in mat[i][j].items():
                    k = self.index.get((i, j, path))
                    if k is None:
                        raise InternalConsistencyError("combo outside the path basis")
                    vec[k] = Fraction(c)
        return vec


def _compose_matrices(pres, a, b, n_src, n_mid, n_tgt):
    """Symbol of (B . A): a is src->mid, b is mid->tgt, result src->tgt."""
    out = [[{} for _ in range(n_tgt)] for _ in range(n_src)]
    for i in range(n_src):
        for j in range(n_tgt):
            acc = {}
            for k in range(n_mid):
                acc = cadd(acc, cmul(pres, b[k][j], a[i][k]))
            out[i][j] = acc
    return out


def chain_map_space(S: TwoTermComplex, T: TwoTermComplex):
    """Basis of chain maps S -> T, as (f1, f0) pairs of combo matrices."""
    pres = S.pres
    sp1 = _MapSpace(pres, S.p1, T.p1)
    sp0 = _MapSpace(pres, S.p0, T.p0)
    nvars = sp1.dim + sp0.dim
    # constraint: f0 . d_S = d_T . f1, one equation per path coordinate of
    # the (S.p1 -> T.p0) map space
    eq_space = _MapSpace(pres, S.p1, T.p0)
    rows = []
    for k in range(nvars):
        vec = [Fraction(0)] * nvars
        vec[k] = Fraction(1)
        f1 = sp1.matrix_of(vec[: sp1.dim])
        f0 = sp0.matrix_of(vec[sp1.dim:])
        lhs = _compose_matrices(pres, [list(r) for r in S.d], f0, len(S.p1), len(S.p0), len(T.p0))
        rhs = _compose_matrices(pres, f1, [list(r) for r in T.d], len(S.p1), len(T.p1), len(T.p0))
        diff = [[cadd(lhs[i][j], cneg(rhs[i][j])) for j in range(len(T.p0))] for i in range(len(S.p1))]
        rows.append(eq_space.vector_of(diff))
    # rows[k] is the image of basis vector k; constraints say the combination
    # lies in the kernel of the (nvars x eqdim) map
    a = [[rows[k][r] for k in range(nvars)] for r in range(eq_space.dim)]
    sols = nullspace(a, n_cols=nvars)
    out = []
    for vec in sols:
        out.append((sp1.matrix_of(vec[: sp1.dim]), sp0.matrix_of(vec[sp1.dim:])))
    return out, (sp1, sp0)


def _nullhomotopic_vectors(S: TwoTermComplex, T: TwoTermComplex, sp1: _MapSpace, sp0: _MapSpace):
    """Flat (f1, f0) vectors spanning the null-homotopic chain maps S -> T."""
    pres = S.pres
    hsp = _MapSpace(pres, S.p0, T.p1)
    vecs = []
    for k in range(hsp.dim):
        hv = [Fraction(0)] * hsp.dim
        hv[k] = Fraction(1)
        h = hsp.matrix_of(hv)
        f1 = _compose_matrices(pres, [list(r) for r in S.d], h, len(S.p1), len(S.p0), len(T.p1))
        f0 = _compose_matrices(pres, h, [list(r) for r in T.d], len(S.p0), len(T.p1), len(T.p0))
        vecs.append(sp1.vector_of(f1) + sp0.vector_of(f0))
    return vecs


def hom_complexes_upto_homotopy(S: TwoTermComplex, T: TwoTermComplex, shift: int = 0):
    """(dimension, representatives) of Hom_{K^b}(S, T[shift]).

    Representatives are returned for shift 0 only, as (f1, f0) combo-matrix
    pairs; other shifts return an empty list.
    """
    pres = S.pres
    if abs(shift) >= 2:
        return 0, []
    if shift == 0:
        maps, (sp1, sp0) = chain_map_space(S, T)
        if not maps:
            return 0, []
        zvecs = [sp1.vector_of(f1) + sp0.vector_of(f0) for (f1, f0) in maps]
        bvecs = _nullhomotopic_vectors(S, T, sp1, sp0)
        nb = rank(bvecs) if bvecs else 0
        dim = len(zvecs) - nb
        reps = []
        if dim:
            stack = [list(v) for v in bvecs]
            r0 = nb
            for (f1, f0), zv in zip(maps, zvecs):
                if rank(stack + [list(zv)]) > r0:
                    stack.append(list(zv))
                    r0 += 1
                    reps.append((f1, f0))
                if r0 == nb + dim:
                    break
        return dim, reps
    if shift == 1:
        # maps S^{-1} -> T^0 with no condition, modulo h0 . d_S + d_T . h1
        gsp = _MapSpace(pres, S.p1, T.p0)
        if gsp.dim == 0:
            return 0, []
        h0sp = _MapSpace(pres, S.p0, T.p0)
        h1sp = _MapSpace(pres, S.p1, T.p1)
        null_rows = []
        for k in range(h0sp.dim):
            hv = [Fraction(0)] * h0sp.dim
            hv[k] = Fraction(1)
            h0 = h0sp.matrix_of(hv)
            g = _compose_matrices(pres, [list(r) for r in S.d], h0, len(S.p1), len(S.p0), len(T.p0))
            null_rows.append(gsp.vector_of(g))
        for k in range(h1sp.dim):
            hv = [Fraction(0)] * h1sp.dim
            hv[k] = Fraction(1)
            h1 = h1sp.matrix_of(hv)
            g = _compose_matrices(pres, h1, [list(r) for r in T.d], len(S.p1), len(T.p1), len(T.p0))
            null_rows.append(gsp.vector_of(g))
        nb = rank(null_rows) if null_rows else 0
        return gsp.dim - nb, []
    # shift == -1: maps S^0 -> T^{-1} with f . d_S = 0 and d_T . f = 0
    fsp = _MapSpace(pres, S.p0, T.p1)
    if fsp.dim == 0:
        return 0, []
    eq1 = _MapSpace(pres, S.p1, T.p1)
    eq2 = _MapSpace(pres, S.p0, T.p0)
    rows = []
    for k in range(fsp.dim):
        fv = [Fraction(0)] * fsp.dim
        fv[k] = Fraction(1)
        f = fsp.matrix_of(fv)
        a = _compose_matrices(pres, [list(r) for r in S.d], f, len(S.p1), len(S.p0), len(T.p1))
        b = _compose_matrices(pres, f, [list(r) for r in T.d], len(S.p0), len(T.p1), len(T.p0))
        rows.append(eq1.vector_of(a) + eq2.vector_of(b))
    a = [[rows[k][r] for k in range(fsp.dim)] for r in range(eq1.dim + eq2.dim)]
    sols = nullspace(a, n_cols=fsp.dim)
    return len(sols), []


# -- minimization ------------------------------------------------------------


def minimize(S: TwoTermComplex) -> TwoTermComplex:
    """Split off trivial summands until no entry has an invertible part."""
    pres = S.pres
    p1 = list(S.p1)
    p0 = list(S.p0)
    d = [[dict(e) for e in row] for row in S.d]
    while True:
        pivot = None
        for i in range(len(p1)):
            for j in range(len(p0)):
                if d[i][j].get(()):
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i0, j0 = pivot
        e_inv = combo_inverse(pres, d[i0][j0])
        new_d = []
        for i in range(len(p1)):
            if i == i0:
                continue
            row = []
            for j in range(len(p0)):
                if j == j0:
                    continue
                corr = cmul(pres, cmul(pres, d[i0][j], e_inv), d[i][j0])
                row.append(cadd(d[i][j], cneg(corr)))
            new_d.append(row)
        del p1[i0]
        del p0[j0]
        d = new_d
    return TwoTermComplex(pres, tuple(p1), tuple(p0), tuple(tuple(r) for r in d))


# -- isomorphism testing -----------------------------------------------------


def _scalar_part(mat, src: Sequence, tgt: Sequence) -> Matrix:
    """(len tgt) x (len src) matrix of trivial-path coefficients."""
    out = [[Fraction(0)] * len(src) for _ in tgt]
    for i in range(len(src)):
        for j in range(len(tgt)):
            out[j][i] = mat[i][j].get((), Fraction(0))
    return out


def complexes_isomorphic(S: TwoTermComplex, T: TwoTermComplex) -> bool:
    """Isomorphism in K^b(proj), decided after minimizing both sides.

    A chain map between minimal complexes is an isomorphism exactly when its
    scalar parts in both degrees are invertible.  When the two complexes are
    isomorphic and one is indecomposable, some basis element of the chain map
    space already works; seeded random combinations cover decomposable inputs
    (Schwartz-Zippel on the determinant pair).
    """
    A = minimize(S)
    B = minimize(T)
    if sorted(A.p1) != sorted(B.p1) or sorted(A.p0) != sorted(B.p0):
        return False
    if A.is_zero():
        return True
    maps, _ = chain_map_space(A, B)
    if not maps:
        return False

    def invertible(f1, f0) -> bool:
        m1 = _scalar_part(f1, A.p1, B.p1)
        m0 = _scalar_part(f0, A.p0, B.p0)
        ok1 = (not A.p1) or is_invertible(m1)
        ok0 = (not A.p0) or is_invertible(m0)
        return ok1 and ok0

    for f1, f0 in maps:
        if invertible(f1, f0):
            return True
    if len(maps) > 1:
        state = 0x9E3779B97F4A7C15
        for _ in range(64):
            f1 = [[{} for _ in B.p1] for _ in A.p1]
            f0 = [[{} for _ in B.p0] for _ in A.p0]
            for g1, g0 in maps:
                state = (state * 6364136223846793005 + 1442695040888963407) % (1 << 64)
                c = Fraction((state >> 33) % 1023 - 511)
                if not c:
                    continue
                for i in range(len(A.p1)):
                    for j in range(len(B.p1)):
                        f1[i][j] = cadd(f1[i][j], cscale(g1[i][j], c))
                for i in range(len(A.p0)):
                    for j in range(len(B.p0)):
                        f0[i][j] = cadd(f0[i][j], cscale(g0[i][j], c))
            if invertible(f1, f0):
                return True
    return False


# -- homotopy strings --------------------------------------------------------


@dataclass(frozen=True)
class HomotopyString:
    """Walk presentation of an (indecomposable) complex of projectives.

    nodes[i] = (vertex, degree).  letters[i] joins nodes i, i+1:
    sign +1 (direct): path nodes[i+1].vertex -> nodes[i].vertex, degree +1 step;
    sign -1 (inverse): path nodes[i].vertex -> nodes[i+1].vertex, degree -1 step.
    """

    pres: GentlePresentation
    nodes: tuple
    letters: tuple

    def __post_init__(self):
        if len(self.nodes) == 0:
            raise StructuralError("homotopy string needs at least one node")
        if len(self.letters) != len(self.nodes) - 1:
            raise StructuralError("letter count must be node count - 1")
        for i, (sign, path) in enumerate(self.letters):
            v_i, n_i = self.nodes[i]
            v_j, n_j = self.nodes[i + 1]
            path = tuple(path)
            if not path:
                raise StructuralError("empty homotopy letter")
            if not self.pres.path_is_nonzero(path):
                raise StructuralError(f"letter path {path} vanishes")
            if sign == 1:
                if n_j != n_i + 1:
                    raise StructuralError("direct letter must raise the degree")
                if self.pres.path_source(path) != v_j or self.pres.path_target(path) != v_i:
                    raise StructuralError(f"direct letter {i} is not a path {v_j} -> {v_i}")
            elif sign == -1:
                if n_j != n_i - 1:
                    raise StructuralError("inverse letter must lower the degree")
                if self.pres.path_source(path) != v_i or self.pres.path_target(path) != v_j:
                    raise StructuralError(f"inverse letter {i} is not a path {v_i} -> {v_j}")
            else:
                raise StructuralError("letter sign must be +1 or -1")
        for i in range(len(self.letters) - 1):
            s1, w1 = self.letters[i]
            s2, w2 = self.letters[i + 1]
            w1, w2 = tuple(w1), tuple(w2)
            if (s1, s2) == (1, -1):
                if w1[0] == w2[0]:
                    raise StructuralError("peak letters share their first arrow")
            elif (s1, s2) == (-1, 1):
                if w1[-1] == w2[-1]:
                    raise StructuralError("valley letters share their last arrow")
            elif (s1, s2) == (1, 1):
                if self.pres.path_is_nonzero(w2 + w1):
                    raise StructuralError("consecutive direct letters compose nonzero")
            else:
                if self.pres.path_is_nonzero(w1 + w2):
                    raise StructuralError("consecutive inverse letters compose nonzero")


def complex_of_homotopy_string(hs: HomotopyString) -> TwoTermComplex:
    degs = {n for _, n in hs.nodes}
    if not degs <= {-1, 0}:
        raise StructuralError("only degrees -1 and 0 yield a two-term complex")
    p1_idx = [k for k, (_, n) in enumerate(hs.nodes) if n == -1]
    p0_idx = [k for k, (_, n) in enumerate(hs.nodes) if n == 0]
    pos1 = {k: i for i, k in enumerate(p1_idx)}
    pos0 = {k: j for j, k in enumerate(p0_idx)}
    p1 = tuple(hs.nodes[k][0] for k in p1_idx)
    p0 = tuple(hs.nodes[k][0] for k in p0_idx)
    d = [[{} for _ in p0] for _ in p1]
    for i, (sign, path) in enumerate(hs.letters):
        path = tuple(path)
        if sign == 1:
            d[pos1[i]][pos0[i + 1]] = cadd(d[pos1[i]][pos0[i + 1]], cunit(path))
        else:
            d[pos1[i + 1]][pos0[i]] = cadd(d[pos1[i + 1]][pos0[i]], cunit(path))
    return TwoTermComplex(hs.pres, p1, p0, tuple(tuple(r) for r in d))
