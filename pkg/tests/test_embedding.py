import pytest

from gentle_silt.complexes import complexes_isomorphic, make_complex, stalk
from gentle_silt.curves import curve_of_module, projective_curve
from gentle_silt.embedding import (
    complex_of_admissible,
    embed_curve,
    end_segment_case,
    projective_cover_curve,
    projective_presentation_curve,
    rotate_curve,
)
from gentle_silt.errors import StructuralError
from gentle_silt.fixtures import type_a, type_a_tilde
from gentle_silt.linrep import (
    kernel_subrep,
    min_projective_presentation,
    projective_cover_map,
    rep_of_projectives,
    representations_isomorphic,
    string_rep,
)
from gentle_silt.silting import all_strings
from gentle_silt.surfaces import surface_from_algebra

ZIGZAG = type_a("><")


@pytest.fixture(scope="module")
def zz():
    return surface_from_algebra(ZIGZAG)


def test_end_cases_on_zigzag(zz):
    s1 = curve_of_module(zz, ["1"], [])
    assert (end_segment_case(zz, s1, 0), end_segment_case(zz, s1, 1)) == ("I", "III")
    s2 = curve_of_module(zz, ["2"], [])
    assert (end_segment_case(zz, s2, 0), end_segment_case(zz, s2, 1)) == ("II", "II")
    m = curve_of_module(zz, ["1", "2", "3"], [("a0", 1), ("a1", -1)])
    assert (end_segment_case(zz, m, 0), end_segment_case(zz, m, 1)) == ("III", "III")
    with pytest.raises(StructuralError):
        end_segment_case(zz, s1, 2)


def test_rotation_of_simples(zz):
    s1 = rotate_curve(zz, curve_of_module(zz, ["1"], []))
    assert s1.arcs == ("2", "1")
    assert s1.degrees == (-1, 0)
    # the projective simple stays a stalk
    s2 = rotate_curve(zz, curve_of_module(zz, ["2"], []))
    assert s2.arcs == ("2",)
    assert s2.degrees == (0,)


def test_embedded_complexes_on_zigzag(zz):
    got = embed_curve(zz, curve_of_module(zz, ["1"], []))
    assert got == make_complex(ZIGZAG, ["2"], ["1"], [[{("a0",): 1}]])
    got = embed_curve(zz, curve_of_module(zz, ["2"], []))
    assert got == stalk(ZIGZAG, "2", 0)
    # the injective I2: P(2) -> P(1) + P(3)
    got = embed_curve(zz, curve_of_module(zz, ["1", "2", "3"], [("a0", 1), ("a1", -1)]))
    assert sorted(got.p0) == ["1", "3"] and got.p1 == ("2",)


def test_cover_and_kernel_on_zigzag(zz):
    c = curve_of_module(zz, ["1", "2", "3"], [("a0", 1), ("a1", -1)])
    assert projective_cover_curve(zz, c) == (("1", "3"), ("2",))
    c = curve_of_module(zz, ["1"], [])
    assert projective_cover_curve(zz, c) == (("1",), ("2",))


def test_projective_curves_rotate_to_stalks(zz):
    for v in ZIGZAG.vertices:
        w = projective_presentation_curve(zz, v)
        assert w.degrees == (0,)
        cx = complex_of_admissible(zz, w)
        assert cx == stalk(ZIGZAG, v, 0)


@pytest.mark.parametrize(
    "pres,bound",
    [
        (type_a("><"), 3),
        (type_a(">><"), 4),
        (type_a("<><>"), 5),
        (type_a_tilde(1, 1), 6),
        (type_a_tilde(2, 1), 6),
    ],
    ids=["zigzag", "a4", "a5", "kronecker", "atilde21"],
)
def test_embedding_equals_oracle_presentation(pres, bound):
    surf = surface_from_algebra(pres)
    for verts, links in all_strings(pres, bound):
        c = curve_of_module(surf, list(verts), [tuple(l) for l in links])
        got = embed_curve(surf, c)
        want = min_projective_presentation(string_rep(pres, verts, links))
        assert complexes_isomorphic(got, want), (verts, links)


@pytest.mark.parametrize(
    "pres,bound",
    [(type_a("><>"), 4), (type_a_tilde(2, 1), 5)],
    ids=["a4", "atilde21"],
)
def test_cover_kernel_equal_oracle(pres, bound):
    surf = surface_from_algebra(pres)
    for verts, links in all_strings(pres, bound):
        c = curve_of_module(surf, list(verts), [tuple(l) for l in links])
        cover, kernel = projective_cover_curve(surf, c)
        M = string_rep(pres, verts, links)
        P0, f = projective_cover_map(M)
        K, _ = kernel_subrep(f, P0.rep, M)
        assert representations_isomorphic(
            rep_of_projectives(pres, list(cover)).rep, P0.rep
        ), (verts, links)
        assert representations_isomorphic(
            rep_of_projectives(pres, list(kernel)).rep, K
        ), (verts, links)
