import pytest

from gentle_silt.errors import InternalConsistencyError, UnsupportedTopologyError
from gentle_silt.fixtures import corpus, type_a, type_a_tilde
from gentle_silt.quivers import canonical_form, presentation
from gentle_silt.surfaces import (
    algebra_from_surface,
    assemble_surface,
    dissection_algebra,
    surface_from_algebra,
    surfaces_from_algebra,
    winding_cut_arc,
)


def test_a2_disk():
    s = surface_from_algebra(type_a(">"))
    assert s.kind == "disk"
    assert s.components == (("m0", "m1", "m2"),)
    assert len(s.faces) == 3
    assert s.fans == {"m0": ("1", "2"), "m1": ("1",), "m2": ("2",)}
    assert s.arc_ends["2"] == (("m0", 1), ("m2", 0))
    assert winding_cut_arc(s) is None


def test_zigzag_disk():
    s = surface_from_algebra(type_a("><"))
    assert s.kind == "disk"
    assert len(s.points()) == 4
    # both arcs of the sink's fan meet at m0 and m2
    assert s.fans["m0"] == ("1", "2")
    assert s.fans["m2"] == ("3", "2")
    assert sorted(p for p in s.points() if s.dot_in_E(p)) == ["m0", "m2"]


def test_kronecker_annulus():
    s = surface_from_algebra(type_a_tilde(1, 1))
    assert s.kind == "annulus"
    assert s.components == (("m0",), ("m1",))
    assert len(s.faces) == 2
    assert winding_cut_arc(s) == "v0"
    # one marked point per circle, both arcs spanning
    for v in ("v0", "v1"):
        (p0, _), (p1, _) = s.arc_ends[v]
        assert {s.component_of(p0), s.component_of(p1)} == {0, 1}


def test_atilde21_annulus():
    s = surface_from_algebra(type_a_tilde(2, 1))
    assert s.kind == "annulus"
    assert s.components == (("m0",), ("m1", "m2"))
    assert len(s.faces) == 3
    assert s.fans["m0"] == ("v0", "v1", "v2")


def test_every_face_is_elementary():
    for name, pres in corpus().items():
        s = surface_from_algebra(pres)
        assert s.is_hereditary_shape(), name
        for f in s.faces:
            assert f.bd is not None, name


def test_boundary_walk_closes():
    s = surface_from_algebra(type_a(">><"))
    for comp in s.components:
        for i, p in enumerate(comp):
            assert s.successor(p) == comp[(i + 1) % len(comp)]
            assert s.predecessor(comp[(i + 1) % len(comp)]) == p


def test_algebra_surface_roundtrip():
    for name, pres in corpus().items():
        s = surface_from_algebra(pres)
        back = algebra_from_surface(s)
        assert canonical_form(back) == canonical_form(pres), name


def test_dissection_algebra_grades_corners():
    s = surface_from_algebra(type_a(">"))
    graded, _ = dissection_algebra(s.fans, s.arc_ends, arc_grades={"1": 2, "2": 5})
    # the single corner arrow at m0 runs between the fans' two arcs
    (aid,) = [a.id for a in graded.arrows]
    assert graded.grades[aid] == 2 - 5


def test_disconnected_algebra_yields_one_surface_per_component():
    pres = presentation(
        ["1", "2", "3", "4"],
        [("a", "1", "2"), ("b", "4", "3")],
    )
    surfaces = surfaces_from_algebra(pres)
    assert len(surfaces) == 2
    assert all(s.kind == "disk" for s in surfaces)
    with pytest.raises(Exception):
        surface_from_algebra(pres)


def test_nonclosing_dissection_is_rejected():
    # an arc with both ends at one point cannot be oriented consistently
    fans = {"m0": ("x", "x")}
    ends = {"x": (("m0", 0), ("m0", 1))}
    pres, ca = dissection_algebra(fans, ends)
    with pytest.raises(InternalConsistencyError):
        assemble_surface(pres, fans, ends, ca)


def test_higher_genus_shapes_are_rejected():
    # two parallel chords between two fans each of size 2, ends crossed so the
    # trace produces a single boundary circle on a genus-1 patch
    fans = {"m0": ("x", "y"), "m1": ("x", "y")}
    ends = {
        "x": (("m0", 0), ("m1", 0)),
        "y": (("m0", 1), ("m1", 1)),
    }
    pres, ca = dissection_algebra(fans, ends)
    s = assemble_surface(pres, fans, ends, ca)  # this one is the annulus
    assert s.kind == "annulus"
    crossed = {
        "x": (("m0", 0), ("m1", 1)),
        "y": (("m0", 1), ("m1", 0)),
    }
    pres2, ca2 = dissection_algebra(fans, crossed)
    with pytest.raises((UnsupportedTopologyError, InternalConsistencyError)):
        assemble_surface(pres2, fans, crossed, ca2)
