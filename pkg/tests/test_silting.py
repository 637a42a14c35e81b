import pytest

from gentle_silt.complexes import hom_complexes_upto_homotopy, stalk
from gentle_silt.curves import band_module
from gentle_silt.errors import (
    BoundExceededError,
    ClassificationViolation,
    StructuralError,
)
from gentle_silt.fixtures import orientation_words, type_a, type_a_tilde
from gentle_silt.quivers import classify_hereditary_type, presentation
from gentle_silt.silting import (
    check_pair,
    classify_silted,
    endo_algebraic,
    endo_geometric,
    enumerate_stau_tilt,
    exchange_edges,
    ffas_rotate,
    ffas_stats,
    h0_of_silting,
    is_2term_silting,
    is_tau_rigid_pair,
    make_pair,
    mutate_pair,
    pair_from_obj,
    pair_of_triangulation,
    pair_to_obj,
    silting_of_pair,
    triangulation_of_pair,
    verify_no_strictly_shod,
)
from gentle_silt.linrep import string_rep
from gentle_silt.surfaces import surface_from_algebra

CATALAN = {1: 2, 2: 5, 3: 14, 4: 42, 5: 132}


@pytest.mark.parametrize("n", sorted(CATALAN))
def test_pair_counts_are_catalan(n):
    for w in orientation_words(n):
        pairs = enumerate_stau_tilt(type_a(w), "exhaustive")
        assert len(pairs) == CATALAN[n], w


def test_pair_objects():
    p = make_pair([(("2", "1"), (("a0", -1),))], ["3"])
    assert p.summand_count() == 2
    assert p.support() == {"1", "2"}
    assert pair_from_obj(pair_to_obj(p)) == p
    # specs normalize against walk reversal
    q = make_pair([(("1", "2"), (("a0", 1),))], ["3"])
    assert q == p


def test_exhaustive_needs_a_path_quiver():
    with pytest.raises(StructuralError):
        enumerate_stau_tilt(type_a_tilde(1, 1), "exhaustive")


def test_mode_parsing():
    with pytest.raises(StructuralError):
        enumerate_stau_tilt(type_a(">"), "depth:x")
    with pytest.raises(StructuralError):
        enumerate_stau_tilt(type_a(">"), "breadth:3")
    with pytest.raises(StructuralError):
        enumerate_stau_tilt(type_a(">"), "depth:-1")
    assert len(enumerate_stau_tilt(type_a(">"), "depth:0")) == 1


def test_mutation_counts_on_annuli():
    assert len(enumerate_stau_tilt(type_a_tilde(1, 1), "depth:8")) == 13
    assert len(enumerate_stau_tilt(type_a_tilde(2, 1), "depth:8")) == 34
    assert len(enumerate_stau_tilt(type_a_tilde(2, 2), "depth:8")) == 106
    assert len(enumerate_stau_tilt(type_a_tilde(3, 1), "depth:8")) == 94


def test_mutation_depth_converges_for_paths():
    # the exchange graph of a path quiver is finite, so a deep-enough
    # mutation walk finds the whole exhaustive set
    pres = type_a("><")
    everything = set(enumerate_stau_tilt(pres, "exhaustive"))
    walked = set(enumerate_stau_tilt(pres, "depth:14"))
    assert walked == everything


def test_exchange_graph_of_a2_is_a_pentagon():
    pres = type_a(">")
    pairs = enumerate_stau_tilt(pres, "exhaustive")
    edges = exchange_edges(pres, pairs)
    assert len(pairs) == 5 and len(edges) == 5
    deg = {i: 0 for i in range(5)}
    for i, j in edges:
        deg[i] += 1
        deg[j] += 1
    assert set(deg.values()) == {2}


def test_mutation_is_an_involution():
    pres = type_a("<>")
    for pair in enumerate_stau_tilt(pres, "exhaustive"):
        for slot in range(pair.summand_count()):
            other = mutate_pair(pres, pair, slot)
            assert other != pair
            back_slots = [
                s
                for s in range(other.summand_count())
                if mutate_pair(pres, other, s) == pair
            ]
            assert len(back_slots) == 1


def test_mutation_bound_events():
    events = []
    pairs = enumerate_stau_tilt(type_a_tilde(1, 1), "depth:8", string_bound=12, events=events)
    assert len(pairs) == 13
    assert len(events) == 1
    e = events[0]
    assert set(e) == {"pair", "slot", "string_bound"}
    assert e["string_bound"] == 12
    # the blocked exchange really needs a longer string
    blocked = pair_from_obj(e["pair"])
    with pytest.raises(BoundExceededError):
        mutate_pair(type_a_tilde(1, 1), blocked, e["slot"], 12)
    assert mutate_pair(type_a_tilde(1, 1), blocked, e["slot"], 14) is not None


def test_tau_rigidity_routes_agree():
    pres = type_a("><")
    s2 = string_rep(pres, ["2"], [])
    # vertex 2 is the sink of the zigzag, so its simple is projective and
    # only the vertex-2 coarc conflicts with it
    assert is_tau_rigid_pair(s2, ["1"])
    assert is_tau_rigid_pair(s2, [])
    assert not is_tau_rigid_pair(s2, ["2"])
    assert is_tau_rigid_pair([], ["1", "2", "3"], pres=pres)


def test_band_is_never_tau_rigid():
    surf = surface_from_algebra(type_a_tilde(1, 1))
    b = band_module(surf, ("v0", "v1"), ("m0", "m1"), 1)
    assert not is_tau_rigid_pair(b, [])


def test_silting_h0_roundtrip():
    pres = type_a("<><")
    pairs = enumerate_stau_tilt(pres, "exhaustive")
    for pair in pairs:
        obj = silting_of_pair(pres, pair)
        assert is_2term_silting(obj)
        assert h0_of_silting(obj) == pair


def test_shifted_free_module_is_not_silting():
    pres = type_a("><")
    both = [stalk(pres, v, 0) for v in pres.vertices]
    both += [stalk(pres, v, -1) for v in pres.vertices]
    assert not is_2term_silting(both)
    # the obstruction is a degree-one map from the stalk to its own shift
    assert hom_complexes_upto_homotopy(stalk(pres, "1", -1), stalk(pres, "1", 0), 1)[0]


def test_triangulation_roundtrip():
    pres = type_a("><")
    surf = surface_from_algebra(pres)
    for pair in enumerate_stau_tilt(pres, "exhaustive"):
        tri = triangulation_of_pair(surf, pair)
        assert pair_of_triangulation(surf, tri) == pair
        assert len(tri.curves) + len(tri.coarcs) == 3


def test_ffas_stats_keys_and_bounds():
    pres = type_a(">>")
    surf = surface_from_algebra(pres)
    for pair in enumerate_stau_tilt(pres, "exhaustive"):
        walks = ffas_rotate(surf, triangulation_of_pair(surf, pair))
        st = ffas_stats(surf, walks)
        assert set(st) == {"polygons", "max_arc_edges", "max_total_edges", "gldim_bound"}
        assert st["max_total_edges"] <= 4
        assert st["max_arc_edges"] <= 3
        assert st["gldim_bound"] <= 2


def test_endo_routes_agree_on_a3():
    pres = type_a("<>")
    surf = surface_from_algebra(pres)
    from gentle_silt.quivers import presentations_isomorphic

    for pair in enumerate_stau_tilt(pres, "exhaustive"):
        walks = ffas_rotate(surf, triangulation_of_pair(surf, pair))
        geo_graded, geo = endo_geometric(surf, walks)
        alg = endo_algebraic(silting_of_pair(pres, pair))
        assert presentations_isomorphic(geo, alg), pair


def test_classification_forms():
    a2 = classify_hereditary_type(type_a(">"))
    conn = presentation(["x", "y"], [("f", "x", "y")])
    assert classify_silted(conn, a2).tag == "1"
    semi = presentation(["x", "y"], [])
    assert classify_silted(semi, a2).tag == "2"
    assert classify_silted(semi, a2).factors == (("A", 1), ("A", 1))
    kron = classify_hereditary_type(type_a_tilde(1, 1))
    assert classify_silted(type_a_tilde(1, 1), kron).tag == "1"
    assert classify_silted(conn, kron).tag == "2"
    assert classify_silted(semi, kron).tag == "3"
    with pytest.raises(ClassificationViolation):
        # wrong rank
        classify_silted(presentation(["x"], []), a2)
    with pytest.raises(ClassificationViolation):
        # a cycle factor can never appear over a path-quiver ambient
        classify_silted(type_a_tilde(1, 1), classify_hereditary_type(type_a("><")))


def test_check_pair_record_shape():
    pres = type_a(">")
    surf = surface_from_algebra(pres)
    typ = classify_hereditary_type(pres)
    pair = enumerate_stau_tilt(pres, "exhaustive")[0]
    record, failures = check_pair(surf, typ, pair)
    assert failures == []
    assert set(record) >= {
        "pair", "polygons", "max_arc_edges", "max_total_edges",
        "gldim_bound", "endo", "gldim", "gldim_formula", "form", "factors",
    }
    assert record["gldim"] <= 2
    assert record["gldim"] <= record["gldim_bound"] <= 2


def test_verify_report_a2():
    rep = verify_no_strictly_shod(type_a(">"), mode="exhaustive")
    assert rep.verdict
    assert rep.pair_count == rep.checked_count == 5
    assert rep.algebra == "A2[<]"
    assert not rep.failures
    gldims = sorted(r["gldim"] for r in rep.records)
    assert gldims == [0, 1, 1, 1, 1]


def test_verify_report_sampling():
    rep = verify_no_strictly_shod(type_a("><>"), mode="exhaustive", sample=3)
    assert rep.pair_count == 42
    assert rep.checked_count == 14
    assert rep.verdict


def test_verify_accepts_precomputed_pairs():
    pres = type_a(">")
    pairs = enumerate_stau_tilt(pres, "exhaustive")
    rep = verify_no_strictly_shod(pres, mode="exhaustive", pairs=pairs)
    assert rep.checked_count == 5
