import pytest

from gentle_silt.errors import (
    NotFiniteDimensionalError,
    NotGentleError,
    NotHereditaryError,
    StructuralError,
)
from gentle_silt.fixtures import corpus, orientation_classes, reflect_word, type_a, type_a_tilde
from gentle_silt.quivers import (
    all_paths_from,
    all_paths_into,
    canonical_form,
    classify_hereditary_type,
    connected_components,
    delete_nonzero_graded_arrows,
    global_dimension_monomial,
    paths_between,
    presentation,
    presentation_from_code,
    presentations_isomorphic,
    require_gentle,
    validate_gentle,
)


def kronecker():
    return type_a_tilde(1, 1)


def test_structural_rejections():
    with pytest.raises(StructuralError):
        presentation(["1", "1"], [])
    with pytest.raises(StructuralError):
        presentation(["1", "2"], [("a", "1", "3")])
    with pytest.raises(StructuralError):
        presentation(["1", "2"], [("a", "1", "2"), ("a", "2", "1")])
    # relation must be a composable length-2 path
    with pytest.raises(StructuralError):
        presentation(["1", "2"], [("a", "1", "2")], [("a", "a")])
    with pytest.raises(StructuralError):
        presentation(["1", "2"], [("a", "1", "2")], [("a", "b")])


def test_gentle_axiom_witnesses():
    three_out = presentation(
        ["0", "1", "2", "3"],
        [("a", "0", "1"), ("b", "0", "2"), ("c", "0", "3")],
    )
    d = validate_gentle(three_out)
    assert not d
    assert ("G1", "vertex 0 is the source of more than two arrows") in d.violations

    # two ways out of b's target avoiding relations: G3
    fork = presentation(
        ["0", "1", "2", "3"],
        [("a", "0", "1"), ("b", "1", "2"), ("c", "1", "3")],
    )
    d = validate_gentle(fork)
    assert any(ax == "G3" for ax, _ in d.violations)

    # both continuations killed: G2
    killed = presentation(
        ["0", "1", "2", "3"],
        [("a", "0", "1"), ("b", "1", "2"), ("c", "1", "3")],
        [("a", "b"), ("a", "c")],
    )
    d = validate_gentle(killed)
    assert any(ax == "G2" for ax, _ in d.violations)

    with pytest.raises(NotGentleError):
        require_gentle(fork)


def test_corpus_is_gentle():
    for name, pres in corpus().items():
        assert validate_gentle(pres).ok, name


def test_path_enumeration_linear_a3():
    pres = type_a(">>")
    paths = all_paths_from(pres, "1")
    assert paths == [(), ("a0",), ("a0", "a1")]
    assert all_paths_into(pres, "1") == [()]
    assert paths_between(pres, "1", "3") == [("a0", "a1")]
    assert paths_between(pres, "3", "1") == []
    assert paths_between(pres, "2", "2") == [()]


def test_path_enumeration_respects_relations():
    pres = presentation(
        ["1", "2", "3"],
        [("a", "1", "2"), ("b", "2", "3")],
        [("a", "b")],
    )
    assert all_paths_from(pres, "1") == [(), ("a",)]
    assert pres.path_is_nonzero(("a",))
    assert not pres.path_is_nonzero(("a", "b"))


def test_cyclic_composition_detected():
    loop = presentation(
        ["1", "2"],
        [("a", "1", "2"), ("b", "2", "1")],
    )
    with pytest.raises(NotFiniteDimensionalError):
        all_paths_from(loop, "1")


def test_classification_on_corpus():
    t = classify_hereditary_type(type_a("><"))
    assert (t.kind, t.n, t.orientation) == ("A", 3, "><")
    # words canonicalize against reading the path from the other end
    for w in ("<<<", ">>>"):
        assert classify_hereditary_type(type_a(w)).orientation == "<<<"
    t = classify_hereditary_type(kronecker())
    assert (t.kind, t.n, t.pq) == ("Atilde", 2, (1, 1))
    t = classify_hereditary_type(type_a_tilde(1, 3))
    assert t.pq == (3, 1)
    assert str(t) == "Atilde4(p=3,q=1)"


def test_classification_rejections():
    with pytest.raises(NotHereditaryError):
        classify_hereditary_type(
            presentation(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")], [("a", "b")])
        )
    # any relation-free gentle connected quiver IS a path or a cycle, so the
    # remaining gates are connectivity and finite dimensionality
    two_paths = presentation(
        ["1", "2", "3", "4"],
        [("a", "1", "2"), ("b", "3", "4")],
    )
    with pytest.raises(StructuralError):
        classify_hereditary_type(two_paths)
    with pytest.raises(NotFiniteDimensionalError):
        classify_hereditary_type(
            presentation(["1", "2"], [("a", "1", "2"), ("b", "2", "1")])
        )


def test_reflection_classes():
    assert reflect_word("><>") == "<><"
    assert reflect_word(">><") == "><<"
    assert len(orientation_classes(4)) == 4
    assert len(orientation_classes(7)) == 36
    for w in orientation_classes(5):
        assert classify_hereditary_type(type_a(w)).orientation == w


def test_global_dimension_monomial():
    assert global_dimension_monomial(type_a("")) == 0
    assert global_dimension_monomial(type_a("><>")) == 1
    assert global_dimension_monomial(kronecker()) == 1
    two = presentation(
        ["1", "2", "3"],
        [("a", "1", "2"), ("b", "2", "3")],
        [("a", "b")],
    )
    assert global_dimension_monomial(two) == 2
    cyclic = presentation(
        ["1", "2"],
        [("a", "1", "2"), ("b", "2", "1")],
        [("a", "b"), ("b", "a")],
    )
    assert global_dimension_monomial(cyclic) == float("inf")


def test_connected_components():
    pres = presentation(
        ["1", "2", "3", "4"],
        [("a", "1", "2"), ("b", "4", "3")],
    )
    comps = connected_components(pres)
    assert [c.vertices for c in comps] == [("1", "2"), ("3", "4")]
    assert len(connected_components(type_a(">>>"))) == 1


def test_canonical_form_separates_and_identifies():
    # same algebra under relabeling: identical codes
    p1 = presentation(["1", "2"], [("a", "1", "2")])
    p2 = presentation(["x", "y"], [("z", "y", "x")])
    assert canonical_form(p1) == canonical_form(p2)
    assert presentations_isomorphic(p1, p2)
    # orientation reversal of A3 zigzag is NOT isomorphic to the linear one
    assert canonical_form(type_a("><")) != canonical_form(type_a(">>"))
    assert not presentations_isomorphic(type_a("><"), type_a(">>"))


def test_canonical_code_decodes():
    for name, pres in corpus().items():
        code = canonical_form(pres)
        back = presentation_from_code(code)
        assert canonical_form(back) == code, name


def test_canonical_code_rejects_garbage():
    with pytest.raises(StructuralError):
        presentation_from_code("not a code")
    with pytest.raises(StructuralError):
        presentation_from_code("V2|A|0>x:0|R|")


def test_graded_arrow_deletion():
    pres = presentation(
        ["1", "2", "3"],
        [("a", "1", "2"), ("b", "2", "3")],
        grades={"b": 1},
    )
    cut = delete_nonzero_graded_arrows(pres)
    assert [a.id for a in cut.arrows] == ["a"]
    assert cut.vertices == pres.vertices
    assert not cut.relations
