from fractions import Fraction

import pytest

from gentle_silt.complexes import (
    HomotopyString,
    TwoTermComplex,
    cadd,
    cis_zero,
    cmul,
    combo_inverse,
    complex_of_homotopy_string,
    complexes_isomorphic,
    cunit,
    direct_sum,
    hom_complexes_upto_homotopy,
    make_complex,
    minimize,
    stalk,
)
from gentle_silt.errors import StructuralError
from gentle_silt.fixtures import type_a
from gentle_silt.quivers import presentation


A2 = type_a(">")  # 1 --a0--> 2
A3 = type_a(">>")


def s1_presentation():
    """The complex P(2) --a0--> P(1)."""
    return make_complex(A2, ["2"], ["1"], [[{("a0",): 1}]])


def test_combo_arithmetic():
    a = cunit(("a0",))
    assert cadd(a, a) == {("a0",): 2}
    assert cis_zero(cadd(a, {("a0",): Fraction(-2, 1), (): 0}) ) is False
    assert cis_zero(cadd(a, {("a0",): -1}))
    assert cmul(A3, cunit(("a0",)), cunit(("a1",))) == {("a0", "a1"): 1}
    # an entry mixes paths between one pair of vertices; anything else is a bug
    with pytest.raises(StructuralError):
        cmul(A2, cunit(("a0",)), cunit(("a0",)))


def test_combo_inverse():
    # loops survive only on relation-bearing cycles: here (b, a) is a loop at
    # vertex 2 whose square dies on the relation (a, b)
    cyc = presentation(["1", "2"], [("a", "1", "2"), ("b", "2", "1")], [("a", "b")])
    u = {(): Fraction(1), ("b", "a"): Fraction(1)}
    inv = combo_inverse(cyc, u)
    assert inv == {(): 1, ("b", "a"): -1}
    assert cmul(cyc, u, inv) == {(): 1}
    with pytest.raises(StructuralError):
        combo_inverse(cyc, cunit(("b", "a")))


def test_complex_validation():
    with pytest.raises(StructuralError):
        make_complex(A2, ["2"], ["1"], [[{("a0", "a0"): 1}]])
    with pytest.raises(StructuralError):
        # a0 runs 1 -> 2, so it is not a path 2 -> 1
        make_complex(A2, ["1"], ["2"], [[{("a0",): 1}]])
    with pytest.raises(StructuralError):
        make_complex(A2, ["1"], ["2"], [[{(): 1}]])
    with pytest.raises(StructuralError):
        TwoTermComplex(A2, ("1",), ("1",), ())


def test_stalks():
    s = stalk(A2, "1", 0)
    assert (s.p1, s.p0) == ((), ("1",))
    t = stalk(A2, "1", -1)
    assert (t.p1, t.p0) == (("1",), ())
    with pytest.raises(StructuralError):
        stalk(A2, "1", 1)
    assert not complexes_isomorphic(s, t)


def test_minimize_cancels_identity_component():
    x = make_complex(A2, ["1", "2"], ["1"], [[{(): 1}], [{("a0",): 1}]])
    assert not x.is_minimal()
    m = minimize(x)
    assert m.is_minimal()
    assert complexes_isomorphic(m, stalk(A2, "2", -1))


def test_hom_between_stalks():
    p1 = stalk(A2, "1", 0)
    p2 = stalk(A2, "2", 0)
    # maps of projectives go against the arrow: P(2) -> P(1) along a0
    assert hom_complexes_upto_homotopy(p2, p1)[0] == 1
    assert hom_complexes_upto_homotopy(p1, p2)[0] == 0
    assert hom_complexes_upto_homotopy(p1, p1)[0] == 1
    # a stalk maps to its own shift in degree 1
    assert hom_complexes_upto_homotopy(stalk(A2, "1", -1), p1, 1)[0] == 1
    assert hom_complexes_upto_homotopy(p1, stalk(A2, "1", -1), 1)[0] == 0


def test_endomorphisms_of_simple_presentation():
    x = s1_presentation()
    dim, reps = hom_complexes_upto_homotopy(x, x)
    assert dim == 1 and len(reps) == 1
    assert hom_complexes_upto_homotopy(x, x, 1)[0] == 0
    assert hom_complexes_upto_homotopy(x, x, -1)[0] == 0
    assert hom_complexes_upto_homotopy(x, x, 2)[0] == 0


def test_direct_sum_shape_and_symmetry():
    x = s1_presentation()
    p = stalk(A2, "2", 0)
    xs = direct_sum([x, p])
    assert xs.p1 == ("2",) and xs.p0 == ("1", "2")
    assert xs.entry(0, 1) == {}
    assert complexes_isomorphic(xs, direct_sum([p, x]))
    assert not complexes_isomorphic(xs, x)


def test_isomorphism_respects_basis_change():
    x = make_complex(A3, ["3"], ["1"], [[{("a0", "a1"): 1}]])
    y = make_complex(A3, ["3"], ["1"], [[{("a0", "a1"): Fraction(-7, 3)}]])
    assert complexes_isomorphic(x, y)
    z = make_complex(A3, ["3"], ["2"], [[{("a1",): 1}]])
    assert not complexes_isomorphic(x, z)


def test_homotopy_string_roundtrip():
    hs = HomotopyString(A2, (("2", -1), ("1", 0)), ((1, ("a0",)),))
    assert complex_of_homotopy_string(hs) == s1_presentation()


def test_homotopy_string_validation():
    with pytest.raises(StructuralError):
        HomotopyString(A2, (), ())
    with pytest.raises(StructuralError):
        HomotopyString(A2, (("2", -1), ("1", 0)), ((1, ()),))
    with pytest.raises(StructuralError):
        # direct letter must be a path nodes[i+1] -> nodes[i]
        HomotopyString(A2, (("1", -1), ("2", 0)), ((1, ("a0",)),))
    with pytest.raises(StructuralError):
        HomotopyString(A2, (("2", -1), ("1", 0)), ((2, ("a0",)),))
    with pytest.raises(StructuralError):
        complex_of_homotopy_string(
            HomotopyString(A3, (("2", 0), ("3", 1)), ((1, ("a1",)),))
        )
