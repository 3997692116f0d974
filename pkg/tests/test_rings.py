import pytest

from ringlab import (
    coboundary,
    has_D_property,
    ideal_closure,
    idempotents,
    jacobson_radical,
    parse_ring_spec,
    quotient_ring,
    units,
)
from ringlab.errors import DomainError, ParseError, RingMismatch
from ringlab.rings import (
    MatrixRing,
    PolyQuotientRing,
    ProductRing,
    ResidueRing,
    UpperTriangularRing,
    Z,
)


def vals(elems):
    return {e.value for e in elems}


def test_parse_round_trip():
    for text in ["Z", "Z/6", "F2[x]", "F2[x]/(x^2+x+1)", "M2(Z/3)",
                 "UT2(Z/2)", "Z/4 x Z/9", "Z/2 x M2(Z/2)"]:
        ring = parse_ring_spec(text)
        assert parse_ring_spec(ring.spec_text) == ring


def test_parse_errors():
    for text in ["Q", "Z/", "M2(Z)", "Z/6 x", "Z/6)"]:
        with pytest.raises((ParseError, DomainError)):
            parse_ring_spec(text)


def test_residue_arithmetic_matches_ints():
    r = ResidueRing(12)
    for a in range(12):
        for b in range(12):
            assert r.add(a, b) == (a + b) % 12
            assert r.mul(a, b) == (a * b) % 12


def test_elem_ring_mismatch():
    a = ResidueRing(6).elem(2)
    b = ResidueRing(7).elem(2)
    with pytest.raises(RingMismatch):
        a + b


def test_units_and_idempotents():
    assert vals(units(ResidueRing(12))) == {1, 5, 7, 11}
    assert vals(units(Z)) == {1, -1}
    assert vals(idempotents(ResidueRing(6))) == {0, 1, 3, 4}
    assert vals(idempotents(ResidueRing(8))) == {0, 1}


def test_jacobson_radical():
    assert vals(jacobson_radical(ResidueRing(12))) == {0, 6}
    assert vals(jacobson_radical(ResidueRing(30))) == {0}
    m2 = MatrixRing(2, ResidueRing(2))
    assert vals(jacobson_radical(m2)) == {m2.zero}
    ut2 = UpperTriangularRing(2, ResidueRing(2))
    e12 = ut2.canon(((0, 1), (0, 0)))
    assert vals(jacobson_radical(ut2)) == {ut2.zero, e12}


def test_ideal_closure_sides():
    ut2 = UpperTriangularRing(2, ResidueRing(2))
    e11 = ut2.canon(((1, 0), (0, 0)))
    right = ideal_closure(ut2, "right", [e11])
    left = ideal_closure(ut2, "left", [e11])
    two = ideal_closure(ut2, "two_sided", [e11])
    assert len(right.members) == 4
    assert len(left.members) == 2
    assert two.members == right.members
    assert not right.contains_one


def test_coboundary_and_D_property():
    z6 = ResidueRing(6)
    res = coboundary(z6, 4)
    assert res.principal and res.generator == 2
    ut2 = UpperTriangularRing(2, ResidueRing(2))
    e11 = ut2.canon(((1, 0), (0, 0)))
    assert not coboundary(ut2, e11).principal
    rep = has_D_property(ut2)
    assert not rep.verdict
    assert rep.counterexample == {"a": ut2.format_elem(e11)}
    assert has_D_property(z6).verdict
    assert has_D_property(MatrixRing(2, ResidueRing(2))).verdict


def test_quotient_ring():
    assert quotient_ring(Z, -6) == ResidueRing(6)
    with pytest.raises(DomainError):
        quotient_ring(Z, 0)
    with pytest.raises(DomainError):
        quotient_ring(Z, 1)
    f4 = quotient_ring(parse_ring_spec("F2[x]"), (1, 1, 1))
    assert f4.cardinality == 4
    assert len(f4.units) == 3


def test_poly_quotient_units():
    # non-field quotient: units are the residues coprime to the modulus
    r = PolyQuotientRing(2, (0, 0, 1))  # GF(2)[x]/(x^2)
    assert r.cardinality == 4
    assert len(r.units) == 2


def test_product_ring():
    r = ProductRing([ResidueRing(4), ResidueRing(9)])
    assert r.cardinality == 36
    assert len(r.units) == 2 * 6
    assert r.commutative


def test_matrix_ring_basics():
    m2 = MatrixRing(2, ResidueRing(2))
    assert m2.cardinality == 16
    assert len(m2.units) == 6  # |GL_2(F_2)|
    assert not m2.commutative
    a = m2.canon(((1, 1), (0, 1)))
    b = m2.canon(((1, 0), (1, 1)))
    assert m2.mul(a, b) != m2.mul(b, a)


def test_search_order_prefers_fewer_atoms():
    ut2 = UpperTriangularRing(2, ResidueRing(2))
    ordered = ut2.elements
    assert ordered[0] == ut2.zero
    e11 = ut2.canon(((1, 0), (0, 0)))
    assert ordered[1] == e11


def test_cardinality_cap(monkeypatch):
    monkeypatch.setenv("RINGLAB_MAX_CARD", "100")
    with pytest.raises(DomainError):
        ResidueRing(101)
    ResidueRing(100)
    monkeypatch.setenv("RINGLAB_MAX_CARD", "200000")
    ResidueRing(101)
