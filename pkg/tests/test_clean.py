import math

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from ringlab import (
    adequate_decomposition,
    clean_decompose,
    has_neat_range_1,
    is_clean,
    is_D_adequate_element,
    is_exchange,
    is_neat_element,
    theorem5_idempotent,
)
from ringlab.errors import PreconditionError
from ringlab.rings import (
    MatrixRing,
    PolynomialRing,
    ResidueRing,
    UpperTriangularRing,
    Z,
    parse_ring_spec,
)


def test_clean_decompositions_replay():
    for spec in ["Z/6", "Z/8", "M2(Z/2)", "UT2(Z/2)"]:
        ring = parse_ring_spec(spec)
        for a in ring.elements:
            dec = clean_decompose(ring, a)
            e, u = dec.e.value, dec.u.value
            assert ring.mul(e, e) == e
            assert ring.is_unit(u)
            assert ring.add(e, u) == a


def test_clean_equals_exchange_on_samples():
    for spec in ["Z/6", "Z/9", "Z/12", "M2(Z/2)", "UT2(Z/3)", "Z/4 x Z/9"]:
        ring = parse_ring_spec(spec)
        assert is_clean(ring).verdict == is_exchange(ring).verdict


def test_neat_elements_over_Z():
    # every proper residue ring of Z is clean, so every non-unit is neat
    for a in (2, 6, 12, -30):
        assert is_neat_element(Z, a).verdict


def test_neat_range_pairs():
    rep = has_neat_range_1(Z, [(3, 5), (4, 9), (10, 21)])
    assert rep.verdict
    with pytest.raises(PreconditionError):
        has_neat_range_1(Z, [(4, 6)])


@settings(max_examples=60)
@given(st.integers(2, 3000), st.integers(-3000, 3000), st.integers(-3000, 3000))
def test_theorem5_idempotent_oracle(a, b, c):
    if math.gcd(math.gcd(a, b), c) != 1:
        return
    w = theorem5_idempotent(a, b, c, ring=Z)
    assert w.holds()
    e = w.e.value
    assert (e * e - e) % a == 0
    assert e % math.gcd(a, b) == 0
    assert (1 - e) % math.gcd(a, c) == 0


def test_theorem5_example():
    w = theorem5_idempotent(6, 2, 3, ring=Z)
    assert (w.r.value, w.s.value, w.e.value) == (3, 2, 4)


def test_theorem5_preconditions():
    with pytest.raises(PreconditionError):
        theorem5_idempotent(0, 2, 3, ring=Z)
    with pytest.raises(PreconditionError):
        theorem5_idempotent(6, 2, 4, ring=Z)


@settings(max_examples=80)
@given(st.integers(1, 10**5), st.integers(1, 10**4))
def test_adequate_matches_factorization(a, b):
    dec = adequate_decomposition(a, b, ring=Z)
    r, s = dec.r.value, dec.s.value
    assert r * s == a
    assert math.gcd(r, b) == 1
    s_ref = 1
    for p, e in sympy.factorint(a).items():
        if b % p == 0:
            s_ref *= p ** e
    assert s == s_ref


def test_adequate_example():
    dec = adequate_decomposition(12, 10, ring=Z)
    assert (dec.r.value, dec.s.value) == (3, 4)
    assert dec.holds()


def test_adequate_poly():
    F2x = PolynomialRing(2)
    x = (0, 1)
    a = F2x.mul(x, F2x.mul(x, (1, 1)))  # x^2 (x+1)
    dec = adequate_decomposition(a, x, ring=F2x)
    assert dec.holds()
    assert dec.r.value == (1, 1)
    assert dec.s.value == (0, 0, 1)


def test_D_adequate_elements():
    z6 = ResidueRing(6)
    rep = is_D_adequate_element(z6, 2)
    assert rep.verdict
    with pytest.raises(PreconditionError):
        # RaR proper is required
        is_D_adequate_element(z6, 1)
    ut2 = UpperTriangularRing(2, ResidueRing(2))
    with pytest.raises(PreconditionError):
        # the ambient ring must satisfy the D-property
        is_D_adequate_element(ut2, ut2.canon(((0, 1), (0, 0))))
