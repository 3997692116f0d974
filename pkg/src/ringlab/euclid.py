"""Bezout certificates over Z and GF(p)[x].

Every gcd-type result carries the coefficients witnessing the ideal
identity, so callers (and tests) can re-check a*x + b*y = d by plain
ring arithmetic instead of trusting the search path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RingMismatch, UnsupportedRing
from .rings import Elem, EuclideanDomain, Ring, as_value


@dataclass(frozen=True)
class BezoutCertificate:
    """a*x + b*y = d with d the normalized gcd of a and b."""

    a: Elem
    b: Elem
    d: Elem
    x: Elem
    y: Elem

    def holds(self) -> bool:
        return (self.a * self.x + self.b * self.y == self.d
                and _divides(self.d, self.a) and _divides(self.d, self.b))


def _divides(d: Elem, a: Elem) -> bool:
    return d.ring.divides(d.value, a.value)


def _domain_of(a, b) -> EuclideanDomain:
    ring = None
    for v in (a, b):
        if isinstance(v, Elem):
            if ring is not None and v.ring != ring:
                raise RingMismatch(f"{v.ring} vs {ring}")
            ring = v.ring
    if ring is None:
        raise UnsupportedRing("pass Elems, or use the (ring, value) helpers")
    if not isinstance(ring, EuclideanDomain):
        raise UnsupportedRing(
            f"{ring} is not a Euclidean domain; finite rings use ideal_closure")
    return ring


def extended_gcd(a, b, ring: Ring | None = None) -> BezoutCertificate:
    """Certified gcd: returns (a, b, d, x, y) with a*x + b*y = d normalized."""
    if ring is None:
        ring = _domain_of(a, b)
    elif not isinstance(ring, EuclideanDomain):
        raise UnsupportedRing(
            f"{ring} is not a Euclidean domain; finite rings use ideal_closure")
    av, bv = as_value(ring, a), as_value(ring, b)
    d, x, y = ring.egcd(av, bv)
    cert = BezoutCertificate(Elem(ring, av), Elem(ring, bv),
                             Elem(ring, d), Elem(ring, x), Elem(ring, y))
    assert cert.holds()
    return cert


@dataclass(frozen=True)
class Lemma1Factorization:
    """a = d*a1, b = d*b1 with (a1, b1) certified coprime."""

    a: Elem
    b: Elem
    d: Elem
    a1: Elem
    b1: Elem
    certificate: BezoutCertificate

    def holds(self) -> bool:
        return (self.d * self.a1 == self.a and self.d * self.b1 == self.b
                and self.certificate.holds()
                and self.certificate.d == self.d.ring.elem(self.d.ring.one))


def lemma1_factor(a, b, ring: Ring | None = None) -> Lemma1Factorization:
    """Divide out the gcd: a = d*a1, b = d*b1 with a1*x + b1*y = 1.

    Convention for (0, 0): d = 0, a1 = 1, b1 = 0, so every stated identity
    stays checkable on the degenerate input.
    """
    if ring is None:
        ring = _domain_of(a, b)
    av, bv = as_value(ring, a), as_value(ring, b)
    if av == ring.zero and bv == ring.zero:
        d, a1, b1 = ring.zero, ring.one, ring.zero
    else:
        cert = extended_gcd(av, bv, ring)
        d = cert.d.value
        a1 = ring.exact_div(av, d)
        b1 = ring.exact_div(bv, d)
    inner = extended_gcd(a1, b1, ring)
    fact = Lemma1Factorization(Elem(ring, av), Elem(ring, bv), Elem(ring, d),
                               Elem(ring, a1), Elem(ring, b1), inner)
    assert fact.holds()
    return fact
