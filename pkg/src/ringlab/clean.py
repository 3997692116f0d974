"""Clean, exchange, neat, and adequate machinery.

Finite rings get exhaustive clean/exchange checks.  Over Z and GF(p)[x]
the quotient-based notions (neat elements, the clean-quotient idempotent
construction) reduce to finite quotients, and adequate decompositions are
produced by the gcd-iteration construction with certificate re-checks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import polys
from .errors import (
    NotClean,
    PreconditionError,
    UnsupportedRing,
    ZeroElement,
)
from .euclid import BezoutCertificate, extended_gcd
from .report import PropertyReport
from .rings import (
    Elem,
    EuclideanDomain,
    FiniteRing,
    IntegerRing,
    Ring,
    as_value,
    coboundary,
    has_D_property,
    quotient_ring,
)


@dataclass(frozen=True)
class CleanDecomposition:
    """a = e + u with e idempotent and u a unit."""

    a: Elem
    e: Elem
    u: Elem

    def holds(self) -> bool:
        ring = self.a.ring
        return (self.e * self.e == self.e
                and ring.is_unit(self.u.value)
                and self.e + self.u == self.a)


def clean_decompose(ring: FiniteRing, a) -> CleanDecomposition:
    """Find an idempotent-plus-unit decomposition, scanning idempotents in
    canonical order; raises NotClean with the failing element."""
    av = as_value(ring, a)
    for e in sorted(ring.idempotents, key=ring.search_key):
        u = ring.sub(av, e)
        if u in ring.units:
            dec = CleanDecomposition(Elem(ring, av), Elem(ring, e), Elem(ring, u))
            assert dec.holds()
            return dec
    raise NotClean(f"{ring.format_elem(av)} is not clean in {ring}", element=av)


def is_clean(ring: FiniteRing) -> PropertyReport:
    if not ring.is_finite:
        raise UnsupportedRing("clean check needs a finite ring")
    for a in ring.elements:
        try:
            clean_decompose(ring, a)
        except NotClean:
            return PropertyReport(ring.spec_text, "clean", False,
                                  counterexample={"a": ring.format_elem(a)})
    return PropertyReport(ring.spec_text, "clean", True,
                          details={"elements": ring.cardinality})


def is_exchange(ring: FiniteRing) -> PropertyReport:
    """Element-wise criterion: each a has an idempotent e in aR with
    1 - e in (1-a)R."""
    if not ring.is_finite:
        raise UnsupportedRing("exchange check needs a finite ring")
    one = ring.one
    for a in ring.elements:
        aR = ring.principal_right(a)
        compR = ring.principal_right(ring.sub(one, a))
        if not any(e in aR and ring.sub(one, e) in compR
                   for e in ring.idempotents):
            return PropertyReport(ring.spec_text, "exchange", False,
                                  counterexample={"a": ring.format_elem(a)})
    return PropertyReport(ring.spec_text, "exchange", True)


def is_neat_element(ring: EuclideanDomain, a) -> PropertyReport:
    """a is neat when R/aR is clean; a must be a nonzero non-unit."""
    av = as_value(ring, a)
    quotient = quotient_ring(ring, av)
    rep = is_clean(quotient)
    return PropertyReport(ring.spec_text, "neat_element", rep.verdict,
                          witness={"a": ring.format_elem(av),
                                   "quotient": quotient.spec_text},
                          counterexample=rep.counterexample)


# ---------------------------------------------------------------------------
# Adequate decompositions


@dataclass(frozen=True)
class AdequateDecomposition:
    """a = r*s with gcd(r, b) = 1 and every prime of s non-coprime to b."""

    a: Elem
    b: Elem
    r: Elem
    s: Elem

    def holds(self) -> bool:
        """Re-check all three conditions, the last via trial factorization."""
        ring = self.a.ring
        if self.r * self.s != self.a:
            return False
        if ring.gcd(self.r.value, self.b.value) != ring.one:
            return False
        for q in ring.factor(self.s.value) if not ring.is_unit(self.s.value) else ():
            if ring.gcd(q, self.b.value) == ring.one:
                return False
        return True


def adequate_decomposition(a, b, ring: Ring | None = None) -> AdequateDecomposition:
    """Split a into the b-coprime part r and the b-saturated part s.

    gcd iteration: repeatedly divide out gcd(t, b) into s until the
    remaining factor is coprime to b.
    """
    if ring is None:
        ring = _domain_from(a, b)
    av, bv = as_value(ring, a), as_value(ring, b)
    if av == ring.zero:
        raise ZeroElement("a must be nonzero")
    t, s = av, ring.one
    g = ring.gcd(t, bv)
    while not ring.is_unit(g):
        t = ring.exact_div(t, g)
        s = ring.mul(s, g)
        g = ring.gcd(t, bv)
    return AdequateDecomposition(Elem(ring, av), Elem(ring, bv),
                                 Elem(ring, t), Elem(ring, s))


def _domain_from(*vals) -> EuclideanDomain:
    for v in vals:
        if isinstance(v, Elem):
            if not isinstance(v.ring, EuclideanDomain):
                raise UnsupportedRing(f"{v.ring} is not a Euclidean domain")
            return v.ring
    raise UnsupportedRing("pass Elems or an explicit ring")


# ---------------------------------------------------------------------------
# The clean-quotient idempotent construction


@dataclass(frozen=True)
class Theorem5Witness:
    """a = r*s splitting plus the induced idempotent in R/aR."""

    a: Elem
    b: Elem
    c: Elem
    r: Elem
    s: Elem
    e: Elem  # element of R/aR
    certificates: tuple[BezoutCertificate, ...]

    def holds(self) -> bool:
        ring = self.a.ring
        quot = self.e.ring
        av, rv, sv = self.a.value, self.r.value, self.s.value
        if ring.mul(rv, sv) != av:
            return False
        if ring.gcd(rv, self.b.value) != ring.one:
            return False
        if ring.gcd(sv, self.c.value) != ring.one:
            return False
        if ring.gcd(rv, sv) != ring.one:
            return False
        e = self.e.value
        if quot.mul(e, e) != e:
            return False
        # e in b*(R/aR) and 1-e in c*(R/aR): image ideals are generated by
        # gcd(a, .), so membership is a divisibility test on lifts.
        gb = ring.gcd(av, self.b.value)
        gc = ring.gcd(av, self.c.value)
        lift_e = _lift(ring, quot, e)
        lift_ce = _lift(ring, quot, quot.sub(quot.one, e))
        return ring.divides(gb, lift_e) and ring.divides(gc, lift_ce)


def _lift(ring: EuclideanDomain, quotient: FiniteRing, x):
    """Canonical representative of a quotient payload back in the domain."""
    return ring.canon(x)


def _split_against(ring: EuclideanDomain, a, first, second):
    dec = adequate_decomposition(a, first, ring=ring)
    r, s = dec.r.value, dec.s.value
    if (ring.gcd(s, second) == ring.one and ring.gcd(r, s) == ring.one
            and ring.gcd(r, first) == ring.one):
        return r, s
    return None


def theorem5_idempotent(a, b, c, ring: Ring | None = None) -> Theorem5Witness:
    """Split a = r*s with r coprime to b, s coprime to c, r coprime to s,
    then return the idempotent s*v of R/aR from r*u + s*v = 1."""
    if ring is None:
        ring = _domain_from(a, b, c)
    av, bv, cv = (as_value(ring, v) for v in (a, b, c))
    if av == ring.zero:
        raise PreconditionError("a must be nonzero")
    if ring.is_unit(av):
        raise PreconditionError("a must not be a unit (trivial quotient)")
    if ring.gcd(av, ring.gcd(bv, cv)) != ring.one:
        raise PreconditionError("gcd(a, b, c) must be 1")
    split = _split_against(ring, av, bv, cv)
    if split is None:
        # symmetric fallback: collect the c-part instead
        alt = _split_against(ring, av, cv, bv)
        if alt is None:
            raise PreconditionError(
                "no decomposition a = r*s with the required coprimalities")
        r, s = alt[1], alt[0]
    else:
        r, s = split
    cert_rs = extended_gcd(r, s, ring)
    quot = quotient_ring(ring, av)
    e = quot.canon(ring.mul(s, cert_rs.y.value))
    witness = Theorem5Witness(
        a=Elem(ring, av), b=Elem(ring, bv), c=Elem(ring, cv),
        r=Elem(ring, r), s=Elem(ring, s), e=Elem(quot, e),
        certificates=(cert_rs, extended_gcd(r, bv, ring),
                      extended_gcd(s, cv, ring)))
    assert witness.holds()
    return witness


def has_neat_range_1(ring: EuclideanDomain, pairs,
                     shift_bound: int = 10) -> PropertyReport:
    """Each sampled unimodular pair (a, b) shifts to a neat element a + b*t.

    Units are vacuously neat by convention (their quotient is trivial)."""
    results = []
    for a, b in pairs:
        av, bv = as_value(ring, a), as_value(ring, b)
        if ring.gcd(av, bv) != ring.one:
            raise PreconditionError(
                f"pair ({ring.format_elem(av)}, {ring.format_elem(bv)}) "
                "is not unimodular")
        found = None
        for t in _shift_candidates(ring, shift_bound):
            cand = ring.add(av, ring.mul(bv, t))
            if ring.is_unit(cand):
                found = t
                break
            if cand != ring.zero and is_neat_element(ring, cand).verdict:
                found = t
                break
        if found is None:
            return PropertyReport(
                ring.spec_text, "neat_range_1", False,
                counterexample={"a": ring.format_elem(av),
                                "b": ring.format_elem(bv),
                                "bound": shift_bound})
        results.append({"a": ring.format_elem(av), "b": ring.format_elem(bv),
                        "shift": ring.format_elem(found)})
    return PropertyReport(ring.spec_text, "neat_range_1", True,
                          witness={"pairs": results},
                          details={"shift_bound": shift_bound})


def _shift_candidates(ring: EuclideanDomain, bound: int):
    if isinstance(ring, IntegerRing):
        yield 0
        for t in range(1, bound + 1):
            yield t
            yield -t
    else:
        yield from itertools.islice(polys.all_polys(ring.p, 1), bound)


# ---------------------------------------------------------------------------
# D-adequacy over finite rings


def is_D_adequate_element(ring: FiniteRing, a, b=None) -> PropertyReport:
    """Conditions (i)-(iii) of D-adequacy via coboundary generators.

    For each b (or the given one) a factorization a = r*s must exist with
    the coboundary generator of r unimodular against that of b, while no
    non-unit divisor of the coboundary generator of s is."""
    if not ring.is_finite:
        raise UnsupportedRing("D-adequacy checker needs a finite ring")
    if not has_D_property(ring).verdict:
        raise PreconditionError("the ring must have the D-property")
    av = as_value(ring, a)
    cob_a = coboundary(ring, av)
    if cob_a.ideal == ring.full_set:
        raise PreconditionError("RaR must be a proper ideal")
    targets = [as_value(ring, b)] if b is not None else list(ring.elements)
    one = ring.one
    for bv in targets:
        b_star = coboundary(ring, bv).generator
        bR = ring.principal_right(b_star)
        good = None
        for r, s in itertools.product(ring.elements, repeat=2):
            if ring.mul(r, s) != av:
                continue
            r_star = coboundary(ring, r).generator
            s_star = coboundary(ring, s).generator
            if one not in ring.sumset(ring.principal_right(r_star), bR):
                continue
            if _divisor_condition(ring, s_star, bR):
                good = (r, s)
                break
        if good is None:
            return PropertyReport(
                ring.spec_text, "D_adequate_element", False,
                counterexample={"a": ring.format_elem(av),
                                "b": ring.format_elem(bv)})
    return PropertyReport(ring.spec_text, "D_adequate_element", True,
                          details={"a": ring.format_elem(av),
                                   "b_checked": len(targets)})


def _divisor_condition(ring: FiniteRing, s_star, bR: frozenset) -> bool:
    """Every non-unit divisor d of s_star has dR + bR != R (via coboundaries)."""
    one = ring.one
    for d in ring.elements:
        if d in ring.units:
            continue
        if d == ring.zero and s_star != ring.zero:
            continue
        if s_star not in ring.principal_right(d):
            continue
        d_star = coboundary(ring, d).generator
        if d_star is None:
            return False
        if one in ring.sumset(ring.principal_right(d_star), bR):
            return False
    return True
