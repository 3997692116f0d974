"""Concrete rings, their elements, and ideal-theoretic primitives.

Two infinite Euclidean domains (the integers and GF(p)[x]) plus a catalog
of enumerable finite rings: residues, polynomial quotients, full and
upper-triangular matrix rings, and finite products.  Finite rings expose
exhaustive primitives (units, idempotents, Jacobson radical, one- and
two-sided ideal closures, coboundaries) with per-ring memoization.

Elements are canonical hashable payloads: ints for Z and Z/n, ascending
coefficient tuples for polynomials, nested tuples for matrices and
products.  The ``Elem`` wrapper pairs a payload with its ring and is what
the public API hands back.
"""

from __future__ import annotations

import itertools
import math
import os
import re
from dataclasses import dataclass, field
from functools import cached_property, reduce

from . import polys
from .arith import crt as int_crt
from .arith import factor_int, int_egcd, is_prime
from .errors import (
    DomainError,
    ParseError,
    RingMismatch,
    UnsupportedRing,
)
from .report import PropertyReport

DEFAULT_MAX_CARDINALITY = 1 << 16
_CARD_ENV = "RINGLAB_MAX_CARD"


def max_cardinality() -> int:
    raw = os.environ.get(_CARD_ENV)
    if raw is None:
        return DEFAULT_MAX_CARDINALITY
    try:
        return int(raw)
    except ValueError as exc:
        raise DomainError(f"bad {_CARD_ENV} value: {raw!r}") from exc


class Ring:
    """Common surface of every ring: canonical payloads and the three ops."""

    kind: str = "?"
    is_finite = False
    commutative = True

    # -- structural identity ------------------------------------------------
    def key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Ring) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return self.spec_text

    @property
    def spec_text(self) -> str:
        raise NotImplementedError

    # -- arithmetic on payloads --------------------------------------------
    def canon(self, value):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def elem(self, value) -> "Elem":
        return Elem(self, self.canon(value))

    def format_elem(self, a) -> str:
        return str(a)

    def is_unit(self, a) -> bool:
        raise NotImplementedError


@dataclass(frozen=True)
class Elem:
    """A ring element: canonical payload plus the ring it lives in."""

    ring: Ring
    value: object

    def _coerce(self, other) -> "Elem":
        if isinstance(other, Elem):
            if other.ring != self.ring:
                raise RingMismatch(f"{other.ring} vs {self.ring}")
            return other
        return self.ring.elem(other)

    def __add__(self, other):
        other = self._coerce(other)
        return Elem(self.ring, self.ring.add(self.value, other.value))

    def __sub__(self, other):
        other = self._coerce(other)
        return Elem(self.ring, self.ring.sub(self.value, other.value))

    def __mul__(self, other):
        other = self._coerce(other)
        return Elem(self.ring, self.ring.mul(self.value, other.value))

    def __neg__(self):
        return Elem(self.ring, self.ring.neg(self.value))

    def __str__(self):
        return self.ring.format_elem(self.value)


def as_value(ring: Ring, x):
    """Accept an Elem of `ring` or a raw payload; return the canonical payload."""
    if isinstance(x, Elem):
        if x.ring != ring:
            raise RingMismatch(f"element of {x.ring} used in {ring}")
        return x.value
    return ring.canon(x)


def arith(op: str, x: Elem, y: Elem | None = None) -> Elem:
    """Named dispatcher for add/mul/neg on Elems."""
    if op == "neg":
        return -x
    if y is None:
        raise ValueError(f"{op} needs two operands")
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# Euclidean domains


class EuclideanDomain(Ring):
    """Shared interface for Z and GF(p)[x]: sizes, gcds, factorization, CRT."""

    def euclid_divmod(self, a, b):
        raise NotImplementedError

    def size(self, a) -> int:
        """Euclidean size used for pivot selection (|a| resp. degree)."""
        raise NotImplementedError

    def normalize(self, a):
        """Return (n, u) with n = a*u canonical (non-negative / monic), u a unit."""
        raise NotImplementedError

    def gcd(self, a, b):
        while b != self.zero:
            a, b = b, self.euclid_divmod(a, b)[1]
        return self.normalize(a)[0]

    def egcd(self, a, b):
        """Return (d, x, y) with a*x + b*y = d and d the normalized gcd."""
        raise NotImplementedError

    def divides(self, a, b) -> bool:
        """True iff a | b."""
        if a == self.zero:
            return b == self.zero
        return self.euclid_divmod(b, a)[1] == self.zero

    def exact_div(self, a, b):
        q, r = self.euclid_divmod(a, b)
        if r != self.zero:
            raise DomainError(f"{self.format_elem(b)} does not divide "
                              f"{self.format_elem(a)}")
        return q

    def factor(self, a) -> dict:
        raise NotImplementedError

    def residues(self, m):
        """Iterate canonical residues modulo a nonzero m."""
        raise NotImplementedError

    def mod(self, a, m):
        return self.euclid_divmod(a, m)[1]

    def crt(self, residues, moduli):
        raise NotImplementedError


class IntegerRing(EuclideanDomain):
    kind = "Z"

    def key(self):
        return ("Z",)

    @property
    def spec_text(self):
        return "Z"

    def canon(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            raise DomainError(f"integer expected, got {value!r}")
        return value

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    zero = 0
    one = 1

    def is_unit(self, a):
        return a in (1, -1)

    def euclid_divmod(self, a, b):
        return divmod(a, b)

    def size(self, a):
        return abs(a)

    def normalize(self, a):
        return (abs(a), 1 if a >= 0 else -1)

    def egcd(self, a, b):
        return int_egcd(a, b)

    def factor(self, a):
        return factor_int(a)

    def residues(self, m):
        return range(abs(m))

    def crt(self, residues, moduli):
        return int_crt(list(residues), list(moduli))

    def parse_elem(self, text):
        try:
            return int(text)
        except ValueError as exc:
            raise ParseError(f"bad integer: {text!r}") from exc


class PolynomialRing(EuclideanDomain):
    """GF(p)[x] with ascending-coefficient-tuple payloads."""

    kind = "F_p[x]"

    def __init__(self, p: int):
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        self.p = p

    def key(self):
        return ("F[x]", self.p)

    @property
    def spec_text(self):
        return f"F{self.p}[x]"

    def canon(self, value):
        if isinstance(value, int):
            return polys.const(self.p, value)
        if isinstance(value, (tuple, list)):
            return polys.canon(self.p, value)
        raise DomainError(f"polynomial payload expected, got {value!r}")

    def add(self, a, b):
        return polys.add(self.p, a, b)

    def neg(self, a):
        return polys.neg(self.p, a)

    def mul(self, a, b):
        return polys.mul(self.p, a, b)

    zero = ()

    @property
    def one(self):
        return (1,)

    def is_unit(self, a):
        return polys.deg(a) == 0

    def euclid_divmod(self, a, b):
        return polys.divmod_(self.p, a, b)

    def size(self, a):
        return polys.deg(a)

    def normalize(self, a):
        n, u = polys.monic(self.p, a)
        return n, polys.const(self.p, u)

    def egcd(self, a, b):
        return polys.egcd(self.p, a, b)

    def factor(self, a):
        return polys.factor(self.p, a)

    def residues(self, m):
        return polys.all_polys(self.p, polys.deg(m) - 1)

    def crt(self, residues, moduli):
        return polys.crt(self.p, list(residues), list(moduli))

    def format_elem(self, a):
        return polys.format(a)

    def parse_elem(self, text):
        return polys.parse(self.p, text)


Z = IntegerRing()


# ---------------------------------------------------------------------------
# Finite rings


class FiniteRing(Ring):
    is_finite = True

    @property
    def cardinality(self) -> int:
        raise NotImplementedError

    def _enumerate(self):
        """Yield every payload once, in any deterministic order."""
        raise NotImplementedError

    def atoms(self, a) -> tuple:
        """Flatten a payload into a fixed-length tuple of small integers."""
        raise NotImplementedError

    def search_key(self, a):
        """Deterministic total order used by all exhaustive searches.

        Elements are graded by the number of nonzero atoms, then by the
        positions of those atoms, then by their values; so 0 comes first
        and e.g. E11 precedes E12 precedes E22 in matrix rings.
        """
        nz = [(i, v) for i, v in enumerate(self.atoms(a)) if v]
        return (len(nz), tuple(i for i, _ in nz), tuple(v for _, v in nz))

    @cached_property
    def elements(self) -> tuple:
        return tuple(sorted(self._enumerate(), key=self.search_key))

    @cached_property
    def units(self) -> frozenset:
        # brute force: x is a unit iff some y gives xy = yx = 1
        one = self.one
        out = set()
        for x in self.elements:
            for y in self.elements:
                if self.mul(x, y) == one and self.mul(y, x) == one:
                    out.add(x)
                    break
        return frozenset(out)

    def is_unit(self, a):
        return a in self.units

    @cached_property
    def idempotents(self) -> frozenset:
        return frozenset(x for x in self.elements if self.mul(x, x) == x)

    @cached_property
    def jacobson_radical(self) -> frozenset:
        """{x : 1 - r*x is a unit for every r}; equals J(R) for finite rings."""
        one, units = self.one, self.units
        out = []
        for x in self.elements:
            if all(self.sub(one, self.mul(r, x)) in units for r in self.elements):
                out.append(x)
        return frozenset(out)

    # -- ideal machinery ----------------------------------------------------

    def additive_closure(self, seed) -> frozenset:
        members = set(seed)
        members.add(self.zero)
        frontier = list(members)
        while frontier:
            nxt = []
            for a in frontier:
                for b in list(members):
                    s = self.add(a, b)
                    if s not in members:
                        members.add(s)
                        nxt.append(s)
            frontier = nxt
        return frozenset(members)

    def sumset(self, A: frozenset, B: frozenset) -> frozenset:
        cache = self.__dict__.setdefault("_sumset_cache", {})
        key = (A, B)
        hit = cache.get(key)
        if hit is None:
            hit = frozenset(self.add(a, b) for a in A for b in B)
            cache[key] = hit
            cache[(B, A)] = hit
        return hit

    def principal_right(self, a) -> frozenset:
        cache = self.__dict__.setdefault("_pr_cache", {})
        hit = cache.get(a)
        if hit is None:
            hit = frozenset(self.mul(a, r) for r in self.elements)
            cache[a] = hit
        return hit

    def principal_left(self, a) -> frozenset:
        cache = self.__dict__.setdefault("_pl_cache", {})
        hit = cache.get(a)
        if hit is None:
            hit = frozenset(self.mul(r, a) for r in self.elements)
            cache[a] = hit
        return hit

    def two_sided(self, a) -> frozenset:
        cache = self.__dict__.setdefault("_ts_cache", {})
        hit = cache.get(a)
        if hit is None:
            if self.commutative:
                hit = self.principal_right(a)
            else:
                prods = set()
                for s in self.elements:
                    xs = self.mul(a, s)
                    prods.update(self.mul(r, xs) for r in self.elements)
                hit = self.additive_closure(prods)
            cache[a] = hit
        return hit

    @cached_property
    def full_set(self) -> frozenset:
        return frozenset(self.elements)


SIDES = ("right", "left", "two_sided")


@dataclass(frozen=True)
class IdealClosure:
    """The smallest one- or two-sided ideal containing the generators."""

    ring: FiniteRing
    side: str
    generators: tuple
    members: frozenset

    @property
    def contains_one(self) -> bool:
        return self.ring.one in self.members


def ideal_closure(ring: FiniteRing, side: str, generators) -> IdealClosure:
    if not ring.is_finite:
        raise UnsupportedRing("ideal closures are computed for finite rings only")
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}")
    gens = tuple(as_value(ring, g) for g in generators)
    if not gens:
        raise ValueError("generators must be nonempty")
    if side == "right":
        parts = [ring.principal_right(g) for g in gens]
    elif side == "left":
        parts = [ring.principal_left(g) for g in gens]
    else:
        parts = [ring.two_sided(g) for g in gens]
    members = reduce(ring.sumset, parts)
    return IdealClosure(ring, side, gens, members)


@dataclass(frozen=True)
class CoboundaryResult:
    """Outcome of searching RaR for a common one-sided generator."""

    ring: FiniteRing
    a: object
    principal: bool
    generator: object | None
    ideal: frozenset


def coboundary(ring: FiniteRing, a) -> CoboundaryResult:
    """Search all b in RaR for one with RaR = bR = Rb."""
    if not ring.is_finite:
        raise UnsupportedRing("coboundary search needs a finite ring")
    av = as_value(ring, a)
    ideal = ring.two_sided(av)
    for b in sorted(ideal, key=ring.search_key):
        if ring.principal_right(b) == ideal and ring.principal_left(b) == ideal:
            return CoboundaryResult(ring, av, True, b, ideal)
    return CoboundaryResult(ring, av, False, None, ideal)


def has_D_property(ring: FiniteRing) -> PropertyReport:
    """Every nonzero a has RaR = bR = Rb for some b (Dubrovin condition)."""
    for a in ring.elements:
        if a == ring.zero:
            continue
        res = coboundary(ring, a)
        if not res.principal:
            return PropertyReport(
                ring=ring.spec_text, prop="D-property", verdict=False,
                counterexample={"a": ring.format_elem(a)},
                details={"ideal_size": len(res.ideal)})
    return PropertyReport(ring=ring.spec_text, prop="D-property", verdict=True)


class ResidueRing(FiniteRing):
    kind = "Residue"

    def __init__(self, n: int):
        if n < 2:
            raise DomainError("Z/n needs n >= 2 (the ring must have 1 != 0)")
        if n > max_cardinality():
            raise DomainError(f"cardinality {n} exceeds the configured bound")
        self.n = n

    def key(self):
        return ("Z/", self.n)

    @property
    def spec_text(self):
        return f"Z/{self.n}"

    @property
    def cardinality(self):
        return self.n

    def canon(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            raise DomainError(f"residue payload must be an int, got {value!r}")
        return value % self.n

    def add(self, a, b):
        return (a + b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    zero = 0
    one = 1

    def _enumerate(self):
        return range(self.n)

    def atoms(self, a):
        return (a,)

    @cached_property
    def units(self):
        return frozenset(x for x in range(self.n) if math.gcd(x, self.n) == 1)

    def parse_elem(self, text):
        try:
            return int(text) % self.n
        except ValueError as exc:
            raise ParseError(f"bad residue: {text!r}") from exc


class PolyQuotientRing(FiniteRing):
    """GF(p)[x]/(m) for a monic modulus m of degree >= 1."""

    kind = "PolyQuotient"

    def __init__(self, p: int, modulus):
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        m = polys.canon(p, modulus)
        if polys.deg(m) < 1:
            raise DomainError("quotient modulus must have degree >= 1")
        m = polys.monic(p, m)[0]
        self.p = p
        self.modulus = m
        if self.cardinality > max_cardinality():
            raise DomainError("cardinality exceeds the configured bound")

    def key(self):
        return ("F[x]/", self.p, self.modulus)

    @property
    def spec_text(self):
        return f"F{self.p}[x]/({polys.format(self.modulus)})"

    @property
    def cardinality(self):
        return self.p ** polys.deg(self.modulus)

    def canon(self, value):
        if isinstance(value, int):
            value = polys.const(self.p, value)
        elif isinstance(value, (tuple, list)):
            value = polys.canon(self.p, value)
        else:
            raise DomainError(f"polynomial payload expected, got {value!r}")
        return polys.mod(self.p, value, self.modulus)

    def add(self, a, b):
        return polys.add(self.p, a, b)

    def neg(self, a):
        return polys.neg(self.p, a)

    def mul(self, a, b):
        return polys.mod(self.p, polys.mul(self.p, a, b), self.modulus)

    zero = ()

    @property
    def one(self):
        return (1,)

    def _enumerate(self):
        d = polys.deg(self.modulus)
        for cs in itertools.product(range(self.p), repeat=d):
            yield polys.trim(cs)

    def atoms(self, a):
        d = polys.deg(self.modulus)
        return tuple(a[i] if i < len(a) else 0 for i in range(d))

    @cached_property
    def units(self):
        return frozenset(a for a in self._enumerate()
                         if polys.gcd(self.p, a, self.modulus) == (1,))

    def format_elem(self, a):
        return polys.format(a)

    def parse_elem(self, text):
        return self.canon(polys.parse(self.p, text))


class MatrixRing(FiniteRing):
    kind = "Matrix"

    def __init__(self, k: int, base: FiniteRing):
        if k < 1:
            raise DomainError("matrix size must be >= 1")
        if not base.is_finite:
            raise DomainError("matrix ring base must be finite")
        self.k = k
        self.base = base
        if self.cardinality > max_cardinality():
            raise DomainError("cardinality exceeds the configured bound")

    @property
    def commutative(self):
        return self.k == 1 and self.base.commutative

    def key(self):
        return ("M", self.k, self.base.key())

    @property
    def spec_text(self):
        return f"M{self.k}({self.base.spec_text})"

    @property
    def cardinality(self):
        return self.base.cardinality ** (self.k * self.k)

    def canon(self, value):
        rows = tuple(tuple(self.base.canon(v) for v in row) for row in value)
        if len(rows) != self.k or any(len(r) != self.k for r in rows):
            raise DomainError(f"expected a {self.k}x{self.k} matrix payload")
        return rows

    def add(self, a, b):
        return tuple(tuple(self.base.add(x, y) for x, y in zip(ra, rb))
                     for ra, rb in zip(a, b))

    def neg(self, a):
        return tuple(tuple(self.base.neg(x) for x in row) for row in a)

    def mul(self, a, b):
        k, base = self.k, self.base
        return tuple(
            tuple(
                reduce(base.add, (base.mul(a[i][t], b[t][j]) for t in range(k)))
                for j in range(k))
            for i in range(k))

    @cached_property
    def zero(self):
        z = self.base.zero
        return tuple((z,) * self.k for _ in range(self.k))

    @cached_property
    def one(self):
        z, o = self.base.zero, self.base.one
        return tuple(tuple(o if i == j else z for j in range(self.k))
                     for i in range(self.k))

    def _enumerate(self):
        cells = self.base.elements
        for flat in itertools.product(cells, repeat=self.k * self.k):
            yield tuple(flat[i * self.k:(i + 1) * self.k] for i in range(self.k))

    def atoms(self, a):
        return tuple(v for row in a for x in row for v in self.base.atoms(x))

    def format_elem(self, a):
        rows = ", ".join(
            "[" + ", ".join(self.base.format_elem(x) for x in row) + "]"
            for row in a)
        return f"[{rows}]"


class UpperTriangularRing(MatrixRing):
    kind = "UpperTriangular"

    def __init__(self, k: int, base: FiniteRing):
        if k < 2:
            raise DomainError("upper-triangular ring needs k >= 2")
        super().__init__(k, base)

    @property
    def commutative(self):
        return False

    def key(self):
        return ("UT", self.k, self.base.key())

    @property
    def spec_text(self):
        return f"UT{self.k}({self.base.spec_text})"

    @property
    def cardinality(self):
        return self.base.cardinality ** (self.k * (self.k + 1) // 2)

    def canon(self, value):
        rows = super().canon(value)
        z = self.base.zero
        if any(rows[i][j] != z for i in range(self.k) for j in range(i)):
            raise DomainError("entries below the diagonal must be zero")
        return rows

    def _enumerate(self):
        cells = self.base.elements
        z = self.base.zero
        free = [(i, j) for i in range(self.k) for j in range(i, self.k)]
        for choice in itertools.product(cells, repeat=len(free)):
            rows = [[z] * self.k for _ in range(self.k)]
            for (i, j), v in zip(free, choice):
                rows[i][j] = v
            yield tuple(tuple(r) for r in rows)

    def atoms(self, a):
        return tuple(v for i in range(self.k) for j in range(i, self.k)
                     for v in self.base.atoms(a[i][j]))


class ProductRing(FiniteRing):
    kind = "Product"

    def __init__(self, factors):
        factors = tuple(factors)
        if len(factors) < 2:
            raise DomainError("product needs at least two factors")
        if any(not f.is_finite for f in factors):
            raise DomainError("product factors must be finite rings")
        self.factors = factors
        if self.cardinality > max_cardinality():
            raise DomainError("cardinality exceeds the configured bound")

    @property
    def commutative(self):
        return all(f.commutative for f in self.factors)

    def key(self):
        return ("x",) + tuple(f.key() for f in self.factors)

    @property
    def spec_text(self):
        return " x ".join(f.spec_text for f in self.factors)

    @property
    def cardinality(self):
        return math.prod(f.cardinality for f in self.factors)

    def canon(self, value):
        parts = tuple(value)
        if len(parts) != len(self.factors):
            raise DomainError("component count mismatch")
        return tuple(f.canon(v) for f, v in zip(self.factors, parts))

    def add(self, a, b):
        return tuple(f.add(x, y) for f, x, y in zip(self.factors, a, b))

    def neg(self, a):
        return tuple(f.neg(x) for f, x in zip(self.factors, a))

    def mul(self, a, b):
        return tuple(f.mul(x, y) for f, x, y in zip(self.factors, a, b))

    @cached_property
    def zero(self):
        return tuple(f.zero for f in self.factors)

    @cached_property
    def one(self):
        return tuple(f.one for f in self.factors)

    def _enumerate(self):
        return itertools.product(*(f.elements for f in self.factors))

    def atoms(self, a):
        return tuple(v for f, x in zip(self.factors, a) for v in f.atoms(x))

    def format_elem(self, a):
        return "(" + ", ".join(f.format_elem(x)
                               for f, x in zip(self.factors, a)) + ")"


# ---------------------------------------------------------------------------
# Spec parsing and public enumeration wrappers


_TOKEN = re.compile(
    r"Z/(?P<res>\d+)"
    r"|F(?P<poly_p>\d+)\[x\](?:/\((?P<quot>[^()]*)\))?"
    r"|Z"
    r"|(?P<mat>M|UT)(?P<mat_k>\d+)\("
    r"|\)"
    r"|x")


def _tokenize(text: str):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected input at {text[pos:]!r}")
        out.append(m)
        pos = m.end()
    return out


def parse_ring_spec(text: str) -> Ring:
    """Parse the ring-spec grammar into a realized ring.

    Grammar: ``Z`` | ``Z/<n>`` | ``F<p>[x]`` | ``F<p>[x]/(<poly>)`` |
    ``M<k>(<finite>)`` | ``UT<k>(<finite>)`` | ``<finite> x <finite>``.
    Whitespace is ignored; ``x`` separates product factors.
    """
    tokens = _tokenize("".join(text.split()))
    pos = 0

    def parse_term():
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError("unexpected end of ring spec")
        m = tokens[pos]
        pos += 1
        if m.group("res") is not None:
            return ResidueRing(int(m.group("res")))
        if m.group("poly_p") is not None:
            p = int(m.group("poly_p"))
            if m.group("quot") is not None:
                ring = PolynomialRing(p)
                return PolyQuotientRing(p, ring.parse_elem(m.group("quot")))
            return PolynomialRing(p)
        if m.group("mat") is not None:
            inner = parse_product()
            if pos >= len(tokens) or tokens[pos].group() != ")":
                raise ParseError("missing closing parenthesis")
            pos += 1
            k = int(m.group("mat_k"))
            if not inner.is_finite:
                raise DomainError("matrix/UT base must be a finite ring")
            cls = UpperTriangularRing if m.group("mat") == "UT" else MatrixRing
            return cls(k, inner)
        if m.group() == "Z":
            return Z
        raise ParseError(f"unexpected token {m.group()!r}")

    def parse_product():
        nonlocal pos
        factors = [parse_term()]
        while pos < len(tokens) and tokens[pos].group() == "x":
            pos += 1
            factors.append(parse_term())
        if len(factors) == 1:
            return factors[0]
        if any(not f.is_finite for f in factors):
            raise DomainError("product factors must be finite rings")
        return ProductRing(factors)

    ring = parse_product()
    if pos != len(tokens):
        raise ParseError("trailing input in ring spec")
    return ring


def units(ring: Ring) -> frozenset:
    """The unit group, as a set of Elems; infinite rings answered analytically."""
    if isinstance(ring, IntegerRing):
        return frozenset({ring.elem(1), ring.elem(-1)})
    if isinstance(ring, PolynomialRing):
        return frozenset(ring.elem(c) for c in range(1, ring.p))
    if ring.is_finite:
        return frozenset(Elem(ring, u) for u in ring.units)
    raise UnsupportedRing(f"no unit enumeration for {ring}")


def is_unit(x: Elem) -> bool:
    return x.ring.is_unit(x.value)


def idempotents(ring: FiniteRing) -> frozenset:
    if not ring.is_finite:
        raise UnsupportedRing("idempotent enumeration needs a finite ring")
    return frozenset(Elem(ring, e) for e in ring.idempotents)


def jacobson_radical(ring: FiniteRing) -> frozenset:
    if not ring.is_finite:
        raise UnsupportedRing("radical enumeration needs a finite ring")
    return frozenset(Elem(ring, x) for x in ring.jacobson_radical)


def quotient_ring(ring: Ring, a) -> FiniteRing:
    """R/aR for R in {Z, F_p[x]} and a a nonzero non-unit."""
    av = as_value(ring, a)
    if isinstance(ring, IntegerRing):
        n = abs(av)
        if n == 0:
            raise DomainError("quotient by 0 is not finite")
        if n == 1:
            raise DomainError("quotient by a unit is the zero ring (1 = 0)")
        return ResidueRing(n)
    if isinstance(ring, PolynomialRing):
        if polys.deg(av) < 1:
            raise DomainError("quotient needs a nonzero non-unit modulus")
        return PolyQuotientRing(ring.p, av)
    raise UnsupportedRing(f"quotients are built over Z and F_p[x], not {ring}")
