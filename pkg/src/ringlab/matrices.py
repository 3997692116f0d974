"""Matrix reduction with invertible-transform certificates.

Smith-style canonical diagonal reduction over Z and GF(p)[x], the 2x2
Hermite and unit-top-left reductions, content ideals, and the
total-divisor containment check for finite rings.  Every reduction
returns P, Q, D with P*A*Q = D re-verified entry by entry and unit
determinants; nothing is trusted from the elimination path.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .errors import (
    DomainError,
    NotCoprime,
    PreconditionError,
    RingMismatch,
    UnsupportedRing,
)
from .euclid import extended_gcd, lemma1_factor
from .ranges import asr1_witness
from .rings import (
    Elem,
    EuclideanDomain,
    FiniteRing,
    MatrixRing,
    Ring,
    as_value,
    ideal_closure,
    IdealClosure,
)


@dataclass(frozen=True)
class Mat:
    """Immutable dense matrix over one ring, entries as canonical payloads."""

    ring: Ring
    rows: tuple

    @staticmethod
    def of(ring: Ring, rows) -> "Mat":
        canon = tuple(tuple(as_value(ring, v) for v in row) for row in rows)
        if not canon or not canon[0]:
            raise DomainError("matrix dimensions must be positive")
        if any(len(r) != len(canon[0]) for r in canon):
            raise DomainError("ragged rows")
        return Mat(ring, canon)

    @staticmethod
    def identity(ring: Ring, n: int) -> "Mat":
        z, o = ring.zero, ring.one
        return Mat(ring, tuple(tuple(o if i == j else z for j in range(n))
                               for i in range(n)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def __getitem__(self, ij):
        return self.rows[ij[0]][ij[1]]

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.ring != other.ring:
            raise RingMismatch("matrix rings differ")
        if self.ncols != other.nrows:
            raise DomainError("shape mismatch")
        ring = self.ring
        return Mat(ring, tuple(
            tuple(reduce(ring.add,
                         (ring.mul(self.rows[i][t], other.rows[t][j])
                          for t in range(self.ncols)))
                  for j in range(other.ncols))
            for i in range(self.nrows)))

    def transpose(self) -> "Mat":
        return Mat(self.ring, tuple(zip(*self.rows)))

    def det(self):
        """Determinant by cofactor expansion (small exact matrices only)."""
        if self.nrows != self.ncols:
            raise DomainError("determinant needs a square matrix")
        return _det(self.ring, [list(r) for r in self.rows])

    def format(self) -> list:
        return [[self.ring.format_elem(v) for v in row] for row in self.rows]


def _det(ring: Ring, rows: list):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return ring.sub(ring.mul(rows[0][0], rows[1][1]),
                        ring.mul(rows[0][1], rows[1][0]))
    total = ring.zero
    for j in range(n):
        if rows[0][j] == ring.zero:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = ring.mul(rows[0][j], _det(ring, minor))
        total = ring.add(total, term) if j % 2 == 0 else ring.sub(total, term)
    return total


def _require_domain(ring: Ring) -> EuclideanDomain:
    if not isinstance(ring, EuclideanDomain):
        raise UnsupportedRing(f"{ring} is not a Euclidean domain")
    return ring


# ---------------------------------------------------------------------------
# 1x2 / 2x1 Hermite steps and unimodular completion


def hermite_reduce_pair(a, b, ring: Ring | None = None):
    """(d, Q) with (a, b) * Q = (d, 0), det(Q) a unit, d the normalized gcd."""
    ring = _resolve(ring, a, b)
    av, bv = as_value(ring, a), as_value(ring, b)
    if av == ring.zero and bv == ring.zero:
        return Elem(ring, ring.zero), Mat.identity(ring, 2)
    fact = lemma1_factor(av, bv, ring)
    x, y = fact.certificate.x.value, fact.certificate.y.value
    # columns: Bezout coefficients, then the cancelling cofactors
    q = Mat.of(ring, [[x, ring.neg(fact.b1.value)], [y, fact.a1.value]])
    d = fact.d.value
    assert ring.add(ring.mul(av, x), ring.mul(bv, y)) == d
    assert ring.is_unit(q.det())
    return Elem(ring, d), q


def hermite_reduce_column(a, b, ring: Ring | None = None):
    """(d, P) with P * (a, b)^T = (d, 0)^T (transposed variant)."""
    d, q = hermite_reduce_pair(a, b, ring)
    return d, q.transpose()


def unimodular_completion(u, v, ring: Ring | None = None) -> Mat:
    """Complete the coprime column (u, v)^T to a 2x2 matrix with unit det."""
    ring = _resolve(ring, u, v)
    uv, vv = as_value(ring, u), as_value(ring, v)
    cert = extended_gcd(uv, vv, ring)
    if cert.d.value != ring.one:
        raise NotCoprime(f"gcd is {cert.d}, not a unit")
    q = Mat.of(ring, [[uv, ring.neg(cert.y.value)], [vv, cert.x.value]])
    assert ring.is_unit(q.det())
    return q


def _resolve(ring, *vals) -> EuclideanDomain:
    if ring is not None:
        return _require_domain(ring)
    for v in vals:
        if isinstance(v, Elem):
            return _require_domain(v.ring)
    raise UnsupportedRing("pass Elems or an explicit ring")


# ---------------------------------------------------------------------------
# The 2x2 unit-corner reduction


def theorem12_reduce(a, b, c, ring: Ring | None = None):
    """Reduce [[a, 0], [b, c]] with gcd(a, b, c) = 1 to [[z, 0], [*, *]],
    z a unit; returns (P, Q, reduced, z) with P*A*Q = reduced verified."""
    ring = _resolve(ring, a, b, c)
    av, bv, cv = (as_value(ring, v) for v in (a, b, c))
    if ring.gcd(av, ring.gcd(bv, cv)) != ring.one:
        raise PreconditionError("gcd(a, b, c) must be 1")
    A = Mat.of(ring, [[av, ring.zero], [bv, cv]])
    if cv == ring.zero:
        # bottom-right zero: one column Hermite step on (a, b)^T
        d, p = hermite_reduce_column(av, bv, ring)
        q = Mat.identity(ring, 2)
        reduced = p @ A @ q
        z = reduced[0, 0]
        assert ring.is_unit(z) and reduced[0, 1] == ring.zero
        return p, q, reduced, Elem(ring, z)
    # shift so that the new top-left corner is coprime to c; the roles in
    # the witness identity are gcd(b + a*t, c) = 1
    lam = asr1_witness(cv, bv, av, ring=ring).shifts[0].value
    p = Mat.of(ring, [[lam, ring.one], [ring.one, ring.zero]])
    top = ring.add(ring.mul(lam, av), bv)
    cert = extended_gcd(top, cv, ring)
    assert cert.d.value == ring.one
    q1 = unimodular_completion(cert.x.value, cert.y.value, ring)
    m = p @ A @ q1
    z = m[0, 0]
    assert ring.is_unit(z)
    # clear the remaining top-right entry with one elementary column op
    zinv = _unit_inverse(ring, z)
    t = ring.neg(ring.mul(zinv, m[0, 1]))
    q2 = Mat.of(ring, [[ring.one, t], [ring.zero, ring.one]])
    q = q1 @ q2
    reduced = p @ A @ q
    assert reduced[0, 0] == z and reduced[0, 1] == ring.zero
    assert ring.is_unit(p.det()) and ring.is_unit(q.det())
    return p, q, reduced, Elem(ring, z)


def _unit_inverse(ring: EuclideanDomain, u):
    """Inverse of a unit in Z (u = +-1) or GF(p)[x] (nonzero constant)."""
    if not ring.is_unit(u):
        raise DomainError(f"{ring.format_elem(u)} is not a unit")
    if u == ring.one:
        return ring.one
    cert = extended_gcd(u, ring.zero, ring)
    # u * x = d = 1 after normalization
    return cert.x.value


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class ReductionCertificate:
    """P*A*Q = D diagonal with a full divisibility chain, all verified."""

    A: Mat
    P: Mat
    Q: Mat
    D: Mat
    diag: tuple

    def verify(self):
        ring = self.A.ring
        prod = self.P @ self.A @ self.Q
        if prod.rows != self.D.rows:
            raise AssertionError("P*A*Q != D")
        if not ring.is_unit(self.P.det()) or not ring.is_unit(self.Q.det()):
            raise AssertionError("transform determinant is not a unit")
        k = min(self.D.nrows, self.D.ncols)
        for i in range(self.D.nrows):
            for j in range(self.D.ncols):
                expect = self.diag[i] if i == j and i < k else ring.zero
                if self.D.rows[i][j] != expect:
                    raise AssertionError("D is not the stated diagonal")
        for i in range(k - 1):
            if self.diag[i + 1] != ring.zero or self.diag[i] != ring.zero:
                if not ring.divides(self.diag[i], self.diag[i + 1]):
                    raise AssertionError("divisibility chain broken")

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d != self.A.ring.zero)


class _Eliminator:
    """Row/column operation tracker for one reduction."""

    def __init__(self, A: Mat):
        self.ring = _require_domain(A.ring)
        self.a = [list(r) for r in A.rows]
        self.m, self.n = A.nrows, A.ncols
        self.p = [list(r) for r in Mat.identity(A.ring, self.m).rows]
        self.q = [list(r) for r in Mat.identity(A.ring, self.n).rows]

    def swap_rows(self, i, j):
        if i != j:
            self.a[i], self.a[j] = self.a[j], self.a[i]
            self.p[i], self.p[j] = self.p[j], self.p[i]

    def swap_cols(self, i, j):
        if i != j:
            for row in self.a:
                row[i], row[j] = row[j], row[i]
            for row in self.q:
                row[i], row[j] = row[j], row[i]

    def addmul_row(self, i, j, coef):
        """row_i += coef * row_j."""
        ring = self.ring
        self.a[i] = [ring.add(x, ring.mul(coef, y))
                     for x, y in zip(self.a[i], self.a[j])]
        self.p[i] = [ring.add(x, ring.mul(coef, y))
                     for x, y in zip(self.p[i], self.p[j])]

    def addmul_col(self, i, j, coef):
        """col_i += col_j * coef."""
        ring = self.ring
        for row in self.a:
            row[i] = ring.add(row[i], ring.mul(row[j], coef))
        for row in self.q:
            row[i] = ring.add(row[i], ring.mul(row[j], coef))

    def scale_row(self, i, unit):
        ring = self.ring
        self.a[i] = [ring.mul(unit, x) for x in self.a[i]]
        self.p[i] = [ring.mul(unit, x) for x in self.p[i]]

    def pivot_position(self, t):
        """Smallest nonzero Euclidean size in the trailing block; ties go to
        the lowest (row, col)."""
        ring = self.ring
        best = None
        for i in range(t, self.m):
            for j in range(t, self.n):
                v = self.a[i][j]
                if v == ring.zero:
                    continue
                size = ring.size(v)
                if best is None or size < best[0]:
                    best = (size, i, j)
        return None if best is None else (best[1], best[2])


def smith_normal_form(A: Mat) -> ReductionCertificate:
    """Canonical diagonal reduction over Z or GF(p)[x] with certificates.

    Pivots by minimal Euclidean size; the pivot is forced to divide the
    whole trailing block before the next step, so the diagonal comes out
    with the divisibility chain already in place.  Diagonal entries are
    normalized (non-negative / monic) by absorbing units into P.
    """
    st = _Eliminator(A)
    ring = st.ring
    k = min(st.m, st.n)
    for t in range(k):
        while True:
            pos = st.pivot_position(t)
            if pos is None:
                break
            st.swap_rows(t, pos[0])
            st.swap_cols(t, pos[1])
            pivot = st.a[t][t]
            dirty = False
            for i in range(t + 1, st.m):
                if st.a[i][t] != ring.zero:
                    qn = ring.euclid_divmod(st.a[i][t], pivot)[0]
                    st.addmul_row(i, t, ring.neg(qn))
                    if st.a[i][t] != ring.zero:
                        dirty = True  # remainder became the smaller pivot
            for j in range(t + 1, st.n):
                if st.a[t][j] != ring.zero:
                    qn = ring.euclid_divmod(st.a[t][j], pivot)[0]
                    st.addmul_col(j, t, ring.neg(qn))
                    if st.a[t][j] != ring.zero:
                        dirty = True
            if dirty:
                continue
            # pivot must divide the whole trailing block
            offender = next(
                ((i, j) for i in range(t + 1, st.m) for j in range(t + 1, st.n)
                 if ring.euclid_divmod(st.a[i][j], pivot)[1] != ring.zero),
                None)
            if offender is None:
                break
            st.addmul_row(t, offender[0], ring.one)
        if st.a[t][t] != ring.zero:
            _, unit = ring.normalize(st.a[t][t])
            if unit != ring.one:
                st.scale_row(t, unit)
    diag = tuple(st.a[i][i] for i in range(k))
    cert = ReductionCertificate(
        A=A, P=Mat(ring, tuple(tuple(r) for r in st.p)),
        Q=Mat(ring, tuple(tuple(r) for r in st.q)),
        D=Mat(ring, tuple(tuple(r) for r in st.a)), diag=diag)
    cert.verify()
    return cert


# ---------------------------------------------------------------------------
# Content ideals and total divisors


@dataclass(frozen=True)
class ContentIdeal:
    """Two-sided ideal generated by all entries; a gcd over domains."""

    matrix: Mat
    generator: Elem | None = None
    ideal: IdealClosure | None = None

    def __eq__(self, other):
        if not isinstance(other, ContentIdeal):
            return NotImplemented
        if (self.generator is None) != (other.generator is None):
            return False
        if self.generator is not None:
            return self.generator == other.generator
        return self.ideal.members == other.ideal.members


def content_ideal(A: Mat) -> ContentIdeal:
    ring = A.ring
    entries = [v for row in A.rows for v in row]
    if isinstance(ring, EuclideanDomain):
        g = reduce(ring.gcd, entries)
        return ContentIdeal(A, generator=Elem(ring, g))
    if isinstance(ring, MatrixRing):  # covers UpperTriangularRing
        raise DomainError("matrix-of-matrices content is out of scope")
    if isinstance(ring, FiniteRing):
        return ContentIdeal(A, ideal=ideal_closure(ring, "two_sided", entries))
    raise UnsupportedRing(f"unsupported ring {ring}")


def check_total_divisor(ring: FiniteRing, d1, d2) -> bool:
    """R*d2*R contained in d1*R intersect R*d1."""
    if not ring.is_finite:
        raise UnsupportedRing("total-divisor check needs a finite ring")
    v1, v2 = as_value(ring, d1), as_value(ring, d2)
    two_sided = ring.two_sided(v2)
    return (two_sided <= ring.principal_right(v1)
            and two_sided <= ring.principal_left(v1))


# ---------------------------------------------------------------------------
# JSON matrix documents (the CLI wire format)


def mat_from_doc(doc: dict) -> Mat:
    from .rings import IntegerRing, PolynomialRing, parse_ring_spec
    ring = parse_ring_spec(doc["ring"])
    rows = doc["rows"]
    if isinstance(ring, IntegerRing):
        return Mat.of(ring, [[int(v) for v in row] for row in rows])
    if isinstance(ring, PolynomialRing):
        return Mat.of(ring, [[tuple(v) for v in row] for row in rows])
    raise UnsupportedRing("matrix documents cover Z and F_p[x]")


def cert_to_doc(cert: ReductionCertificate, spec_text: str) -> dict:
    ring = cert.A.ring

    def dump(mat: Mat):
        if getattr(ring, "kind", None) == "Z":
            return [[str(v) for v in row] for row in mat.rows]
        return [[list(v) for v in row] for row in mat.rows]

    return {
        "ring": spec_text,
        "rows": dump(cert.A),
        "P": dump(cert.P),
        "Q": dump(cert.Q),
        "D": dump(cert.D),
        "diag": [ring.format_elem(d) for d in cert.diag],
        "rank": cert.rank,
    }
