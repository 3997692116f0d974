"""End-to-end gate: each test prints one PASS/FAIL line on the terminal."""

import itertools
import math
import random
import time

import pytest
import sympy

from ringlab import (
    Mat,
    asr1_witness,
    adequate_decomposition,
    content_ideal,
    extended_gcd,
    harness,
    has_D_property,
    is_L_ring,
    is_asr1_ring,
    is_stable_range_1,
    smith_normal_form,
    theorem5_idempotent,
    theorem12_reduce,
)
from ringlab import polys
from ringlab.arith import radical
from ringlab.rings import (
    MatrixRing,
    PolynomialRing,
    ResidueRing,
    UpperTriangularRing,
    Z,
)

F5x = PolynomialRing(5)


@pytest.fixture
def criterion(capsys):
    def run(number, budget_seconds, body):
        started = time.perf_counter()
        try:
            body()
            elapsed = time.perf_counter() - started
            assert elapsed < budget_seconds, (
                f"criterion {number} took {elapsed:.1f}s, "
                f"budget {budget_seconds}s")
        except BaseException:
            with capsys.disabled():
                print(f"ACCEPTANCE {number}: FAIL")
            raise
        with capsys.disabled():
            print(f"ACCEPTANCE {number}: PASS ({elapsed:.1f}s)")
    return run


# --- independent determinant / minor-gcd oracles (no reduction code) ---

def det_int(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    return sum((-1) ** j * rows[0][j]
               * det_int([r[:j] + r[j + 1:] for r in rows[1:]])
               for j in range(n))


def det_poly(p, rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = ()
    for j in range(n):
        term = polys.mul(p, rows[0][j],
                         det_poly(p, [r[:j] + r[j + 1:] for r in rows[1:]]))
        if j % 2:
            term = polys.neg(p, term)
        total = polys.add(p, total, term)
    return total


def minor_gcd_int(rows, i):
    g = 0
    for rsel in itertools.combinations(range(len(rows)), i):
        for csel in itertools.combinations(range(len(rows[0])), i):
            g = math.gcd(g, det_int([[rows[r][c] for c in csel]
                                     for r in rsel]))
    return g


def minor_gcd_poly(p, rows, i):
    g = ()
    for rsel in itertools.combinations(range(len(rows)), i):
        for csel in itertools.combinations(range(len(rows[0])), i):
            g = polys.gcd(p, g, det_poly(p, [[rows[r][c] for c in csel]
                                             for r in rsel]))
    return g


def test_acceptance_1_snf_correctness(criterion):
    def body():
        rng = random.Random(101)
        for _ in range(1000):
            n, m = rng.randint(1, 5), rng.randint(1, 5)
            rows = [[rng.randint(-20, 20) for _ in range(m)]
                    for _ in range(n)]
            cert = smith_normal_form(Mat.of(Z, rows))
            cert.verify()  # P*A*Q = D, unit dets, divisibility chain
            prod = 1
            for i, d in enumerate(cert.diag, start=1):
                prod *= d
                assert abs(prod) == minor_gcd_int(rows, i)
        for _ in range(500):
            n, m = rng.randint(1, 4), rng.randint(1, 4)
            rows = [[F5x.canon(tuple(rng.randrange(5)
                                     for _ in range(rng.randint(0, 5))))
                     for _ in range(m)] for _ in range(n)]
            cert = smith_normal_form(Mat.of(F5x, rows))
            cert.verify()
            prod = F5x.one
            for i, d in enumerate(cert.diag, start=1):
                prod = polys.mul(5, prod, d)
                assert polys.monic(5, prod)[0] == minor_gcd_poly(5, rows, i)
    criterion(1, 30, body)


def test_acceptance_2_implication_catalog(criterion):
    def body():
        catalog = harness.default_catalog()
        for suite in ("T1i", "T1ii", "T9", "T10"):
            verdicts = harness.run_suite(suite, catalog)
            assert verdicts, suite
            assert all(v.status != harness.COUNTEREXAMPLE
                       for v in verdicts), suite
            assert any(v.status == harness.VERIFIED for v in verdicts), suite
    criterion(2, 60, body)


def test_acceptance_3_radical_quotient(criterion):
    def body():
        for n in range(2, 31):
            lhs = is_asr1_ring(ResidueRing(n), "right").verdict
            rhs = is_asr1_ring(ResidueRing(radical(n)), "right").verdict
            assert lhs == rhs, n
    criterion(3, 5, body)


def test_acceptance_4_integer_separation(criterion):
    def body():
        rep = is_stable_range_1(Z)
        assert rep.verdict is False
        assert rep.counterexample is not None
        for a in range(-20, 21):
            if a == 0:
                continue
            for b in range(-20, 21):
                for c in range(-20, 21):
                    if math.gcd(math.gcd(a, b), c) != 1:
                        continue
                    lam = asr1_witness(a, b, c, ring=Z).shifts[0].value
                    assert extended_gcd(a, b + c * lam,
                                        ring=Z).d.value == 1
    criterion(4, 10, body)


def test_acceptance_5_idempotent_construction(criterion):
    def body():
        rng = random.Random(55)
        done = 0
        while done < 500:
            a = rng.randint(2, 500)
            b = rng.randint(-500, 500)
            c = rng.randint(-500, 500)
            if math.gcd(math.gcd(a, b), c) != 1:
                continue
            e = theorem5_idempotent(a, b, c, ring=Z).e.value
            assert (e * e - e) % a == 0
            assert e % math.gcd(a, b) == 0
            assert (1 - e) % math.gcd(a, c) == 0
            done += 1
    criterion(5, 10, body)


def test_acceptance_6_adequate_decomposition(criterion):
    def body():
        rng = random.Random(66)
        bs = [rng.randint(1, 10**4) for _ in range(100)]
        s_primes: dict = {}
        for a in range(1, 10**4 + 1):
            fact = sympy.factorint(a)
            for b in bs:
                dec = adequate_decomposition(a, b, ring=Z)
                r, s = dec.r.value, dec.s.value
                assert r * s == a
                assert math.gcd(r, b) == 1
                if s not in s_primes:
                    s_primes[s] = list(sympy.factorint(s))
                assert all(b % q == 0 for q in s_primes[s])
                s_ref = 1
                for q, e in fact.items():
                    if b % q == 0:
                        s_ref *= q ** e
                assert s == s_ref  # both sides positive here
    criterion(6, 20, body)


def test_acceptance_7_corner_reduction(criterion):
    def body():
        for a in range(1, 16):
            for b in range(1, 16):
                for c in range(1, 16):
                    if math.gcd(math.gcd(a, b), c) != 1:
                        continue
                    mat = Mat.of(Z, [[a, 0], [b, c]])
                    p, q, red, z = theorem12_reduce(a, b, c, ring=Z)
                    assert z.value in (1, -1)
                    assert (p @ mat @ q).rows == red.rows
                    assert p.det() in (1, -1) and q.det() in (1, -1)
                    assert smith_normal_form(mat).diag == (1, a * c)
    criterion(7, 10, body)


def test_acceptance_8_content_invariance(criterion):
    def body():
        rng = random.Random(88)
        for n in (6, 8):
            ring = ResidueRing(n)
            done = 0
            while done < 100:
                k = rng.randint(2, 3)
                mk = [[rng.randrange(n) for _ in range(k)] for _ in range(k)]
                pk = [[rng.randrange(n) for _ in range(k)] for _ in range(k)]
                qk = [[rng.randrange(n) for _ in range(k)] for _ in range(k)]
                a, p, q = (Mat.of(ring, rows) for rows in (mk, pk, qk))
                if not (ring.is_unit(p.det()) and ring.is_unit(q.det())):
                    continue
                assert content_ideal(a) == content_ideal(p @ a @ q)
                done += 1
    criterion(8, 10, body)


def test_acceptance_9_negative_controls(criterion):
    def body():
        ut2 = UpperTriangularRing(2, ResidueRing(2))
        e11 = ut2.canon(((1, 0), (0, 0)))
        rep = has_D_property(ut2)
        assert rep.verdict is False
        assert rep.counterexample == {"a": ut2.format_elem(e11)}
        m2 = MatrixRing(2, ResidueRing(2))
        e11m = m2.canon(((1, 0), (0, 0)))
        rep = is_L_ring(m2)
        assert rep.verdict is False
        assert rep.counterexample == {"a": m2.format_elem(e11m)}
    criterion(9, 5, body)
