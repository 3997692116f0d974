import itertools
import math
import random

import pytest

from ringlab import (
    Mat,
    check_total_divisor,
    content_ideal,
    hermite_reduce_column,
    hermite_reduce_pair,
    smith_normal_form,
    theorem12_reduce,
    unimodular_completion,
)
from ringlab import polys
from ringlab.errors import NotCoprime, PreconditionError
from ringlab.matrices import cert_to_doc, mat_from_doc
from ringlab.rings import PolynomialRing, ResidueRing, Z

F3x = PolynomialRing(3)


def det_int(rows):
    """Independent cofactor determinant over plain ints."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    return sum((-1) ** j * rows[0][j]
               * det_int([r[:j] + r[j + 1:] for r in rows[1:]])
               for j in range(n))


def minor_gcd(rows, i):
    n, m = len(rows), len(rows[0])
    g = 0
    for rsel in itertools.combinations(range(n), i):
        for csel in itertools.combinations(range(m), i):
            g = math.gcd(g, det_int([[rows[r][c] for c in csel]
                                     for r in rsel]))
    return g


def test_matmul_and_det():
    a = Mat.of(Z, [[1, 2], [3, 4]])
    b = Mat.of(Z, [[0, 1], [1, 0]])
    assert (a @ b).rows == ((2, 1), (4, 3))
    assert a.det() == -2
    assert Mat.identity(Z, 3).det() == 1


def test_hermite_pair():
    rng = random.Random(5)
    for _ in range(100):
        a, b = rng.randint(-99, 99), rng.randint(-99, 99)
        d, q = hermite_reduce_pair(a, b, ring=Z)
        prod = Mat.of(Z, [[a, b]]) @ q
        assert prod.rows == ((d.value, 0),)
        assert q.det() in (1, -1)
        assert d.value == math.gcd(a, b)


def test_hermite_column():
    d, p = hermite_reduce_column(6, 10, ring=Z)
    assert (p @ Mat.of(Z, [[6], [10]])).rows == ((2,), (0,))


def test_unimodular_completion():
    q = unimodular_completion(3, 5, ring=Z)
    assert q.rows[0][0] == 3 and q.rows[1][0] == 5
    assert q.det() in (1, -1)
    with pytest.raises(NotCoprime):
        unimodular_completion(2, 4, ring=Z)


def test_theorem12_reduce():
    for a, b, c in [(4, 6, 9), (1, 1, 1), (15, 10, 6), (7, 0, 3), (5, 3, 0)]:
        p, q, red, z = theorem12_reduce(a, b, c, ring=Z)
        assert z.value in (1, -1)
        lhs = p @ Mat.of(Z, [[a, 0], [b, c]]) @ q
        assert lhs.rows == red.rows
        assert red.rows[0] == (z.value, 0)
    with pytest.raises(PreconditionError):
        theorem12_reduce(2, 4, 6, ring=Z)


def test_snf_identity():
    cert = smith_normal_form(Mat.identity(Z, 3))
    assert cert.diag == (1, 1, 1)
    assert cert.P.rows == cert.Q.rows == Mat.identity(Z, 3).rows


def test_snf_known_values():
    cert = smith_normal_form(Mat.of(Z, [[2, 4, 4], [-6, 6, 12],
                                        [10, -4, -16]]))
    assert cert.diag == (2, 6, 12)
    cert = smith_normal_form(Mat.of(Z, [[0, 0], [0, 0]]))
    assert cert.diag == (0, 0)


def test_snf_random_integer_oracle():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(1, 4)
        m = rng.randint(1, 4)
        rows = [[rng.randint(-30, 30) for _ in range(m)] for _ in range(n)]
        cert = smith_normal_form(Mat.of(Z, rows))
        cert.verify()
        prod = 1
        for i, d in enumerate(cert.diag, start=1):
            prod *= d
            assert abs(prod) == minor_gcd(rows, i)


def test_snf_poly():
    x = (0, 1)
    rows = [[F3x.mul(x, x), F3x.zero], [x, (1, 1)]]
    cert = smith_normal_form(Mat.of(F3x, rows))
    cert.verify()
    for d in cert.diag:
        assert d == () or d[-1] == 1  # monic normalization
    # determinant is preserved up to a unit
    lhs = polys.mul(3, cert.diag[0], cert.diag[1])
    rhs = Mat.of(F3x, rows).det()
    assert polys.monic(3, lhs)[0] == polys.monic(3, rhs)[0]


def test_certificate_tamper_detection():
    cert = smith_normal_form(Mat.of(Z, [[2, 0], [0, 3]]))
    from ringlab.matrices import ReductionCertificate
    bad = ReductionCertificate(cert.A, cert.P, cert.Q, cert.D,
                               (cert.diag[0], 99))
    with pytest.raises(AssertionError):
        bad.verify()


def test_content_ideal_domain():
    a = Mat.of(Z, [[4, 6], [10, 0]])
    assert content_ideal(a).generator.value == 2


def test_content_ideal_finite_invariance():
    z6 = ResidueRing(6)
    a = Mat.of(z6, [[2, 4], [0, 2]])
    p = Mat.of(z6, [[1, 1], [0, 1]])
    q = Mat.of(z6, [[5, 0], [1, 1]])
    assert content_ideal(a) == content_ideal(p @ a @ q)
    assert content_ideal(a) != content_ideal(Mat.of(z6, [[3, 0], [0, 0]]))


def test_total_divisor():
    z6 = ResidueRing(6)
    assert check_total_divisor(z6, 2, 4)
    assert not check_total_divisor(z6, 4, 3)


def test_doc_round_trip(tmp_path):
    doc = {"ring": "Z", "rows": [["2", "4"], ["6", "8"]]}
    mat = mat_from_doc(doc)
    cert = smith_normal_form(mat)
    out = cert_to_doc(cert, "Z")
    assert out["diag"] == ["2", "4"]
    assert mat_from_doc({"ring": out["ring"], "rows": out["D"]}).rows \
        == cert.D.rows
