"""Polynomial arithmetic over GF(p) on ascending coefficient tuples.

A polynomial c0 + c1*x + ... + cn*x^n is the tuple (c0, ..., cn) of ints
in [0, p), with no trailing zeros; () is the zero polynomial.  All
functions take the prime p explicitly.
"""

from __future__ import annotations

import itertools
import re

from .errors import ParseError

Poly = tuple  # ascending coefficients, trimmed


def trim(cs) -> Poly:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def canon(p: int, cs) -> Poly:
    return trim(c % p for c in cs)


def deg(a: Poly) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(a) - 1


def const(p: int, c: int) -> Poly:
    return trim((c % p,))


X: Poly = (0, 1)


def add(p: int, a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return trim(((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                for i in range(n))


def neg(p: int, a: Poly) -> Poly:
    return tuple((-c) % p for c in a)


def sub(p: int, a: Poly, b: Poly) -> Poly:
    return add(p, a, neg(p, b))


def scale(p: int, a: Poly, c: int) -> Poly:
    return trim((x * c) % p for x in a)


def mul(p: int, a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return trim(out)


def divmod_(p: int, a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    inv_lead = pow(b[-1], -1, p)
    for i in range(len(r) - len(b), -1, -1):
        c = (r[i + len(b) - 1] * inv_lead) % p
        if c:
            q[i] = c
            for j, y in enumerate(b):
                r[i + j] = (r[i + j] - c * y) % p
    return trim(q), trim(r)


def mod(p: int, a: Poly, m: Poly) -> Poly:
    return divmod_(p, a, m)[1]


def monic(p: int, a: Poly) -> tuple[Poly, int]:
    """Return (monic associate, u) with associate = a * u and u a unit in GF(p)."""
    if not a:
        return (), 1
    u = pow(a[-1], -1, p)
    return scale(p, a, u), u


def gcd(p: int, a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, mod(p, a, b)
    return monic(p, a)[0]


def egcd(p: int, a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return (d, x, y) with a*x + b*y = d, d the monic gcd (or zero)."""
    r0, r1 = a, b
    x0, x1 = (1,), ()
    y0, y1 = (), (1,)
    while r1:
        q, r = divmod_(p, r0, r1)
        r0, r1 = r1, r
        x0, x1 = x1, sub(p, x0, mul(p, q, x1))
        y0, y1 = y1, sub(p, y0, mul(p, q, y1))
    if not r0:
        return (), (), ()
    d, u = monic(p, r0)
    return d, scale(p, x0, u), scale(p, y0, u)


def invmod(p: int, a: Poly, m: Poly) -> Poly:
    d, x, _ = egcd(p, a, m)
    if d != (1,):
        raise ZeroDivisionError("element not invertible modulo m")
    return mod(p, x, m)


def all_polys(p: int, max_deg: int):
    """All polynomials of degree <= max_deg (including 0), low degree first."""
    yield ()
    for d in range(max_deg + 1):
        for lead in range(1, p):
            for lower in itertools.product(range(p), repeat=d):
                yield lower + (lead,)


def monic_polys(p: int, d: int):
    for lower in itertools.product(range(p), repeat=d):
        yield lower + (1,)


def is_irreducible(p: int, a: Poly) -> bool:
    if deg(a) <= 0:
        return False
    for d in range(1, deg(a) // 2 + 1):
        for f in monic_polys(p, d):
            if not mod(p, a, f):
                return False
    return True


def factor(p: int, a: Poly) -> dict[Poly, int]:
    """Factor a nonzero polynomial into monic irreducibles by trial division."""
    if not a:
        raise ValueError("cannot factor the zero polynomial")
    a = monic(p, a)[0]
    out: dict[Poly, int] = {}
    d = 1
    while deg(a) > 0:
        if d > deg(a) // 2:
            out[a] = out.get(a, 0) + 1
            break
        hit = False
        for f in monic_polys(p, d):
            q, r = divmod_(p, a, f)
            if not r:
                out[f] = out.get(f, 0) + 1
                a = q
                hit = True
                break
        if not hit:
            d += 1
    return out


def crt(p: int, residues: list[Poly], moduli: list[Poly]) -> Poly:
    """Solve f = r_i (mod m_i) for pairwise coprime moduli."""
    x: Poly = ()
    m: Poly = (1,)
    for r, q in zip(residues, moduli):
        d, u, _ = egcd(p, m, q)
        if d != (1,):
            raise ValueError("moduli not coprime")
        t = mod(p, mul(p, sub(p, r, x), u), q)
        x = add(p, x, mul(p, t, m))
        m = mul(p, m, q)
    return mod(p, x, m)


_TERM = re.compile(r"^([+-]?\d*)(?:\*?x(?:\^(\d+))?)?$")


def parse(p: int, text: str) -> Poly:
    """Parse 'c0 + c1*x + ...' / 'x^2+x+1' style text, or '1,0,1' coefficients."""
    text = text.strip().replace(" ", "")
    if not text:
        raise ParseError("empty polynomial")
    if "," in text or text.lstrip("+-").isdigit():
        try:
            return canon(p, (int(c) for c in text.split(",")))
        except ValueError as exc:
            raise ParseError(f"bad coefficient list: {text!r}") from exc
    chunks = re.findall(r"[+-]?[^+-]+|[+-](?=[+-])", text)
    coeffs: dict[int, int] = {}
    for chunk in chunks:
        m = _TERM.match(chunk)
        if not m or (m.group(1) in ("", "+", "-") and "x" not in chunk):
            raise ParseError(f"bad polynomial term: {chunk!r}")
        cs = m.group(1)
        coef = int(cs) if cs not in ("", "+", "-") else (-1 if cs == "-" else 1)
        if "x" in chunk:
            exp = int(m.group(2)) if m.group(2) else 1
        else:
            exp = 0
        coeffs[exp] = coeffs.get(exp, 0) + coef
    n = max(coeffs) + 1
    return canon(p, ((coeffs.get(i, 0)) for i in range(n)))


def format(a: Poly) -> str:
    if not a:
        return "0"
    terms = []
    for i, c in enumerate(a):
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append("x" if c == 1 else f"{c}*x")
        else:
            terms.append(f"x^{i}" if c == 1 else f"{c}*x^{i}")
    return " + ".join(terms)
