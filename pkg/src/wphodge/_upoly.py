"""Dense univariate polynomials as coefficient lists, lowest degree first.

Coefficients are ints or Fractions; the zero polynomial is ``[]``.
"""

from __future__ import annotations

from fractions import Fraction


def trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def add(p: list, q: list) -> list:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def sub(p: list, q: list) -> list:
    out = list(p) + [0] * max(0, len(q) - len(p))
    for i, c in enumerate(q):
        out[i] -= c
    return trim(out)


def scale(p: list, c) -> list:
    if not c:
        return []
    return [c * x for x in p]


def mul(p: list, q: list) -> list:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def divmod_(p: list, q: list):
    """Quotient and remainder over the rationals."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in p]
    dq = len(q) - 1
    lc = Fraction(q[-1])
    quot = [Fraction(0)] * max(0, len(r) - dq)
    while len(trim(r)) - 1 >= dq and r:
        shift = len(r) - 1 - dq
        c = r[-1] / lc
        quot[shift] = c
        for i, b in enumerate(q):
            r[shift + i] -= c * b
        r.pop()
    return trim(quot), trim(r)


def exact_div_int(p: list, q: list) -> list:
    """Quotient of integer polynomials known to divide exactly."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    dq = len(q) - 1
    lc = q[-1]
    quot = [0] * max(0, len(r) - dq)
    while r:
        if len(r) - 1 < dq:
            raise ArithmeticError("inexact polynomial division")
        shift = len(r) - 1 - dq
        c, rem = divmod(r[-1], lc)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        quot[shift] = c
        for i, b in enumerate(q):
            r[shift + i] -= c * b
        trim(r)
    return trim(quot)


def evaluate(p: list, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def monic(p: list) -> list:
    lc = Fraction(p[-1])
    return [Fraction(c) / lc for c in p]


def ext_gcd(a: list, b: list):
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = trim([Fraction(c) for c in a]), trim([Fraction(c) for c in b])
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return [], s0, t0
    lc = r0[-1]
    return monic(r0), scale(s0, 1 / lc), scale(t0, 1 / lc)
