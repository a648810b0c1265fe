"""Exact dense linear algebra over the rationals and over simple algebraic extensions.

Rank uses fraction-free (Bareiss) elimination on row-scaled integer copies.
:func:`row_echelon` is an independent Fraction-based reduced echelon form and
backs :func:`kernel_basis`.

:func:`pencil_min_rank` certifies the minimum rank of ``a*A + b*B`` over the
whole projective line: the generic rank and one nonvanishing maximal minor are
obtained by Bareiss elimination over Z[t]; every rank drop must annihilate that
minor, so the factors of its homogenization are the only candidate points, and
each is checked exactly (in Q(theta) for nonlinear factors).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import sympy

from . import _upoly as up


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major Fractions

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(Fraction(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "RationalMatrix":
        columns = [list(c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls.from_rows([[c[i] for c in columns] for i in range(rows)], len(columns))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int) -> list:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix.from_rows([self.column(j) for j in range(self.cols)], self.rows)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        _same_shape(self, other)
        return RationalMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        _same_shape(self, other)
        return RationalMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def scale(self, c) -> "RationalMatrix":
        c = Fraction(c)
        return RationalMatrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.column(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.append([sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in cols])
        return RationalMatrix.from_rows(out, other.cols)

    def apply(self, v: Sequence) -> list:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return [sum((a * Fraction(b) for a, b in zip(self.row(i), v) if a and b), Fraction(0))
                for i in range(self.rows)]

    def hstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.rows != other.rows:
            raise ValueError("row counts differ")
        return RationalMatrix.from_rows([self.row(i) + other.row(i) for i in range(self.rows)],
                                        self.cols + other.cols)

    def vstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.cols:
            raise ValueError("column counts differ")
        return RationalMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def render(self) -> list:
        """Rows of canonical strings ("p/q", or "p" for integers)."""
        return [[str(x) for x in self.row(i)] for i in range(self.rows)]


def _same_shape(a: RationalMatrix, b: RationalMatrix):
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")


def _integer_rows(rows: list) -> list:
    out = []
    for r in rows:
        den = 1
        for x in r:
            den = math.lcm(den, Fraction(x).denominator)
        out.append([int(Fraction(x) * den) for x in r])
    return out


def _bareiss_rank(m: list) -> int:
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(rank, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][c]
        prow = m[rank]
        for i in range(rank + 1, nrows):
            row = m[i]
            a = row[c]
            for j in range(c + 1, ncols):
                row[j] = (row[j] * p - a * prow[j]) // prev
            row[c] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def rank(M: RationalMatrix) -> int:
    """Exact rank by fraction-free elimination."""
    if M.rows == 0 or M.cols == 0:
        return 0
    return _bareiss_rank(_integer_rows(M.to_rows()))


def row_echelon(M: RationalMatrix):
    """Reduced row echelon form over Fractions; returns (rows, pivot_columns)."""
    m = M.to_rows()
    pivots = []
    r = 0
    for c in range(M.cols):
        piv = next((i for i in range(r, M.rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(M.rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == M.rows:
            break
    return m, pivots


def rref_rank(M: RationalMatrix) -> int:
    return len(row_echelon(M)[1])


def kernel_basis(M: RationalMatrix) -> list:
    """Basis of the right null space, one vector per free column."""
    m, pivots = row_echelon(M)
    free = [c for c in range(M.cols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [Fraction(0)] * M.cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        basis.append(v)
    return basis


# -- algebraic extensions -----------------------------------------------------


class AlgebraicField:
    """Q[t]/(g) for an irreducible g; elements are coefficient tuples of length deg g."""

    def __init__(self, modulus: Sequence):
        g = up.trim([Fraction(c) for c in modulus])
        if len(g) < 2:
            raise ValueError("modulus must have positive degree")
        self.modulus = up.monic(g)
        self.degree = len(g) - 1

    def element(self, p: Sequence) -> tuple:
        p = up.trim([Fraction(c) for c in p])
        if len(p) > self.degree:
            p = up.divmod_(p, self.modulus)[1]
        return tuple(p) + (Fraction(0),) * (self.degree - len(p))

    def scalar(self, c) -> tuple:
        return self.element([c])

    @property
    def generator(self) -> tuple:
        return self.element([0, 1])

    def zero(self) -> tuple:
        return (Fraction(0),) * self.degree

    def is_zero(self, x: tuple) -> bool:
        return not any(x)

    def add(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def sub(self, x, y):
        return tuple(a - b for a, b in zip(x, y))

    def mul(self, x, y):
        return self.element(up.mul(up.trim(list(x)), up.trim(list(y))))

    def inv(self, x):
        g, s, _ = up.ext_gcd(up.trim(list(x)), self.modulus)
        if g != [1]:
            raise ZeroDivisionError("element is not invertible (modulus reducible or element zero)")
        return self.element(s)


def rank_over_field(rows: Sequence[Sequence[tuple]], field: AlgebraicField) -> int:
    """Gaussian-elimination rank of a matrix with entries in ``field``."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if not field.is_zero(m[i][c])), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.inv(m[r][c])
        for i in range(r + 1, nrows):
            if field.is_zero(m[i][c]):
                continue
            f = field.mul(m[i][c], inv)
            m[i] = [field.sub(x, field.mul(f, y)) if j > c else field.zero()
                    for j, (x, y) in enumerate(zip(m[i], m[r]))]
        r += 1
        if r == nrows:
            break
    return r


def kernel_over_field(rows: Sequence[Sequence[tuple]], field: AlgebraicField, ncols: int) -> list:
    """Right null space basis over ``field``."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if not field.is_zero(m[i][c])), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(x, inv) for x in m[r]]
        for i in range(len(m)):
            if i != r and not field.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    basis = []
    pivset = set(pivots)
    for fc in range(ncols):
        if fc in pivset:
            continue
        v = [field.zero() for _ in range(ncols)]
        v[fc] = field.scalar(1)
        for i, pc in enumerate(pivots):
            v[pc] = field.sub(field.zero(), m[i][fc])
        basis.append(v)
    return basis


# -- pencils ------------------------------------------------------------------


@dataclass(frozen=True)
class DropPoint:
    """Points of P^1 where an irreducible binary form vanishes, with the rank there.

    ``form`` lists integer coefficients ``c_i`` of ``sum c_i a^(m-i) b^i``.
    """

    form: tuple
    rank: int

    def render(self) -> str:
        return render_binary_form(self.form)


@dataclass(frozen=True)
class PencilRankCertificate:
    generic_rank: int
    min_rank: int
    drop_points: tuple
    mode: str
    seed: int | None = None
    candidate_forms: tuple = field(default=(), compare=False)
    samples: tuple = field(default=(), compare=False)

    @property
    def certifying(self) -> bool:
        return self.mode == "exact"


def render_binary_form(form: Sequence[int]) -> str:
    m = len(form) - 1
    parts = []
    for i, c in enumerate(form):
        if not c:
            continue
        pa, pb = m - i, i
        mono = "*".join(
            s for s in (
                "a" if pa == 1 else f"a^{pa}" if pa else "",
                "b" if pb == 1 else f"b^{pb}" if pb else "",
            ) if s
        )
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = mono if mag == 1 and mono else (f"{mag}*{mono}" if mono else str(mag))
        parts.append((sign, body))
    if not parts:
        return "0"
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def _pencil_int_rows(A: RationalMatrix, B: RationalMatrix) -> list:
    """Rows of A + t*B as integer polynomials in t (row-scaled, rank-preserving)."""
    rows = []
    for i in range(A.rows):
        ra, rb = A.row(i), B.row(i)
        den = 1
        for x in ra + rb:
            den = math.lcm(den, x.denominator)
        rows.append([up.trim([int(a * den), int(b * den)]) for a, b in zip(ra, rb)])
    return rows


def _bareiss_poly(m: list):
    """Rank over Q(t) and the last pivot (a nonzero maximal minor, up to sign)."""
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    prev = [1]
    for c in range(ncols):
        cands = [i for i in range(rank, nrows) if m[i][c]]
        if not cands:
            continue
        piv = min(cands, key=lambda i: (len(m[i][c]), i))
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][c]
        prow = m[rank]
        for i in range(rank + 1, nrows):
            row = m[i]
            a = row[c]
            for j in range(c + 1, ncols):
                num = up.mul(row[j], p)
                if a and prow[j]:
                    num = up.sub(num, up.mul(a, prow[j]))
                row[j] = up.exact_div_int(num, prev) if num else []
            row[c] = []
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank, prev


def _primitive(form: list) -> tuple:
    g = 0
    for c in form:
        g = math.gcd(g, c)
    form = [c // g for c in form]
    lead = next(c for c in form if c)
    if lead < 0:
        form = [-c for c in form]
    return tuple(form)


def _factor_binary_form(coeffs: list) -> list:
    """Irreducible factors of sum coeffs[i] a^(m-i) b^i as (form, multiplicity) pairs."""
    a, b = sympy.symbols("a b")
    m = len(coeffs) - 1
    expr = sum(sympy.Integer(c) * a ** (m - i) * b**i for i, c in enumerate(coeffs))
    _, factors = sympy.factor_list(sympy.Poly(expr, a, b, domain="ZZ"))
    mult: dict = {}
    for poly, k in factors:
        e = poly.total_degree()
        form = _primitive([int(poly.coeff_monomial(a ** (e - i) * b**i)) for i in range(e + 1)])
        mult[form] = mult.get(form, 0) + k
    return sorted(mult.items(), key=lambda fk: (len(fk[0]), fk[0]))


def _rank_at_form(A: RationalMatrix, B: RationalMatrix, form: tuple) -> int:
    e = len(form) - 1
    if e == 1:
        c0, c1 = form  # c0*a + c1*b vanishes at (a:b) = (c1 : -c0)
        return rank(A.scale(c1) + B.scale(-c0))
    if form[-1] == 0:
        raise ValueError(f"form {form} is reducible (divisible by a)")
    # nonlinear irreducible: a != 0, t = b/a is a root of g(1, t) = sum c_i t^i
    field = AlgebraicField(list(form))
    theta = field.generator
    rows = []
    for i in range(A.rows):
        rows.append([field.add(field.scalar(x), field.mul(theta, field.scalar(y)))
                     for x, y in zip(A.row(i), B.row(i))])
    return rank_over_field(rows, field)


def _projected_minor(int_rows: list, r: int, rng: random.Random) -> list | None:
    """det(R (A + tB) C) for random small integer R (r x n) and C (m x r).

    By Cauchy-Binet this is a combination of r x r minors, so a nonzero value
    at a point proves rank >= r there.  None when generically singular.
    """
    n, m = len(int_rows), len(int_rows[0])
    C = [[rng.randint(-3, 3) for _ in range(r)] for _ in range(m)]
    R = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(r)]
    MC = []
    for row in int_rows:
        out = []
        for k in range(r):
            acc: list = []
            for j, entry in enumerate(row):
                if entry and C[j][k]:
                    acc = up.add(acc, up.scale(entry, C[j][k]))
            out.append(acc)
        MC.append(out)
    P = []
    for i in range(r):
        out = []
        for k in range(r):
            acc = []
            for j in range(n):
                if R[i][j] and MC[j][k]:
                    acc = up.add(acc, up.scale(MC[j][k], R[i][j]))
            out.append([int(c) for c in acc])
        P.append(out)
    rk, det = _bareiss_poly(P)
    return det if rk == r else None


def _certified_full_rank(form: tuple, minors: list) -> bool:
    """True when some auxiliary minor is coprime to the irreducible ``form``."""
    g = list(form)  # g(1, t) = sum c_i t^i, coefficients low degree first
    return any(up.divmod_(mnr, g)[1] for mnr in minors)


def pencil_min_rank(
    A: RationalMatrix,
    B: RationalMatrix,
    mode: str = "exact",
    seed: int | None = None,
    samples: int = 16,
) -> PencilRankCertificate:
    """Minimum of rank(a*A + b*B) over (a:b) in P^1, certified in exact mode."""
    _same_shape(A, B)
    if mode == "sampled":
        return _pencil_sampled(A, B, seed if seed is not None else 0, samples)
    if mode != "exact":
        raise ValueError(f"unknown mode {mode!r}")

    if A.rows == 0 or A.cols == 0:
        return PencilRankCertificate(0, 0, (), "exact")
    int_rows = _pencil_int_rows(A, B)
    r, delta = _bareiss_poly([list(row) for row in int_rows])
    if r == 0:
        return PencilRankCertificate(0, 0, (), "exact")
    # homogenize det(a*A' + b*B') = a^r * delta(b/a), coefficients of a^(r-i) b^i
    hom = [delta[i] if i < len(delta) else 0 for i in range(r + 1)]
    factored = _factor_binary_form(hom) if any(hom[1:]) else [((1, 0), r)]
    factored = [(f, k) for f, k in factored if len(f) > 1]
    forms = [f for f, _ in factored]
    drops = []
    min_rank = r
    rng = random.Random(0)
    square = A.rows == A.cols == r  # delta is then det(A + tB) itself
    minors: dict = {}

    def minors_of(k):
        if k not in minors:
            found = []
            for _ in range(2):
                mnr = _projected_minor(int_rows, k, rng)
                if mnr is not None:
                    found.append(mnr)
            minors[k] = found
        return minors[k]

    for form, mult in factored:
        if len(form) == 2:
            rk = _rank_at_form(A, B, form)
        elif not square and _certified_full_rank(form, minors_of(r)):
            continue
        elif square and mult == 1:
            # the deficiency at a root is at most the multiplicity in det (invariant factors)
            rk = r - 1
        elif square and r > 1 and _certified_full_rank(form, minors_of(r - 1)):
            rk = r - 1
        else:
            rk = _rank_at_form(A, B, form)
        if rk > r:
            raise ArithmeticError("specialized rank exceeds generic rank")
        if rk < r:
            drops.append(DropPoint(form, rk))
            min_rank = min(min_rank, rk)
    return PencilRankCertificate(r, min_rank, tuple(drops), "exact", candidate_forms=tuple(forms))


def _random_rational(rng: random.Random) -> Fraction:
    num = rng.randint(-99, 99)
    den = 0
    while den == 0:
        den = rng.randint(-99, 99)
    return Fraction(num, den)


def _pencil_sampled(A, B, seed, n) -> PencilRankCertificate:
    rng = random.Random(seed)
    points = [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]
    while len(points) < n + 2:
        a, b = _random_rational(rng), _random_rational(rng)
        if a or b:
            points.append((a, b))
    observed = []
    for a, b in points:
        observed.append(((a, b), rank(A.scale(a) + B.scale(b))))
    top = max(rk for _, rk in observed)
    low = min(rk for _, rk in observed)
    drops = []
    for (a, b), rk in observed:
        if rk < top:
            # b0*a - a0*b vanishes at (a0 : b0)
            den = math.lcm(a.denominator, b.denominator)
            drops.append(DropPoint(_primitive([int(b * den), int(-a * den)]), rk))
    return PencilRankCertificate(
        top, low, tuple(sorted(set(drops), key=lambda d: d.form)), "sampled", seed,
        samples=tuple((str(a), str(b), rk) for (a, b), rk in observed),
    )
