"""Sparse weighted-homogeneous polynomials in four variables over the rationals.

A polynomial is a map from exponent tuples ``(k1, k2, k3, k4)`` to nonzero
:class:`fractions.Fraction` coefficients, tied to a :class:`WeightSystem`
that fixes the grading ``deg(x_i) = w_i``.

    >>> ws = WeightSystem((1, 1, 2, 5), 10)
    >>> f = parse_polynomial("x1^10 + x2^10 + x3^5 + x4^2", ws)
    >>> f.homogeneous_degree
    10
    >>> str(partial_derivative(f, 3))
    '2*x4'
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

NVARS = 4
VARIABLES = ("x1", "x2", "x3", "x4")

Monomial = tuple  # exponent tuple (k1, k2, k3, k4)
Scalar = Union[int, Fraction]

UNIT = (0,) * NVARS


class PolynomialSyntaxError(ValueError):
    """Raised by :func:`parse_polynomial`; carries the offending position."""

    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text!r}")


class NoFermatMember(ValueError):
    pass


@dataclass(frozen=True)
class WeightSystem:
    """Weights ``(w1..w4)`` of the ambient weighted projective space and a degree."""

    weights: tuple
    degree: int
    sigma: int = field(init=False, compare=False)

    def __post_init__(self):
        weights = tuple(int(w) for w in self.weights)
        if len(weights) != NVARS:
            raise ValueError(f"expected {NVARS} weights, got {len(weights)}")
        if any(w < 1 for w in weights):
            raise ValueError(f"weights must be positive: {weights}")
        if math.gcd(*weights) != 1:
            raise ValueError(f"weights {weights} are not reduced (gcd != 1)")
        if int(self.degree) < 1:
            raise ValueError(f"degree must be positive: {self.degree}")
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "degree", int(self.degree))
        object.__setattr__(self, "sigma", sum(weights))

    def __str__(self):
        return "(" + ",".join(map(str, self.weights)) + f";{self.degree})"

    def degree_of(self, m: Monomial) -> int:
        return weighted_degree(m, self)

    def has_fermat_member(self) -> bool:
        return all(self.degree % w == 0 for w in self.weights)


def weighted_degree(m: Monomial, ws: WeightSystem) -> int:
    return sum(k * w for k, w in zip(m, ws.weights))


def canonical_key(m: Monomial, ws: WeightSystem):
    """Sort key for listings; sort with ``reverse=True``."""
    return (weighted_degree(m, ws), tuple(m))


@lru_cache(maxsize=None)
def _monomials(weights: tuple, k: int) -> tuple:
    out = []

    def rec(i, remaining, prefix):
        if i == NVARS - 1:
            if remaining % weights[i] == 0:
                out.append(prefix + (remaining // weights[i],))
            return
        for e in range(remaining // weights[i], -1, -1):
            rec(i + 1, remaining - e * weights[i], prefix + (e,))

    if k >= 0:
        rec(0, k, ())
    return tuple(out)


def monomials_of_degree(ws: WeightSystem, k: int) -> list:
    """All monomials of weighted degree exactly ``k``, lexicographically descending."""
    return list(_monomials(ws.weights, k))


def bounded_monomials(weights: tuple, k: int, caps: tuple) -> Iterator[Monomial]:
    """Monomials of weighted degree ``k`` with ``m[i] <= caps[i]`` (None = no cap),
    lexicographically descending."""

    def rec(i, remaining, prefix):
        w = weights[i]
        top = remaining // w
        if caps[i] is not None:
            top = min(top, caps[i])
        if i == NVARS - 1:
            if remaining % w == 0 and remaining // w <= top:
                yield prefix + (remaining // w,)
            return
        for e in range(top, -1, -1):
            yield from rec(i + 1, remaining - e * w, prefix + (e,))

    if k >= 0:
        yield from rec(0, k, ())


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def render_monomial(m: Monomial) -> str:
    parts = []
    for name, e in zip(VARIABLES, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


class WeightedPolynomial:
    """Immutable sparse polynomial with rational coefficients.

    ``homogeneous_degree`` is the common weighted degree of all terms, or
    ``None`` when the polynomial is zero or inhomogeneous.
    """

    __slots__ = ("_terms", "ws", "homogeneous_degree", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar], ws: WeightSystem):
        clean = {}
        for m, c in terms.items():
            m = tuple(int(e) for e in m)
            if len(m) != NVARS or any(e < 0 for e in m):
                raise ValueError(f"bad exponent tuple {m}")
            c = Fraction(c)
            if c:
                clean[m] = c
        self._terms = clean
        self.ws = ws
        degrees = {weighted_degree(m, ws) for m in clean}
        self.homogeneous_degree = degrees.pop() if len(degrees) == 1 else None
        self._hash = None

    @classmethod
    def _trusted(cls, terms: dict, ws: WeightSystem) -> "WeightedPolynomial":
        # terms already clean: tuple keys, nonzero Fraction values
        obj = cls.__new__(cls)
        obj._terms = terms
        obj.ws = ws
        degrees = {weighted_degree(m, ws) for m in terms}
        obj.homogeneous_degree = degrees.pop() if len(degrees) == 1 else None
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, ws: WeightSystem) -> "WeightedPolynomial":
        return cls._trusted({}, ws)

    @classmethod
    def constant(cls, c: Scalar, ws: WeightSystem) -> "WeightedPolynomial":
        return cls({UNIT: c}, ws)

    @classmethod
    def monomial(cls, m: Monomial, ws: WeightSystem, c: Scalar = 1) -> "WeightedPolynomial":
        return cls({m: c}, ws)

    @classmethod
    def variable(cls, i: int, ws: WeightSystem) -> "WeightedPolynomial":
        m = [0] * NVARS
        m[i] = 1
        return cls({tuple(m): 1}, ws)

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self) -> list:
        return sorted(self._terms, key=lambda m: canonical_key(m, self.ws), reverse=True)

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_homogeneous(self) -> bool:
        return self.homogeneous_degree is not None or not self._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, WeightedPolynomial):
            return self.ws == other.ws and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({UNIT: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ws, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other) -> "WeightedPolynomial":
        if isinstance(other, WeightedPolynomial):
            if other.ws != self.ws:
                raise ValueError(f"weight systems differ: {self.ws} vs {other.ws}")
            return other
        if isinstance(other, (int, Fraction)):
            return WeightedPolynomial.constant(other, self.ws)
        raise TypeError(f"cannot combine polynomial with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return WeightedPolynomial._trusted(out, self.ws)

    __radd__ = __add__

    def __neg__(self):
        return WeightedPolynomial._trusted({m: -c for m, c in self._terms.items()}, self.ws)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c: Scalar) -> "WeightedPolynomial":
        c = Fraction(c)
        if not c:
            return WeightedPolynomial.zero(self.ws)
        return WeightedPolynomial._trusted({m: c * v for m, v in self._terms.items()}, self.ws)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return WeightedPolynomial._trusted({m: c for m, c in out.items() if c}, self.ws)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = WeightedPolynomial.constant(1, self.ws)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_monomial(self, m: Monomial, c: Scalar = 1) -> "WeightedPolynomial":
        c = Fraction(c)
        return WeightedPolynomial._trusted(
            {mono_mul(k, m): c * v for k, v in self._terms.items()}, self.ws
        )

    def evaluate(self, point: Iterable[Scalar]) -> Fraction:
        point = [Fraction(p) for p in point]
        total = Fraction(0)
        for m, c in self._terms.items():
            term = c
            for x, e in zip(point, m):
                if e:
                    term *= x**e
            total += term
        return total

    def render(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for i, m in enumerate(self.monomials()):
            c = self._terms[m]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = render_monomial(m)
            if mono == "1":
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if i == 0:
                pieces.append(body if sign == "+" else "-" + body)
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)

    __str__ = render

    def __repr__(self):
        return f"WeightedPolynomial({self.render()!r}, ws={self.ws})"


def partial_derivative(f: WeightedPolynomial, i: int) -> WeightedPolynomial:
    """Formal derivative with respect to ``x_{i+1}`` (0-based index)."""
    if not 0 <= i < NVARS:
        raise IndexError(f"variable index {i} out of range")
    out = {}
    for m, c in f.items():
        e = m[i]
        if e:
            dm = list(m)
            dm[i] = e - 1
            out[tuple(dm)] = c * e
    return WeightedPolynomial._trusted(out, f.ws)


def fermat_polynomial(ws: WeightSystem) -> WeightedPolynomial:
    """Sum of pure powers ``x_i^(d/w_i)``."""
    if not ws.has_fermat_member():
        raise NoFermatMember(f"no Fermat member: some weight of {ws.weights} does not divide {ws.degree}")
    terms = {}
    for i, w in enumerate(ws.weights):
        m = [0] * NVARS
        m[i] = ws.degree // w
        terms[tuple(m)] = 1
    return WeightedPolynomial(terms, ws)


def random_homogeneous(
    ws: WeightSystem,
    k: int,
    rng: random.Random,
    coefficients: range = range(-9, 10),
    density: float = 1.0,
) -> WeightedPolynomial:
    """Random element of S_k with nonzero coefficients drawn from ``coefficients``."""
    choices = [c for c in coefficients if c]
    terms = {}
    for m in monomials_of_degree(ws, k):
        if density >= 1.0 or rng.random() < density:
            terms[m] = rng.choice(choices)
    return WeightedPolynomial(terms, ws)


# -- parser -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^/()]))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PolynomialSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, ws: WeightSystem):
        self.text = text
        self.ws = ws
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return PolynomialSyntaxError(message, self.text, tok[2])

    def expect_op(self, op):
        tok = self.advance()
        if tok[0] != "op" or tok[1] != op:
            raise self.error(f"expected {op!r}", tok)

    def parse(self) -> WeightedPolynomial:
        if self.peek()[0] == "end":
            raise self.error("empty polynomial")
        result = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected token {self.peek()[1]!r}")
        return result

    def expr(self):
        total = self.signed_term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.advance()[1]
            term = self.term()
            total = total + term if op == "+" else total - term
        return total

    def signed_term(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.advance()
            term = self.term()
            return -term if tok[1] == "-" else term
        return self.term()

    def term(self):
        value = self.power()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.advance()
            value = value * self.power()
        return value

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.advance()
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "-":
                raise self.error("negative exponent", tok)
            if tok[0] != "num":
                raise self.error("expected integer exponent", tok)
            self.advance()
            base = base ** int(tok[1])
        return base

    def atom(self):
        tok = self.advance()
        kind, value, _ = tok
        if kind == "num":
            c = Fraction(int(value))
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.advance()
                den = self.advance()
                if den[0] != "num":
                    raise self.error("expected integer denominator", den)
                if int(den[1]) == 0:
                    raise self.error("zero denominator", den)
                c = Fraction(int(value), int(den[1]))
            return WeightedPolynomial.constant(c, self.ws)
        if kind == "name":
            if value not in VARIABLES:
                raise self.error(f"unknown variable {value!r}", tok)
            return WeightedPolynomial.variable(VARIABLES.index(value), self.ws)
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        if kind == "end":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"unexpected token {value!r}", tok)


def parse_polynomial(text: str, ws: WeightSystem) -> WeightedPolynomial:
    """Parse ``text`` (variables x1..x4, integer or p/q coefficients, ``+ - * ^``,
    parentheses) into a polynomial with like terms combined."""
    return _Parser(text, ws).parse()
