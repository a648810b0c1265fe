"""Buchberger's algorithm for homogeneous ideals in the weighted polynomial ring.

Only weighted-degree-compatible orders are offered, so every reduction stays
inside a single graded slice.  Pairs are processed by increasing weighted
degree of their lcm (the normal strategy) and pruned with the Gebauer-Moeller
update, which covers both Buchberger criteria.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .polyalg import (
    NVARS,
    Monomial,
    WeightSystem,
    WeightedPolynomial,
    bounded_monomials,
    divides,
    mono_div,
    mono_lcm,
    mono_mul,
    weighted_degree,
)

ORDERS = ("wdegrevlex", "wdeglex")


@dataclass(frozen=True)
class MonomialOrder:
    """A weighted-degree-compatible monomial order; ``key`` is increasing in the order."""

    ws: WeightSystem
    kind: str = "wdegrevlex"
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if self.kind not in ORDERS:
            raise ValueError(f"unknown monomial order {self.kind!r}; expected one of {ORDERS}")

    def key(self, m: Monomial):
        k = self._cache.get(m)
        if k is None:
            deg = weighted_degree(m, self.ws)
            if self.kind == "wdegrevlex":
                k = (deg, tuple(-e for e in reversed(m)))
            else:
                k = (deg, tuple(m))
            self._cache[m] = k
        return k

    def leading(self, terms) -> Monomial:
        return max(terms, key=self.key)


def _monic(p: dict, lm: Monomial) -> dict:
    c = p[lm]
    if c == 1:
        return p
    inv = 1 / c
    return {m: v * inv for m, v in p.items()}


def _reduce(p: dict, basis: list, order: MonomialOrder) -> dict:
    """Full reduction of ``p`` by ``basis`` (list of (lm, monic dict)); returns the remainder."""
    p = dict(p)
    rem = {}
    key = order.key
    while p:
        m = max(p, key=key)
        c = p.pop(m)
        for lm, g in basis:
            if divides(lm, m):
                q = mono_div(m, lm)
                for gm, gc in g.items():
                    if gm == lm:
                        continue
                    t = mono_mul(gm, q)
                    v = p.get(t, 0) - c * gc
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            rem[m] = c
    return rem


def _spoly(f: tuple, g: tuple) -> dict:
    lf, pf = f
    lg, pg = g
    lcm = mono_lcm(lf, lg)
    uf = mono_div(lcm, lf)
    ug = mono_div(lcm, lg)
    out = {}
    for m, c in pf.items():
        if m != lf:
            out[mono_mul(m, uf)] = c
    for m, c in pg.items():
        if m != lg:
            t = mono_mul(m, ug)
            v = out.get(t, 0) - c
            if v:
                out[t] = v
            else:
                out.pop(t, None)
    return out


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced, monic Groebner basis, generators sorted by leading monomial (descending)."""

    generators: tuple
    order: MonomialOrder
    leading_monomials: tuple

    @property
    def ws(self) -> WeightSystem:
        return self.order.ws

    def _pairs(self) -> list:
        return [(lm, dict(g.items())) for lm, g in zip(self.leading_monomials, self.generators)]

    def normal_form(self, p: WeightedPolynomial) -> WeightedPolynomial:
        return normal_form(p, self)

    def contains(self, p: WeightedPolynomial) -> bool:
        return normal_form(p, self).is_zero()

    def is_unit_ideal(self) -> bool:
        return (0,) * NVARS in self.leading_monomials

    def is_zero_dimensional(self) -> bool:
        return is_zero_dimensional(self)

    def standard_monomials(self, k: int) -> list:
        return standard_monomials(self, k)


def buchberger(gens, order: MonomialOrder | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by homogeneous ``gens``."""
    gens = [g for g in gens if not g.is_zero()]
    if order is None:
        if not gens:
            raise ValueError("cannot infer the weight system from an empty generator list")
        order = MonomialOrder(gens[0].ws)
    for g in gens:
        if g.ws != order.ws:
            raise ValueError("generator weight system differs from the order's")
        if g.homogeneous_degree is None:
            raise ValueError(f"generator is not weighted homogeneous: {g}")
    key = order.key

    polys: list = []  # (lm, monic dict), indexed; never removed
    active: list = []  # indices currently in G
    pairs: list = []  # (i, j) with i < j

    def add(h: dict):
        lm_h = order.leading(h)
        h = _monic(h, lm_h)
        idx = len(polys)
        polys.append((lm_h, h))
        nonlocal active, pairs
        # Gebauer-Moeller update
        cand = list(active)
        kept = []
        while cand:
            g1 = cand.pop(0)
            l1 = mono_lcm(lm_h, polys[g1][0])
            if _coprime(lm_h, polys[g1][0]) or not any(
                divides(mono_lcm(lm_h, polys[g2][0]), l1) for g2 in cand + kept
            ):
                kept.append(g1)
        new_pairs = [g for g in kept if not _coprime(lm_h, polys[g][0])]
        survivors = []
        for i, j in pairs:
            lij = mono_lcm(polys[i][0], polys[j][0])
            if (
                divides(lm_h, lij)
                and mono_lcm(polys[i][0], lm_h) != lij
                and mono_lcm(polys[j][0], lm_h) != lij
            ):
                continue
            survivors.append((i, j))
        pairs = survivors + [(g, idx) for g in new_pairs]
        active = [g for g in active if not divides(lm_h, polys[g][0])] + [idx]

    def current():
        return [polys[i] for i in active]

    # seed generators in increasing degree, each reduced by what is already there
    for g in sorted(gens, key=lambda g: (g.homogeneous_degree, key(order.leading(g.terms)))):
        h = _reduce(dict(g.items()), current(), order)
        if h:
            add(h)

    def pair_key(pair):
        lcm = mono_lcm(polys[pair[0]][0], polys[pair[1]][0])
        return (key(lcm), pair)

    while pairs:
        pairs.sort(key=pair_key)
        i, j = pairs.pop(0)
        s = _spoly(polys[i], polys[j])
        h = _reduce(s, current(), order)
        if h:
            add(h)

    return _reduced_basis(current(), order)


def _reduced_basis(basis: list, order: MonomialOrder) -> GroebnerBasis:
    basis = sorted(basis, key=lambda b: order.key(b[0]))
    minimal = []
    for lm, g in basis:
        if not any(divides(l2, lm) for l2, _ in minimal):
            minimal.append((lm, g))
    reduced = []
    for idx, (lm, g) in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        tail = {m: c for m, c in g.items() if m != lm}
        tail = _reduce(tail, others, order)
        tail[lm] = Fraction(1)
        reduced.append((lm, tail))
    reduced.sort(key=lambda b: order.key(b[0]), reverse=True)
    ws = order.ws
    return GroebnerBasis(
        generators=tuple(WeightedPolynomial._trusted(g, ws) for _, g in reduced),
        order=order,
        leading_monomials=tuple(lm for lm, _ in reduced),
    )


def normal_form(p: WeightedPolynomial, gb: GroebnerBasis) -> WeightedPolynomial:
    """Remainder of ``p`` on division by ``gb``; zero iff ``p`` lies in the ideal."""
    if p.is_zero():
        return p
    rem = _reduce(dict(p.items()), gb._pairs(), gb.order)
    return WeightedPolynomial._trusted(rem, p.ws)


def is_zero_dimensional(gb: GroebnerBasis) -> bool:
    """True iff every variable has a pure power among the leading monomials."""
    if gb.is_unit_ideal():
        return True
    for i in range(NVARS):
        if not any(lm[i] > 0 and sum(lm) == lm[i] for lm in gb.leading_monomials):
            return False
    return True


def pure_power_caps(gb: GroebnerBasis) -> tuple:
    """Per-variable exponent caps implied by pure-power leading monomials (None if absent)."""
    caps = [None] * NVARS
    for lm in gb.leading_monomials:
        support = [i for i, e in enumerate(lm) if e]
        if len(support) == 1:
            i = support[0]
            cap = lm[i] - 1
            caps[i] = cap if caps[i] is None else min(caps[i], cap)
    return tuple(caps)


def standard_monomials(gb: GroebnerBasis, k: int) -> list:
    """Monomials of weighted degree ``k`` not divisible by any leading monomial,
    lexicographically descending."""
    if k < 0 or gb.is_unit_ideal():
        return []
    caps = pure_power_caps(gb)
    rest = [lm for lm in gb.leading_monomials if sum(1 for e in lm if e) > 1]
    return [
        m
        for m in bounded_monomials(gb.ws.weights, k, caps)
        if not any(divides(lm, m) for lm in rest)
    ]
