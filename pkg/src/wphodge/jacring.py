"""The Jacobian ring R(f) = S/J(f) of a weighted homogeneous polynomial.

Graded pieces are represented by their standard monomials with respect to a
Groebner basis of the Jacobian ideal; every element of ``R_k`` is a rational
coordinate vector in that basis.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .exactla import RationalMatrix, rank
from .groebner import GroebnerBasis, MonomialOrder, buchberger, is_zero_dimensional, normal_form
from .polyalg import (
    NVARS,
    WeightSystem,
    WeightedPolynomial,
    monomials_of_degree,
    partial_derivative,
    random_homogeneous,
)


class NotQuasiSmooth(ValueError):
    pass


class NoQuasiSmoothMember(RuntimeError):
    pass


class DegreeOutOfBand(ValueError):
    pass


def jacobian_ideal(f: WeightedPolynomial) -> list:
    """The four partial derivatives of ``f`` (zero ones included)."""
    return [partial_derivative(f, i) for i in range(NVARS)]


def _require_homogeneous(f: WeightedPolynomial):
    if f.is_zero() or f.homogeneous_degree is None:
        raise ValueError(f"polynomial is not weighted homogeneous: {f}")


def jacobian_groebner(f: WeightedPolynomial, order: MonomialOrder | None = None) -> GroebnerBasis:
    _require_homogeneous(f)
    return _jacobian_groebner(f, order or MonomialOrder(f.ws))


@lru_cache(maxsize=64)
def _jacobian_groebner(f: WeightedPolynomial, order: MonomialOrder) -> GroebnerBasis:
    gens = [g for g in jacobian_ideal(f) if not g.is_zero()]
    if not gens:
        return GroebnerBasis((), order, ())
    return buchberger(gens, order)


def is_quasi_smooth(f: WeightedPolynomial) -> bool:
    """True iff the partials of ``f`` have only the origin as common zero."""
    return is_zero_dimensional(jacobian_groebner(f))


def socle_bound(ws: WeightSystem, n: int = 2) -> int:
    """(n+2)d - 2*sigma; the expected top degree of R(f) for a quasi-smooth n-fold."""
    return (n + 2) * ws.degree - 2 * ws.sigma


@dataclass
class JacobianRingModel:
    f: WeightedPolynomial
    gb: GroebnerBasis
    band: int
    bases: dict
    hilbert: dict
    socle_degree: int | None
    socle_monomial: tuple | None
    _nf_cache: dict = field(default_factory=dict, repr=False)
    _index: dict = field(default_factory=dict, repr=False)

    @property
    def ws(self) -> WeightSystem:
        return self.f.ws

    @property
    def socle_is_simple(self) -> bool:
        return self.socle_degree is not None and self.hilbert[self.socle_degree] == 1

    def dim(self, k: int) -> int:
        if k < 0:
            return 0
        if k > self.band:
            raise DegreeOutOfBand(f"degree {k} beyond cached band 0..{self.band}")
        return self.hilbert[k]

    def hilbert_vector(self, top: int | None = None) -> list:
        top = self.band if top is None else top
        return [self.dim(k) for k in range(top + 1)]

    def basis_index(self, k: int) -> dict:
        idx = self._index.get(k)
        if idx is None:
            if k < 0 or k > self.band:
                raise DegreeOutOfBand(f"degree {k} beyond cached band 0..{self.band}")
            idx = {m: i for i, m in enumerate(self.bases[k])}
            self._index[k] = idx
        return idx

    def monomial_normal_form(self, m: tuple) -> dict:
        nf = self._nf_cache.get(m)
        if nf is None:
            p = WeightedPolynomial._trusted({m: Fraction(1)}, self.ws)
            nf = dict(normal_form(p, self.gb).items())
            self._nf_cache[m] = nf
        return nf

    def coordinates(self, p: WeightedPolynomial, k: int | None = None) -> list:
        """Coordinate vector of the class of homogeneous ``p`` in ``bases[k]``."""
        if k is None:
            if p.homogeneous_degree is None:
                raise ValueError("cannot infer the degree of an inhomogeneous polynomial")
            k = p.homogeneous_degree
        idx = self.basis_index(k)
        vec = [Fraction(0)] * len(idx)
        for m, c in p.items():
            for mm, cc in self.monomial_normal_form(m).items():
                vec[idx[mm]] += c * cc
        return vec

    def element(self, vec, k: int) -> WeightedPolynomial:
        """Polynomial representative of a coordinate vector in ``R_k``."""
        return WeightedPolynomial(
            {m: c for m, c in zip(self.bases[k], vec) if c}, self.ws
        )

    def multiplication_matrix(self, g: WeightedPolynomial, from_degree: int) -> RationalMatrix:
        return multiplication_matrix(self, g, from_degree)

    def socle_coefficient(self, p: WeightedPolynomial) -> Fraction:
        """Coefficient of the socle monomial in the normal form of ``p``."""
        if self.socle_degree is None:
            raise ValueError("ring has no socle (R(f) = 0)")
        vec = self.coordinates(p, self.socle_degree)
        return vec[self.basis_index(self.socle_degree)[self.socle_monomial]]


def jacobian_ring(f: WeightedPolynomial, band: int | None = None) -> JacobianRingModel:
    """Build R(f) with bases and Hilbert function through ``band``.

    The default band is 2*N_bound with N_bound = 4d - 2*sigma, so the scan
    verifies vanishing above the socle instead of assuming it.
    """
    gb = jacobian_groebner(f)
    if not is_zero_dimensional(gb):
        raise NotQuasiSmooth(f"Jacobian ideal of {f} is not zero-dimensional")
    ws = f.ws
    if band is None:
        # also reach the h^{0,2} slice 3d - sigma when it sits above 2*N_bound
        band = max(2 * socle_bound(ws), 3 * ws.degree - ws.sigma, 0)
    bases = {k: tuple(gb.standard_monomials(k)) for k in range(band + 1)}
    hilbert = {k: len(b) for k, b in bases.items()}
    nonzero = [k for k, h in hilbert.items() if h]
    socle_degree = max(nonzero) if nonzero else None
    socle_monomial = bases[socle_degree][0] if socle_degree is not None else None
    return JacobianRingModel(f, gb, band, bases, hilbert, socle_degree, socle_monomial)


@dataclass(frozen=True)
class DualityReport:
    degree: int
    pairing_matrix: RationalMatrix
    nondegenerate: bool


def duality_check(model: JacobianRingModel, i: int) -> DualityReport:
    """Pairing R_i x R_{N-i} -> R_N, entries read off the socle monomial."""
    N = model.socle_degree
    if N is None or not 0 <= i <= N:
        raise ValueError(f"degree {i} outside 0..{N}")
    left, right = model.bases[i], model.bases[N - i]
    rows = []
    for ma in left:
        row = []
        for mb in right:
            m = tuple(x + y for x, y in zip(ma, mb))
            row.append(model.monomial_normal_form(m).get(model.socle_monomial, Fraction(0)))
        rows.append(row)
    P = RationalMatrix.from_rows(rows, len(right))
    ok = len(left) == len(right) and rank(P) == len(left)
    return DualityReport(i, P, ok)


def multiplication_matrix(model: JacobianRingModel, g: WeightedPolynomial, from_degree: int) -> RationalMatrix:
    """Matrix of R_a -> R_{a+b}, v -> g*v; columns follow bases[a], rows bases[a+b]."""
    a = from_degree
    if g.homogeneous_degree is None:
        raise ValueError(f"multiplier must be nonzero and homogeneous: {g}")
    b = g.homogeneous_degree
    target = a + b
    if a < 0 or target > model.band:
        raise DegreeOutOfBand(f"degrees {a} -> {target} leave the cached band 0..{model.band}")
    idx = model.basis_index(target)
    columns = []
    for m in model.bases[a]:
        col = [Fraction(0)] * len(idx)
        for gm, gc in g.items():
            prod = tuple(x + y for x, y in zip(gm, m))
            for mm, cc in model.monomial_normal_form(prod).items():
                col[idx[mm]] += gc * cc
        columns.append(col)
    return RationalMatrix.from_columns(columns, len(idx))


def random_quasi_smooth(ws: WeightSystem, seed: int, attempts: int = 20) -> WeightedPolynomial:
    """Dense random member of S_d with coefficients in {-9..9}\\{0}, verified quasi-smooth."""
    rng = random.Random(seed)
    if not monomials_of_degree(ws, ws.degree):
        raise NoQuasiSmoothMember(f"S_{ws.degree} is empty for weights {ws.weights}")
    for _ in range(attempts):
        f = random_homogeneous(ws, ws.degree, rng)
        if is_quasi_smooth(f):
            return f
    raise NoQuasiSmoothMember(
        f"no quasi-smooth member found for {ws} after {attempts} attempts; "
        "the quasi-smooth locus may be empty"
    )
