"""Tangent spaces of horizontal geodesic SU(p, q/2)-orbits and the non-geodesy test.

An orthogonal complex structure J on the q-dimensional slice determines the
geodesic tangent space T_J = {X : J X = i X} = Hom(C^p, E) where E is the
(+i)-eigenspace of J, a q/2-dimensional subspace defined over Q(i).  A tangent
space W with dim(W v) > q/2 for every v != 0 cannot lie in any such T_J.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from ..exactla import (
    AlgebraicField,
    RationalMatrix,
    kernel_over_field,
    rank_over_field,
)
from .geometry import DomainGeometry
from .period import PeriodDifferentialReport

GAUSSIAN = AlgebraicField([1, 0, 1])  # Q[t]/(t^2 + 1)


class InvalidComplexStructure(ValueError):
    pass


def standard_complex_structure(q: int) -> RationalMatrix:
    """Block diagonal rotation by 90 degrees on consecutive coordinate pairs."""
    if q % 2:
        raise ValueError("complex structures need an even dimension")
    rows = [[0] * q for _ in range(q)]
    for k in range(0, q, 2):
        rows[k][k + 1] = -1
        rows[k + 1][k] = 1
    return RationalMatrix.from_rows(rows, q)


def _householder(v: list) -> RationalMatrix:
    n = len(v)
    norm2 = sum(x * x for x in v)
    return RationalMatrix.from_rows(
        [[Fraction(int(i == j)) - Fraction(2 * v[i] * v[j], norm2) for j in range(n)] for i in range(n)], n
    )


def random_orthogonal(q: int, rng: random.Random, reflections: int | None = None) -> RationalMatrix:
    """Rational orthogonal matrix as a product of Householder reflections."""
    Q = RationalMatrix.identity(q)
    for _ in range(q if reflections is None else reflections):
        v = [0] * q
        while not any(v):
            v = [rng.randint(-3, 3) for _ in range(q)]
        Q = _householder(v) @ Q
    return Q


def random_complex_structure(q: int, seed: int, reflections: int = 4) -> RationalMatrix:
    """J = Q J0 Q^t for a seeded rational orthogonal Q."""
    rng = random.Random(seed)
    Q = random_orthogonal(q, rng, reflections)
    return Q @ standard_complex_structure(q) @ Q.transpose()


def validate_complex_structure(J: RationalMatrix):
    if J.rows != J.cols:
        raise InvalidComplexStructure("J must be square")
    I = RationalMatrix.identity(J.rows)
    if not (J @ J + I).is_zero():
        raise InvalidComplexStructure("J^2 != -1")
    if not (J.transpose() @ J - I).is_zero():
        raise InvalidComplexStructure("J is not orthogonal")


@dataclass(frozen=True)
class GeodesicTangentSpace:
    J: RationalMatrix
    p: int
    eigenbasis: tuple  # vectors over Q(i) spanning the +i eigenspace of J
    dim: int

    def contains(self, columns) -> bool:
        """True iff every vector X v (given as rational columns) lies in the +i eigenspace.

        ``columns`` is an iterable of rational matrices, one per basis vector of
        the p-dimensional slice; their columns are the vectors X v.
        """
        vectors = [list(e) for e in self.eigenbasis]
        for M in columns:
            for j in range(M.cols):
                vectors.append([GAUSSIAN.scalar(x) for x in M.column(j)])
        if not vectors:
            return True
        return rank_over_field(vectors, GAUSSIAN) == len(self.eigenbasis)

    def contains_report(self, report: PeriodDifferentialReport) -> bool:
        return self.contains([report.A, report.B])

    def pencil_matrices(self):
        """(A, B) for W = T_J in coordinates adapted to J.

        In the basis (e_1..e_r, conj e_1..conj e_r) of the q-slice, with e_k the
        eigenbasis, T_J is spanned by the homomorphisms X_{s,k} sending the s-th
        basis vector of the p-slice to e_k.  Changing coordinates is complex
        linear, so every rank computed from these matrices is that of T_J.
        """
        if self.p != 2:
            raise ValueError("pencil matrices are defined for p = 2")
        r = len(self.eigenbasis)
        q = self.J.rows
        a_cols, b_cols = [], []
        for s in range(2):
            for k in range(r):
                e = [0] * q
                e[k] = 1
                zero = [0] * q
                a_cols.append(e if s == 0 else zero)
                b_cols.append(e if s == 1 else zero)
        return RationalMatrix.from_columns(a_cols, q), RationalMatrix.from_columns(b_cols, q)


def geodesic_tangent_space(J: RationalMatrix, p: int = 2) -> GeodesicTangentSpace:
    """{X in Hom(C^p, C^q) : J X = i X}, of dimension p*q/2."""
    validate_complex_structure(J)
    q = J.rows
    i = GAUSSIAN.generator
    rows = []
    for r in range(q):
        rows.append([
            GAUSSIAN.sub(GAUSSIAN.scalar(J[r, c]), i if r == c else GAUSSIAN.zero())
            for c in range(q)
        ])
    eig = kernel_over_field(rows, GAUSSIAN, q)
    return GeodesicTangentSpace(J, p, tuple(tuple(v) for v in eig), p * len(eig))


@dataclass(frozen=True)
class NonGeodesyCertificate:
    min_wv_dim: int
    threshold: Fraction
    verdict: bool
    span_full: bool
    mode: str


def non_geodesy_certificate(report: PeriodDifferentialReport, geometry: DomainGeometry) -> NonGeodesyCertificate:
    """W is non-geodesic when every W v has dimension above q/2.

    A geodesic tangent space sends each v into a q/2-dimensional eigenspace;
    so does any W fixed by an isotropy element with non-real eigenvalues.
    """
    if not geometry.is_contact:
        raise ValueError("non-geodesy certificate needs a contact domain (p = 2)")
    if report.pencil is None:
        raise ValueError("report carries no pencil certificate")
    threshold = Fraction(geometry.q, 2)
    return NonGeodesyCertificate(
        min_wv_dim=report.pencil.min_rank,
        threshold=threshold,
        verdict=report.pencil.min_rank > threshold,
        span_full=report.span_rank == geometry.q,
        mode=report.pencil.mode,
    )
