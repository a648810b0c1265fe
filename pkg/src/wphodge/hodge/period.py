"""The differential of the period map as multiplication in the Jacobian ring.

A first-order deformation phi in R_d acts on the Hodge slices by
multiplication, R_{d-s} -> R_{2d-s} (s = sum of weights).  Stacking these maps
over a basis v_1..v_p of R_{d-s} gives ``matrix_m``; its rank is the rank of
the period map.  When p = 2 the two blocks A, B (multiplication by v_1, v_2)
span the pencil whose column spaces are the subspaces W v for v = a v_1 + b v_2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exactla import PencilRankCertificate, RationalMatrix, pencil_min_rank, rank
from ..jacring import JacobianRingModel, NotQuasiSmooth, duality_check
from ..polyalg import WeightedPolynomial
from .geometry import DomainGeometry


class ConsistencyError(ArithmeticError):
    """A computed invariant contradicts a theorem the pipeline relies on."""


@dataclass(frozen=True)
class PeriodDifferentialReport:
    matrix_m: RationalMatrix
    rank_m: int
    tangent_dim: int  # dim R_d
    A: RationalMatrix | None = None
    B: RationalMatrix | None = None
    pencil: PencilRankCertificate | None = None
    span_rank: int | None = None
    rank_A: int | None = None
    rank_B: int | None = None
    isotropy_ok: bool | None = None


def horizontal_report(A: RationalMatrix, B: RationalMatrix, mode: str = "exact",
                      seed: int | None = None) -> PeriodDifferentialReport:
    """Report for a tangent space W given by the column pairs (Xv_1, Xv_2), X in W."""
    M = A.vstack(B)
    return PeriodDifferentialReport(
        matrix_m=M,
        rank_m=rank(M),
        tangent_dim=A.cols,
        A=A,
        B=B,
        pencil=pencil_min_rank(A, B, mode=mode, seed=seed),
        span_rank=rank(A.hstack(B)),
        rank_A=rank(A),
        rank_B=rank(B),
    )


def _slices(model: JacobianRingModel):
    d, s = model.ws.degree, model.ws.sigma
    return d - s, d, 2 * d - s


def period_differential(model: JacobianRingModel, mode: str = "exact",
                        seed: int | None = None) -> PeriodDifferentialReport:
    if model.socle_degree is None:
        raise NotQuasiSmooth("Jacobian ring is zero; no period differential")
    low, d, mid = _slices(model)
    if low < 0 or model.dim(low) == 0:
        return PeriodDifferentialReport(RationalMatrix.zeros(0, model.dim(d)), 0, model.dim(d))
    blocks = [model.multiplication_matrix(WeightedPolynomial.monomial(v, model.ws), d)
              for v in model.bases[low]]
    if len(blocks) != 2:
        M = blocks[0]
        for blk in blocks[1:]:
            M = M.vstack(blk)
        return PeriodDifferentialReport(M, rank(M), model.dim(d))
    A, B = blocks
    report = horizontal_report(A, B, mode=mode, seed=seed)
    iso = isotropy_defect(model, A, B)
    return PeriodDifferentialReport(
        matrix_m=report.matrix_m,
        rank_m=report.rank_m,
        tangent_dim=report.tangent_dim,
        A=A,
        B=B,
        pencil=report.pencil,
        span_rank=report.span_rank,
        rank_A=report.rank_A,
        rank_B=report.rank_B,
        isotropy_ok=iso is not None and iso.is_zero(),
    )


def middle_pairing(model: JacobianRingModel) -> RationalMatrix | None:
    """Pairing R_{2d-s} x R_{2d-s} -> R_N; None unless N = 2(2d-s)."""
    _, _, mid = _slices(model)
    if model.socle_degree != 2 * mid:
        return None
    return duality_check(model, mid).pairing_matrix


def contact_form(P: RationalMatrix, X: tuple, Y: tuple) -> Fraction:
    """omega(X, Y) = <Xv1, Yv2> - <Yv1, Xv2> for X = (Xv1, Xv2), Y = (Yv1, Yv2)."""
    (x1, x2), (y1, y2) = X, Y

    def pair(u, w):
        return sum((a * c for a, c in zip(u, P.apply(w)) if a), Fraction(0))

    return pair(x1, y2) - pair(y1, x2)


def contact_gram(model: JacobianRingModel) -> RationalMatrix:
    """Gram matrix of omega on Hom(R_{d-s}, R_{2d-s}), coordinates (Xv1 | Xv2)."""
    P = middle_pairing(model)
    if P is None:
        raise ValueError("socle degree is not twice the middle degree")
    n = P.rows
    Z = RationalMatrix.zeros(n, n)
    top = Z.hstack(P)
    bottom = P.transpose().scale(-1).hstack(Z)
    return top.vstack(bottom)


def isotropy_defect(model: JacobianRingModel, A: RationalMatrix, B: RationalMatrix) -> RationalMatrix | None:
    """A^t P B - B^t P A: the matrix of omega(m(phi), m(psi)) on R_d; zero iff the image is isotropic."""
    P = middle_pairing(model)
    if P is None:
        return None
    AtPB = A.transpose() @ P @ B
    return AtPB - AtPB.transpose()


def _as_vector(model: JacobianRingModel, x, degree: int) -> list:
    if isinstance(x, WeightedPolynomial):
        if not x.is_zero() and x.homogeneous_degree != degree:
            raise ValueError(f"expected an element of degree {degree}, got {x}")
        return model.coordinates(x, degree) if not x.is_zero() else [Fraction(0)] * model.dim(degree)
    vec = [Fraction(c) for c in x]
    if len(vec) != model.dim(degree):
        raise ValueError(f"coordinate vector has length {len(vec)}, expected {model.dim(degree)}")
    return vec


def symplectic_form(model: JacobianRingModel, phi, psi) -> Fraction:
    """omega(m(phi), m(psi)) for phi, psi in R_d (polynomials or coordinate vectors)."""
    low, d, _ = _slices(model)
    if low < 0 or model.dim(low) != 2:
        raise ValueError("symplectic form needs h^{2,0} = 2")
    P = middle_pairing(model)
    if P is None:
        raise ValueError("socle degree is not twice the middle degree")
    u = _as_vector(model, phi, d)
    w = _as_vector(model, psi, d)
    v1 = model.element([1, 0], low)
    v2 = model.element([0, 1], low)
    A = model.multiplication_matrix(v1, d)
    B = model.multiplication_matrix(v2, d)
    X = (A.apply(u), B.apply(u))
    Y = (A.apply(w), B.apply(w))
    return contact_form(P, X, Y)


def check_rank_bound(report: PeriodDifferentialReport, geometry: DomainGeometry):
    """Integral elements of a contact structure are at most half its dimension."""
    if geometry.is_contact and 2 * report.rank_m > geometry.dim_horizontal:
        raise ConsistencyError(
            f"period differential rank {report.rank_m} exceeds the Lagrangian bound "
            f"{geometry.dim_horizontal // 2}"
        )
