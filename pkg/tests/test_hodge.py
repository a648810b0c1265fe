import random
from fractions import Fraction

import pytest

from oracles import gauss_rank
from wphodge.exactla import RationalMatrix, rank
from wphodge.hodge import (
    ConsistencyError,
    contact_form,
    contact_gram,
    domain_geometry,
    geodesic_tangent_space,
    hodge_numbers,
    horizontal_report,
    non_geodesy_certificate,
    period_differential,
    quaternionic_domain_geometry,
    random_complex_structure,
    search,
    standard_complex_structure,
    symplectic_form,
)
from wphodge.hodge.geodesic import InvalidComplexStructure, validate_complex_structure
from wphodge.hodge.period import check_rank_bound, isotropy_defect, middle_pairing
from wphodge.hodge.search import NO_FERMAT, TRIVIAL_RING, evaluate_candidate, weight_systems
from wphodge.jacring import jacobian_ring
from wphodge.polyalg import WeightedPolynomial, WeightSystem, fermat_polynomial

WS = WeightSystem((1, 1, 2, 5), 10)
G228 = domain_geometry(2, 28)


def fermat_model(weights, d):
    ws = WeightSystem(weights, d)
    return ws, jacobian_ring(fermat_polynomial(ws))


# -- Hodge numbers ---------------------------------------------------------------


def test_hodge_numbers_of_fermat_surface(model0):
    prof = hodge_numbers(WS, model0)
    assert prof.as_tuple() == (2, 28, 2)
    assert prof.source_degrees == (1, 11, 21)
    assert prof.symmetric


def test_hodge_numbers_of_quintic():
    ws, model = fermat_model((1, 1, 1, 1), 5)
    assert hodge_numbers(ws, model).as_tuple() == (4, 44, 4)


def test_hodge_numbers_of_quadric():
    ws, model = fermat_model((1, 1, 1, 1), 2)
    prof = hodge_numbers(ws, model)
    assert prof.h20 == 0 and prof.h02 == 0
    assert prof.source_degrees[0] == -2


def test_hodge_numbers_reject_foreign_model(model0):
    with pytest.raises(ValueError):
        hodge_numbers(WeightSystem((1, 1, 1, 1), 5), model0)


# -- domain geometry -----------------------------------------------------------------


def test_geometry_2_28():
    g = G228
    assert (g.dim_domain, g.dim_horizontal, g.is_contact) == (57, 56, True)
    assert g.max_integral_dim == 28 and not g.max_integral_is_lower_bound
    assert g.lagrangian_grassmannian_dim == 406
    assert g.complex_structure_space_dim_real == 182
    assert g.complex_structure_space_dim_complex == 91
    assert g.geodesic_orbit_dim == 28


def test_geometry_4_44():
    g = domain_geometry(4, 44)
    assert (g.dim_domain, g.dim_horizontal, g.is_contact) == (182, 176, False)
    assert g.max_integral_dim == 88 and g.max_integral_is_lower_bound
    assert g.lagrangian_grassmannian_dim is None


@pytest.mark.parametrize("q", [1, 5, 19])
def test_geometry_p1(q):
    g = domain_geometry(1, q)
    assert (g.dim_domain, g.dim_horizontal, g.is_contact) == (q, q, False)


def test_geometry_rejects_empty():
    with pytest.raises(ValueError):
        domain_geometry(0, 3)


def test_quaternionic_geometry():
    assert tuple(quaternionic_domain_geometry(1)) == (3, 2)
    assert tuple(quaternionic_domain_geometry(14)) == (29, 28)
    g2 = quaternionic_domain_geometry(2)
    assert (g2.lagrangian_space_dim, g2.geodesic_orbit_dim) == (3, 2)


# -- period differential ---------------------------------------------------------------


def test_period_differential_fermat(report0):
    r = report0
    assert r.matrix_m.shape == (56, 28)
    assert r.rank_m == 28 == G228.max_integral_dim
    assert gauss_rank(r.matrix_m.to_rows()) == 28
    assert (r.rank_A, r.rank_B, r.span_rank) == (26, 26, 28)
    assert r.pencil.min_rank == 26 and r.pencil.generic_rank == 26
    assert r.isotropy_ok


def test_report_consistency_bounds(report0):
    r = report0
    assert r.pencil.generic_rank <= min(r.rank_A, r.rank_B)
    assert r.span_rank >= max(r.rank_A, r.rank_B)
    assert r.rank_m <= min(r.tangent_dim, G228.dim_horizontal)


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_isotropy_for_random_surfaces(random_model, seed):
    model = random_model(seed)
    r = period_differential(model)
    assert r.isotropy_ok
    assert isotropy_defect(model, r.A, r.B).is_zero()
    check_rank_bound(r, G228)
    # generic members: full generic rank, drops only at algebraic points of det(A + tB)
    assert r.pencil.generic_rank == 28 and r.pencil.min_rank >= 27
    assert non_geodesy_certificate(r, G228).verdict


def test_rank_bound_violation_raises():
    A = RationalMatrix.identity(2)
    B = RationalMatrix.from_rows([[0, 1], [1, 0]])
    rep = horizontal_report(A.hstack(A), B.hstack(A))
    with pytest.raises(ConsistencyError):
        check_rank_bound(rep, domain_geometry(2, 1))


def test_quintic_period_differential():
    _, model = fermat_model((1, 1, 1, 1), 5)
    r = period_differential(model)
    assert r.A is None and r.pencil is None
    assert r.matrix_m.shape == (4 * 44, 40)
    assert r.rank_m == 40


# -- symplectic form ---------------------------------------------------------------------


def test_symplectic_form_vanishes_on_image(model0):
    basis = model0.bases[10]
    for i in range(0, 28, 3):
        for j in range(1, 28, 4):
            phi = WeightedPolynomial.monomial(basis[i], WS)
            psi = WeightedPolynomial.monomial(basis[j], WS)
            assert symplectic_form(model0, phi, psi) == 0


def test_symplectic_form_is_alternating(random_model):
    model = random_model(1)
    rng = random.Random(0)
    for _ in range(3):
        u = [Fraction(rng.randint(-5, 5)) for _ in range(28)]
        assert symplectic_form(model, u, u) == 0


def test_contact_form_nonzero_off_image(model0):
    P = middle_pairing(model0)
    n = P.rows
    rows = P.to_rows()
    j, k = next((j, k) for j in range(n) for k in range(n) if rows[j][k])
    e = [[Fraction(int(t == s)) for t in range(n)] for s in range(n)]
    zero = [Fraction(0)] * n
    X = (e[j], zero)
    Y = (zero, e[k])
    assert contact_form(P, X, Y) == rows[j][k] != 0
    assert contact_form(P, Y, X) == -rows[j][k]


def test_contact_gram_nondegenerate(model0):
    G = contact_gram(model0)
    assert G.shape == (56, 56) and rank(G) == 56
    assert G.transpose() == G.scale(-1)


# -- geodesic tangent spaces -----------------------------------------------------------------


def test_geodesic_dimension_standard():
    assert geodesic_tangent_space(standard_complex_structure(28)).dim == 28
    assert geodesic_tangent_space(standard_complex_structure(2)).dim == 2


def test_geodesic_dimension_random():
    for seed in range(10):
        J = random_complex_structure(28, seed)
        assert geodesic_tangent_space(J).dim == 28


def test_invalid_complex_structure():
    with pytest.raises(InvalidComplexStructure):
        validate_complex_structure(RationalMatrix.identity(4))
    with pytest.raises(InvalidComplexStructure):
        validate_complex_structure(RationalMatrix.from_rows([[0, -2], [Fraction(1, 2), 0]]))
    with pytest.raises(ValueError):
        standard_complex_structure(3)


def test_fermat_tangent_space_is_not_geodesic(report0):
    for seed in range(3):
        T = geodesic_tangent_space(random_complex_structure(28, seed))
        assert not T.contains_report(report0)


def test_geodesic_tangent_contains_its_own_elements():
    J = standard_complex_structure(4)
    T = geodesic_tangent_space(J)
    K = T.eigenbasis[0]
    # X = real part of Hom sending v1 -> e: contained only if e itself is real, which it is not
    real_col = RationalMatrix.from_columns([[x[0] for x in K]], 4)
    assert not T.contains([real_col])
    assert T.contains([])


def test_certificate_fermat(report0):
    cert = non_geodesy_certificate(report0, G228)
    assert cert.min_wv_dim == 26 and cert.threshold == 14
    assert cert.verdict and cert.span_full and cert.mode == "exact"


def test_certificate_negative_control():
    T = geodesic_tangent_space(random_complex_structure(28, 3))
    A, B = T.pencil_matrices()
    rep = horizontal_report(A, B)
    cert = non_geodesy_certificate(rep, G228)
    assert cert.min_wv_dim == 14 and not cert.verdict
    assert rep.rank_m == 28


def test_certificate_sampled_mode(model0):
    rep = period_differential(model0, mode="sampled", seed=7)
    cert = non_geodesy_certificate(rep, G228)
    assert cert.verdict and cert.mode == "sampled"
    assert rep.pencil.seed == 7


def test_certificate_requires_contact(report0):
    with pytest.raises(ValueError):
        non_geodesy_certificate(report0, domain_geometry(4, 44))


# -- search ---------------------------------------------------------------------------------


def test_weight_systems_reduced_and_sorted():
    ws = weight_systems((2, 2, 3, 6))
    assert (1, 1, 2, 5) in ws and (2, 2, 2, 2) not in ws and (2, 1, 1, 1) not in ws
    assert all(list(w) == sorted(w) for w in ws)


def test_search_small_range():
    rep = search((1, 1, 2, 5), 10, min_degree=10)
    row = rep.find((1, 1, 2, 5), 10)
    assert row.hodge == (2, 28, 2) and row.rank_m == 28 and row.maximal
    assert row.non_geodesic and row.pencil_min_rank == 26 and row.isotropy_ok
    assert rep.maximal_rows() == [row]


def test_search_quartic_and_missing_fermat():
    k3 = evaluate_candidate((1, 1, 1, 1), 4)
    assert k3.hodge[0] == 1 and k3.is_contact is False and k3.rank_m is None
    assert evaluate_candidate((1, 1, 2, 5), 4).status == NO_FERMAT
    assert evaluate_candidate((1, 1, 1, 1), 1).status == TRIVIAL_RING


def test_search_rows_sorted():
    rep = search((1, 1, 1, 2), 6, min_degree=4)
    keys = [(-(r.hodge[1] if r.hodge else -1), r.degree, r.weights) for r in rep.rows]
    assert keys == sorted(keys)


def test_search_quintic_row():
    row = evaluate_candidate((1, 1, 1, 1), 5)
    assert row.hodge == (4, 44, 4)
    assert (row.dim_domain, row.dim_horizontal) == (182, 176)


def test_search_parallel_matches_serial():
    a = search((1, 1, 2, 2), 6, workers=1)
    b = search((1, 1, 2, 2), 6, workers=2)
    assert a.rows == b.rows


def test_search_invalid_bounds():
    with pytest.raises(ValueError):
        search((1, 1, 2), 5)
    with pytest.raises(ValueError):
        search((1, 1, 2, 5), 5, min_degree=0)
