import random
from fractions import Fraction

import pytest

from oracles import fermat_hilbert_oracle, gauss_rank
from wphodge.exactla import RationalMatrix, rank
from wphodge.jacring import (
    DegreeOutOfBand,
    NoQuasiSmoothMember,
    NotQuasiSmooth,
    duality_check,
    jacobian_groebner,
    is_quasi_smooth,
    jacobian_ideal,
    jacobian_ring,
    multiplication_matrix,
    random_quasi_smooth,
    socle_bound,
)
from wphodge.polyalg import WeightedPolynomial, WeightSystem, parse_polynomial, random_homogeneous

WS = WeightSystem((1, 1, 2, 5), 10)
WS4 = WeightSystem((1, 1, 2, 5), 4)

FERMAT_HILBERT = [1, 2, 4, 6, 9, 12, 16, 20, 24, 26, 28, 28, 28, 26, 24, 20, 16, 12, 9, 6, 4, 2, 1]


def var(i, ws=WS):
    return WeightedPolynomial.variable(i, ws)


def test_jacobian_ideal_examples(f0):
    assert [g.render() for g in jacobian_ideal(f0)] == ["10*x1^9", "10*x2^9", "5*x3^4", "2*x4"]
    f = random_homogeneous(WS4, 4, random.Random(0))
    assert jacobian_ideal(f)[3].is_zero()
    xy = parse_polynomial("x1*x2", WS)
    assert [g.render() for g in jacobian_ideal(xy)] == ["x2", "x1", "0", "0"]


def test_quasi_smooth_examples(f0):
    assert is_quasi_smooth(f0)
    assert not is_quasi_smooth(parse_polynomial("x1^10", WS))
    for seed in range(5):
        f = random_homogeneous(WS4, 4, random.Random(seed))
        assert not is_quasi_smooth(f)


def test_socle_bound():
    assert socle_bound(WS) == 22
    assert socle_bound(WeightSystem((1, 1, 1, 1), 5)) == 12


def test_fermat_model(model0):
    assert model0.socle_degree == 22
    assert model0.socle_monomial == (8, 8, 3, 0)
    assert model0.socle_is_simple
    assert model0.hilbert_vector(22) == FERMAT_HILBERT
    assert all(model0.dim(k) == 0 for k in range(23, 45))
    assert model0.band >= 44


def test_fermat_hilbert_matches_oracle(model0):
    for k in range(model0.band + 1):
        assert model0.dim(k) == fermat_hilbert_oracle(k)


def test_dimension_outside_band(model0):
    assert model0.dim(-3) == 0
    with pytest.raises(DegreeOutOfBand):
        model0.dim(model0.band + 1)


def test_not_quasi_smooth_rejected():
    with pytest.raises(NotQuasiSmooth):
        jacobian_ring(parse_polynomial("x1^10 + x2^10", WS))


def test_duality_examples(model0):
    d1 = duality_check(model0, 1)
    assert d1.pairing_matrix.shape == (2, 2) and rank(d1.pairing_matrix) == 2 and d1.nondegenerate
    d0 = duality_check(model0, 0)
    assert d0.pairing_matrix.to_rows() == [[1]] and d0.nondegenerate
    d10 = duality_check(model0, 10)
    assert d10.pairing_matrix.shape == (28, 28) and gauss_rank(d10.pairing_matrix.to_rows()) == 28


def test_duality_at_every_degree(model0):
    N = model0.socle_degree
    for i in range(N + 1):
        assert model0.dim(i) == model0.dim(N - i)
        assert duality_check(model0, i).nondegenerate


def test_socle_normalization(model0):
    assert duality_check(model0, model0.socle_degree).pairing_matrix.to_rows() == [[1]]


def test_pairing_transpose_symmetry(random_model):
    model = random_model(1)
    N = model.socle_degree
    for i in (1, 4, 10):
        assert duality_check(model, i).pairing_matrix == duality_check(model, N - i).pairing_matrix.transpose()


def test_random_models_share_fermat_hilbert_function(random_model, model0):
    for seed in range(1, 6):
        model = random_model(seed)
        assert model.hilbert_vector(22) == model0.hilbert_vector(22)
        assert model.socle_degree == 22 and model.socle_is_simple


def test_random_model_duality(random_model):
    model = random_model(2)
    for i in (0, 1, 10, 11, 21, 22):
        assert duality_check(model, i).nondegenerate


def test_multiplication_examples(model0):
    A = multiplication_matrix(model0, var(0), 10)
    assert A.shape == (28, 28) and rank(A) == 26
    for k in (0, 5, 11):
        n = model0.dim(k)
        assert multiplication_matrix(model0, WeightedPolynomial.constant(1, WS), k) == RationalMatrix.identity(n)
    assert multiplication_matrix(model0, var(3), 10).is_zero()


def test_multiplication_rejects_zero_and_out_of_band(model0):
    with pytest.raises(ValueError):
        multiplication_matrix(model0, WeightedPolynomial.zero(WS), 3)
    with pytest.raises(DegreeOutOfBand):
        multiplication_matrix(model0, var(0), model0.band)


def test_multiplication_composes(random_model):
    model = random_model(1)
    rng = random.Random(4)
    for a, dg, dh in [(3, 2, 5), (8, 1, 1), (10, 3, 2)]:
        g = random_homogeneous(WS, dg, rng)
        h = random_homogeneous(WS, dh, rng)
        lhs = multiplication_matrix(model, g * h, a)
        rhs = multiplication_matrix(model, g, a + dh) @ multiplication_matrix(model, h, a)
        assert lhs == rhs


def test_coordinates_round_trip(random_model):
    model = random_model(3)
    vec = [Fraction(i - 3, 2) for i in range(model.dim(11))]
    assert model.coordinates(model.element(vec, 11), 11) == vec


def test_socle_coefficient(model0):
    assert model0.socle_coefficient(parse_polynomial("x1^8*x2^8*x3^3", WS)) == 1
    assert model0.socle_coefficient(parse_polynomial("x1^9*x2^7*x3^3", WS)) == 0


def test_random_quasi_smooth_examples(model0):
    f = random_quasi_smooth(WS, 1)
    assert is_quasi_smooth(f) and f.homogeneous_degree == 10
    with pytest.raises(NoQuasiSmoothMember):
        random_quasi_smooth(WS4, 0)
    quintic = random_quasi_smooth(WeightSystem((1, 1, 1, 1), 5), 1)
    model = jacobian_ring(quintic)
    assert model.dim(1) == 4 and model.socle_degree == 12


def test_random_quasi_smooth_is_seeded():
    assert random_quasi_smooth(WS, 5) == random_quasi_smooth(WS, 5)


def test_quasi_smooth_equivalence_with_band_vanishing(f0):
    """Quasi-smooth iff the ring vanishes above the socle bound."""
    assert is_quasi_smooth(f0)
    singular = parse_polynomial("x1^10 + x2^10 + x3^5", WS)
    assert not is_quasi_smooth(singular)
    # x4 is free modulo J: every x4^k survives
    gb = jacobian_groebner(singular)
    assert all(gb.standard_monomials(k) for k in range(23, 45))
