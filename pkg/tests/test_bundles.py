import pytest
from hypothesis import given, settings, strategies as st

from hyperhomology.bundles import (
    DEFAULT_EMBEDDING_DIMENSION,
    Euclidean,
    RealProjective,
    RealProjectiveTimesEuclidean,
    Sphere,
    Surface,
    a_coeff,
    embedding_dimension_bound,
    order_bound,
    rho,
    sheet_count_check,
)
from hyperhomology.hypergraphs import hyperdigraph, hypergraph, lift


def test_rho_values():
    assert rho(0) == 0
    assert rho(4) == 3  # {1, 2, 4}
    assert rho(10) == 6  # {1, 2, 4, 8, 9, 10}
    with pytest.raises(ValueError):
        rho(-1)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 200))
def test_rho_recurrence_and_monotonicity(k):
    assert rho(k + 8) == rho(k) + 4
    assert rho(k + 1) >= rho(k)


def test_a_coeff_values():
    assert a_coeff(2, 2) == 2
    assert a_coeff(3, 3) == 12
    assert a_coeff(4, 5) == 60
    assert a_coeff(1, 9) == 1
    with pytest.raises(ValueError):
        a_coeff(0, 1)


def test_a_coeff_divisibility_grid():
    for m in range(1, 13):
        for n in range(1, 13):
            assert a_coeff(m + 1, n) % a_coeff(m, n) == 0
            assert a_coeff(m, n + 1) % a_coeff(m, n) == 0


def test_order_bounds():
    assert order_bound(Surface(genus=2), 5).bound == 4
    assert order_bound(Surface(genus=1), 4).bound == 4
    assert order_bound(Euclidean(3), 3).bound == 12
    assert order_bound(Sphere(2), 2).bound == 4
    for n in range(1, 9):
        assert order_bound(Euclidean(1), n).bound == 1


def test_order_bound_projective_uses_supplied_embedding_dimension():
    explicit = order_bound(RealProjective(2, n_embed=4), 2)
    assert explicit.bound == (1 << (rho(3) - rho(2))) * a_coeff(3, 2)
    default = order_bound(RealProjective(2), 2)
    assert default.bound == explicit.bound  # table value for m=2 is 4
    assert DEFAULT_EMBEDDING_DIMENSION[2] == 4
    with pytest.raises(ValueError):
        RealProjective(3, n_embed=3)


def test_order_bound_product_variant():
    # m + k odd: exponent is exact
    clean = order_bound(RealProjectiveTimesEuclidean(2, 1, n_embed=4), 3)
    assert clean.bound == (1 << rho(4)) * 3 ** ((2 + 1 - 1) // 2)
    # m + k even: floor with a warning
    with pytest.warns(RuntimeWarning):
        floored = order_bound(RealProjectiveTimesEuclidean(2, 2, n_embed=4), 3)
    assert floored.bound == (1 << rho(5)) * 3 ** ((2 + 2 - 1) // 2)


def test_order_bound_validation():
    with pytest.raises(ValueError):
        Surface(genus=0)
    with pytest.raises(ValueError):
        order_bound(Euclidean(2), 0)


def test_embedding_dimension_bound():
    assert embedding_dimension_bound(0, 3) == 3
    assert embedding_dimension_bound(2, 2) == 4
    assert embedding_dimension_bound(5, 4) == 9
    with pytest.raises(ValueError):
        embedding_dimension_bound(-1, 2)
    with pytest.raises(ValueError):
        embedding_dimension_bound(2, 0)


def test_sheet_count_check():
    assert sheet_count_check(lift(hypergraph([[0, 1, 2]])))
    assert sheet_count_check(lift(hypergraph([[0, 1], [2, 3]])))
    with pytest.raises(ValueError):
        sheet_count_check(hyperdigraph([(0, 1)]))
