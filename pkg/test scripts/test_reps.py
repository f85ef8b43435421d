#!/usr/bin/env python3
"""Multiplicities, dimensions and tensor product decomposition."""
import itertools

import pytest

from lie.errors import GuardError, WeightError
from lie.reps import (
    character_product_oracle,
    decomposition_mass,
    dim,
    dominant_character,
    dominant_weights_below,
    freudenthal_multiplicity,
    rho_character_by_subsets,
    rho_multiplicity_oracle,
    tensor_decompose,
    tensor_multiplicity,
    weight_system,
)
from lie.rootsys import build_from_label, rho
from lie.settings import Guards
from lie.weyl import dual


def _small_dominant(sys, max_dim):
    """Dominant weights with coordinates up to 3 and dim V(lam) <= max_dim."""
    return [lam for lam in itertools.product(range(4), repeat=sys.rank) if dim(sys, lam) <= max_dim]


def test_weyl_dimensions(a2, b2, g2):
    assert dim(a2, (1, 0)) == 3
    assert dim(a2, (1, 1)) == 8
    assert dim(a2, (2, 2)) == 27
    assert dim(b2, (1, 0)) == 5
    assert dim(b2, (0, 1)) == 4
    assert dim(b2, rho(b2)) == 16
    assert dim(g2, (1, 0)) == 7
    assert dim(g2, (0, 1)) == 14
    assert dim(g2, rho(g2)) == 64


@pytest.mark.parametrize("label", ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"])
def test_dim_rho_is_power_of_two(label):
    sys = build_from_label(label)
    assert dim(sys, rho(sys)) == 2 ** len(sys.positive_roots)


def test_dim_rejects_bad_weights(a2):
    with pytest.raises(WeightError):
        dim(a2, (-1, 0))
    with pytest.raises(WeightError):
        dim(a2, (1, 0, 0))


def test_dominant_weights_below(a2, b2):
    assert dominant_weights_below(a2, (2, 2)) == [(2, 2), (3, 0), (0, 3), (1, 1), (0, 0)]
    assert set(dominant_weights_below(b2, (2, 2))) == {
        (2, 2), (3, 0), (0, 4), (1, 2), (2, 0), (0, 2), (1, 0), (0, 0)
    }


def test_freudenthal(a2, b2, g2):
    assert freudenthal_multiplicity(a2, (1, 1), (0, 0)) == 2
    assert freudenthal_multiplicity(a2, (1, 1), (-1, 2)) == 1
    assert freudenthal_multiplicity(a2, (1, 1), (1, 0)) == 0
    assert freudenthal_multiplicity(b2, rho(b2), (0, 1)) == 2
    assert freudenthal_multiplicity(b2, rho(b2), (0, -1)) == 2
    assert freudenthal_multiplicity(b2, rho(b2), (0, 0)) == 0
    assert freudenthal_multiplicity(g2, (0, 1), (0, 0)) == 2
    assert freudenthal_multiplicity(g2, (1, 0), (0, 0)) == 1


def test_dominant_character(a2):
    assert dominant_character(a2, (2, 2)) == {(2, 2): 1, (0, 3): 1, (3, 0): 1, (1, 1): 2, (0, 0): 3}


def test_weight_system_mass(b2):
    weights = weight_system(b2, rho(b2))
    assert len(weights) == 12
    assert sum(weights.values()) == 16


@pytest.mark.parametrize("label", [
    "A1", "A2", "A3", "B2", "C2", "B3", "C3", "G2",
    pytest.param("A4", marks=pytest.mark.slow),
    pytest.param("D4", marks=pytest.mark.slow),
])
def test_subset_oracle_matches_freudenthal(label):
    sys = build_from_label(label)
    by_subsets = rho_character_by_subsets(sys)
    assert by_subsets == weight_system(sys, rho(sys))
    for beta, m in by_subsets.items():
        assert rho_multiplicity_oracle(sys, beta) == m
        assert freudenthal_multiplicity(sys, rho(sys), beta) == m


def test_subset_oracle_guard(a2):
    with pytest.raises(GuardError):
        rho_multiplicity_oracle(a2, (0, 0), Guards(max_subset_roots=2))


def test_tensor_a1(a1):
    assert tensor_decompose(a1, (1,), (1,)) == {(0,): 1, (2,): 1}
    assert tensor_decompose(a1, (2,), (3,)) == {(1,): 1, (3,): 1, (5,): 1}


def test_tensor_a2(a2):
    assert tensor_decompose(a2, (1, 1), (1, 1)) == {(0, 0): 1, (0, 3): 1, (1, 1): 2, (2, 2): 1, (3, 0): 1}
    assert tensor_decompose(a2, (1, 0), (0, 1)) == {(0, 0): 1, (1, 1): 1}
    assert tensor_decompose(a2, (1, 0), (1, 0)) == {(0, 1): 1, (2, 0): 1}


def test_tensor_b2_rho_square(b2):
    assert tensor_decompose(b2, (1, 1), (1, 1)) == {
        (0, 0): 1, (1, 0): 1, (0, 2): 2, (2, 0): 1, (1, 2): 2, (0, 4): 1, (3, 0): 1, (2, 2): 1
    }


def test_tensor_is_symmetric(g2):
    assert tensor_decompose(g2, (1, 0), (0, 1)) == tensor_decompose(g2, (0, 1), (1, 0))


def test_tensor_duality(a2):
    weights = list(itertools.product(range(3), repeat=2))
    for lam, mu in itertools.product(weights, repeat=2):
        decomposition = tensor_decompose(a2, lam, mu)
        for nu, c in decomposition.items():
            assert tensor_decompose(a2, lam, dual(a2, nu)).get(dual(a2, mu), 0) == c
        reverse = tensor_decompose(a2, lam, dual(a2, mu))
        assert {dual(a2, nu): c for nu, c in reverse.items()} == tensor_decompose(a2, dual(a2, lam), mu)


@pytest.mark.parametrize("label", ["A2", "A3", "B2", "G2"])
def test_rho_square_is_self_dual(label):
    sys = build_from_label(label)
    decomposition = tensor_decompose(sys, rho(sys), rho(sys))
    assert {dual(sys, nu): c for nu, c in decomposition.items()} == decomposition


def test_tensor_multiplicity(a2, b2):
    assert tensor_multiplicity(a2, (1, 1), (1, 1), (1, 1)) == 2
    assert tensor_multiplicity(a2, (1, 1), (1, 1), (4, 0)) == 0
    assert tensor_multiplicity(b2, (1, 1), (1, 1), (2, 0)) == 1
    assert tensor_multiplicity(b2, (1, 1), (1, 1), (-1, 0)) == 0


def test_mass_identity(a2):
    decomposition = tensor_decompose(a2, (2, 1), (1, 1))
    assert decomposition_mass(a2, decomposition) == dim(a2, (2, 1)) * dim(a2, (1, 1))


def test_dimension_guard(a2):
    with pytest.raises(GuardError) as info:
        weight_system(a2, (2, 2), Guards(max_dim=10))
    assert info.value.guard == "max_dim"
    assert info.value.estimate == 27


def test_product_guard(a2):
    with pytest.raises(GuardError):
        character_product_oracle(a2, (2, 2), (2, 2), Guards(max_product_dim=100))


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "G2"])
def test_oracle_equivalence_fundamentals(label):
    sys = build_from_label(label)
    fundamentals = [tuple(1 if k == i else 0 for k in range(sys.rank)) for i in range(sys.rank)]
    for lam, mu in itertools.product(fundamentals, repeat=2):
        assert tensor_decompose(sys, lam, mu) == character_product_oracle(sys, lam, mu)


@pytest.mark.slow
@pytest.mark.parametrize("label", ["A1", "A2", "B2", "G2"])
def test_oracle_equivalence_small_dims(label):
    sys = build_from_label(label)
    weights = _small_dominant(sys, 60)
    for lam, mu in itertools.combinations_with_replacement(weights, 2):
        assert tensor_decompose(sys, lam, mu) == character_product_oracle(sys, lam, mu)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
