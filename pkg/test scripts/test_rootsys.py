#!/usr/bin/env python3
"""Root-system data: parsing, Cartan matrices, positive roots and the invariant form."""
from fractions import Fraction

import pytest

from lie.errors import LieTypeError, WeightError
from lie.rootsys import (
    LieType,
    algebra_dimension,
    bilinear,
    build_from_label,
    check_invariants,
    gram_matrix,
    height,
    in_root_lattice,
    is_positive_definite,
    pair_with_root,
    parse_lie_type,
    rho,
    root_to_weight,
    weight_to_root_coords,
)

ALL_SMALL_TYPES = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2"]

POSITIVE_ROOTS = {
    "A1": 1, "A2": 3, "A3": 6, "A4": 10, "A5": 15,
    "B2": 4, "B3": 9, "B4": 16, "C2": 4, "C3": 9, "C4": 16,
    "D4": 12, "D5": 20, "E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6,
}


def test_parse_lie_type():
    assert parse_lie_type("B2") == LieType("B", 2)
    assert str(parse_lie_type(" E6 ")) == "E6"
    assert parse_lie_type("A10").rank == 10


@pytest.mark.parametrize("label", ["", "b2", "H3", "A0", "B1", "C1", "D3", "E5", "E9", "F3", "G3", "A-1", "2B"])
def test_parse_lie_type_rejects(label):
    with pytest.raises(LieTypeError):
        parse_lie_type(label)


def test_lie_type_errors_are_value_errors():
    with pytest.raises(ValueError):
        build_from_label("G4")


def test_cartan_matrices():
    assert build_from_label("A2").cartan == ((2, -1), (-1, 2))
    assert build_from_label("B2").cartan == ((2, -1), (-2, 2))
    assert build_from_label("C2").cartan == ((2, -2), (-1, 2))
    assert build_from_label("G2").cartan == ((2, -3), (-1, 2))
    assert build_from_label("C3").cartan == ((2, -1, 0), (-1, 2, -2), (0, -1, 2))
    assert build_from_label("F4").cartan == ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -2, 2, -1), (0, 0, -1, 2))


def test_d4_and_e6_diagrams():
    d4 = build_from_label("D4")
    assert [row.count(-1) for row in d4.cartan] == [1, 3, 1, 1]
    e6 = build_from_label("E6")
    # alpha_4 is the branch node
    assert [row.count(-1) for row in e6.cartan] == [1, 1, 2, 3, 2, 1]


@pytest.mark.parametrize("label", ALL_SMALL_TYPES)
def test_positive_root_counts(label):
    sys = build_from_label(label)
    assert len(sys.positive_roots) == POSITIVE_ROOTS[label]
    assert all(all(c >= 0 for c in root) for root in sys.positive_roots)
    assert len(set(sys.positive_roots)) == len(sys.positive_roots)


@pytest.mark.parametrize("label", ALL_SMALL_TYPES)
def test_invariants_hold(label):
    sys = build_from_label(label)
    failed = [name for name, passed in check_invariants(sys).items() if not passed]
    assert failed == []


def test_g2_positive_roots(g2):
    assert set(g2.positive_roots) == {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}


def test_cartan_inverse_b2(b2):
    assert b2.cartan_inverse == ((1, Fraction(1, 2)), (1, 1))


def test_root_coordinates(a2, b2):
    assert weight_to_root_coords(a2, (1, 0)) == (Fraction(2, 3), Fraction(1, 3))
    assert weight_to_root_coords(b2, rho(b2)) == (Fraction(3, 2), 2)
    assert weight_to_root_coords(b2, (2, 2)) == (3, 4)
    assert root_to_weight(b2, (3, 4)) == (2, 2)
    assert height(b2, (2, 2)) == 7


def test_weight_length_checked(a2):
    with pytest.raises(WeightError):
        weight_to_root_coords(a2, (1, 2, 3))


def test_bilinear_form(a1, a2, b2, g2):
    assert bilinear(a1, rho(a1), rho(a1)) == Fraction(1, 2)
    assert bilinear(a2, rho(a2), rho(a2)) == 2
    # long roots have norm 2, short roots in B2 norm 1, in G2 norm 2/3
    assert bilinear(b2, b2.simple_root(0), b2.simple_root(0)) == 2
    assert bilinear(b2, b2.simple_root(1), b2.simple_root(1)) == 1
    assert bilinear(g2, g2.simple_root(0), g2.simple_root(0)) == Fraction(2, 3)
    assert bilinear(g2, g2.simple_root(1), g2.simple_root(1)) == 2


def test_form_is_symmetric(b2, g2):
    for sys in (b2, g2):
        gram = gram_matrix(sys)
        assert all(gram[i][j] == gram[j][i] for i in range(sys.rank) for j in range(sys.rank))
        assert is_positive_definite(sys)


def test_pair_with_root_matches_form(g2):
    x = (3, -1)
    for root, root_weight in zip(g2.positive_roots, g2.positive_roots_weight):
        assert pair_with_root(g2, x, root) == bilinear(g2, x, root_weight)


def test_root_lattice(a2, b2):
    assert in_root_lattice(a2, (1, 1))
    assert not in_root_lattice(a2, (1, 0))
    assert in_root_lattice(b2, (1, 0))
    assert not in_root_lattice(b2, rho(b2))
    with pytest.raises(WeightError):
        in_root_lattice(a2, (Fraction(1, 2), 0))


def test_algebra_dimension():
    assert algebra_dimension(build_from_label("A2")) == 8
    assert algebra_dimension(build_from_label("G2")) == 14
    assert algebra_dimension(build_from_label("E8")) == 248


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
