"""
The dominant weight polytope P(mu) = conv(W.mu) intersected with the dominant chamber.

For regular dominant integral mu the vertices are indexed by subsets J of
{1..r}: v_J is the average of the W_J-orbit of mu. For mu = 2 rho this is
2 rho minus the sum of the positive roots supported on J.
"""
import logging
import math
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence

from .errors import DomainError, GuardError, InternalCheckError, WeightError
from .linalg import nonnegative_solution
from .reps import dominant_weights_below, freudenthal_multiplicity
from .rootsys import RootSystem, check_weight, rho, weight_to_root_coords
from .settings import Guards, resolve_guards
from .utils import IndexSet, RootCoords, Weight, is_dominant, is_integral, is_regular_dominant, normalize, scale, sub, subsets
from .weyl import parabolic_orbit_sum, parabolic_order_formula, subsystem_root_sum

logger = logging.getLogger(__name__)

VertexSet = Dict[IndexSet, Weight]


class LatticePoint2Rho(NamedTuple):
    weight: Weight
    root_gap: RootCoords
    is_vertex: bool


class SaturationCertificate(NamedTuple):
    """N * lam = sum of coefficients[J] * v_J with N = sum of the coefficients."""
    N: int
    coefficients: Dict[IndexSet, int]


def _require_regular(sys: RootSystem, mu: Sequence) -> Weight:
    mu = check_weight(sys, mu, "polytope weight")
    if not is_integral(mu) or not is_regular_dominant(mu):
        raise DomainError(f"P(mu) needs a regular dominant integral mu, got {mu}")
    return mu


def _check_rank(sys: RootSystem, guards: Guards) -> None:
    if sys.rank > guards.max_rank:
        raise GuardError("max_rank", guards.max_rank, 1 << sys.rank,
                         f"{sys.lie_type}: 2^{sys.rank} vertices exceed the rank guard {guards.max_rank}")


def vertex_criterion(sys: RootSystem, mu: Sequence, lam: Sequence) -> bool:
    """True iff min(m_i, a_i) = 0 for every i and never m_i = a_i = 0."""
    mu = _require_regular(sys, mu)
    lam = check_weight(sys, lam, "candidate")
    if not is_dominant(lam):
        raise DomainError(f"{lam} is not dominant")
    gap = weight_to_root_coords(sys, sub(mu, lam))
    if any(a < 0 for a in gap):
        raise DomainError(f"{mu} - {lam} is not in the nonnegative root cone: {gap}")
    return all(min(m, a) == 0 for m, a in zip(lam, gap)) and not any(m == 0 and a == 0 for m, a in zip(lam, gap))


def vertices(sys: RootSystem, mu: Sequence, guards: Optional[Guards] = None) -> VertexSet:
    """Vertices of P(mu) as W_J-orbit averages."""
    guards = resolve_guards(guards)
    mu = _require_regular(sys, mu)
    _check_rank(sys, guards)
    result: VertexSet = {}
    for J in subsets(sys.rank):
        order = parabolic_order_formula(sys, J)
        vertex = normalize(Fraction(t, order) for t in parabolic_orbit_sum(sys, mu, J, guards))
        if not vertex_criterion(sys, mu, vertex):
            raise InternalCheckError(f"{sys.lie_type}: orbit average {vertex} for J={J} fails the vertex criterion")
        result[J] = vertex
    if len(set(result.values())) != len(result):
        raise InternalCheckError(f"{sys.lie_type}: vertices of P{mu} are not distinct")
    return result


def vertices_2rho(sys: RootSystem, guards: Optional[Guards] = None) -> VertexSet:
    """v_J = rho + w_J rho = 2 rho minus the roots of Phi_J^+."""
    guards = resolve_guards(guards)
    _check_rank(sys, guards)
    two_rho = scale(2, rho(sys))
    return {J: sub(two_rho, subsystem_root_sum(sys, J)) for J in subsets(sys.rank)}


def membership(sys: RootSystem, mu: Sequence, lam: Sequence) -> bool:
    """
    Cone test for lam in P(mu): lam dominant and mu - lam in the rational root cone.

    The extra condition that N*lam is a weight of V(N*mu) for some N is not
    tested; it holds automatically when lam is integral and congruent to mu
    modulo the root lattice.
    """
    mu = _require_regular(sys, mu)
    lam = check_weight(sys, lam, "candidate")
    if not is_dominant(lam):
        return False
    return all(a >= 0 for a in weight_to_root_coords(sys, sub(mu, lam)))


def lattice_points_2rho(sys: RootSystem, guards: Optional[Guards] = None) -> List[LatticePoint2Rho]:
    """Dominant integral lam with 2 rho - lam a nonnegative integer combination of simple roots."""
    guards = resolve_guards(guards)
    rho_w = rho(sys)
    two_rho = scale(2, rho_w)
    points = []
    for lam in dominant_weights_below(sys, two_rho, guards):
        if freudenthal_multiplicity(sys, rho_w, sub(lam, rho_w), guards) <= 0:
            logger.error(f"{sys.lie_type}: lattice point {lam} minus rho is not a weight of V(rho)")
            raise InternalCheckError(f"{lam} - rho is not a weight of V(rho)")
        points.append(LatticePoint2Rho(
            weight=lam,
            root_gap=weight_to_root_coords(sys, sub(two_rho, lam)),
            is_vertex=vertex_criterion(sys, two_rho, lam),
        ))
    logger.info(f"{sys.lie_type}: P(2rho) has {len(points)} lattice points")
    return points


def convex_combination(sys: RootSystem, lam: Sequence, vertex_set: VertexSet) -> Optional[Dict[IndexSet, Fraction]]:
    """Nonnegative rational weights b_J summing to 1 with sum b_J v_J = lam, or None."""
    lam = check_weight(sys, lam, "point")
    keys = list(vertex_set)
    rows = [[vertex_set[J][k] for J in keys] for k in range(sys.rank)]
    rows.append([1] * len(keys))
    solution = nonnegative_solution(rows, list(lam) + [1])
    if solution is None:
        return None
    return {J: b for J, b in zip(keys, solution) if b}


def saturation_certificate(sys: RootSystem, lam: Sequence, vertex_set: Optional[VertexSet] = None,
                           guards: Optional[Guards] = None) -> SaturationCertificate:
    """Write N * lam as a nonnegative integer combination of the vertices of P(2 rho)."""
    if vertex_set is None:
        vertex_set = vertices_2rho(sys, guards)
    weights = convex_combination(sys, lam, vertex_set)
    if weights is None:
        raise WeightError(f"{tuple(lam)} is not in P(2rho)")
    N = math.lcm(*(b.denominator for b in weights.values()))
    return SaturationCertificate(N=N, coefficients={J: int(b * N) for J, b in weights.items()})
