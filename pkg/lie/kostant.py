"""
Verification engine for the components of V(rho) (x) V(rho).

Checks, for a given simple type:
- every lattice point lam of P(2 rho) occurs in V(rho) (x) V(rho), and nothing else does;
- the vertices v_J = rho + w_J rho occur exactly once;
- sum of c * dim V(lam) is (dim V(rho))^2 = 2^(2 |Phi^+|);
- the norm inequality on the weights of V(rho) and the emptiness argument behind the vertex multiplicities;
- V(d lam) occurs in V(d rho) (x) V(d rho) for a saturation factor d.

A failed mathematical check is reported, never raised: the point of running
this at ranks nobody has checked is to find counterexamples.
"""
import logging
import time
from typing import Dict, List, NamedTuple, Optional

from .errors import DomainError, GuardError
from .polytope import (
    convex_combination,
    lattice_points_2rho,
    saturation_certificate,
    vertices,
    vertices_2rho,
)
from .reps import dim, freudenthal_multiplicity, tensor_decompose, weight_system
from .rootsys import RootSystem, algebra_dimension, bilinear, check_invariants, rho
from .settings import Guards, resolve_guards
from .utils import IndexSet, RootCoords, Weight, add, elapsed_ms, format_weight, report_order, scale, sub, subsets
from .weyl import orbit, parabolic, to_dominant, weyl_group_order, wJ_rho

logger = logging.getLogger(__name__)

# Smallest known saturation factors for the classical series
SATURATION_FACTORS = {"A": 1, "B": 2, "C": 2, "D": 4}

CONVEXITY_MAX_RANK = 3


class Check(NamedTuple):
    name: str
    passed: bool
    detail: str = ""


class ConjecturePoint(NamedTuple):
    weight: Weight
    root_gap: RootCoords
    multiplicity: int
    is_vertex: bool


class ConjectureReport(NamedTuple):
    lie_type: str
    points: List[ConjecturePoint]
    all_positive: bool
    vertex_mults_all_one: bool
    dim_identity_holds: bool
    support_within_lattice: bool
    multiplicity_bound_holds: bool
    mult_one_iff_vertex: bool
    runtime_ms: int


class SaturationPoint(NamedTuple):
    weight: Weight
    multiplicity: int
    # N with N * weight a nonnegative integer combination of the vertices of P(2 rho)
    certificate_n: int


class SaturationReport(NamedTuple):
    lie_type: str
    d: int
    points: List[SaturationPoint]
    all_positive: bool
    runtime_ms: int


class VerifyAllReport(NamedTuple):
    lie_type: str
    checks: List[Check]
    conjecture: ConjectureReport
    runtime_ms: int


def require_desk_scale(sys: RootSystem, guards: Optional[Guards] = None) -> None:
    """Refuse E types and, unless allowed, anything past the positive-root ceiling."""
    guards = resolve_guards(guards)
    count = len(sys.positive_roots)
    if sys.lie_type.series == "E":
        raise GuardError("max_positive_roots", guards.max_positive_roots, count,
                         f"{sys.lie_type}: V(rho) has dimension 2^{count}; E types are out of scope")
    if count > guards.max_positive_roots and not guards.allow_large:
        raise GuardError("max_positive_roots", guards.max_positive_roots, count,
                         f"{sys.lie_type} has {count} positive roots (dim V(rho) = 2^{count}); "
                         f"pass --allow-large to run it")


def _rho_square(sys: RootSystem, guards: Guards) -> Dict[Weight, int]:
    rho_w = rho(sys)
    return tensor_decompose(sys, rho_w, rho_w, guards)


def verify_vertices(sys: RootSystem, guards: Optional[Guards] = None) -> Dict[IndexSet, int]:
    """c_{rho rho}^{v_J} for every J; the check passes when all are 1."""
    guards = resolve_guards(guards)
    decomposition = _rho_square(sys, guards)
    return {J: decomposition.get(v, 0) for J, v in vertices_2rho(sys, guards).items()}


def verify_dimension_identity(sys: RootSystem, guards: Optional[Guards] = None) -> bool:
    """sum c dim V(lam) = (dim V(rho))^2 = 2^(2|Phi^+|), and 2^dim g = 2^r * 2^(2|Phi^+|)."""
    guards = resolve_guards(guards)
    n = len(sys.positive_roots)
    decomposition = _rho_square(sys, guards)
    total = sum(c * dim(sys, lam) for lam, c in decomposition.items())
    rho_dim = dim(sys, rho(sys))
    holds = (
        rho_dim == 2 ** n
        and total == rho_dim ** 2 == 2 ** (2 * n)
        and 2 ** algebra_dimension(sys) == 2 ** sys.rank * 2 ** (2 * n)
    )
    if not holds:
        logger.warning(f"{sys.lie_type}: dimension identity fails, total {total}, dim V(rho) = {rho_dim}")
    return holds


def verify_conjecture(sys: RootSystem, guards: Optional[Guards] = None) -> ConjectureReport:
    """Join the decomposition of V(rho) (x) V(rho) against the lattice points of P(2 rho)."""
    guards = resolve_guards(guards)
    require_desk_scale(sys, guards)
    started = time.perf_counter()
    rho_w = rho(sys)

    decomposition = _rho_square(sys, guards)
    points = [
        ConjecturePoint(
            weight=p.weight,
            root_gap=p.root_gap,
            multiplicity=decomposition.get(p.weight, 0),
            is_vertex=p.is_vertex,
        )
        for p in lattice_points_2rho(sys, guards)
    ]
    missing = [p.weight for p in points if p.multiplicity < 1]
    for weight in missing:
        logger.warning(f"{sys.lie_type}: lattice point {format_weight(weight)} does not occur in V(rho) x V(rho)")

    lattice = {p.weight for p in points}
    outside = [lam for lam in decomposition if lam not in lattice]
    bound_holds = all(
        p.multiplicity <= freudenthal_multiplicity(sys, rho_w, sub(p.weight, rho_w), guards) for p in points
    )

    return ConjectureReport(
        lie_type=str(sys.lie_type),
        points=points,
        all_positive=not missing,
        vertex_mults_all_one=all(p.multiplicity == 1 for p in points if p.is_vertex),
        dim_identity_holds=verify_dimension_identity(sys, guards),
        support_within_lattice=not outside,
        multiplicity_bound_holds=bound_holds,
        mult_one_iff_vertex=all((p.multiplicity == 1) == p.is_vertex for p in points),
        runtime_ms=elapsed_ms(started),
    )


def conjecture_checks(sys: RootSystem, report: ConjectureReport) -> List[Check]:
    zero = [format_weight(p.weight) for p in report.points if p.multiplicity < 1]
    vertex_count = sum(1 for p in report.points if p.is_vertex)
    checks = [
        Check("conjecture_all_positive", report.all_positive,
              f"{len(report.points)} lattice points" + (f"; missing {', '.join(zero)}" if zero else "")),
        Check("vertex_mults_all_one", report.vertex_mults_all_one and vertex_count == 2 ** sys.rank,
              f"{vertex_count} vertices"),
        Check("support_within_lattice", report.support_within_lattice,
              "every component of V(rho) x V(rho) is a lattice point of P(2rho)"),
        Check("multiplicity_bound", report.multiplicity_bound_holds,
              "c^lam <= m_rho(lam - rho) at every lattice point"),
    ]
    if sys.lie_type.series == "A":
        checks.append(Check("mult_one_iff_vertex", report.mult_one_iff_vertex,
                            "type A: multiplicity one exactly at the vertices"))
    return checks


def verify_norm_inequality(sys: RootSystem, guards: Optional[Guards] = None) -> bool:
    """(mu, mu) <= (rho, rho) on the weights of V(rho), with equality exactly on W.rho."""
    guards = resolve_guards(guards)
    rho_w = rho(sys)
    top = bilinear(sys, rho_w, rho_w)
    for mu in weight_system(sys, rho_w, guards):
        norm = bilinear(sys, mu, mu)
        on_orbit = to_dominant(sys, mu).representative == rho_w
        if norm > top or (norm == top) != on_orbit:
            logger.warning(f"{sys.lie_type}: norm inequality fails at {format_weight(mu)}: {norm} vs {top}")
            return False
    return True


def _check_weyl_order(sys: RootSystem, guards: Guards) -> None:
    order = weyl_group_order(sys)
    if order > guards.max_weyl_order:
        raise GuardError("max_weyl_order", guards.max_weyl_order, order)


def verify_emptiness(sys: RootSystem, J, guards: Optional[Guards] = None) -> bool:
    """
    For every w != 1, w_J rho + 2 rho - w(2 rho) is not a weight of V(rho).

    W is walked through the orbit of the regular weight 2 rho; each candidate
    must have multiplicity zero and norm strictly above (rho, rho).
    """
    guards = resolve_guards(guards)
    _check_weyl_order(sys, guards)
    rho_w = rho(sys)
    two_rho = scale(2, rho_w)
    top = bilinear(sys, rho_w, rho_w)
    base = add(wJ_rho(sys, parabolic(sys, J, guards)), two_rho)
    for image in orbit(sys, two_rho, guards):
        if image == two_rho:
            continue
        candidate = sub(base, image)
        if freudenthal_multiplicity(sys, rho_w, candidate, guards) != 0 or bilinear(sys, candidate, candidate) <= top:
            logger.warning(f"{sys.lie_type}: J={J}, candidate {format_weight(candidate)} is a weight of V(rho)")
            return False
    return True


def verify_emptiness_all(sys: RootSystem, guards: Optional[Guards] = None) -> bool:
    guards = resolve_guards(guards)
    _check_weyl_order(sys, guards)
    return all(verify_emptiness(sys, J, guards) for J in subsets(sys.rank))


def default_saturation_factor(sys: RootSystem) -> int:
    try:
        return SATURATION_FACTORS[sys.lie_type.series]
    except KeyError:
        raise DomainError(f"No default saturation factor for {sys.lie_type}; pass d explicitly")


def verify_saturation(sys: RootSystem, d: Optional[int] = None, guards: Optional[Guards] = None) -> SaturationReport:
    """c_{d rho, d rho}^{d lam} for every lattice point lam of P(2 rho), with its vertex certificate N."""
    guards = resolve_guards(guards)
    if d is None:
        d = default_saturation_factor(sys)
    if not isinstance(d, int) or d < 1:
        raise DomainError(f"Saturation factor must be a positive integer, got {d!r}")
    started = time.perf_counter()
    d_rho = scale(d, rho(sys))
    decomposition = tensor_decompose(sys, d_rho, d_rho, guards)
    vertex_set = vertices_2rho(sys, guards)
    points = [
        SaturationPoint(
            weight=p.weight,
            multiplicity=decomposition.get(scale(d, p.weight), 0),
            certificate_n=saturation_certificate(sys, p.weight, vertex_set).N,
        )
        for p in lattice_points_2rho(sys, guards)
    ]
    all_positive = all(p.multiplicity >= 1 for p in points)
    if not all_positive:
        logger.warning(f"{sys.lie_type}: saturation with d={d} fails at "
                       f"{[format_weight(p.weight) for p in points if p.multiplicity < 1]}")
    return SaturationReport(
        lie_type=str(sys.lie_type),
        d=d,
        points=points,
        all_positive=all_positive,
        runtime_ms=elapsed_ms(started),
    )


def verify_semigroup(sys: RootSystem, guards: Optional[Guards] = None) -> bool:
    """c_{rho rho}^lam >= 1 implies c_{2rho, 2rho}^{2 lam} >= 1."""
    guards = resolve_guards(guards)
    rho_w = rho(sys)
    first = _rho_square(sys, guards)
    doubled = tensor_decompose(sys, scale(2, rho_w), scale(2, rho_w), guards)
    return all(doubled.get(scale(2, lam), 0) >= 1 for lam, c in first.items() if c >= 1)


def verify_root_system(sys: RootSystem) -> List[Check]:
    return [Check(f"rootsys_{name}", passed) for name, passed in check_invariants(sys).items()]


def verify_vertex_geometry(sys: RootSystem, guards: Optional[Guards] = None) -> List[Check]:
    """Orbit averages vs closed form, coordinate support, the vertex criterion and convexity."""
    guards = resolve_guards(guards)
    two_rho = scale(2, rho(sys))
    closed = vertices_2rho(sys, guards)
    averaged = vertices(sys, two_rho, guards)
    distinct = len(set(closed.values())) == len(closed) == 2 ** sys.rank
    mismatched = [J for J in report_order(closed) if closed[J] != averaged[J]]
    support = all(
        all((v[k] == 0) == (k + 1 in J) for k in range(sys.rank)) for J, v in closed.items()
    )
    points = lattice_points_2rho(sys, guards)
    vertex_weights = set(closed.values())
    criterion = all(p.is_vertex == (p.weight in vertex_weights) for p in points)

    checks = [
        Check("vertex_count", distinct, f"{len(closed)} distinct vertices"),
        Check("orbit_average_matches_closed_form", not mismatched,
              "" if not mismatched else f"differs at J={mismatched}"),
        Check("vertex_support", support, "v_J has zero coordinates exactly on J"),
        Check("vertex_criterion_both_directions", criterion, f"{len(points)} lattice points"),
    ]
    if sys.rank <= CONVEXITY_MAX_RANK:
        outside = [format_weight(p.weight) for p in points if convex_combination(sys, p.weight, closed) is None]
        checks.append(Check("lattice_points_in_vertex_hull", not outside,
                            "" if not outside else f"no convex combination for {', '.join(outside)}"))
    return checks


def verify_all(sys: RootSystem, guards: Optional[Guards] = None) -> VerifyAllReport:
    """Every check in a fixed order; guard errors propagate, failed checks are collected."""
    guards = resolve_guards(guards)
    require_desk_scale(sys, guards)
    started = time.perf_counter()

    checks = verify_root_system(sys)
    checks.extend(verify_vertex_geometry(sys, guards))
    checks.append(Check("norm_inequality", verify_norm_inequality(sys, guards),
                        "(mu,mu) <= (rho,rho) on the weights of V(rho)"))
    checks.append(Check("emptiness", verify_emptiness_all(sys, guards),
                        f"all {2 ** sys.rank} subsets J, |W| = {weyl_group_order(sys)}"))
    conjecture = verify_conjecture(sys, guards)
    checks.extend(conjecture_checks(sys, conjecture))
    checks.append(Check("dimension_identity", conjecture.dim_identity_holds,
                        f"sum c dim = 2^{2 * len(sys.positive_roots)}"))

    failed = [c.name for c in checks if not c.passed]
    if failed:
        logger.warning(f"{sys.lie_type}: failed checks: {', '.join(failed)}")
    return VerifyAllReport(
        lie_type=str(sys.lie_type),
        checks=checks,
        conjecture=conjecture,
        runtime_ms=elapsed_ms(started),
    )
