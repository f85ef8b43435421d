"""
Weight systems, multiplicities, dimensions and tensor product decomposition.

Multiplicities come from the Freudenthal recursion evaluated on dominant
weights only; a tensor product V(lam) (x) V(mu) is decomposed with the signed
dominant-shift (Brauer-Klimyk / Steinberg) rule: every weight beta of V(lam)
contributes its multiplicity, with the sign of the reflection word, to the
irreducible whose highest weight plus rho is the dominant representative of
beta + mu + rho. Singular shifts cancel and are dropped.
"""
import functools
import logging
from collections import Counter
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .errors import GuardError, InternalCheckError, WeightError
from .rootsys import (
    RootSystem,
    bilinear,
    check_weight,
    height,
    pair_with_root,
    rho,
    weight_to_root_coords,
)
from .settings import Guards, resolve_guards
from .utils import Weight, add, is_dominant, is_integral, sub
from .weyl import orbit, to_dominant

logger = logging.getLogger(__name__)

WeightMultiset = Dict[Weight, int]
Decomposition = Dict[Weight, int]


def _require_dominant_integral(sys: RootSystem, lam: Sequence, name: str = "highest weight") -> Weight:
    lam = check_weight(sys, lam, name)
    if not is_integral(lam) or not is_dominant(lam):
        raise WeightError(f"{name} {lam} must be dominant integral")
    return lam


def _depth(sys: RootSystem, lam: Weight, mu: Weight) -> int:
    return int(sum(weight_to_root_coords(sys, sub(lam, mu))))


def dominant_weights_below(sys: RootSystem, lam: Sequence, guards: Optional[Guards] = None) -> List[Weight]:
    """
    Dominant mu with lam - mu a nonnegative integer combination of simple roots.

    Found by subtracting positive roots while staying dominant; returned
    top-down by depth, so lam comes first.
    """
    guards = resolve_guards(guards)
    lam = _require_dominant_integral(sys, lam)
    seen = {lam}
    frontier = [lam]
    while frontier:
        next_frontier = []
        for mu in frontier:
            for alpha in sys.positive_roots_weight:
                nu = tuple(m - a for m, a in zip(mu, alpha))
                if nu not in seen and all(x >= 0 for x in nu):
                    seen.add(nu)
                    next_frontier.append(nu)
        if len(seen) > guards.max_orbit:
            raise GuardError("max_orbit", guards.max_orbit, len(seen))
        frontier = next_frontier
    return sorted(seen, key=lambda mu: (_depth(sys, lam, mu), tuple(-x for x in mu)))


@functools.lru_cache(maxsize=128)
def _dominant_character(sys: RootSystem, lam: Weight, max_orbit: int) -> Dict[Weight, int]:
    dominant = dominant_weights_below(sys, lam, Guards(max_orbit=max_orbit))
    rho_w = rho(sys)
    top = add(lam, rho_w)
    top_norm = bilinear(sys, top, top)
    mults: Dict[Weight, int] = {lam: 1}
    for mu in dominant[1:]:
        total = 0
        for alpha, alpha_root in zip(sys.positive_roots_weight, sys.positive_roots):
            k = 1
            while True:
                shifted = tuple(m + k * a for m, a in zip(mu, alpha))
                m = mults.get(to_dominant(sys, shifted).representative)
                if not m:
                    break
                total += m * pair_with_root(sys, shifted, alpha_root)
                k += 1
        shifted_mu = add(mu, rho_w)
        value = Fraction(2 * total) / (top_norm - bilinear(sys, shifted_mu, shifted_mu))
        if value.denominator != 1 or value <= 0:
            logger.error(f"{sys.lie_type}: Freudenthal gave {value} at {mu} in V{lam}")
            raise InternalCheckError(f"Freudenthal recursion produced {value} for {mu} in V{lam}")
        mults[mu] = int(value)
    logger.info(f"{sys.lie_type}: V{lam} has {len(mults)} dominant weights")
    return mults


def dominant_character(sys: RootSystem, lam: Sequence, guards: Optional[Guards] = None) -> Dict[Weight, int]:
    """Multiplicities of the dominant weights of V(lam)."""
    guards = resolve_guards(guards)
    lam = _require_dominant_integral(sys, lam)
    return dict(_dominant_character(sys, lam, guards.max_orbit))


def freudenthal_multiplicity(sys: RootSystem, lam: Sequence, mu: Sequence, guards: Optional[Guards] = None) -> int:
    """dim of the mu weight space of V(lam)."""
    lam = _require_dominant_integral(sys, lam)
    mu = check_weight(sys, mu, "weight")
    if not is_integral(mu):
        raise WeightError(f"weight {mu} must be integral")
    representative = to_dominant(sys, mu).representative
    if not is_integral(weight_to_root_coords(sys, sub(lam, representative))):
        return 0
    return dominant_character(sys, lam, guards).get(representative, 0)


@functools.lru_cache(maxsize=16)
def _subset_sums(sys: RootSystem) -> Counter:
    sums = Counter({(0,) * sys.rank: 1})
    for root in sys.positive_roots:
        step = Counter(sums)
        for total, count in sums.items():
            step[tuple(t + c for t, c in zip(total, root))] += count
        sums = step
    return sums


def rho_character_by_subsets(sys: RootSystem, guards: Optional[Guards] = None) -> WeightMultiset:
    """Character of V(rho) from the product over positive roots of (1 + e^{-alpha})."""
    guards = resolve_guards(guards)
    if len(sys.positive_roots) > guards.max_subset_roots:
        raise GuardError("max_subset_roots", guards.max_subset_roots, len(sys.positive_roots))
    rho_w = rho(sys)
    character: WeightMultiset = {}
    for total, count in _subset_sums(sys).items():
        character[tuple(r - x for r, x in zip(rho_w, _root_sum_to_weight(sys, total)))] = count
    return character


def _root_sum_to_weight(sys: RootSystem, c: Sequence[int]) -> Weight:
    r = sys.rank
    return tuple(sum(sys.cartan[i][j] * c[j] for j in range(r)) for i in range(r))


def rho_multiplicity_oracle(sys: RootSystem, beta: Sequence, guards: Optional[Guards] = None) -> int:
    """Number of subsets of positive roots summing to rho - beta."""
    guards = resolve_guards(guards)
    beta = check_weight(sys, beta, "weight")
    if len(sys.positive_roots) > guards.max_subset_roots:
        raise GuardError("max_subset_roots", guards.max_subset_roots, len(sys.positive_roots))
    gap = weight_to_root_coords(sys, sub(rho(sys), beta))
    if not is_integral(gap) or any(c < 0 for c in gap):
        return 0
    return _subset_sums(sys).get(gap, 0)


def dim(sys: RootSystem, lam: Sequence) -> int:
    """Weyl dimension formula."""
    lam = _require_dominant_integral(sys, lam)
    rho_w = rho(sys)
    shifted = add(lam, rho_w)
    value = Fraction(1)
    for root in sys.positive_roots:
        value *= Fraction(pair_with_root(sys, shifted, root)) / pair_with_root(sys, rho_w, root)
    if value.denominator != 1:
        raise InternalCheckError(f"Weyl dimension of {lam} is not an integer: {value}")
    return int(value)


def _check_dim(sys: RootSystem, lam: Weight, guards: Guards) -> int:
    size = dim(sys, lam)
    if size > guards.max_dim:
        raise GuardError("max_dim", guards.max_dim, size)
    return size


def weight_system(sys: RootSystem, lam: Sequence, guards: Optional[Guards] = None) -> WeightMultiset:
    """All weights of V(lam) with multiplicities."""
    guards = resolve_guards(guards)
    lam = _require_dominant_integral(sys, lam)
    _check_dim(sys, lam, guards)
    weights: WeightMultiset = {}
    for mu, m in dominant_character(sys, lam, guards).items():
        if m <= 0:
            continue
        for nu in orbit(sys, mu, guards):
            weights[nu] = m
    return weights


def decomposition_mass(sys: RootSystem, decomposition: Decomposition) -> int:
    return sum(c * dim(sys, nu) for nu, c in decomposition.items())


def _iterated_factor(sys: RootSystem, lam: Weight, mu: Weight):
    """Put the smaller-dimensional factor first."""
    if dim(sys, mu) < dim(sys, lam):
        return mu, lam
    return lam, mu


def _shift_contributions(sys: RootSystem, lam: Weight, mu: Weight, guards: Guards):
    """Yield (highest weight, signed multiplicity) for every regular shift."""
    rho_w = rho(sys)
    offset = add(mu, rho_w)
    for beta0, m in dominant_character(sys, lam, guards).items():
        for beta in orbit(sys, beta0, guards):
            result = to_dominant(sys, add(beta, offset))
            if result.regular:
                yield sub(result.representative, rho_w), result.parity * m


def tensor_decompose(sys: RootSystem, lam: Sequence, mu: Sequence, guards: Optional[Guards] = None) -> Decomposition:
    """Multiplicities c_{lam mu}^nu of V(lam) (x) V(mu)."""
    guards = resolve_guards(guards)
    lam = _require_dominant_integral(sys, lam, "first factor")
    mu = _require_dominant_integral(sys, mu, "second factor")
    lam, mu = _iterated_factor(sys, lam, mu)
    _check_dim(sys, lam, guards)
    return dict(_tensor_decompose(sys, lam, mu, guards.max_orbit))


@functools.lru_cache(maxsize=32)
def _tensor_decompose(sys: RootSystem, lam: Weight, mu: Weight, max_orbit: int) -> Decomposition:
    buckets: Counter = Counter()
    for nu, signed in _shift_contributions(sys, lam, mu, Guards(max_orbit=max_orbit)):
        buckets[nu] += signed

    negative = {nu: c for nu, c in buckets.items() if c < 0}
    if negative:
        logger.error(f"{sys.lie_type}: negative multiplicities in V{lam} x V{mu}: {negative}")
        raise InternalCheckError(f"Negative final multiplicities in V{lam} x V{mu}: {negative}")
    decomposition = {nu: c for nu, c in sorted(buckets.items()) if c > 0}

    expected = dim(sys, lam) * dim(sys, mu)
    mass = decomposition_mass(sys, decomposition)
    if mass != expected:
        raise InternalCheckError(f"V{lam} x V{mu}: components have total dimension {mass}, expected {expected}")
    logger.info(f"{sys.lie_type}: V{lam} x V{mu} has {len(decomposition)} distinct components")
    return decomposition


def tensor_multiplicity(sys: RootSystem, lam: Sequence, mu: Sequence, nu: Sequence,
                        guards: Optional[Guards] = None) -> int:
    """c_{lam mu}^nu, accumulating only the shifts that land on nu."""
    guards = resolve_guards(guards)
    lam = _require_dominant_integral(sys, lam, "first factor")
    mu = _require_dominant_integral(sys, mu, "second factor")
    nu = check_weight(sys, nu, "target")
    if not is_integral(nu) or not is_dominant(nu):
        return 0
    lam, mu = _iterated_factor(sys, lam, mu)
    _check_dim(sys, lam, guards)
    total = sum(signed for target, signed in _shift_contributions(sys, lam, mu, guards) if target == nu)
    if total < 0:
        raise InternalCheckError(f"Negative multiplicity {total} for {nu} in V{lam} x V{mu}")
    return total


def character_product_oracle(sys: RootSystem, lam: Sequence, mu: Sequence,
                             guards: Optional[Guards] = None) -> Decomposition:
    """Decompose by multiplying characters and peeling off highest weights."""
    guards = resolve_guards(guards)
    lam = _require_dominant_integral(sys, lam, "first factor")
    mu = _require_dominant_integral(sys, mu, "second factor")
    product_dim = dim(sys, lam) * dim(sys, mu)
    if product_dim > guards.max_product_dim:
        raise GuardError("max_product_dim", guards.max_product_dim, product_dim)

    remaining: Counter = Counter()
    first, second = weight_system(sys, lam, guards), weight_system(sys, mu, guards)
    for b1, m1 in first.items():
        for b2, m2 in second.items():
            remaining[add(b1, b2)] += m1 * m2

    decomposition: Decomposition = {}
    while remaining:
        top = max(remaining, key=lambda w: (height(sys, w), w))
        count = remaining[top]
        if count <= 0 or not is_dominant(top):
            raise InternalCheckError(f"Character peeling reached {top} with coefficient {count}")
        decomposition[top] = count
        for w, m in weight_system(sys, top, guards).items():
            left = remaining[w] - count * m
            if left:
                remaining[w] = left
            else:
                del remaining[w]
    return dict(sorted(decomposition.items()))
