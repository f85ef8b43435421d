"""
Weyl group actions on weights.

Public indices are the 1-based Bourbaki labels. A WeylWord is a sequence of
reflections applied one after another, left to right: ``apply_word(sys, w,
(i, j))`` is ``s_j(s_i(w))``.
"""
import logging
from fractions import Fraction
from typing import Iterable, List, NamedTuple, Optional, Sequence, Set, Tuple

from .errors import GuardError, WeightError
from .rootsys import RootSystem, check_weight, rho, root_to_weight, weight_to_root_coords
from .settings import Guards, resolve_guards
from .utils import IndexSet, Weight, exact, mask_of, normalize

logger = logging.getLogger(__name__)

WeylWord = Tuple[int, ...]


class DominantResult(NamedTuple):
    representative: Weight
    parity: int
    regular: bool
    word: WeylWord


class Parabolic(NamedTuple):
    J: IndexSet
    order: int
    longest_word: WeylWord


def _reflect(sys: RootSystem, w: Sequence, k: int) -> Weight:
    """s_{alpha_{k+1}} for a 0-based k."""
    c = w[k]
    if not c:
        return tuple(w)
    column = [row[k] for row in sys.cartan]
    return tuple(x - c * a for x, a in zip(w, column))


def _check_index(sys: RootSystem, i: int) -> int:
    if not isinstance(i, int) or not 1 <= i <= sys.rank:
        raise WeightError(f"Simple reflection index {i!r} out of range 1..{sys.rank}")
    return i - 1


def check_index_set(sys: RootSystem, J: Iterable[int]) -> IndexSet:
    indices = tuple(sorted(set(J)))
    for i in indices:
        _check_index(sys, i)
    return indices


def reflect(sys: RootSystem, w: Sequence, i: int) -> Weight:
    """s_i(w) = w - w_i * alpha_i."""
    k = _check_index(sys, i)
    return normalize(_reflect(sys, check_weight(sys, w), k))


def apply_word(sys: RootSystem, w: Sequence, word: Sequence[int]) -> Weight:
    result = check_weight(sys, w)
    for i in word:
        result = _reflect(sys, result, _check_index(sys, i))
    return normalize(result)


def to_dominant(sys: RootSystem, w: Sequence) -> DominantResult:
    """Move w into the dominant chamber, reflecting at the smallest negative index."""
    if len(w) != sys.rank:
        raise WeightError(f"{sys.lie_type} weights have {sys.rank} coordinates, got {len(w)}")
    current = list(w)
    letters: List[int] = []
    cartan = sys.cartan
    r = len(current)
    while True:
        k = next((j for j in range(r) if current[j] < 0), None)
        if k is None:
            break
        c = current[k]
        for m in range(r):
            a = cartan[m][k]
            if a:
                current[m] -= c * a
        letters.append(k + 1)
    representative = tuple(current)
    return DominantResult(
        representative=representative,
        parity=-1 if len(letters) % 2 else 1,
        regular=all(x > 0 for x in representative),
        word=tuple(reversed(letters)),
    )


def dominant_representative(sys: RootSystem, w: Sequence) -> Weight:
    return to_dominant(sys, w).representative


def dual(sys: RootSystem, w: Sequence) -> Weight:
    """w* = -w_0(w), the dominant weight in the orbit of -w."""
    return dominant_representative(sys, tuple(-x for x in check_weight(sys, w)))


def _subsystem_roots(sys: RootSystem, J: IndexSet) -> List[int]:
    """Indices into sys.positive_roots of the roots supported on J."""
    mask = mask_of(J)
    return [n for n, support in enumerate(sys.root_supports) if support & ~mask == 0]


def parabolic_order_formula(sys: RootSystem, J: Iterable[int]) -> int:
    """|W_J| as the product of (ht + 1) / ht over the positive roots of Phi_J."""
    J = check_index_set(sys, J)
    order = Fraction(1)
    for n in _subsystem_roots(sys, J):
        ht = sum(sys.positive_roots[n])
        order *= Fraction(ht + 1, ht)
    return int(order)


def weyl_group_order(sys: RootSystem) -> int:
    return parabolic_order_formula(sys, range(1, sys.rank + 1))


def orbit_size(sys: RootSystem, w: Sequence) -> int:
    """|W.w| = |W| / |stabilizer| without enumerating the orbit."""
    dominant = dominant_representative(sys, check_weight(sys, w))
    stabilizer = [k + 1 for k, x in enumerate(dominant) if x == 0]
    return weyl_group_order(sys) // parabolic_order_formula(sys, stabilizer)


def _enumerate(sys: RootSystem, start: Weight, letters: Sequence[int], limit: int) -> Set[Weight]:
    seen = {start}
    frontier = [start]
    while frontier:
        next_frontier = []
        for v in frontier:
            for k in letters:
                if v[k]:
                    u = _reflect(sys, v, k)
                    if u not in seen:
                        seen.add(u)
                        next_frontier.append(u)
        if len(seen) > limit:
            raise GuardError("max_orbit", limit, len(seen))
        frontier = next_frontier
    return seen


def orbit(sys: RootSystem, w: Sequence, guards: Optional[Guards] = None) -> List[Weight]:
    """The W-orbit of w in a canonical (sorted) order."""
    guards = resolve_guards(guards)
    w = check_weight(sys, w)
    estimate = orbit_size(sys, w)
    if estimate > guards.max_orbit:
        raise GuardError("max_orbit", guards.max_orbit, estimate)
    return sorted(_enumerate(sys, w, range(sys.rank), guards.max_orbit))


def parabolic_orbit(sys: RootSystem, w: Sequence, J: Iterable[int], guards: Optional[Guards] = None) -> List[Weight]:
    """The W_J-orbit of w, sorted."""
    guards = resolve_guards(guards)
    J = check_index_set(sys, J)
    w = check_weight(sys, w)
    bound = parabolic_order_formula(sys, J)
    if bound > guards.max_orbit:
        raise GuardError("max_orbit", guards.max_orbit, bound)
    return sorted(_enumerate(sys, w, [i - 1 for i in J], guards.max_orbit))


def parabolic_orbit_sum(sys: RootSystem, mu: Sequence, J: Iterable[int], guards: Optional[Guards] = None) -> Weight:
    """Sum of w(mu) over w in W_J, for regular dominant mu (the orbit is then free)."""
    points = parabolic_orbit(sys, mu, J, guards)
    return normalize(sum(v[k] for v in points) for k in range(sys.rank))


def parabolic(sys: RootSystem, J: Iterable[int], guards: Optional[Guards] = None) -> Parabolic:
    """W_J with its order (orbit count of rho) and a reduced word for w_J."""
    J = check_index_set(sys, J)
    order = len(parabolic_orbit(sys, rho(sys), J, guards))

    current = rho(sys)
    letters: List[int] = []
    while True:
        i = next((i for i in J if current[i - 1] > 0), None)
        if i is None:
            break
        current = _reflect(sys, current, i - 1)
        letters.append(i)
    logger.debug(f"{sys.lie_type}: W_{J} has order {order}, longest word of length {len(letters)}")
    return Parabolic(J=J, order=order, longest_word=tuple(letters))


def subsystem_positive_roots(sys: RootSystem, J: Iterable[int]) -> List[Tuple[int, ...]]:
    """Phi_J^+ in simple-root coordinates."""
    J = check_index_set(sys, J)
    return [sys.positive_roots[n] for n in _subsystem_roots(sys, J)]


def subsystem_root_sum(sys: RootSystem, J: Iterable[int]) -> Weight:
    """Sum of Phi_J^+ in fundamental coordinates."""
    total = [0] * sys.rank
    for n in _subsystem_roots(sys, check_index_set(sys, J)):
        for k, x in enumerate(sys.positive_roots_weight[n]):
            total[k] += x
    return tuple(total)


def wJ_rho(sys: RootSystem, P: Parabolic) -> Weight:
    """w_J(rho) = rho minus the sum of Phi_J^+."""
    return tuple(1 - t for t in subsystem_root_sum(sys, P.J))


def inversion_count(sys: RootSystem, word: Sequence[int]) -> int:
    """Number of positive roots the element sends to negative roots."""
    count = 0
    for root in sys.positive_roots_weight:
        image = weight_to_root_coords(sys, apply_word(sys, root, word))
        if all(c <= 0 for c in image):
            count += 1
    return count


def root_image(sys: RootSystem, root: Sequence[int], word: Sequence[int]) -> Tuple:
    """Image of a root (simple-root coordinates) under a word, in simple-root coordinates."""
    return weight_to_root_coords(sys, apply_word(sys, root_to_weight(sys, root), word))
