"""
Root-system data for the simple Lie algebras, in exact arithmetic.

Conventions are Bourbaki's: for B_r the last simple root is short, for C_r it
is long, G2 has alpha_1 short. The Cartan matrix stores
``cartan[i][j] = alpha_j(H_{alpha_i})``, so column j of the matrix is the
simple root alpha_j written in fundamental-weight coordinates. Indices in
this module are 0-based; the Weyl-group API uses the 1-based labels.
"""
import functools
import logging
import re
from fractions import Fraction
from typing import Dict, List, NamedTuple, Sequence, Tuple

import sympy

from .errors import LieTypeError, WeightError
from .utils import Rational, RootCoords, Weight, exact, is_integral, normalize

logger = logging.getLogger(__name__)

LIE_TYPE_PATTERN = re.compile(r"^[A-G][1-9][0-9]*$")

# |Phi^+| per series, used as a self-test of the root generation
POSITIVE_ROOT_COUNTS = {
    "A": lambda r: r * (r + 1) // 2,
    "B": lambda r: r * r,
    "C": lambda r: r * r,
    "D": lambda r: r * (r - 1),
    "E": lambda r: {6: 36, 7: 63, 8: 120}[r],
    "F": lambda r: 24,
    "G": lambda r: 6,
}


class LieType(NamedTuple):
    series: str
    rank: int

    def __str__(self):
        return f"{self.series}{self.rank}"


class RootSystem(NamedTuple):
    """Immutable Cartan data; safe to share between threads."""
    lie_type: LieType
    cartan: Tuple[Tuple[int, ...], ...]
    cartan_inverse: Tuple[Tuple[Fraction, ...], ...]
    positive_roots: Tuple[RootCoords, ...]
    symmetrizer: Tuple[Rational, ...]
    # derived data, filled in by build()
    positive_roots_weight: Tuple[Weight, ...]
    gram: Tuple[Tuple[Rational, ...], ...]
    height_coeffs: Tuple[Rational, ...]
    root_supports: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    def simple_root(self, k: int) -> Weight:
        """alpha_{k+1} in fundamental coordinates (column k of the Cartan matrix)."""
        return tuple(row[k] for row in self.cartan)


def is_admissible(series: str, rank: int) -> bool:
    if series == "A":
        return rank >= 1
    if series in ("B", "C"):
        return rank >= 2
    if series == "D":
        return rank >= 4
    if series == "E":
        return rank in (6, 7, 8)
    if series == "F":
        return rank == 4
    if series == "G":
        return rank == 2
    return False


def parse_lie_type(text: str) -> LieType:
    """Parse labels such as "B2" or "E6"."""
    label = (text or "").strip()
    if not LIE_TYPE_PATTERN.match(label):
        raise LieTypeError(f"Cannot parse Lie type {text!r}: expected a letter A-G followed by the rank, e.g. B2")
    lie_type = LieType(label[0], int(label[1:]))
    if not is_admissible(*lie_type):
        raise LieTypeError(
            f"{label} is not a simple type: need A r>=1, B/C r>=2, D r>=4, E r in 6..8, F4 or G2"
        )
    return lie_type


def _simple_root_form(series: str, r: int) -> List[List[Fraction]]:
    """Inner products (alpha_i, alpha_j) of the simple roots, long roots of norm 2."""
    form = [[Fraction(0)] * r for _ in range(r)]
    norms = [Fraction(2)] * r
    edges: List[Tuple[int, int, Fraction]] = []
    minus_one = Fraction(-1)

    if series == "A":
        edges = [(i, i + 1, minus_one) for i in range(r - 1)]
    elif series == "B":
        norms[r - 1] = Fraction(1)
        edges = [(i, i + 1, minus_one) for i in range(r - 1)]
    elif series == "C":
        norms = [Fraction(1)] * (r - 1) + [Fraction(2)]
        edges = [(i, i + 1, Fraction(-1, 2)) for i in range(r - 2)] + [(r - 2, r - 1, minus_one)]
    elif series == "D":
        edges = [(i, i + 1, minus_one) for i in range(r - 2)] + [(r - 3, r - 1, minus_one)]
    elif series == "E":
        # alpha_1 - alpha_3 - alpha_4 - ... - alpha_r, alpha_2 hangs off alpha_4
        edges = [(0, 2, minus_one), (1, 3, minus_one)] + [(i, i + 1, minus_one) for i in range(2, r - 1)]
    elif series == "F":
        norms = [Fraction(2), Fraction(2), Fraction(1), Fraction(1)]
        edges = [(0, 1, minus_one), (1, 2, minus_one), (2, 3, Fraction(-1, 2))]
    elif series == "G":
        norms = [Fraction(2, 3), Fraction(2)]
        edges = [(0, 1, minus_one)]

    for i in range(r):
        form[i][i] = norms[i]
    for i, j, value in edges:
        form[i][j] = form[j][i] = value
    return form


def _generate_positive_roots(cartan: Sequence[Sequence[int]]) -> Tuple[RootCoords, ...]:
    """Close the simple roots under root strings, one height level at a time."""
    r = len(cartan)
    units = [tuple(1 if k == i else 0 for k in range(r)) for i in range(r)]
    known = set(units)
    ordered: List[RootCoords] = list(units)
    level = list(units)
    while level:
        next_level: List[RootCoords] = []
        for beta in level:
            for i in range(r):
                pairing = sum(cartan[i][j] * beta[j] for j in range(r))
                p = 0
                down = tuple(b - (1 if k == i else 0) for k, b in enumerate(beta))
                while down in known:
                    p += 1
                    down = tuple(b - (1 if k == i else 0) for k, b in enumerate(down))
                if p - pairing > 0:
                    up = tuple(b + (1 if k == i else 0) for k, b in enumerate(beta))
                    if up not in known:
                        known.add(up)
                        next_level.append(up)
        ordered.extend(next_level)
        level = next_level
    return tuple(ordered)


@functools.lru_cache(maxsize=None)
def build(lie_type: LieType) -> RootSystem:
    """Build the root system of a simple type."""
    series, r = lie_type
    if not is_admissible(series, r):
        raise LieTypeError(f"{series}{r} is not an admissible simple type")

    form = _simple_root_form(series, r)
    cartan = tuple(
        tuple(int(2 * form[i][j] / form[i][i]) for j in range(r)) for i in range(r)
    )
    symmetrizer = tuple(exact(form[i][i] / 2) for i in range(r))

    inverse = sympy.Matrix(cartan).inv()
    cartan_inverse = tuple(
        tuple(Fraction(int(inverse[i, j].p), int(inverse[i, j].q)) for j in range(r)) for i in range(r)
    )

    positive_roots = _generate_positive_roots(cartan)
    expected = POSITIVE_ROOT_COUNTS[series](r)
    if len(positive_roots) != expected:
        logger.error(f"{lie_type}: generated {len(positive_roots)} positive roots, expected {expected}")

    positive_roots_weight = tuple(
        tuple(sum(cartan[i][j] * c[j] for j in range(r)) for i in range(r)) for c in positive_roots
    )
    gram = tuple(
        tuple(exact(symmetrizer[i] * cartan_inverse[i][k]) for k in range(r)) for i in range(r)
    )
    height_coeffs = tuple(exact(sum(cartan_inverse[j][k] for j in range(r))) for k in range(r))
    root_supports = tuple(
        sum(1 << k for k in range(r) if c[k]) for c in positive_roots
    )

    logger.debug(f"Built {lie_type}: {len(positive_roots)} positive roots")
    return RootSystem(
        lie_type=lie_type,
        cartan=cartan,
        cartan_inverse=cartan_inverse,
        positive_roots=positive_roots,
        symmetrizer=symmetrizer,
        positive_roots_weight=positive_roots_weight,
        gram=gram,
        height_coeffs=height_coeffs,
        root_supports=root_supports,
    )


def build_from_label(text: str) -> RootSystem:
    return build(parse_lie_type(text))


def check_weight(sys: RootSystem, w: Sequence, name: str = "weight") -> Weight:
    if len(w) != sys.rank:
        raise WeightError(f"{name} {tuple(w)} has {len(w)} coordinates, {sys.lie_type} needs {sys.rank}")
    return normalize(w)


def rho(sys: RootSystem) -> Weight:
    """Sum of the fundamental weights."""
    return (1,) * sys.rank


def weight_to_root_coords(sys: RootSystem, w: Sequence) -> RootCoords:
    w = check_weight(sys, w)
    r = sys.rank
    return tuple(exact(sum(sys.cartan_inverse[j][k] * w[k] for k in range(r))) for j in range(r))


def root_to_weight(sys: RootSystem, c: Sequence) -> Weight:
    r = sys.rank
    return tuple(exact(sum(sys.cartan[i][j] * c[j] for j in range(r))) for i in range(r))


def height(sys: RootSystem, w: Sequence) -> Rational:
    """Sum of the simple-root coordinates of w."""
    return exact(sum(h * x for h, x in zip(sys.height_coeffs, w)))


def bilinear(sys: RootSystem, x: Sequence, y: Sequence) -> Rational:
    """The W-invariant form, normalized so that long roots have (alpha, alpha) = 2."""
    r = sys.rank
    total = 0
    for i in range(r):
        if x[i]:
            total += x[i] * sum(sys.gram[i][k] * y[k] for k in range(r))
    return exact(total)


def pair_with_root(sys: RootSystem, x: Sequence, root: Sequence) -> Rational:
    """(x, alpha) for alpha given in simple-root coordinates."""
    return exact(sum(c * d * xi for c, d, xi in zip(root, sys.symmetrizer, x)))


def in_root_lattice(sys: RootSystem, w: Sequence) -> bool:
    if not is_integral(w):
        raise WeightError(f"in_root_lattice needs an integral weight, got {tuple(w)}")
    return is_integral(weight_to_root_coords(sys, w))


def algebra_dimension(sys: RootSystem) -> int:
    return sys.rank + 2 * len(sys.positive_roots)


def gram_matrix(sys: RootSystem) -> Tuple[Tuple[Rational, ...], ...]:
    """Gram matrix (omega_i, omega_j) of the fundamental weights."""
    return sys.gram


def leading_minors(sys: RootSystem) -> List[Fraction]:
    matrix = sympy.Matrix([[sympy.Rational(Fraction(g).numerator, Fraction(g).denominator) for g in row]
                           for row in sys.gram])
    minors = []
    for k in range(1, sys.rank + 1):
        det = matrix[:k, :k].det()
        minors.append(Fraction(int(det.p), int(det.q)))
    return minors


def is_positive_definite(sys: RootSystem) -> bool:
    return all(m > 0 for m in leading_minors(sys))


def check_invariants(sys: RootSystem) -> Dict[str, bool]:
    """Evaluate the structural invariants of a built root system."""
    r = sys.rank
    identity = all(
        sum(sys.cartan[i][k] * sys.cartan_inverse[k][j] for k in range(r)) == (1 if i == j else 0)
        for i in range(r) for j in range(r)
    )
    half_sum = tuple(Fraction(sum(c[j] for c in sys.positive_roots), 2) for j in range(r))
    symmetric = all(
        sys.symmetrizer[i] * sys.cartan[i][j] == sys.symmetrizer[j] * sys.cartan[j][i]
        for i in range(r) for j in range(r)
    )
    return {
        "positive_root_count": len(sys.positive_roots) == POSITIVE_ROOT_COUNTS[sys.lie_type.series](r),
        "cartan_inverse_positive": all(x > 0 for row in sys.cartan_inverse for x in row),
        "cartan_times_inverse_is_identity": identity,
        "rho_is_half_sum_of_positive_roots": root_to_weight(sys, half_sum) == rho(sys),
        "symmetrizer_symmetrizes": symmetric,
        "form_positive_definite": is_positive_definite(sys),
    }
