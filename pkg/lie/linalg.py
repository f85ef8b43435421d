"""Exact rational linear algebra used by the polytope checks."""
from fractions import Fraction
from typing import List, Optional, Sequence


def nonnegative_solution(A: Sequence[Sequence], b: Sequence) -> Optional[List[Fraction]]:
    """
    Find x >= 0 with A x = b over the rationals, or None.

    Phase-one simplex on a tableau of Fractions with Bland's rule, so it
    terminates without anti-cycling tricks.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    rows: List[List[Fraction]] = []
    for i in range(m):
        row = [Fraction(x) for x in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        rows.append(row + [Fraction(1 if k == i else 0) for k in range(m)] + [rhs])
    basis = [n + i for i in range(m)]
    width = n + m

    # phase-one objective: sum of the artificial variables
    objective = [sum((rows[i][j] for i in range(m)), Fraction(0)) if j < n else Fraction(0)
                 for j in range(width)]
    objective.append(sum((rows[i][-1] for i in range(m)), Fraction(0)))

    while True:
        entering = next((j for j in range(width) if objective[j] > 0), None)
        if entering is None:
            break
        leaving = None
        best = None
        for i in range(m):
            a = rows[i][entering]
            if a > 0:
                ratio = rows[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    best, leaving = ratio, i
        if leaving is None:
            # unbounded direction; the phase-one objective is bounded below, so this cannot happen
            break
        pivot = rows[leaving][entering]
        rows[leaving] = [x / pivot for x in rows[leaving]]
        for i in range(m):
            if i != leaving and rows[i][entering]:
                factor = rows[i][entering]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[leaving])]
        factor = objective[entering]
        objective = [x - factor * y for x, y in zip(objective, rows[leaving])]
        basis[leaving] = entering

    if objective[-1] != 0:
        return None
    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = rows[i][-1]
    return x
