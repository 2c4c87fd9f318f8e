"""Reference determinants and the identity that justifies condensation.

``cofactor_det`` is the deliberately-plain baseline: Laplace expansion along
the first row, no zero skipping, so its multiplication count follows
M(n) = n * (M(n-1) + 1) exactly and efficiency comparisons are well defined.
``bareiss_det`` is the second, structurally different oracle: one-step
fraction-free elimination with row pivoting, exact over any of the exact
rings.  ``jacobi_check`` verifies the 2x2-corner determinant identity
relating a matrix's entrywise adjugate to its interior, which is the reason
condensation's divisions come out exact.  ``count_ratio`` instruments both
determinant routes on seeded random integer matrices and reports their
operation-count ratio.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .condense import FallbackRequired, OpCount, condensation_det
from .matrix import Matrix, TooSmall, int_matrix


def cofactor_det(a: Matrix, ops: OpCount | None = None):
    """Determinant by first-row Laplace expansion (no zero skipping)."""
    if not a.is_square:
        raise ValueError("determinant needs a square matrix")
    return _cofactor(a, ops if ops is not None else OpCount())


def _cofactor(a, ops):
    n = a.n_rows
    if n == 1:
        return a[0, 0]
    total = None
    for j in range(n):
        term = a[0, j] * _cofactor(a.delete_row_col(0, j), ops)
        ops.mults += 1
        if total is None:
            total = term
        else:
            total = total + term if j % 2 == 0 else total - term
            ops.adds += 1
    return total


def bareiss_det(a: Matrix, ops: OpCount | None = None):
    """Determinant by fraction-free elimination with zero-pivot row swaps."""
    if not a.is_square:
        raise ValueError("determinant needs a square matrix")
    ops = ops if ops is not None else OpCount()
    n = a.n_rows
    rows = [list(r) for r in a.rows()]
    if n == 1:
        return rows[0][0]
    sign = 1
    prev = None
    for k in range(n - 1):
        if rows[k][k].is_zero():
            for i in range(k + 1, n):
                if not rows[i][k].is_zero():
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return a[0, 0].from_int(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                elt = rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j]
                ops.mults += 2
                ops.adds += 1
                if prev is not None:
                    elt = elt.exact_div(prev)
                    ops.divs += 1
                rows[i][j] = elt
        prev = rows[k][k]
    det = rows[n - 1][n - 1]
    return det if sign == 1 else -det


def jacobi_check(a: Matrix, m: int = 2) -> bool:
    """Check det[A'] = det(A)^(m-1) * det[A*] on the four-corner minor.

    A' is the entrywise adjugate restricted to rows/columns {1, n} and A*
    is the complementary minor, i.e. the interior of ``a``.  Only the m = 2
    case is supported; all determinants come from ``bareiss_det``.
    """
    if m != 2:
        raise ValueError("only the m = 2 corner form is supported")
    if not a.is_square or a.n_rows < 3:
        raise TooSmall("jacobi_check needs a square matrix, n >= 3")
    n = a.n_rows
    corner_sign = 1 if (1 + n) % 2 == 0 else -1
    a11 = bareiss_det(a.delete_row_col(0, 0))
    ann = bareiss_det(a.delete_row_col(n - 1, n - 1))
    a1n = bareiss_det(a.delete_row_col(0, n - 1))
    an1 = bareiss_det(a.delete_row_col(n - 1, 0))
    if corner_sign < 0:
        a1n = -a1n
        an1 = -an1
    lhs = a11 * ann - a1n * an1
    rhs = bareiss_det(a) * bareiss_det(a.interior())
    return lhs == rhs


@dataclass(frozen=True)
class RatioReport:
    """Mean operation counts of both determinant routes at one size."""

    n: int
    trials: int
    condensation_ops: float
    cofactor_ops: float
    ratio: float
    regenerated: int


def count_ratio(n: int, trials: int, seed: int) -> RatioReport:
    """Mean (mults + divs) of condensation vs. cofactor expansion.

    Draws ``trials`` integer matrices with entries uniform in [-9, 9] from a
    seeded generator.  Matrices that trigger any mitigation are regenerated
    (and counted) so the means describe the clean condensation path, whose
    costs are a function of n alone.
    """
    if n < 3:
        raise ValueError("count_ratio needs n >= 3")
    if trials < 1:
        raise ValueError("count_ratio needs trials >= 1")
    rng = random.Random(seed)
    cond_total = 0
    cof_total = 0
    regenerated = 0
    done = 0
    guard = 0
    while done < trials:
        guard += 1
        if guard > 1000 * trials:
            raise RuntimeError("could not draw enough mitigation-free matrices")
        m = int_matrix(
            [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        )
        try:
            _, trace = condensation_det(m)
        except FallbackRequired:
            regenerated += 1
            continue
        if trace.mitigation.operations or trace.restarts:
            regenerated += 1
            continue
        cond_total += trace.ops.muldiv
        cof_ops = OpCount()
        cofactor_det(m, cof_ops)
        cof_total += cof_ops.muldiv
        done += 1
    return RatioReport(
        n=n,
        trials=trials,
        condensation_ops=cond_total / trials,
        cofactor_ops=cof_total / trials,
        ratio=cond_total / cof_total,
        regenerated=regenerated,
    )
