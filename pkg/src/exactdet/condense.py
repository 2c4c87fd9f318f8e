"""The condensation determinant algorithm, with interior-zero mitigation.

One round of condensation replaces a k x k matrix by the (k-1) x (k-1)
matrix of its 2x2 consecutive-minor determinants; from the second round on,
each entry is additionally divided by the matching entry of the interior of
the stage two rounds back.  Iterating down to 1x1 yields the determinant.
Every division is exact as long as no interior entry along the way is zero:
the (i, j) entry of stage k is itself the determinant of the (k+1) x (k+1)
connected minor of stage 0 anchored at (i, j), so over the integers every
intermediate stays an integer.

Interior zeros are the method's one failure mode.  ``mitigate_interior_zeros``
clears them with determinant-preserving elementary operations before the run
starts; if a zero only surfaces in a later stage, ``condensation_det``
restarts from the original matrix under the next untried transform.  Swap
parity is tracked in a ``MitigationLog`` whose sign multiplies the final
result.

Mitigation plans are tried in a fixed order so results are reproducible:

1. identity (no interior zeros to begin with),
2. cyclic row rotations by 1 .. n-1 positions (each recorded as adjacent
   swaps, the elementary form replay needs),
3. cyclic column rotations,
4. combined row and column rotations,
5. additive repair: for each surviving interior zero, add a row (or failing
   that, a column) holding a nonzero entry at the offending position, with
   the scale escalating 1, 2, 3, ... on repeated failure at one position.

A matrix that defeats all of this (e.g. the zero matrix) raises
``UnremovableZero``; ``condensation_det`` wraps budget exhaustion in
``FallbackRequired`` so callers can switch to an elimination oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrix import Matrix, TooSmall
from .ring import ApproxReal, DivisionByZero, InexactDivision, format_scalar


class UnremovableZero(ValueError):
    """No mitigation plan in the strategy budget clears the interior."""


class FallbackRequired(RuntimeError):
    """Condensation gave up; use an oracle determinant instead."""


class OpCount:
    """Running tally of ring operations consumed by a determinant run."""

    __slots__ = ("mults", "divs", "adds")

    def __init__(self, mults: int = 0, divs: int = 0, adds: int = 0):
        self.mults = mults
        self.divs = divs
        self.adds = adds

    @property
    def muldiv(self) -> int:
        return self.mults + self.divs

    def merge(self, other: "OpCount") -> None:
        self.mults += other.mults
        self.divs += other.divs
        self.adds += other.adds

    def __eq__(self, other):
        return (
            isinstance(other, OpCount)
            and (self.mults, self.divs, self.adds)
            == (other.mults, other.divs, other.adds)
        )

    def __repr__(self):
        return f"OpCount(mults={self.mults}, divs={self.divs}, adds={self.adds})"


class MitigationLog:
    """Elementary operations applied before a run, plus their sign factor.

    Operations are tuples: ``("swap_rows", i, j)``, ``("swap_cols", i, j)``,
    ``("add_scaled_row", src, dst, c)``, ``("add_scaled_col", src, dst, c)``.
    ``sign`` is (-1)**(number of swaps); additions never change it.
    """

    __slots__ = ("operations", "plan")

    def __init__(self, operations=(), plan=None):
        self.operations = tuple(operations)
        self.plan = plan

    @property
    def sign(self) -> int:
        swaps = sum(1 for op in self.operations if op[0].startswith("swap"))
        return -1 if swaps % 2 else 1

    def __repr__(self):
        return f"MitigationLog({list(self.operations)!r}, plan={self.plan!r})"


@dataclass(frozen=True)
class MitigationPolicy:
    """Knobs for the restart loop; restart_budget None means 2n."""

    restart_budget: int | None = None


@dataclass(frozen=True)
class CondensationTrace:
    """Everything a condensation run produced.

    ``stages[k]`` is the (n-k) x (n-k) stage matrix; ``starred[k-2]`` is the
    pre-division matrix belonging to ``stages[k]`` for k >= 2.  ``restarts``
    lists (stage, position) pairs for every zero divisor that forced a
    restart; ``division_warning`` is set when a real-arithmetic division used
    a divisor within 1000x of the zero tolerance.
    """

    stages: tuple
    starred: tuple
    mitigation: MitigationLog
    ops: OpCount
    restarts: tuple = ()
    division_warning: bool = False


def condense_step(current: Matrix, divisor_interior, ops: OpCount) -> Matrix:
    """One condensation round: 2x2 minor determinants, divided elementwise.

    ``divisor_interior`` is None exactly on the first round.  Zero or inexact
    divisions are re-raised with the offending (i, j) position attached, which
    is what the restart logic keys on.
    """
    stage, _ = _step_with_star(current, divisor_interior, ops)
    return stage


def _step_with_star(current, divisor_interior, ops, warn=None):
    if not current.is_square or current.n_rows < 2:
        raise ValueError("condense_step needs a square matrix, n >= 2")
    k = current.n_rows
    if divisor_interior is not None and (
        divisor_interior.n_rows != k - 1 or divisor_interior.n_cols != k - 1
    ):
        raise ValueError("divisor interior must be (k-1) x (k-1)")
    star_rows = []
    out_rows = []
    for i in range(k - 1):
        star_row = []
        out_row = []
        for j in range(k - 1):
            det2 = current[i, j] * current[i + 1, j + 1] - current[i, j + 1] * current[i + 1, j]
            ops.mults += 2
            ops.adds += 1
            star_row.append(det2)
            if divisor_interior is None:
                out_row.append(det2)
                continue
            d = divisor_interior[i, j]
            if warn is not None and isinstance(d, ApproxReal):
                if abs(d.value) < 1e3 * d.tolerance:
                    warn[0] = True
            try:
                out_row.append(det2.exact_div(d))
            except DivisionByZero as e:
                raise DivisionByZero(str(e), position=(i, j)) from e
            except InexactDivision as e:
                raise InexactDivision(str(e), position=(i, j)) from e
            ops.divs += 1
        star_rows.append(star_row)
        out_rows.append(out_row)
    stage = Matrix(out_rows)
    star = Matrix(star_rows) if divisor_interior is not None else None
    return stage, star


def _interior_clean(m: Matrix) -> bool:
    inner = m.interior()
    return all(
        not inner[i, j].is_zero()
        for i in range(inner.n_rows)
        for j in range(inner.n_cols)
    )


def _apply_rotation(m: Matrix, row_shift: int, col_shift: int):
    """Rotate rows up / columns left cyclically, as logged adjacent swaps."""
    ops = []
    cur = m
    for _ in range(row_shift):
        for i in range(cur.n_rows - 1):
            cur = cur.swap_rows(i, i + 1)
            ops.append(("swap_rows", i, i + 1))
    for _ in range(col_shift):
        for j in range(cur.n_cols - 1):
            cur = cur.swap_cols(j, j + 1)
            ops.append(("swap_cols", j, j + 1))
    return cur, ops


def _additive_repair(m: Matrix, salt: int):
    """Clear interior zeros by adding scaled rows/columns.

    ``salt`` shifts the starting scale so successive restart rounds produce
    distinct transforms.  Raises UnremovableZero when a zero has no nonzero
    source in its row or column, or when the repair budget runs out.
    """
    n = m.n_rows
    ops = []
    attempts = {}
    for _ in range(4 * n * n):
        zero_at = None
        for i in range(1, n - 1):
            for j in range(1, n - 1):
                if m[i, j].is_zero():
                    zero_at = (i, j)
                    break
            if zero_at:
                break
        if zero_at is None:
            return m, ops
        i, j = zero_at
        attempts[zero_at] = attempts.get(zero_at, 0) + 1
        c = m[0, 0].from_int(salt + attempts[zero_at])
        src = next(
            (s for s in range(n) if s != i and not m[s, j].is_zero()), None
        )
        if src is not None:
            m = m.add_scaled_row(src, i, c)
            ops.append(("add_scaled_row", src, i, c))
            continue
        src = next(
            (t for t in range(n) if t != j and not m[i, t].is_zero()), None
        )
        if src is not None:
            m = m.add_scaled_col(src, j, c)
            ops.append(("add_scaled_col", src, j, c))
            continue
        raise UnremovableZero(
            f"interior zero at ({i}, {j}) has no nonzero row or column source"
        )
    raise UnremovableZero("additive repair budget exhausted")


def _plans(n: int):
    yield ("rot", 0, 0)
    for r in range(1, n):
        yield ("rot", r, 0)
    for c in range(1, n):
        yield ("rot", 0, c)
    for r in range(1, n):
        for c in range(1, n):
            yield ("rot", r, c)
    for salt in range(n):
        yield ("add", salt)


def mitigate_interior_zeros(a: Matrix, exclude=()):
    """Transform ``a`` so its interior holds no zeros; return (matrix, log).

    Plans are tried in the fixed order documented at module level; ``exclude``
    skips plans already consumed by earlier restarts.  Raises UnremovableZero
    when no remaining plan succeeds.
    """
    if not a.is_square:
        raise TooSmall("mitigation needs a square matrix")
    if a.n_rows < 3:
        raise TooSmall("mitigation needs n >= 3 (smaller sizes have no interior)")
    excluded = set(exclude)
    n = a.n_rows
    for plan in _plans(n):
        if plan in excluded:
            continue
        kind = plan[0]
        if kind == "rot":
            cand, ops = _apply_rotation(a, plan[1], plan[2])
            if _interior_clean(cand):
                return cand, MitigationLog(ops, plan)
        else:
            cand, ops = _additive_repair(a, plan[1])
            return cand, MitigationLog(ops, plan)
    raise UnremovableZero("every mitigation plan failed or was excluded")


def condensation_det(a: Matrix, policy: MitigationPolicy | None = None):
    """Determinant of ``a`` by condensation; returns (value, trace).

    Runs mitigation first, restarts under a fresh plan whenever a zero
    divisor appears mid-run (up to the restart budget, default 2n), and
    multiplies the result by the accumulated swap sign.  Raises
    FallbackRequired when the strategy is exhausted.
    """
    if not a.is_square:
        raise ValueError("condensation needs a square matrix")
    policy = policy or MitigationPolicy()
    n = a.n_rows
    ops = OpCount()
    if n == 1:
        return a[0, 0], CondensationTrace((a,), (), MitigationLog(), ops)
    if n == 2:
        stage = condense_step(a, None, ops)
        return stage[0, 0], CondensationTrace((a, stage), (), MitigationLog(), ops)

    budget = policy.restart_budget if policy.restart_budget is not None else 2 * n
    excluded = []
    restarts = []
    warn = [False]
    for _ in range(budget + 1):
        try:
            a0, log = mitigate_interior_zeros(a, exclude=excluded)
        except UnremovableZero as e:
            raise FallbackRequired(str(e)) from e
        stages = [a0]
        starred = []
        k = 0
        try:
            for k in range(1, n):
                divisor = stages[k - 2].interior() if k >= 2 else None
                stage, star = _step_with_star(stages[k - 1], divisor, ops, warn)
                stages.append(stage)
                if star is not None:
                    starred.append(star)
        except DivisionByZero as e:
            restarts.append((k, e.position))
            excluded.append(log.plan)
            continue
        result = stages[-1][0, 0]
        if log.sign < 0:
            result = -result
        trace = CondensationTrace(
            tuple(stages), tuple(starred), log, ops, tuple(restarts), warn[0]
        )
        return result, trace
    raise FallbackRequired(
        f"no clean condensation path within {budget} restarts"
    ) from UnremovableZero("restart budget exhausted")


def replay_log(a: Matrix, log: MitigationLog) -> Matrix:
    """Re-apply a mitigation log to a matrix (trace reproducibility)."""
    m = a
    for op in log.operations:
        kind = op[0]
        if kind == "swap_rows":
            m = m.swap_rows(op[1], op[2])
        elif kind == "swap_cols":
            m = m.swap_cols(op[1], op[2])
        elif kind == "add_scaled_row":
            m = m.add_scaled_row(op[1], op[2], op[3])
        elif kind == "add_scaled_col":
            m = m.add_scaled_col(op[1], op[2], op[3])
        else:
            raise ValueError(f"unknown mitigation operation {kind!r}")
    return m


def _matrix_body(m: Matrix) -> str:
    return "\n".join(
        " ".join(format_scalar(e) for e in row) for row in m.rows()
    )


def render_trace(trace: CondensationTrace) -> str:
    """Serialize a trace: stage blocks, restart notes, mitigation log, sign."""
    n = trace.stages[0].n_rows
    lines = []
    for k, stage in enumerate(trace.stages):
        if k >= 2:
            lines.append(f"stage {k} (pre-division)")
            lines.append(_matrix_body(trace.starred[k - 2]))
        lines.append(f"stage {k} ({n - k} x {n - k})")
        lines.append(_matrix_body(stage))
    for stage_k, pos in trace.restarts:
        lines.append(f"restart: zero divisor at stage {stage_k}, minor ({pos[0]}, {pos[1]})")
    for op in trace.mitigation.operations:
        if op[0].startswith("swap"):
            lines.append(f"{op[0]} {op[1]} {op[2]}")
        else:
            lines.append(f"{op[0]} {op[1]} {op[2]} {format_scalar(op[3])}")
    lines.append(f"sign: {trace.mitigation.sign:+d}")
    return "\n".join(lines) + "\n"
