"""Rational-cone membership and ray exit thresholds via exact simplex.

Vectors here are plain coordinate tuples; no intersection form is involved.
Problem sizes stay tiny (dimension <= 10, at most a few hundred generators),
so everything runs in exact arithmetic with Bland's anti-cycling pivot rule.
Every answer is verified against the certificate the solver returns: a
nonnegative combination for membership, a separating functional otherwise.
"""

from __future__ import annotations

from fractions import Fraction

from . import kernels
from .errors import InvariantViolationError, NotInConeError, UnboundedThresholdError
from .scalars import Scalar, as_scalar, scale_to_integers


def _int_columns(generators, dim: int) -> tuple[list[tuple[int, ...]], list[int]]:
    cols = []
    scales = []
    for g in generators:
        if len(g) != dim:
            raise ValueError("dimension mismatch between vector and generators")
        ints, scale = scale_to_integers(g)
        cols.append(tuple(ints))
        scales.append(scale)
    return cols, scales


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def cone_member(x, generators, *, certificate: bool = False):
    """Is x a nonnegative rational combination of the generators?

    With ``certificate=True`` returns ``(True, combination)`` where the
    combination is a list of Fractions (one per generator, x == sum c_i g_i),
    or ``(False, functional)`` with an exact separating functional y
    (y.g >= 0 for every generator, y.x < 0).
    """
    x = [as_scalar(v) for v in x]
    dim = len(x)
    cols, col_scales = _int_columns(generators, dim)
    b, b_scale = scale_to_integers(x)

    status, _val, den, x_nums, y_nums = kernels.simplex_solve(cols, b, [0] * len(cols))
    if status == kernels.OPTIMAL:
        # verify the witness exactly in integer space: sum x_j cols_j == den*b
        for i in range(dim):
            if sum(x_nums[j] * cols[j][i] for j in range(len(cols))) != den * b[i]:
                raise InvariantViolationError("membership witness failed verification")
        if not certificate:
            return True
        combo = [
            as_scalar(Fraction(x_nums[j] * col_scales[j], den * b_scale))
            for j in range(len(cols))
        ]
        return True, combo
    # infeasible: verify the Farkas functional
    if any(_dot(y_nums, col) < 0 for col in cols) or _dot(y_nums, b) >= 0:
        raise InvariantViolationError("separating functional failed verification")
    if not certificate:
        return False
    functional = [as_scalar(Fraction(num, den)) for num in y_nums]
    return False, functional


def cone_exit_threshold(start, direction, generators) -> Scalar:
    """Exact sup{t >= 0 : start - t*direction stays in the generator cone}.

    Requires start in the cone (ValueError otherwise); raises
    UnboundedThresholdError when the ray never leaves.
    """
    start = [as_scalar(v) for v in start]
    direction = [as_scalar(v) for v in direction]
    dim = len(start)
    if len(direction) != dim:
        raise ValueError("dimension mismatch between start and direction")
    cols, _ = _int_columns(generators, dim)
    # common scaling of start and direction leaves the threshold unchanged
    scaled, _ = scale_to_integers(list(start) + list(direction))
    b, dir_col = scaled[:dim], tuple(scaled[dim:])

    full_cols = cols + [dir_col]
    obj = [0] * len(cols) + [1]
    status, val_num, den, x_nums, y_nums = kernels.simplex_solve(full_cols, b, obj)
    if status == kernels.INFEASIBLE:
        raise NotInConeError("start vector is not in the cone")
    if status == kernels.UNBOUNDED:
        raise UnboundedThresholdError("unbounded threshold: the ray never exits the cone")

    # primal check: the witness reaches the boundary point exactly
    for i in range(dim):
        if sum(x_nums[j] * full_cols[j][i] for j in range(len(full_cols))) != den * b[i]:
            raise InvariantViolationError("threshold witness failed verification")
    if x_nums[-1] != val_num:
        raise InvariantViolationError("threshold objective mismatch")
    # dual check: y is nonnegative on the cone, has y.direction >= 1 and
    # y.start == t*, so no larger t keeps start - t*direction inside
    if any(_dot(y_nums, col) < 0 for col in cols):
        raise InvariantViolationError("threshold dual certificate failed (generators)")
    if _dot(y_nums, dir_col) < den or _dot(y_nums, b) != val_num:
        raise InvariantViolationError("threshold dual certificate failed (optimality)")
    return as_scalar(Fraction(val_num, den))
