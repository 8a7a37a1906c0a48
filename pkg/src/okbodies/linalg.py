"""Exact linear solving and definiteness tests over the rationals.

Matrices are plain lists of rows of exact scalars.  Systems are cleared to
integers and eliminated fraction-free (Bareiss), so intermediate values stay
integral and the leading principal minors fall out of the elimination.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import SingularSystemError
from .scalars import Scalar, as_scalar, scale_to_integers


def _as_int_matrix(matrix) -> list[list[int]]:
    flat = [entry for row in matrix for entry in row]
    if not flat:
        return []
    ints, _ = scale_to_integers(flat)
    cols = len(matrix[0])
    return [ints[i * cols : (i + 1) * cols] for i in range(len(matrix))]


def solve_linear(gram, rhs) -> list[Scalar]:
    """Solve gram @ x = rhs exactly.

    Raises SingularSystemError when the matrix is singular, ValueError on a
    non-square system.
    """
    k = len(gram)
    if any(len(row) != k for row in gram) or len(rhs) != k:
        raise ValueError("system must be square with matching right-hand side")
    if k == 0:
        return []
    entries = [list(row) + [b] for row, b in zip(gram, rhs)]
    aug = _as_int_matrix(entries)

    # fraction-free forward elimination with row pivoting
    prev = 1
    for col in range(k):
        pivot_row = next((r for r in range(col, k) if aug[r][col] != 0), None)
        if pivot_row is None:
            raise SingularSystemError("singular system")
        if pivot_row != col:
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        piv = aug[col][col]
        for r in range(col + 1, k):
            row = aug[r]
            factor = row[col]
            for c in range(col, k + 1):
                row[c] = (piv * row[c] - factor * aug[col][c]) // prev
        prev = piv

    # back substitution over exact fractions
    xs: list[Scalar] = [0] * k
    for r in range(k - 1, -1, -1):
        acc = Fraction(aug[r][k], 1)
        for c in range(r + 1, k):
            acc -= aug[r][c] * Fraction(xs[c])
        xs[r] = as_scalar(acc / aug[r][r])
    return xs


def leading_principal_minors(matrix) -> list[int] | None:
    """Bareiss pivots of an integer matrix: entry k is det of the k-th leading minor.

    Returns None as soon as a zero pivot appears (that leading minor vanishes).
    """
    k = len(matrix)
    work = [list(row) for row in matrix]
    minors: list[int] = []
    prev = 1
    for col in range(k):
        piv = work[col][col]
        if piv == 0:
            return None
        minors.append(piv)
        for r in range(col + 1, k):
            row = work[r]
            factor = row[col]
            for c in range(col, k):
                row[c] = (piv * row[c] - factor * work[col][c]) // prev
        prev = piv
    return minors


def is_negative_definite(gram) -> bool:
    """Sylvester test: (-1)^k det(minor_k) > 0 for every leading principal minor.

    The matrix must be symmetric; asymmetric input is rejected.
    """
    k = len(gram)
    if any(len(row) != k for row in gram):
        raise ValueError("matrix must be square")
    for i in range(k):
        for j in range(i + 1, k):
            if as_scalar(gram[i][j]) != as_scalar(gram[j][i]):
                raise ValueError("matrix must be symmetric")
    if k == 0:
        return True
    # positive rescaling preserves minor signs
    work = _as_int_matrix(gram)
    minors = leading_principal_minors(work)
    if minors is None:
        return False
    return all((minor < 0) if (idx % 2 == 0) else (minor > 0) for idx, minor in enumerate(minors))
