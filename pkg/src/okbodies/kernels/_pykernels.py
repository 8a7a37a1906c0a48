"""Pure-Python hot kernels: integer pairing scans and exact integer-pivot simplex.

Mirrors ``_fastkernels.pyx`` exactly; results from the two backends are
bit-identical.  All arithmetic is over Python integers (fraction-free), so
the only rounding anywhere is the exact ``//`` of Bareiss-style pivoting.
"""

from __future__ import annotations

BACKEND = "pure"

OPTIMAL, INFEASIBLE, UNBOUNDED = 0, 1, 2


def pairing_many(v, gens):
    """Hyperbolic products [v0*g0 - sum_i>=1 vi*gi for g in gens] over integers."""
    out = []
    n = len(v)
    v0 = v[0]
    for g in gens:
        s = v0 * g[0]
        for i in range(1, n):
            s -= v[i] * g[i]
        out.append(s)
    return out


def simplex_solve(cols, b, obj):
    """maximize obj.x subject to sum_j x_j*cols[j] == b, x >= 0 (all integers).

    Two-phase primal simplex, Bland's rule, integer (fraction-free) pivoting.
    Returns (status, val_num, den, x_nums, y_nums) where every reported value
    is numerator/den with den > 0:

    - OPTIMAL: value, primal witness x (real variables), dual vector y
    - INFEASIBLE: x_nums is None, y is a Farkas certificate
      (y.col_j >= 0 for all j, y.b < 0)
    - UNBOUNDED: x_nums and y_nums are None
    """
    m = len(b)
    k = len(cols)
    art0 = k
    rhs = k + m
    width = k + m + 1

    sign = [1] * m
    T = []
    for i in range(m):
        row = [cols[j][i] for j in range(k)] + [0] * m + [b[i]]
        if row[rhs] < 0:
            row = [-x for x in row]
            sign[i] = -1
        row[art0 + i] = 1
        T.append(row)

    # phase-1 objective (max -sum of artificials), reduced against the
    # artificial starting basis: z_j = -(column sum) on real and rhs columns
    z = [0] * width
    for j in list(range(k)) + [rhs]:
        z[j] = -sum(T[i][j] for i in range(m))
    T.append(z)

    basis = list(range(art0, art0 + m))
    state = [1]  # state[0] = delta (previous pivot, kept positive)

    def pivot(r, c):
        delta = state[0]
        piv = T[r][c]
        Tr = T[r]
        for i in range(m + 1):
            if i == r:
                continue
            Ti = T[i]
            f = Ti[c]
            for j in range(width):
                Ti[j] = (Ti[j] * piv - f * Tr[j]) // delta
        state[0] = piv
        basis[r] = c
        if state[0] < 0:
            state[0] = -state[0]
            for i in range(m + 1):
                Ti = T[i]
                for j in range(width):
                    Ti[j] = -Ti[j]

    def run_phase():
        # most-negative entering column while progress lasts, switching
        # permanently to Bland's rule after a streak of degenerate pivots
        # (Bland is the anti-cycling guarantee; the switch keeps it intact)
        bland = False
        stalled = 0
        while True:
            zrow = T[m]
            enter = -1
            if bland:
                for j in range(k):
                    if zrow[j] < 0:
                        enter = j
                        break
            else:
                best = 0
                for j in range(k):
                    zj = zrow[j]
                    if zj < best:
                        best = zj
                        enter = j
            if enter == -1:
                return OPTIMAL
            leave = -1
            for i in range(m):
                tic = T[i][enter]
                if tic > 0:
                    if leave == -1:
                        leave = i
                    else:
                        lhs = T[i][rhs] * T[leave][enter]
                        rhs_cmp = T[leave][rhs] * tic
                        if lhs < rhs_cmp or (lhs == rhs_cmp and basis[i] < basis[leave]):
                            leave = i
            if leave == -1:
                return UNBOUNDED
            if not bland:
                stalled = stalled + 1 if T[leave][rhs] == 0 else 0
                if stalled >= 20:
                    bland = True
            pivot(leave, enter)

    status = run_phase()
    delta = state[0]
    if T[m][rhs] != 0:  # phase-1 optimum below zero: infeasible
        y_nums = [sign[i] * (T[m][art0 + i] - delta) for i in range(m)]
        return (INFEASIBLE, T[m][rhs], delta, None, y_nums)

    # drive basic artificials (all at value 0) out of the basis when possible
    for r in range(m):
        if basis[r] >= art0:
            for j in range(k):
                if T[r][j] != 0:
                    pivot(r, j)
                    break

    # phase 2: rebuild the reduced-cost row for the real objective
    delta = state[0]
    z = [0] * width
    for j in range(width):
        s = -delta * obj[j] if j < k else 0
        for r in range(m):
            cb = basis[r]
            if cb < k and obj[cb] != 0:
                s += obj[cb] * T[r][j]
        z[j] = s
    T[m] = z

    status = run_phase()
    delta = state[0]
    if status == UNBOUNDED:
        return (UNBOUNDED, 0, 1, None, None)
    x_nums = [0] * k
    for r in range(m):
        if basis[r] < k:
            x_nums[basis[r]] = T[r][rhs]
    y_nums = [sign[i] * T[m][art0 + i] for i in range(m)]
    return (OPTIMAL, T[m][rhs], delta, x_nums, y_nums)
