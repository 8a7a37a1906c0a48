# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels: integer pairing scans and exact integer-pivot simplex.

Mirrors ``_pykernels.py`` exactly; arithmetic stays on Python integers
(arbitrary precision), the compilation removes interpreter overhead from the
inner loops.
"""

BACKEND = "cython"

OPTIMAL, INFEASIBLE, UNBOUNDED = 0, 1, 2


def pairing_many(list v, list gens):
    """Hyperbolic products [v0*g0 - sum_i>=1 vi*gi for g in gens] over integers."""
    cdef Py_ssize_t i, gi, n = len(v), ng = len(gens)
    cdef list out = []
    cdef object s, v0 = v[0]
    cdef tuple g
    for gi in range(ng):
        g = gens[gi]
        s = v0 * g[0]
        for i in range(1, n):
            s = s - v[i] * g[i]
        out.append(s)
    return out


cdef _pivot(list T, list basis, list state, Py_ssize_t m, Py_ssize_t width,
            Py_ssize_t r, Py_ssize_t c):
    cdef object delta = state[0]
    cdef object piv, f
    cdef list Tr, Ti
    cdef Py_ssize_t i, j
    Tr = <list> T[r]
    piv = Tr[c]
    for i in range(m + 1):
        if i == r:
            continue
        Ti = <list> T[i]
        f = Ti[c]
        for j in range(width):
            Ti[j] = (Ti[j] * piv - f * Tr[j]) // delta
    state[0] = piv
    basis[r] = c
    if piv < 0:
        state[0] = -piv
        for i in range(m + 1):
            Ti = <list> T[i]
            for j in range(width):
                Ti[j] = -Ti[j]


cdef int _run_phase(list T, list basis, list state, Py_ssize_t m,
                    Py_ssize_t k, Py_ssize_t rhs, Py_ssize_t width):
    # most-negative entering column while progress lasts, switching
    # permanently to Bland's rule after a streak of degenerate pivots
    # (Bland is the anti-cycling guarantee; the switch keeps it intact)
    cdef list zrow, Ti, Tl
    cdef Py_ssize_t i, j, enter, leave
    cdef object tic, lhs, rhs_cmp, best, zj
    cdef bint bland = False
    cdef int stalled = 0
    while True:
        zrow = <list> T[m]
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
            Ti = <list> T[i]
            tic = Ti[enter]
            if tic > 0:
                if leave == -1:
                    leave = i
                else:
                    Tl = <list> T[leave]
                    lhs = Ti[rhs] * Tl[enter]
                    rhs_cmp = Tl[rhs] * tic
                    if lhs < rhs_cmp or (lhs == rhs_cmp and basis[i] < basis[leave]):
                        leave = i
        if leave == -1:
            return UNBOUNDED
        if not bland:
            if (<list> T[leave])[rhs] == 0:
                stalled = stalled + 1
            else:
                stalled = 0
            if stalled >= 20:
                bland = True
        _pivot(T, basis, state, m, width, leave, enter)


def simplex_solve(list cols, list b, list obj):
    """maximize obj.x subject to sum_j x_j*cols[j] == b, x >= 0 (all integers).

    Same contract as the pure backend: returns (status, val_num, den,
    x_nums, y_nums) with exact integer-pivot two-phase simplex and Bland's
    anti-cycling rule.
    """
    cdef Py_ssize_t m = len(b), k = len(cols)
    cdef Py_ssize_t art0 = k, rhs = k + m, width = k + m + 1
    cdef Py_ssize_t i, j, r
    cdef list sign = [1] * m
    cdef list T = [], row, z
    cdef object s, col

    for i in range(m):
        row = [0] * width
        for j in range(k):
            row[j] = (<tuple> cols[j])[i]
        row[rhs] = b[i]
        if row[rhs] < 0:
            for j in range(width):
                row[j] = -row[j]
            sign[i] = -1
        row[art0 + i] = 1
        T.append(row)

    z = [0] * width
    for j in list(range(k)) + [rhs]:
        s = 0
        for i in range(m):
            s = s + (<list> T[i])[j]
        z[j] = -s
    T.append(z)

    cdef list basis = list(range(art0, art0 + m))
    cdef list state = [1]

    cdef int status = _run_phase(T, basis, state, m, k, rhs, width)
    cdef object delta = state[0]
    cdef list zrow = <list> T[m]
    cdef list y_nums, x_nums
    if zrow[rhs] != 0:
        y_nums = [sign[i] * (zrow[art0 + i] - delta) for i in range(m)]
        return (INFEASIBLE, zrow[rhs], delta, None, y_nums)

    for r in range(m):
        if basis[r] >= art0:
            for j in range(k):
                if (<list> T[r])[j] != 0:
                    _pivot(T, basis, state, m, width, r, j)
                    break

    delta = state[0]
    z = [0] * width
    for j in range(width):
        s = -delta * obj[j] if j < k else 0
        for r in range(m):
            cb = basis[r]
            if cb < k and obj[cb] != 0:
                s = s + obj[cb] * (<list> T[r])[j]
        z[j] = s
    T[m] = z

    status = _run_phase(T, basis, state, m, k, rhs, width)
    delta = state[0]
    if status == UNBOUNDED:
        return (UNBOUNDED, 0, 1, None, None)
    x_nums = [0] * k
    for r in range(m):
        if basis[r] < k:
            x_nums[basis[r]] = (<list> T[r])[rhs]
    zrow = <list> T[m]
    y_nums = [sign[i] * zrow[art0 + i] for i in range(m)]
    return (OPTIMAL, zrow[rhs], delta, x_nums, y_nums)
