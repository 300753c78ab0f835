"""Exact integer matrix algebra: Smith/Hermite normal forms, solving,
kernels.  Matrices are lists of lists of Python ints, row-major.
"""


def zeros(r, c):
    return [[0] * c for _ in range(r)]


def identity(n):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = 1
    return m


def mat_mul(a, b):
    rb = len(b)
    cb = len(b[0]) if b else 0
    out = zeros(len(a), cb)
    for i, row in enumerate(a):
        for k, aik in enumerate(row):
            if aik:
                brow = b[k]
                orow = out[i]
                for j in range(cb):
                    orow[j] += aik * brow[j]
    return out


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def det(a):
    """Determinant by integer-preserving (gcd-style) elimination."""
    n = len(a)
    m = [row[:] for row in a]
    sign = 1
    for col in range(n):
        # euclidean elimination keeps everything integral
        for r in range(col + 1, n):
            while m[r][col]:
                if m[col][col] == 0 or (
                        m[r][col] and abs(m[r][col]) < abs(m[col][col])):
                    m[col], m[r] = m[r], m[col]
                    sign = -sign
                if m[r][col]:
                    q = m[r][col] // m[col][col]
                    for j in range(col, n):
                        m[r][j] -= q * m[col][j]
        if m[col][col] == 0:
            return 0
    prod = sign
    for i in range(n):
        prod *= m[i][i]
    return prod


def smith_normal_form(a):
    """Return (diag, U, V) with U*a*V = diag(d1..dr), d1 | d2 | ... and
    U, V unimodular.  diag is the full rectangular diagonal matrix."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    m = [row[:] for row in a]
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):          # row dst += q * row src
        for j in range(cols):
            m[dst][j] += q * m[src][j]
        for j in range(rows):
            u[dst][j] += q * u[src][j]

    def add_col(src, dst, q):
        for row in m:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    t = 0
    while True:
        # find a pivot in the remaining block
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if m[i][j]:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            # clear column t
            done = True
            for i in range(t + 1, rows):
                if m[i][t]:
                    q = m[i][t] // m[t][t]
                    add_row(t, i, -q)
                    if m[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, cols):
                if m[t][j]:
                    q = m[t][j] // m[t][t]
                    add_col(t, j, -q)
                    if m[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # divisibility fix-up: pivot must divide the rest of the block
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if m[i][j] % m[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(offender, t, 1)
        if m[t][t] < 0:
            for j in range(cols):
                m[t][j] = -m[t][j]
            for j in range(rows):
                u[t][j] = -u[t][j]
        t += 1
        if t == min(rows, cols):
            break
    return m, u, v


def invariant_factors(a):
    d, _, _ = smith_normal_form(a)
    n = min(len(d), len(d[0]) if d else 0)
    return [d[i][i] for i in range(n)]


def hnf_column_basis(a):
    """Basis of the column lattice of `a` in column-style Hermite normal form.

    Returns a list of basis columns (each a list of length rows), uniquely
    normalized: pivots positive, entries to the right of a pivot reduced
    modulo it.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    w = [list(col) for col in zip(*a)] if rows else []   # work on columns
    basis = []
    row = 0
    while row < rows and w:
        nz = [c for c in w if c[row]]
        if not nz:
            row += 1
            continue
        # gcd the entries at this row across columns
        while True:
            nz.sort(key=lambda c: abs(c[row]))
            piv = nz[0]
            changed = False
            for c in nz[1:]:
                q = c[row] // piv[row]
                if q:
                    for i in range(rows):
                        c[i] -= q * piv[i]
                    changed = True
            nz = [c for c in w if c[row]]
            if not changed or len(nz) <= 1:
                break
        piv = nz[0]
        if piv[row] < 0:
            for i in range(rows):
                piv[i] = -piv[i]
        basis.append(piv)
        w = [c for c in w if c is not piv and any(c)]
        row += 1
    # reduce earlier basis columns against later pivots for uniqueness
    pivots = [next(i for i, x in enumerate(col) if x) for col in basis]
    for idx in range(len(basis) - 1, -1, -1):
        p = pivots[idx]
        for jdx in range(idx):
            q = basis[jdx][p] // basis[idx][p]
            if q:
                for i in range(len(basis[idx])):
                    basis[jdx][i] -= q * basis[idx][i]
    return basis


def lattices_equal(gens1, gens2, rows):
    """Do two generating sets span the same column lattice in Z^rows?"""
    a = [[g[i] for g in gens1] for i in range(rows)] if gens1 else zeros(rows, 0)
    b = [[g[i] for g in gens2] for i in range(rows)] if gens2 else zeros(rows, 0)
    return hnf_column_basis(a) == hnf_column_basis(b)


def solve(a, b):
    """One integer solution x of a.x = b (column vector), or None."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    d, u, v = smith_normal_form(a)
    ub = [sum(u[i][j] * b[j] for j in range(rows)) for i in range(rows)]
    y = [0] * cols
    for i in range(rows):
        di = d[i][i] if i < min(rows, cols) else 0
        if di:
            if ub[i] % di:
                return None
            if i < cols:
                y[i] = ub[i] // di
        elif ub[i]:
            return None
    return [sum(v[i][j] * y[j] for j in range(cols)) for i in range(cols)]


def kernel_basis(a):
    """Basis of the integer kernel lattice {x : a.x = 0} as columns."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if cols == 0:
        return []
    if rows == 0:
        return [[1 if i == j else 0 for i in range(cols)] for j in range(cols)]
    d, _, v = smith_normal_form(a)
    r = sum(1 for i in range(min(rows, cols)) if d[i][i])
    return [[v[i][j] for i in range(cols)] for j in range(r, cols)]


def preimage_lattice(f, rel):
    """Basis of the lattice {x : f.x lies in the column span of rel}.

    `f` is rows x cols, `rel` rows x k.  Returns columns of length cols.
    """
    rows = len(f)
    cols = len(f[0]) if rows else 0
    k = len(rel[0]) if rel and rel[0] is not None and len(rel) else 0
    stacked = [f[i] + ([-x for x in rel[i]] if k else []) for i in range(rows)]
    ker = kernel_basis(stacked)
    gens = [col[:cols] for col in ker]
    mat = [[g[i] for g in gens] for i in range(cols)] if gens else zeros(cols, 0)
    return hnf_column_basis(mat)
