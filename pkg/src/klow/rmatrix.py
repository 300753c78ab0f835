"""Square matrices over a FiniteRing, stored as tuples of tuples of
carrier indices."""

import itertools
from functools import lru_cache

from .errors import NotInvertible, NotUnital, RingMismatch


def mat(rows):
    return tuple(tuple(r) for r in rows)


def dim(a):
    return len(a)


def zero_mat(ring, n):
    return tuple((ring.zero,) * n for _ in range(n))


def identity_mat(ring, n):
    if ring.one is None:
        raise NotUnital(ring.name)
    return tuple(tuple(ring.one if i == j else ring.zero for j in range(n))
                 for i in range(n))


def mat_add(ring, a, b):
    return tuple(tuple(ring.add_table[x][y] for x, y in zip(ra, rb))
                 for ra, rb in zip(a, b))


def mat_sub(ring, a, b):
    return tuple(tuple(ring.sub(x, y) for x, y in zip(ra, rb))
                 for ra, rb in zip(a, b))


def mat_mul(ring, a, b):
    n = len(a)
    add = ring.add_table
    mul = ring.mul_table
    bt = tuple(zip(*b))
    out = []
    for row in a:
        orow = []
        for col in bt:
            acc = ring.zero
            for x, y in zip(row, col):
                acc = add[acc][mul[x][y]]
            orow.append(acc)
        out.append(tuple(orow))
    return tuple(out)


def mat_scalar(ring, s, a):
    return tuple(tuple(ring.mul_table[s][x] for x in row) for row in a)


def apply_entrywise(fn, a):
    return tuple(tuple(fn(x) for x in row) for row in a)


def pad(ring, a, n):
    """Corner embedding into n x n (extend by zeros)."""
    k = len(a)
    return tuple(
        tuple((a[i][j] if i < k and j < k else ring.zero) for j in range(n))
        for i in range(n))


def corner_embed_gl(ring, g, n):
    """g |-> diag(g, 1, ..., 1) in GL_n."""
    k = len(g)
    return tuple(
        tuple(g[i][j] if i < k and j < k
              else (ring.one if i == j else ring.zero)
              for j in range(n))
        for i in range(n))


def mat_vec(ring, a, v):
    add = ring.add_table
    mul = ring.mul_table
    out = []
    for row in a:
        acc = ring.zero
        for x, y in zip(row, v):
            acc = add[acc][mul[x][y]]
        out.append(acc)
    return tuple(out)


def mat_inverse(ring, g):
    """Two-sided inverse, or None.  Decided by testing bijectivity of the
    column action v |-> g.v on all |R|^n vectors; the inverse is read off
    from the preimages of the standard basis."""
    if ring.one is None:
        raise NotUnital(ring.name)
    n = len(g)
    seen = {}
    for v in itertools.product(range(ring.order), repeat=n):
        w = mat_vec(ring, g, v)
        if w in seen:
            return None
        seen[w] = v
    cols = []
    for i in range(n):
        e = tuple(ring.one if j == i else ring.zero for j in range(n))
        if e not in seen:
            return None
        cols.append(seen[e])
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def mat_is_invertible(ring, g):
    return mat_inverse(ring, g) is not None


def require_inverse(ring, g):
    h = mat_inverse(ring, g)
    if h is None:
        raise NotInvertible(g)
    return h


def is_idempotent(ring, e):
    return mat_mul(ring, e, e) == e


def elementary(ring, n, i, j, a):
    """1 + a.e_{ij}, i != j."""
    m = [list(r) for r in identity_mat(ring, n)]
    m[i][j] = a
    return mat(m)


def is_elementary(ring, g):
    n = len(g)
    ident = identity_mat(ring, n)
    offs = [(i, j) for i in range(n) for j in range(n)
            if i != j and g[i][j] != ring.zero]
    if len(offs) > 1:
        return False
    return all(g[i][i] == ring.one for i in range(n)) and all(
        g[i][j] == ring.zero or (i, j) in offs
        for i in range(n) for j in range(n) if i != j)


def elementary_gens(ring, n):
    """All 1 + a.e_{ij} with a nonzero."""
    out = []
    for i in range(n):
        for j in range(n):
            if i != j:
                for a in range(ring.order):
                    if a != ring.zero:
                        out.append(elementary(ring, n, i, j, a))
    return out


def diag_unit_gens(ring, n):
    """diag(u, 1, ..., 1) for u a unit (u != 1)."""
    out = []
    for u in ring.units():
        if u == ring.one:
            continue
        m = [list(r) for r in identity_mat(ring, n)]
        m[0][0] = u
        out.append(mat(m))
    return out


def permutation_gens(ring, n):
    """Adjacent transposition matrices."""
    out = []
    for i in range(n - 1):
        m = [list(r) for r in identity_mat(ring, n)]
        m[i][i] = m[i + 1][i + 1] = ring.zero
        m[i][i + 1] = m[i + 1][i] = ring.one
        out.append(mat(m))
    return out


@lru_cache(maxsize=None)
def gl_generators(ring, n):
    """Elementary matrices, unit diagonals and transpositions.

    For finite (hence semilocal) rings these generate all of GL_n; this
    assumption is cross-checked against brute enumeration at small sizes."""
    return tuple(elementary_gens(ring, n) + diag_unit_gens(ring, n)
                 + permutation_gens(ring, n))


def check_same_ring(ra, rb):
    if ra is not rb and ra.digest() != rb.digest():
        raise RingMismatch((ra.name, rb.name))


def block2(ring, a, b, c, d):
    """Assemble [[a, b], [c, d]] from equal-size square blocks."""
    n = len(a)
    top = [tuple(a[i]) + tuple(b[i]) for i in range(n)]
    bot = [tuple(c[i]) + tuple(d[i]) for i in range(n)]
    return tuple(top + bot)
