"""Cyclic and bar homology of finite-dimensional rational algebras, by
exact fraction arithmetic: Connes' complex of signed cyclic coinvariants,
the bar complex, and the bar-homology criterion for K-excision."""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import AxiomViolation, BudgetExceeded, UnitalInput

DEFAULT_TENSOR_BUDGET = 2000


@dataclass(frozen=True)
class RationalAlgebra:
    name: str
    dim: int
    constants: tuple              # c[i][j][k]: e_i.e_j = sum_k c[i][j][k] e_k
    unit: tuple = None            # optional coordinates of 1


def make_algebra(name, dim, constants, unit=None):
    c = tuple(tuple(tuple(Fraction(x) for x in row) for row in plane)
              for plane in constants)
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                left = _mul_basis_vec(c, dim, _mul_basis(c, dim, i, j), k)
                right = [Fraction(0)] * dim
                jk = _mul_basis(c, dim, j, k)
                for m in range(dim):
                    if jk[m]:
                        for t in range(dim):
                            right[t] += jk[m] * c[i][m][t]
                if left != right:
                    raise AxiomViolation("associativity", (i, j, k))
    if unit is not None:
        unit = tuple(Fraction(x) for x in unit)
        for i in range(dim):
            e_i = tuple(Fraction(1) if t == i else Fraction(0)
                        for t in range(dim))
            if _vec_mul(c, dim, unit, e_i) != list(e_i) \
                    or _vec_mul(c, dim, e_i, unit) != list(e_i):
                raise AxiomViolation("unit", (i,))
    return RationalAlgebra(name, dim, c, unit)


def _mul_basis(c, dim, i, j):
    return list(c[i][j])


def _mul_basis_vec(c, dim, vec, k):
    out = [Fraction(0)] * dim
    for m in range(dim):
        if vec[m]:
            for t in range(dim):
                out[t] += vec[m] * c[m][k][t]
    return out


def _vec_mul(c, dim, x, y):
    out = [Fraction(0)] * dim
    for i in range(dim):
        if x[i]:
            for j in range(dim):
                if y[j]:
                    for k in range(dim):
                        out[k] += x[i] * y[j] * c[i][j][k]
    return out


@dataclass
class ChainComplexQ:
    name: str
    dims: list                    # dims[n] = dim of degree n
    boundaries: list              # boundaries[n]: matrix C_n -> C_{n-1}
    labels: list                  # per degree, basis descriptions


def _words(dim, length):
    return list(itertools.product(range(dim), repeat=length))


def _cyclic_classes(dim, n):
    """Signed cyclic coinvariants of words of length n+1.

    Returns (class_count, coords) where coords maps a word to
    (class_index, sign) or None when the class is killed by a sign
    inconsistency."""
    sign = -1 if n % 2 else 1
    coords = {}
    count = 0
    for w in _words(dim, n + 1):
        if w in coords:
            continue
        orbit = [w]
        signs = {w: 1}
        cur, s = w, 1
        dead = False
        while True:
            cur = (cur[-1],) + cur[:-1]
            s *= sign
            if cur == w:
                if s != 1:
                    dead = True
                break
            if cur in signs:
                break
            signs[cur] = s
            orbit.append(cur)
        if dead:
            for v in orbit:
                coords[v] = None
        else:
            for v in orbit:
                coords[v] = (count, signs[v])
            count += 1
    return count, coords


def _project(coords, vec_terms, count):
    out = [Fraction(0)] * count
    for w, coeff in vec_terms:
        c = coords[w]
        if c is not None:
            out[c[0]] += c[1] * coeff
    return out


def _b_terms(alg, w, wraparound):
    """Expansion of the Hochschild boundary of a basis word as
    (word, coefficient) pairs."""
    n = len(w) - 1
    c = alg.constants
    terms = []
    for i in range(n):
        prod = c[w[i]][w[i + 1]]
        s = -1 if i % 2 else 1
        for k in range(alg.dim):
            if prod[k]:
                terms.append((w[:i] + (k,) + w[i + 2:], s * prod[k]))
    if wraparound:
        prod = c[w[n]][w[0]]
        s = -1 if n % 2 else 1
        for k in range(alg.dim):
            if prod[k]:
                terms.append(((k,) + w[1:n], s * prod[k]))
    return terms


def build_connes_complex(alg, n_max=4, budget=DEFAULT_TENSOR_BUDGET):
    """Connes' complex: degree n is the signed cyclic coinvariants of
    A^{tensor n+1}, with the full boundary b (wraparound included)."""
    if alg.dim ** (n_max + 1) > budget:
        raise BudgetExceeded(alg.dim ** (n_max + 1), budget)
    classes = [_cyclic_classes(alg.dim, n) for n in range(n_max + 1)]
    dims = [c[0] for c in classes]
    labels = []
    for n in range(n_max + 1):
        count, coords = classes[n]
        reps = [None] * count
        for w in _words(alg.dim, n + 1):
            c = coords[w]
            if c is not None and reps[c[0]] is None:
                reps[c[0]] = w
        labels.append(reps)
    boundaries = [None]
    for n in range(1, n_max + 1):
        count_lo, coords_lo = classes[n - 1]
        count_hi, _ = classes[n]
        cols = []
        for rep in labels[n]:
            cols.append(_project(coords_lo, _b_terms(alg, rep, True),
                                 count_lo))
        matrix = [[cols[j][i] for j in range(count_hi)]
                  for i in range(count_lo)]
        boundaries.append(matrix)
    cx = ChainComplexQ(f"connes({alg.name})", dims, boundaries, labels)
    _assert_complex(cx)
    return cx


def build_bar_complex(alg, n_max=4, budget=DEFAULT_TENSOR_BUDGET):
    """Bar complex: degree n is A^{tensor n+1} with the boundary b' that
    omits the wraparound term."""
    if alg.dim ** (n_max + 1) > budget:
        raise BudgetExceeded(alg.dim ** (n_max + 1), budget)
    labels = [_words(alg.dim, n + 1) for n in range(n_max + 1)]
    index = [{w: i for i, w in enumerate(ws)} for ws in labels]
    dims = [len(ws) for ws in labels]
    boundaries = [None]
    for n in range(1, n_max + 1):
        matrix = [[Fraction(0)] * dims[n] for _ in range(dims[n - 1])]
        for j, w in enumerate(labels[n]):
            for v, coeff in _b_terms(alg, w, False):
                matrix[index[n - 1][v]][j] += coeff
        boundaries.append(matrix)
    cx = ChainComplexQ(f"bar({alg.name})", dims, boundaries, labels)
    _assert_complex(cx)
    return cx


def _assert_complex(cx):
    for n in range(2, len(cx.dims)):
        a, b = cx.boundaries[n - 1], cx.boundaries[n]
        a_cols = [{i: a[i][t] for i in range(len(a)) if a[i][t]}
                  for t in range(cx.dims[n - 1])]
        for j in range(cx.dims[n]):
            acc = {}
            for t in range(cx.dims[n - 1]):
                x = b[t][j]
                if x:
                    for i, y in a_cols[t].items():
                        acc[i] = acc.get(i, Fraction(0)) + x * y
            for i, s in acc.items():
                if s != 0:
                    raise AxiomViolation("b o b = 0", (cx.name, n, i, j))


def rank(matrix):
    """Exact rank by sparse Gaussian elimination over the rationals; pivot
    is the first nonzero entry by index."""
    if not matrix or not matrix[0]:
        return 0
    rows = [{j: x for j, x in enumerate(row) if x} for row in matrix]
    rows = [r for r in rows if r]
    cols = len(matrix[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(rows)) if c in rows[i]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = {j: x * inv for j, x in rows[r].items()}
        for i in range(len(rows)):
            if i != r and c in rows[i]:
                f = rows[i][c]
                new = dict(rows[i])
                for j, y in rows[r].items():
                    v = new.get(j, Fraction(0)) - f * y
                    if v:
                        new[j] = v
                    else:
                        new.pop(j, None)
                rows[i] = new
        r += 1
        if r == len(rows):
            break
    return r


def homology_ranks(cx):
    """dim H_n = dim ker(b_n) - rank(b_{n+1}) for each computable degree."""
    out = []
    nd = len(cx.dims)
    for n in range(nd - 1):
        rank_in = rank(cx.boundaries[n]) if n >= 1 else 0
        rank_out = rank(cx.boundaries[n + 1])
        out.append(cx.dims[n] - rank_in - rank_out)
    return out


def hc0_oracle(alg):
    """dim A/[A,A] = dim - rank of the span of all e_i e_j - e_j e_i."""
    rows = []
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            rows.append([alg.constants[i][j][k] - alg.constants[j][i][k]
                         for k in range(alg.dim)])
    return alg.dim - rank(rows)


def unital_bar_check(alg, n_check=3):
    """H^bar vanishes in degrees <= n_check for a unital algebra."""
    if alg.unit is None:
        raise UnitalInput(f"{alg.name} carries no unit")
    cx = build_bar_complex(alg, n_max=n_check + 1)
    dims = homology_ranks(cx)[:n_check + 1]
    return {"algebra": alg.name, "hbar": dims,
            "vanishes": all(d == 0 for d in dims)}


def excisiveness_verdict(alg, n_check=3):
    """Bar-homology obstruction to K-excision for a nonunital algebra:
    any nonzero H^bar_n rules excision out; all zero up to n_check is
    evidence, not proof."""
    if alg.unit is not None:
        raise UnitalInput(
            f"{alg.name} is unital; unital algebras are K-excisive "
            "(use unital_bar_check)")
    cx = build_bar_complex(alg, n_max=n_check + 1)
    dims = homology_ranks(cx)[:n_check + 1]
    for n, d in enumerate(dims):
        if d != 0:
            return {"algebra": alg.name, "hbar": dims, "obstructed": True,
                    "degree": n, "dim": d,
                    "verdict": f"not K-excisive: H^bar_{n} has dimension {d}"}
    return {"algebra": alg.name, "hbar": dims, "obstructed": False,
            "verdict": f"no obstruction found up to degree {n_check} "
            "(not a proof of excisiveness)"}
