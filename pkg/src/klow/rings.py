"""Finite rings presented by explicit addition/multiplication tables.

Elements are carrier indices 0..m-1.  All ring axioms are verified
exhaustively at construction time, so downstream code can trust the
tables blindly.
"""

import hashlib
import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import AxiomViolation, BadInput, NotIrreducible

# Conway polynomials, coefficients low-to-high, monic.
GF_POLYNOMIALS = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (7, 1): (4, 1),
}


@dataclass(frozen=True)
class FiniteRing:
    order: int
    add_table: tuple          # m x m tuples of carrier indices
    mul_table: tuple
    zero: int
    one: object               # carrier index or None
    name: str
    char_exponent: int

    def add(self, x, y):
        return self.add_table[x][y]

    def mul(self, x, y):
        return self.mul_table[x][y]

    def neg(self, x):
        return _neg_table(self)[x]

    def sub(self, x, y):
        return self.add_table[x][self.neg(y)]

    def times(self, n, x):
        """n.x for an integer n (repeated addition)."""
        n %= self.char_exponent
        acc = self.zero
        for _ in range(n):
            acc = self.add_table[acc][x]
        return acc

    @property
    def unital(self):
        return self.one is not None

    def units(self):
        return _units(self)

    def inv(self, x):
        return _inv_table(self)[x]

    def digest(self):
        blob = json.dumps(
            [self.order, self.add_table, self.mul_table, self.zero, self.one],
            separators=(",", ":"),
        ).encode()
        return hashlib.sha256(blob).hexdigest()[:16]

    def __repr__(self):
        return f"FiniteRing({self.name}, order={self.order})"


@lru_cache(maxsize=None)
def _neg_table(ring):
    neg = [None] * ring.order
    for x in range(ring.order):
        for y in range(ring.order):
            if ring.add_table[x][y] == ring.zero:
                neg[x] = y
                break
    return tuple(neg)


@lru_cache(maxsize=None)
def _units(ring):
    if ring.one is None:
        return ()
    us = []
    for x in range(ring.order):
        for y in range(ring.order):
            if (ring.mul_table[x][y] == ring.one
                    and ring.mul_table[y][x] == ring.one):
                us.append(x)
                break
    return tuple(us)


@lru_cache(maxsize=None)
def _inv_table(ring):
    inv = {}
    for x in _units(ring):
        for y in range(ring.order):
            if (ring.mul_table[x][y] == ring.one
                    and ring.mul_table[y][x] == ring.one):
                inv[x] = y
                break
    return inv


def additive_order(ring, x):
    n, acc = 1, x
    while acc != ring.zero:
        acc = ring.add_table[acc][x]
        n += 1
    return n


def _char_exponent(add_table, zero):
    m = len(add_table)
    exp = 1
    for x in range(m):
        n, acc = 1, x
        while acc != zero:
            acc = add_table[acc][x]
            n += 1
        exp = exp * n // gcd(exp, n)
    return exp


def _check_tables(add, mul, zero, one):
    m = len(add)
    rng = range(m)
    # abelian group under addition
    for x in rng:
        if add[x][zero] != x:
            raise AxiomViolation("additive identity", (x,))
        if not any(add[x][y] == zero for y in rng):
            raise AxiomViolation("additive inverse", (x,))
        for y in rng:
            if add[x][y] != add[y][x]:
                raise AxiomViolation("additive commutativity", (x, y))
    for x in rng:
        for y in rng:
            axy = add[x][y]
            for z in rng:
                if add[axy][z] != add[x][add[y][z]]:
                    raise AxiomViolation("additive associativity", (x, y, z))
                if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                    raise AxiomViolation("multiplicative associativity",
                                         (x, y, z))
                if mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]:
                    raise AxiomViolation("left distributivity", (x, y, z))
                if mul[add[y][z]][x] != add[mul[y][x]][mul[z][x]]:
                    raise AxiomViolation("right distributivity", (x, y, z))
    if one is not None:
        for x in rng:
            if mul[one][x] != x or mul[x][one] != x:
                raise AxiomViolation("multiplicative identity", (x,))


def make_ring(add, mul, name, zero=0, one=None, check=True):
    add = tuple(tuple(row) for row in add)
    mul = tuple(tuple(row) for row in mul)
    if check:
        _check_tables(add, mul, zero, one)
    return FiniteRing(
        order=len(add), add_table=add, mul_table=mul, zero=zero, one=one,
        name=name, char_exponent=_char_exponent(add, zero),
    )


# ---------------------------------------------------------------------------
# constructions


def zmod(n, name=None):
    rng = range(n)
    add = [[(x + y) % n for y in rng] for x in rng]
    mul = [[(x * y) % n for y in rng] for x in rng]
    return make_ring(add, mul, name or f"Z{n}", one=1 % n if n > 1 else None)


def _poly_mulmod(a, b, poly, p):
    k = len(poly) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            prod[i + j] = (prod[i + j] + ai * bj) % p
    # reduce modulo the monic poly
    for i in range(len(prod) - 1, k - 1, -1):
        c = prod[i]
        if c:
            for j in range(k + 1):
                prod[i - k + j] = (prod[i - k + j] - c * poly[j]) % p
    return tuple(prod[:k])


def _is_irreducible(poly, p):
    # trial division by all monic polynomials of degree <= deg/2
    k = len(poly) - 1
    if k == 1:
        return True
    for d in range(1, k // 2 + 1):
        for coeffs in itertools.product(range(p), repeat=d):
            div = list(coeffs) + [1]
            # long division remainder
            rem = list(poly)
            for i in range(len(rem) - 1, d - 1, -1):
                c = rem[i]
                if c:
                    for j in range(d + 1):
                        rem[i - d + j] = (rem[i - d + j] - c * div[j]) % p
            if all(c % p == 0 for c in rem[:d]):
                return False
    return True


def gf(p, k, poly=None, name=None):
    if poly is None:
        try:
            poly = GF_POLYNOMIALS[(p, k)]
        except KeyError:
            raise BadInput(f"no stored irreducible polynomial for GF({p},{k})")
    poly = tuple(c % p for c in poly)
    if len(poly) != k + 1 or poly[-1] != 1:
        raise BadInput("gf polynomial must be monic of degree k")
    if not _is_irreducible(poly, p):
        raise NotIrreducible(f"{poly} is reducible mod {p}")
    m = p ** k

    def decode(i):
        cs = []
        for _ in range(k):
            cs.append(i % p)
            i //= p
        return tuple(cs)

    def encode(cs):
        i = 0
        for c in reversed(cs):
            i = i * p + c
        return i

    elems = [decode(i) for i in range(m)]
    add = [[encode(tuple((a + b) % p for a, b in zip(x, y))) for y in elems]
           for x in elems]
    mul = [[encode(_poly_mulmod(x, y, poly, p)) for y in elems] for x in elems]
    return make_ring(add, mul, name or f"F{m}", one=encode((1,) + (0,) * (k - 1)))


def matrix_ring(base, n, name=None):
    """Full n x n matrix ring over `base`, elements in row-major mixed radix."""
    m = base.order
    size = m ** (n * n)

    def decode(i):
        es = []
        for _ in range(n * n):
            es.append(i % m)
            i //= m
        return tuple(es)

    def encode(es):
        i = 0
        for e in reversed(es):
            i = i * m + e
        return i

    elems = [decode(i) for i in range(size)]
    add = [[encode(tuple(base.add_table[a][b] for a, b in zip(x, y)))
            for y in elems] for x in elems]

    def mprod(x, y):
        out = []
        for r in range(n):
            for c in range(n):
                acc = base.zero
                for t in range(n):
                    acc = base.add_table[acc][
                        base.mul_table[x[r * n + t]][y[t * n + c]]]
                out.append(acc)
        return encode(tuple(out))

    mul = [[mprod(x, y) for y in elems] for x in elems]
    ident = [base.zero] * (n * n)
    for r in range(n):
        ident[r * n + r] = base.one
    return make_ring(add, mul, name or f"M{n}({base.name})",
                     one=encode(tuple(ident)))


def triangular2(base, name=None):
    """Upper triangular 2x2 matrices over a base ring; elements (a, b, d)."""
    m = base.order

    def encode(a, b, d):
        return (a * m + b) * m + d

    elems = [(a, b, d) for a in range(m) for b in range(m) for d in range(m)]
    add = [[encode(base.add_table[a][a2], base.add_table[b][b2],
                   base.add_table[d][d2])
            for (a2, b2, d2) in elems] for (a, b, d) in elems]
    mul = [[encode(base.mul_table[a][a2],
                   base.add_table[base.mul_table[a][b2]][base.mul_table[b][d2]],
                   base.mul_table[d][d2])
            for (a2, b2, d2) in elems] for (a, b, d) in elems]
    return make_ring(add, mul, name or f"T2({base.name})",
                     one=encode(base.one, base.zero, base.one))


def dual_numbers(base, name=None):
    """base[eps] with eps^2 = 0; elements (a, b) standing for a + b.eps."""
    m = base.order

    def encode(a, b):
        return a * m + b

    elems = [(a, b) for a in range(m) for b in range(m)]
    add = [[encode(base.add_table[a][a2], base.add_table[b][b2])
            for (a2, b2) in elems] for (a, b) in elems]
    mul = [[encode(base.mul_table[a][a2],
                   base.add_table[base.mul_table[a][b2]][base.mul_table[b][a2]])
            for (a2, b2) in elems] for (a, b) in elems]
    return make_ring(add, mul, name or f"{base.name}[eps]",
                     one=encode(base.one, base.zero))


def square_zero(n, name=None):
    """The abelian group Z/n with all products zero."""
    rng = range(n)
    add = [[(x + y) % n for y in rng] for x in rng]
    mul = [[0] * n for _ in rng]
    return make_ring(add, mul, name or f"SQ{n}", one=None)


def direct_product(r1, r2, name=None):
    m2 = r2.order

    def encode(a, b):
        return a * m2 + b

    elems = [(a, b) for a in range(r1.order) for b in range(m2)]
    add = [[encode(r1.add_table[a][a2], r2.add_table[b][b2])
            for (a2, b2) in elems] for (a, b) in elems]
    mul = [[encode(r1.mul_table[a][a2], r2.mul_table[b][b2])
            for (a2, b2) in elems] for (a, b) in elems]
    one = None
    if r1.one is not None and r2.one is not None:
        one = encode(r1.one, r2.one)
    return make_ring(add, mul, name or f"{r1.name}x{r2.name}", one=one)


def construct_ring(spec):
    """Build a ring from a catalog entry {"name", "kind", "params"}."""
    kind = spec["kind"]
    params = spec.get("params", {})
    name = spec.get("name")
    if kind == "zmod":
        return zmod(params["n"], name)
    if kind == "gf":
        return gf(params["p"], params["k"], params.get("poly"), name)
    if kind == "matrix":
        return matrix_ring(construct_ring(params["base"]), params["n"], name)
    if kind == "triangular2":
        return triangular2(construct_ring(params["base"]), name)
    if kind == "dual":
        return dual_numbers(construct_ring(params["base"]), name)
    if kind == "square_zero":
        return square_zero(params["n"], name)
    if kind == "product":
        return direct_product(construct_ring(params["r1"]),
                              construct_ring(params["r2"]), name)
    if kind == "table":
        return make_ring(params["add"], params["mul"], name or "table",
                         zero=params.get("zero", 0), one=params.get("one"))
    raise BadInput(f"unknown ring kind {kind!r}")


# ---------------------------------------------------------------------------
# unitalization


def subring(big, elements, name=None):
    """Ring structure induced on a subset closed under + and *.

    Returns (FiniteRing, to_sub dict, to_big tuple).  The subset need not
    contain the identity of `big`; an internal identity is detected."""
    carrier = sorted(elements)
    if big.zero not in elements:
        raise BadInput("subring must contain zero")
    to_sub = {x: i for i, x in enumerate(carrier)}
    for x in carrier:
        for y in carrier:
            if big.add_table[x][y] not in elements \
                    or big.mul_table[x][y] not in elements:
                raise BadInput("subset not closed under ring operations")
    add = [[to_sub[big.add_table[x][y]] for y in carrier] for x in carrier]
    mul = [[to_sub[big.mul_table[x][y]] for y in carrier] for x in carrier]
    one = None
    for i, e in enumerate(carrier):
        if all(big.mul_table[e][x] == x and big.mul_table[x][e] == x
               for x in carrier):
            one = i
            break
    sub = make_ring(add, mul, name or f"{big.name}|sub{len(carrier)}",
                    zero=to_sub[big.zero], one=one, check=False)
    return sub, to_sub, tuple(carrier)


@dataclass(frozen=True)
class Unitalization:
    ring: FiniteRing          # A + Z/N with the adjoined unit
    embed: tuple              # carrier map A -> ring (ideal embedding)
    aug: tuple                # carrier map ring -> Z/N (split augmentation)
    scalar_modulus: int
    finite_truncation: bool = True


def unitalize_finite(a, scalar_modulus=None):
    """Adjoin a unit over Z/N, N a multiple of the additive exponent of `a`.

    Elements are pairs (x, n) with product
    (x, n)(y, m) = (xy + m.x + n.y, nm); encoded as x*N + n.
    """
    n_mod = scalar_modulus or a.char_exponent
    if n_mod % a.char_exponent:
        raise BadInput("scalar modulus must kill the additive group")
    scalars = [[a.times(n, x) for n in range(n_mod)] for x in range(a.order)]

    def encode(x, n):
        return x * n_mod + n

    elems = [(x, n) for x in range(a.order) for n in range(n_mod)]
    add = [[encode(a.add_table[x][y], (n + p) % n_mod)
            for (y, p) in elems] for (x, n) in elems]
    mul = [[encode(
        a.add_table[a.add_table[a.mul_table[x][y]][scalars[x][p]]][scalars[y][n]],
        (n * p) % n_mod)
        for (y, p) in elems] for (x, n) in elems]
    ring = make_ring(add, mul, f"{a.name}~{n_mod}", one=encode(a.zero, 1))
    embed = tuple(encode(x, 0) for x in range(a.order))
    aug = tuple(n for (x, n) in elems)
    return Unitalization(ring=ring, embed=embed, aug=aug,
                         scalar_modulus=n_mod)


# ---------------------------------------------------------------------------
# isomorphism search (small orders only; used by tests and sanity checks)


def _additive_gens(ring):
    """Greedy generating set of the additive group, largest orders first."""
    span = {ring.zero}
    gens = []
    while len(span) < ring.order:
        best = max((x for x in range(ring.order) if x not in span),
                   key=lambda x: additive_order(ring, x))
        gens.append(best)
        new = set(span)
        acc = best
        while acc != ring.zero:
            new |= {ring.add_table[s][acc] for s in span}
            acc = ring.add_table[acc][best]
        span = new
    return gens


def find_ring_isomorphism(r1, r2):
    """Search for a ring isomorphism r1 -> r2; returns a carrier map or None.

    Backtracks over images of additive generators, so it is practical for
    orders up to a few dozen.
    """
    if r1.order != r2.order or (r1.one is None) != (r2.one is None):
        return None
    gens = _additive_gens(r1)
    orders = [additive_order(r1, g) for g in gens]

    def expand(images):
        """Additive extension; None if not well-defined/bijective."""
        phi = {r1.zero: r2.zero}
        frontier = [r1.zero]
        while frontier:
            nxt = []
            for x in frontier:
                for g, img in zip(gens, images):
                    y = r1.add_table[x][g]
                    fy = r2.add_table[phi[x]][img]
                    if y in phi:
                        if phi[y] != fy:
                            return None
                    else:
                        phi[y] = fy
                        nxt.append(y)
            frontier = nxt
        if len(set(phi.values())) != r1.order:
            return None
        return phi

    candidates = [
        [y for y in range(r2.order) if additive_order(r2, y) == o]
        for o in orders
    ]

    for images in itertools.product(*candidates):
        phi = expand(images)
        if phi is None:
            continue
        if r1.one is not None and phi[r1.one] != r2.one:
            continue
        if all(phi[r1.mul_table[x][y]] == r2.mul_table[phi[x]][phi[y]]
               for x in range(r1.order) for y in range(r1.order)):
            return tuple(phi[x] for x in range(r1.order))
    return None
