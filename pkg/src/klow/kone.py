"""K_1 of finite unital rings: GL_n modulo the normal closure of the
elementary subgroup, with stabilization reporting and explicit Whitehead
factorizations."""

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache

from . import cache
from . import rmatrix as rm
from .abgroups import AbMap, finite_group_presentation
from .errors import BudgetExceeded, IdentityFailed, NotUnital
from .groups import TableGroup, coset_group, normal_closure

DEFAULT_GL_BUDGET = 300_000
BRUTE_CROSSCHECK_LIMIT = 10_000


@dataclass
class MatrixGroup:
    ring: object
    n: int
    elements: frozenset
    generators: tuple
    complete: bool


def enumerate_gl(ring, n, strategy="brute", budget=DEFAULT_GL_BUDGET):
    """All invertible n x n matrices (brute), or the closure of the
    standard generators (generated, flagged complete only if it matches
    a brute count within budget)."""
    if ring.one is None:
        raise NotUnital(ring.name)
    gens = rm.gl_generators(ring, n)
    if strategy == "brute":
        count = ring.order ** (n * n)
        if count > budget:
            raise BudgetExceeded(count, budget)
        els = frozenset(cache.cached_matrices(
            ("gl", ring.digest(), n, strategy),
            lambda: sorted(m for m in _all_matrices(ring, n)
                           if rm.mat_is_invertible(ring, m))))
        return MatrixGroup(ring, n, els, gens, complete=True)
    if strategy == "generated":
        from .groups import mulclose
        els = mulclose(list(gens), lambda a, b: rm.mat_mul(ring, a, b),
                       rm.identity_mat(ring, n), maxsize=budget)
        complete = False
        if ring.order ** (n * n) <= budget:
            brute = enumerate_gl(ring, n, "brute", budget)
            complete = len(brute.elements) == len(els)
        return MatrixGroup(ring, n, frozenset(els), gens, complete=complete)
    raise ValueError(f"unknown strategy {strategy!r}")


def _all_matrices(ring, n):
    for flat in itertools.product(range(ring.order), repeat=n * n):
        yield tuple(flat[i * n:(i + 1) * n] for i in range(n))


def elementary_closure(ring, n, inside=None, budget=DEFAULT_GL_BUDGET):
    """Normal closure of <1 + a.e_ij> under conjugation by the GL
    generators (equivalently, within the generated GL)."""
    els = _elementary_normal_set(ring, n, budget)
    if inside is not None:
        assert els <= inside.elements
    return MatrixGroup(ring, n, frozenset(els),
                       tuple(rm.elementary_gens(ring, n)), complete=True)


@lru_cache(maxsize=None)
def _elementary_normal_set(ring, n, budget=DEFAULT_GL_BUDGET):
    def compute():
        gens = rm.elementary_gens(ring, n)
        conj = []
        for c in rm.gl_generators(ring, n):
            conj.append((c, rm.require_inverse(ring, c)))
        return sorted(normal_closure(
            gens, conj, lambda a, b: rm.mat_mul(ring, a, b),
            rm.identity_mat(ring, n), maxsize=budget))

    return frozenset(cache.cached_matrices(
        ("normal_set", ring.digest(), n, budget), compute))


class K1Level:
    """GL_n / (normal closure of E_n) at one matrix size, abelianized."""

    def __init__(self, ring, n, budget=DEFAULT_GL_BUDGET):
        self.ring = ring
        self.n = n
        self.normal_set = _elementary_normal_set(ring, n, budget)
        mul = lambda a, b: rm.mat_mul(ring, a, b)
        self.quotient = coset_group(
            None, self.normal_set, rm.gl_generators(ring, n), mul,
            lambda a: rm.require_inverse(ring, a),
            rm.identity_mat(ring, n), maxsize=budget)
        self.derived = self.quotient.commutator_subgroup()
        self.abelian, self.proj = self.quotient.quotient(self.derived)
        self.group = finite_group_presentation(
            list(range(self.abelian.n)), self.abelian.mul, 0)
        self.presented = self.group.presented()
        self._rep_inv = [rm.require_inverse(ring, r)
                         for r in self.quotient.labels]
        self.complete = None
        if ring.order ** (n * n) <= BRUTE_CROSSCHECK_LIMIT:
            brute = enumerate_gl(ring, n, "brute")
            self.complete = (
                len(brute.elements)
                == len(self.normal_set) * self.quotient.n)

    def coset_of(self, g):
        mul = lambda a, b: rm.mat_mul(self.ring, a, b)
        for idx, rinv in enumerate(self._rep_inv):
            if mul(g, rinv) in self.normal_set:
                return idx
        return None

    def class_of(self, g):
        """Abelianized class index of an invertible matrix."""
        idx = self.coset_of(g)
        if idx is None:
            raise ValueError("matrix not in the generated GL")
        return self.proj[idx]

    def class_vector(self, g):
        v = [0] * self.abelian.n
        v[self.class_of(g)] = 1
        return v


@dataclass
class K1Report:
    ring_name: str
    levels: list                  # (n, PresentedAbelianGroup)
    stable: object                # bool or None when only one level
    units_map_injective: object
    complete: object

    def to_json(self):
        return {
            "ring": self.ring_name,
            "levels": [{"n": n, "k1": g.describe()} for n, g in self.levels],
            "stable": self.stable,
            "units_map_injective": self.units_map_injective,
        }


@lru_cache(maxsize=None)
def k1_level(ring, n, budget=DEFAULT_GL_BUDGET):
    return K1Level(ring, n, budget)


def k1_report(ring, n_levels=(2,), budget=DEFAULT_GL_BUDGET):
    levels = [k1_level(ring, n, budget) for n in n_levels]
    stable = None
    if len(levels) >= 2:
        stable = _corner_map_is_iso(levels[0], levels[1])
    units_inj = _units_map_injective(ring, levels[0])
    return K1Report(
        ring_name=ring.name,
        levels=[(lv.n, lv.presented) for lv in levels],
        stable=stable,
        units_map_injective=units_inj,
        complete=all(lv.complete is not False for lv in levels),
    )


def _corner_map_is_iso(lo, hi):
    matrix = [[0] * lo.abelian.n for _ in range(hi.abelian.n)]
    for i, rep in enumerate(lo.abelian.labels):
        g = rm.corner_embed_gl(lo.ring, rep, hi.n)
        matrix[hi.class_of(g)][i] = 1
    f = AbMap(lo.group, hi.group, matrix)
    if not f.is_injective():
        return False
    if not lo.presented.same_group(hi.presented):
        return False
    return True


def _units_map_injective(ring, level):
    classes = {u: level.class_of(
        rm.corner_embed_gl(ring, ((u,),), level.n)) for u in ring.units()}
    image_size = len(set(classes.values()))
    # for a commutative ring the unit group is already abelian
    units = ring.units()
    commutative = all(ring.mul_table[a][b] == ring.mul_table[b][a]
                      for a in units for b in units)
    if commutative:
        return image_size == len(units)
    return None


# ---------------------------------------------------------------------------
# Whitehead factorization


def _block_unitriangular_factors(ring, a, upper):
    """diag-one matrix with block a above (or below) the diagonal, split
    into single-entry elementary matrices."""
    n = len(a)
    out = []
    for i in range(n):
        for j in range(n):
            if a[i][j] != ring.zero:
                if upper:
                    out.append(rm.elementary(ring, 2 * n, i, n + j, a[i][j]))
                else:
                    out.append(rm.elementary(ring, 2 * n, n + i, j, a[i][j]))
    if not out:
        out.append(rm.identity_mat(ring, 2 * n))
    return out


def whitehead_factorization(ring, alpha):
    """Elementary factors whose product is diag(alpha, alpha^{-1}).

    Follows the four-factor shape
        [[1, a], [0, 1]] [[1, 0], [-a^{-1}, 1]] [[1, a], [0, 1]]
        [[0, -1], [1, 0]],
    with the rotation block expanded by the standard three-elementary
    identity."""
    n = len(alpha)
    inv = rm.require_inverse(ring, alpha)
    neg_inv = rm.mat_sub(ring, rm.zero_mat(ring, n), inv)
    minus_one = rm.mat_sub(ring, rm.zero_mat(ring, n),
                           rm.identity_mat(ring, n))
    factors = []
    factors += _block_unitriangular_factors(ring, alpha, upper=True)
    factors += _block_unitriangular_factors(ring, neg_inv, upper=False)
    factors += _block_unitriangular_factors(ring, alpha, upper=True)
    # [[0, -1], [1, 0]] = (1 + (-1).e12)(1 + 1.e21)(1 + (-1).e12) blockwise
    factors += _block_unitriangular_factors(ring, minus_one, upper=True)
    factors += _block_unitriangular_factors(ring, rm.identity_mat(ring, n),
                                            upper=False)
    factors += _block_unitriangular_factors(ring, minus_one, upper=True)
    return factors


def whitehead_product(ring, factors):
    n = len(factors[0])
    acc = rm.identity_mat(ring, n)
    for f in factors:
        acc = rm.mat_mul(ring, acc, f)
    return acc


def _is_elementary(ring, m):
    """Ones on the diagonal and at most one nonzero off-diagonal entry."""
    n = len(m)
    off = 0
    for i in range(n):
        if m[i][i] != ring.one:
            return False
        off += sum(1 for j in range(n) if j != i and m[i][j] != ring.zero)
    return off <= 1


def whitehead_sample_check(ring, samples, size=2, seed=0):
    """Factor `samples` random invertible size x size matrices and verify
    that every factor is elementary and the product is diag(a, a^{-1})."""
    rng = random.Random(int(ring.digest(), 16) + 1000003 * size + seed)
    checked = 0
    while checked < samples:
        a = tuple(tuple(rng.randrange(ring.order) for _ in range(size))
                  for _ in range(size))
        inv = rm.mat_inverse(ring, a)
        if inv is None:
            continue
        factors = whitehead_factorization(ring, a)
        bad = [f for f in factors if not _is_elementary(ring, f)]
        if bad:
            raise IdentityFailed("whitehead factor elementary", bad[0])
        target = rm.block2(ring, a, rm.zero_mat(ring, size),
                           rm.zero_mat(ring, size), inv)
        if whitehead_product(ring, factors) != target:
            raise IdentityFailed("whitehead product = diag(a, a^-1)", a)
        checked += 1
    return {"ring": ring.name, "size": size, "samples": checked,
            "mismatches": 0}


# ---------------------------------------------------------------------------
# structural identities of matrix-stable functors

_J2 = ((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
_J3 = ((0, 0, 1, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1))


def _int_matrix_in(ring, m):
    return tuple(tuple(ring.times(x, ring.one) for x in row) for row in m)


def structural_identities_check(ring, window=4):
    """Verify the J2/J3 conjugation identities and the multiplicativity of
    a |-> W a V for the truncated shift pair, by exact computation."""
    if ring.one is None:
        raise NotUnital(ring.name)
    j2 = _int_matrix_in(ring, _J2)
    j3 = _int_matrix_in(ring, _J3)
    ident = rm.identity_mat(ring, 4)
    if rm.mat_mul(ring, j2, j2) != ident:
        raise IdentityFailed("J2^2 = 1", j2)
    j3sq = rm.mat_mul(ring, j3, j3)
    if rm.mat_mul(ring, j3sq, j3) != ident:
        raise IdentityFailed("J3^3 = 1", j3)
    j2inv = rm.require_inverse(ring, j2)
    j3inv = rm.require_inverse(ring, j3)
    for a in range(ring.order):
        j0 = tuple(tuple(a if (i, j) == (0, 0) else ring.zero
                         for j in range(4)) for i in range(4))
        j1 = tuple(tuple(a if (i, j) == (1, 1) else ring.zero
                         for j in range(4)) for i in range(4))
        for conj, cinv, name in ((j2, j2inv, "J2"), (j3, j3inv, "J3")):
            got = rm.mat_mul(ring, rm.mat_mul(ring, conj, j0), cinv)
            if got != j1:
                raise IdentityFailed(f"{name} j0 {name}^-1 = j1", (a,))
    # truncated shift pair: V = sum e_{i,i+1}, W = V^t on a k x k window
    k = window
    v = tuple(tuple(ring.one if j == i + 1 else ring.zero for j in range(k))
              for i in range(k))
    w = tuple(zip(*v))
    for a in range(ring.order):
        for b in range(ring.order):
            ia = tuple(tuple(a if (i, j) == (0, 0) else ring.zero
                             for j in range(k)) for i in range(k))
            ib = tuple(tuple(b if (i, j) == (0, 0) else ring.zero
                             for j in range(k)) for i in range(k))
            phi_a = rm.mat_mul(ring, rm.mat_mul(ring, w, ia), v)
            phi_b = rm.mat_mul(ring, rm.mat_mul(ring, w, ib), v)
            iab = tuple(tuple(ring.mul_table[a][b] if (i, j) == (0, 0)
                              else ring.zero
                              for j in range(k)) for i in range(k))
            phi_ab = rm.mat_mul(ring, rm.mat_mul(ring, w, iab), v)
            if rm.mat_mul(ring, phi_a, phi_b) != phi_ab:
                raise IdentityFailed("phi^{V,W} multiplicative", (a, b))
    return {"j2_j3_conjugation": True, "phi_vw_multiplicative": True}
