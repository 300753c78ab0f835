"""K_0 of finite unital rings: idempotent enumeration, conjugation orbits,
the direct-sum monoid, and group completion with certified stabilization."""

import itertools
from dataclasses import dataclass
from functools import lru_cache

from . import rmatrix as rm
from .abgroups import group_from_presentation
from .errors import BudgetExceeded, NotUnital, RingMismatch

DEFAULT_IDEM_BUDGET = 1_000_000


def enumerate_idempotents(ring, n, budget=DEFAULT_IDEM_BUDGET):
    """All e in M_n(R) with e^2 = e, in lexicographic order."""
    if ring.one is None:
        raise NotUnital(ring.name)
    count = ring.order ** (n * n)
    if count > budget:
        raise BudgetExceeded(count, budget)
    out = []
    for flat in itertools.product(range(ring.order), repeat=n * n):
        e = tuple(flat[i * n:(i + 1) * n] for i in range(n))
        if rm.mat_mul(ring, e, e) == e:
            out.append(e)
    return out


def default_shuffle(m):
    """Index split for the interleaving sum on a 2m-window: first operand
    at even positions, second at odd."""
    return tuple(range(0, 2 * m, 2)), tuple(range(1, 2 * m, 2))


def direct_sum(ring_a, a, ring_b, b, shuffle=None):
    """Interleaved direct sum.  Both operands are zero-padded to the common
    dimension m = max(dim a, dim b); the result has dimension 2m, with a's
    entries on the first index set of the shuffle and b's on the second."""
    if ring_a is not ring_b and ring_a.digest() != ring_b.digest():
        raise RingMismatch(ring_a.name, ring_b.name)
    ring = ring_a
    m = max(rm.dim(a), rm.dim(b))
    a = rm.pad(ring, a, m)
    b = rm.pad(ring, b, m)
    pos_a, pos_b = shuffle if shuffle is not None else default_shuffle(m)
    assert sorted(pos_a + pos_b) == list(range(2 * m))
    out = [[ring.zero] * (2 * m) for _ in range(2 * m)]
    for i in range(m):
        for j in range(m):
            out[pos_a[i]][pos_a[j]] = a[i][j]
            out[pos_b[i]][pos_b[j]] = b[i][j]
    return tuple(map(tuple, out))


def conjugation_orbits(idems, ring, n):
    """Partition idempotents into GL_n-conjugation orbits by closure under
    conjugation with the standard generator set.

    Returns (classes, class_of) where classes is a list of orbit frozensets
    keyed by minimal representative and class_of maps idempotent -> index."""
    conj = [(g, rm.require_inverse(ring, g)) for g in rm.gl_generators(ring, n)]
    remaining = set(idems)
    orbits = []
    while remaining:
        seed = min(remaining)
        orbit = {seed}
        frontier = [seed]
        while frontier:
            new = []
            for x in frontier:
                for g, ginv in conj:
                    y = rm.mat_mul(ring, rm.mat_mul(ring, g, x), ginv)
                    if y not in orbit:
                        orbit.add(y)
                        new.append(y)
            frontier = new
        assert orbit <= remaining
        remaining -= orbit
        orbits.append(frozenset(orbit))
    orbits.sort(key=lambda o: min(o))
    class_of = {}
    for idx, orbit in enumerate(orbits):
        for x in orbit:
            class_of[x] = idx
    return orbits, class_of


@dataclass
class IdempotentClass:
    representative: tuple
    level: int
    orbit_size_at_level: int


@dataclass
class DirectSumMonoid:
    classes: list
    sum_table: dict
    zero_class: int
    certified_to: int
    stabilized: bool


@dataclass
class K0Report:
    ring_name: str
    n_max: int
    group: object                 # PresentedAbelianGroup
    monoid: DirectSumMonoid
    rank_map_iso: bool
    class_vectors: list           # generator vector of each class
    relations: list               # group-completion relation vectors

    def class_of(self, e):
        """Global class index of an idempotent of dimension <= n_max."""
        return self._lookup[len(e) - 1][e]

    def class_vector(self, e):
        v = [0] * len(self.monoid.classes)
        v[self.class_of(e)] = 1
        return v

    def to_json(self):
        return {
            "ring": self.ring_name,
            "n_max": self.n_max,
            "classes": [{"level": c.level,
                         "rep": [list(r) for r in c.representative]}
                        for c in self.monoid.classes],
            "k0": {"free_rank": self.group.free_rank,
                   "torsion": list(self.group.torsion)},
            "stabilized": self.monoid.stabilized,
            "rank_map_iso": self.rank_map_iso,
        }


def _orthogonal_splits(ring, idems_at_level, e):
    """Pairs (e1, e2) of orthogonal idempotents with e1 + e2 = e."""
    out = []
    zero = rm.zero_mat(ring, rm.dim(e))
    for e1 in idems_at_level:
        if e1 == zero or e1 == e:
            continue
        if rm.mat_mul(ring, e, e1) != e1 or rm.mat_mul(ring, e1, e) != e1:
            continue
        e2 = rm.mat_sub(ring, e, e1)
        if rm.mat_mul(ring, e2, e2) == e2:
            out.append((e1, e2))
    return out


@lru_cache(maxsize=None)
def k0_report(ring, n_max=2, budget=DEFAULT_IDEM_BUDGET):
    if ring.one is None:
        raise NotUnital(ring.name)
    idems, orbit_sets, lookups = [], [], []
    for n in range(1, n_max + 1):
        level_idems = enumerate_idempotents(ring, n, budget)
        orbits, class_of = conjugation_orbits(level_idems, ring, n)
        idems.append(level_idems)
        orbit_sets.append(orbits)
        lookups.append(class_of)

    # identify classes across levels via the corner embedding e -> pad(e):
    # pad a representative of every known class up one level and match it
    # against the local orbits there
    classes = []                  # global IdempotentClass list
    to_global = []                # per level: local class index -> global
    current_rep = []              # per global class: a rep at current level
    for n in range(1, n_max + 1):
        from_below = {}
        for g, rep in enumerate(current_rep):
            padded = rm.pad(ring, rep, n)
            from_below[lookups[n - 1][padded]] = g
            current_rep[g] = padded
        mapping = []
        for idx, orbit in enumerate(orbit_sets[n - 1]):
            g = from_below.get(idx)
            if g is None:
                g = len(classes)
                classes.append(IdempotentClass(min(orbit), n, len(orbit)))
                current_rep.append(min(orbit))
            mapping.append(g)
        to_global.append(mapping)

    def global_class(e):
        n = rm.dim(e)
        return to_global[n - 1][lookups[n - 1][e]]

    zero_class = global_class(rm.zero_mat(ring, 1))

    # sums via the interleaving, where the window allows it
    sum_table = {}
    for i, ci in enumerate(classes):
        for j, cj in enumerate(classes):
            d = 2 * max(ci.level, cj.level)
            if d <= n_max:
                s = direct_sum(ring, ci.representative,
                               ring, cj.representative)
                sum_table[(i, j)] = global_class(s)
    # supplementary sum relations from orthogonal decompositions: for
    # orthogonal idempotents e1, e2 the class of e1 + e2 is the class of
    # their direct sum, so splits extend the table beyond the 2m window
    for n in range(1, n_max + 1):
        for orbit in orbit_sets[n - 1]:
            e = min(orbit)
            for e1, e2 in _orthogonal_splits(ring, idems[n - 1], e):
                key = (global_class(e1), global_class(e2))
                sum_table.setdefault(key, global_class(e))
                sum_table.setdefault((key[1], key[0]), global_class(e))

    # group completion: free abelian on classes, g_zero = 0,
    # g_i + g_j - g_{i (+) j} for every recorded sum
    k = len(classes)
    relations = []
    zero_rel = [0] * k
    zero_rel[zero_class] = 1
    relations.append(zero_rel)
    for (i, j), s in sorted(sum_table.items()):
        row = [0] * k
        row[i] += 1
        row[j] += 1
        row[s] -= 1
        if any(row):
            relations.append(row)
    group = group_from_presentation(k, relations)

    stabilized = _check_stabilized(ring, n_max, orbit_sets, idems,
                                   classes, global_class)
    monoid = DirectSumMonoid(classes, sum_table, zero_class,
                             certified_to=n_max, stabilized=stabilized)

    # Z -> K_0, 1 -> [p_1]
    p1 = global_class(((ring.one,),))
    p1_el = group.generator_images[p1]
    rank_map_iso = (group.free_rank == 1 and not group.torsion
                    and abs(p1_el[0]) == 1)

    report = K0Report(ring.name, n_max, group, monoid, rank_map_iso,
                      class_vectors=list(group.generator_images),
                      relations=relations)
    report._lookup = [
        {e: to_global[n][lookups[n][e]] for e in idems[n]}
        for n in range(n_max)]
    return report


def _check_stabilized(ring, n_max, orbit_sets, idems, classes, global_class):
    """Every class first seen at level n_max must split as an orthogonal sum
    of idempotents whose classes appear at lower levels."""
    if n_max < 2:
        return False
    for orbit in orbit_sets[n_max - 1]:
        e = min(orbit)
        if classes[global_class(e)].level < n_max:
            continue
        ok = False
        for member in sorted(orbit):
            for e1, e2 in _orthogonal_splits(ring, idems[n_max - 1], member):
                if classes[global_class(e1)].level < n_max \
                        and classes[global_class(e2)].level < n_max:
                    ok = True
                    break
            if ok:
                break
        if not ok:
            return False
    return True
