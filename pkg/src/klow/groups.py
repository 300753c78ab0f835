"""Generic closure machinery for finite matrix groups and small groups
given by multiplication tables."""

from .errors import BudgetExceeded


def mulclose(gens, mul, identity, maxsize=None):
    """Multiplicative closure of a generating set (BFS)."""
    els = {identity}
    els.update(gens)
    frontier = list(els)
    while frontier:
        new = []
        for g in gens:
            for x in frontier:
                y = mul(g, x)
                if y not in els:
                    els.add(y)
                    new.append(y)
                    if maxsize and len(els) > maxsize:
                        raise BudgetExceeded(len(els), maxsize)
        frontier = new
    return els


def normal_closure(gens, conjugators, mul, identity, maxsize=None):
    """Smallest subgroup containing `gens` that is stable under conjugation
    by the `conjugators` (pairs (c, c_inverse)).

    Alternates multiplicative closure with conjugation sweeps; a set closed
    under conjugation has a conjugation-closed multiplicative closure, so
    the loop terminates with the normal closure.
    """
    seed = list(gens)
    while True:
        els = mulclose(seed, mul, identity, maxsize=maxsize)
        extra = []
        for c, cinv in conjugators:
            for x in els:
                y = mul(mul(c, x), cinv)
                if y not in els:
                    extra.append(y)
        if not extra:
            return els
        seed = list(els) + extra


class TableGroup:
    """Finite group on indices 0..n-1 with an explicit multiplication
    table; element 0 is the identity.  `labels` keeps caller data."""

    def __init__(self, table, labels):
        self.table = table
        self.labels = labels
        self.n = len(table)
        self.inv = [None] * self.n
        for i in range(self.n):
            for j in range(self.n):
                if table[i][j] == 0:
                    self.inv[i] = j
                    break

    def mul(self, i, j):
        return self.table[i][j]

    def commutator_subgroup(self):
        comms = {self.table[self.table[i][j]][
            self.table[self.inv[i]][self.inv[j]]]
            for i in range(self.n) for j in range(self.n)}
        return subgroup_closure(self, comms)

    def is_abelian(self):
        return all(self.table[i][j] == self.table[j][i]
                   for i in range(self.n) for j in range(self.n))

    def quotient(self, normal):
        """Quotient by a normal subgroup (set of indices).

        Returns (TableGroup, projection list)."""
        normal = frozenset(normal)
        coset_of = [None] * self.n
        reps = []
        for i in range(self.n):
            if coset_of[i] is not None:
                continue
            idx = len(reps)
            reps.append(i)
            for h in normal:
                coset_of[self.table[h][i]] = idx
        # identity coset must be index of identity's coset; renumber so it is 0
        id_c = coset_of[0]
        if id_c != 0:
            perm = list(range(len(reps)))
            perm[0], perm[id_c] = perm[id_c], perm[0]
            reps[0], reps[id_c] = reps[id_c], reps[0]
            coset_of = [0 if c == id_c else (id_c if c == 0 else c)
                        for c in coset_of]
        table = [[coset_of[self.table[reps[i]][reps[j]]]
                  for j in range(len(reps))] for i in range(len(reps))]
        labels = [self.labels[r] for r in reps]
        return TableGroup(table, labels), coset_of


def subgroup_closure(group, subset):
    els = {0} | set(subset)
    frontier = list(els)
    gens = list(set(subset))
    while frontier:
        new = []
        for g in gens:
            for x in frontier:
                y = group.table[g][x]
                if y not in els:
                    els.add(y)
                    new.append(y)
        frontier = new
    return els


def finite_quotient(elements, normal_set, mul, inv, identity):
    """Quotient of an explicitly listed finite group by a normal subgroup."""
    reps = [identity]
    rep_inv = [identity]
    coset = {}
    for x in sorted(elements):
        for idx, r in enumerate(rep_inv):
            if mul(x, r) in normal_set:
                coset[x] = idx
                break
        else:
            coset[x] = len(reps)
            reps.append(x)
            rep_inv.append(inv(x))
    n = len(reps)
    table = [[coset[_canon(mul(reps[i], reps[j]), elements)]
              for j in range(n)] for i in range(n)]
    return TableGroup(table, reps), coset


def _canon(x, elements):
    if x not in elements:
        raise AssertionError("product left the subgroup")
    return x


def coset_group(big_set, subgroup, gens, mul, inv, identity, maxsize=None):
    """The quotient (group generated by `gens`) / `subgroup` as a TableGroup.

    `subgroup` must be normal in the generated group.  `big_set` may be None;
    when given, membership of discovered elements is asserted against it.
    Coset representatives are discovered by BFS; labels are the reps.
    """
    reps = [identity]
    rep_inv = [identity]

    def coset_of(x):
        for idx, r in enumerate(rep_inv):
            if mul(x, r) in subgroup:
                return idx
        return None

    frontier = [identity]
    while frontier:
        new = []
        for r in frontier:
            for g in gens:
                x = mul(r, g)
                if big_set is not None and x not in big_set:
                    raise AssertionError("generator left the ambient group")
                if coset_of(x) is None:
                    reps.append(x)
                    rep_inv.append(inv(x))
                    new.append(x)
                    if maxsize and len(reps) > maxsize:
                        raise BudgetExceeded(len(reps), maxsize)
        frontier = new
    n = len(reps)
    table = [[coset_of(mul(reps[i], reps[j])) for j in range(n)]
             for i in range(n)]
    return TableGroup(table, reps)
