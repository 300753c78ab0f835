"""Ideal extensions of finite rings: nonunital K-groups, the explicit
boundary map K_1(C) -> K_0(A), six-term exactness, and the triangular-ring
counterexample to split exactness of K_1."""

import itertools
from dataclasses import dataclass
from functools import lru_cache

from . import kone, kzero, rings
from . import rmatrix as rm
from .abgroups import (AbGroup, AbMap, exact_at, express_in_kernel,
                       finite_group_presentation, subgroup_order)
from .errors import (AxiomViolation, BadInput, FieldTooSmall, IdentityFailed,
                     LiftMismatch, NotInIdeal)
from .groups import finite_quotient


@dataclass(frozen=True)
class Extension:
    """0 -> A -> B -> C -> 0 with A given as a subset of B's carrier."""
    B: rings.FiniteRing
    ideal_elements: frozenset
    C: rings.FiniteRing
    proj: tuple                   # carrier map B -> C
    section: tuple = None         # optional carrier map C -> B
    name: str = ""


def make_extension(B, ideal_elements, C, proj, section=None, name=""):
    ideal_elements = frozenset(ideal_elements)
    proj = tuple(proj)
    if B.zero not in ideal_elements:
        raise AxiomViolation("ideal contains zero", ())
    for a in ideal_elements:
        for b in range(B.order):
            if b in ideal_elements and B.add_table[a][b] not in ideal_elements:
                raise AxiomViolation("ideal closed under addition", (a, b))
            if B.mul_table[a][b] not in ideal_elements \
                    or B.mul_table[b][a] not in ideal_elements:
                raise AxiomViolation("two-sided ideal", (a, b))
    for x in range(B.order):
        for y in range(B.order):
            if proj[B.add_table[x][y]] != C.add_table[proj[x]][proj[y]]:
                raise AxiomViolation("proj additive", (x, y))
            if proj[B.mul_table[x][y]] != C.mul_table[proj[x]][proj[y]]:
                raise AxiomViolation("proj multiplicative", (x, y))
    if proj[B.one] != C.one:
        raise AxiomViolation("proj unital", ())
    if set(proj) != set(range(C.order)):
        raise AxiomViolation("proj surjective", ())
    kernel = frozenset(x for x in range(B.order) if proj[x] == C.zero)
    if kernel != ideal_elements:
        raise AxiomViolation("kernel equals ideal", ())
    if section is not None:
        section = tuple(section)
        for c in range(C.order):
            if proj[section[c]] != c:
                raise AxiomViolation("proj o section = id", (c,))
            for d in range(C.order):
                if section[C.add_table[c][d]] \
                        != B.add_table[section[c]][section[d]]:
                    raise AxiomViolation("section additive", (c, d))
                if section[C.mul_table[c][d]] \
                        != B.mul_table[section[c]][section[d]]:
                    raise AxiomViolation("section multiplicative", (c, d))
    return Extension(B, ideal_elements, C, proj, section, name)


def ideal_ring(ext):
    """The ideal as a nonunital ring plus carrier maps to/from B."""
    return rings.subring(ext.B, ext.ideal_elements, name=f"{ext.name or ext.B.name}:ideal")


# ---------------------------------------------------------------------------
# nonunital K-theory via the truncated unitalization


@dataclass
class NonunitalK1:
    group: AbGroup                # one generator per abelianized class
    presented: object
    unitalization: object
    finite_truncation: bool
    _class_data: tuple

    def class_of(self, g):
        """Abelianized class of a matrix in GL_n(A) (entries in the
        unitalized ring, congruent to 1 under the augmentation)."""
        coset, proj = self._class_data
        return proj[coset[g]]

    def class_vector(self, g):
        v = [0] * self.group.ngens
        v[self.class_of(g)] = 1
        return v


def gl_of_ideal(ua, n):
    """GL_n(A) = matrices over the unitalization that are invertible and
    map to the identity under the augmentation."""
    ring = ua.ring
    nmod = ua.scalar_modulus
    diag_fiber = [x for x in range(ring.order) if ua.aug[x] == 1 % nmod]
    off_fiber = [x for x in range(ring.order) if ua.aug[x] == 0]
    out = []
    slots = [[off_fiber, diag_fiber][i == j]
             for i in range(n) for j in range(n)]
    for flat in itertools.product(*slots):
        g = tuple(flat[i * n:(i + 1) * n] for i in range(n))
        if rm.mat_is_invertible(ring, g):
            out.append(g)
    return out


def nonunital_k1(a, scalar_modulus=None, level=2):
    """K_1(A) = GL_n(A) / (E_n(A~) intersect GL_n(A)), abelianized."""
    ua = rings.unitalize_finite(a, scalar_modulus)
    ring = ua.ring
    gla = gl_of_ideal(ua, level)
    e_set = kone._elementary_normal_set(ring, level)
    inter = frozenset(e_set) & frozenset(gla)
    mul = lambda x, y: rm.mat_mul(ring, x, y)
    quot, coset = finite_quotient(
        gla, inter, mul, lambda x: rm.require_inverse(ring, x),
        rm.identity_mat(ring, level))
    derived = quot.commutator_subgroup()
    abelian, proj = quot.quotient(derived)
    group = finite_group_presentation(list(range(abelian.n)), abelian.mul, 0)
    return NonunitalK1(group, group.presented(), ua, True, (coset, proj))


@dataclass
class NonunitalK0:
    group: AbGroup                # kernel presentation
    presented: object
    inclusion: AbMap              # kernel -> K_0 of the unitalization
    unitalization: object
    ambient_report: object        # kzero report of the unitalization
    finite_truncation: bool

    def class_vector(self, e):
        """Vector in the ambient K_0 generators of an idempotent over the
        unitalization."""
        return self.ambient_report.class_vector(e)

    def express(self, ambient_vec):
        return express_in_kernel(self.inclusion, ambient_vec)


def nonunital_k0(a, scalar_modulus=None, n_max=2):
    """K_0(A) = ker(K_0(A~) -> K_0(Z/N))."""
    ua = rings.unitalize_finite(a, scalar_modulus)
    nmod = ua.scalar_modulus
    rep = kzero.k0_report(ua.ring, n_max=n_max)
    zn = rings.zmod(nmod)
    rep_z = kzero.k0_report(zn, n_max=n_max)
    src = AbGroup(len(rep.monoid.classes), rep.relations)
    dst = AbGroup(len(rep_z.monoid.classes), rep_z.relations)
    matrix = [[0] * src.ngens for _ in range(dst.ngens)]
    for i, cls in enumerate(rep.monoid.classes):
        image = rm.apply_entrywise(lambda x: ua.aug[x] % zn.order,
                                   cls.representative)
        matrix[rep_z.class_of(image)][i] = 1
    aug_map = AbMap(src, dst, matrix)
    ker, incl = aug_map.kernel()
    return NonunitalK0(ker, ker.presented(), incl, ua, rep, True)


def nonunital_k(a, which, scalar_modulus=None):
    if which == "K0":
        return nonunital_k0(a, scalar_modulus).presented
    if which == "K1":
        return nonunital_k1(a, scalar_modulus).presented
    raise BadInput(f"which must be K0 or K1, got {which!r}")


# ---------------------------------------------------------------------------
# the boundary map


def _embedded_product(ext):
    """B x Z/N together with the injective image of A~ = A + Z/N inside it,
    via (x, n) -> (x + n.1_B, n)."""
    nmod = ext.B.char_exponent
    prod = rings.direct_product(ext.B, rings.zmod(nmod),
                                name=f"{ext.B.name}xZ{nmod}")
    return prod, nmod


def _prod_encode(ext, prod, nmod, b, n):
    return b * nmod + n          # direct_product uses row-major pairs


@lru_cache(maxsize=None)
def _boundary_context(ext):
    a_ring, to_sub, to_big = ideal_ring(ext)
    nmod = ext.B.char_exponent
    k0a = nonunital_k0(a_ring, scalar_modulus=nmod)
    prod, _ = _embedded_product(ext)
    return a_ring, to_sub, to_big, nmod, k0a, prod


def default_lift(ext, g):
    """Lexicographically smallest entrywise lift of a matrix over C."""
    lifts = [min(b for b in range(ext.B.order) if ext.proj[b] == c)
             for c in range(ext.C.order)]
    return rm.apply_entrywise(lambda c: lifts[c], g)


def boundary_class(ext, g, ghat=None, gstar=None, context=None):
    """The class [h p_n h^{-1}] - [p_n] in K_0(A) of an invertible matrix g
    over C, via the explicit 4-factor matrix h over B x Z/N.

    Returns (vector over K_0(A) generators, k0a)."""
    a_ring, to_sub, to_big, nmod, k0a, prod = \
        context if context is not None else _boundary_context(ext)
    n = rm.dim(g)
    C = ext.C
    ginv = rm.require_inverse(C, g)
    if ghat is None:
        ghat = default_lift(ext, g)
    if gstar is None:
        gstar = default_lift(ext, ginv)
    if rm.apply_entrywise(lambda b: ext.proj[b], ghat) != g:
        raise LiftMismatch("ghat does not lift g")
    if rm.apply_entrywise(lambda b: ext.proj[b], gstar) != ginv:
        raise LiftMismatch("gstar does not lift g^{-1}")

    # embed the lifts into B x Z/N with scalar part = identity pattern
    enc = lambda b, m: _prod_encode(ext, prod, nmod, b, m)
    gb = tuple(tuple(enc(ghat[i][j], 1 if i == j else 0) for j in range(n))
               for i in range(n))
    gsb = tuple(tuple(enc(gstar[i][j], 1 if i == j else 0) for j in range(n))
                for i in range(n))
    one = rm.identity_mat(prod, n)
    zero = rm.zero_mat(prod, n)
    neg = lambda m: rm.mat_sub(prod, rm.zero_mat(prod, n), m)
    h = rm.mat_mul(prod, rm.block2(prod, one, gb, zero, one),
                   rm.block2(prod, one, zero, neg(gsb), one))
    h = rm.mat_mul(prod, h, rm.block2(prod, one, gb, zero, one))
    h = rm.mat_mul(prod, h, rm.block2(prod, zero, neg(one), one, zero))

    # h must map to diag(g, g^{-1}) over C
    h_c = rm.apply_entrywise(lambda x: ext.proj[x // nmod], h)
    if h_c != rm.block2(C, g, rm.zero_mat(C, n), rm.zero_mat(C, n), ginv):
        raise IdentityFailed("proj(h) = diag(g, g^{-1})", h_c)

    p_n = tuple(tuple(enc(ext.B.one, 1) if (i == j and i < n)
                      else enc(ext.B.zero, 0)
                      for j in range(2 * n)) for i in range(2 * n))
    hinv = rm.require_inverse(prod, h)
    q = rm.mat_mul(prod, rm.mat_mul(prod, h, p_n), hinv)

    # pull q and p_n back along A~ -> B x Z/N, (x, m) -> (x + m.1_B, m)
    ua = k0a.unitalization

    def pull(x):
        b, m = divmod(x, nmod)
        b0 = ext.B.sub(b, ext.B.times(m, ext.B.one))
        if b0 not in ext.ideal_elements:
            raise NotInIdeal(b0)
        return _ua_encode(ua, to_sub[b0], m)

    q_t = rm.apply_entrywise(pull, q)
    p_t = rm.apply_entrywise(pull, p_n)
    assert rm.is_idempotent(ua.ring, q_t)
    vec = [x - y for x, y in zip(k0a.class_vector(q_t),
                                 k0a.class_vector(p_t))]
    return k0a.express(vec), k0a


def _ua_encode(ua, x_sub, m):
    return x_sub * ua.scalar_modulus + m % ua.scalar_modulus


# ---------------------------------------------------------------------------
# six-term exactness


def _unit_rep_for_class(level, k):
    """A unit u with class(diag(u, 1)) = k in the abelianized level, or
    None."""
    ring = level.ring
    for u in sorted(ring.units()):
        g = rm.corner_embed_gl(ring, ((u,),), level.n)
        if level.class_of(g) == k:
            return u
    return None


def six_term_check(ext, level=2):
    """Exactness of K1(A) -> K1(B) -> K1(C) -> K0(A) -> K0(B) -> K0(C) at
    the four interior nodes; returns the per-node verdicts and the groups."""
    B, C = ext.B, ext.C
    a_ring, to_sub, to_big, nmod, k0a, prod = _boundary_context(ext)
    k1a = nonunital_k1(a_ring, scalar_modulus=nmod, level=level)
    k1b = kone.k1_level(B, level)
    k1c = kone.k1_level(C, level)
    k0b = kzero.k0_report(B, n_max=level)
    k0c = kzero.k0_report(C, n_max=level)
    ua = k1a.unitalization

    def ua_to_b(x):
        xa, m = divmod(x, ua.scalar_modulus)
        return B.add_table[to_big[xa]][B.times(m, B.one)]

    # K1(A) -> K1(B)
    m1 = [[0] * k1a.group.ngens for _ in range(k1b.group.ngens)]
    for i in range(k1a.group.ngens):
        rep = _abelian_rep(k1a, i)
        g = rm.apply_entrywise(ua_to_b, rep)
        m1[k1b.class_of(g)][i] = 1
    f_ab = AbMap(k1a.group, k1b.group, m1)

    # K1(B) -> K1(C)
    m2 = [[0] * k1b.group.ngens for _ in range(k1c.group.ngens)]
    for i, rep in enumerate(_level_abelian_reps(k1b)):
        g = rm.apply_entrywise(lambda b: ext.proj[b], rep)
        m2[k1c.class_of(g)][i] = 1
    f_bc = AbMap(k1b.group, k1c.group, m2)

    # boundary: each K1(C) generator through a diagonal unit representative
    ctx = (a_ring, to_sub, to_big, nmod, k0a, prod)
    m3 = [[0] * k1c.group.ngens for _ in range(k0a.group.ngens)]
    for k in range(k1c.group.ngens):
        u = _unit_rep_for_class(k1c, k)
        if u is None:
            raise BadInput(
                "K1(C) class without a diagonal unit representative")
        vec, _ = boundary_class(ext, ((u,),), context=ctx)
        for r in range(k0a.group.ngens):
            m3[r][k] = vec[r]
    f_cd = AbMap(k1c.group, k0a.group, m3)

    # K0(A) -> K0(B): kernel generators -> ambient classes -> B classes
    amb = k0a.ambient_report
    amb_to_b = [[0] * len(amb.monoid.classes)
                for _ in range(len(k0b.monoid.classes))]
    for i, cls in enumerate(amb.monoid.classes):
        e = rm.apply_entrywise(ua_to_b, cls.representative)
        amb_to_b[k0b.class_of(e)][i] = 1
    k0b_group = AbGroup(len(k0b.monoid.classes), k0b.relations)
    k0c_group = AbGroup(len(k0c.monoid.classes), k0c.relations)
    m4 = [[sum(amb_to_b[r][s] * k0a.inclusion.matrix[s][j]
               for s in range(len(amb.monoid.classes)))
           for j in range(k0a.group.ngens)]
          for r in range(k0b_group.ngens)]
    f_de = AbMap(k0a.group, k0b_group, m4)

    # K0(B) -> K0(C)
    m5 = [[0] * k0b_group.ngens for _ in range(k0c_group.ngens)]
    for i, cls in enumerate(k0b.monoid.classes):
        e = rm.apply_entrywise(lambda b: ext.proj[b], cls.representative)
        m5[k0c.class_of(e)][i] = 1
    f_ef = AbMap(k0b_group, k0c_group, m5)

    nodes = []
    for at, f, gmap in (("K1B", f_ab, f_bc), ("K1C", f_bc, f_cd),
                        ("K0A", f_cd, f_de), ("K0B", f_de, f_ef)):
        img = f.image_lattice()
        ker = gmap.kernel_lattice()
        nodes.append({
            "at": at,
            "image_order": subgroup_order(img, f.dst),
            "kernel_order": subgroup_order(ker, gmap.src),
            "exact": exact_at(f, gmap),
        })
    groups = {
        "K1A": k1a.presented, "K1B": k1b.presented, "K1C": k1c.presented,
        "K0A": k0a.presented, "K0B": k0b.group, "K0C": k0c.group,
    }
    maps = {"K1A->K1B": f_ab, "K1B->K1C": f_bc, "boundary": f_cd,
            "K0A->K0B": f_de, "K0B->K0C": f_ef}
    return nodes, groups, maps


def _abelian_rep(k1a, i):
    """A GL-matrix representing abelianized generator i of a nonunital K1."""
    coset, proj = k1a._class_data
    return min(g for g, c in coset.items() if proj[c] == i)


def _level_abelian_reps(level):
    """One GL-matrix per abelianized generator of a K1Level, by index."""
    reps = [None] * level.abelian.n
    for idx, g in enumerate(level.quotient.labels):
        k = level.proj[idx]
        if reps[k] is None or g < reps[k]:
            reps[k] = g
    return reps


# ---------------------------------------------------------------------------
# the triangular counterexample


def swan_check(k):
    """K_1 is not split exact: over the upper triangular ring T of a field
    k with |k| >= 3, the relative K_1(T : I) vanishes while K_1(I) is the
    additive group of k."""
    if any(x != k.zero and x not in k.units() for x in range(k.order)):
        raise BadInput("swan_check needs a field")
    if k.order == 2:
        raise FieldTooSmall(
            f"{k.name}: the witness d(lambda) = [g1(mu), g2] needs a unit "
            "mu != 1, so the field must have at least 3 elements")
    T = rings.triangular2(k, name=f"T({k.name})")
    kk = rings.direct_product(k, k, name=f"{k.name}x{k.name}")
    # carriers: T elements are (a, b, d) row-major over k; k x k is (a, d)
    proj = tuple((x // (k.order * k.order)) * k.order + x % k.order
                 for x in range(T.order))
    ideal = frozenset(x for x in range(T.order) if proj[x] == kk.zero)
    ext = make_extension(T, ideal, kk, proj, name=f"swan({k.name})")

    # (a) relative K1: kernel of K1(T) -> K1(k x k) at level 2
    k1t = kone.k1_level(T, 2)
    k1kk = kone.k1_level(kk, 2)
    m = [[0] * k1t.group.ngens for _ in range(k1kk.group.ngens)]
    for i, rep in enumerate(_level_abelian_reps(k1t)):
        g = rm.apply_entrywise(lambda t: proj[t], rep)
        m[k1kk.class_of(g)][i] = 1
    f = AbMap(k1t.group, k1kk.group, m)
    ker, _ = f.kernel()
    relative = ker.presented()

    # (b) K1 of the ideal as a ring in its own right (square-zero on k)
    a_ring, _, _ = ideal_ring(ext)
    k1i = nonunital_k1(a_ring).presented

    # (c) the commutator witness 1 + lambda.eps = [diag(mu,1), [[1, x],[0,1]]]
    mu = next(u for u in sorted(k.units()) if u != k.one)
    witness_ok = True
    t_el = lambda a, b, d: (a * k.order + b) * k.order + d
    for lam in range(k.order):
        x = k.mul_table[lam][k.inv(k.sub(mu, k.one))]
        g1 = t_el(mu, k.zero, k.one)
        g2 = t_el(k.one, x, k.one)
        comm = T.mul_table[T.mul_table[g1][g2]][
            T.mul_table[T.inv(g1)][T.inv(g2)]]
        if comm != t_el(k.one, lam, k.one):
            witness_ok = False
    return {
        "field": k.name,
        "relative_k1": relative,
        "ideal_k1": k1i,
        "witness_identities": witness_ok,
        "split_exact_fails": relative.is_trivial()
        and not k1i.is_trivial(),
    }
