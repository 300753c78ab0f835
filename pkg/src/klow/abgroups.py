"""Finitely generated abelian groups in presentation form.

An `AbGroup` is a cokernel Z^n / (column span of rels).  The normalized
value type `PresentedAbelianGroup` carries invariant factors plus the
coordinates of the presentation generators in the normalized basis, so
elements can be evaluated and homomorphisms compared exactly.
"""

from dataclasses import dataclass

from . import intlinalg as il


@dataclass(frozen=True)
class PresentedAbelianGroup:
    free_rank: int
    torsion: tuple                 # invariant factors d1 | d2 | ..., each >= 2
    generator_images: tuple        # per generator: coords in Z^r (+) Z/d_i

    def same_group(self, other):
        return (self.free_rank == other.free_rank
                and self.torsion == other.torsion)

    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def order(self):
        if self.free_rank:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def coords(self, vec):
        """Normalized coordinates of sum_i vec[i] * generator_i."""
        r, ds = self.free_rank, self.torsion
        out = [0] * (r + len(ds))
        for c, img in zip(vec, self.generator_images):
            if c:
                for k in range(r + len(ds)):
                    out[k] += c * img[k]
        for k, d in enumerate(ds):
            out[r + k] %= d
        return tuple(out)

    def describe(self):
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def group_from_presentation(gens, relations):
    """Cokernel of the relation matrix (each row one relation on `gens`
    generators), normalized via Smith reduction."""
    rel_cols = il.transpose(relations) if relations else []
    a = rel_cols if rel_cols else [[0] * 0 for _ in range(gens)]
    if not relations:
        a = [[] for _ in range(gens)]
    d, u, _ = il.smith_normal_form(a)
    nrel = len(relations)
    diag = [d[i][i] for i in range(min(gens, nrel))]
    free_idx = [i for i in range(gens)
                if i >= len(diag) or diag[i] == 0]
    tors_idx = [i for i in range(len(diag)) if diag[i] > 1]
    torsion = tuple(diag[i] for i in tors_idx)
    images = []
    for g in range(gens):
        col = [u[i][g] for i in range(gens)]
        img = tuple(col[i] for i in free_idx) + tuple(
            col[i] % diag[i] for i in tors_idx)
        images.append(img)
    return PresentedAbelianGroup(free_rank=len(free_idx), torsion=torsion,
                                 generator_images=tuple(images))


class AbGroup:
    """Z^ngens modulo the lattice spanned by relation columns."""

    def __init__(self, ngens, rel_cols):
        self.ngens = ngens
        self.rel_cols = [list(c) for c in rel_cols]

    def rel_matrix(self):
        if not self.rel_cols:
            return [[] for _ in range(self.ngens)]
        return [[c[i] for c in self.rel_cols] for i in range(self.ngens)]

    def presented(self):
        return group_from_presentation(self.ngens,
                                       [list(c) for c in self.rel_cols])

    def elements_equal(self, v, w):
        diff = [a - b for a, b in zip(v, w)]
        if not any(diff):
            return True
        if not self.rel_cols:
            return False
        return il.solve(self.rel_matrix(), diff) is not None

    def is_zero_element(self, v):
        return self.elements_equal(v, [0] * self.ngens)


class AbMap:
    """Homomorphism between presented groups, as a matrix on generators."""

    def __init__(self, src, dst, matrix):
        self.src = src
        self.dst = dst
        self.matrix = [list(r) for r in matrix]     # dst.ngens x src.ngens
        for rel in src.rel_cols:
            img = self.apply(rel)
            if not dst.is_zero_element(img):
                raise ValueError("matrix does not respect source relations")

    def apply(self, vec):
        return [sum(row[j] * vec[j] for j in range(self.src.ngens))
                for row in self.matrix]

    def image_lattice(self):
        cols = [self.apply([1 if i == j else 0 for i in range(self.src.ngens)])
                for j in range(self.src.ngens)]
        return _lattice_basis(cols + self.dst.rel_cols, self.dst.ngens)

    def kernel_lattice(self):
        f = self.matrix if self.src.ngens else [[] for _ in range(self.dst.ngens)]
        rel = self.dst.rel_matrix()
        lat = il.preimage_lattice(f, rel)
        return _lattice_basis(lat + self.src.rel_cols, self.src.ngens)

    def kernel(self):
        """Kernel subgroup with its inclusion into src.

        Returns (AbGroup, inclusion AbMap)."""
        basis = self.kernel_lattice()
        rels = []
        bmat = [[b[i] for b in basis] for i in range(self.src.ngens)]
        for rc in self.src.rel_cols:
            x = il.solve(bmat, rc)
            assert x is not None
            rels.append(x)
        ker = AbGroup(len(basis), rels)
        incl = AbMap(ker, self.src, bmat)
        return ker, incl

    def is_injective(self):
        ker, _ = self.kernel()
        return ker.presented().is_trivial()


def _lattice_basis(cols, rows):
    cols = [c for c in cols if any(c)]
    if not cols:
        return []
    mat = [[c[i] for c in cols] for i in range(rows)]
    return il.hnf_column_basis(mat)


def exact_at(f, g):
    """Is image(f) = kernel(g) at the middle group?  f: A->B, g: B->C."""
    assert f.dst is g.src or f.dst.ngens == g.src.ngens
    img = f.image_lattice()
    ker = g.kernel_lattice()
    return il.lattices_equal(img, ker, f.dst.ngens)


def subgroup_order(lattice, ambient):
    """Order of (lattice + rels)/rels inside `ambient`; None if infinite."""
    basis = _lattice_basis(lattice + ambient.rel_cols, ambient.ngens)
    if not basis:
        return 1
    bmat = [[b[i] for b in basis] for i in range(ambient.ngens)]
    rels = []
    for rc in ambient.rel_cols:
        x = il.solve(bmat, rc)
        assert x is not None
        rels.append(x)
    return AbGroup(len(basis), rels).presented().order()


def express_in_kernel(incl, vec):
    """Coordinates of `vec` (an element of incl.dst known to lie in the
    kernel subgroup) in terms of the kernel generators."""
    src, dst = incl.src, incl.dst
    cols = [incl.apply([1 if i == j else 0 for i in range(src.ngens)])
            for j in range(src.ngens)]
    aug = cols + dst.rel_cols
    if not aug:
        return [0] * src.ngens
    mat = [[c[i] for c in aug] for i in range(dst.ngens)]
    x = il.solve(mat, list(vec))
    if x is None:
        raise ValueError("element does not lie in the subgroup")
    return x[:src.ngens]


def finite_group_presentation(elements, mul, identity):
    """Present a finite abelian group given by a multiplication rule.

    `elements` is an ordered list of hashable values, `mul` a callable.
    One generator per element; relations e_i + e_j - e_{ij} and e_1 = 0.
    """
    index = {g: i for i, g in enumerate(elements)}
    n = len(elements)
    rels = []
    row = [0] * n
    row[index[identity]] = 1
    rels.append(row)
    for i, g in enumerate(elements):
        for j, h in enumerate(elements):
            k = index[mul(g, h)]
            row = [0] * n
            row[i] += 1
            row[j] += 1
            row[k] -= 1
            rels.append(row)
    return AbGroup(n, rels)
