import random

from klow import intlinalg as il


def _random_matrix(rng, r, c, lo=-5, hi=5):
    return [[rng.randint(lo, hi) for _ in range(c)] for _ in range(r)]


def test_snf_properties_random():
    rng = random.Random(0)
    for _ in range(25):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        a = _random_matrix(rng, r, c)
        d, u, v = il.smith_normal_form(a)
        assert il.mat_mul(il.mat_mul(u, a), v) == d
        diag = [d[i][i] for i in range(min(r, c))]
        for i in range(r):
            for j in range(c):
                if i != j:
                    assert d[i][j] == 0
        nz = [x for x in diag if x]
        assert all(x > 0 for x in nz)
        for x, y in zip(nz, nz[1:]):
            assert y % x == 0
        assert abs(il.det(u)) == 1 and abs(il.det(v)) == 1


def test_kernel_basis_random():
    rng = random.Random(1)
    for _ in range(25):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        a = _random_matrix(rng, r, c)
        ker = il.kernel_basis(a)
        for vec in ker:
            img = il.mat_mul(a, [[x] for x in vec])
            assert all(row[0] == 0 for row in img)


def test_solve():
    a = [[2, 0], [0, 3]]
    assert il.solve(a, [4, 9]) == [2, 3]
    assert il.solve(a, [1, 0]) is None


def test_lattices_equal():
    g1 = [[2, 0], [0, 3]]          # generators are column vectors
    g2 = [[2, 3], [2, 0], [0, 3]]  # (2,3) = (2,0) + (0,3): same lattice
    assert il.lattices_equal(g1, g2, 2)
    assert not il.lattices_equal(g1, [[1, 0], [0, 3]], 2)


def test_invariant_factors():
    assert il.invariant_factors([[2, 0], [0, 4]]) == [2, 4]
    assert il.invariant_factors([[0, 0], [0, 0]]) == [0, 0]
