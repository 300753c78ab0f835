import random

import pytest

from klow import catalog, excision, rings
from klow.errors import AxiomViolation, LiftMismatch


def test_extension_validation():
    z4 = catalog.ring("Z4")
    f2 = catalog.ring("F2")
    with pytest.raises(AxiomViolation):
        # proj is not multiplicative
        excision.make_extension(z4, {0, 2}, f2, [0, 0, 1, 1])


def test_ideal_ring_is_square_zero():
    ext = catalog.extension("Z4_mod2")
    a, _, _ = excision.ideal_ring(ext)
    assert a.order == 2 and a.one is None
    assert all(a.mul_table[x][y] == a.zero
               for x in range(2) for y in range(2))


def test_nonunital_k1_of_square_zero():
    a = rings.square_zero(3)
    out = excision.nonunital_k1(a, scalar_modulus=3)
    assert out.presented.torsion == (3,)


def test_nonunital_k0_of_split_ideal():
    # F3 x 0 inside F3 x F3: the ideal is unital, K0 = Z
    ext = catalog.extension("F3xF3_second")
    a, _, _ = excision.ideal_ring(ext)
    out = excision.nonunital_k0(a, scalar_modulus=3)
    assert out.presented.free_rank == 1 and out.presented.torsion == ()


def test_boundary_of_liftable_unit_is_zero():
    ext = catalog.extension("Z4_mod2")
    vec, k0a = excision.boundary_class(ext, ((1,),))
    assert not any(vec)


def test_boundary_lift_mismatch():
    ext = catalog.extension("Z4_mod2")
    with pytest.raises(LiftMismatch):
        excision.boundary_class(ext, ((1,),), ghat=((2,),))


def test_boundary_lift_independence_small():
    ext = catalog.extension("F3eps_aug")
    ctx = excision._boundary_context(ext)
    rng = random.Random(7)
    units = sorted(ext.C.units())
    preim = {c: [b for b in range(ext.B.order) if ext.proj[b] == c]
             for c in range(ext.C.order)}
    for _ in range(10):
        u = rng.choice(units)
        g = ((u,),)
        ghat = ((rng.choice(preim[u]),),)
        base, _ = excision.boundary_class(ext, g, context=ctx)
        other, _ = excision.boundary_class(ext, g, ghat=ghat, context=ctx)
        assert base == other


def test_six_term_z4():
    ext = catalog.extension("Z4_mod2")
    nodes, groups, maps = excision.six_term_check(ext)
    assert all(n["exact"] for n in nodes)
    assert groups["K1A"].torsion == (2,)
    assert groups["K1C"].is_trivial()
    assert groups["K0B"].free_rank == 1


def test_six_term_split_k0_injective():
    ext = catalog.extension("F3xF3_second")
    nodes, groups, maps = excision.six_term_check(ext)
    assert all(n["exact"] for n in nodes)
    assert maps["K0A->K0B"].is_injective()
