from klow import catalog, kzero


def _k0(name, n_max=2):
    return kzero.k0_report(catalog.ring(name), n_max=n_max)


def test_idempotent_counts():
    z6 = catalog.ring("Z6")
    assert sorted(e[0][0] for e in kzero.enumerate_idempotents(z6, 1)) \
        == [0, 1, 3, 4]
    f2 = catalog.ring("F2")
    assert len(kzero.enumerate_idempotents(f2, 2)) == 8


def test_k0_golden_values():
    for name in ("F2", "F3", "Z4"):
        g = _k0(name).group
        assert g.free_rank == 1 and g.torsion == ()
    g = _k0("F2xF2").group
    assert g.free_rank == 2 and g.torsion == ()
    g = _k0("M2F2").group
    assert g.free_rank == 1 and g.torsion == ()


def test_k0_rank_map():
    assert _k0("F2").rank_map_iso
    assert _k0("M2F2").rank_map_iso is False  # [e_11] is half of [1]


def test_k0_stabilized():
    assert _k0("F2").monoid.stabilized
    assert _k0("F2xF2").monoid.stabilized


def test_direct_sum_shuffle():
    f2 = catalog.ring("F2")
    e = ((1,),)
    s = kzero.direct_sum(f2, e, f2, e)
    assert len(s) == 2 and s[0][0] == 1 and s[1][1] == 1


def test_class_addition():
    rep = _k0("F2")
    one = ((1,),)
    zero2 = ((0, 0), (0, 0))
    diag = ((1, 0), (0, 1))
    # [1] + [1] = [diag(1,1)] in the monoid
    s = kzero.direct_sum(catalog.ring("F2"), one, catalog.ring("F2"), one)
    assert rep.class_of(s) == rep.class_of(diag)
    assert rep.class_of(zero2) == rep.class_of(((0,),))
