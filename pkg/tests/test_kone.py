import pytest

from klow import catalog, kone
from klow import rmatrix as rm
from klow.errors import IdentityFailed


def _k1(name, n=2):
    rep = kone.k1_report(catalog.ring(name), n_levels=(n,))
    return rep.levels[-1][1]


def test_k1_of_fields_is_unit_group():
    assert _k1("F3").torsion == (2,)
    assert _k1("F4").torsion == (3,)
    assert _k1("F5").torsion == (4,)


def test_k1_z4():
    g = _k1("Z4")
    assert g.free_rank == 0 and g.torsion == (2,)


def test_k1_dual_numbers():
    assert _k1("F3eps").torsion == (6,)


def test_k1_commutative_units_map_injective():
    rep = kone.k1_report(catalog.ring("F5"), n_levels=(2,))
    assert rep.units_map_injective is True


def test_k1_stability_f3():
    rep = kone.k1_report(catalog.ring("F3"), n_levels=(1, 2))
    assert rep.stable is True


def test_whitehead_samples():
    out = kone.whitehead_sample_check(catalog.ring("Z4"), 25)
    assert out["mismatches"] == 0 and out["samples"] == 25


def test_whitehead_single_factorization():
    ring = catalog.ring("F3")
    alpha = ((2, 1), (1, 1))
    factors = kone.whitehead_factorization(ring, alpha)
    inv = rm.mat_inverse(ring, alpha)
    target = rm.block2(ring, alpha, rm.zero_mat(ring, 2),
                       rm.zero_mat(ring, 2), inv)
    assert kone.whitehead_product(ring, factors) == target
    assert all(kone._is_elementary(ring, f) for f in factors)


def test_whitehead_rejects_singular():
    ring = catalog.ring("F3")
    with pytest.raises(Exception):
        kone.whitehead_factorization(ring, ((1, 1), (1, 1)))


def test_structural_identities():
    out = kone.structural_identities_check(catalog.ring("F2"))
    assert out["j2_j3_conjugation"] and out["phi_vw_multiplicative"]


def test_is_elementary_rejects_diag():
    ring = catalog.ring("F3")
    assert not kone._is_elementary(ring, ((2, 0), (0, 2)))
    assert kone._is_elementary(ring, ((1, 2), (0, 1)))


def test_gl_brute_matches_generated():
    ring = catalog.ring("F2")
    brute = kone.enumerate_gl(ring, 2, "brute")
    gen = kone.enumerate_gl(ring, 2, "generated")
    assert brute.elements == gen.elements
    assert len(brute.elements) == 6  # |GL_2(F_2)|
