import pytest

from klow import catalog, cone
from klow.errors import IdentityFailed, NotFiniteSupport


def test_alpha0_window():
    f2 = catalog.ring("F2")
    w = cone.window_eval(cone.alpha0(f2), 4)
    ones = {(i, j) for i in range(4) for j in range(4) if w[i][j] == 1}
    assert ones == {(0, 1), (1, 3)}  # entries at (i, 2i), 1-based


def test_sum_ring_identities_small_window():
    out = cone.sum_ring_identities(catalog.ring("F3"), 16)
    assert all(r["pass"] for r in out)


def test_box_plus_e11():
    f2 = catalog.ring("F2")
    e11 = cone._e_unit_matrix(f2, 1, 1)
    s = cone.box_plus(e11, e11)
    ones = {(p, q) for p in range(1, 5) for q in range(1, 5)
            if s.entry(p, q) == f2.one}
    assert ones == {(1, 1), (2, 2)}


def test_phi_infinity_diagonal_positions():
    f2 = catalog.ring("F2")
    m = cone.phi_infinity(cone._e_unit_matrix(f2, 1, 1))
    ones = {p for p in range(1, 65) if m.entry(p, p) == f2.one}
    # the index family 2^{k+1}i - 2^k + 1 at i = 1, k = 0..5
    assert ones == {2, 3, 5, 9, 17, 33}
    off = [(p, q) for p in range(1, 33) for q in range(1, 33)
           if p != q and m.entry(p, q) != f2.zero]
    assert off == []


def test_phi_infinity_absorption():
    z4 = catalog.ring("Z4")
    e12 = cone._e_unit_matrix(z4, 1, 2)
    phi = cone.phi_infinity(e12)
    assert cone.windows_equal(cone.box_plus(e12, phi), phi, 32) is None


def test_phi_infinity_needs_finite_support():
    with pytest.raises(NotFiniteSupport):
        cone.phi_infinity(cone.identity(catalog.ring("F2")))


def test_gamma_membership():
    f2 = catalog.ring("F2")
    assert cone.gamma_membership(cone.alpha0(f2)) == "gamma"
    assert cone.gamma_membership(cone.identity(f2)) == "gamma"


def test_gamma_certificate_soundness_probed():
    f2 = catalog.ring("F2")
    bad = cone.LazyMatrix(f2, lambda p, q: f2.one,
                          lambda p: (1,), lambda q: (1,),
                          value_set=frozenset({f2.zero, f2.one}),
                          row_count=1, col_count=1, description="lying")
    with pytest.raises(IdentityFailed):
        cone.gamma_membership(bad)


def test_verify_cone_runs():
    out = cone.verify_cone(catalog.ring("F2"), window=16)
    assert all(r["pass"] for r in out)
