from klow import catalog, rings
from klow.errors import BadInput

import pytest


def test_catalog_orders_and_units():
    assert catalog.ring("F4").order == 4
    assert len(catalog.ring("F4").units()) == 3
    assert sorted(catalog.ring("Z4").units()) == [1, 3]
    assert catalog.ring("M2F2").order == 16
    assert catalog.ring("T2F3").order == 27
    assert catalog.ring("SQ2").one is None


def test_f4_is_not_z4():
    assert rings.find_ring_isomorphism(catalog.ring("F4"),
                                       catalog.ring("Z4")) is None


def test_f2eps_is_not_z4():
    # both are local of order 4 and characteristic 2 additively differs
    assert rings.find_ring_isomorphism(catalog.ring("F2eps"),
                                       catalog.ring("Z4")) is None


def test_self_isomorphism():
    r = catalog.ring("F2xF2")
    iso = rings.find_ring_isomorphism(r, r)
    assert iso is not None


def test_char_exponent():
    assert catalog.ring("Z4").char_exponent == 4
    assert catalog.ring("F4").char_exponent == 2
    assert catalog.ring("F3eps").char_exponent == 3


def test_subring():
    z4 = catalog.ring("Z4")
    sub, to_sub, to_big = rings.subring(z4, {0, 2})
    assert sub.order == 2 and sub.one is None
    assert to_big[to_sub[2]] == 2
    with pytest.raises(BadInput):
        rings.subring(z4, {0, 1, 2})  # not closed under addition


def test_unitalization_embeds():
    a = rings.square_zero(3)
    ua = rings.unitalize_finite(a, scalar_modulus=3)
    assert ua.ring.order == 9
    assert ua.ring.one is not None


def test_digest_distinguishes():
    assert catalog.ring("F4").digest() != catalog.ring("Z4").digest()
    assert catalog.ring("F4").digest() == catalog.ring("F4").digest()
