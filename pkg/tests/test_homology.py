import pytest

from klow import catalog, homology
from klow.errors import AxiomViolation, BudgetExceeded, UnitalInput


def test_hc_of_q():
    q = catalog.algebra("Q")
    cx = homology.build_connes_complex(q, n_max=5)
    assert homology.homology_ranks(cx)[:5] == [1, 0, 1, 0, 1]


def test_hc0_matches_oracle_everywhere():
    for name in catalog.algebra_names():
        alg = catalog.algebra(name)
        cx = homology.build_connes_complex(alg, n_max=1)
        assert homology.homology_ranks(cx)[0] == homology.hc0_oracle(alg)


def test_hc0_m2q_is_one():
    assert homology.hc0_oracle(catalog.algebra("M2Q")) == 1


def test_morita_probe():
    m2q = catalog.algebra("M2Q")
    cx = homology.build_connes_complex(m2q, n_max=3)
    assert homology.homology_ranks(cx)[:3] == [1, 0, 1]


def test_bar_vanishing_unital():
    for name in ("Q", "QxQ", "Qeps"):
        out = homology.unital_bar_check(catalog.algebra(name))
        assert out["vanishes"], name


def test_square_zero_obstruction():
    out = homology.excisiveness_verdict(catalog.algebra("SQ1"))
    assert out["obstructed"] and out["degree"] == 0 and out["dim"] == 1


def test_augmentation_ideal_clear():
    out = homology.excisiveness_verdict(catalog.algebra("IC2"))
    assert not out["obstructed"]
    assert out["hbar"] == [0, 0, 0, 0]


def test_unital_input_rejected():
    with pytest.raises(UnitalInput):
        homology.excisiveness_verdict(catalog.algebra("Q"))
    with pytest.raises(UnitalInput):
        homology.unital_bar_check(catalog.algebra("SQ1"))


def test_associativity_enforced():
    with pytest.raises(AxiomViolation):
        # e0.e0 = e1, e0.e1 = e0 is not associative
        homology.make_algebra("bad", 2, (((0, 1), (1, 0)), ((0, 0), (0, 0))))


def test_unit_enforced():
    with pytest.raises(AxiomViolation):
        homology.make_algebra("bad", 1, (((0,),),), unit=(1,))


def test_budget():
    with pytest.raises(BudgetExceeded):
        homology.build_connes_complex(catalog.algebra("M2Q"), n_max=4,
                                      budget=100)


def test_rank():
    assert homology.rank([[1, 2], [2, 4]]) == 1
    assert homology.rank([[0, 0], [0, 0]]) == 0
    assert homology.rank([[1, 0], [0, 1]]) == 2
