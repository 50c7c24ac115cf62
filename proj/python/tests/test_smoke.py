import json
from fractions import Fraction

import pytest

import subsums


def test_group_parsing():
    g = subsums.Group("Z4xZ2")
    assert g.order == 8
    assert g.factors == [4, 2]
    assert g.canonical_form == [2, 4]
    assert str(g) == "Z4xZ2"
    assert subsums.Group("z2xz2") == subsums.Group("Z2xZ2")
    assert [str(h) for h in subsums.abelian_groups(8)] == ["Z2xZ2xZ2", "Z2xZ4", "Z8"]
    with pytest.raises(ValueError):
        subsums.Group("Q8")


def test_extremal_family_sigma():
    s = [1, 2, 3, -1, -2, -3]
    assert subsums.subset("Z14", s) == [1, 2, 3, 11, 12, 13]
    sums = subsums.sigma("Z14", s)
    assert len(sums) == 13
    assert 7 not in sums
    assert subsums.is_aperiodic("Z14", sums)


def test_set_literals():
    assert subsums.subset("Z4xZ2", [(1, 0), (0, 1)]) == subsums.subset("Z4xZ2", "(1,0),(0,1)")
    assert subsums.sigma_star("Z5", [1]) == [1]
    assert subsums.sumset("Z7", [0, 1], [0, 2]) == [0, 1, 2, 3]
    assert subsums.k_wedge("Z7", 2, [1, 2, 3]) == [3, 4, 5]
    assert subsums.period("Z6", [0, 3]) == [0, 3]
    assert subsums.lam("Z7", [0, 1, 2], 3) == 3
    with pytest.raises(IndexError):
        subsums.sigma("Z7", [9])


def test_structure():
    assert subsums.arithmetic_progression("Z7", [0, 1, 3, 4, 6]) == (1, 3)
    assert subsums.arithmetic_progression("Z8", [0, 1, 3]) is None
    hp = subsums.hp_representation("Z7", [1, 3])
    assert hp["certificates"] == [
        "group=Z7 set=a0 H=[] kind=AP ap=(1,3) quotient=7",
        "group=Z7 set=a0 H=[] kind=Vosper quotient=7",
    ]
    assert subsums.is_faithful("Z7", [1])
    assert not subsums.is_super_faithful("Z7", [1])


def test_claims():
    assert "CONJECTURE" in subsums.claims()
    assert subsums.bound_value("CONJECTURE", "Z9", [1, 2, -1, -2]) == Fraction(7)
    r = subsums.check("MAIN_T2", "Z13", [1, 2, 3])
    assert r["branch"] == "(i')+(ii)"
    assert r["slack"] == 0
    assert r["holds"]
    r = subsums.check("LEMMA_19", "Z8", [1, 2, 3], b=[0])
    assert not r["holds"]
    assert subsums.critical_number("Z7") == 4


def test_search():
    assert len(subsums.enumerate_subsets("Z5", symmetric=True, zero_free=True, size_min=2, size_max=2)) == 2
    assert len(subsums.enumerate_subsets("Z5")) == 32
    with pytest.raises(ValueError):
        subsums.enumerate_subsets("Z5", symmetric=True, asymmetric=True)
    v = subsums.fuzz_conjecture(["Z7", "Z2xZ4"], threads=2)
    assert v["exhausted"]
    assert v["counterexamples"] == []
    assert v["min_slack"] >= 0
    assert subsums.fuzz_conjecture([])["instances"] == 0


def test_cli():
    code, out, err = subsums.run_cli(["check", "--claim", "MAIN_T2", "--group", "Z13", "--set", "1,2,3", "--json"])
    assert code == 0
    assert json.loads(out)["slack"] == "0/1"
    code, out, err = subsums.run_cli(["sigma", "--group", "Z7"])
    assert code == 2
    assert err.startswith("error: ")
