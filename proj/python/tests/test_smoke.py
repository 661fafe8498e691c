import pytest

import segcalc


def test_c_value_and_t():
    assert segcalc.c_value(2, 7, 3) == 7
    assert segcalc.c_value(3, 2, 2) == 8
    assert segcalc.t_of(3, 7, 7) == 2
    assert segcalc.t_of(1, 8, 2) == 8


def test_t_of_inconsistent():
    with pytest.raises(ArithmeticError):
        segcalc.t_of(7, 7, 7)


def test_partner_is_identity_on_admissible():
    assert segcalc.infer_partner_w(3, 7, 7) == 3
    with pytest.raises(ValueError):
        segcalc.infer_partner_w(5, 7, 7)


def test_partitions():
    assert segcalc.partitions_of(3) == ["(1,1,1)", "(2,1)", "(3)"]
    assert segcalc.conjugate("(3,1)") == "(2,1,1)"
    assert segcalc.dominance_leq("[0,1]+[0,1]", "[0,2]")
    with pytest.raises(ValueError):
        segcalc.dominance_leq("[0,1]", "[0,2]")


def test_identities():
    equal, lhs, rhs = segcalc.check_mackey_rearrangement(2, 4, 2)
    assert equal and lhs == rhs
    assert segcalc.y_count(4, 2, 6, 0) == 3


def test_suite_runs():
    assert "mackey" in segcalc.suite_names()
    results = segcalc.run_suite("tof")
    assert results and all(r["pass"] for r in results)


def test_enumerate_deterministic():
    conf = "q=2\nell=7\nm_max=2\nn_tors_max=6\nshift_max=1\nk_max=2\n"
    one = segcalc.enumerate_universe(conf, threads=1)
    four = segcalc.enumerate_universe(conf, threads=4)
    assert one and one == four
