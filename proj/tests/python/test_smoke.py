"""Smoke tests for the python bindings: the headline operations end to end."""

import pytest

import wbc

SPEC = "k=0\nu2=6\nw1=-4\n"


def test_finite_mul():
    assert wbc.mul("finite", 1, 1, "e1", "e1") == "0"
    assert wbc.mul("finite", 2, 2, "s1", "s1") == wbc.mul("finite", 2, 2, "1", "1")
    # c1^2 = -1
    one = wbc.mul("finite", 1, 1, "1", "1")
    assert wbc.mul("finite", 1, 1, "c1", "c1") == wbc.mul("finite", 1, 1, "-1", "1")
    assert one.startswith("1 *")


def test_affine_sandwich():
    out = wbc.mul("affine", 1, 1, "e1*x1", "e1")
    assert out.startswith("w1 *")
    assert wbc.mul("affine", 1, 1, "e1*x1*x1", "e1") == "0"


def test_basis_counts():
    assert wbc.basis_count(1, 1) == 8
    assert wbc.basis_count(2, 1) == 48
    assert wbc.basis_count(2, 2) == 384
    assert len(wbc.basis(1, 1)) == 8


def test_omega_bar():
    assert wbc.omega_bar(1) == "-w1"
    assert wbc.omega_bar(2) == "0"
    assert wbc.omega_bar(3) == "-w1^2 - w3"


def test_cyclotomic():
    assert wbc.is_admissible(SPEC)
    assert wbc.admissible_stream(SPEC, 1, 5) == ["-4", "0", "-24", "0", "-144"]
    assert wbc.cyclo_count(SPEC, 1, 1) == "32"
    reduced = wbc.reduce(1, 1, "x1*x1", SPEC)
    assert reduced.startswith("6 *")
    with pytest.raises(wbc.AdmissibilityError):
        wbc.reduce(1, 1, "x1", SPEC + "w3=1\n")


def test_delta_dictionary():
    delta = wbc.omega_to_delta(["2", "0", "-3", "0", "7"])
    assert delta == ["-2", "0", "7", "0", "-27"]
    assert wbc.delta_to_omega(delta) == ["2", "0", "-3", "0", "7"]


def test_involutions():
    assert wbc.tau(1, 1, "e1") == wbc.mul("finite", 1, 1, "e1", "1")
    assert wbc.sigma(1, 1, "x1") == wbc.mul("affine", 1, 1, "x1", "1")


def test_verify_suites():
    for name, ok, witness in wbc.verify("relations", r=1, t=1):
        assert ok, f"{name}: {witness}"
    for name, ok, witness in wbc.verify("params"):
        assert ok, f"{name}: {witness}"


def test_oracle_rank_full():
    assert wbc.oracle_rank(1, 1) == 8


def test_errors():
    with pytest.raises(wbc.ParseError):
        wbc.mul("finite", 1, 1, "e1 +", "e1")
    with pytest.raises(wbc.FuelError):
        wbc.mul("affine", 1, 1, "e1*x1*x1*x1", "e1", fuel=10)
