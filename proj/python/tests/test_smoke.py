from fractions import Fraction

import pytest

import frobmf


def test_parse_normal_form():
    assert frobmf.parse_poly("x1^2 + x1*x2", 3) == "x1^2 + x1*x2"
    assert frobmf.parse_poly("3*x1", 3) == "0"


def test_reference_matrix_shape():
    m = frobmf.matrix_of_relations("x1^2 + x1*x2", 3)
    assert (m["rows"], m["cols"]) == (9, 9)
    assert [0, 1, "x1"] in m["entries"]
    assert [0, 8, "x1*x2"] in m["entries"]
    assert len(m["entries"]) == 18


def test_free_ranks():
    assert frobmf.free_rank_uv("x1^2", 3) == 5
    assert frobmf.free_rank_uv("x1", 3) == 9
    assert frobmf.free_rank_z2("x1^3", 3) == 0
    assert frobmf.free_rank_z2("x1", 3) == 3


def test_fsignatures():
    assert frobmf.fsignature([2, 1]) == Fraction(5, 12)
    assert frobmf.fsignature([1, 1], "z2") == Fraction(1, 2)
    seq = frobmf.empirical_sequence("x1^2", 5, 1)
    assert seq["empirical"][0]["s"] == Fraction(13, 25)
    assert seq["closed_form"] == Fraction(1, 2)


def test_monomial_tools():
    rep = frobmf.decomposition_report([2], 3, 1)
    assert rep["free_rank"] == 5
    assert rep["summands"] == [{"c": [1], "multiplicity": 4}]
    assert frobmf.eta(2, [1], [2], 3) == 2
    assert frobmf.w_values([3, 2]) == [6, 3, 0]
    assert frobmf.sum_powers(10, 3) == 3025
    assert frobmf.fedder_membership([3], 3, 1)


def test_verify_and_cli():
    assert frobmf.verify_presentation("x1^2 + x1*x2", 3, 1, 1)
    code, out, _ = frobmf.run_cli("fsignature", "--type", "uv", "--dvec", "2,1")
    assert code == 0 and '"5/12"' in out
    code, _, err = frobmf.run_cli("matrix", "--f", "x1", "--p", "4")
    assert code == 2 and err


def test_resource_limit():
    with pytest.raises(frobmf.ResourceLimitError):
        frobmf.matrix_of_relations("x1*x2*x3", 7, 3, max_size=1000)
