from fractions import Fraction

import pytest

import blockdim


def test_root_data():
    assert blockdim.cartan_matrix("G", 2) == [[2, -1], [-3, 2]]
    assert len(blockdim.positive_roots("B", 3)) == 9
    assert blockdim.weyl_group_order("F", 4) == 1152


def test_characters():
    assert blockdim.weyl_dim("E", 8, [0] * 7 + [1]) == 248
    ch = blockdim.character("A", 2, [1, 1])
    assert ch[(0, 0)] == 2
    assert sum(ch.values()) == 8


def test_integral_data():
    d = blockdim.integral_data("B", 2, [Fraction(1, 2), 0])
    assert d["w_lambda_order"] == 4
    assert sorted(d["integral_simples"]) == [[0, 1], [1, 1]]
    assert blockdim.is_dominant("A", 1, "-1")
    assert not blockdim.is_dominant("A", 1, [-2])
    assert blockdim.is_general_position("A", 2, "1/2,1/3")


def test_minimality():
    assert blockdim.is_minimal("A", 1, [-1], [-3])
    assert not blockdim.is_minimal("A", 1, [-1], [1])
    assert not blockdim.is_minimal("A", 2, [-1, -1], [-2, -1], order="pplus")


def test_kl_and_ext():
    assert blockdim.kl_polynomial("A", 3, "e", "2132") == [1, 1]
    assert blockdim.kl_polynomial("A", 2, "1", "2") == []
    assert blockdim.ext_dimensions("A", 1, "0", "e", "1") == [0, 1]
    assert len(blockdim.dot_orbit("A", 2, "0,0")) == 6


def test_block_report():
    r = blockdim.block_report("A", 1, "0", [2])
    assert len(r["entries"]) == 3
    assert r["sum_check"] == r["end_v_zero"] == 3
    r = blockdim.block_report("A", 1, [-1], [2])
    assert sorted(e["dim_S"] for e in r["entries"]) == [0, 1, 1]
    generic = ("G", 2, [Fraction(1, 5), Fraction(1, 7)], [0, 1])
    assert blockdim.block_report(*generic) == blockdim.block_report(*generic, fast_path=True)


def test_errors():
    with pytest.raises(blockdim.InputError):
        blockdim.block_report("A", 1, "-2", [2])
    with pytest.raises(ValueError):
        blockdim.weyl_dim("A", 2, [1])
    with pytest.raises(ValueError):
        blockdim.cartan_matrix("D", 3)
