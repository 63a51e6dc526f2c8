"""Identity checks on small grids; the acceptance suite runs the full ones."""

import pytest

from negmom import weights as W
from negmom.moments import IllDefinedError
from negmom.poly import MultiPoly
from negmom.reciprocity import (
    alt_transfer_matrix,
    b_matrix,
    check_alt_cf,
    check_alt_transfer_counts,
    check_ck,
    check_ck_rs,
    check_conjecture50,
    check_conjecture53,
    check_dyck_motzkin_connection,
    check_connection1,
    check_connection2,
    check_inverse_minor_identity,
    check_main_reciprocity,
    check_pv2,
    check_pv3_rs,
    check_pv3a,
    check_pv3b,
    check_rpp_identity,
    check_sigma,
    check_special_dets,
    check_theorem15,
    check_theorem34,
    check_usmani,
    check_values,
    check_vv_inverse,
    det_moment_grid,
    reversed_special_matrix,
    rpp_prefactor_exponent,
)


def test_check_values_witness():
    c = check_values("demo", {}, MultiPoly.const(1), MultiPoly.const(2))
    assert c.status == "FAIL" and c.witness == "-1"
    c = check_values("demo", {}, MultiPoly.const(3), MultiPoly.const(3))
    assert c.passed


def test_ck_small():
    for n in range(1, 4):
        for k in range(1, 4):
            assert check_ck(n, k).passed


def test_ck_rs_small():
    for n in range(1, 3):
        for k in range(1, 4):
            for r in range(1, k + 1):
                for s in range(1, k + 1):
                    assert check_ck_rs(n, k, r, s).passed, (n, k, r, s)
    assert check_ck_rs(1, 2, 0, 1).status == "SKIPPED"


def test_det_moment_grid_edges():
    sym = W.symbolic()
    assert det_moment_grid("positive", 2, 0, 1, sym) == MultiPoly.const(1)
    assert det_moment_grid("negative", 2, 1, 0, sym) == MultiPoly.const(1)
    with pytest.raises(ValueError):
        det_moment_grid("sideways", 1, 1, 1, sym)
    with pytest.raises(IllDefinedError):
        det_moment_grid("negative", 1, 1, 2, W.zero_one())  # even bound


def test_det_moment_grid_matches_brute():
    # 1x1 grids are plain moments
    sym = W.symbolic()
    from negmom.moments import bounded_moment
    assert det_moment_grid("positive", 3, 1, 1, sym) == bounded_moment(3, 0, 0, 1, sym)


def test_main_reciprocity_symbolic_small():
    sym = W.symbolic()
    for (k, m) in ((1, 1), (1, 2), (2, 1)):
        for n in (1, 2):
            assert check_main_reciprocity(n, k, m, sym).passed, (n, k, m)


def test_main_reciprocity_specialized():
    for spec in (W.zero_one(), W.one_one()):
        for n in (1, 2):
            for k in (1, 2):
                for m in (1, 2):
                    c = check_main_reciprocity(n, k, m, spec)
                    assert c.status in ("PASS", "SKIPPED")


def test_main_reciprocity_skips_ill_defined():
    # (z, 1) at even bound k+m-1 has no backward side
    assert check_main_reciprocity(1, 1, 2, W.zero_one()).status == "SKIPPED"


def test_theorem15_small():
    for n in range(0, 3):
        for k in range(0, 3):
            for m in range(0, 3):
                assert check_theorem15(n, k, m).passed, (n, k, m)


def test_conjectures_small():
    for n in range(0, 3):
        for k in range(0, 3):
            for m in range(0, 3):
                assert check_conjecture50(n, k, m).passed, (n, k, m)
    seen_skip = False
    for n in range(1, 3):
        for k in range(1, 3):
            for m in range(1, 3):
                c = check_conjecture53(n, k, m)
                seen_skip |= c.status == "SKIPPED"
                assert c.status in ("PASS", "SKIPPED")
    assert seen_skip  # k + m = 2 (mod 3) occurs in the grid


def test_theorem34_small():
    for n in (1, 2):
        for k in (1, 2):
            for m in (1, 2):
                assert check_theorem34(n, k, m).passed, (n, k, m)
    for n in (1, 2, 3):
        for k in (1, 2, 3):
            assert check_dyck_motzkin_connection(n, k).passed


def test_rpp_modes():
    c = check_rpp_identity(1, 1, 1, mode="q")
    assert c.passed
    assert c.lhs.render() == "q^3 + q^2 + 2*q + 1"
    assert rpp_prefactor_exponent(1, 1) == 3
    for (n, m, k) in ((0, 1, 1), (1, 1, 1), (0, 2, 1)):
        assert check_rpp_identity(n, m, k, mode="symbolic-VA").passed
    for (n, m) in ((1, 1), (2, 1)):
        assert check_rpp_identity(n, m, 0, mode="q-unbounded", trunc=6).passed


def test_special_matrices():
    for k in range(1, 8):
        assert check_special_dets(k).passed, k
    # B * Abar = I frozen 2x2 example
    B = b_matrix(1)
    assert [[e.as_fraction() for e in row] for row in B.data] == [[-2, 1], [-1, 1]]
    Abar = reversed_special_matrix(1)
    assert [[e.as_fraction() for e in row] for row in Abar.data] == [[-1, 1], [-1, 2]]
    prod = B * Abar
    assert [[e.as_fraction() for e in row] for row in prod.data] == [[1, 0], [0, 1]]


def test_alt_transfer():
    A = alt_transfer_matrix(1)
    # row 0 has ones at odd columns above the diagonal
    assert [e.as_fraction() for e in A.data[0]] == [0, 1, 0, 1]
    for k in range(0, 3):
        for n in range(0, 6):
            assert check_alt_transfer_counts(n, k).passed
        assert check_alt_cf(k, order=6).passed


def test_connections_small():
    for n in range(0, 5):
        for k in range(1, 3):
            assert check_connection1(n, k).passed, (n, k)
            assert check_connection2(n, k).passed, (n, k)


def test_pv_wrappers():
    for n in (1, 2, 3):
        for k in (1, 2):
            assert check_pv2(n, k).passed
            assert check_pv3a(n, k).passed
            assert check_pv3b(n, k).passed
    assert check_pv3_rs(2, 1, 1, 2).passed
    assert check_pv3_rs(1, 1, 9, 9).status == "SKIPPED"


def test_inverse_checks():
    for k in range(0, 4):
        assert check_usmani(k).passed
    assert check_vv_inverse(2).passed
    assert check_vv_inverse(4).status == "SKIPPED"
    assert check_inverse_minor_identity(3, seed=5).passed


def test_sigma_check():
    for n in (1, 2):
        for k in (1, 2):
            assert check_sigma(n, k).passed
