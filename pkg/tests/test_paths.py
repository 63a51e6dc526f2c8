"""Brute-force enumerators: frozen counts, weights, bijections, invariants."""

import pytest

from negmom import poly as P
from negmom.paths import (
    alt_sequences,
    alt_to_pv,
    count_alt,
    encode_motzkin,
    encode_rpp,
    encode_seq,
    is_pv_sequence,
    motzkin_paths,
    pv_sequences,
    pv_to_alt,
    pwt_motzkin,
    rpp_fillings,
    rpp_total,
    rpp_transpose,
    schroeder_paths,
    staircase_skew_cells,
    wt_motzkin,
    wt_rpp,
    wt_schroeder,
    wt_seq_av,
    wt_seq_v,
)
from negmom.poly import MultiPoly
from negmom.weights import laurent_symbolic, symbolic


def test_motzkin_base_cases():
    assert motzkin_paths(0, 0, 0, 5) == [()]
    two = motzkin_paths(2, 0, 0, 1)
    assert sorted(encode_motzkin(p) for p in two) == ["HH", "UD"]
    assert len(motzkin_paths(4, 0, 0)) == 9  # fourth Motzkin number


def test_motzkin_bounded_monotone_and_stable():
    # counts increase with the bound and stabilize at k = n
    for n in range(0, 7):
        prev = -1
        for k in range(0, n + 2):
            c = len(motzkin_paths(n, 0, 0, k))
            assert c >= prev
            prev = c
        assert len(motzkin_paths(n, 0, 0, n)) == len(motzkin_paths(n, 0, 0))


def test_motzkin_duplicate_free():
    for n in range(0, 6):
        for k in (1, 2, None):
            ps = motzkin_paths(n, 1, 0, k)
            assert len(ps) == len(set(ps))


def test_motzkin_weights():
    spec = symbolic()
    (ud,) = [p for p in motzkin_paths(2, 0, 0, 2) if p == ("U", "D")]
    assert wt_motzkin(ud, spec) == P.lam(1)
    (hh,) = [p for p in motzkin_paths(2, 0, 0, 2) if p == ("H", "H")]
    assert wt_motzkin(hh, spec) == P.b(0) ** 2
    assert wt_motzkin((), spec) == MultiPoly.const(1)


def test_point_weight_relation():
    # wt(pi; b, b^2) = (b0..b_{r-1} / b0..b_s) pwt(pi; b) on small grids
    from negmom.weights import b_squared
    bsq = b_squared()
    for n in range(0, 6):
        for r in range(0, 3):
            for s in range(0, 3):
                for p in motzkin_paths(n, r, s, 3):
                    lhs = wt_motzkin(p, bsq, r)
                    ratio_num = MultiPoly.const(1)
                    for t in range(r):
                        ratio_num = ratio_num * P.b(t)
                    ratio_den = MultiPoly.const(1)
                    for t in range(s + 1):
                        ratio_den = ratio_den * P.b(t)
                    assert lhs * ratio_den == ratio_num * pwt_motzkin(p, r)


def test_schroeder_counts():
    assert len(schroeder_paths(2, 3)) == 2  # UD and H2
    five = schroeder_paths(4, 1)
    assert len(five) == 5
    assert ("U", "U", "D", "D") not in five
    assert schroeder_paths(3, 2) == []  # odd displacement unreachable


def test_schroeder_weights():
    ls = laurent_symbolic()
    w = wt_schroeder(("U", "H2", "D"), ls.b, ls.a)
    assert w == P.b(1) * P.a(1)


def test_pv_membership_example():
    assert is_pv_sequence((3, 2, 7, 0, 1), 2, 7)
    assert not is_pv_sequence((2, 2), 2, 7)


def test_pv_two_bound_one():
    # only one 2-PV sequence of each odd length at bound 1
    for n in range(0, 4):
        seqs = pv_sequences(2, 2 * n + 1, 1)
        assert seqs == [tuple(1 if i % 2 == 0 else 0 for i in range(2 * n + 1))]
    assert pv_sequences(2, 4, 1) == []


def test_pv_empty_conventions():
    assert pv_sequences(2, 0, 3) == [()]
    assert pv_sequences(3, 0, 3) == [()]
    # boundary-pinned variant applies the rules to the padding values
    assert pv_sequences(3, 0, 3, r=0, s=0) == []
    assert pv_sequences(3, 0, 3, modified=True, r=0, s=0) == [()]
    assert pv_sequences(3, 0, 3, r=1, s=0) == [()]


def test_pv_rs_matches_plain_for_positive_length():
    for n in range(1, 6):
        for k in (2, 3, 5):
            assert pv_sequences(3, n, k) == pv_sequences(3, n, k, r=0, s=0)
            assert pv_sequences(3, n, k, modified=True) == \
                pv_sequences(3, n, k, modified=True, r=0, s=0)


def test_alt_counts():
    assert count_alt(1, 5) == 5
    assert count_alt(3, 2) == 5
    assert sorted(alt_sequences(3, 2)) == [
        (1, 1, 1), (1, 2, 1), (1, 2, 2), (2, 2, 1), (2, 2, 2)]
    down = alt_sequences(3, 2, down_first=True)
    assert sorted(sum(s) for s in down) == [3, 4, 4, 5, 6]


def test_alt_endpoints():
    seqs = alt_sequences(3, 3, endpoints=(1, 2))
    assert all(s[0] == 1 and s[-1] == 2 for s in seqs)
    assert alt_sequences(1, 3, endpoints=(1, 2)) == []
    assert alt_sequences(1, 3, endpoints=(2, 2)) == [(2,)]
    assert alt_sequences(0, 3) == [()]
    assert alt_sequences(0, 3, endpoints=(1, 1)) == []


def test_pv_alt_bijection():
    assert pv_to_alt((1, 0, 1), 1) == (1, 1, 1)
    assert pv_to_alt((3, 2, 7, 0, 1), 4) == (3, 3, 1, 4, 4)
    with pytest.raises(ValueError):
        pv_to_alt((2, 2), 4)
    for n in range(0, 3):
        for k in (1, 2, 3):
            pvs = pv_sequences(2, 2 * n + 1, 2 * k - 1)
            alts = alt_sequences(2 * n + 1, k)
            image = [pv_to_alt(p, k) for p in pvs]
            assert sorted(image) == sorted(alts)
            for p in pvs:
                assert alt_to_pv(pv_to_alt(p, k), k) == p


def test_sequence_weights():
    assert wt_seq_v(()) == MultiPoly.const(1)
    assert wt_seq_v((1, 0, 1)) == P.V(1) ** 2 * P.V(0)
    assert wt_seq_av((3, 3, 1, 4, 4)) == P.V(3) * P.A(3) * P.V(1) * P.A(4) * P.V(4)
    with pytest.raises(ValueError):
        wt_seq_av((1, 2))


def test_encodings():
    assert encode_seq((1, 0, 1)) == "(1,0,1)"
    assert encode_motzkin(("U", "H", "D")) == "UHD"


def test_staircase_cells():
    assert staircase_skew_cells(1, 1) == [(1, 1), (1, 2), (2, 1)]
    # skew example: inner staircase removes leading cells
    cells = staircase_skew_cells(2, 1)
    assert (1, 1) not in cells and (1, 2) in cells


def test_rpp_small_census():
    # shape (2,1), entries <= 1: totals 0,1,1,2,3
    fills = rpp_fillings(1, 1, 1)
    assert sorted(rpp_total(f) for f in fills) == [0, 1, 1, 2, 3]
    assert len(rpp_fillings(1, 1, 0)) == 1


def test_rpp_transpose_symmetry():
    for (n, m, k) in ((0, 1, 2), (1, 1, 2), (2, 1, 1), (0, 2, 1)):
        fills = rpp_fillings(n, m, k)
        keyed = {tuple(sorted(f.items())) for f in fills}
        transposed = {tuple(sorted(rpp_transpose(f).items())) for f in fills}
        assert keyed == transposed


def test_rpp_weights_alternate_families():
    (zero_fill,) = [f for f in rpp_fillings(1, 1, 1) if rpp_total(f) == 0]
    assert wt_rpp(zero_fill, 1) == P.A(1) * P.V(1) ** 2
    header = encode_rpp(zero_fill, 1, 1)
    assert "0 0" in header and "|" in header


def test_rpp_max_total_prunes():
    full = rpp_fillings(1, 2, 3)
    small = rpp_fillings(1, 2, 3, max_total=2)
    assert {rpp_total(f) for f in small} <= {0, 1, 2}
    assert len(small) == sum(1 for f in full if rpp_total(f) <= 2)
