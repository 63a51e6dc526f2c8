"""Determinant-reciprocity identities between forward and backward moment
grids, with structured pass/fail certificates.

Every check computes both sides exactly from independent routes (closed
forms on one side, brute-force enumeration or a second closed route on
the other) and reports an ``IdentityCheck``.  Rational sides are compared
by cross-multiplication so no reduction of large intermediates is needed;
a failing check carries the first differing monomial as a witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple, Union

from . import paths
from .matrix import Matrix, adjugate, determinant, matrix_reverse_index
from .moments import (
    IllDefinedError,
    bounded_moment,
    moment_gf,
    moment_vectors,
    negative_moment,
    pv_closed_forms,
    transfer_matrix,
    usmani_inverse,
    v_inverse_closed_form,
    well_defined,
)
from .poly import MultiPoly
from .ratfunc import (
    RatFunc,
    SeriesCoefficientError,
    cf_eval,
    reverse_gf,
    series_expand,
    series_expand_rat,
)
from .weights import (
    WeightSpec,
    b_special,
    doubled_even,
    doubled_odd,
    one_one,
    spec as make_spec,
    symbolic,
    v_inverse,
    zero_one,
)

Value = Union[MultiPoly, RatFunc, int, Fraction]

_ONE = MultiPoly.const(1)


@dataclass
class IdentityCheck:
    identity: str
    params: Dict[str, object]
    status: str                      # PASS | FAIL | SKIPPED
    lhs: Optional[Value] = None
    rhs: Optional[Value] = None
    witness: Optional[str] = None
    reason: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == "PASS"


def _as_ratfunc(v: Value) -> RatFunc:
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, MultiPoly):
        return RatFunc(v, reduce=False)
    return RatFunc(MultiPoly.const(v), reduce=False)


def _first_monomial(p: MultiPoly) -> str:
    mono, coeff = p.leading()
    return MultiPoly.monomial(coeff, mono).render()


def check_values(identity: str, params: Dict[str, object],
                 lhs: Value, rhs: Value) -> IdentityCheck:
    """Build a certificate for lhs == rhs, cross-multiplying rational sides."""
    lr, rr = _as_ratfunc(lhs), _as_ratfunc(rhs)
    diff = lr.num * rr.den - rr.num * lr.den
    if diff.is_zero():
        return IdentityCheck(identity, params, "PASS", lhs, rhs)
    return IdentityCheck(identity, params, "FAIL", lhs, rhs,
                         witness=_first_monomial(diff))


def skipped(identity: str, params: Dict[str, object], reason: str) -> IdentityCheck:
    return IdentityCheck(identity, params, "SKIPPED", reason=reason)


def _combine(identity: str, params: Dict[str, object],
             subchecks: Sequence[IdentityCheck]) -> IdentityCheck:
    for sub in subchecks:
        if sub.status == "FAIL":
            return IdentityCheck(identity, params, "FAIL", sub.lhs, sub.rhs,
                                 witness=sub.witness, reason=sub.reason)
    return IdentityCheck(identity, params, "PASS")


# -- moment grids -----------------------------------------------------------------

def _forward_sequence(k: int, spec: WeightSpec, n_max: int) -> List[MultiPoly]:
    return [u[0] for u in moment_vectors(k, spec, 0, n_max)]


def _backward_sequence(k: int, spec: WeightSpec, n_max: int) -> List[Value]:
    """[mu_0, mu_{-1}, ..., mu_{-n_max}] via the reversed generating function."""
    rev = reverse_gf(moment_gf(0, 0, k, spec))
    try:
        ser = series_expand(rev, n_max + 1)
    except SeriesCoefficientError:
        ser = [c.as_poly_or_self() for c in series_expand_rat(rev, n_max + 1)]
    out: List[Value] = [MultiPoly.const(1)] + list(ser[1:])
    return out


def det_moment_grid(sign: str, n: int, k: int, m: int, spec: WeightSpec) -> Value:
    """Determinant of the forward (k x k) or backward (m x m) moment grid.

    Forward entries are mu_{n+i+j+2m-2}, backward entries mu_{-n-i-j},
    both at bound k+m-1.  Empty grids give 1.
    """
    bound = k + m - 1
    if sign == "positive":
        if k == 0:
            return _ONE
        seq = _forward_sequence(bound, spec, n + 2 * (k - 1) + 2 * m - 2)
        rows = [[seq[n + i + j + 2 * m - 2] for j in range(k)] for i in range(k)]
        return determinant(Matrix(rows))
    if sign == "negative":
        if m == 0:
            return _ONE
        ok, cert = well_defined(bound, spec)
        if not ok:
            raise IllDefinedError("backward grid undefined", cert)
        seq = _backward_sequence(bound, spec, n + 2 * (m - 1))
        rows = [[seq[n + i + j] for j in range(m)] for i in range(m)]
        if all(isinstance(e, MultiPoly) for row in rows for e in row):
            return determinant(Matrix(rows))
        return determinant(Matrix([[_as_ratfunc(e) for e in row] for row in rows]))
    raise ValueError("sign must be 'positive' or 'negative'")


def _adjugate_power_traces(K: int, spec: WeightSpec, t_max: int) -> Tuple[List[MultiPoly], MultiPoly]:
    """((C^t)_{0,0} for t = 0..t_max, det A) for C the adjugate of the
    transfer matrix at bound K."""
    A = transfer_matrix(K, spec)
    d = determinant(A)
    C = adjugate(A)
    entries = [MultiPoly.const(1)]
    P = Matrix.identity(K + 1)
    for _ in range(t_max):
        P = P * C
        entries.append(P[0, 0])
    return entries, d


def check_main_reciprocity(n: int, k: int, m: int, spec: WeightSpec) -> IdentityCheck:
    """Forward k x k grid determinant against the lam-power and det-power
    weighted, index-reversed backward m x m grid determinant."""
    params = {"n": n, "k": k, "m": m, "spec": spec.name}
    ident = "main"
    if n < 1 or k < 1 or m < 1:
        return skipped(ident, params, "needs positive n, k, m")
    K = k + m - 1
    ok, _cert = well_defined(K, spec)
    if not ok:
        return skipped(ident, params, f"P_{K + 1}(0) = 0: backward side undefined")
    lhs = det_moment_grid("positive", n, k, m, spec)
    pow00, d = _adjugate_power_traces(K, spec, n + 2 * (m - 1))
    rows = [[pow00[n + i + j] for j in range(m)] for i in range(m)]
    det_h = determinant(Matrix(rows))
    denom_power = m * n + m * (m - 1)
    rhs_num = d ** (n + 2 * m - 2) * det_h.reverse_index(K)
    rhs_den = d.reverse_index(K) ** denom_power
    for i in range(1, K + 1):
        e = k - i
        if e >= 0:
            rhs_num = rhs_num * spec.lam(i) ** e
        else:
            rhs_den = rhs_den * spec.lam(i) ** (-e)
    return check_values(ident, params, RatFunc(lhs, reduce=False),
                        RatFunc(rhs_num, rhs_den, reduce=False))


def check_theorem15(n: int, k: int, m: int) -> IdentityCheck:
    """Equality of the two Dyck-count grid determinants at odd bound."""
    params = {"n": n, "k": k, "m": m}
    spec = zero_one()
    bound = 2 * k + 2 * m - 1
    if k == 0:
        lhs: Value = _ONE
    else:
        # the m = 0 edge sends forward entries to (extended) negative indices
        seq = _forward_sequence(bound, spec, max(2 * n + 4 * (k - 1) + 4 * m - 2, 0))
        back = _backward_sequence(bound, spec, 2)
        ext = lambda j: seq[j] if j >= 0 else back[-j]
        rows = [[ext(2 * n + 2 * i + 2 * j + 4 * m - 2) for j in range(k)]
                for i in range(k)]
        lhs = determinant(Matrix(rows))
    if m == 0:
        rhs: Value = _ONE
    else:
        back = _backward_sequence(bound, spec, 2 * n + 4 * (m - 1))
        rows = [[back[2 * n + 2 * i + 2 * j] for j in range(m)] for i in range(m)]
        rhs = determinant(Matrix(rows))
    return check_values("thm15", params, lhs, rhs)


def check_conjecture50(n: int, k: int, m: int) -> IdentityCheck:
    """Row-sum moment grid against the signed grid of alternating-sequence
    counts."""
    params = {"n": n, "k": k, "m": m}
    K = k + m
    bound = 2 * K - 1
    spec = zero_one()
    if k == 0:
        lhs: Value = _ONE
    else:
        n_max = max(n + 2 * (k - 1) + 2 * m - 1, 0)
        sums: List[Value] = []
        for u in moment_vectors(bound, spec, 0, n_max):
            acc = MultiPoly.zero()
            for c in u:
                acc = acc + c
            sums.append(acc)
        neg_sums: List[Value] = [sums[0]]
        if n + 2 * m - 1 < 0:
            # the (n, m) = (0, 0) corner reaches one step backwards
            from .moments import inverse_transfer
            inv = inverse_transfer(bound, spec)
            u = [RatFunc(1 if i == 0 else 0) for i in range(bound + 1)]
            for _ in range(-(n + 2 * m - 1)):
                u = [sum((u[t] * inv[t, j] for t in range(bound + 1)), RatFunc(0))
                     for j in range(bound + 1)]
                neg_sums.append(sum(u, RatFunc(0)).as_poly_or_self())
        ext = lambda j: sums[j] if j >= 0 else neg_sums[-j]
        rows = [[ext(n + i + j + 2 * m - 1) for j in range(k)] for i in range(k)]
        lhs = determinant(Matrix(rows))
    if m == 0:
        rhs: Value = _ONE
    else:
        rows = [[MultiPoly.const(paths.count_alt(n + i + j, K)) for j in range(m)]
                for i in range(m)]
        rhs = determinant(Matrix(rows))
    sign = (-1) ** ((comb(k, 2) + comb(m, 2)) * (n + 1))
    return check_values("conj50", params, lhs, sign * rhs)


def check_conjecture53(n: int, k: int, m: int) -> IdentityCheck:
    """All-ones-weight grid reciprocity, defined away from k+m = 2 (mod 3)."""
    params = {"n": n, "k": k, "m": m}
    if (k + m) % 3 == 2:
        return skipped("conj53", params, "k+m = 2 (mod 3): backward side undefined")
    if n < 1 or k < 1 or m < 1:
        return skipped("conj53", params, "needs positive n, k, m")
    spec = one_one()
    bound = k + m - 1
    lhs = det_moment_grid("positive", n, k, m, spec)
    rhs = det_moment_grid("negative", n, k, m, spec)
    sign = (-1) ** (n * ((k + m) // 3))
    return check_values("conj53", params, lhs, sign * rhs)


def check_theorem34(n: int, k: int, m: int) -> IdentityCheck:
    """Grid reciprocity for Dyck-path moments with fully symbolic lam."""
    params = {"n": n, "k": k, "m": m}
    if n < 1 or k < 1 or m < 1:
        return skipped("thm34", params, "needs positive n, k, m")
    spec = make_spec("zero", "symbolic")
    bound = 2 * k + 2 * m - 1
    seq = _forward_sequence(bound, spec, 2 * n + 4 * (k - 1) + 4 * m - 2)
    rows = [[seq[2 * n + 2 * i + 2 * j + 4 * m - 2] for j in range(k)] for i in range(k)]
    lhs = determinant(Matrix(rows))
    back = _backward_sequence(bound, spec, 2 * n + 4 * (m - 1))
    rows_b = [[back[2 * n + 2 * i + 2 * j] for j in range(m)] for i in range(m)]
    det_b = determinant(Matrix(rows_b))
    prefactor = MultiPoly.const(1)
    for i in range(1, k + m):
        prefactor = prefactor * MultiPoly.variable("lam", 2 * i) ** (k - i)
    for i in range(1, k + m + 1):
        prefactor = prefactor * MultiPoly.variable("lam", 2 * i - 1) ** (k - i + n + 2 * m - 1)
    rhs = prefactor * det_b.reverse_index(bound)
    return check_values("thm34", params, lhs, rhs)


def check_dyck_motzkin_connection(n: int, k: int) -> IdentityCheck:
    """Even Dyck moments as Motzkin moments of the paired-index weights."""
    params = {"n": n, "k": k}
    spec = make_spec("zero", "symbolic")
    lhs = bounded_moment(2 * n, 0, 0, 2 * k - 1, spec)
    mid = bounded_moment(n, 0, 0, k - 1, doubled_even())
    sub = [check_values("dyck-motzkin", params, lhs, mid)]
    if n >= 1:
        third = MultiPoly.variable("lam", 1) * bounded_moment(n - 1, 0, 0, k - 1, doubled_odd())
        third = third.subs({("lam", 2 * k): 0})
        sub.append(check_values("dyck-motzkin", params, lhs, third))
    det_lhs = determinant(transfer_matrix(k - 1, doubled_even()))
    prod = MultiPoly.const(1)
    for i in range(1, k + 1):
        prod = prod * MultiPoly.variable("lam", 2 * i - 1)
    sub.append(check_values("dyck-motzkin", params, det_lhs, prod))
    return _combine("dyck-motzkin", params, sub)


# -- reverse plane partitions --------------------------------------------------------

def _rpp_weight_sum(n: int, m: int, k: int) -> MultiPoly:
    total = MultiPoly.zero()
    for filling in paths.rpp_fillings(n, m, k):
        total = total + paths.wt_rpp(filling, n)
    return total


def _alt_av_sum(length: int, bound: int) -> MultiPoly:
    total = MultiPoly.zero()
    for seq in paths.alt_sequences(length, bound, down_first=True):
        total = total + paths.wt_seq_av(seq)
    return total


def rpp_prefactor_exponent(n: int, m: int) -> int:
    num = m * (m + 1) * (6 * n + 8 * m - 5)
    if num % 6:
        raise ArithmeticError("prefactor exponent is not an integer")
    return num // 6


def _alt_q_series(length: int, bound: int, trunc: int) -> List[int]:
    """Coefficients of sum q^{|s|} over down-first alternating sequences of
    the given length with entries in [1, bound], truncated below q^trunc.

    Dynamic programming over (position, last value); independent of the
    enumerators so the two can be cross-checked.
    """
    if length == 0:
        out = [0] * trunc
        if trunc:
            out[0] = 1
        return out
    # table[v] = coefficient list for sequences ending at value v
    table = [[0] * trunc for _ in range(bound + 1)]
    for v in range(1, bound + 1):
        if v < trunc:
            table[v][v] = 1
    for pos in range(2, length + 1):
        descending = (pos % 2 == 0)  # down-first: a1 >= a2 <= a3 >= ...
        new = [[0] * trunc for _ in range(bound + 1)]
        # prefix[v] = sum of table[u] over admissible previous values u
        acc = [0] * trunc
        rng = range(bound, 0, -1) if descending else range(1, bound + 1)
        for v in rng:
            prev_vals = table[v]
            for t in range(trunc):
                acc[t] += prev_vals[t]
            shifted = new[v]
            for t in range(trunc - v):
                shifted[t + v] = acc[t]
        table = new
    out = [0] * trunc
    for v in range(1, bound + 1):
        for t in range(trunc):
            out[t] += table[v][t]
    return out


def check_rpp_identity(n: int, m: int, k: int, mode: str = "symbolic-VA",
                       trunc: int = 8) -> IdentityCheck:
    """Bounded reverse-plane-partition sums against alternating-sequence
    grid determinants (multivariate, q-specialized, or unbounded mod q^N)."""
    params = {"n": n, "m": m, "k": k, "mode": mode}
    if m < 1 or n < 0 or k < 0:
        return skipped("rpp", params, "needs m >= 1, n >= 0, k >= 0")
    if mode == "symbolic-VA":
        lhs = _rpp_weight_sum(n, m, k)
        rows = [[_alt_av_sum(2 * n + 2 * i + 2 * j + 1, k + m) for j in range(m)]
                for i in range(m)]
        rhs = determinant(Matrix(rows))
        return check_values("rpp", params, lhs, rhs)
    qv = ("q", -1)
    if mode == "q":
        expo = rpp_prefactor_exponent(n, m)
        lhs = MultiPoly.zero()
        for filling in paths.rpp_fillings(n, m, k):
            lhs = lhs + MultiPoly.variable("q", exp=paths.rpp_total(filling))
        rows = []
        for i in range(m):
            row = []
            for j in range(m):
                acc = MultiPoly.zero()
                for seq in paths.alt_sequences(2 * n + 2 * i + 2 * j + 1, k + m,
                                               down_first=True):
                    acc = acc + MultiPoly.variable("q", exp=sum(seq))
                row.append(acc)
            rows.append(row)
        det = determinant(Matrix(rows))
        rhs = MultiPoly.variable("q", exp=-expo) * det
        return check_values("rpp", params, lhs, rhs)
    if mode == "q-unbounded":
        expo = rpp_prefactor_exponent(n, m)
        entry_trunc = trunc + expo
        bound = entry_trunc  # entries above the truncation cannot contribute
        lhs_fillings = paths.rpp_fillings(n, m, trunc - 1, max_total=trunc - 1)
        lhs_coeffs = [0] * trunc
        for filling in lhs_fillings:
            lhs_coeffs[paths.rpp_total(filling)] += 1
        dets = []
        for extra in (0, 1):  # stabilization in the entry bound is asserted
            rows = []
            for i in range(m):
                row = []
                for j in range(m):
                    coeffs = _alt_q_series(2 * n + 2 * i + 2 * j + 1,
                                           bound + extra, entry_trunc)
                    acc = MultiPoly.zero()
                    for t, c in enumerate(coeffs):
                        if c:
                            acc = acc + c * MultiPoly.variable("q", exp=t)
                    row.append(acc)
                rows.append(row)
            dets.append(determinant(Matrix(rows)))
        if dets[0] != dets[1]:
            return IdentityCheck("rpp", params, "FAIL",
                                 witness="entry-bound stabilization failed")
        rhs_series = MultiPoly.variable("q", exp=-expo) * dets[0]
        rhs_coeffs = [0] * trunc
        for mono, coeff in rhs_series.terms():
            e = dict(mono).get(qv, 0)
            if 0 <= e < trunc:
                rhs_coeffs[e] += int(coeff)
        lhs_p = MultiPoly({((qv, t),) if t else (): Fraction(c)
                           for t, c in enumerate(lhs_coeffs) if c})
        rhs_p = MultiPoly({((qv, t),) if t else (): Fraction(c)
                           for t, c in enumerate(rhs_coeffs) if c})
        return check_values("rpp", params, lhs_p, rhs_p)
    return skipped("rpp", params, f"unknown mode {mode!r}")


# -- special matrices ---------------------------------------------------------------

def alt_transfer_matrix(k: int) -> Matrix:
    """0/1 matrix whose powers count bounded alternating sequences."""
    size = 2 * k + 2
    rows = []
    for i in range(size):
        row = []
        for j in range(size):
            one = (i % 2 == 0 and j % 2 == 1 and i < j) or \
                  (i % 2 == 1 and j % 2 == 0 and i > j)
            row.append(MultiPoly.const(1 if one else 0))
        rows.append(row)
    return Matrix(rows)


def b_matrix(k: int) -> Matrix:
    """Signed max-profile matrix inverting the reversed special transfer
    matrix."""
    rows = []
    for i in range(k + 1):
        row = []
        for j in range(k + 1):
            mag = k + 1 - max(i, j)
            sign = (-1) ** (((k - i) // 2) + ((k + 1 - j) // 2))
            row.append(MultiPoly.const(sign * mag))
        rows.append(row)
    return Matrix(rows)


def reversed_special_matrix(k: int) -> Matrix:
    """Index-reversed transfer matrix specialized at the alternating-sign
    weights."""
    A = transfer_matrix(k, symbolic())
    rev = matrix_reverse_index(A, k)
    bs = b_special(k)
    assign = {}
    for i in range(k + 1):
        assign[("b", i)] = bs.b(i)
        if i >= 1:
            assign[("lam", i)] = MultiPoly.const(-1)
    return rev.map(lambda e: e.subs(assign))


def check_special_dets(k: int) -> IdentityCheck:
    """Closed forms for the two special transfer-matrix determinants, the
    B-matrix inverse identity, and the alternating-count transfer powers."""
    params = {"k": k}
    sub: List[IdentityCheck] = []
    det1 = determinant(transfer_matrix(k - 1, one_one()))
    want1 = MultiPoly.const(0 if k % 3 == 2 else (-1) ** (k // 3))
    sub.append(check_values("special-dets", params, det1, want1))
    det2 = determinant(transfer_matrix(k - 1, b_special(k - 1)))
    want2 = MultiPoly.const((-1) ** (k // 2))
    sub.append(check_values("special-dets", params, det2, want2))
    if k <= 6:
        prod = b_matrix(k) * reversed_special_matrix(k)
        ident = Matrix.identity(k + 1)
        okay = prod == ident
        sub.append(IdentityCheck("special-dets", params,
                                 "PASS" if okay else "FAIL",
                                 witness=None if okay else "B * Abar != I"))
    return _combine("special-dets", params, sub)


def check_alt_transfer_counts(n: int, k: int) -> IdentityCheck:
    """e_0^T (A')^n (1,...,1)^T equals the brute-force alternating count."""
    params = {"n": n, "k": k}
    A = alt_transfer_matrix(k)
    u = [MultiPoly.const(1 if i == 0 else 0) for i in range(2 * k + 2)]
    for _ in range(n):
        u = [sum((u[t] * A[t, j] for t in range(2 * k + 2)), MultiPoly.zero())
             for j in range(2 * k + 2)]
    total = sum((c for c in u), MultiPoly.zero())
    return check_values("alt-transfer", params, total,
                        MultiPoly.const(paths.count_alt(n, k + 1)))


def check_alt_cf(k: int, order: int = 8) -> IdentityCheck:
    """Continued-fraction series for bounded alternating-sequence counts."""
    params = {"k": k, "order": order}
    y = MultiPoly.const((-1) ** k) * MultiPoly.variable("x")
    bs = [MultiPoly.const((-1) ** k)] + \
         [MultiPoly.const((-1) ** (k - i) * 2) for i in range(1, k + 1)]
    nums = [-y] + [MultiPoly.const(-1)] * k
    dens = [y - b for b in bs]
    f = cf_eval(nums, dens)
    ser = series_expand(f, order + 1)
    sub = []
    for n in range(1, order + 1):
        sub.append(check_values("alt-cf", {**params, "n": n}, ser[n],
                                MultiPoly.const(paths.count_alt(n, k + 1))))
    return _combine("alt-cf", params, sub)


# -- classic count reciprocity ---------------------------------------------------------

def check_ck(n: int, k: int) -> IdentityCheck:
    """Negative even Dyck moments as bounded alternating-sequence counts."""
    params = {"n": n, "k": k}
    lhs = negative_moment(2 * n, 0, 0, 2 * k - 1, zero_one())
    rhs = MultiPoly.const(paths.count_alt(2 * n - 1, k))
    return check_values("ck", params, lhs, rhs)


def check_ck_rs(n: int, k: int, r: int, s: int) -> IdentityCheck:
    """Both endpoint-pinned reciprocity identities for Dyck moments."""
    params = {"n": n, "k": k, "r": r, "s": s}
    if not (1 <= r <= k and 1 <= s <= k):
        return skipped("ck-rs", params, "endpoints must lie in [1, k]")
    spec = zero_one()
    sign = (-1) ** (r + s)
    sub = []
    lhs1 = sign * negative_moment(2 * n, 2 * r - 2, 2 * s - 2, 2 * k - 1, spec)
    rhs1 = MultiPoly.const(len(paths.alt_sequences(2 * n + 1, k, endpoints=(r, s))))
    sub.append(check_values("ck-rs", params, lhs1, rhs1))
    lhs2 = sign * negative_moment(2 * n - 1, 2 * r - 2, 2 * s - 1, 2 * k - 1, spec)
    rhs2 = MultiPoly.const(len(paths.alt_sequences(2 * n, k, endpoints=(r, s))))
    sub.append(check_values("ck-rs", params, lhs2, rhs2))
    return _combine("ck-rs", params, sub)


def check_connection1(n: int, k: int) -> IdentityCheck:
    """Special-weight moments as row sums of the doubled-bound Dyck matrix."""
    params = {"n": n, "k": k}
    lhs = bounded_moment(n, 0, 0, k, b_special(k))
    for i, u in enumerate(moment_vectors(2 * k + 1, zero_one(), 0, n + 1)):
        if i == n + 1:
            rhs = sum((c for c in u), MultiPoly.zero())
    return check_values("connection1", params, lhs, rhs)


def check_connection2(n: int, k: int) -> IdentityCheck:
    """Reversed negative special-weight moments as alternating counts."""
    params = {"n": n, "k": k}
    if n == 0:
        return check_values("connection2", params, MultiPoly.const(1),
                            MultiPoly.const(paths.count_alt(0, k + 1)))
    pow00, d = _adjugate_power_traces(k, symbolic(), n)
    num = pow00[n].reverse_index(k)
    den = d.reverse_index(k) ** n
    bs = b_special(k)
    assign = {("b", i): bs.b(i) for i in range(k + 1)}
    assign.update({("lam", i): MultiPoly.const(-1) for i in range(1, k + 1)})
    val = RatFunc(num.subs(assign), den.subs(assign))
    sign = (-1) ** (k * n)
    lhs = sign * val.num if val.is_poly() else sign * val
    rhs = MultiPoly.const(paths.count_alt(n, k + 1))
    return check_values("connection2", params, lhs, rhs)


# -- wrappers over the peak-valley closed forms ------------------------------------------

def check_pv2(n: int, k: int) -> IdentityCheck:
    params = {"n": n, "k": k}
    sub = []
    lhs, rhs = pv_closed_forms("2PV", n, k)
    sub.append(check_values("pv2", params, lhs, rhs))
    lhs, rhs = pv_closed_forms("weighted-Alt", n, k)
    sub.append(check_values("pv2", params, lhs, rhs))
    return _combine("pv2", params, sub)


def check_pv3a(n: int, k: int) -> IdentityCheck:
    params = {"n": n, "k": k}
    lhs, rhs = pv_closed_forms("3PV", n, k)
    return check_values("pv3a", params, lhs, rhs)


def check_pv3b(n: int, k: int) -> IdentityCheck:
    params = {"n": n, "k": k}
    lhs, rhs = pv_closed_forms("3PV-modified", n, k)
    return check_values("pv3b", params, lhs, rhs)


def check_pv3_rs(n: int, k: int, r: int, s: int) -> IdentityCheck:
    """Endpoint-pinned 3-PV identities at both bounds plus their unit-weight
    sign corollaries."""
    params = {"n": n, "k": k, "r": r, "s": s}
    sub = []
    ones = one_one()
    if 0 <= r <= 3 * k - 1 and 0 <= s <= 3 * k - 1:
        lhs, rhs = pv_closed_forms("3PV-rs", n, k, r, s)
        sub.append(check_values("pv3-rs", params, lhs, rhs))
        mu = negative_moment(n, r, s, 3 * k - 1, ones)
        count = len(paths.pv_sequences(3, n - 1, 3 * k - 1, r=r, s=s))
        sign = (-1) ** (r // 3 + s // 3 + r + s + n)
        sub.append(check_values("pv3-rs", params, mu, MultiPoly.const(sign * count)))
    if 0 <= r <= 3 * k and 0 <= s <= 3 * k:
        lhs, rhs = pv_closed_forms("3PV-modified-rs", n, k, r, s)
        sub.append(check_values("pv3-rs", params, lhs, rhs))
        mu = negative_moment(n, r, s, 3 * k, ones)
        count = len(paths.pv_sequences(3, n - 1, 3 * k, modified=True, r=r, s=s))
        sign = (-1) ** ((r + 1) // 3 + (s + 1) // 3 + r + s)
        sub.append(check_values("pv3-rs", params, mu, MultiPoly.const(sign * count)))
    if not sub:
        return skipped("pv3-rs", params, "endpoints exceed both bounds")
    return _combine("pv3-rs", params, sub)


# -- inverse-formula checks ----------------------------------------------------------

def check_usmani(k: int) -> IdentityCheck:
    """A * A^{-1} = I for the continuant-based inverse, fully symbolic."""
    params = {"k": k}
    spec = symbolic()
    A = transfer_matrix(k, spec)
    inv = usmani_inverse(k, spec)
    prod = A * inv
    for i in range(k + 1):
        for j in range(k + 1):
            want = RatFunc(1 if i == j else 0)
            if prod[i, j] != want:
                return IdentityCheck("usmani", params, "FAIL",
                                     witness=f"entry ({i},{j}) = {prod[i, j]}")
    return IdentityCheck("usmani", params, "PASS")


def check_vv_inverse(k: int) -> IdentityCheck:
    """Closed-form V-weight inverse against the continuant inverse."""
    params = {"k": k}
    if k % 3 == 1:
        return skipped("vv-inv", params, "k = 1 (mod 3): matrix singular")
    closed = v_inverse_closed_form(k)
    usm = usmani_inverse(k, v_inverse())
    for i in range(k + 1):
        for j in range(k + 1):
            if RatFunc(closed[i, j]) != usm[i, j]:
                return IdentityCheck("vv-inv", params, "FAIL",
                                     witness=f"entry ({i},{j}) differs")
    A = transfer_matrix(k, v_inverse())
    prod = A * closed
    for i in range(k + 1):
        for j in range(k + 1):
            want = MultiPoly.const(1 if i == j else 0)
            got = prod[i, j]
            same = (got == want) if isinstance(got, MultiPoly) else (got == RatFunc(want))
            if not same:
                return IdentityCheck("vv-inv", params, "FAIL",
                                     witness=f"product entry ({i},{j}) = {got}")
    return IdentityCheck("vv-inv", params, "PASS")


def check_inverse_minor_identity(size: int, seed: int = 0) -> IdentityCheck:
    """Minor-complement identity between a matrix and its inverse.

    [A^{-1}]_{I,J} = (-1)^{sum I + sum J} [A]_{J', I'} / det(A) over all
    index pairs, exercised on a seeded random rational matrix and on the
    symbolic transfer matrix.
    """
    import itertools
    import random

    params = {"size": size, "seed": seed}
    rng = random.Random(seed)
    while True:
        data = [[Fraction(rng.randint(-6, 6), rng.randint(1, 4))
                 for _ in range(size)] for _ in range(size)]
        M = Matrix(data)
        det = determinant(M)
        if not det.is_zero():
            break
    matrices = [M]
    if size <= 3:
        matrices.append(transfer_matrix(size - 1, symbolic()))
    from .matrix import matrix_inverse, minor
    for A in matrices:
        det = determinant(A)
        inv = matrix_inverse(A)
        full = list(range(size))
        for t in range(0, size + 1):
            for I in itertools.combinations(full, t):
                for J in itertools.combinations(full, t):
                    lhs = determinant(Matrix(
                        [[inv[i, j] for j in J] for i in I])) if t else RatFunc(1)
                    Ic = [i for i in full if i not in I]
                    Jc = [j for j in full if j not in J]
                    rhs_minor = minor(A, Jc, Ic)
                    sign = (-1) ** (sum(I) + sum(J))
                    rhs = RatFunc(sign * rhs_minor, det)
                    if _as_ratfunc(lhs) != rhs:
                        return IdentityCheck(
                            "inverse-minor", params, "FAIL",
                            witness=f"I={I} J={J}")
    return IdentityCheck("inverse-minor", params, "PASS")


# -- Schroeder side -----------------------------------------------------------------

def check_sigma(n: int, k: int) -> IdentityCheck:
    """Backward Schroeder moments: symbolic identity plus count reciprocity."""
    from .laurent import (
        schroeder_count_reciprocity,
        sigma_negative,
        sigma_negative_oracle,
    )
    from .weights import laurent_symbolic

    params = {"n": n, "k": k}
    sub = []
    syms = laurent_symbolic()
    sub.append(check_values("sigma", params, sigma_negative(n, k, syms),
                            sigma_negative_oracle(n, k, syms)))
    lhs, rhs = schroeder_count_reciprocity(n, k)
    sub.append(check_values("sigma", params, lhs, rhs))
    return _combine("sigma", params, sub)
