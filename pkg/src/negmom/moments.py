"""Closed-form bounded and negative moments of orthogonal polynomials.

The forward side is the transfer-matrix picture: the (r, s) entry of the
n-th power of the tridiagonal matrix

    A(k; b, lam) = tridiag(lam_1..lam_k; b_0..b_k; 1..1)

is the weighted count of height-bounded Motzkin paths from height r to
height s.  The backward side extends that sequence along its linear
recurrence; three independent routes are provided (generating-function
reversal, inverse-matrix powers, explicit recurrence stepping) and are
tested against each other and against the path oracles.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple, Union

from . import paths
from .matrix import Matrix, SingularMatrixError, matrix_inverse
from .poly import MultiPoly, X_VAR
from .ratfunc import (
    RatFunc,
    SeriesCoefficientError,
    cf_eval,
    deg_x,
    reverse_gf,
    series_expand,
    series_expand_rat,
    x_coeffs,
)
from .weights import WeightSpec, av_lambda, dyck_v, v_inverse

Value = Union[MultiPoly, RatFunc]

_X = MultiPoly.variable("x")
_ONE = MultiPoly.const(1)


class IllDefinedError(ArithmeticError):
    """Negative moments requested for a spec whose recurrence degenerates."""

    def __init__(self, message: str, certificate: MultiPoly | None = None):
        super().__init__(message)
        self.certificate = certificate


# -- transfer matrix and forward moments ---------------------------------------

def transfer_matrix(k: int, spec: WeightSpec) -> Matrix:
    """(k+1)x(k+1) tridiagonal matrix with diagonal b, subdiagonal lam."""
    if k < 0:
        raise ValueError("bound k must be nonnegative")
    rows = []
    for i in range(k + 1):
        row = []
        for j in range(k + 1):
            if i == j:
                row.append(spec.b(i))
            elif j == i + 1:
                row.append(_ONE)
            elif j == i - 1:
                row.append(spec.lam(i))
            else:
                row.append(MultiPoly.zero())
        rows.append(row)
    return Matrix(rows)


def moment_vectors(k: int, spec: WeightSpec, r: int, n_max: int) -> Iterator[List[MultiPoly]]:
    """Yield the row vectors e_r^T A^n for n = 0..n_max."""
    if not 0 <= r <= k:
        raise IndexError(f"start height {r} outside [0, {k}]")
    u = [MultiPoly.const(1) if i == r else MultiPoly.zero() for i in range(k + 1)]
    yield u
    bs = [spec.b(i) for i in range(k + 1)]
    lams = [None] + [spec.lam(i) for i in range(1, k + 1)]
    for _ in range(n_max):
        nu = []
        for j in range(k + 1):
            acc = u[j] * bs[j]
            if j > 0:
                acc = acc + u[j - 1]
            if j < k:
                acc = acc + u[j + 1] * lams[j + 1]
            nu.append(acc)
        u = nu
        yield u


def bounded_moment(n: int, r: int, s: int, k: int, spec: WeightSpec) -> MultiPoly:
    """Weighted count of bounded Motzkin paths: e_r^T A^n e_s."""
    if n < 0:
        raise ValueError("use negative_moment for negative indices")
    if not 0 <= s <= k:
        raise IndexError(f"end height {s} outside [0, {k}]")
    for i, u in enumerate(moment_vectors(k, spec, r, n)):
        if i == n:
            return u[s]
    raise AssertionError("unreachable")


def moment_sequence(k: int, spec: WeightSpec, n_max: int,
                    r: int = 0, s: int = 0) -> List[MultiPoly]:
    return [u[s] for u in moment_vectors(k, spec, r, n_max)]


# -- orthogonal polynomials and generating functions -----------------------------

def orth_poly(n: int, spec: WeightSpec) -> MultiPoly:
    """Monic P_n from P_{n+1} = (x - b_n) P_n - lam_n P_{n-1}."""
    if n < 0:
        return MultiPoly.zero()
    prev, cur = MultiPoly.zero(), MultiPoly.const(1)
    for i in range(n):
        prev, cur = cur, (_X - spec.b(i)) * cur - (spec.lam(i) * prev if i >= 1 else MultiPoly.zero())
    return cur


def inverted_poly(n: int, spec: WeightSpec) -> MultiPoly:
    """P*_n(x) = x^n P_n(1/x)."""
    p = orth_poly(n, spec)
    out = MultiPoly.zero()
    for e, c in x_coeffs(p).items():
        out = out + c * MultiPoly.variable("x", exp=n - e)
    return out


def shifted_inverted_poly(j: int, m: int, spec: WeightSpec) -> MultiPoly:
    """delta^j P*_m: the inverted polynomial built on the j-shifted sequences."""
    return inverted_poly(m, spec.shift(j))


def moment_gf(r: int, s: int, k: int, spec: WeightSpec) -> RatFunc:
    """Rational generating function of (mu_{n,r,s}^{<=k})_{n>=0} in x."""
    if not (0 <= r <= k and 0 <= s <= k):
        raise IndexError("heights must lie in [0, k]")
    den = inverted_poly(k + 1, spec)
    if r <= s:
        num = (_X ** (s - r)) * inverted_poly(r, spec) * shifted_inverted_poly(s + 1, k - s, spec)
    else:
        prod = MultiPoly.const(1)
        for i in range(s + 1, r + 1):
            prod = prod * spec.lam(i)
        num = (_X ** (r - s)) * inverted_poly(s, spec) \
            * shifted_inverted_poly(r + 1, k - r, spec) * prod
    return RatFunc(num, den)


def negative_moment_gf(r: int, s: int, k: int, spec: WeightSpec) -> RatFunc:
    """Rational generating function of (mu_{-n,r,s}^{<=k})_{n>=1} in x."""
    ok, cert = well_defined(k, spec)
    if not ok:
        raise IllDefinedError(
            f"P_{k + 1}(0) = 0 for spec {spec.name}: no backward extension", cert)
    den = orth_poly(k + 1, spec)
    if r <= s:
        num = -_X * orth_poly(r, spec) * orth_poly(k - s, spec.shift(s + 1))
    else:
        prod = MultiPoly.const(1)
        for i in range(s + 1, r + 1):
            prod = prod * spec.lam(i)
        num = -_X * orth_poly(s, spec) * orth_poly(k - r, spec.shift(r + 1)) * prod
    return RatFunc(num, den)


def viennot_cf(k: int, spec: WeightSpec) -> RatFunc:
    """Depth-(k+1) continued fraction for the forward moment series."""
    x2 = _X * _X
    nums = [_ONE] + [spec.lam(i) * x2 for i in range(1, k + 1)]
    dens = [_ONE - spec.b(i) * _X for i in range(k + 1)]
    return cf_eval(nums, dens)


def negative_cf(k: int, spec: WeightSpec) -> RatFunc:
    """Continued fraction -x/(x - b0 - lam1/(x - b1 - ...)) for the backward series."""
    ok, cert = well_defined(k, spec)
    if not ok:
        raise IllDefinedError(
            f"P_{k + 1}(0) = 0 for spec {spec.name}: no backward extension", cert)
    nums = [-_X] + [spec.lam(i) for i in range(1, k + 1)]
    dens = [_X - spec.b(i) for i in range(k + 1)]
    return cf_eval(nums, dens)


def well_defined(k: int, spec: WeightSpec) -> Tuple[bool, MultiPoly]:
    """Whether the backward extension exists; certificate is P_{k+1}(0)."""
    cert = orth_poly(k + 1, spec).subs({X_VAR: 0})
    return (not cert.is_zero(), cert)


# -- negative moments: three routes ---------------------------------------------

def negative_moment(n: int, r: int, s: int, k: int, spec: WeightSpec,
                    method: str = "gf-reverse") -> Value:
    """mu_{-n,r,s}^{<=k}; methods: gf-reverse, matrix-inverse, recurrence."""
    if n < 1:
        raise ValueError("negative index n must be >= 1")
    ok, cert = well_defined(k, spec)
    if not ok:
        raise IllDefinedError(
            f"P_{k + 1}(0) = 0 for spec {spec.name}: no backward extension", cert)
    if method == "gf-reverse":
        return _series_coefficient(_reversed_moment_gf(r, s, k, spec), n)
    if method == "matrix-inverse":
        inv = inverse_transfer(k, spec)
        u: List[Value] = [RatFunc(1) if i == r else RatFunc(0) for i in range(k + 1)]
        for _ in range(n):
            u = [sum((u[t] * inv[t, j] for t in range(k + 1)), RatFunc(0))
                 for j in range(k + 1)]
        val = u[s]
        return val.as_poly_or_self() if isinstance(val, RatFunc) else val
    if method == "recurrence":
        return _recurrence_extension(n, r, s, k, spec)
    raise ValueError(f"unknown method {method!r}")


@lru_cache(maxsize=4096)
def _reversed_moment_gf(r: int, s: int, k: int, spec: WeightSpec) -> RatFunc:
    return reverse_gf(moment_gf(r, s, k, spec))


def _series_coefficient(f: RatFunc, n: int) -> Value:
    try:
        return series_expand(f, n + 1)[n]
    except SeriesCoefficientError:
        val = series_expand_rat(f, n + 1)[n]
        return val.as_poly_or_self()


def inverse_transfer(k: int, spec: WeightSpec) -> Matrix:
    """Inverse of the transfer matrix, raising IllDefinedError when singular."""
    try:
        return matrix_inverse(transfer_matrix(k, spec))
    except SingularMatrixError as exc:
        raise IllDefinedError(f"transfer matrix singular for {spec.name}",
                              exc.determinant) from exc


def _recurrence_extension(n: int, r: int, s: int, k: int, spec: WeightSpec) -> Value:
    """Step the reduced-denominator recurrence backwards to index -n."""
    f = moment_gf(r, s, k, spec)
    if f.is_zero():
        return MultiPoly.zero()
    qu = x_coeffs(f.den)
    d = max(qu)
    if d == 0:
        raise IllDefinedError("moment sequence admits no homogeneous recurrence",
                              well_defined(k, spec)[1])
    # window holds [c_t, ..., c_{t+d-1}], initially t = 0
    window: List[RatFunc] = list(series_expand_rat(f, d))
    qd = RatFunc(qu[d])
    for _ in range(n):
        # homogeneous relation sum_{j=0}^{d} q_j c_{m-j} = 0 defines c_{m-d}
        acc = RatFunc(0)
        for j in range(0, d):
            qj = qu.get(j)
            if qj is not None:
                acc = acc - RatFunc(qj) * window[d - 1 - j]
        window = [acc / qd] + window[:-1]
    return window[0].as_poly_or_self()


def extended_moment(j: int, r: int, s: int, k: int, spec: WeightSpec,
                    method: str = "gf-reverse") -> Value:
    """mu_j for any integer j: forward for j >= 0, backward otherwise."""
    if j >= 0:
        return bounded_moment(j, r, s, k, spec)
    return negative_moment(-j, r, s, k, spec, method=method)


# -- closed-form tridiagonal inverses ---------------------------------------------

def usmani_inverse(k: int, spec: WeightSpec) -> Matrix:
    """Tridiagonal inverse from the forward/backward continuant recurrences.

    theta_i runs the leading principal minors and phi_i the trailing ones;
    the (i, j) entry is (-1)^{i+j} theta_i phi_{j+2} / theta_{k+1} above the
    diagonal, with the product lam_{j+1}..lam_i attached below it.
    """
    theta: List[MultiPoly] = [MultiPoly.const(1)]
    for i in range(1, k + 2):
        t = spec.b(i - 1) * theta[i - 1]
        if i >= 2:
            t = t - spec.lam(i - 1) * theta[i - 2]
        theta.append(t)
    det = theta[k + 1]
    if det.is_zero():
        raise SingularMatrixError("theta_{k+1} = 0: matrix not invertible",
                                  determinant=det)
    phi: Dict[int, MultiPoly] = {k + 2: MultiPoly.const(1), k + 3: MultiPoly.zero()}
    for i in range(k + 1, 0, -1):
        p = spec.b(i - 1) * phi[i + 1]
        if i <= k:
            p = p - spec.lam(i) * phi[i + 2]
        phi[i] = p
    rows = []
    for i in range(k + 1):
        row = []
        for j in range(k + 1):
            if i <= j:
                num = theta[i] * phi[j + 2]
            else:
                prod = MultiPoly.const(1)
                for t in range(j + 1, i + 1):
                    prod = prod * spec.lam(t)
                num = prod * theta[j] * phi[i + 2]
            if (i + j) % 2:
                num = -num
            row.append(RatFunc(num, det))
        rows.append(row)
    return Matrix(rows)


def v_inverse_closed_form(k: int) -> Matrix:
    """Explicit inverse of the transfer matrix under the V-reciprocal weights.

    Defined for k != 1 (mod 3).  The (i, j) entry is a signed Laurent
    monomial +-(V_0..V_j)/(V_0..V_{i-1}) or zero; the sign/mask pattern
    follows from the continuant sequences, whose leading-minor side
    vanishes at residue 2 and whose trailing-minor side vanishes at
    residue 0 (for k = 2 mod 3) or residue 1 (for k = 0 mod 3), with a
    residue-dependent sign twist in the latter case.
    """
    if k % 3 == 1:
        raise IllDefinedError(f"bound {k} = 1 (mod 3): matrix is singular")

    def theta_side(m: int) -> int:
        # (-1)^m * sign(theta_m): 0 at residue 2
        return 0 if m % 3 == 2 else (-1) ** (m // 3)

    def phi_side(m: int) -> int:
        # (-1)^m * sign(phi_{m+2}): depends on k mod 3
        if k % 3 == 2:
            return 0 if m % 3 == 0 else (-1) ** (m // 3)
        if m % 3 == 1:
            return 0
        s = (-1) ** (m // 3)
        return s if m % 3 == 0 else -s

    tau = 1 if k % 3 == 2 else -1
    rows = []
    for i in range(k + 1):
        row = []
        for j in range(k + 1):
            sign = (theta_side(i) * phi_side(j) if i <= j
                    else theta_side(j) * phi_side(i)) * tau
            if sign == 0:
                row.append(MultiPoly.zero())
                continue
            mono = MultiPoly.const(sign)
            for t in range(0, j + 1):
                mono = mono * MultiPoly.variable("V", t)
            for t in range(0, i):
                mono = mono * MultiPoly.variable("V", t, -1)
            row.append(mono)
        rows.append(row)
    return Matrix(rows)


# -- peak-valley closed forms -------------------------------------------------------

def _v_ratio(r: int, s: int) -> MultiPoly:
    """(V_0 ... V_s) / (V_0 ... V_{r-1}) as a Laurent monomial."""
    mono = MultiPoly.const(1)
    for t in range(0, s + 1):
        mono = mono * MultiPoly.variable("V", t)
    for t in range(0, r):
        mono = mono * MultiPoly.variable("V", t, -1)
    return mono


def pv_closed_forms(which: str, n: int, k: int,
                    r: int = 0, s: int = 0) -> Tuple[Value, Value]:
    """Both sides of a peak-valley moment identity; the caller asserts equality.

    The left side is the negative moment computed from the closed-form
    machinery, the right side a brute-force weighted sequence count.
    Boundary conventions at n = 1 follow the (r, s)-pinned sets, which is
    what the inverse-matrix expansion actually produces.
    """
    if which == "2PV":
        lhs = negative_moment(2 * n, 0, 0, 2 * k - 1, dyck_v())
        total = MultiPoly.zero()
        for seq in paths.pv_sequences(2, 2 * n - 1, 2 * k - 1):
            total = total + paths.wt_seq_v(seq)
        return lhs, MultiPoly.variable("V", 0) * total
    if which == "3PV":
        lhs = negative_moment(n, 0, 0, 3 * k - 1, v_inverse())
        total = MultiPoly.zero()
        for seq in paths.pv_sequences(3, n - 1, 3 * k - 1, r=0, s=0):
            total = total + paths.wt_seq_v(seq)
        return lhs, MultiPoly.variable("V", 0) * total
    if which == "3PV-modified":
        lhs = negative_moment(n, 0, 0, 3 * k, v_inverse())
        total = MultiPoly.zero()
        for seq in paths.pv_sequences(3, n - 1, 3 * k, modified=True, r=0, s=0):
            total = total + paths.wt_seq_v(seq)
        sign = -1 if n % 2 else 1
        return lhs, sign * MultiPoly.variable("V", 0) * total
    if which == "3PV-rs":
        bound = 3 * k - 1
        lhs = negative_moment(n, r, s, bound, v_inverse())
        total = MultiPoly.zero()
        for seq in paths.pv_sequences(3, n - 1, bound, r=r, s=s):
            total = total + paths.wt_seq_v(seq)
        sign = -1 if (r // 3 + s // 3) % 2 else 1
        return lhs, sign * _v_ratio(r, s) * total
    if which == "3PV-modified-rs":
        bound = 3 * k
        lhs = negative_moment(n, r, s, bound, v_inverse())
        total = MultiPoly.zero()
        for seq in paths.pv_sequences(3, n - 1, bound, modified=True, r=r, s=s):
            total = total + paths.wt_seq_v(seq)
        sign = -1 if ((r + 1) // 3 + (s + 1) // 3 + n) % 2 else 1
        return lhs, sign * _v_ratio(r, s) * total
    if which == "weighted-Alt":
        lhs = negative_moment(2 * n, 0, 0, 2 * k - 1, av_lambda())
        total = MultiPoly.zero()
        for seq in paths.alt_sequences(2 * n - 1, k):
            total = total + paths.wt_seq_av(seq)
        return lhs, MultiPoly.variable("V", 1) * total.swap_av(k)
    raise ValueError(f"unknown identity {which!r}")
