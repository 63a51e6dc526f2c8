"""Exact sparse multivariate Laurent polynomials over the rationals.

A polynomial is a mapping from monomials to nonzero ``Fraction``
coefficients.  A monomial is a sorted tuple of ``(variable, exponent)``
pairs with nonzero integer exponents; exponents may be negative, so the
ring is a Laurent polynomial ring.  A variable is a ``(family, index)``
pair drawn from the fixed families

    b0, b1, ...   lam1, lam2, ...   a1, a2, ...
    V0, V1, ...   A1, A2, ...       q   x

(``q`` and ``x`` carry no index, stored as index -1).

Canonical term order is graded lexicographic: monomials are compared
first by total degree, then lexicographically on the exponent vector
taken in variable order.  The text rendering produced by ``render`` is
the fixture format used throughout the test suite.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

FAMILIES = ("b", "lam", "a", "V", "A", "q", "x")
_FAMILY_RANK = {fam: r for r, fam in enumerate(FAMILIES)}
_UNINDEXED = ("q", "x")

Var = Tuple[str, int]
Monomial = Tuple[Tuple[Var, int], ...]
Scalar = Union[int, Fraction]


def _var_key(v: Var) -> Tuple[int, int]:
    return (_FAMILY_RANK[v[0]], v[1])


def make_var(family: str, index: int | None = None) -> Var:
    """Build a variable key, validating family and index conventions."""
    if family not in _FAMILY_RANK:
        raise ValueError(f"unknown variable family {family!r}")
    if family in _UNINDEXED:
        if index not in (None, -1):
            raise ValueError(f"{family} carries no index")
        return (family, -1)
    if index is None or index < 0:
        raise ValueError(f"{family} needs a nonnegative index, got {index!r}")
    return (family, index)


def var_name(v: Var) -> str:
    fam, idx = v
    return fam if fam in _UNINDEXED else f"{fam}{idx}"


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    # two-pointer merge; monomials are kept sorted in plain tuple order
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    n1, n2 = len(m1), len(m2)
    while i < n1 and j < n2:
        p1, p2 = m1[i], m2[j]
        v1, v2 = p1[0], p2[0]
        if v1 < v2:
            out.append(p1)
            i += 1
        elif v2 < v1:
            out.append(p2)
            j += 1
        else:
            e = p1[1] + p2[1]
            if e:
                out.append((v1, e))
            i += 1
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


def _mono_pow(m: Monomial, n: int) -> Monomial:
    return tuple((v, e * n) for v, e in m) if n else ()


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _mono_sort_key(m: Monomial):
    # graded lex: higher total degree first, then larger leading exponents
    ordered = sorted(m, key=lambda it: _var_key(it[0]))
    return (_mono_degree(m),
            tuple((-_var_key(v)[0], -_var_key(v)[1], e) for v, e in ordered))


class MultiPoly:
    """Immutable sparse polynomial; all arithmetic is exact."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        cleaned: Dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                if not c:
                    continue
                if not isinstance(c, int):
                    c = Fraction(c)
                    if c.denominator == 1:
                        c = c.numerator
                cleaned[m] = c
        object.__setattr__(self, "_terms", cleaned)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls()

    @classmethod
    def const(cls, c: Scalar) -> "MultiPoly":
        return cls({(): c}) if c else cls()

    @classmethod
    def variable(cls, family: str, index: int | None = None, exp: int = 1) -> "MultiPoly":
        v = make_var(family, index)
        if exp == 0:
            return cls.const(1)
        return cls({((v, exp),): 1})

    @classmethod
    def monomial(cls, coeff: Scalar, mono: Monomial) -> "MultiPoly":
        return cls({mono: coeff})

    # -- inspection --------------------------------------------------------

    def terms(self) -> Iterator[Tuple[Monomial, Fraction]]:
        """Terms in descending canonical order."""
        for m in sorted(self._terms, key=_mono_sort_key, reverse=True):
            yield m, self._terms[m]

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_const(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def is_term(self) -> bool:
        """True for a single-term polynomial (a unit in the Laurent ring)."""
        return len(self._terms) == 1

    def as_fraction(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        if not self.is_const():
            raise ValueError(f"not a constant: {self}")
        return self._terms[()]

    def variables(self) -> set:
        vs = set()
        for m in self._terms:
            for v, _ in m:
                vs.add(v)
        return vs

    def degree(self, var: Var) -> int:
        """Largest exponent of ``var`` (0 when absent; Laurent may be < 0)."""
        best = None
        for m in self._terms:
            e = dict(m).get(var, 0)
            if best is None or e > best:
                best = e
        return best or 0

    def low_degree(self, var: Var) -> int:
        """Smallest exponent of ``var`` over all terms (0 for the zero poly)."""
        lows = [dict(m).get(var, 0) for m in self._terms]
        return min(lows) if lows else 0

    def leading(self) -> Tuple[Monomial, Fraction]:
        """Leading term in canonical order; zero polynomial rejected."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._terms, key=_mono_sort_key)
        return m, self._terms[m]

    def coefficient(self, var: Var, exp: int) -> "MultiPoly":
        """Coefficient of ``var**exp`` as a polynomial in the other variables."""
        out: Dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            d = dict(m)
            if d.pop(var, 0) == exp:
                rest = tuple(sorted(d.items()))
                out[rest] = out.get(rest, 0) + c
        return MultiPoly(out)

    def as_univariate(self, var: Var) -> Dict[int, "MultiPoly"]:
        """Split into {exponent of var: coefficient poly}."""
        buckets: Dict[int, Dict[Monomial, Fraction]] = {}
        for m, c in self._terms.items():
            d = dict(m)
            e = d.pop(var, 0)
            rest = tuple(sorted(d.items()))
            bucket = buckets.setdefault(e, {})
            bucket[rest] = bucket.get(rest, 0) + c
        return {e: MultiPoly(t) for e, t in buckets.items() if any(t.values())}

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        get = out.get
        for m, c in other._terms.items():
            nc = get(m, 0) + c
            if nc:
                out[m] = nc
            else:
                del out[m]
        res = MultiPoly.__new__(MultiPoly)
        object.__setattr__(res, "_terms", out)
        return res

    __radd__ = __add__

    def __neg__(self):
        res = MultiPoly.__new__(MultiPoly)
        object.__setattr__(res, "_terms", {m: -c for m, c in self._terms.items()})
        return res

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return MultiPoly()
        # keep the smaller operand outer
        a, b = (self, other) if len(self._terms) <= len(other._terms) else (other, self)
        out: Dict[Monomial, Fraction] = {}
        get = out.get
        bterms = b._terms
        mono_mul = _mono_mul
        for m1, c1 in a._terms.items():
            for m2, c2 in bterms.items():
                m = mono_mul(m1, m2)
                nc = get(m, 0) + c1 * c2
                if nc:
                    out[m] = nc
                else:
                    del out[m]
        res = MultiPoly.__new__(MultiPoly)
        object.__setattr__(res, "_terms", out)
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.unit_inverse() ** (-n)
        result = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def unit_inverse(self) -> "MultiPoly":
        """Inverse of a single-term polynomial (a Laurent unit)."""
        if len(self._terms) != 1:
            raise ZeroDivisionError(f"not invertible in the Laurent ring: {self}")
        (m, c), = self._terms.items()
        return MultiPoly({_mono_pow(m, -1): Fraction(1, 1) / c})

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    # -- substitution and relabeling ----------------------------------------

    def subs(self, assignment: Mapping[Var, Union["MultiPoly", Scalar]]) -> "MultiPoly":
        """Substitute values for variables; untouched variables pass through.

        A variable occurring with a negative exponent must receive an
        invertible value (a nonzero constant or a single-term Laurent
        polynomial), otherwise ``ZeroDivisionError`` is raised.
        """
        vals = {v: (x if isinstance(x, MultiPoly) else MultiPoly.const(x))
                for v, x in assignment.items()}
        total = MultiPoly()
        for m, c in self._terms.items():
            term = MultiPoly.const(c)
            for v, e in m:
                if v in vals:
                    val = vals[v]
                    if e < 0:
                        if val.is_zero() or not val.is_term():
                            raise ZeroDivisionError(
                                f"substituting non-invertible value for {var_name(v)}^{e}")
                        factor = val.unit_inverse() ** (-e)
                    else:
                        factor = val ** e
                    term = term * factor
                else:
                    term = term * MultiPoly({((v, e),): Fraction(1)})
            total = total + term
        return total

    def map_vars(self, fn) -> "MultiPoly":
        """Rewrite every variable through ``fn: Var -> Var`` (a relabeling)."""
        out: Dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            nm = tuple(sorted((fn(v), e) for v, e in m))
            out[nm] = out.get(nm, 0) + c
        return MultiPoly(out)

    def reverse_index(self, n: int) -> "MultiPoly":
        """Index reversal b_i -> b_{n-i}, lam_i -> lam_{n+1-i}; an involution."""
        def fn(v: Var) -> Var:
            fam, idx = v
            if fam == "b":
                return make_var("b", n - idx)
            if fam == "lam":
                return make_var("lam", n + 1 - idx)
            return v
        return self.map_vars(fn)

    def swap_av(self, k: int) -> "MultiPoly":
        """Relabeling A_i -> V_{k+1-i}, V_i -> A_{k+1-i}; an involution."""
        def fn(v: Var) -> Var:
            fam, idx = v
            if fam == "A":
                return make_var("V", k + 1 - idx)
            if fam == "V":
                return make_var("A", k + 1 - idx)
            return v
        return self.map_vars(fn)

    # -- Laurent normalization ----------------------------------------------

    def monomial_content(self) -> Monomial:
        """Per-variable minimum exponent over all terms (the monomial gcd)."""
        if not self._terms:
            return ()
        allvars = self.variables()
        mins: Dict[Var, int] = {}
        for v in allvars:
            m = min(dict(mono).get(v, 0) for mono in self._terms)
            if m:
                mins[v] = m
        return tuple(sorted(mins.items()))

    def shift_monomial(self, mono: Monomial, power: int = 1) -> "MultiPoly":
        """Multiply every term by ``mono**power`` (exact, unit operation)."""
        if not mono or power == 0:
            return self
        shifted = _mono_pow(mono, power)
        out = {_mono_mul(m, shifted): c for m, c in self._terms.items()}
        res = MultiPoly.__new__(MultiPoly)
        object.__setattr__(res, "_terms", out)
        return res

    def rational_content(self) -> Fraction:
        """gcd of the coefficients (positive), 0 for the zero polynomial."""
        num_gcd = 0
        den_lcm = 1
        for c in self._terms.values():
            num_gcd = _int_gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // _int_gcd(den_lcm, c.denominator)
        return Fraction(num_gcd, den_lcm) if num_gcd else Fraction(0)

    # -- rendering ----------------------------------------------------------

    def render(self) -> str:
        """Canonical text form: sorted monomials, ^ powers, * separators."""
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.terms():
            factors = []
            for v, e in sorted(m, key=lambda it: _var_key(it[0])):
                factors.append(var_name(v) if e == 1 else f"{var_name(v)}^{e}")
            mono_str = "*".join(factors)
            neg = c < 0
            ac = -c if neg else c
            if mono_str and ac == 1:
                body = mono_str
            elif mono_str:
                body = f"{ac}*{mono_str}"
            else:
                body = str(ac)
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"MultiPoly({self.render()})"


# -- convenient variable factories -------------------------------------------

def b(i: int) -> MultiPoly:
    return MultiPoly.variable("b", i)


def lam(i: int) -> MultiPoly:
    return MultiPoly.variable("lam", i)


def a(i: int) -> MultiPoly:
    return MultiPoly.variable("a", i)


def V(i: int) -> MultiPoly:
    return MultiPoly.variable("V", i)


def A(i: int) -> MultiPoly:
    return MultiPoly.variable("A", i)


def q() -> MultiPoly:
    return MultiPoly.variable("q")


def x() -> MultiPoly:
    return MultiPoly.variable("x")


X_VAR: Var = ("x", -1)
Q_VAR: Var = ("q", -1)

ZERO = MultiPoly.zero()
ONE = MultiPoly.const(1)


def poly(c: Scalar) -> MultiPoly:
    return MultiPoly.const(c)


# -- exact division and gcd ---------------------------------------------------

class ExactDivisionError(ArithmeticError):
    pass


def _strip_laurent(p: MultiPoly) -> Tuple[Monomial, MultiPoly]:
    """Factor p = mono * phat where phat is a true polynomial with
    zero monomial content (every variable has minimum exponent 0)."""
    mono = p.monomial_content()
    return mono, p.shift_monomial(mono, -1)


def _main_var(p: MultiPoly) -> Var | None:
    vs = p.variables()
    return max(vs, key=_var_key) if vs else None


def poly_div_exact(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Exact division f / g; raises ExactDivisionError when not exact.

    Laurent inputs are handled by factoring out monomial units first.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero():
        return MultiPoly()
    mono_f, fh = _strip_laurent(f)
    mono_g, gh = _strip_laurent(g)
    quot_mono = _mono_mul(mono_f, _mono_pow(mono_g, -1))
    if gh.is_const():
        c = gh.as_fraction()
        res = MultiPoly({m: cf / c for m, cf in fh._terms.items()})
        return res.shift_monomial(quot_mono)
    v = _main_var(gh)
    fu = fh.as_univariate(v)
    gu = gh.as_univariate(v)
    dg = max(gu)
    glead = gu[dg]
    out = MultiPoly()
    # univariate long division in v with recursive exact division of leads
    while fu:
        df = max(fu)
        if df < dg:
            raise ExactDivisionError("division not exact (degree shortfall)")
        qc = poly_div_exact(fu[df], glead)
        if qc.is_zero():
            raise ExactDivisionError("division not exact")
        shift = df - dg
        out = out + qc * MultiPoly.variable(v[0], None if v[1] == -1 else v[1], 1) ** shift
        # subtract qc * g * v**shift from the running remainder
        for e, gc in gu.items():
            delta = qc * gc
            cur = fu.get(e + shift, MultiPoly())
            nc = cur - delta
            if nc.is_zero():
                fu.pop(e + shift, None)
            else:
                fu[e + shift] = nc
    return out.shift_monomial(quot_mono)


def _frac_gcd(a_: Fraction, b_: Fraction) -> Fraction:
    if not a_:
        return abs(b_)
    if not b_:
        return abs(a_)
    num = _int_gcd(a_.numerator, b_.numerator)
    den = a_.denominator * b_.denominator // _int_gcd(a_.denominator, b_.denominator)
    return Fraction(num, den)


def _content_and_pp(p: MultiPoly, v: Var) -> Tuple[MultiPoly, Dict[int, MultiPoly]]:
    """Content (gcd of v-coefficients) and the univariate view of p."""
    pu = p.as_univariate(v)
    coeffs = list(pu.values())
    cont = coeffs[0]
    for c in coeffs[1:]:
        cont = poly_gcd(cont, c)
        if cont.is_const():
            break
    return cont, pu


def _univ_to_poly(pu: Dict[int, MultiPoly], v: Var) -> MultiPoly:
    out = MultiPoly()
    xv = MultiPoly({((v, 1),): Fraction(1)})
    for e, c in pu.items():
        out = out + c * (xv ** e)
    return out


_PROBE_POINTS = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def _project_univariate(p: MultiPoly, w: Var, point: Dict[Var, int]) -> Dict[int, Fraction]:
    """Evaluate all variables but w at integer values; {w-exponent: value}."""
    out: Dict[int, Fraction] = {}
    for m, c in p._terms.items():
        val = c
        we = 0
        for v, e in m:
            if v == w:
                we = e
            else:
                val = val * point[v] ** e
        if val:
            out[we] = out.get(we, 0) + val
    return {e: c for e, c in out.items() if c}


def _univ_gcd_degree(a: Dict[int, Fraction], b: Dict[int, Fraction]) -> int:
    """Degree of gcd of two univariate polynomials over the rationals."""
    fa = dict(a)
    fb = dict(b)
    while fb:
        db = max(fb)
        lb = fb[db]
        while fa and max(fa) >= db:
            da = max(fa)
            ratio = Fraction(fa[da], 1) / lb
            for e, c in fb.items():
                t = e + da - db
                nc = fa.get(t, 0) - ratio * c
                if nc:
                    fa[t] = nc
                else:
                    fa.pop(t, None)
            fa.pop(da, None)
        fa, fb = fb, fa
    return max(fa) if fa else 0


def _gcd_probe_constant(f: MultiPoly, g: MultiPoly, common: set) -> bool:
    """Sound certificate that gcd(f, g) is constant.

    For each common variable w, the w-degree of the true gcd is bounded
    by the gcd degree of random integer projections; if some projection
    is coprime for every w, the gcd has degree 0 everywhere.
    """
    allvars = sorted(f.variables() | g.variables(), key=_var_key)
    for w in sorted(common, key=_var_key):
        settled = False
        for attempt in range(3):
            point = {v: _PROBE_POINTS[(i + 5 * attempt) % len(_PROBE_POINTS)]
                     for i, v in enumerate(allvars)}
            fp = _project_univariate(f, w, point)
            gp = _project_univariate(g, w, point)
            if not fp or not gp:
                continue
            # projection degree drops make the bound inconclusive
            if max(fp) != f.degree(w) or max(gp) != g.degree(w):
                continue
            if _univ_gcd_degree(fp, gp) == 0:
                settled = True
                break
        if not settled:
            return False
    return True


def poly_gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """gcd up to units, with zero monomial content and unit rational content.

    Recursive over the variable tower with the subresultant PRS in the
    main variable; a projection probe short-circuits the common coprime
    case, so nested content computations stay cheap.  Constants have
    gcd 1.
    """
    if f.is_zero():
        return _normalize_gcd(g)
    if g.is_zero():
        return _normalize_gcd(f)
    _, fh = _strip_laurent(f)
    _, gh = _strip_laurent(g)
    if fh.is_const() or gh.is_const():
        return MultiPoly.const(1)
    common = fh.variables() & gh.variables()
    if not common:
        return MultiPoly.const(1)
    if _gcd_probe_constant(fh, gh, common):
        return MultiPoly.const(1)
    # shortest PRS: main variable with the smallest larger degree
    v = min(common, key=lambda w: (max(fh.degree(w), gh.degree(w)), _var_key(w)))
    if fh.degree(v) == 0 or gh.degree(v) == 0:
        with_v, without = (fh, gh) if gh.degree(v) == 0 else (gh, fh)
        cont, _ = _content_and_pp(with_v, v)
        return _normalize_gcd(poly_gcd(cont, without))
    cf, fu = _content_and_pp(fh, v)
    cg, gu = _content_and_pp(gh, v)
    cont = poly_gcd(cf, cg)
    fp = {e: poly_div_exact(c, cf) for e, c in fu.items()}
    gp = {e: poly_div_exact(c, cg) for e, c in gu.items()}
    pp = _subresultant_prs(fp, gp, v)
    return _normalize_gcd(cont * pp)


def _normalize_gcd(p: MultiPoly) -> MultiPoly:
    if p.is_zero():
        return p
    _, ph = _strip_laurent(p)
    cont = ph.rational_content()
    _, lead_c = ph.leading()
    sign = -1 if lead_c < 0 else 1
    scale = Fraction(1) / (cont * sign)
    return MultiPoly({m: c * scale for m, c in ph._terms.items()})


def _pseudo_rem(fu: Dict[int, MultiPoly], gu: Dict[int, MultiPoly]) -> Dict[int, MultiPoly]:
    """Textbook pseudo-remainder: lc(g)^(deg f - deg g + 1) * f  mod  g."""
    df = max(fu)
    dg = max(gu)
    glead = gu[dg]
    mults = 0
    r = dict(fu)
    while r and max(r) >= dg:
        dr = max(r)
        rlead = r[dr]
        shift = dr - dg
        nr: Dict[int, MultiPoly] = {e: c * glead for e, c in r.items()}
        mults += 1
        for e, c in gu.items():
            cur = nr.get(e + shift, MultiPoly())
            nc = cur - rlead * c
            if nc.is_zero():
                nr.pop(e + shift, None)
            else:
                nr[e + shift] = nc
        nr.pop(dr, None)
        r = {e: c for e, c in nr.items() if not c.is_zero()}
    want = df - dg + 1
    if mults < want:
        factor = glead ** (want - mults)
        r = {e: c * factor for e, c in r.items()}
    return r


def _cheap_strip(r: Dict[int, MultiPoly]) -> Dict[int, MultiPoly]:
    """Divide out rational and monomial content shared by all coefficients."""
    polys = list(r.values())
    cont = polys[0].rational_content()
    for p in polys[1:]:
        cont = _frac_gcd(cont, p.rational_content())
        if cont == 1:
            break
    mono = polys[0].monomial_content()
    for p in polys[1:]:
        if not mono:
            break
        other = dict(p.monomial_content())
        mono = tuple((v, min(e, other[v])) for v, e in mono
                     if v in other and min(e, other[v]) != 0)
    out = r
    if cont not in (0, 1):
        inv = Fraction(1) / cont
        out = {e: p * inv for e, p in out.items()}
    if mono:
        out = {e: p.shift_monomial(mono, -1) for e, p in out.items()}
    return out


def _subresultant_prs(fu: Dict[int, MultiPoly], gu: Dict[int, MultiPoly], v: Var) -> MultiPoly:
    """gcd of two primitive polynomials in (R[others])[v], as a primitive poly.

    Remainders are reduced by the subresultant factors; if a factor turns
    out not to divide exactly (the bookkeeping is conservative), the step
    falls back to stripping cheap content, which keeps the result correct
    at the price of larger intermediates.
    """
    if max(fu) < max(gu):
        fu, gu = gu, fu
    g_fac = MultiPoly.const(1)
    h_fac = MultiPoly.const(1)
    first = True
    while True:
        delta = max(fu) - max(gu)
        r = _pseudo_rem(fu, gu)
        if not r:
            break
        if max(r) == 0:
            return MultiPoly.const(1)
        if first:
            divisor = MultiPoly.const((-1) ** (delta + 1))
            first = False
        else:
            divisor = -g_fac * (h_fac ** delta)
        try:
            r = {e: poly_div_exact(c, divisor) for e, c in r.items()}
        except ExactDivisionError:
            r = _cheap_strip(r)
        fu, gu = gu, r
        g_fac = fu[max(fu)]
        if delta >= 1:
            try:
                h_fac = poly_div_exact(g_fac ** delta, h_fac ** (delta - 1))
            except ExactDivisionError:
                h_fac = g_fac ** delta
    cont = None
    for c in gu.values():
        cont = c if cont is None else poly_gcd(cont, c)
        if cont.is_const():
            break
    gp = {e: poly_div_exact(c, cont) for e, c in gu.items()}
    return _univ_to_poly(gp, v)
