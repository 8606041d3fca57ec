"""Exact Pochhammer arithmetic, terminating hypergeometric sums, and the
closed-form constants of the two transvectant identities.

Two families of constants are computed here:

* ``self_coeff_*``: the constant relating the 2p-th self-transvectant of
  the e-th power of a binary quadratic to Q^(2e-2p) (-disc)^p.  Routes:
  the alternating binomial sum (the terminating series that Dixon's
  theorem evaluates), the two-regime factorial closed form, and the
  prefactor-times-3F2 form summed term by term.
* ``chain_coeff_closed``: the constant in the omega-power of the two-letter
  chain product, as a characteristic function times a factorial prefactor
  times the Chu-Vandermonde-summable kernel J.

Everything is exact rational arithmetic; no Gamma functions, no floats.
"""

from __future__ import annotations

from math import comb, factorial

from .poly import Poly, Rational, VarTable
from .omega import omega_power

__all__ = [
    "pochhammer",
    "terminating_3f2",
    "self_coeff_closed",
    "self_coeff_closed_low",
    "self_coeff_closed_high",
    "self_coeff_dixon",
    "self_coeff_3f2",
    "j_sum",
    "j_closed",
    "chain_coeff_closed",
    "chain_characteristic",
    "chain_shape",
    "generating_series_check",
    "closed_generating_series",
    "direct_generating_series",
    "GEN_VARS",
]


def pochhammer(a, n: int) -> Rational:
    """Rising factorial a(a+1)...(a+n-1); equals 1 when n == 0."""
    if n < 0:
        raise ValueError("pochhammer index must be nonnegative")
    a = Rational(a)
    out = Rational(1)
    for i in range(n):
        out *= a + i
    return out


def _nonpos_int(q) -> int | None:
    """Return -q as an int when q is a nonpositive integer, else None."""
    q = Rational(q)
    if q.denominator == 1 and q.numerator <= 0:
        return -int(q.numerator)
    return None


def terminating_3f2(a, b, c, d, e) -> Rational:
    """Terminating 3F2[a,b,c; d,e; 1] summed exactly.

    At least one upper parameter must be a nonpositive integer; a lower
    parameter reaching a pole before the series terminates is an error.
    """
    stops = [s for s in (_nonpos_int(a), _nonpos_int(b), _nonpos_int(c)) if s is not None]
    if not stops:
        raise ValueError("series does not terminate: no nonpositive-integer upper parameter")
    n_max = min(stops)
    for low in (d, e):
        pole = _nonpos_int(low)
        if pole is not None and pole + 1 <= n_max:
            raise ValueError(f"lower parameter {low} hits a pole before termination")
    a, b, c, d, e = (Rational(q) for q in (a, b, c, d, e))
    term = Rational(1)
    total = Rational(1)
    for i in range(n_max):
        term = term * (a + i) * (b + i) * (c + i) / ((1 + i) * (d + i) * (e + i))
        total += term
    return total


# --------------------------------------------------------------------------- self


def _check_self_range(e: int, p: int) -> None:
    if e < 1 or p < 0 or p > e:
        raise ValueError(f"(e={e}, p={p}) outside 1 <= e, 0 <= p <= e")


def self_coeff_closed_low(e: int, p: int) -> Rational:
    """Factorial closed form valid for 0 <= 2p <= e."""
    return Rational(
        factorial(2 * p) * factorial(2 * e - p) * factorial(e) ** 2,
        factorial(p) * factorial(2 * e - 2 * p) * factorial(e - p) ** 2,
    )


def self_coeff_closed_high(e: int, p: int) -> Rational:
    """Dixon evaluation of the high-regime series (e <= 2p <= 2e), written
    in the gap m = e - p: (2p)! (e+m)! e!^2 / (p! (2m)! m!^2).

    Well-poisedness forces this to coincide with the low-regime expression;
    the two code paths stay separate as a transcription cross-check.
    """
    m = e - p
    return Rational(
        factorial(2 * p) * factorial(e + m) * factorial(e) ** 2,
        factorial(p) * factorial(2 * m) * factorial(m) ** 2,
    )


def self_coeff_closed(e: int, p: int) -> Rational:
    """Two-regime closed form; at 2p == e both regimes are evaluated and
    must agree."""
    _check_self_range(e, p)
    if 2 * p < e:
        return self_coeff_closed_low(e, p)
    if 2 * p > e:
        return self_coeff_closed_high(e, p)
    low, high = self_coeff_closed_low(e, p), self_coeff_closed_high(e, p)
    if low != high:
        raise RuntimeError(f"regime formulas disagree at e={e}, p={p}: {low} vs {high}")
    return low


def self_coeff_dixon(e: int, p: int) -> Rational:
    """Alternating binomial sum from expanding the omega power directly on
    Q = x1 x2; the terminating series evaluated by Dixon's theorem."""
    _check_self_range(e, p)
    total = Rational(0)
    for i in range(max(0, 2 * p - e), min(2 * p, e) + 1):
        total += (
            (-1) ** (p + i)
            * comb(2 * p, i)
            * Rational(
                factorial(e) ** 4,
                factorial(e - 2 * p + i) ** 2 * factorial(e - i) ** 2,
            )
        )
    return total


def self_coeff_3f2(e: int, p: int) -> Rational:
    """Prefactor-times-3F2 form of the constant, summed exactly."""
    _check_self_range(e, p)
    if 2 * p <= e:
        pref = Rational((-1) ** p * (factorial(e) // factorial(e - 2 * p)) ** 2)
        return pref * terminating_3f2(-2 * p, -e, -e, e - 2 * p + 1, e - 2 * p + 1)
    pref = Rational(
        (-1) ** (p + e) * factorial(2 * p) * factorial(e) ** 3,
        factorial(2 * p - e) * factorial(2 * e - 2 * p) ** 2,
    )
    return pref * terminating_3f2(
        -2 * e + 2 * p, -2 * e + 2 * p, -e, 1, 2 * p - e + 1
    )


# --------------------------------------------------------------------------- chain


def j_sum(s: int, p: int) -> Rational:
    """Kernel J as its defining alternating sum over beta."""
    if s < 0 or p < 0:
        raise ValueError("j_sum needs nonnegative integers")
    total = Rational(0)
    for beta in range(p + 1):
        total += (
            (-1) ** beta
            * 2 ** (2 * p - 2 * beta)
            * Rational(factorial(s + 2 * p - beta), factorial(2 * p - 2 * beta) * factorial(beta))
        )
    return total


def j_closed(s: int, p: int) -> Rational:
    """Kernel J in Chu-Vandermonde closed form (s+p)! (s+3/2)_p / (1/2)_p.

    The half-integer Pochhammers cancel to a rational; the value is checked
    to be an integer, which catches transcription slips.
    """
    if s < 0 or p < 0:
        raise ValueError("j_closed needs nonnegative integers")
    value = (
        factorial(s + p)
        * pochhammer(Rational(2 * s + 3, 2), p)
        / (factorial(p) * pochhammer(Rational(1, 2), p))
    )
    if value.denominator != 1:
        raise RuntimeError(f"J({s},{p}) is not an integer: {value}")
    return value


def chain_characteristic(r: int, e: int, pp: int, p: int) -> bool:
    return pp - p >= 0 and e - pp + p >= 0 and r * e - pp - p >= 0


def _check_chain_range(r: int, e: int, pp: int, p: int) -> None:
    # p' has no upper bound here: the characteristic conditions imply
    # 2p' <= (r+1)e, so any larger p' falls into the zero branch
    if r < 2 or e < 1:
        raise ValueError(f"need r >= 2 and e >= 1, got r={r}, e={e}")
    if pp < 0:
        raise ValueError(f"p'={pp} must be nonnegative")
    if not (0 <= 2 * p <= r * e):
        raise ValueError(f"p={p} outside 0 <= 2p <= re")


def chain_coeff_closed(r: int, e: int, pp: int, p: int) -> Rational:
    """Closed form for the chain-identity constant.

    Zero exactly when the characteristic conditions p'-p >= 0,
    e-p'+p >= 0, re-p'-p >= 0 fail; otherwise a signed factorial ratio
    times the kernel J at s = (r+1)e - p' - p.
    """
    _check_chain_range(r, e, pp, p)
    if not chain_characteristic(r, e, pp, p):
        return Rational(0)
    s = (r + 1) * e - pp - p
    pref = Rational(
        (-1) ** (pp - p)
        * factorial(2 * p)
        * factorial(2 * pp)
        * factorial(r * e - 2 * p)
        * factorial(e),
        factorial(pp - p)
        * factorial(e - pp + p)
        * factorial(r * e - pp - p)
        * factorial((r + 1) * e - 2 * pp),
    )
    return pref * j_closed(s, p)


def chain_shape(table: VarTable, r: int, e: int, pp: int, p: int) -> Poly:
    """Target monomial shape (cd)^(2(p'-p)) c_x^(2(re-p'-p)) d_x^(2(e-p'+p)).

    Requires the characteristic conditions to hold and a table containing
    x1, x2, c1, c2, d1, d2.
    """
    if not chain_characteristic(r, e, pp, p):
        raise ValueError("shape undefined when the characteristic conditions fail")
    v = lambda name: Poly.var(table, name)
    cx = v("c1") * v("x1") + v("c2") * v("x2")
    dx = v("d1") * v("x1") + v("d2") * v("x2")
    cd = v("c1") * v("d2") - v("c2") * v("d1")
    return cd ** (2 * (pp - p)) * cx ** (2 * (r * e - pp - p)) * dx ** (2 * (e - pp + p))


# --------------------------------------------------------- generating function

GEN_VARS = ("ph1", "ph2", "pb1", "pb2", "x1", "x2", "c1", "c2", "d1", "d2", "h", "u", "v", "w")
_GRADE_VARS = ("h", "u", "v", "w")


def _gen_table() -> VarTable:
    return VarTable(GEN_VARS)


def _prune(poly: Poly, order: int) -> Poly:
    idx = [poly.table.index(n) for n in _GRADE_VARS]
    out = Poly.zero(poly.table)
    out.terms = {
        e: c for e, c in poly.terms.items() if sum(e[i] for i in idx) <= order
    }
    return out


def closed_generating_series(order: int, table: VarTable | None = None) -> Poly:
    """Closed generating function expanded to total order `order` in
    (h, u, v, w): 1/D * exp((v c_x^2 + w d_x^2)/D) with
    D = (1-hu)^2 + h^2 v w (cd)^2."""
    table = table or _gen_table()
    v = lambda name: Poly.var(table, name)
    cx = v("c1") * v("x1") + v("c2") * v("x2")
    dx = v("d1") * v("x1") + v("d2") * v("x2")
    cd = v("c1") * v("d2") - v("c2") * v("d1")
    h, uu, vv, ww = v("h"), v("u"), v("v"), v("w")

    # D = 1 + E with E of grade >= 2, so 1/D truncates quickly
    excess = h * uu * (-2) + h * h * uu * uu + h * h * vv * ww * cd * cd
    inv_d = Poly.const(table, 1)
    power = Poly.const(table, 1)
    for _ in range(order // 2):
        power = _prune(power * (-excess), order)
        inv_d = inv_d + power

    numer = vv * cx * cx + ww * dx * dx  # grade exactly 1
    ratio = _prune(numer * inv_d, order)
    expo = Poly.const(table, 1)
    power = Poly.const(table, 1)
    for mu in range(1, order + 1):
        power = _prune(power * ratio, order)
        expo = expo + power * Rational(1, factorial(mu))
    return _prune(inv_d * expo, order)


def direct_generating_series(order: int, table: VarTable | None = None) -> Poly:
    """Defining differential expression for the generating function, term by
    term: sum_n h^n/n! omega_phi^n exp(S) restricted to phi = phibar = 0.

    S = (phibar + x)^T (-u eps + v cc^T + w dd^T) (phi + x); every S term has
    grade exactly 1 in (u, v, w), so exp(S) truncates at S^order.
    """
    table = table or _gen_table()
    v = lambda name: Poly.var(table, name)
    a1, a2 = v("pb1") + v("x1"), v("pb2") + v("x2")  # left vector (phibar + x)
    b1, b2 = v("ph1") + v("x1"), v("ph2") + v("x2")  # right vector (phi + x)
    ca = v("c1") * a1 + v("c2") * a2
    cb = v("c1") * b1 + v("c2") * b2
    da = v("d1") * a1 + v("d2") * a2
    db = v("d1") * b1 + v("d2") * b2
    s_poly = -v("u") * (a1 * b2 - a2 * b1) + v("v") * ca * cb + v("w") * da * db

    expo = Poly.const(table, 1)
    power = Poly.const(table, 1)
    for k in range(1, order + 1):
        power = _prune(power * s_poly, order)
        expo = expo + power * Rational(1, factorial(k))

    phi_idx = [table.index(n) for n in ("ph1", "ph2", "pb1", "pb2")]

    def phi_free_part(poly: Poly) -> Poly:
        out = Poly.zero(table)
        out.terms = {
            e: c for e, c in poly.terms.items() if not any(e[i] for i in phi_idx)
        }
        return out

    total = phi_free_part(expo)
    current = expo
    h = v("h")
    h_power = Poly.const(table, 1)
    for n in range(1, order + 1):
        current = omega_power(current, 1, ("ph1", "ph2"), ("pb1", "pb2"))
        h_power = h_power * h
        total = total + phi_free_part(current) * h_power * Rational(1, factorial(n))
    return _prune(total, order)


def generating_series_check(r: int, e: int, order: int) -> bool:
    """Compare the closed and defining forms of the generating function up
    to total order `order` in (h, u, v, w), and additionally check every
    chain-coefficient extraction for (r, e) whose monomial fits inside the
    truncation order.  Returns exact equality of all comparisons."""
    if order > 6:
        raise ValueError("truncation order above 6 is not supported")
    table = _gen_table()
    closed = closed_generating_series(order, table)
    direct = direct_generating_series(order, table)
    if closed != direct:
        return False

    for pp in range(0, (r + 1) * e // 2 + 1):
        for p in range(0, r * e // 2 + 1):
            if 2 * pp + r * e + e > order:
                continue
            coeff = closed.coefficient_of(
                {"h": 2 * pp, "u": 2 * p, "v": r * e - 2 * p, "w": e}
            )
            pref = (
                factorial(2 * pp)
                * factorial(2 * p)
                * factorial(r * e - 2 * p)
                * factorial(e)
            )
            constant = chain_coeff_closed(r, e, pp, p)
            if constant == 0:
                if not coeff.is_zero():
                    return False
                continue
            expected = chain_shape(table, r, e, pp, p) * constant
            if coeff * pref != expected:
                return False
    return True
