"""Independent computation routes for the two transvectant identities,
and the step-up recipe whose nonvanishing they certify.

The self identity: omega^(2p) Q(x)^e Q(y)^e restricted to y = x equals a
positive constant times Q^(2e-2p) (-disc Q)^p.  The direct route computes
the omega power symbolically, once on the split quadratic Q = x1 x2 (whose
discriminant is 1 under the convention disc(a x1^2 + 2b x1 x2 + c x2^2) =
4(b^2 - ac)) and optionally on the fully generic quadratic as an exact
polynomial identity.

The chain identity: omega^(2p') applied to
omega_bracket^(2p) c_x^(re-2p) c_y^(re-2p) d_x^e d_y^e and restricted to
y = x equals a constant times (cd)^(2(p'-p)) c_x^(2(re-p'-p))
d_x^(2(e-p'+p)), the constant being zero exactly when the characteristic
conditions fail.

Both constants are recomputed by the closed forms in
:mod:`transvect.closed` (and, for the self identity, by the graph sum in
:mod:`transvect.diagrams`); the reports collect all routes and assert
agreement.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .closed import (
    chain_characteristic,
    chain_coeff_closed,
    chain_shape,
    self_coeff_closed,
    self_coeff_dixon,
)
from .diagrams import self_coeff_graphs
from .omega import (
    X_VARS,
    Y_VARS,
    omega_diag,
    omega_power,
    polarize,
    set_block_equal,
    transvectant,
)
from .poly import Poly, Rational, VarTable

__all__ = [
    "SelfCoeffReport",
    "ChainCoeffReport",
    "self_coeff_direct",
    "generic_quadratic_identity",
    "check_self_coeff",
    "chain_coeff_direct",
    "check_chain_coeff",
    "existence_choice",
    "multiply_project",
    "GENERIC_IDENTITY_MAX_E",
]

GENERIC_IDENTITY_MAX_E = 3  # symbolic cost grows fast; split-form route covers all e


def self_coeff_direct(e: int, p: int) -> Rational:
    """Constant extracted from the omega power on the split quadratic
    Q = x1 x2, for which the discriminant is 1."""
    if e < 1 or not 0 <= p <= e:
        raise ValueError(f"(e={e}, p={p}) out of range")
    table = VarTable(X_VARS + Y_VARS)
    qx = Poly.monomial(table, {"x1": 1, "x2": 1})
    qy = Poly.monomial(table, {"y1": 1, "y2": 1})
    result = omega_diag(qx**e * qy**e, p)
    expected_monomial = qx ** (2 * e - 2 * p) * Rational((-1) ** p)
    ratio = result.coefficient_ratio(expected_monomial)
    if ratio is None:
        raise RuntimeError(
            f"omega power on the split quadratic is not a multiple of "
            f"Q^{2*e-2*p} at e={e}, p={p}"
        )
    return ratio


def generic_quadratic_identity(e: int, p: int) -> tuple[Rational, bool]:
    """Exact polynomial identity on the generic quadratic
    Q = a x1^2 + 2b x1 x2 + c x2^2 over symbolic a, b, c.

    Returns the constant (from the split form) and whether the full
    generic identity const * Q^(2e-2p) * (-disc)^p holds exactly.
    """
    constant = self_coeff_direct(e, p)
    table = VarTable(X_VARS + Y_VARS + ("a", "b", "c"))
    a, b, c = (Poly.var(table, n) for n in ("a", "b", "c"))
    x1, x2, y1, y2 = (Poly.var(table, n) for n in ("x1", "x2", "y1", "y2"))
    qx = a * x1**2 + 2 * b * x1 * x2 + c * x2**2
    qy = a * y1**2 + 2 * b * y1 * y2 + c * y2**2
    disc = 4 * (b * b - a * c)
    lhs = omega_diag(qx**e * qy**e, p)
    rhs = qx ** (2 * e - 2 * p) * (-disc) ** p * constant
    return constant, lhs == rhs


@dataclass
class SelfCoeffReport:
    """All routes to the self-identity constant for one (e, p) cell."""

    e: int
    p: int
    direct: Rational
    graphs: Rational
    dixon: Rational
    closed: Rational
    generic_ok: bool | None  # None when the symbolic identity was skipped

    @property
    def agree(self) -> bool:
        values = {self.direct, self.graphs, self.dixon, self.closed}
        positive = self.direct > 0
        generic = self.generic_ok is not False
        return len(values) == 1 and positive and generic

    def to_record(self) -> dict:
        return {
            "e": self.e,
            "p": self.p,
            "direct": str(self.direct),
            "graphs": str(self.graphs),
            "dixon": str(self.dixon),
            "closed": str(self.closed),
            "generic_ok": self.generic_ok,
            "agree": self.agree,
        }


def check_self_coeff(e: int, p: int, run_generic: bool | None = None) -> SelfCoeffReport:
    """Compute the self-identity constant by every route and report."""
    if run_generic is None:
        run_generic = e <= GENERIC_IDENTITY_MAX_E
    if run_generic:
        direct, generic_ok = generic_quadratic_identity(e, p)
    else:
        direct, generic_ok = self_coeff_direct(e, p), None
    return SelfCoeffReport(
        e=e,
        p=p,
        direct=direct,
        graphs=self_coeff_graphs(e, p),
        dixon=self_coeff_dixon(e, p),
        closed=self_coeff_closed(e, p),
        generic_ok=generic_ok,
    )


# --------------------------------------------------------------------------- chain

CHAIN_VARS = X_VARS + Y_VARS + ("c1", "c2", "d1", "d2")


def chain_coeff_direct(r: int, e: int, pp: int, p: int) -> Rational:
    """Symbolic route to the chain-identity constant.

    Builds omega_bracket^(2p) c_x^(re-2p) c_y^(re-2p) d_x^e d_y^e, applies
    omega^(2p'), restricts to the diagonal, and extracts the scalar against
    the predicted monomial shape.  Raises if the result is not an exact
    multiple of the shape (or not identically zero when the characteristic
    conditions fail).
    """
    if r < 2 or e < 1:
        raise ValueError(f"need r >= 2 and e >= 1, got r={r}, e={e}")
    if pp < 0 or not (0 <= 2 * p <= r * e):
        raise ValueError(f"(p'={pp}, p={p}) out of range for r={r}, e={e}")
    table = VarTable(CHAIN_VARS)
    v = {n: Poly.var(table, n) for n in CHAIN_VARS}
    bracket = v["x1"] * v["y2"] - v["x2"] * v["y1"]
    cx = v["c1"] * v["x1"] + v["c2"] * v["x2"]
    cy = v["c1"] * v["y1"] + v["c2"] * v["y2"]
    dx = v["d1"] * v["x1"] + v["d2"] * v["x2"]
    dy = v["d1"] * v["y1"] + v["d2"] * v["y2"]
    expr = bracket ** (2 * p) * cx ** (r * e - 2 * p) * cy ** (r * e - 2 * p) * dx**e * dy**e
    result = omega_diag(expr, pp)

    if not chain_characteristic(r, e, pp, p):
        if not result.is_zero():
            raise RuntimeError(
                f"chain expression did not vanish at r={r}, e={e}, p'={pp}, p={p}"
            )
        return Rational(0)
    shape = chain_shape(table, r, e, pp, p)
    ratio = result.coefficient_ratio(shape)
    if ratio is None:
        raise RuntimeError(
            f"chain expression is not a multiple of the predicted monomial "
            f"shape at r={r}, e={e}, p'={pp}, p={p}"
        )
    return ratio


@dataclass
class ChainCoeffReport:
    """Direct and closed routes to the chain constant for one cell."""

    r: int
    e: int
    pp: int
    p: int
    direct: Rational
    closed: Rational

    @property
    def agree(self) -> bool:
        return self.direct == self.closed

    def to_record(self) -> dict:
        return {
            "r": self.r,
            "e": self.e,
            "p_prime": self.pp,
            "p": self.p,
            "direct": str(self.direct),
            "closed": str(self.closed),
            "agree": self.agree,
        }


def check_chain_coeff(r: int, e: int, pp: int, p: int) -> ChainCoeffReport:
    return ChainCoeffReport(
        r=r,
        e=e,
        pp=pp,
        p=p,
        direct=chain_coeff_direct(r, e, pp, p),
        closed=chain_coeff_closed(r, e, pp, p),
    )


def existence_choice(r: int, e: int, pp: int) -> int:
    """Choice of p making the chain constant nonzero: p = p' while
    2p' <= re, and p = p' - e beyond."""
    if r < 2 or e < 1 or not 0 <= 2 * pp <= (r + 1) * e:
        raise ValueError(f"(r={r}, e={e}, p'={pp}) out of range")
    p = pp if 2 * pp <= r * e else pp - e
    if not (0 <= 2 * p <= r * e):
        raise RuntimeError(f"existence choice out of range: p={p}")
    if chain_coeff_closed(r, e, pp, p) == 0:
        raise RuntimeError(f"existence choice gave a zero constant at r={r}, e={e}, p'={pp}")
    return p


# ----------------------------------------------------------------- step-up recipe


def multiply_project(C: Poly, D: Poly, r: int, p: int, pp: int) -> Poly:
    """Image of C (x) D under the multiply-then-project map between graded
    pieces, executed literally:

    1. pair two generic binomial-convention forms of degree re by the
       2p-th transvectant, then pair the result completely against C;
    2. substitute the coefficient letters by the dual monomials, turning
       the generic forms into bracket powers over (x, y);
    3. polarize D halfway (e times, normalized) and multiply;
    4. apply omega^(2p') and restrict to the diagonal.

    C and D live over a table containing x1, x2, y1, y2 plus their own
    coefficient letters; C must have degree rd - 4p and D an even degree d.
    """
    d = D.degree_in(X_VARS)
    if d % 2 or not D.is_homogeneous_in(X_VARS, d) or D.is_zero():
        raise ValueError("D must be homogeneous of positive even degree")
    e = d // 2
    if not C.is_homogeneous_in(X_VARS, r * d - 4 * p):
        raise ValueError(f"C must be homogeneous of degree {r * d - 4 * p}")
    if C.table != D.table:
        raise ValueError("C and D must share a variable table")
    m = r * e
    a_names = tuple(f"ga{i}" for i in range(m + 1))
    b_names = tuple(f"gb{i}" for i in range(m + 1))
    table = C.table.extend(a_names + b_names)

    def lift(poly: Poly) -> Poly:
        out = Poly.zero(table)
        pad = (0,) * (len(table) - len(poly.table))
        out.terms = {ex + pad: c for ex, c in poly.terms.items()}
        return out

    gamma_a = Poly.zero(table)
    gamma_b = Poly.zero(table)
    for i in range(m + 1):
        mono = {"x1": m - i, "x2": i}
        gamma_a = gamma_a + Poly.monomial(table, dict(mono, **{a_names[i]: 1}), comb(m, i))
        gamma_b = gamma_b + Poly.monomial(table, dict(mono, **{b_names[i]: 1}), comb(m, i))

    t1 = transvectant(gamma_a, gamma_b, 2 * p, normalized=True)
    t2 = transvectant(lift(C), t1, r * d - 4 * p, normalized=True)
    if not t2.is_homogeneous_in(X_VARS, 0):
        raise RuntimeError("complete pairing left x variables behind")

    dual = {}
    for i in range(m + 1):
        dual[a_names[i]] = Poly.monomial(table, {"x2": m - i, "x1": i}, (-1) ** i)
        dual[b_names[i]] = Poly.monomial(table, {"y2": m - i, "y1": i}, (-1) ** i)
    t3 = t2.substitute(dual)

    t4 = polarize(lift(D), e, X_VARS, Y_VARS, normalized=True)
    t6 = omega_power(t3 * t4, 2 * pp)
    result = set_block_equal(t6, Y_VARS, X_VARS)

    out = Poly.zero(C.table)
    narrow = len(C.table)
    for ex, c in result.terms.items():
        if any(ex[narrow:]):
            raise RuntimeError("generic coefficient letters survived the recipe")
        out.terms[ex[:narrow]] = c
    expected = (r + 1) * d - 4 * pp
    if not out.is_homogeneous_in(X_VARS, expected):
        raise RuntimeError(
            f"recipe output is not homogeneous of degree {expected} in x"
        )
    return out
