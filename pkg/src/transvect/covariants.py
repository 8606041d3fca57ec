"""Covariants of binary octavics and concomitants of ternary quartics.

Binary side: covariant expressions are trees of transvectants, products
and powers over a ground form, evaluated bottom-up with the classical
normalized transvectant.  The suite checks that the six degree-3 covariants
cutting out the double-quartic locus vanish identically on (l1 l2)^4 with
symbolic linear factors, stay nonzero on a generic octavic, and that the
coefficient ratios of the two combination covariants re-derive to 13:-63
and 195:-2744.

Ternary side: concomitants are given symbolically as products of bracket
factors (full determinants of three letter vectors, mixed determinants
with the dual line vector u, and linear letter-times-x factors).  They are
evaluated by expanding the bracket polynomial in the letter components and
applying F(d/d letter) once per letter, which inserts the coefficients of
the ground form at the right places; each letter must be used to total
degree exactly deg F.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence, Union

from .omega import X_VARS, Y_VARS, transvectant
from .poly import Poly, Rational, VarTable, apply_operator

__all__ = [
    "Form",
    "Transvect",
    "Product",
    "Power",
    "CovariantExpr",
    "eval_covariant",
    "covariant_order",
    "octavic_entries",
    "vanishing_ratio",
    "octavic_suite",
    "OctavicReport",
    "BracketFactor",
    "BracketExpr",
    "ternary_entries",
    "eval_ternary_concomitant",
    "ternary_suite",
    "TernaryReport",
    "random_linear_form",
]


# ------------------------------------------------------------------ binary side


@dataclass(frozen=True)
class Form:
    """Leaf: the ground form itself."""


@dataclass(frozen=True)
class Transvect:
    k: int
    left: "CovariantExpr"
    right: "CovariantExpr"


@dataclass(frozen=True)
class Product:
    left: "CovariantExpr"
    right: "CovariantExpr"


@dataclass(frozen=True)
class Power:
    base: "CovariantExpr"
    k: int


CovariantExpr = Union[Form, Transvect, Product, Power]

F = Form()


def covariant_order(expr: CovariantExpr, form_order: int) -> int:
    """Order in x of the covariant, by pure degree bookkeeping."""
    if isinstance(expr, Form):
        return form_order
    if isinstance(expr, Power):
        return expr.k * covariant_order(expr.base, form_order)
    if isinstance(expr, Product):
        return covariant_order(expr.left, form_order) + covariant_order(expr.right, form_order)
    if isinstance(expr, Transvect):
        lo = covariant_order(expr.left, form_order)
        ro = covariant_order(expr.right, form_order)
        if expr.k > min(lo, ro):
            raise ValueError(f"transvectant index {expr.k} exceeds operand orders ({lo}, {ro})")
        return lo + ro - 2 * expr.k
    raise TypeError(f"not a covariant expression: {expr!r}")


def eval_covariant(expr: CovariantExpr, form: Poly, normalized: bool = True) -> Poly:
    """Evaluate a covariant tree bottom-up on a homogeneous binary form."""
    order = form.degree_in(X_VARS)
    if not form.is_homogeneous_in(X_VARS, order):
        raise ValueError("ground form must be homogeneous in x1, x2")

    def walk(node: CovariantExpr) -> tuple[Poly, int]:
        if isinstance(node, Form):
            return form, order
        if isinstance(node, Power):
            base, o = walk(node.base)
            return base**node.k, o * node.k
        if isinstance(node, Product):
            lp, lo = walk(node.left)
            rp, ro = walk(node.right)
            return lp * rp, lo + ro
        if isinstance(node, Transvect):
            lp, lo = walk(node.left)
            rp, ro = walk(node.right)
            if node.k > min(lo, ro):
                raise ValueError(
                    f"transvectant index {node.k} exceeds operand orders ({lo}, {ro})"
                )
            out = transvectant(lp, rp, node.k, normalized=normalized, deg_f=lo, deg_g=ro)
            return out, lo + ro - 2 * node.k
        raise TypeError(f"not a covariant expression: {node!r}")

    return walk(expr)[0]


# Each suite entry is a linear combination of covariant trees; most entries
# have a single term.
Entry = tuple[str, tuple[tuple[int, CovariantExpr], ...]]

A_EXPR = Transvect(6, Power(F, 2), F)                 # (F^2, F)_6
B_EXPR = Transvect(4, Transvect(2, F, F), F)          # ((F,F)_2, F)_4


def octavic_entries() -> list[Entry]:
    """The six degree-3 covariants of binary octavics cutting out the locus
    of two quadruple points; orders 18, 14, 12, 10, 6, 8."""
    return [
        ("(F^2,F)_3", ((1, Transvect(3, Power(F, 2), F)),)),
        ("(F^2,F)_5", ((1, Transvect(5, Power(F, 2), F)),)),
        ("13*(F^2,F)_6 - 63*((F,F)_2,F)_4", ((13, A_EXPR), (-63, B_EXPR))),
        ("(F^2,F)_7", ((1, Transvect(7, Power(F, 2), F)),)),
        ("((F,F)_6,F)_3", ((1, Transvect(3, Transvect(6, F, F), F)),)),
        (
            "195*(F^2,F)_8 - 2744*((F,F)_2,F)_6",
            ((195, Transvect(8, Power(F, 2), F)), (-2744, Transvect(6, Transvect(2, F, F), F))),
        ),
    ]


DISPLAY_VARIANT: Entry = (
    "13*(F^2,F)_6 - 63*(F^2,F)_4",
    ((13, A_EXPR), (-63, Transvect(4, Power(F, 2), F))),
)


def eval_entry(entry: Entry, form: Poly, normalized: bool = True) -> Poly:
    total = Poly.zero(form.table)
    for coeff, expr in entry[1]:
        total = total + eval_covariant(expr, form, normalized=normalized) * coeff
    return total


def _nullspace_ray(columns: Sequence[Poly]) -> list[int]:
    """One-dimensional exact nullspace of the coefficient matrix whose
    columns are the monomial coefficients of the given polynomials,
    normalized to coprime integers with positive leading entry."""
    ncols = len(columns)
    monos = sorted({m for p in columns for m in p.terms})
    rows = [[p.terms.get(m, Rational(0)) for p in columns] for m in monos]

    pivots: list[int] = []
    row_i = 0
    for col in range(ncols):
        pivot = next((i for i in range(row_i, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[row_i], rows[pivot] = rows[pivot], rows[row_i]
        inv = 1 / rows[row_i][col]
        rows[row_i] = [v * inv for v in rows[row_i]]
        for i in range(len(rows)):
            if i != row_i and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[row_i])]
        pivots.append(col)
        row_i += 1

    free = [c for c in range(ncols) if c not in pivots]
    if len(free) != 1:
        raise ValueError(
            f"solution space is {len(free)}-dimensional, expected a single ray"
        )
    ray = [Rational(0)] * ncols
    ray[free[0]] = Rational(1)
    for i, col in enumerate(pivots):
        ray[col] = -rows[i][free[0]]

    denom = 1
    for v in ray:
        denom = denom * v.denominator // gcd(denom, int(v.denominator))
    ints = [int(v * denom) for v in ray]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v)
    if lead < 0:
        ints = [-v for v in ints]
    return ints


def vanishing_ratio(exprs: Sequence[CovariantExpr], special_form: Poly) -> list[int]:
    """Coefficients (coprime integers, positive leading entry) making the
    combination of covariants vanish identically at the given form; errors
    unless the solution ray is one-dimensional."""
    columns = [eval_covariant(expr, special_form) for expr in exprs]
    return _nullspace_ray(columns)


def random_linear_form(table: VarTable, rng: random.Random, names: Sequence[str]) -> Poly:
    """Nonzero linear form with small random rational coefficients."""
    while True:
        coeffs = [
            Rational(rng.randint(-9, 9), rng.randint(1, 4)) for _ in names
        ]
        if any(coeffs):
            return Poly.linear(table, dict(zip(names, coeffs)))


@dataclass
class OctavicReport:
    seed: int
    trials: int
    orders: dict = field(default_factory=dict)
    orders_ok: bool = False
    symbolic_vanish: dict = field(default_factory=dict)
    coincident_vanish: bool = False
    trial_failures: list = field(default_factory=list)
    generic_nonzero: list = field(default_factory=list)
    independence_ok: bool = False
    ratio_primary: list = field(default_factory=list)
    ratio_secondary: list = field(default_factory=list)
    convention_mismatch: bool = False
    display_variant_vanishes: bool | None = None

    EXPECTED_PRIMARY = [13, -63]
    EXPECTED_SECONDARY = [195, -2744]

    @property
    def passed(self) -> bool:
        ratios_ok = (
            self.ratio_primary == self.EXPECTED_PRIMARY
            and self.ratio_secondary == self.EXPECTED_SECONDARY
        ) or self.convention_mismatch
        return (
            self.orders_ok
            and all(self.symbolic_vanish.values())
            and self.coincident_vanish
            and not self.trial_failures
            and bool(self.generic_nonzero)
            and self.independence_ok
            and ratios_ok
        )

    def to_record(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "orders": self.orders,
            "orders_ok": self.orders_ok,
            "symbolic_vanish": self.symbolic_vanish,
            "coincident_vanish": self.coincident_vanish,
            "trial_failures": self.trial_failures,
            "generic_nonzero": self.generic_nonzero,
            "independence_ok": self.independence_ok,
            "ratio_primary": self.ratio_primary,
            "ratio_secondary": self.ratio_secondary,
            "convention_mismatch": self.convention_mismatch,
            "display_variant_vanishes": self.display_variant_vanishes,
            "passed": self.passed,
        }


GENERIC_OCTAVIC_COEFFS = (1, 2, 3, 4, 5, 6, 7, 8, 9)


def _binary_table(extra: Iterable[str] = ()) -> VarTable:
    return VarTable(X_VARS + Y_VARS + tuple(extra))


def octavic_suite(trials: int = 5, seed: int = 20240) -> OctavicReport:
    """Run the whole binary-octavic verification suite."""
    report = OctavicReport(seed=seed, trials=trials)
    entries = octavic_entries()

    report.orders = {
        name: covariant_order(terms[0][1], 8) for name, terms in entries
    }
    report.orders_ok = list(report.orders.values()) == [18, 14, 12, 10, 6, 8]

    # exact symbolic identity: F = (l1 l2)^4 with indeterminate coefficients
    sym = _binary_table(("a1", "a2", "b1", "b2"))
    l1 = Poly.var(sym, "a1") * Poly.var(sym, "x1") + Poly.var(sym, "a2") * Poly.var(sym, "x2")
    l2 = Poly.var(sym, "b1") * Poly.var(sym, "x1") + Poly.var(sym, "b2") * Poly.var(sym, "x2")
    locus_form = (l1 * l2) ** 4
    for name, terms in entries:
        value = eval_entry((name, terms), locus_form)
        report.symbolic_vanish[name] = value.is_zero()

    display_value = eval_entry(DISPLAY_VARIANT, locus_form)
    report.display_variant_vanishes = display_value.is_zero()

    # coincident case: l1 = l2 symbolic, i.e. F = l^8
    l8 = (
        Poly.var(sym, "a1") * Poly.var(sym, "x1")
        + Poly.var(sym, "a2") * Poly.var(sym, "x2")
    ) ** 8
    report.coincident_vanish = all(
        eval_entry(entry, l8).is_zero() for entry in entries
    )

    # random rational trials
    rng = random.Random(seed)
    plain = _binary_table()
    for t in range(trials):
        f1 = random_linear_form(plain, rng, X_VARS)
        f2 = random_linear_form(plain, rng, X_VARS)
        trial_form = (f1 * f2) ** 4
        for entry in entries:
            if not eval_entry(entry, trial_form).is_zero():
                report.trial_failures.append({"trial": t, "entry": entry[0]})

    # a generic octavic must escape the locus
    generic = Poly.zero(plain)
    for i, c in enumerate(GENERIC_OCTAVIC_COEFFS):
        generic = generic + Poly.monomial(plain, {"x1": 8 - i, "x2": i}, c)
    report.generic_nonzero = [
        name for name, terms in entries if not eval_entry((name, terms), generic).is_zero()
    ]

    # basis independence at the witness form x1^6 x2^2 + x1 x2^7
    witness = Poly.monomial(plain, {"x1": 6, "x2": 2}) + Poly.monomial(
        plain, {"x1": 1, "x2": 7}
    )
    a_val = eval_covariant(A_EXPR, witness)
    b_val = eval_covariant(B_EXPR, witness)
    report.independence_ok = a_val.coefficient_ratio(b_val) is None

    # ratio derivation at the locus point x1^4 x2^4
    special = Poly.monomial(plain, {"x1": 4, "x2": 4})
    report.ratio_primary = vanishing_ratio([A_EXPR, B_EXPR], special)
    report.ratio_secondary = vanishing_ratio(
        [Transvect(8, Power(F, 2), F), Transvect(6, Transvect(2, F, F), F)], special
    )
    report.convention_mismatch = not (
        report.ratio_primary == report.EXPECTED_PRIMARY
        and report.ratio_secondary == report.EXPECTED_SECONDARY
    )
    return report


# ----------------------------------------------------------------- ternary side

LETTERS = ("a", "b", "g")
TERNARY_VARS = tuple(f"{l}{i}" for l in LETTERS for i in range(3)) + tuple(
    f"x{i}" for i in range(3)
) + tuple(f"u{i}" for i in range(3))

BracketFactor = tuple  # ("det", ("a","b","g")) | ("det", ("a","g","u")) | ("lin", "a")


@dataclass(frozen=True)
class BracketExpr:
    """Product of bracket factors with powers; letters a, b, g and the dual
    line vector u, over a degree-4 ternary ground form."""

    factors: tuple[tuple[BracketFactor, int], ...]

    def letter_degrees(self) -> dict[str, int]:
        degs = {l: 0 for l in LETTERS}
        for (kind, args), power in self.factors:
            symbols = args if kind == "det" else (args,)
            for s in symbols:
                if s in degs:
                    degs[s] += power
        return degs


def _det3(table: VarTable, rows: Sequence[Sequence[Poly]]) -> Poly:
    (a1, a2, a3), (b1, b2, b3), (c1, c2, c3) = rows
    return (
        a1 * (b2 * c3 - b3 * c2)
        - a2 * (b1 * c3 - b3 * c1)
        + a3 * (b1 * c2 - b2 * c1)
    )


def _vector(table: VarTable, stem: str) -> list[Poly]:
    return [Poly.var(table, f"{stem}{i}") for i in range(3)]


def bracket_polynomial(expr: BracketExpr, table: VarTable) -> Poly:
    """Expand the bracket product over the letter/x/u components."""
    out = Poly.const(table, 1)
    for (kind, args), power in expr.factors:
        if kind == "det":
            factor = _det3(table, [_vector(table, s) for s in args])
        elif kind == "lin":
            letter = _vector(table, args)
            xs = _vector(table, "x")
            factor = letter[0] * xs[0] + letter[1] * xs[1] + letter[2] * xs[2]
        else:
            raise ValueError(f"unknown factor kind {kind!r}")
        out = out * factor**power
    return out


def ternary_entries() -> list[tuple[str, BracketExpr]]:
    """The five degree-3 concomitants of ternary quartics cutting out the
    locus of two double lines."""
    lin = lambda s: ("lin", s)
    det = lambda *ss: ("det", tuple(ss))
    return [
        (
            "ax^2 bx^3 gx (agu)^2 (bgu)",
            BracketExpr(((lin("a"), 2), (lin("b"), 3), (lin("g"), 1), (det("a", "g", "u"), 2), (det("b", "g", "u"), 1))),
        ),
        (
            "ax^2 bx^2 gx^2 (abg)^2",
            BracketExpr(((lin("a"), 2), (lin("b"), 2), (lin("g"), 2), (det("a", "b", "g"), 2))),
        ),
        (
            "ax^2 bx (bgu)^2 (agu) (abg)",
            BracketExpr(((lin("a"), 2), (lin("b"), 1), (det("b", "g", "u"), 2), (det("a", "g", "u"), 1), (det("a", "b", "g"), 1))),
        ),
        (
            "ax bx (agu) (bgu) (abg)^2",
            BracketExpr(((lin("a"), 1), (lin("b"), 1), (det("a", "g", "u"), 1), (det("b", "g", "u"), 1), (det("a", "b", "g"), 2))),
        ),
        (
            "(abg)^4",
            BracketExpr(((det("a", "b", "g"), 4),)),
        ),
    ]


def eval_ternary_concomitant(expr: BracketExpr, form: Poly) -> Poly:
    """Evaluate a symbolic concomitant on a ternary quartic.

    The ground form may carry extra coefficient variables; its table must
    contain x0, x1, x2.  Each letter must be used to total degree exactly 4.
    """
    x_names = ("x0", "x1", "x2")
    if not form.is_homogeneous_in(x_names, 4) or form.is_zero():
        raise ValueError("ground form must be a nonzero ternary quartic")
    degs = expr.letter_degrees()
    if any(d != 4 for d in degs.values()):
        raise ValueError(f"letters must be used to degree 4, got {degs}")

    extra = tuple(n for n in form.table.names if n not in TERNARY_VARS and n not in x_names)
    table = VarTable(TERNARY_VARS + extra)

    def lift(p: Poly) -> Poly:
        out = Poly.zero(table)
        src = [table.index(n) for n in p.table.names]
        for ex, c in p.terms.items():
            ne = [0] * len(table)
            for pos, v in zip(src, ex):
                ne[pos] = v
            out.terms[tuple(ne)] = c
        return out

    target = bracket_polynomial(expr, table)
    lifted_form = lift(form)
    for letter in LETTERS:
        slot_names = tuple(f"{letter}{i}" for i in range(3))
        operator = lifted_form.substitute(
            {xn: Poly.var(table, sn) for xn, sn in zip(x_names, slot_names)}
        )
        target = apply_operator(operator, target, slot_names)
        if target.is_zero():
            break
    letter_names = [f"{l}{i}" for l in LETTERS for i in range(3)]
    if target.degree_in(letter_names):
        raise RuntimeError("letter variables survived the evaluation")
    return target


@dataclass
class TernaryReport:
    seed: int
    trials: int
    trial_failures: list = field(default_factory=list)
    symbolic_vanish: dict = field(default_factory=dict)
    generic_invariant_nonzero: bool = False

    @property
    def passed(self) -> bool:
        return (
            not self.trial_failures
            and all(self.symbolic_vanish.values())
            and self.generic_invariant_nonzero
        )

    def to_record(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "trial_failures": self.trial_failures,
            "symbolic_vanish": self.symbolic_vanish,
            "generic_invariant_nonzero": self.generic_invariant_nonzero,
            "passed": self.passed,
        }


GENERIC_QUARTIC_COEFFS = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15)


def generic_ternary_quartic(table: VarTable) -> Poly:
    """Fixed quartic with coefficients 1..15 over the 15 degree-4 monomials
    in graded-lex order."""
    monos = [
        (i, j, 4 - i - j) for i in range(4, -1, -1) for j in range(4 - i, -1, -1)
    ]
    out = Poly.zero(table)
    for c, (i, j, k) in zip(GENERIC_QUARTIC_COEFFS, monos):
        out = out + Poly.monomial(table, {"x0": i, "x1": j, "x2": k}, c)
    return out


def ternary_suite(trials: int = 10, seed: int = 20240) -> TernaryReport:
    """Run the ternary-quartic concomitant suite."""
    report = TernaryReport(seed=seed, trials=trials)
    entries = ternary_entries()
    x_names = ("x0", "x1", "x2")

    rng = random.Random(seed)
    plain = VarTable(x_names)
    for t in range(trials):
        line1 = random_linear_form(plain, rng, x_names)
        line2 = random_linear_form(plain, rng, x_names)
        quartic = (line1 * line2) ** 2
        for name, expr in entries:
            if not eval_ternary_concomitant(expr, quartic).is_zero():
                report.trial_failures.append({"trial": t, "entry": name})

    sym = VarTable(x_names + ("s0", "s1", "s2", "t0", "t1", "t2"))
    line1 = sum((Poly.var(sym, f"s{i}") * Poly.var(sym, f"x{i}") for i in range(3)), Poly.zero(sym))
    line2 = sum((Poly.var(sym, f"t{i}") * Poly.var(sym, f"x{i}") for i in range(3)), Poly.zero(sym))
    symbolic_quartic = (line1 * line2) ** 2
    for name, expr in entries:
        value = eval_ternary_concomitant(expr, symbolic_quartic)
        report.symbolic_vanish[name] = value.is_zero()

    generic = generic_ternary_quartic(plain)
    invariant = eval_ternary_concomitant(ternary_entries()[4][1], generic)
    report.generic_invariant_nonzero = not invariant.is_zero()
    return report
