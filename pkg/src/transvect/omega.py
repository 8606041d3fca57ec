"""Cayley's omega process, polarization and transvectants for binary forms.

Conventions used throughout the package:

* the two variable blocks are named ``x1, x2`` and ``y1, y2``;
* the omega operator is ``d^2/dx1 dy2 - d^2/dx2 dy1``;
* ``transvectant`` is RAW by default (a pure omega power followed by the
  diagonal restriction ``y := x``); the classical normalization
  ``(m-k)!(n-k)!/(m! n!)`` is an explicit flag;
* ``polarize`` is NORMALIZED by default (divided by the falling factorial
  ``d(d-1)...(d-times+1)``), so that a power of a linear form polarizes to
  ``l(x)^(d-e) l(y)^e`` exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Sequence

from .poly import Poly, Rational, VarTable

X_VARS = ("x1", "x2")
Y_VARS = ("y1", "y2")

__all__ = [
    "X_VARS",
    "Y_VARS",
    "BinaryFormPair",
    "omega_power",
    "transvectant",
    "polarize",
    "polarized_product",
    "omega_diag",
    "set_block_equal",
]


def omega_power(
    p: Poly,
    k: int,
    xvars: Sequence[str] = X_VARS,
    yvars: Sequence[str] = Y_VARS,
) -> Poly:
    """Apply the omega operator k times, exactly."""
    if k < 0:
        raise ValueError("omega power must be nonnegative")
    table = p.table
    ix1, ix2 = table.index(xvars[0]), table.index(xvars[1])
    iy1, iy2 = table.index(yvars[0]), table.index(yvars[1])
    terms = p.terms
    for _ in range(k):
        new: dict = {}
        get = new.get
        for e, c in terms.items():
            a, b = e[ix1], e[iy2]
            if a and b:
                ne = list(e)
                ne[ix1] = a - 1
                ne[iy2] = b - 1
                ne = tuple(ne)
                new[ne] = get(ne, 0) + c * (a * b)
            a, b = e[ix2], e[iy1]
            if a and b:
                ne = list(e)
                ne[ix2] = a - 1
                ne[iy1] = b - 1
                ne = tuple(ne)
                new[ne] = get(ne, 0) - c * (a * b)
        terms = {e: c for e, c in new.items() if c}
        if not terms:
            break
    out = Poly.zero(table)
    out.terms = dict(terms)
    return out


def set_block_equal(p: Poly, src: Sequence[str], dst: Sequence[str]) -> Poly:
    """Substitute dst variables for src variables (e.g. y := x)."""
    table = p.table
    return p.substitute({s: Poly.var(table, d) for s, d in zip(src, dst)})


@dataclass(frozen=True)
class BinaryFormPair:
    """Two binary forms over a shared table, homogeneous in x1, x2.

    Extra variables in the table are treated as coefficients.  Degrees are
    checked at construction; the zero polynomial is accepted at any degree.
    """

    f: Poly
    g: Poly
    deg_f: int
    deg_g: int

    def __post_init__(self):
        if self.f.table != self.g.table:
            raise ValueError("pair members must share a variable table")
        for form, deg, label in ((self.f, self.deg_f, "f"), (self.g, self.deg_g, "g")):
            if not form.is_homogeneous_in(X_VARS, deg):
                raise ValueError(f"{label} is not homogeneous of degree {deg} in {X_VARS}")

    def transvect(self, k: int, normalized: bool = False) -> Poly:
        return transvectant(self.f, self.g, k, normalized=normalized,
                            deg_f=self.deg_f, deg_g=self.deg_g)


def transvectant(
    f: Poly,
    g: Poly,
    k: int,
    *,
    normalized: bool = False,
    deg_f: int | None = None,
    deg_g: int | None = None,
) -> Poly:
    """k-th transvectant of two binary forms over one table.

    Raw mode is the omega power of f(x)g(y) restricted to the diagonal;
    normalized mode multiplies by (deg_f-k)!(deg_g-k)!/(deg_f! deg_g!).
    The result is checked to be homogeneous of degree deg_f + deg_g - 2k.
    """
    if f.table != g.table:
        raise ValueError("transvectant arguments must share a variable table")
    table = f.table
    if deg_f is None:
        deg_f = f.degree_in(X_VARS)
    if deg_g is None:
        deg_g = g.degree_in(X_VARS)
    pair = BinaryFormPair(f, g, deg_f, deg_g)
    if k > min(pair.deg_f, pair.deg_g):
        raise ValueError(
            f"transvectant index {k} exceeds a degree ({pair.deg_f}, {pair.deg_g})"
        )
    g_y = set_block_equal(g, X_VARS, Y_VARS)
    raw = omega_power(f * g_y, k)
    result = set_block_equal(raw, Y_VARS, X_VARS)
    expected = pair.deg_f + pair.deg_g - 2 * k
    if not result.is_homogeneous_in(X_VARS, expected) and not result.is_zero():
        raise RuntimeError(
            f"transvectant degree bookkeeping failed: expected {expected}, got "
            f"{result.degree_in(X_VARS)}"
        )
    if normalized:
        scale = Rational(
            factorial(pair.deg_f - k) * factorial(pair.deg_g - k),
            factorial(pair.deg_f) * factorial(pair.deg_g),
        )
        result = result * scale
    return result


def polarize(
    f: Poly,
    times: int,
    xvars: Sequence[str] = X_VARS,
    yvars: Sequence[str] = Y_VARS,
    *,
    normalized: bool = True,
) -> Poly:
    """Apply the polarization operator sum(y_l d/dx_l) `times` times.

    Requires f homogeneous in the x block of degree d >= times.  Normalized
    mode divides by d(d-1)...(d-times+1).
    """
    table = f.table
    d = f.degree_in(xvars)
    if not f.is_homogeneous_in(xvars, d):
        raise ValueError(f"polarize needs a homogeneous form in {tuple(xvars)}")
    if times > d:
        raise ValueError(f"cannot polarize degree {d} form {times} times")
    out = f
    for _ in range(times):
        step = Poly.zero(table)
        for xv, yv in zip(xvars, yvars):
            step = step + Poly.var(table, yv) * out.derive(xv)
        out = step
    if normalized and times:
        out = out * Rational(1, falling_product(d, times))
    return out


def falling_product(d: int, times: int) -> int:
    out = 1
    for i in range(times):
        out *= d - i
    return out


def polarized_product(
    forms: Sequence[Poly],
    e: int,
    xvars: Sequence[str] = X_VARS,
    yvars: Sequence[str] = Y_VARS,
) -> Poly:
    """Half-polarized product of degree-2e forms: each form is polarized e
    times (normalized), the factors are multiplied on fresh variable copies,
    and all copies are identified back to one x block and one y block.

    The result is bihomogeneous of degree (re, re) in (x, y) and symmetric
    under swapping the two blocks.
    """
    if not forms:
        raise ValueError("need at least one form")
    table = forms[0].table
    d = 2 * e
    for i, f in enumerate(forms):
        if f.table != table:
            raise ValueError("forms must share a variable table")
        if not f.is_homogeneous_in(xvars, d):
            raise ValueError(f"form {i} is not homogeneous of degree {d}")

    r = len(forms)
    copy_names = []
    for i in range(r):
        copy_names += [f"{v}@{i}" for v in xvars] + [f"{v}@{i}" for v in yvars]
    big = table.extend(copy_names)

    def lift(p: Poly) -> Poly:
        out = Poly.zero(big)
        pad = (0,) * (len(big) - len(table))
        out.terms = {e_ + pad: c for e_, c in p.terms.items()}
        return out

    product = Poly.const(big, 1)
    for i, f in enumerate(forms):
        xs = [f"{v}@{i}" for v in xvars]
        ys = [f"{v}@{i}" for v in yvars]
        moved = set_block_equal(lift(f), xvars, xs)
        product = product * polarize(moved, e, xs, ys)

    identify = {}
    for i in range(r):
        for v in xvars:
            identify[f"{v}@{i}"] = Poly.var(big, v)
        for v in yvars:
            identify[f"{v}@{i}"] = Poly.var(big, v)
    merged = product.substitute(identify)

    out = Poly.zero(table)
    narrow = len(table)
    for e_, c in merged.terms.items():
        if any(e_[narrow:]):
            raise RuntimeError("variable copies survived identification")
        out.terms[e_[:narrow]] = c
    return out


def omega_diag(
    s: Poly,
    p: int,
    xvars: Sequence[str] = X_VARS,
    yvars: Sequence[str] = Y_VARS,
) -> Poly:
    """Apply omega^(2p) and restrict to the diagonal y := x."""
    return set_block_equal(omega_power(s, 2 * p, xvars, yvars), yvars, xvars)
