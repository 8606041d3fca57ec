"""Sparse multivariate polynomials over exact rationals.

Everything downstream (omega calculus, covariants, generating series) is
built on the single class :class:`Poly`: a term map from dense exponent
vectors to exact rational coefficients, kept in canonical form (no zero
terms, coefficients in lowest terms).  Variable tables stay tiny (at most
a few dozen names) while degrees can climb past 20, so exponent vectors
are dense tuples and the term map is sparse.

All values are immutable after construction and every operation is a pure
function, so polynomials can be shared and evaluated concurrently without
coordination.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

try:  # exact rational scalar: gmpy2 when available, stdlib otherwise
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as Rational

__all__ = ["Rational", "VarTable", "Poly", "apply_operator", "falling"]


def falling(m: int, k: int) -> int:
    """Falling factorial m(m-1)...(m-k+1); equals 1 when k == 0."""
    out = 1
    for i in range(k):
        out *= m - i
    return out


class VarTable:
    """Ordered, immutable set of variable names.

    The position of a name is stable for the life of the table; exponent
    vectors of every :class:`Poly` over the table are indexed by it.
    """

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r}; table has {self.names}") from None

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __len__(self) -> int:
        return len(self.names)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, VarTable) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"VarTable({list(self.names)})"

    def extend(self, extra: Iterable[str]) -> "VarTable":
        """New table with `extra` names appended (must not collide)."""
        return VarTable(self.names + tuple(extra))


def _check_same_table(a: "Poly", b: "Poly") -> None:
    if a.table != b.table:
        raise ValueError(f"mismatched variable tables: {a.table} vs {b.table}")


def _mul_terms(t1: dict, t2: dict) -> dict:
    """Multiply two raw term maps sharing an exponent-vector length."""
    out: dict = {}
    get = out.get
    for e1, c1 in t1.items():
        for e2, c2 in t2.items():
            ne = tuple(map(int.__add__, e1, e2))
            c = get(ne)
            out[ne] = c1 * c2 if c is None else c + c1 * c2
    return {e: c for e, c in out.items() if c}


class Poly:
    """Multivariate polynomial with exact rational coefficients.

    Canonical form: no stored zero coefficients; equality is structural,
    so "expression is identically zero" is just ``p.is_zero()``.
    """

    __slots__ = ("table", "terms")

    def __init__(self, table: VarTable, terms: Mapping[tuple, object] | None = None):
        self.table = table
        clean: dict = {}
        if terms:
            width = len(table)
            for e, c in terms.items():
                if len(e) != width:
                    raise ValueError(f"exponent vector {e} does not match table width {width}")
                if c:
                    clean[tuple(e)] = c if isinstance(c, type(Rational(0))) else Rational(c)
        self.terms = clean

    # ---------------------------------------------------------------- constructors

    @classmethod
    def zero(cls, table: VarTable) -> "Poly":
        return cls(table, {})

    @classmethod
    def const(cls, table: VarTable, c) -> "Poly":
        return cls(table, {(0,) * len(table): Rational(c)})

    @classmethod
    def var(cls, table: VarTable, name: str) -> "Poly":
        e = [0] * len(table)
        e[table.index(name)] = 1
        return cls(table, {tuple(e): Rational(1)})

    @classmethod
    def monomial(cls, table: VarTable, exps: Mapping[str, int], coeff=1) -> "Poly":
        e = [0] * len(table)
        for name, k in exps.items():
            if k < 0:
                raise ValueError(f"negative exponent for {name}")
            e[table.index(name)] = k
        return cls(table, {tuple(e): Rational(coeff)})

    @classmethod
    def linear(cls, table: VarTable, coeffs: Mapping[str, object]) -> "Poly":
        """Linear combination sum(c * var) from a name -> coefficient map."""
        out = cls.zero(table)
        for name, c in coeffs.items():
            out = out + cls.monomial(table, {name: 1}, c)
        return out

    # ---------------------------------------------------------------- ring ops

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.table == other.table and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __neg__(self) -> "Poly":
        out = Poly.zero(self.table)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __add__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.const(self.table, other)
        _check_same_table(self, other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        out = Poly.zero(self.table)
        out.terms = terms
        return out

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.const(self.table, other)
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = Rational(other)
            out = Poly.zero(self.table)
            if c:
                out.terms = {e: c * v for e, v in self.terms.items()}
            return out
        _check_same_table(self, other)
        out = Poly.zero(self.table)
        out.terms = _mul_terms(self.terms, other.terms)
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {k}")
        result = Poly.const(self.table, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # ---------------------------------------------------------------- calculus

    def derive(self, name: str, order: int = 1) -> "Poly":
        """Exact formal partial derivative, applied `order` times."""
        if order < 0:
            raise ValueError("derivative order must be nonnegative")
        i = self.table.index(name)
        terms: dict = {}
        for e, c in self.terms.items():
            m = e[i]
            if m < order:
                continue
            ne = e[:i] + (m - order,) + e[i + 1:]
            nc = c * falling(m, order)
            s = terms.get(ne, 0) + nc
            if s:
                terms[ne] = s
            else:
                terms.pop(ne, None)
        out = Poly.zero(self.table)
        out.terms = terms
        return out

    def substitute(self, assignments: Mapping[str, "Poly"]) -> "Poly":
        """Simultaneous substitution of polynomials for variables; exact."""
        if not assignments:
            return self
        table = self.table
        repl: dict[int, Poly] = {}
        for name, p in assignments.items():
            i = table.index(name)
            if not isinstance(p, Poly):
                p = Poly.const(table, p)
            _check_same_table(self, p)
            repl[i] = p

        # fast path: every replacement is a bare variable with coefficient 1
        remap: dict[int, int] | None = {}
        for i, p in repl.items():
            if len(p.terms) == 1:
                (e, c), = p.terms.items()
                if c == 1 and sum(e) == 1:
                    remap[i] = e.index(1)
                    continue
            remap = None
            break
        if remap is not None:
            terms: dict = {}
            for e, c in self.terms.items():
                ne = list(e)
                for i, j in remap.items():
                    ne[i] = 0
                for i, j in remap.items():
                    ne[j] += e[i]
                ne = tuple(ne)
                s = terms.get(ne, 0) + c
                if s:
                    terms[ne] = s
                else:
                    terms.pop(ne, None)
            out = Poly.zero(table)
            out.terms = terms
            return out

        one = (0,) * len(table)
        power_cache: dict[tuple[int, int], dict] = {}

        def replacement_power(i: int, k: int) -> dict:
            key = (i, k)
            hit = power_cache.get(key)
            if hit is None:
                if k == 1:
                    hit = repl[i].terms
                else:
                    hit = _mul_terms(replacement_power(i, k - 1), repl[i].terms)
                power_cache[key] = hit
            return hit

        total: dict = {}
        for e, c in self.terms.items():
            base = list(e)
            for i in repl:
                base[i] = 0
            acc = {tuple(base): c}
            for i in repl:
                if e[i]:
                    acc = _mul_terms(acc, replacement_power(i, e[i]))
                    if not acc:
                        break
            for ne, nc in acc.items():
                s = total.get(ne, 0) + nc
                if s:
                    total[ne] = s
                else:
                    total.pop(ne, None)
        out = Poly.zero(table)
        out.terms = total
        return out

    def coefficient_of(self, exps: Mapping[str, int]) -> "Poly":
        """Polynomial in the remaining variables multiplying the given monomial.

        Matches the stated exponents exactly; an absent monomial gives 0.
        """
        idx = {self.table.index(name): k for name, k in exps.items()}
        terms: dict = {}
        for e, c in self.terms.items():
            if all(e[i] == k for i, k in idx.items()):
                ne = list(e)
                for i in idx:
                    ne[i] = 0
                terms[tuple(ne)] = c
        out = Poly.zero(self.table)
        out.terms = terms
        return out

    # ---------------------------------------------------------------- inspection

    def degree_in(self, names: Iterable[str]) -> int:
        """Largest total degree in the listed variables; 0 for the zero poly."""
        idx = [self.table.index(n) for n in names]
        return max((sum(e[i] for i in idx) for e in self.terms), default=0)

    def is_homogeneous_in(self, names: Iterable[str], degree: int | None = None) -> bool:
        """True when all terms share one total degree in `names` (0 counts)."""
        idx = [self.table.index(n) for n in names]
        degs = {sum(e[i] for i in idx) for e in self.terms}
        if not degs:
            return True
        if degree is None:
            return len(degs) == 1
        return degs == {degree}

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def constant_value(self) -> "Rational":
        """Value of a constant polynomial; error if any variable survives."""
        if not self.terms:
            return Rational(0)
        zero = (0,) * len(self.table)
        if set(self.terms) != {zero}:
            raise ValueError(f"polynomial is not constant: {self.to_text()}")
        return self.terms[zero]

    def coefficient_ratio(self, other: "Poly"):
        """Scalar q with self == q * other, or None if no such scalar exists."""
        _check_same_table(self, other)
        if other.is_zero():
            return Rational(0) if self.is_zero() else None
        if self.is_zero():
            return Rational(0)
        if set(self.terms) != set(other.terms):
            return None
        e0 = next(iter(other.terms))
        q = self.terms[e0] / other.terms[e0]
        for e, c in other.terms.items():
            if self.terms[e] != q * c:
                return None
        return q

    # ---------------------------------------------------------------- serialization

    def _sorted_terms(self) -> list[tuple[tuple, object]]:
        # graded-lex, largest first: reproducible output order
        return sorted(self.terms.items(), key=lambda ec: (sum(ec[0]), ec[0]), reverse=True)

    def to_text(self) -> str:
        """Render as `num/den * var^exp * ...` terms joined by ` + `."""
        if not self.terms:
            return "0"
        names = self.table.names
        chunks = []
        for e, c in self._sorted_terms():
            parts = [f"{c.numerator}/{c.denominator}"]
            parts += [f"{names[i]}^{k}" for i, k in enumerate(e) if k]
            chunks.append(" * ".join(parts))
        return " + ".join(chunks)

    def to_records(self) -> list[list]:
        """Machine form: [numerator, denominator, exponent vector] per term."""
        return [[int(c.numerator), int(c.denominator), list(e)] for e, c in self._sorted_terms()]

    def __repr__(self) -> str:
        return f"Poly({self.to_text()})"


def apply_operator(op: Poly, target: Poly, slots: Iterable[str]) -> Poly:
    """Apply a polynomial differential operator to `target`.

    Variables of `op` listed in `slots` act as derivative slots against the
    same-named variables of `target`; the remaining variables of `op`
    multiply into the result.  Linear in both arguments and exact.
    """
    _check_same_table(op, target)
    idx = [op.table.index(s) for s in slots]
    idxset = set(idx)
    width = len(op.table)
    out: dict = {}

    def emit(ne: tuple, c) -> None:
        s = out.get(ne, 0) + c
        if s:
            out[ne] = s
        else:
            out.pop(ne, None)

    # fast path: both sides homogeneous of equal degree in the slots, so a
    # nonzero derivative needs exponents to match exactly on every slot
    op_degs = {sum(e[i] for i in idx) for e in op.terms}
    tg_degs = {sum(e[i] for i in idx) for e in target.terms}
    if len(op_degs) == 1 and op_degs == tg_degs:
        buckets: dict[tuple, list] = {}
        for te, tc in target.terms.items():
            buckets.setdefault(tuple(te[i] for i in idx), []).append((te, tc))
        for oe, oc in op.terms.items():
            key = tuple(oe[i] for i in idx)
            bucket = buckets.get(key)
            if not bucket:
                continue
            f = 1
            for k in key:
                f *= falling(k, k)
            w = oc * f
            for te, tc in bucket:
                ne = tuple(
                    0 if i in idxset else te[i] + oe[i] for i in range(width)
                )
                emit(ne, w * tc)
        result = Poly.zero(op.table)
        result.terms = out
        return result

    for oe, oc in op.terms.items():
        for te, tc in target.terms.items():
            f = 1
            for i in idx:
                k = oe[i]
                if k:
                    m = te[i]
                    if m < k:
                        f = 0
                        break
                    f *= falling(m, k)
            if not f:
                continue
            ne = tuple(
                te[i] - oe[i] if i in idxset else te[i] + oe[i] for i in range(width)
            )
            emit(ne, oc * tc * f)
    result = Poly.zero(op.table)
    result.terms = out
    return result
